#pragma once

#include <satpat/matrix.hpp>

#include <stdexcept>

namespace satpat {

class OracleError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct OracleResult {
    int weight = 0;
    Matrix01 witness_matrix;
};

/// Largest instance the brute force accepts: rows * cols <= 25.
inline constexpr int oracle_cell_limit = 25;

/// Minimum weight of an m x n matrix that avoids `p` and gains an occurrence
/// from every 0 -> 1 flip, with the lexicographically first such matrix
/// (row-major, 0 before 1). Throws OracleError above the guard.
OracleResult sat_bruteforce(const Pattern &p, int m, int n);

/// Maximum weight of an m x n matrix avoiding `p`, with one attaining matrix.
OracleResult ex_bruteforce(const Pattern &p, int m, int n);

} // namespace satpat
