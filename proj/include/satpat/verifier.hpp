#pragma once

#include <satpat/certificate.hpp>
#include <satpat/containment.hpp>

#include <string>
#include <vector>

namespace satpat {

enum class Axis { row, col };

/// The line is empty and adding a 1 at any of its cells makes `m` contain `p`.
/// Throws MatrixError when `index` is out of range.
bool check_expandable(const Matrix01 &m, const Pattern &p, Axis axis, int index);

/// Every expandable line along `axis`, ascending. Empty when `m` already
/// contains `p`.
std::vector<int> expandable_lines(const Matrix01 &m, const Pattern &p, Axis axis);

struct CertifyResult {
    bool ok = false;
    std::string diagnostic;  // empty when ok; otherwise the first failure in row-major order

    explicit operator bool() const { return ok; }
};

/// Decides the claim from scratch; listed expandable lines are not trusted.
CertifyResult certify(const Matrix01 &m, const Pattern &p, Role claim);

/// Checks the claimed role and additionally that every listed expandable
/// row and column really is expandable.
CertifyResult certify(const WitnessCertificate &c);

} // namespace satpat
