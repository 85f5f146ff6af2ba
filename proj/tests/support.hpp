#pragma once

// Generators and brute-force reference implementations shared by the tests.
// Everything here is written directly from the definitions and avoids the
// library's search code.

#include <satpat/containment.hpp>
#include <satpat/permutation.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace support {

using satpat::Entry;
using satpat::Matrix01;
using satpat::Pattern;
using satpat::PermutationMatrix;

inline std::vector<int> identity(int k) {
    std::vector<int> s(static_cast<std::size_t>(k));
    std::iota(s.begin(), s.end(), 1);
    return s;
}

inline void for_each_permutation(int k, const std::function<void(const std::vector<int> &)> &f) {
    auto s = identity(k);
    do
        f(s);
    while (std::next_permutation(s.begin(), s.end()));
}

inline std::vector<int> random_permutation(int k, std::mt19937 &rng) {
    auto s = identity(k);
    std::shuffle(s.begin(), s.end(), rng);
    return s;
}

inline Matrix01 random_matrix(int rows, int cols, double density, std::mt19937 &rng) {
    std::bernoulli_distribution coin(density);
    std::vector<Entry> es;
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c)
            if (coin(rng))
                es.push_back({r, c});
    return Matrix01(rows, cols, std::move(es));
}

/// Matrix whose row-major cells are the bits of `mask` (bit 0 = cell (1,1)).
inline Matrix01 matrix_from_mask(int rows, int cols, std::uint32_t mask) {
    std::vector<Entry> es;
    for (int i = 0; i < rows * cols; ++i)
        if (mask >> i & 1u)
            es.push_back({i / cols + 1, i % cols + 1});
    return Matrix01(rows, cols, std::move(es));
}

inline bool reduced(const Matrix01 &m) {
    for (int r = 1; r <= m.rows(); ++r)
        if (m.row_empty(r))
            return false;
    for (int c = 1; c <= m.cols(); ++c)
        if (m.col_empty(c))
            return false;
    return m.rows() > 0 && m.cols() > 0;
}

/// Every reduced pattern with at most `max_rows` x `max_cols` cells.
inline std::vector<Pattern> all_reduced_patterns(int max_rows, int max_cols) {
    std::vector<Pattern> out;
    for (int r = 1; r <= max_rows; ++r)
        for (int c = 1; c <= max_cols; ++c)
            for (std::uint32_t mask = 1; mask < (1u << (r * c)); ++mask) {
                auto m = matrix_from_mask(r, c, mask);
                if (reduced(m))
                    out.emplace_back(m);
            }
    return out;
}

inline Matrix01 with_cell(const Matrix01 &m, const Entry &e) {
    auto es = m.entries();
    es.push_back(e);
    return Matrix01(m.rows(), m.cols(), std::move(es));
}

/// Saturation straight from the definition, using the subset-enumeration
/// containment check.
inline bool naive_saturating(const Matrix01 &m, const Pattern &p) {
    if (satpat::contains_naive(m, p))
        return false;
    for (int r = 1; r <= m.rows(); ++r)
        for (int c = 1; c <= m.cols(); ++c)
            if (!m.at(r, c) && !satpat::contains_naive(with_cell(m, {r, c}), p))
                return false;
    return true;
}

/// Expandability straight from the definition.
inline bool naive_expandable_row(const Matrix01 &m, const Pattern &p, int row) {
    if (!m.row_empty(row))
        return false;
    for (int c = 1; c <= m.cols(); ++c)
        if (!satpat::contains(with_cell(m, {row, c}), p))
            return false;
    return true;
}

inline bool naive_expandable_col(const Matrix01 &m, const Pattern &p, int col) {
    if (!m.col_empty(col))
        return false;
    for (int r = 1; r <= m.rows(); ++r)
        if (!satpat::contains(with_cell(m, {r, col}), p))
            return false;
    return true;
}

/// Split conditions of the decomposability definition, tried at every j.
inline bool naive_decomposable(const std::vector<int> &sigma) {
    const int k = static_cast<int>(sigma.size());
    for (int j = 1; j < k; ++j) {
        const int top_max = *std::max_element(sigma.begin(), sigma.begin() + j);
        const int top_min = *std::min_element(sigma.begin(), sigma.begin() + j);
        if (top_max == j || top_min == k - j + 1)
            return true;
    }
    return false;
}

inline bool inversion(const Entry &x, const Entry &y) {
    return (x.row > y.row && x.col < y.col) || (y.row > x.row && y.col < x.col);
}

/// Every spanning oscillation of length >= 4, by enumerating all simple
/// paths of the inversion graph and filtering by the definition.
inline std::vector<std::vector<Entry>> all_spanning_oscillations(const PermutationMatrix &p) {
    const auto vs = p.entries();
    const auto ex = satpat::extremes(p);
    std::vector<std::vector<Entry>> out;
    std::vector<Entry> path;
    std::vector<char> used(vs.size(), 0);

    auto induced = [&] {
        for (std::size_t i = 0; i < path.size(); ++i)
            for (std::size_t j = i + 2; j < path.size(); ++j)
                if (inversion(path[i], path[j]))
                    return false;
        return true;
    };
    auto spanning = [&] {
        const auto m = path.size();
        auto pair_is = [](const Entry &a, const Entry &b, const Entry &u, const Entry &v) {
            return (a == u && b == v) || (a == v && b == u);
        };
        return m >= 4 && pair_is(path[0], path[1], ex.ell, ex.t) && pair_is(path[m - 2], path[m - 1], ex.b, ex.r);
    };
    std::function<void()> grow = [&] {
        if (!induced())
            return;
        if (spanning())
            out.push_back(path);
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (used[i] || !inversion(path.back(), vs[i]))
                continue;
            used[i] = 1;
            path.push_back(vs[i]);
            grow();
            path.pop_back();
            used[i] = 0;
        }
    };
    for (std::size_t i = 0; i < vs.size(); ++i) {
        used[i] = 1;
        path = {vs[i]};
        grow();
        used[i] = 0;
    }
    return out;
}

/// Shortest spanning oscillation, lexicographically first among those.
inline std::optional<std::vector<Entry>> min_spanning_oscillation(const PermutationMatrix &p) {
    auto all = all_spanning_oscillations(p);
    if (all.empty())
        return std::nullopt;
    return *std::min_element(all.begin(), all.end(), [](const auto &a, const auto &b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
}

/// Tall emptiness conditions at position i (1-based), straight from the
/// definition.
inline bool tall_at(const PermutationMatrix &p, const std::vector<Entry> &x, std::size_t i) {
    const Entry a = x[i - 1];
    const Entry b = x[i];
    for (const auto &y : p.entries()) {
        if (y.row > b.row && y.col < a.col)
            return false;
        if (y.row < a.row && y.col > b.col)
            return false;
    }
    return true;
}

inline bool tall_oscillation(const PermutationMatrix &p, const std::vector<Entry> &x) {
    const bool from_ell = x.front() == satpat::extremes(p).ell;
    for (std::size_t i = 2; i + 2 <= x.size(); ++i)
        if ((from_ell ? i % 2 == 0 : i % 2 == 1) && !tall_at(p, x, i))
            return false;
    return true;
}

} // namespace support
