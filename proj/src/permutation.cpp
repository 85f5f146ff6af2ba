#include <satpat/permutation.hpp>

#include <algorithm>

namespace satpat {

using std::optional;
using std::vector;

PermutationMatrix::PermutationMatrix(vector<int> sigma) : sigma_(std::move(sigma)) {
    const int k = size();
    if (k == 0)
        throw MatrixError("empty permutation");
    inverse_.assign(static_cast<std::size_t>(k), 0);
    for (int r = 1; r <= k; ++r) {
        const int c = sigma_[static_cast<std::size_t>(r - 1)];
        if (c < 1 || c > k || inverse_[static_cast<std::size_t>(c - 1)] != 0)
            throw MatrixError("values do not form a permutation of 1.." + std::to_string(k));
        inverse_[static_cast<std::size_t>(c - 1)] = r;
    }
}

optional<PermutationMatrix> PermutationMatrix::try_from_matrix(const Matrix01 &m) {
    if (m.rows() != m.cols() || m.rows() == 0 || m.weight() != static_cast<std::size_t>(m.rows()))
        return std::nullopt;
    vector<int> sigma(static_cast<std::size_t>(m.rows()), 0);
    vector<char> col_used(static_cast<std::size_t>(m.cols()) + 1, 0);
    for (const auto &e : m.entries()) {
        auto &slot = sigma[static_cast<std::size_t>(e.row - 1)];
        if (slot != 0 || col_used[static_cast<std::size_t>(e.col)])
            return std::nullopt;
        slot = e.col;
        col_used[static_cast<std::size_t>(e.col)] = 1;
    }
    return PermutationMatrix(std::move(sigma));
}

PermutationMatrix PermutationMatrix::from_matrix(const Matrix01 &m) {
    auto p = try_from_matrix(m);
    if (!p)
        throw MatrixError("not a permutation matrix");
    return *p;
}

vector<Entry> PermutationMatrix::entries() const {
    vector<Entry> es;
    es.reserve(sigma_.size());
    for (int r = 1; r <= size(); ++r)
        es.push_back(entry_in_row(r));
    return es;
}

PermutationMatrix transform(const PermutationMatrix &p, Transform t) {
    return PermutationMatrix::from_matrix(transform(p.matrix(), t));
}

Extremes extremes(const PermutationMatrix &p) {
    const int k = p.size();
    return {p.entry_in_col(1), p.entry_in_row(1), p.entry_in_row(k), p.entry_in_col(k)};
}

std::string_view to_string(DecomposeKind k) {
    switch (k) {
    case DecomposeKind::sum_decomposable:
        return "sum-decomposable";
    case DecomposeKind::skew_decomposable:
        return "skew-decomposable";
    case DecomposeKind::indecomposable:
        return "indecomposable";
    }
    return "?";
}

DecomposeKind decompose_kind(const PermutationMatrix &p) {
    const int k = p.size();
    // Prefix maximum/minimum of sigma(1..j) decide both split conditions.
    int hi = 0;
    int lo = k + 1;
    bool skew = false;
    for (int j = 1; j < k; ++j) {
        hi = std::max(hi, p.col_of(j));
        lo = std::min(lo, p.col_of(j));
        if (hi == j)
            return DecomposeKind::sum_decomposable;
        if (lo == k - j + 1)
            skew = true;
    }
    return skew ? DecomposeKind::skew_decomposable : DecomposeKind::indecomposable;
}

DecomposeKind decompose_kind(const Matrix01 &m) {
    // Prefix counts of ones over the top-left rectangle give each block weight.
    const int R = m.rows();
    const int C = m.cols();
    vector<int> pre(static_cast<std::size_t>((R + 1) * (C + 1)), 0);
    auto at = [&](int r, int c) -> int & { return pre[static_cast<std::size_t>(r * (C + 1) + c)]; };
    for (int r = 1; r <= R; ++r)
        for (int c = 1; c <= C; ++c)
            at(r, c) = at(r - 1, c) + at(r, c - 1) - at(r - 1, c - 1) + (m.at(r, c) ? 1 : 0);
    auto block = [&](int r0, int r1, int c0, int c1) {  // rows (r0, r1], cols (c0, c1]
        return at(r1, c1) - at(r0, c1) - at(r1, c0) + at(r0, c0);
    };
    bool skew = false;
    for (int i = 1; i < R; ++i) {
        for (int j = 1; j < C; ++j) {
            const int tl = block(0, i, 0, j);
            const int tr = block(0, i, j, C);
            const int bl = block(i, R, 0, j);
            const int br = block(i, R, j, C);
            if (tr == 0 && bl == 0 && tl > 0 && br > 0)
                return DecomposeKind::sum_decomposable;
            if (tl == 0 && br == 0 && tr > 0 && bl > 0)
                skew = true;
        }
    }
    return skew ? DecomposeKind::skew_decomposable : DecomposeKind::indecomposable;
}

PermGraph::PermGraph(const PermutationMatrix &p) : vertices_(p.entries()) {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        for (std::size_t j = i + 1; j < vertices_.size(); ++j)
            if (adjacent(vertices_[i], vertices_[j]))
                edges_.emplace_back(vertices_[i], vertices_[j]);
}

vector<Entry> PermGraph::neighbours(const Entry &x) const {
    vector<Entry> out;
    for (const auto &v : vertices_)
        if (adjacent(x, v))
            out.push_back(v);
    return out;
}

PermGraph perm_graph(const PermutationMatrix &p) { return PermGraph(p); }

optional<FourTravWitness> detect_four_trav_class(const Pattern &p) {
    const auto &m = p.matrix();
    vector<int> row_count(static_cast<std::size_t>(m.rows()) + 1, 0);
    vector<int> col_count(static_cast<std::size_t>(m.cols()) + 1, 0);
    for (const auto &e : m.entries()) {
        ++row_count[static_cast<std::size_t>(e.row)];
        ++col_count[static_cast<std::size_t>(e.col)];
    }
    vector<Entry> cand;
    for (const auto &e : m.entries()) {
        const bool isolated =
            row_count[static_cast<std::size_t>(e.row)] == 1 && col_count[static_cast<std::size_t>(e.col)] == 1;
        const bool boundary = e.row == 1 || e.row == m.rows() || e.col == 1 || e.col == m.cols();
        if (isolated && boundary)
            cand.push_back(e);
    }
    const std::size_t n = cand.size();
    // Candidates are in (row, col) order, so each quadruple is already sorted
    // top to bottom; column ranks then spell the relative permutation.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d) {
                    std::array<Entry, 4> q{cand[a], cand[b], cand[c], cand[d]};
                    std::array<int, 4> rank{};
                    for (int i = 0; i < 4; ++i)
                        for (int j = 0; j < 4; ++j)
                            if (q[static_cast<std::size_t>(j)].col <= q[static_cast<std::size_t>(i)].col)
                                ++rank[static_cast<std::size_t>(i)];
                    if (rank == std::array<int, 4>{2, 4, 1, 3})
                        return FourTravWitness{q, FourTravVariant::A};
                    if (rank == std::array<int, 4>{3, 1, 4, 2})
                        return FourTravWitness{q, FourTravVariant::B};
                }
    return std::nullopt;
}

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::bounded:
        return "Bounded";
    case Verdict::linear:
        return "Linear";
    case Verdict::unknown:
        return "Unknown";
    }
    return "?";
}

std::string_view to_string(ClassReason r) {
    switch (r) {
    case ClassReason::decomposable:
        return "decomposable";
    case ClassReason::indecomposable_permutation:
        return "indecomposable permutation";
    case ClassReason::four_trav_class:
        return "four-traversal class";
    case ClassReason::insufficient_criteria:
        return "insufficient criteria";
    }
    return "?";
}

Classification classify(const Pattern &p) {
    if (auto perm = PermutationMatrix::try_from_matrix(p.matrix())) {
        if (decompose_kind(*perm) != DecomposeKind::indecomposable)
            return {Verdict::linear, ClassReason::decomposable};
        return {Verdict::bounded, ClassReason::indecomposable_permutation};
    }
    if (decompose_kind(p.matrix()) != DecomposeKind::indecomposable)
        return {Verdict::linear, ClassReason::decomposable};
    if (detect_four_trav_class(p))
        return {Verdict::bounded, ClassReason::four_trav_class};
    return {Verdict::unknown, ClassReason::insufficient_criteria};
}

} // namespace satpat
