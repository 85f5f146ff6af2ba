#include <satpat/witness.hpp>

#include <satpat/verifier.hpp>

#include <algorithm>

namespace satpat {

using std::span;
using std::vector;

namespace {

[[noreturn]] void fail(const std::string &what) { throw WitnessError(what); }

void require_certified(const WitnessCertificate &c, const char *builder) {
    auto verdict = certify(c);
    if (!verdict)
        fail(std::string(builder) + " self-check failed: " + verdict.diagnostic);
}

void require_expandable(const WitnessCertificate &c, const char *builder) {
    for (int r : c.expandable_rows)
        if (!check_expandable(c.matrix, c.pattern, Axis::row, r))
            fail(std::string(builder) + " self-check failed: row " + std::to_string(r) + " is not expandable");
}

// Entries of `m` shifted by (dr, dc) and appended to `out`.
void blit(vector<Entry> &out, const Matrix01 &m, int dr, int dc) {
    for (const auto &e : m.entries())
        out.push_back({e.row + dr, e.col + dc});
}

Role swap_axes(Role r) {
    if (r == Role::vertical_witness)
        return Role::horizontal_witness;
    if (r == Role::horizontal_witness)
        return Role::vertical_witness;
    return r;
}

} // namespace

WitnessCertificate transform(const WitnessCertificate &c, Transform t) {
    const int R = c.matrix.rows();
    const int C = c.matrix.cols();
    vector<int> rows, cols;
    auto flip = [](const vector<int> &xs, int n) {
        vector<int> out;
        for (int x : xs)
            out.push_back(n + 1 - x);
        std::sort(out.begin(), out.end());
        return out;
    };
    Role role = c.role;
    switch (t) {
    case Transform::rev:
        rows = c.expandable_rows;
        cols = flip(c.expandable_cols, C);
        break;
    case Transform::rot2:
        rows = flip(c.expandable_rows, R);
        cols = flip(c.expandable_cols, C);
        break;
    case Transform::rot:
        rows = c.expandable_cols;
        cols = flip(c.expandable_rows, R);
        role = swap_axes(role);
        break;
    case Transform::trans:
        rows = c.expandable_cols;
        cols = c.expandable_rows;
        role = swap_axes(role);
        break;
    }
    return {transform(c.matrix, t), transform(c.pattern, t), role, std::move(rows), std::move(cols)};
}

// ---------------------------------------------------------------------------

WitnessCertificate build_S(const Pattern &p) {
    const auto &m = p.matrix();
    const int k1 = m.rows();
    const int k2 = m.cols();
    if (k2 < 2)
        fail("build_S: pattern needs at least two columns");
    vector<Entry> first, last;
    for (const auto &e : m.entries()) {
        if (e.col == 1)
            first.push_back(e);
        if (e.col == k2)
            last.push_back(e);
    }
    if (first.size() != 1 || last.size() != 1)
        fail("build_S: leftmost and rightmost columns must each hold exactly one 1-entry");
    const Entry ell = first.front();
    const Entry r = last.front();
    if (!ell.above(r))
        fail("build_S: the leftmost entry must lie above the rightmost entry");

    const int gap = r.row - ell.row;
    const auto left = split_at_entry(m, r, Side::left);
    const auto right = split_at_entry(m, ell, Side::right);
    vector<Entry> es;
    blit(es, left, 0, 0);
    blit(es, right, gap, left.cols());
    WitnessCertificate c{Matrix01(k1 + gap, left.cols() + right.cols(), std::move(es)), p, Role::vertical_witness,
                         {r.row}, {}};
    require_certified(c, "build_S");
    return c;
}

WitnessCertificate build_S_q(const PermutationMatrix &p, const Entry &q) {
    const int k = p.size();
    if (!p.has(q))
        fail("build_S_q: q is not a 1-entry");
    const auto ex = extremes(p);
    if (!q.above(ex.ell) || !ex.ell.above(ex.r))
        fail("build_S_q: needs q above the leftmost entry and the leftmost entry above the rightmost");

    const auto m = p.matrix();
    const int e = ex.r.row;  // common empty row: the largest of i_q, i_l, i_r
    const auto lq = split_at_entry(m, q, Side::left);
    const auto rl = split_at_entry(m, ex.ell, Side::right);
    const auto lr = split_at_entry(m, ex.r, Side::left);
    const auto rq = split_at_entry(m, q, Side::right);

    const int primed_shift = e - q.row;
    const int ell_copy_row = ex.ell.row + primed_shift;

    vector<Entry> es;
    int col = 0;
    auto add_primed = [&](const Matrix01 &block) {
        for (const auto &x : block.entries()) {
            Entry y{x.row + primed_shift, x.col + col};
            if (y.row > ell_copy_row)
                y.row += k;
            es.push_back(y);
        }
        col += block.cols();
    };
    add_primed(lq);
    blit(es, rl, e - ex.ell.row, col);
    col += rl.cols();
    blit(es, lr, 0, col);
    col += lr.cols();
    add_primed(rq);

    int rows = e;
    for (const auto &x : es)
        rows = std::max(rows, x.row);
    WitnessCertificate c{Matrix01(rows, col, std::move(es)), p.pattern(), Role::vertical_witness, {e}, {}};
    require_expandable(c, "build_S_q");
    return c;
}

WitnessCertificate build_S_X(const PermutationMatrix &p, span<const Entry> x) {
    const int k = p.size();
    const int m = static_cast<int>(x.size());
    if (m < 6 || m % 2 != 0 || m > k)
        fail("build_S_X: traversal length must be even with 6 <= m <= k");
    if (!validate(p, x, SequenceKind::tall_traversal))
        fail("build_S_X: not a tall traversal");
    if (is_extendable(p, x))
        fail("build_S_X: traversal is extendable");

    const auto pm = p.matrix();
    auto xs = [&](int s) { return x[static_cast<std::size_t>(s - 1)]; };

    // Block order: L3 R1 L4 R3 L5 R4 ... L_{m-2} R_{m-3} L_m R_{m-2}.
    struct Block {
        int s;
        Side side;
    };
    vector<Block> order{{3, Side::left}, {1, Side::right}};
    for (int s = 4; s <= m - 2; ++s) {
        order.push_back({s, Side::left});
        order.push_back({s - 1, Side::right});
    }
    order.push_back({m, Side::left});
    order.push_back({m - 2, Side::right});

    const int band_shift = (m - 4) * k;
    const int expandable = (m - 3) * k;
    auto lifted = [&](int s) { return (s >= 5 && s <= m - 2) || s == m; };
    auto lowered = [&](int s) { return s == 1 || (s >= 3 && s <= m - 4); };

    vector<Entry> es;
    int col = 0;
    for (const auto &blk : order) {
        const Entry xsv = xs(blk.s);
        const auto part = split_at_entry(pm, xsv, blk.side);
        for (const auto &y : part.entries()) {
            // Row k of the band is the empty row of every block.
            Entry z{y.row + (k - xsv.row) + band_shift, y.col + col};
            if (lifted(blk.s) && z.row < expandable - 1)
                z.row -= (blk.s - 4) * k;
            if (lowered(blk.s) && z.row > expandable + 1)
                z.row += (m - blk.s - 3) * k;
            es.push_back(z);
        }
        col += part.cols();
    }

    const int rows = (2 * m - 6) * k + 1;
    const int cols = (m - 2) * k;
    // The blocks use (m-2)(k-1) columns; the remaining empty columns go on
    // the right to match the nominal width.
    if (col > cols)
        fail("build_S_X: blocks overflow the canvas");
    WitnessCertificate c{Matrix01(rows, cols, std::move(es)), p.pattern(), Role::vertical_witness, {expandable}, {}};
    require_certified(c, "build_S_X");
    return c;
}

// ---------------------------------------------------------------------------

namespace {

WitnessCertificate build_S_oriented(const Pattern &p) {
    const auto &m = p.matrix();
    Entry ell{}, r{};
    for (const auto &e : m.entries()) {
        if (e.col == 1)
            ell = e;
        if (e.col == m.cols())
            r = e;
    }
    if (ell.above(r))
        return build_S(p);
    return transform(build_S(transform(p, Transform::rev)), Transform::rev);
}

WitnessCertificate from_spanning_oscillation(const PermutationMatrix &p, const EntrySequence &osc) {
    const auto ex = extremes(p);
    const std::size_t m = osc.size();
    if (m == 4)
        return build_S_oriented(p.pattern());

    if (osc.seq.front() == ex.t) {
        const auto wide = straighten(p, osc.seq, Orientation::wide);
        return build_S_q(p, wide.at(3));
    }

    if (m % 2 == 1) {
        // Ends with b; the 180-degree turn starts with t.
        const auto p2 = transform(p, Transform::rot2);
        auto seq2 = transform_sequence(osc.seq, p.size(), Transform::rot2);
        std::reverse(seq2.begin(), seq2.end());
        const auto wide = straighten(p2, seq2, Orientation::wide);
        return transform(build_S_q(p2, wide.at(3)), Transform::rot2);
    }

    const auto tall = straighten(p, osc.seq, Orientation::tall);
    const auto maximal = extend_to_nonextendable(p, tall.seq);
    return build_S_X(p, maximal.seq);
}

WitnessCertificate vertical_witness_unchecked(const Pattern &p) {
    if (auto perm = PermutationMatrix::try_from_matrix(p.matrix())) {
        if (decompose_kind(*perm) != DecomposeKind::indecomposable)
            fail("vertical_witness: the permutation is decomposable");
        if (perm->size() == 1)
            return {Matrix01(1, 1), p, Role::vertical_witness, {1}, {}};
        if (auto osc = find_min_spanning_oscillation(*perm))
            return from_spanning_oscillation(*perm, *osc);
        const auto rp = transform(*perm, Transform::rev);
        if (auto osc = find_min_spanning_oscillation(rp))
            return transform(from_spanning_oscillation(rp, *osc), Transform::rev);
        fail("vertical_witness: no spanning oscillation in the pattern or its reverse");
    }
    if (detect_four_trav_class(p))
        return build_S_oriented(p);
    fail("vertical_witness: pattern is neither a permutation matrix nor in the four-traversal class");
}

} // namespace

WitnessCertificate vertical_witness(const Pattern &p) {
    auto c = vertical_witness_unchecked(p);
    c.role = Role::vertical_witness;
    require_certified(c, "vertical_witness");
    return c;
}

WitnessCertificate horizontal_witness(const Pattern &p) {
    return transform(vertical_witness(transform(p, Transform::trans)), Transform::trans);
}

WitnessCertificate full_witness(const Pattern &p) {
    const auto &m = p.matrix();
    int last_row = 0, last_col = 0;
    for (const auto &e : m.entries()) {
        last_row += e.row == m.rows();
        last_col += e.col == m.cols();
    }
    if (last_row != 1 || last_col != 1)
        fail("full_witness: the last row and the last column must each hold exactly one 1-entry");

    const auto wv = vertical_witness(p);
    const auto wh = horizontal_witness(p);
    const int m0 = wh.matrix.rows();
    const int n1 = wh.matrix.cols();
    const int m1 = wv.matrix.rows();
    const int n0 = wv.matrix.cols();

    vector<Entry> es;
    blit(es, wh.matrix, 0, n0);
    blit(es, wv.matrix, m0, 0);
    WitnessCertificate c{Matrix01(m0 + m1, n0 + n1, std::move(es)), p, Role::witness,
                         {m0 + wv.expandable_rows.front()}, {n0 + wh.expandable_cols.front()}};
    require_certified(c, "full_witness");
    return c;
}

WitnessCertificate explicit_witness(const WitnessCertificate &seed) {
    if (!certify(seed.matrix, seed.pattern, Role::witness))
        fail("explicit_witness: seed is not a witness");
    const Matcher matcher(seed.pattern);
    HostIndex host(seed.matrix);
    for (int r = 1; r <= host.rows(); ++r)
        for (int c = 1; c <= host.cols(); ++c)
            if (!host.at(r, c) && !matcher.creates_occurrence(host, {r, c}))
                host.add({r, c});
    WitnessCertificate out{host.to_matrix(), seed.pattern, Role::explicit_witness, {}, {}};
    for (int r : seed.expandable_rows)
        if (out.matrix.row_empty(r))
            out.expandable_rows.push_back(r);
    for (int c : seed.expandable_cols)
        if (out.matrix.col_empty(c))
            out.expandable_cols.push_back(c);
    require_certified(out, "explicit_witness");
    return out;
}

WitnessCertificate explicit_witness(const Pattern &p, const Matrix01 &seed) {
    WitnessCertificate c{seed, p, Role::witness, expandable_lines(seed, p, Axis::row),
                         expandable_lines(seed, p, Axis::col)};
    if (c.expandable_rows.empty() || c.expandable_cols.empty())
        fail("explicit_witness: seed is not a witness");
    return explicit_witness(c);
}

WitnessCertificate explicit_witness(const Pattern &p) { return explicit_witness(full_witness(p)); }

WitnessCertificate pad_witness(const WitnessCertificate &c, int rows, int cols) {
    const int add_rows = rows - c.matrix.rows();
    const int add_cols = cols - c.matrix.cols();
    if (add_rows < 0 || add_cols < 0)
        fail("pad_witness: target is smaller than the witness");
    if (add_rows > 0 && c.expandable_rows.empty())
        fail("pad_witness: no expandable row to repeat");
    if (add_cols > 0 && c.expandable_cols.empty())
        fail("pad_witness: no expandable column to repeat");

    auto grow = [](const vector<int> &lines, int at, int count) {
        vector<int> out;
        for (int x : lines)
            out.push_back(x >= at ? x + count : x);
        for (int i = 0; i < count; ++i)
            out.push_back(at + i);
        std::sort(out.begin(), out.end());
        return out;
    };

    WitnessCertificate out = c;
    if (add_rows > 0) {
        const int at = c.expandable_rows.front();
        out.matrix = out.matrix.insert_empty_rows(at, add_rows);
        out.expandable_rows = grow(c.expandable_rows, at, add_rows);
    }
    if (add_cols > 0) {
        const int at = c.expandable_cols.front();
        out.matrix = out.matrix.insert_empty_cols(at, add_cols);
        out.expandable_cols = grow(c.expandable_cols, at, add_cols);
    }
    return out;
}

} // namespace satpat
