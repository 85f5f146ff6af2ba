#include <satpat/containment.hpp>

#include <algorithm>
#include <limits>

namespace satpat {

using std::optional;
using std::vector;

HostIndex::HostIndex(int rows, int cols)
    : rows_(rows), cols_(cols), grid_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0),
      by_col_(static_cast<std::size_t>(cols) + 1) {}

HostIndex::HostIndex(const Matrix01 &m) : HostIndex(m.rows(), m.cols()) {
    for (const auto &e : m.entries())
        add(e);
}

void HostIndex::add(const Entry &e) {
    auto &cell = grid_[idx(e.row, e.col)];
    if (cell)
        return;
    cell = 1;
    auto &col = by_col_[static_cast<std::size_t>(e.col)];
    col.insert(std::lower_bound(col.begin(), col.end(), e.row), e.row);
    ++weight_;
}

void HostIndex::remove(const Entry &e) {
    auto &cell = grid_[idx(e.row, e.col)];
    if (!cell)
        return;
    cell = 0;
    auto &col = by_col_[static_cast<std::size_t>(e.col)];
    col.erase(std::lower_bound(col.begin(), col.end(), e.row));
    --weight_;
}

Matrix01 HostIndex::to_matrix() const {
    vector<Entry> es;
    es.reserve(weight_);
    for (int c = 1; c <= cols_; ++c)
        for (int r : column(c))
            es.push_back({r, c});
    return Matrix01(rows_, cols_, std::move(es));
}

// ---------------------------------------------------------------------------

Matcher::Matcher(const Pattern &p) : pattern_(p) {
    const auto &es = p.entries();
    vector<int> rows, cols;
    for (const auto &e : es) {
        rows.push_back(e.row);
        cols.push_back(e.col);
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    distinct_rows_ = static_cast<int>(rows.size());
    distinct_cols_ = static_cast<int>(cols.size());

    for (std::size_t i = 0; i < es.size(); ++i) {
        const auto rr = std::lower_bound(rows.begin(), rows.end(), es[i].row) - rows.begin();
        const auto cr = std::lower_bound(cols.begin(), cols.end(), es[i].col) - cols.begin();
        items_.push_back({es[i], static_cast<int>(rr), static_cast<int>(cr), static_cast<int>(i), true});
    }
    for (auto &it : items_)
        it.col_unique = std::count_if(es.begin(), es.end(), [&](const Entry &e) { return e.col == it.pos.col; }) == 1;
    std::sort(items_.begin(), items_.end(), [](const Item &a, const Item &b) {
        return a.pos.col != b.pos.col ? a.pos.col < b.pos.col : a.pos.row < b.pos.row;
    });
}

struct Matcher::Search {
    const Matcher &m;
    const HostIndex &host;
    vector<Entry> image;  // indexed like items_
    vector<char> fixed;
    // seen[t] marks rows already tried for item t in the current scan.
    vector<vector<char>> seen;

    Search(const Matcher &matcher, const HostIndex &h)
        : m(matcher), host(h), image(matcher.items_.size()), fixed(matcher.items_.size(), 0),
          seen(matcher.items_.size()) {}

    // Feasible host rectangle for item t given every assigned item.
    bool bounds(std::size_t t, int &rlo, int &rhi, int &clo, int &chi) const {
        const auto &it = m.items_[t];
        rlo = it.row_rank + 1;
        rhi = host.rows() - (m.distinct_rows_ - 1 - it.row_rank);
        clo = it.col_rank + 1;
        chi = host.cols() - (m.distinct_cols_ - 1 - it.col_rank);
        for (std::size_t a = 0; a < m.items_.size(); ++a) {
            if (!fixed[a] || a == t)
                continue;
            const auto &o = m.items_[a];
            const auto &h = image[a];
            const int dr = it.row_rank - o.row_rank;
            if (dr == 0) {
                rlo = std::max(rlo, h.row);
                rhi = std::min(rhi, h.row);
            } else if (dr > 0) {
                rlo = std::max(rlo, h.row + dr);
            } else {
                rhi = std::min(rhi, h.row + dr);
            }
            const int dc = it.col_rank - o.col_rank;
            if (dc == 0) {
                clo = std::max(clo, h.col);
                chi = std::min(chi, h.col);
            } else if (dc > 0) {
                clo = std::max(clo, h.col + dc);
            } else {
                chi = std::min(chi, h.col + dc);
            }
            if (rlo > rhi || clo > chi)
                return false;
        }
        return rlo <= rhi && clo <= chi;
    }

    bool run(std::size_t t) {
        while (t < m.items_.size() && fixed[t])
            ++t;
        if (t == m.items_.size())
            return true;
        int rlo, rhi, clo, chi;
        if (!bounds(t, rlo, rhi, clo, chi))
            return false;
        fixed[t] = 1;
        // When no other item shares this item's column, a candidate with a
        // 1-entry further left in the same row is at least as good, so that
        // candidate has already failed.
        const bool dominated_skip = m.items_[t].col_unique;
        auto &marks = seen[t];
        if (dominated_skip)
            marks.assign(static_cast<std::size_t>(host.rows()) + 1, 0);
        for (int c = clo; c <= chi; ++c) {
            const auto &col = host.column(c);
            for (auto r = std::lower_bound(col.begin(), col.end(), rlo); r != col.end() && *r <= rhi; ++r) {
                if (dominated_skip) {
                    auto &mark = marks[static_cast<std::size_t>(*r)];
                    if (mark)
                        continue;
                    mark = 1;
                }
                image[t] = {*r, c};
                if (run(t + 1))
                    return true;
            }
        }
        fixed[t] = 0;
        return false;
    }

    Embedding result() const {
        Embedding e;
        e.image.resize(m.items_.size());
        for (std::size_t t = 0; t < m.items_.size(); ++t)
            e.image[static_cast<std::size_t>(m.items_[t].original)] = image[t];
        return e;
    }
};

optional<Embedding> Matcher::find(const HostIndex &host) const {
    if (host.rows() < distinct_rows_ || host.cols() < distinct_cols_ || host.weight() < items_.size())
        return std::nullopt;
    Search s(*this, host);
    if (s.run(0))
        return s.result();
    return std::nullopt;
}

optional<Embedding> Matcher::find_through(const HostIndex &host, const Entry &cell) const {
    if (host.rows() < distinct_rows_ || host.cols() < distinct_cols_ || host.weight() + 1 < items_.size())
        return std::nullopt;
    Search s(*this, host);
    for (std::size_t a = 0; a < items_.size(); ++a) {
        int rlo, rhi, clo, chi;
        if (!s.bounds(a, rlo, rhi, clo, chi))
            continue;
        if (cell.row < rlo || cell.row > rhi || cell.col < clo || cell.col > chi)
            continue;
        s.fixed[a] = 1;
        s.image[a] = cell;
        if (s.run(0))
            return s.result();
        s.fixed[a] = 0;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

optional<Embedding> find_embedding(const Matrix01 &host, const Pattern &p) {
    return Matcher(p).find(HostIndex(host));
}

bool contains(const Matrix01 &host, const Pattern &p) { return find_embedding(host, p).has_value(); }

bool is_embedding(const Matrix01 &host, const Pattern &p, const Embedding &e) {
    const auto &es = p.entries();
    if (e.image.size() != es.size())
        return false;
    auto sign = [](int a, int b) { return (a > b) - (a < b); };
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (!host.at(e.image[i]))
            return false;
        for (std::size_t j = 0; j < es.size(); ++j) {
            if (sign(es[i].row, es[j].row) != sign(e.image[i].row, e.image[j].row))
                return false;
            if (sign(es[i].col, es[j].col) != sign(e.image[i].col, e.image[j].col))
                return false;
        }
    }
    return true;
}

namespace {

// Calls f(selection) for each increasing k-subset of {1..n}; stops when f
// returns true.
template <typename F> bool for_each_subset(int n, int k, F &&f) {
    if (k > n)
        return false;
    vector<int> sel(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        sel[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        if (f(sel))
            return true;
        int i = k - 1;
        while (i >= 0 && sel[static_cast<std::size_t>(i)] == n - k + i + 1)
            --i;
        if (i < 0)
            return false;
        ++sel[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            sel[static_cast<std::size_t>(j)] = sel[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace

bool contains_naive(const Matrix01 &host, const Pattern &p) {
    const auto &pm = p.matrix();
    return for_each_subset(host.rows(), pm.rows(), [&](const vector<int> &rs) {
        return for_each_subset(host.cols(), pm.cols(), [&](const vector<int> &cs) {
            for (int i = 1; i <= pm.rows(); ++i)
                for (int j = 1; j <= pm.cols(); ++j)
                    if (pm.at(i, j) &&
                        !host.at(rs[static_cast<std::size_t>(i - 1)], cs[static_cast<std::size_t>(j - 1)]))
                        return false;
            return true;
        });
    });
}

} // namespace satpat
