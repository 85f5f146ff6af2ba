#include <satpat/matrix.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace satpat {

using std::string;
using std::string_view;
using std::vector;

std::ostream &operator<<(std::ostream &os, const Entry &e) {
    return os << '(' << e.row << ',' << e.col << ')';
}

namespace {

void check_dimensions(int rows, int cols) {
    if (rows < 0 || cols < 0 || rows > max_dimension || cols > max_dimension)
        throw MatrixError("matrix dimensions " + std::to_string(rows) + "x" + std::to_string(cols) +
                          " out of range");
}

} // namespace

Matrix01::Matrix01(int rows, int cols) : rows_(rows), cols_(cols) {
    check_dimensions(rows, cols);
    grid_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

Matrix01::Matrix01(int rows, int cols, vector<Entry> entries) : Matrix01(rows, cols) {
    for (const auto &e : entries) {
        if (e.row < 1 || e.row > rows || e.col < 1 || e.col > cols) {
            std::ostringstream msg;
            msg << "entry " << e << " outside " << rows << "x" << cols << " matrix";
            throw MatrixError(msg.str());
        }
    }
    std::sort(entries.begin(), entries.end());
    entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
    for (const auto &e : entries)
        grid_[index(e.row, e.col)] = 1;
    entries_ = std::move(entries);
}

Matrix01 Matrix01::from_permutation(std::span<const int> sigma) {
    const int k = static_cast<int>(sigma.size());
    if (k == 0)
        throw MatrixError("empty permutation");
    vector<char> seen(static_cast<std::size_t>(k) + 1, 0);
    vector<Entry> es;
    es.reserve(sigma.size());
    for (int i = 0; i < k; ++i) {
        const int c = sigma[static_cast<std::size_t>(i)];
        if (c < 1 || c > k || seen[static_cast<std::size_t>(c)])
            throw MatrixError("values do not form a permutation of 1.." + std::to_string(k));
        seen[static_cast<std::size_t>(c)] = 1;
        es.push_back({i + 1, c});
    }
    return Matrix01(k, k, std::move(es));
}

bool Matrix01::at(int row, int col) const {
    if (row < 1 || row > rows_ || col < 1 || col > cols_)
        return false;
    return grid_[index(row, col)] != 0;
}

bool Matrix01::row_empty(int row) const {
    for (int c = 1; c <= cols_; ++c)
        if (at(row, c))
            return false;
    return true;
}

bool Matrix01::col_empty(int col) const {
    for (int r = 1; r <= rows_; ++r)
        if (at(r, col))
            return false;
    return true;
}

vector<int> Matrix01::empty_rows() const {
    vector<char> used(static_cast<std::size_t>(rows_) + 1, 0);
    for (const auto &e : entries_)
        used[static_cast<std::size_t>(e.row)] = 1;
    vector<int> out;
    for (int r = 1; r <= rows_; ++r)
        if (!used[static_cast<std::size_t>(r)])
            out.push_back(r);
    return out;
}

vector<int> Matrix01::empty_cols() const {
    vector<char> used(static_cast<std::size_t>(cols_) + 1, 0);
    for (const auto &e : entries_)
        used[static_cast<std::size_t>(e.col)] = 1;
    vector<int> out;
    for (int c = 1; c <= cols_; ++c)
        if (!used[static_cast<std::size_t>(c)])
            out.push_back(c);
    return out;
}

Matrix01 Matrix01::with(const Entry &e) const {
    auto es = entries_;
    es.push_back(e);
    return Matrix01(rows_, cols_, std::move(es));
}

Matrix01 Matrix01::insert_empty_rows(int before_row, int count) const {
    if (count < 0 || before_row < 1 || before_row > rows_ + 1)
        throw MatrixError("invalid row insertion");
    vector<Entry> es;
    es.reserve(entries_.size());
    for (auto e : entries_) {
        if (e.row >= before_row)
            e.row += count;
        es.push_back(e);
    }
    return Matrix01(rows_ + count, cols_, std::move(es));
}

Matrix01 Matrix01::insert_empty_cols(int before_col, int count) const {
    if (count < 0 || before_col < 1 || before_col > cols_ + 1)
        throw MatrixError("invalid column insertion");
    vector<Entry> es;
    es.reserve(entries_.size());
    for (auto e : entries_) {
        if (e.col >= before_col)
            e.col += count;
        es.push_back(e);
    }
    return Matrix01(rows_, cols_ + count, std::move(es));
}

bool is_reduced(const Matrix01 &m) {
    return !m.empty() && m.empty_rows().empty() && m.empty_cols().empty();
}

Pattern::Pattern(Matrix01 m) : base_(std::move(m)) {
    if (base_.empty())
        throw MatrixError("a pattern needs at least one 1-entry");
    if (!base_.empty_rows().empty() || !base_.empty_cols().empty())
        throw MatrixError("pattern has an empty row or column");
}

Pattern Pattern::permutation(std::span<const int> sigma) {
    return Pattern(Matrix01::from_permutation(sigma));
}

Pattern Pattern::permutation(std::initializer_list<int> sigma) {
    return permutation(std::span<const int>(sigma.begin(), sigma.size()));
}

// ---------------------------------------------------------------------------
// Text I/O

namespace {

string_view trim(string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

vector<string_view> split_lines(string_view text) {
    vector<string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto nl = text.find('\n', start);
        if (nl == string_view::npos) {
            if (start < text.size())
                lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

vector<int> parse_ints(string_view s, const char *what) {
    vector<int> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r'))
            ++i;
        if (i == s.size())
            break;
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
        if (ec != std::errc() || (ptr != s.data() + s.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r'))
            throw MatrixError(string("malformed ") + what + ": '" + string(s) + "'");
        out.push_back(v);
        i = static_cast<std::size_t>(ptr - s.data());
    }
    return out;
}

} // namespace

Matrix01 parse_matrix(string_view text) {
    auto lines = split_lines(text);
    // Blank lines at the end are tolerated; anything else must be grid rows.
    while (!lines.empty() && trim(lines.back()).empty())
        lines.pop_back();
    if (lines.empty())
        throw MatrixError("empty matrix input");

    auto first = trim(lines.front());
    if (first.starts_with("perm:")) {
        if (lines.size() != 1)
            throw MatrixError("permutation shorthand must be a single line");
        auto sigma = parse_ints(first.substr(5), "permutation");
        if (sigma.empty())
            throw MatrixError("permutation shorthand lists no values");
        return Matrix01::from_permutation(sigma);
    }

    std::size_t body = 0;
    int want_rows = -1;
    int want_cols = -1;
    if (first.starts_with("#")) {
        auto dims = parse_ints(first.substr(1), "header");
        if (dims.size() != 2)
            throw MatrixError("header must read '# rows cols'");
        want_rows = dims[0];
        want_cols = dims[1];
        check_dimensions(want_rows, want_cols);
        body = 1;
    }

    const auto n_rows = lines.size() - body;
    if (want_rows >= 0 && static_cast<std::size_t>(want_rows) != n_rows)
        throw MatrixError("header declares " + std::to_string(want_rows) + " rows, found " +
                          std::to_string(n_rows));
    if (want_rows < 0 && n_rows == 0)
        throw MatrixError("empty matrix input");

    int cols = want_cols;
    vector<Entry> es;
    for (std::size_t r = 0; r < n_rows; ++r) {
        auto line = lines[body + r];
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (cols < 0)
            cols = static_cast<int>(line.size());
        if (static_cast<int>(line.size()) != cols)
            throw MatrixError("ragged row " + std::to_string(r + 1) + ": expected " + std::to_string(cols) +
                              " glyphs, found " + std::to_string(line.size()));
        for (std::size_t c = 0; c < line.size(); ++c) {
            switch (line[c]) {
            case '1':
            case '*':
                es.push_back({static_cast<int>(r) + 1, static_cast<int>(c) + 1});
                break;
            case '0':
            case '.':
                break;
            default:
                throw MatrixError(string("illegal glyph '") + line[c] + "' in row " + std::to_string(r + 1));
            }
        }
    }
    if (cols == 0 && want_cols < 0)
        throw MatrixError("empty matrix input");
    return Matrix01(static_cast<int>(n_rows), cols, std::move(es));
}

Matrix01 read_matrix_file(const string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw MatrixError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_matrix(ss.str());
}

string render_matrix(const Matrix01 &m, RenderStyle style) {
    const char one = style == RenderStyle::grid ? '1' : '*';
    const char zero = style == RenderStyle::grid ? '0' : '.';
    string out;
    out.reserve(static_cast<std::size_t>(m.rows()) * static_cast<std::size_t>(m.cols() + 1));
    for (int r = 1; r <= m.rows(); ++r) {
        if (r > 1)
            out.push_back('\n');
        for (int c = 1; c <= m.cols(); ++c)
            out.push_back(m.at(r, c) ? one : zero);
    }
    return out;
}

string render_matrix_file(const Matrix01 &m, RenderStyle style) {
    string out = "# " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    out += render_matrix(m, style);
    if (m.rows() > 0)
        out.push_back('\n');
    return out;
}

// ---------------------------------------------------------------------------
// Symmetries

Transform parse_transform(string_view name) {
    if (name == "rev")
        return Transform::rev;
    if (name == "rot")
        return Transform::rot;
    if (name == "rot2")
        return Transform::rot2;
    if (name == "trans")
        return Transform::trans;
    throw MatrixError("unknown transform '" + string(name) + "'");
}

string_view to_string(Transform t) {
    switch (t) {
    case Transform::rev:
        return "rev";
    case Transform::rot:
        return "rot";
    case Transform::rot2:
        return "rot2";
    case Transform::trans:
        return "trans";
    }
    return "?";
}

Entry transform_entry(const Entry &e, int rows, int cols, Transform t) {
    switch (t) {
    case Transform::rev:
        return {e.row, cols + 1 - e.col};
    case Transform::rot:
        return {e.col, rows + 1 - e.row};
    case Transform::rot2:
        return {rows + 1 - e.row, cols + 1 - e.col};
    case Transform::trans:
        return {e.col, e.row};
    }
    return e;
}

Matrix01 transform(const Matrix01 &m, Transform t) {
    vector<Entry> es;
    es.reserve(m.weight());
    for (const auto &e : m.entries())
        es.push_back(transform_entry(e, m.rows(), m.cols(), t));
    const bool swaps = t == Transform::rot || t == Transform::trans;
    return swaps ? Matrix01(m.cols(), m.rows(), std::move(es)) : Matrix01(m.rows(), m.cols(), std::move(es));
}

Pattern transform(const Pattern &p, Transform t) { return Pattern(transform(p.matrix(), t)); }

// ---------------------------------------------------------------------------
// Distances

int horizontal_distance(const Entry &a, const Entry &b) { return std::abs(a.col - b.col); }
int vertical_distance(const Entry &a, const Entry &b) { return std::abs(a.row - b.row); }

int width(std::span<const Entry> set) {
    if (set.empty())
        throw MatrixError("width of an empty set");
    auto [lo, hi] = std::minmax_element(set.begin(), set.end(),
                                        [](const Entry &a, const Entry &b) { return a.col < b.col; });
    return hi->col - lo->col;
}

int height(std::span<const Entry> set) {
    if (set.empty())
        throw MatrixError("height of an empty set");
    auto [lo, hi] = std::minmax_element(set.begin(), set.end(),
                                        [](const Entry &a, const Entry &b) { return a.row < b.row; });
    return hi->row - lo->row;
}

// ---------------------------------------------------------------------------
// Column splits

Matrix01 split_at_entry(const Matrix01 &p, const Entry &x, Side side) {
    if (!p.at(x)) {
        std::ostringstream msg;
        msg << x << " is not a 1-entry";
        throw MatrixError(msg.str());
    }
    vector<Entry> es;
    if (side == Side::left) {
        for (const auto &e : p.entries())
            if (e.col < x.col)
                es.push_back(e);
        return Matrix01(p.rows(), x.col - 1, std::move(es));
    }
    for (const auto &e : p.entries())
        if (e.col > x.col)
            es.push_back({e.row, e.col - x.col});
    return Matrix01(p.rows(), p.cols() - x.col, std::move(es));
}

Matrix01 hconcat(std::span<const Matrix01> parts) {
    if (parts.empty())
        return Matrix01(0, 0);
    const int rows = parts.front().rows();
    int cols = 0;
    vector<Entry> es;
    for (const auto &part : parts) {
        if (part.rows() != rows)
            throw MatrixError("hconcat: row counts differ");
        for (const auto &e : part.entries())
            es.push_back({e.row, e.col + cols});
        cols += part.cols();
    }
    return Matrix01(rows, cols, std::move(es));
}

Matrix01 place(const Matrix01 &src, int rows, int cols, int row_offset, int col_offset) {
    vector<Entry> es;
    es.reserve(src.weight());
    for (const auto &e : src.entries())
        es.push_back({e.row + row_offset, e.col + col_offset});
    return Matrix01(rows, cols, std::move(es));
}

} // namespace satpat
