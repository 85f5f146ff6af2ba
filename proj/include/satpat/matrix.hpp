#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace satpat {

/// Raised for malformed matrix text and violated construction preconditions.
class MatrixError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A 1-entry position. Rows count top to bottom and columns left to right,
/// both starting at 1. Entries order by (row, col).
struct Entry {
    int row = 1;
    int col = 1;

    friend constexpr auto operator<=>(const Entry &, const Entry &) = default;

    constexpr bool above(const Entry &o) const { return row < o.row; }
    constexpr bool below(const Entry &o) const { return row > o.row; }
    constexpr bool left_of(const Entry &o) const { return col < o.col; }
    constexpr bool right_of(const Entry &o) const { return col > o.col; }
};

std::ostream &operator<<(std::ostream &os, const Entry &e);

inline constexpr int max_dimension = 65535;

/// Rectangular 0-1 matrix: dimensions plus a sorted set of 1-entries, with a
/// dense bit grid for constant-time cell lookup. Immutable once built.
class Matrix01 {
  public:
    Matrix01() = default;
    /// All-zero matrix. Zero rows or columns are allowed (split results).
    Matrix01(int rows, int cols);
    /// Throws MatrixError if an entry is out of range. Duplicates are merged.
    Matrix01(int rows, int cols, std::vector<Entry> entries);

    static Matrix01 from_permutation(std::span<const int> sigma);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    /// 1-entries in (row, col) order.
    const std::vector<Entry> &entries() const { return entries_; }
    std::size_t weight() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    bool at(int row, int col) const;
    bool at(const Entry &e) const { return at(e.row, e.col); }

    bool row_empty(int row) const;
    bool col_empty(int col) const;
    std::vector<int> empty_rows() const;
    std::vector<int> empty_cols() const;

    /// Copy with one more 1-entry.
    Matrix01 with(const Entry &e) const;
    /// Copy with the given rectangle of zero rows/cols inserted or appended.
    Matrix01 insert_empty_rows(int before_row, int count) const;
    Matrix01 insert_empty_cols(int before_col, int count) const;

    friend bool operator==(const Matrix01 &a, const Matrix01 &b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

  private:
    std::size_t index(int row, int col) const {
        return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(col - 1);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Entry> entries_;
    std::vector<std::uint8_t> grid_;
};

/// A matrix with at least one 1-entry and no empty row or column.
class Pattern {
  public:
    /// Throws MatrixError when `m` is all-zero or has an empty line.
    explicit Pattern(Matrix01 m);
    static Pattern permutation(std::span<const int> sigma);
    static Pattern permutation(std::initializer_list<int> sigma);

    const Matrix01 &matrix() const { return base_; }
    int rows() const { return base_.rows(); }
    int cols() const { return base_.cols(); }
    const std::vector<Entry> &entries() const { return base_.entries(); }

    friend bool operator==(const Pattern &a, const Pattern &b) = default;

  private:
    Matrix01 base_;
};

bool is_reduced(const Matrix01 &m);

// ---------------------------------------------------------------------------
// Text I/O

enum class RenderStyle { grid, dotted };

/// Parses the grid format (optional "# rows cols" header, '1'/'*' for ones,
/// '0'/'.' for zeros) or the "perm: c1 c2 ... ck" shorthand.
Matrix01 parse_matrix(std::string_view text);
Matrix01 read_matrix_file(const std::string &path);

/// One line per row, LF-separated, no trailing newline and no header.
std::string render_matrix(const Matrix01 &m, RenderStyle style = RenderStyle::grid);
/// Header line "# rows cols" followed by the grid and a trailing newline.
/// This form stays unambiguous for matrices with zero rows or columns.
std::string render_matrix_file(const Matrix01 &m, RenderStyle style = RenderStyle::grid);

// ---------------------------------------------------------------------------
// Symmetries

enum class Transform { rev, rot, rot2, trans };

Transform parse_transform(std::string_view name);
std::string_view to_string(Transform t);

/// Image of a single position inside a rows x cols matrix.
Entry transform_entry(const Entry &e, int rows, int cols, Transform t);
Matrix01 transform(const Matrix01 &m, Transform t);
Pattern transform(const Pattern &p, Transform t);

// ---------------------------------------------------------------------------
// Distances. Horizontal distance counts columns, vertical distance rows.

int horizontal_distance(const Entry &a, const Entry &b);
int vertical_distance(const Entry &a, const Entry &b);
int width(std::span<const Entry> set);
int height(std::span<const Entry> set);

// ---------------------------------------------------------------------------
// Column splits

enum class Side { left, right };

/// Columns strictly left (or right) of `x`, re-based to start at column 1.
/// Row count is unchanged. `x` must be a 1-entry of `p`.
Matrix01 split_at_entry(const Matrix01 &p, const Entry &x, Side side);

/// Horizontal concatenation; all parts must have the same row count.
Matrix01 hconcat(std::span<const Matrix01> parts);

/// Places `src` inside a larger zero canvas at the given offsets.
Matrix01 place(const Matrix01 &src, int rows, int cols, int row_offset, int col_offset);

} // namespace satpat
