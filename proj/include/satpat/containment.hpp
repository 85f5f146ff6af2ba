#pragma once

#include <satpat/matrix.hpp>

#include <optional>
#include <vector>

namespace satpat {

/// Order-preserving map from the 1-entries of a pattern into a host.
/// `image[i]` is the host position of `pattern.entries()[i]`.
struct Embedding {
    std::vector<Entry> image;
};

/// Column-indexed view of a host matrix that supports adding 1-entries.
/// Used by search loops that grow a matrix cell by cell.
class HostIndex {
  public:
    explicit HostIndex(const Matrix01 &m);
    HostIndex(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool at(int row, int col) const { return grid_[idx(row, col)] != 0; }
    bool at(const Entry &e) const { return at(e.row, e.col); }
    void add(const Entry &e);
    void remove(const Entry &e);
    /// Sorted rows of the 1-entries in column `c`.
    const std::vector<int> &column(int c) const { return by_col_[static_cast<std::size_t>(c)]; }
    std::size_t weight() const { return weight_; }
    Matrix01 to_matrix() const;

  private:
    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c - 1);
    }
    int rows_;
    int cols_;
    std::size_t weight_ = 0;
    std::vector<std::uint8_t> grid_;
    std::vector<std::vector<int>> by_col_;
};

/// Backtracking embedding search for one fixed pattern. Pattern entries are
/// assigned in (col, row) order and host candidates are tried in (col, row)
/// order, so results are deterministic.
class Matcher {
  public:
    explicit Matcher(const Pattern &p);

    const Pattern &pattern() const { return pattern_; }

    std::optional<Embedding> find(const HostIndex &host) const;
    /// An embedding into host + {cell} whose image includes `cell`. When the
    /// host already avoids the pattern this decides whether adding `cell`
    /// creates an occurrence.
    std::optional<Embedding> find_through(const HostIndex &host, const Entry &cell) const;
    bool creates_occurrence(const HostIndex &host, const Entry &cell) const {
        return find_through(host, cell).has_value();
    }

  private:
    struct Item {
        Entry pos;     // position in the pattern
        int row_rank;  // index among the distinct pattern rows
        int col_rank;
        int original;  // index in pattern.entries()
        bool col_unique;
    };

    struct Search;

    Pattern pattern_;
    std::vector<Item> items_;  // (col, row) order
    int distinct_rows_ = 0;
    int distinct_cols_ = 0;
};

std::optional<Embedding> find_embedding(const Matrix01 &host, const Pattern &p);
bool contains(const Matrix01 &host, const Pattern &p);
inline bool avoids(const Matrix01 &host, const Pattern &p) { return !contains(host, p); }

/// True when the map respects both strict orders in both directions and
/// lands on 1-entries of the host.
bool is_embedding(const Matrix01 &host, const Pattern &p, const Embedding &e);

/// Reference check straight from the deletion definition: tries every choice
/// of rows and columns of the host. Only meant for tiny instances.
bool contains_naive(const Matrix01 &host, const Pattern &p);

} // namespace satpat
