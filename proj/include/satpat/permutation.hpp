#pragma once

#include <satpat/matrix.hpp>

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace satpat {

/// k x k permutation matrix stored as the row -> column map.
class PermutationMatrix {
  public:
    /// Throws MatrixError unless `sigma` is a permutation of 1..k.
    explicit PermutationMatrix(std::vector<int> sigma);
    /// Throws MatrixError unless `m` has exactly one 1 per row and column.
    static PermutationMatrix from_matrix(const Matrix01 &m);
    static std::optional<PermutationMatrix> try_from_matrix(const Matrix01 &m);

    int size() const { return static_cast<int>(sigma_.size()); }
    /// Column of the 1-entry in `row` (1-based).
    int col_of(int row) const { return sigma_[static_cast<std::size_t>(row - 1)]; }
    int row_of(int col) const { return inverse_[static_cast<std::size_t>(col - 1)]; }
    Entry entry_in_row(int row) const { return {row, col_of(row)}; }
    Entry entry_in_col(int col) const { return {row_of(col), col}; }
    bool has(const Entry &e) const {
        return e.row >= 1 && e.row <= size() && e.col >= 1 && e.col <= size() && col_of(e.row) == e.col;
    }
    const std::vector<int> &sigma() const { return sigma_; }
    std::vector<Entry> entries() const;

    Matrix01 matrix() const { return Matrix01::from_permutation(sigma_); }
    Pattern pattern() const { return Pattern::permutation(sigma_); }

    friend bool operator==(const PermutationMatrix &a, const PermutationMatrix &b) { return a.sigma_ == b.sigma_; }

  private:
    std::vector<int> sigma_;
    std::vector<int> inverse_;
};

PermutationMatrix transform(const PermutationMatrix &p, Transform t);

/// Leftmost, topmost, bottommost and rightmost 1-entries.
struct Extremes {
    Entry ell;
    Entry t;
    Entry b;
    Entry r;
};

Extremes extremes(const PermutationMatrix &p);

enum class DecomposeKind { sum_decomposable, skew_decomposable, indecomposable };

std::string_view to_string(DecomposeKind k);

DecomposeKind decompose_kind(const PermutationMatrix &p);

/// Block decomposability for an arbitrary matrix: some row split and column
/// split leave only two nonzero diagonal (or anti-diagonal) blocks.
DecomposeKind decompose_kind(const Matrix01 &m);

/// Inversion graph on the 1-entries: x and y are adjacent when one is
/// strictly below and strictly left of the other.
class PermGraph {
  public:
    explicit PermGraph(const PermutationMatrix &p);

    bool adjacent(const Entry &x, const Entry &y) const {
        return (x.below(y) && x.left_of(y)) || (y.below(x) && y.left_of(x));
    }
    const std::vector<Entry> &vertices() const { return vertices_; }
    /// Each edge once, endpoints ordered, list sorted.
    const std::vector<std::pair<Entry, Entry>> &edges() const { return edges_; }
    /// Neighbours in (row, col) order.
    std::vector<Entry> neighbours(const Entry &x) const;

  private:
    std::vector<Entry> vertices_;
    std::vector<std::pair<Entry, Entry>> edges_;
};

PermGraph perm_graph(const PermutationMatrix &p);

enum class FourTravVariant { A, B };

/// Four isolated boundary entries forming sigma[2,4,1,3] (A) or
/// sigma[3,1,4,2] (B), listed top to bottom.
struct FourTravWitness {
    std::array<Entry, 4> entries;
    FourTravVariant variant;
};

std::optional<FourTravWitness> detect_four_trav_class(const Pattern &p);

enum class Verdict { bounded, linear, unknown };

enum class ClassReason { decomposable, indecomposable_permutation, four_trav_class, insufficient_criteria };

struct Classification {
    Verdict verdict;
    ClassReason reason;
};

std::string_view to_string(Verdict v);
std::string_view to_string(ClassReason r);

Classification classify(const Pattern &p);

} // namespace satpat
