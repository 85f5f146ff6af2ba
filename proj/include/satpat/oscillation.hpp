#pragma once

#include <satpat/permutation.hpp>

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace satpat {

class OscillationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class SequenceKind { oscillation, spanning_oscillation, traversal, tall_traversal };

std::string_view to_string(SequenceKind k);

/// Ordered 1-entries of a host permutation matrix with the structure they
/// are claimed to have.
struct EntrySequence {
    std::vector<Entry> seq;
    SequenceKind kind = SequenceKind::oscillation;

    std::size_t size() const { return seq.size(); }
    const Entry &at(std::size_t one_based) const { return seq[one_based - 1]; }
};

/// "(r,c) (r,c) ..." on one line.
std::string format_sequence(std::span<const Entry> seq);
std::vector<Entry> parse_sequence(std::string_view text);

/// Checks the structural properties of `kind`. Throws OscillationError when
/// an entry is not a 1-entry of `p` or appears twice.
bool validate(const PermutationMatrix &p, std::span<const Entry> seq, SequenceKind kind);

/// Tallness of a spanning oscillation or traversal: at every upper position
/// 2 <= i <= m-2 nothing lies below x_{i+1} and left of x_i, and nothing lies
/// above x_i and right of x_{i+1}. Throws if `seq` is neither structure.
bool is_tall(const PermutationMatrix &p, std::span<const Entry> seq);
/// Tallness of the transposed sequence in the transposed matrix.
bool is_wide(const PermutationMatrix &p, std::span<const Entry> seq);

std::vector<Entry> transform_sequence(std::span<const Entry> seq, int k, Transform t);

/// Shortest spanning oscillation, lexicographically first among the shortest
/// (entries compared by (row, col)). Absent when none exists.
std::optional<EntrySequence> find_min_spanning_oscillation(const PermutationMatrix &p);

enum class Orientation { tall, wide };

/// Repairs a minimum-length spanning oscillation until it is tall (or wide)
/// by repeatedly swapping the offending element for the extreme violator.
/// The first two and last two entries are kept. Throws OscillationError if
/// the input is not a spanning oscillation of minimum length.
EntrySequence straighten(const PermutationMatrix &p, std::span<const Entry> seq, Orientation o);

struct Extension {
    int s;  // insert after x_s
    Entry y1;
    Entry y2;
};

/// Some odd 5 <= s <= m-5 and a pair that can be inserted after x_s while
/// keeping a traversal. Throws unless `seq` is a tall traversal.
std::optional<Extension> is_extendable(const PermutationMatrix &p, std::span<const Entry> seq);

/// Grows a tall traversal by tall insertions until it is non-extendable.
EntrySequence extend_to_nonextendable(const PermutationMatrix &p, std::span<const Entry> seq);

} // namespace satpat
