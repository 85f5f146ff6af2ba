#pragma once

#include <satpat/certificate.hpp>
#include <satpat/oscillation.hpp>
#include <satpat/permutation.hpp>

#include <optional>
#include <span>
#include <stdexcept>

namespace satpat {

/// Precondition violations and failed self-checks of the builders. A failed
/// self-check means the construction is wrong, never that the input is.
class WitnessError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Two column-deleted copies of `p` side by side: everything left of the
/// rightmost entry, then everything right of the leftmost entry, aligned on
/// their empty rows. Needs a unique leftmost entry strictly above a unique
/// rightmost entry. Size (rows + i_r - i_l) x (2 cols - 2).
WitnessCertificate build_S(const Pattern &p);

/// Blocks L', R, L, R' (columns left of q, right of l, left of r, right of q)
/// aligned on a common empty row, then the part of L' and R' below the copy
/// of l moved down by k rows. Needs q above l above r. Only expandability is
/// checked here; whether the result avoids `p` depends on the choice of q.
WitnessCertificate build_S_q(const PermutationMatrix &p, const Entry &q);

/// The long construction for a non-extendable tall traversal of even length
/// 6 <= m <= k: split copies at every x_s laid out in one band, then the
/// upper parts lifted and the lower parts lowered in staggered steps of k
/// rows. Size ((2m-6)k+1) x (m-2)k, expandable row (m-3)k.
WitnessCertificate build_S_X(const PermutationMatrix &p, std::span<const Entry> traversal);

/// Vertical witness for an indecomposable permutation matrix or for a
/// pattern of the four-traversal class. The result is certified before it
/// is returned.
WitnessCertificate vertical_witness(const Pattern &p);

/// Horizontal witness: the transpose of a vertical witness of the transpose.
WitnessCertificate horizontal_witness(const Pattern &p);

/// Vertical witness bottom-left, horizontal witness top-right, zero blocks
/// elsewhere.
WitnessCertificate full_witness(const Pattern &p);

/// Greedy row-major fill of a witness until it is saturating. The seed
/// defaults to full_witness(p).
WitnessCertificate explicit_witness(const Pattern &p);
WitnessCertificate explicit_witness(const Pattern &p, const Matrix01 &seed);
WitnessCertificate explicit_witness(const WitnessCertificate &seed);

/// Grows a witness to rows x cols by repeating its first expandable row and
/// column.
WitnessCertificate pad_witness(const WitnessCertificate &c, int rows, int cols);

/// Applies a symmetry to matrix, pattern and the listed lines together.
WitnessCertificate transform(const WitnessCertificate &c, Transform t);

} // namespace satpat
