#pragma once

#include <satpat/matrix.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace satpat {

/// What a matrix is claimed to be with respect to a pattern.
enum class Role {
    avoids,
    vertical_witness,
    horizontal_witness,
    witness,
    explicit_witness,
    saturating,
};

std::string_view to_string(Role r);
/// Accepts the canonical names ("vertical-witness", ...) and the short forms
/// used on the command line ("vertical", "horizontal", "full", "explicit").
std::optional<Role> parse_role(std::string_view name);

/// A matrix together with the pattern it concerns, its claimed role and the
/// expandable lines backing the claim.
struct WitnessCertificate {
    Matrix01 matrix;
    Pattern pattern;
    Role role;
    std::vector<int> expandable_rows;
    std::vector<int> expandable_cols;
};

/// Text form:
///
///     role: vertical-witness
///     pattern:
///     # 4 4
///     0010
///     ...
///     matrix:
///     # 5 6
///     ...
///     expandable-rows: 3
///     expandable-cols:
std::string serialize(const WitnessCertificate &c);
/// Throws MatrixError on malformed text.
WitnessCertificate parse_certificate(std::string_view text);
/// True when the text looks like a certificate rather than a bare matrix.
bool looks_like_certificate(std::string_view text);

} // namespace satpat
