#include <doctest.h>

#include "support.hpp"

#include <satpat/certificate.hpp>
#include <satpat/verifier.hpp>

#include <random>

using namespace satpat;

namespace {

const Pattern q1 = Pattern::permutation({3, 1, 4, 2});
const Matrix01 vertical_5x6(5, 6, {{1, 3}, {2, 1}, {2, 5}, {4, 2}, {4, 6}, {5, 4}});
const Matrix01 witness_11x11(11, 11, {{1, 10}, {2, 8}, {3, 11}, {4, 7}, {5, 10}, {6, 8}, {7, 3}, {8, 1}, {8, 5}, {10, 2},
                             {10, 6}, {11, 4}});

} // namespace

TEST_CASE("expandable lines of the known witnesses") {
    CHECK(check_expandable(vertical_5x6, q1, Axis::row, 3));
    CHECK(check_expandable(witness_11x11, q1, Axis::row, 9));
    CHECK(check_expandable(witness_11x11, q1, Axis::col, 9));
    CHECK_FALSE(check_expandable(witness_11x11, q1, Axis::row, 1));
    CHECK(expandable_lines(vertical_5x6, q1, Axis::row) == std::vector<int>{3});
    CHECK(expandable_lines(vertical_5x6, q1, Axis::col).empty());
    CHECK_THROWS_AS(check_expandable(vertical_5x6, q1, Axis::row, 6), MatrixError);
    CHECK_THROWS_AS(check_expandable(vertical_5x6, q1, Axis::col, 0), MatrixError);
}

TEST_CASE("property: expandability matches the definition") {
    std::mt19937 rng(51);
    for (int i = 0; i < 150; ++i) {
        const auto p = Pattern::permutation(support::random_permutation(2 + static_cast<int>(rng() % 2), rng));
        const auto m = support::random_matrix(5, 5, 0.3, rng);
        if (contains(m, p))
            continue;
        for (int r = 1; r <= 5; ++r)
            CHECK(check_expandable(m, p, Axis::row, r) == support::naive_expandable_row(m, p, r));
        for (int c = 1; c <= 5; ++c)
            CHECK(check_expandable(m, p, Axis::col, c) == support::naive_expandable_col(m, p, c));
    }
}

TEST_CASE("certify: claims on the known witnesses") {
    CHECK(certify(witness_11x11, q1, Role::witness));
    CHECK(certify(witness_11x11, q1, Role::avoids));
    CHECK_FALSE(certify(vertical_5x6, q1, Role::witness));
    CHECK(certify(vertical_5x6, q1, Role::vertical_witness));
    CHECK_FALSE(certify(vertical_5x6, q1, Role::horizontal_witness));
    CHECK(certify(transform(vertical_5x6, Transform::trans), transform(q1, Transform::trans), Role::horizontal_witness));
    CHECK_FALSE(certify(witness_11x11, q1, Role::saturating));
    CHECK_FALSE(certify(witness_11x11, q1, Role::explicit_witness));

    const auto bad = certify(witness_11x11.with({9, 1}), q1, Role::avoids);
    CHECK_FALSE(bad);
    CHECK(bad.diagnostic.find("contains") != std::string::npos);
}

TEST_CASE("certify: zero matrices and the one-entry pattern") {
    const auto one = Pattern::permutation({1});
    for (int n = 1; n <= 5; ++n) {
        CHECK(certify(Matrix01(n, n), one, Role::saturating));
        CHECK(certify(Matrix01(n, n), one, Role::explicit_witness));
    }
}

TEST_CASE("property: saturation verdict matches the definition") {
    std::mt19937 rng(52);
    int saturating = 0;
    for (int i = 0; i < 300; ++i) {
        const auto p = Pattern::permutation(support::random_permutation(2, rng));
        const auto m = support::random_matrix(3, 3 + static_cast<int>(rng() % 2), 0.55, rng);
        const bool want = support::naive_saturating(m, p);
        CHECK(static_cast<bool>(certify(m, p, Role::saturating)) == want);
        saturating += want;
    }
    CHECK(saturating > 0);
}

TEST_CASE("certify: certificates check their listed lines") {
    WitnessCertificate c{witness_11x11, q1, Role::witness, {9}, {9}};
    CHECK(certify(c));
    c.expandable_rows = {1};
    CHECK_FALSE(certify(c));
    c.expandable_rows = {20};
    CHECK_FALSE(certify(c));
}

TEST_CASE("certificate text round trip") {
    const WitnessCertificate c{witness_11x11, q1, Role::witness, {9}, {9}};
    const auto text = serialize(c);
    CHECK(text.starts_with("role: witness\npattern:\n# 4 4\n0010\n"));
    CHECK(looks_like_certificate(text));
    const auto back = parse_certificate(text);
    CHECK(back.matrix == c.matrix);
    CHECK(back.pattern == c.pattern);
    CHECK(back.role == c.role);
    CHECK(back.expandable_rows == c.expandable_rows);
    CHECK(back.expandable_cols == c.expandable_cols);
    CHECK(serialize(back) == text);

    CHECK_THROWS_AS(parse_certificate("role: nonsense\n"), MatrixError);
    CHECK_THROWS_AS(parse_certificate(text.substr(0, text.size() / 2)), MatrixError);
    CHECK(parse_role("full") == Role::witness);
    CHECK(to_string(Role::vertical_witness) == "vertical-witness");
}
