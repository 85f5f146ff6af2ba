#include <doctest.h>

#include "support.hpp"

#include <satpat/matrix.hpp>

#include <random>

using namespace satpat;

namespace {

std::vector<Entry> E(std::initializer_list<Entry> xs) { return xs; }

const Matrix01 Q = parse_matrix("perm: 2 5 3 1 4");

} // namespace

TEST_CASE("parse: permutation shorthand") {
    CHECK(Q.rows() == 5);
    CHECK(Q.cols() == 5);
    CHECK(Q.entries() == E({{1, 2}, {2, 5}, {3, 3}, {4, 1}, {5, 4}}));

    const auto q1 = parse_matrix("perm: 3 1 4 2");
    CHECK(q1.entries() == E({{1, 3}, {2, 1}, {3, 4}, {4, 2}}));
}

TEST_CASE("parse: grid forms") {
    const auto id = parse_matrix("10\n01");
    CHECK(id.rows() == 2);
    CHECK(id.entries() == E({{1, 1}, {2, 2}}));

    CHECK(parse_matrix("# 2 2\n10\n01\n") == id);
    CHECK(parse_matrix("*.\n.*\n") == id);
    CHECK(parse_matrix("# 0 3\n").cols() == 3);
}

TEST_CASE("parse: malformed input") {
    CHECK_THROWS_AS(parse_matrix("10\n1"), MatrixError);
    CHECK_THROWS_AS(parse_matrix("1x\n01"), MatrixError);
    CHECK_THROWS_AS(parse_matrix(""), MatrixError);
    CHECK_THROWS_AS(parse_matrix("perm: 1 1"), MatrixError);
    CHECK_THROWS_AS(parse_matrix("perm: 1 3"), MatrixError);
    CHECK_THROWS_AS(parse_matrix("# 3 2\n10\n01\n"), MatrixError);
}

TEST_CASE("render") {
    CHECK(render_matrix(parse_matrix("10\n01")) == "10\n01");
    CHECK(render_matrix(Matrix01(1, 1), RenderStyle::dotted) == ".");
    CHECK(render_matrix(Q, RenderStyle::dotted) == ".*...\n....*\n..*..\n*....\n...*.");
    CHECK(render_matrix_file(parse_matrix("10\n01")) == "# 2 2\n10\n01\n");
}

TEST_CASE("property: render then parse is the identity") {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto m = support::random_matrix(1 + static_cast<int>(rng() % 7), 1 + static_cast<int>(rng() % 7), 0.4, rng);
        CHECK(parse_matrix(render_matrix(m)) == m);
        CHECK(parse_matrix(render_matrix_file(m, RenderStyle::dotted)) == m);
    }
}

TEST_CASE("pattern requires a reduced nonzero matrix") {
    CHECK_THROWS_AS(Pattern(Matrix01(2, 2)), MatrixError);
    CHECK_THROWS_AS(Pattern(parse_matrix("10\n00")), MatrixError);
    CHECK_NOTHROW(Pattern(parse_matrix("11\n01")));
    CHECK(is_reduced(Q));
    CHECK_FALSE(is_reduced(parse_matrix("10\n00")));
}

TEST_CASE("transforms") {
    CHECK(transform(Q, Transform::rev) == parse_matrix("perm: 4 1 3 5 2"));
    const auto id = parse_matrix("10\n01");
    CHECK(transform(id, Transform::trans) == id);

    // rot sends (i, j) to (j, rows + 1 - i).
    const auto r = transform(parse_matrix("110\n000"), Transform::rot);
    CHECK(r.rows() == 3);
    CHECK(r.cols() == 2);
    CHECK(r.entries() == E({{1, 2}, {2, 2}}));
    CHECK(parse_transform("rot2") == Transform::rot2);
    CHECK_THROWS_AS(parse_transform("flip"), MatrixError);
}

TEST_CASE("property: transform group relations") {
    std::mt19937 rng(12);
    for (int i = 0; i < 200; ++i) {
        const auto m = support::random_matrix(1 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 6), 0.4, rng);
        auto four = m;
        for (int j = 0; j < 4; ++j)
            four = transform(four, Transform::rot);
        CHECK(four == m);
        CHECK(transform(transform(m, Transform::rot), Transform::rot) == transform(m, Transform::rot2));
        CHECK(transform(transform(m, Transform::rev), Transform::rev) == m);
        CHECK(transform(transform(m, Transform::trans), Transform::trans) == m);
        CHECK(transform(m, Transform::rot).weight() == m.weight());
        // rot = rev after trans
        CHECK(transform(m, Transform::rot) == transform(transform(m, Transform::trans), Transform::rev));
    }
}

TEST_CASE("distances") {
    CHECK(horizontal_distance({1, 2}, {2, 5}) == 3);
    CHECK(vertical_distance({1, 2}, {2, 5}) == 1);
    CHECK(width(Q.entries()) == 4);
    CHECK(height(Q.entries()) == 4);
    const std::vector<Entry> one{{3, 1}};
    CHECK(height(one) == 0);
    CHECK(width(one) == 0);
}

TEST_CASE("split at entry") {
    const auto q1 = parse_matrix("perm: 3 1 4 2");
    const auto left = split_at_entry(q1, {3, 4}, Side::left);
    CHECK(left.rows() == 4);
    CHECK(left.cols() == 3);
    CHECK(left.entries() == E({{1, 3}, {2, 1}, {4, 2}}));

    const auto right = split_at_entry(q1, {2, 1}, Side::right);
    CHECK(right.cols() == 3);
    CHECK(right.entries() == E({{1, 2}, {3, 3}, {4, 1}}));

    CHECK(split_at_entry(q1, {2, 1}, Side::left).cols() == 0);
    CHECK_THROWS_AS(split_at_entry(q1, {1, 1}, Side::left), MatrixError);
}

TEST_CASE("empty line insertion and concatenation") {
    const auto id = parse_matrix("10\n01");
    const auto grown = id.insert_empty_rows(2, 2).insert_empty_cols(3, 1);
    CHECK(grown.rows() == 4);
    CHECK(grown.cols() == 3);
    CHECK(grown.entries() == E({{1, 1}, {4, 2}}));
    CHECK(grown.empty_rows() == std::vector<int>{2, 3});
    CHECK(grown.empty_cols() == std::vector<int>{3});

    const std::vector<Matrix01> parts{id, Matrix01(2, 1), id};
    const auto h = hconcat(parts);
    CHECK(h.cols() == 5);
    CHECK(h.entries() == E({{1, 1}, {1, 4}, {2, 2}, {2, 5}}));

    const auto placed = place(id, 3, 4, 1, 2);
    CHECK(placed.entries() == E({{2, 3}, {3, 4}}));
}
