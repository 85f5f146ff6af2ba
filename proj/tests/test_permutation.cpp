#include <doctest.h>

#include "support.hpp"

#include <satpat/permutation.hpp>

#include <random>

using namespace satpat;

namespace {

const PermutationMatrix Q({2, 5, 3, 1, 4});
const PermutationMatrix q1({3, 1, 4, 2});

} // namespace

TEST_CASE("permutation matrix construction") {
    CHECK(Q.col_of(2) == 5);
    CHECK(Q.row_of(1) == 4);
    CHECK(PermutationMatrix::from_matrix(Q.matrix()) == Q);
    CHECK_FALSE(PermutationMatrix::try_from_matrix(parse_matrix("11\n01")));
    CHECK_THROWS_AS(PermutationMatrix({1, 1}), MatrixError);
    CHECK(transform(Q, Transform::rev) == PermutationMatrix({4, 1, 3, 5, 2}));
}

TEST_CASE("extremes") {
    const auto e = extremes(Q);
    CHECK(e.ell == Entry{4, 1});
    CHECK(e.t == Entry{1, 2});
    CHECK(e.b == Entry{5, 4});
    CHECK(e.r == Entry{2, 5});

    const auto f = extremes(q1);
    CHECK(f.ell == Entry{2, 1});
    CHECK(f.t == Entry{1, 3});
    CHECK(f.b == Entry{4, 2});
    CHECK(f.r == Entry{3, 4});

    const auto g = extremes(PermutationMatrix({1}));
    CHECK(g.ell == Entry{1, 1});
    CHECK(g.r == Entry{1, 1});
}

TEST_CASE("decompose kind") {
    CHECK(decompose_kind(PermutationMatrix({1, 2})) == DecomposeKind::sum_decomposable);
    CHECK(decompose_kind(PermutationMatrix({2, 3, 1})) == DecomposeKind::skew_decomposable);
    CHECK(decompose_kind(q1) == DecomposeKind::indecomposable);
    CHECK(decompose_kind(PermutationMatrix({1})) == DecomposeKind::indecomposable);
}

TEST_CASE("decompose kind matches the split definition for k <= 7") {
    for (int k = 1; k <= 7; ++k)
        support::for_each_permutation(k, [&](const std::vector<int> &s) {
            const PermutationMatrix p(s);
            const bool dec = decompose_kind(p) != DecomposeKind::indecomposable;
            CHECK(dec == support::naive_decomposable(s));
            CHECK(decompose_kind(p.matrix()) == decompose_kind(p));
        });
}

TEST_CASE("block decomposability of general matrices") {
    CHECK(decompose_kind(parse_matrix("110\n001")) == DecomposeKind::sum_decomposable);
    CHECK(decompose_kind(parse_matrix("001\n110")) == DecomposeKind::skew_decomposable);
    CHECK(decompose_kind(parse_matrix("11\n11")) == DecomposeKind::indecomposable);
}

TEST_CASE("permutation graph") {
    CHECK(perm_graph(PermutationMatrix({1, 2})).edges().empty());
    const auto g21 = perm_graph(PermutationMatrix({2, 1}));
    REQUIRE(g21.edges().size() == 1);
    CHECK(g21.edges()[0] == std::pair<Entry, Entry>{{1, 2}, {2, 1}});

    // l-t, l-(3,3), l-r, (3,3)-r, b-r
    const std::vector<std::pair<Entry, Entry>> expected{
        {{1, 2}, {4, 1}}, {{2, 5}, {3, 3}}, {{2, 5}, {4, 1}}, {{2, 5}, {5, 4}}, {{3, 3}, {4, 1}}};
    CHECK(perm_graph(Q).edges() == expected);
}

TEST_CASE("property: graph edges are exactly the inversions") {
    std::mt19937 rng(31);
    for (int i = 0; i < 100; ++i) {
        const PermutationMatrix p(support::random_permutation(1 + static_cast<int>(rng() % 8), rng));
        const auto g = perm_graph(p);
        std::size_t inversions = 0;
        const auto es = p.entries();
        for (std::size_t a = 0; a < es.size(); ++a)
            for (std::size_t b = a + 1; b < es.size(); ++b)
                inversions += support::inversion(es[a], es[b]);
        CHECK(g.edges().size() == inversions);
        for (const auto &[x, y] : g.edges())
            CHECK(support::inversion(x, y));
    }
}

TEST_CASE("four-traversal class detection") {
    const auto a = detect_four_trav_class(Q.pattern());
    REQUIRE(a);
    CHECK(a->variant == FourTravVariant::A);
    CHECK(a->entries == std::array<Entry, 4>{Entry{1, 2}, Entry{2, 5}, Entry{4, 1}, Entry{5, 4}});

    CHECK_FALSE(detect_four_trav_class(Pattern::permutation({1, 2})));

    const auto b = detect_four_trav_class(q1.pattern());
    REQUIRE(b);
    CHECK(b->variant == FourTravVariant::B);
    CHECK(b->entries == std::array<Entry, 4>{Entry{1, 3}, Entry{2, 1}, Entry{3, 4}, Entry{4, 2}});
}

TEST_CASE("classification") {
    const auto c21 = classify(Pattern::permutation({2, 1}));
    CHECK(c21.verdict == Verdict::linear);
    CHECK(c21.reason == ClassReason::decomposable);

    const auto cq = classify(Q.pattern());
    CHECK(cq.verdict == Verdict::bounded);
    CHECK(cq.reason == ClassReason::indecomposable_permutation);

    CHECK(classify(Pattern::permutation({1})).verdict == Verdict::bounded);

    const auto block = classify(Pattern(parse_matrix("110\n001")));
    CHECK(block.verdict == Verdict::linear);

    CHECK(to_string(Verdict::bounded) == "Bounded");
    CHECK(to_string(ClassReason::indecomposable_permutation) == "indecomposable permutation");
}

TEST_CASE("classification of all permutations up to size 6") {
    for (int k = 1; k <= 6; ++k)
        support::for_each_permutation(k, [&](const std::vector<int> &s) {
            const auto c = classify(Pattern::permutation(s));
            CHECK((c.verdict == Verdict::linear) == support::naive_decomposable(s));
            CHECK(c.verdict != Verdict::unknown);
        });
}
