#include <doctest.h>

#include <lozi/error.hpp>
#include <lozi/symbolic.hpp>

#include <algorithm>
#include <cstddef>

using namespace lozi;

namespace {

Params flagship() { return Params(Rational(7, 4), Rational(1, 2)); }

void check_pattern_equal(const FoldingPattern& got, const FoldingPattern& want) {
    CHECK(got.same_shape(want));
    CHECK(got.render() == want.render());
    REQUIRE(got.slots.size() == want.slots.size());
    for (std::size_t i = 0; i < got.slots.size(); ++i) {
        CAPTURE(i);
        CHECK(got.slots[i].has_label == want.slots[i].has_label);
        if (got.slots[i].has_label && want.slots[i].has_label)
            CHECK(got.slots[i].label == want.slots[i].label);
    }
}

// Tails may legitimately be shorter on one side, but only when that side is
// flagged truncated; the recorded overlap must agree exactly.
void check_tails_equal(const KneadingEntry& got, const KneadingEntry& want) {
    const std::size_t k = std::min(got.tail.size(), want.tail.size());
    CHECK(std::equal(got.tail.begin(), got.tail.begin() + static_cast<long>(k),
                     want.tail.begin()));
    if (got.tail.size() < want.tail.size()) CHECK(got.truncated);
    if (want.tail.size() < got.tail.size()) CHECK(want.truncated);
}

} // namespace

TEST_SUITE("convert") {

TEST_CASE("kneading data rebuilds the pattern, labels included") {
    Params p = flagship();
    for (int d = 2; d <= 6; ++d) {
        CAPTURE(d);
        auto w = ManifoldWindow::grow(p, d);
        KneadingSet ks = kneading_set(w, d + 2);
        FoldingPattern got = pattern_from_kneading(ks, d);
        check_pattern_equal(got, folding_pattern(w));
    }
}

TEST_CASE("pattern rebuilds the tree") {
    Params p = flagship();
    for (int d = 2; d <= 6; ++d) {
        CAPTURE(d);
        auto w = ManifoldWindow::grow(p, d);
        FoldingTree got = tree_from_pattern(folding_pattern(w));
        CHECK(got.same_structure(folding_tree(w)));
    }
}

TEST_CASE("tree rebuilds the kneading set up to honest truncation") {
    Params p = flagship();
    auto w = ManifoldWindow::grow(p, 6);
    KneadingSet want = kneading_set(w, 4);
    KneadingSet got = kneading_from_tree(folding_tree(w), 4);
    CHECK(got.alpha_complete_len == want.alpha_complete_len);
    REQUIRE(got.entries.size() == want.entries.size());
    for (std::size_t i = 0; i < got.entries.size(); ++i) {
        CAPTURE(i);
        CHECK(got.entries[i].n == want.entries[i].n);
        CHECK(got.entries[i].alpha == want.entries[i].alpha);
        check_tails_equal(got.entries[i], want.entries[i]);
    }
}

TEST_CASE("full composition returns to the start") {
    Params p = flagship();
    for (int d = 2; d <= 5; ++d) {
        CAPTURE(d);
        auto w = ManifoldWindow::grow(p, d);
        KneadingSet ks = kneading_set(w, d + 2);
        FoldingPattern pat = pattern_from_kneading(ks, d);
        FoldingTree tree = tree_from_pattern(pat);
        CHECK(tree.same_structure(folding_tree(w)));
        KneadingSet back = kneading_from_tree(tree, d + 2);
        REQUIRE(back.entries.size() == ks.entries.size());
        for (std::size_t i = 0; i < back.entries.size(); ++i) {
            CHECK(back.entries[i].n == ks.entries[i].n);
            CHECK(back.entries[i].alpha == ks.entries[i].alpha);
            check_tails_equal(back.entries[i], ks.entries[i]);
        }
    }
}

TEST_CASE("conversions hold in an irrational field") {
    Params p(Rational(17, 10), Rational(3, 10));
    auto w = ManifoldWindow::grow(p, 6);
    KneadingSet ks = kneading_set(w, 8);
    check_pattern_equal(pattern_from_kneading(ks, 6), folding_pattern(w));
    CHECK(tree_from_pattern(folding_pattern(w)).same_structure(folding_tree(w)));
}

TEST_CASE("short tails are reported, not guessed") {
    auto w = ManifoldWindow::grow(flagship(), 5);
    KneadingSet ks = kneading_set(w, 3);  // too short to rebuild depth 5
    CHECK_THROWS_AS(pattern_from_kneading(ks, 5), TruncationError);
}

TEST_CASE("tampered entry numbers are rejected") {
    auto w = ManifoldWindow::grow(flagship(), 4);
    KneadingSet ks = kneading_set(w, 6);
    REQUIRE(ks.entries.size() >= 2);
    std::swap(ks.entries[0].n, ks.entries[1].n);
    CHECK_THROWS_AS(pattern_from_kneading(ks, 4), DomainError);
}

TEST_CASE("tail length must be positive") {
    auto t = folding_tree(ManifoldWindow::grow(flagship(), 4));
    CHECK_THROWS_AS(kneading_from_tree(t, 0), DomainError);
}

TEST_CASE("a pattern with a broken arrow map is rejected") {
    auto pat = folding_pattern(ManifoldWindow::grow(flagship(), 4));
    pat.arrow.clear();
    CHECK_THROWS_AS(tree_from_pattern(pat), DomainError);
}

} // TEST_SUITE
