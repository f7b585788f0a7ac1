#include <doctest.h>

#include <lozi/admissible.hpp>
#include <lozi/error.hpp>

using namespace lozi;

namespace {

struct Fixture {
    Params params{Rational(7, 4), Rational(1, 2)};
    ManifoldWindow window = ManifoldWindow::grow(params, 9);
    KneadingSet ks = kneading_set(window, 16);
    FoldingTree tree = folding_tree(window);
};

Fixture& fx() {
    static Fixture f;
    return f;
}

} // namespace

TEST_SUITE("admissible") {

TEST_CASE("the word -++- is not a right tail") {
    auto w = word_from_string("-++-");
    Verdict k = admissible_kneading(fx().ks, w);
    CHECK(k.rejected());
    CHECK(k.has_at);
    CHECK(k.at == -1);     // the tail of entry n = -1 is exceeded
    CHECK(k.position == 3);

    Verdict t = admissible_tree(fx().tree, w);
    CHECK(t.rejected());
    CHECK(t.has_at);
    CHECK(t.at == -3);     // the walk dies at vertex -3
}

TEST_CASE("short admissible words") {
    for (const char* s : {"-", "-+-", "-++++", "--------"}) {
        CAPTURE(s);
        auto w = word_from_string(s);
        CHECK(admissible_kneading(fx().ks, w).accepted());
        CHECK(admissible_tree(fx().tree, w).accepted());
    }
}

TEST_CASE("window walk answers a weaker question") {
    // -++- never starts a right tail, yet it does occur inside itineraries;
    // the window walk finds such an occurrence and accepts.
    auto w = word_from_string("-++-");
    Verdict v = admissible_tree(fx().tree, w, WalkMode::window);
    CHECK(v.accepted());
    // Words that begin with + have no right-tail reading at all, but the
    // window walk handles them.
    CHECK(admissible_tree(fx().tree, word_from_string("++-"), WalkMode::window).accepted());
}

TEST_CASE("exhaustive agreement at small lengths") {
    for (int len = 1; len <= 6; ++len) {
        for (unsigned m = 0; m < (1u << (len - 1)); ++m) {
            SymbolWord w{Sym::minus};
            for (int k = 0; k < len - 1; ++k)
                w.push_back((m >> k) & 1 ? Sym::plus : Sym::minus);
            Verdict a = admissible_kneading(fx().ks, w);
            Verdict b = admissible_tree(fx().tree, w);
            CAPTURE(to_string(w));
            CHECK_FALSE(a.inconclusive());
            CHECK_FALSE(b.inconclusive());
            CHECK(a.accepted() == b.accepted());
        }
    }
}

TEST_CASE("inputs outside the contract throw") {
    CHECK_THROWS_AS(admissible_kneading(fx().ks, SymbolWord{}), DomainError);
    CHECK_THROWS_AS(admissible_kneading(fx().ks, word_from_string("+--")), DomainError);
    CHECK_THROWS_AS(admissible_kneading(fx().ks, word_from_string("-0-")), DomainError);
    CHECK_THROWS_AS(admissible_tree(fx().tree, SymbolWord{}), DomainError);
    CHECK_THROWS_AS(admissible_tree(fx().tree, word_from_string("+--")), DomainError);
    CHECK_THROWS_AS(admissible_tree(fx().tree, word_from_string("-0-")), DomainError);
}

TEST_CASE("shallow data is inconclusive, not wrong") {
    // At depth 4 the tree cannot follow -++++ to its end, and says so.
    Params p(Rational(7, 4), Rational(1, 2));
    auto w4 = ManifoldWindow::grow(p, 4);
    auto t4 = folding_tree(w4);
    auto ks4 = kneading_set(w4, 6);
    auto w = word_from_string("-++++");
    CHECK(admissible_kneading(ks4, w).accepted());
    Verdict v = admissible_tree(t4, w);
    CHECK(v.inconclusive());
    CHECK(v.str() == "inconclusive (walk leaves the known tree at vertex 5)");

    // Words longer than the recorded alphas can police are flagged too.
    SymbolWord longing{Sym::minus};
    for (int k = 0; k < 11; ++k) longing.push_back(Sym::minus);
    CHECK(admissible_kneading(ks4, longing).inconclusive());
}

TEST_CASE("itinerary prefixes of window points are accepted") {
    const auto& w = fx().window;
    for (const auto& wp : w.sample_points(15, 5, 12)) {
        ItinWindow iw = w.itinerary_window(wp, 12);
        // The right tail starts at the first non-plus symbol on record.
        std::size_t start = 0;
        while (start < iw.syms.size() && iw.syms[start] == Sym::plus) ++start;
        if (start == iw.syms.size()) continue;
        std::size_t len = std::min(iw.syms.size() - start, std::size_t(9));
        SymbolWord word(iw.syms.begin() + static_cast<long>(start),
                        iw.syms.begin() + static_cast<long>(start + len));
        CAPTURE(to_string(word));
        CHECK(admissible_kneading(fx().ks, word).accepted());
        CHECK(admissible_tree(fx().tree, word).accepted());
    }
}

} // TEST_SUITE
