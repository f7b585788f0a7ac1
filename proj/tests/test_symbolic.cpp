#include <doctest.h>

#include <lozi/error.hpp>
#include <lozi/symbolic.hpp>

#include <string>
#include <vector>

using namespace lozi;

namespace {

Params flagship() { return Params(Rational(7, 4), Rational(1, 2)); }

SymbolWord w(const char* s) { return word_from_string(s); }

} // namespace

TEST_SUITE("symbolic") {

TEST_CASE("parity-lexicographical comparison") {
    // Even number of + in the common prefix: plain order, - < 0 < +.
    CHECK(plex_compare(w("++-"), w("+++")) == PlexResult::less);
    CHECK(plex_compare(w("-"), w("+")) == PlexResult::less);
    CHECK(plex_compare(w("-0"), w("-+")) == PlexResult::less);
    // Odd number of +: reversed at the difference.
    CHECK(plex_compare(w("-+-"), w("-++")) == PlexResult::greater);
    CHECK(plex_compare(w("+-"), w("++")) == PlexResult::greater);
    CHECK(plex_compare(w("-+"), w("-+")) == PlexResult::equal);
    // A strict prefix cannot be ordered against its extension.
    CHECK(plex_compare(w("-"), w("-+")) == PlexResult::incomparable_prefix);
    CHECK(plex_compare(w("-++"), w("-")) == PlexResult::incomparable_prefix);
}

TEST_CASE("generalized order on itinerary windows") {
    auto win = [](long lo, const char* s) { return ItinWindow{lo, word_from_string(s)}; };
    CHECK(gplex_compare(win(1, "-++"), win(1, "-+-")) == GplexResult::greater);
    CHECK(gplex_compare(win(1, "-+-"), win(1, "-++")) == GplexResult::less);
    CHECK(gplex_compare(win(1, "-+"), win(1, "-+")) == GplexResult::equal);
    // Left history matters: a window reaching further left can settle the
    // order even when the overlap agrees.
    CHECK(gplex_compare(win(-1, "-++++"), win(-1, "+++++")) == GplexResult::greater);
    // The axis symbol sits between - and +.
    CHECK(gplex_compare(win(0, "0+-----"), win(0, "+------")) == GplexResult::less);
    // Running out of recorded symbols is not evidence.
    CHECK(gplex_compare(win(1, "-+"), win(1, "-++")) == GplexResult::inconclusive);
    CHECK(gplex_compare(win(1, "-++"), win(0, "+-++")) == GplexResult::inconclusive);
}

TEST_CASE("arc codes order by position") {
    // Window order of the depth-4 arcs, left to right.
    const char* order[] = {"---", "--+", "-++", "-+-", "-", "",
                           "-+",  "--",  "-+--", "-+-+", "-+++", "--++", "---+", "----"};
    const int n = 14;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            CAPTURE(i);
            CAPTURE(j);
            int expect = i < j ? -1 : (i > j ? 1 : 0);
            CHECK(compare_codes_by_position(w(order[i]), w(order[j])) == expect);
        }
    }
}

TEST_CASE("entry numbers recovered from alphas") {
    std::vector<SymbolWord> alphas = {w(""), w("-"), w("-+"), w("--"), w("-+-"), w("---")};
    CHECK(number_kneading_alphas(alphas) == std::vector<long>{0, -1, 1, 2, -2, -3});

    std::vector<SymbolWord> no_empty = {w("-"), w("-+")};
    CHECK_THROWS_AS(number_kneading_alphas(no_empty), DomainError);
    std::vector<SymbolWord> dup = {w(""), w("-"), w("-")};
    CHECK_THROWS_AS(number_kneading_alphas(dup), DomainError);
}

TEST_CASE("kneading set at depth 6") {
    auto win = ManifoldWindow::grow(flagship(), 6);
    KneadingSet ks = kneading_set(win, 6);
    CHECK(ks.entries.size() == 22);
    CHECK(ks.alpha_complete_len == 5);
    CHECK(ks.tail_len == 6);
    for (std::size_t i = 1; i < ks.entries.size(); ++i)
        CHECK(ks.entries[i - 1].n < ks.entries[i].n);

    struct Golden {
        long n;
        const char* alpha;
        const char* tail;
    };
    const Golden golden[] = {
        {-3, "---", "+-+-+-"}, {-2, "-+-", "+-+---"}, {-1, "-", "+++---"},
        {0, "", "+-----"},     {1, "-+", "+---+-"},   {2, "--", "+-+-+-"},
    };
    for (const auto& g : golden) {
        CAPTURE(g.n);
        const KneadingEntry* e = ks.find(g.n);
        REQUIRE(e != nullptr);
        CHECK(to_string(e->alpha) == g.alpha);
        CHECK(to_string(e->tail) == g.tail);
        CHECK_FALSE(e->truncated);
    }
    CHECK(ks.find(999) == nullptr);
}

TEST_CASE("kneading tails are the exact turning point itineraries") {
    auto win = ManifoldWindow::grow(flagship(), 4);
    KneadingSet ks = kneading_set(win, 8);
    Params p = win.params();
    for (const auto& e : ks.entries) {
        // T_n = L(G_{-n}); its itinerary must reproduce the stored tail.
        long m = -e.n;
        bool found = false;
        for (long i = win.e_min(); i <= win.e_max(); ++i) {
            const BasicPoint& bp = win.point(i);
            if (bp.label == Label::gluing(m)) {
                SymbolWord itin =
                    orbit_itinerary(p, lozi_apply(p, bp.coords), static_cast<int>(e.tail.size()));
                CHECK(to_string(itin) == to_string(e.tail));
                found = true;
            }
        }
        CAPTURE(e.n);
        CHECK(found);
    }
}

TEST_CASE("folding pattern at depth 4") {
    auto win = ManifoldWindow::grow(flagship(), 4);
    FoldingPattern pat = folding_pattern(win);
    CHECK(pat.render() == "-T-G+T+G-T-G+X+T+G-T-G+T+T+T+G-T-");
    CHECK(pat.slots.size() == 16);  // 15 basic points plus the X slot
    CHECK(pat.e_min() == -5);
    CHECK(pat.e_max() == 9);
    CHECK(pat.x_slot() == 6);
    CHECK(pat.slot_of_e(0) == 5);
    CHECK(pat.slot_of_e(1) == 7);
    CHECK(pat.e_of_slot(5) == 0);
    CHECK_THROWS_AS(pat.e_of_slot(pat.x_slot()), DomainError);
    CHECK(pat.same_shape(pat));

    // The arrow map is exactly the window's orbit map.
    CHECK(pat.arrow.size() == 9);
    for (const auto& [from, to] : pat.arrow) {
        auto img = win.orbit_image(from);
        REQUIRE(img.has_value());
        CHECK(*img == to);
    }
}

TEST_CASE("folding tree at depth 4") {
    auto win = ManifoldWindow::grow(flagship(), 4);
    FoldingTree t = folding_tree(win);
    CHECK(t.depth() == 4);

    const std::vector<std::pair<long, long>> golden_edges = {
        {0, 0},   {0, -1},  {-1, 1},  {-1, 2},  {1, -2},  {1, -3},  {2, -4},
        {2, -5},  {-2, 3},  {-2, 4},  {-3, 5},  {-4, 6},  {-5, 7},  {-5, 8},
    };
    CHECK(t.edges() == golden_edges);

    const std::vector<std::vector<long>> golden_levels = {
        {0}, {-1}, {1, 2}, {-2, -3, -4, -5}, {3, 4, 5, 6, 7, 8}};
    CHECK(t.levels == golden_levels);

    CHECK(t.at(0).sign == Sym::plus);
    CHECK(t.at(-1).sign == Sym::minus);
    CHECK(t.at(5).sign == Sym::plus);
    CHECK(t.at(8).sign == Sym::minus);
    CHECK(to_string(t.at(-2).code) == "-+-");
    CHECK(t.at(0).children_known);
    CHECK_FALSE(t.at(3).children_known);
    CHECK(t.at(-5).children == std::vector<long>{7, 8});
    CHECK_FALSE(t.has(99));
    CHECK_THROWS_AS(t.at(99), DomainError);

    // Every vertex is an arc of the window with matching sign and code.
    for (const auto& [label, v] : t.verts) {
        CHECK(v.sign == win.arc(label).sign);
        CHECK(v.code == win.arc(label).code);
    }
}

TEST_CASE("marker rows at depth 4") {
    auto win = ManifoldWindow::grow(flagship(), 4);
    auto rows = tree_markers(folding_tree(win));
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].str() == "+0 T");
    CHECK(rows[1].str() == "G --1 T");
    CHECK(rows[2].str() == "+1 G -2 T");
    CHECK(rows[3].str() == "--2 G +-3 T +-4 G --5 T");
    CHECK(rows[4].str() == "-3 G +4 T +5 T +6 T +7 G -8 T");
    CHECK(rows[1].leading_gluing);
    CHECK_FALSE(rows[0].leading_gluing);
}

TEST_CASE("tree rebuilt from its naked edge list") {
    auto win = ManifoldWindow::grow(flagship(), 5);
    FoldingTree direct = folding_tree(win);
    FoldingTree rebuilt = tree_from_edges(direct.edges());
    CHECK(rebuilt.same_structure(direct));
    for (const auto& [label, v] : direct.verts) {
        CAPTURE(label);
        CHECK(rebuilt.at(label).sign == v.sign);
        CHECK(rebuilt.at(label).level == v.level);
    }
}

TEST_CASE("symbol words") {
    CHECK(to_string(w("-+0")) == "-+0");
    CHECK(w("").empty());
    CHECK(has_axis(w("+0-")));
    CHECK_FALSE(has_axis(w("+--")));
    CHECK_THROWS_AS(word_from_string("+a-"), ParseError);
    CHECK(opposite(Sym::plus) == Sym::minus);
    CHECK(opposite(Sym::axis) == Sym::axis);
    ItinWindow iw{-2, w("-+--")};
    CHECK(iw.hi() == 1);
    CHECK(iw.at(-2) == Sym::minus);
    CHECK(iw.at(-5) == Sym::plus);  // implicit history
    CHECK(iw.at(1) == Sym::minus);
}

} // TEST_SUITE
