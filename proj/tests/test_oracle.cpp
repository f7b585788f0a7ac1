#include <doctest.h>

#include <lozi/error.hpp>
#include <lozi/oracle.hpp>

#include <string>

using namespace lozi;

namespace {

void check_all_suites(const Params& p) {
    auto w = ManifoldWindow::grow(p, 6);
    KneadingSet ks = kneading_set(w, 16);
    FoldingTree t = folding_tree(w);

    VerificationReport order = verify_order_lemma(w, 100, 1);
    CAPTURE(order.str());
    CHECK(order.passed());
    CHECK(order.checked >= 100);

    VerificationReport adm = verify_admissibility_consistency(w, ks, t, 6, 100, 1);
    CAPTURE(adm.str());
    CHECK(adm.passed());
    CHECK(adm.checked >= 63);  // at least the exhaustive enumeration settles

    VerificationReport markov = verify_markov(w);
    CAPTURE(markov.str());
    CHECK(markov.passed());
    CHECK(markov.checked > 0);

    VerificationReport rt = verify_roundtrips(w, 8);
    CAPTURE(rt.str());
    CHECK(rt.passed());
    CHECK(rt.checked >= 5);

    VerificationReport arcs = verify_arc_code_order(w);
    CAPTURE(arcs.str());
    CHECK(arcs.passed());
    CHECK(arcs.checked > 0);
}

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("all suites pass on the rational-field parameters") {
    check_all_suites(Params(Rational(7, 4), Rational(1, 2)));
}

TEST_CASE("all suites pass in an irrational field") {
    check_all_suites(Params(Rational(17, 10), Rational(3, 10)));
}

TEST_CASE("reports are deterministic for a fixed seed") {
    Params p(Rational(7, 4), Rational(1, 2));
    auto w = ManifoldWindow::grow(p, 5);
    CHECK(verify_order_lemma(w, 40, 77).str() == verify_order_lemma(w, 40, 77).str());
    KneadingSet ks = kneading_set(w, 12);
    FoldingTree t = folding_tree(w);
    CHECK(verify_admissibility_consistency(w, ks, t, 5, 40, 9).str() ==
          verify_admissibility_consistency(w, ks, t, 5, 40, 9).str());
}

TEST_CASE("a corrupted kneading tail is caught") {
    Params p(Rational(7, 4), Rational(1, 2));
    auto w = ManifoldWindow::grow(p, 6);
    KneadingSet ks = kneading_set(w, 16);
    FoldingTree t = folding_tree(w);

    KneadingEntry* root = nullptr;
    for (auto& e : ks.entries)
        if (e.n == 0) root = &e;
    REQUIRE(root != nullptr);
    REQUIRE(root->tail.size() > 1);
    root->tail[1] = opposite(root->tail[1]);

    VerificationReport r = verify_admissibility_consistency(w, ks, t, 6, 50, 1);
    CHECK_FALSE(r.passed());
    REQUIRE_FALSE(r.failures.empty());
    CHECK_FALSE(r.failures.front().id.empty());
    CHECK_FALSE(r.failures.front().note.empty());
    // The report text carries the failure forward.
    CHECK(r.str().find("failure") != std::string::npos);
}

TEST_CASE("roundtrip verification needs long enough tails") {
    Params p(Rational(7, 4), Rational(1, 2));
    auto w = ManifoldWindow::grow(p, 6);
    CHECK_THROWS_AS(verify_roundtrips(w, 6), DomainError);
    CHECK_NOTHROW(verify_roundtrips(w, 7));
}

} // TEST_SUITE
