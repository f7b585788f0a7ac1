// Acceptance gate: nine end-to-end criteria, one line of output each.
// Every numeric comparison is exact unless a tolerance is named right here:
//   k_depth4_budget   wall-clock budget for rebuilding the depth-4 window
//   k_attractor_bound coordinate bound that counts as "stayed bounded"
// Exit status is the number of failed criteria.

#include <lozi/admissible.hpp>
#include <lozi/attractor.hpp>
#include <lozi/error.hpp>
#include <lozi/oracle.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace lozi;

namespace {

constexpr double k_depth4_budget = 1.0;     // seconds
constexpr double k_attractor_bound = 10.0;  // |x|, |y| ceiling after transient

struct Checker {
    bool ok = true;
    std::string first;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            first = what;
        }
    }
};

Params flagship() { return Params(Rational(7, 4), Rational(1, 2)); }

bool criterion_depth4_window(Checker& c) {
    const auto start = std::chrono::steady_clock::now();
    Params p = flagship();
    auto w = ManifoldWindow::grow(p, 4);

    struct PointRow {
        long e;
        const char* label;
        const char* x;
        const char* y;
    };
    const PointRow points[] = {
        {-5, "T_0^4", "-5/6", "-1/3"},  {-4, "G_-2", "0", "-2/15"},
        {-3, "T_-1", "5/9", "0"},       {-2, "G_-1", "0", "10/51"},
        {-1, "T_0^2", "-4/3", "2/3"},   {0, "G_0", "0", "1/3"},
        {1, "T_0", "4/3", "0"},         {2, "G_1", "0", "-4/9"},
        {3, "T_0^3", "-2/3", "-2/3"},   {4, "G_2", "0", "-122/285"},
        {5, "T_1", "61/51", "0"},       {6, "T_-1^2", "1/36", "5/18"},
        {7, "T_2", "13/15", "0"},       {8, "G_3", "0", "-130/597"},
        {9, "T_0^5", "-19/24", "-5/12"},
    };
    c.expect(w.point_count() == 15, "point count");
    c.expect(w.e_min() == -5 && w.e_max() == 9, "index range");
    for (const auto& row : points) {
        const BasicPoint& bp = w.point(row.e);
        c.expect(bp.label.str() == row.label, std::string("label of E_") + std::to_string(row.e));
        c.expect(bp.coords.x == p.q(Rational::parse(row.x)) &&
                     bp.coords.y == p.q(Rational::parse(row.y)),
                 std::string("coordinates of ") + row.label);
    }

    const char* codes[] = {"---", "--+", "-++", "-+-", "-",    "",     "-+",
                           "--",  "-+--", "-+-+", "-+++", "--++", "---+", "----"};
    for (long e = -5; e <= 8; ++e)
        c.expect(to_string(w.arc(e).code) == codes[e + 5],
                 "code of arc " + std::to_string(e));

    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(elapsed < k_depth4_budget, "runtime " + std::to_string(elapsed) + "s");
    return c.ok;
}

bool criterion_pattern_string(Checker& c) {
    auto w = ManifoldWindow::grow(flagship(), 4);
    c.expect(folding_pattern(w).render() == "-T-G+T+G-T-G+X+T+G-T-G+T+T+T+G-T-",
             "rendered pattern differs");
    return c.ok;
}

bool criterion_tree(Checker& c) {
    auto w = ManifoldWindow::grow(flagship(), 4);
    FoldingTree t = folding_tree(w);
    const std::vector<std::pair<long, long>> edges = {
        {0, 0},  {0, -1}, {-1, 1}, {-1, 2}, {1, -2}, {1, -3}, {2, -4},
        {2, -5}, {-2, 3}, {-2, 4}, {-3, 5}, {-4, 6}, {-5, 7}, {-5, 8},
    };
    c.expect(t.edges() == edges, "edge list differs");
    const std::vector<std::vector<long>> levels = {
        {0}, {-1}, {1, 2}, {-2, -3, -4, -5}, {3, 4, 5, 6, 7, 8}};
    c.expect(t.levels == levels, "levels differ");

    auto rows = tree_markers(t);
    const char* expect_rows[] = {"+0 T", "G --1 T", "+1 G -2 T",
                                 "--2 G +-3 T +-4 G --5 T",
                                 "-3 G +4 T +5 T +6 T +7 G -8 T"};
    c.expect(rows.size() == 5, "marker row count");
    for (std::size_t i = 0; i < rows.size() && i < 5; ++i)
        c.expect(rows[i].str() == expect_rows[i], "marker row " + std::to_string(i));
    return c.ok;
}

bool criterion_kneading(Checker& c) {
    Params p = flagship();
    auto w = ManifoldWindow::grow(p, 6);
    KneadingSet ks = kneading_set(w, 6);

    struct Row {
        long n;
        const char* alpha;
        const char* tail;
    };
    // tail of n=1 checked on its first two symbols, the others in full
    const Row rows[] = {{0, "", "+-----"}, {-1, "-", "+++--"}, {1, "-+", "+-"}};
    for (const auto& row : rows) {
        const KneadingEntry* e = ks.find(row.n);
        c.expect(e != nullptr, "entry n=" + std::to_string(row.n) + " missing");
        if (!e) continue;
        c.expect(to_string(e->alpha) == row.alpha, "alpha of n=" + std::to_string(row.n));
        std::string tail = to_string(e->tail);
        c.expect(tail.substr(0, std::string(row.tail).size()) == row.tail,
                 "tail of n=" + std::to_string(row.n) + " is '" + tail + "'");
    }

    // From L^2(Z) on, the orbit rides the stable line 2x + y + 2 = 0.
    PlanePoint q = lozi_apply(p, lozi_apply(p, point_z(p)));
    for (int k = 0; k < 10; ++k) {
        c.expect(p.q(2) * q.x + q.y + p.q(2) == QuadExt(Rational(0)),
                 "stable line violated at iterate " + std::to_string(k));
        q = lozi_apply(p, q);
    }
    return c.ok;
}

bool criterion_roundtrips(Checker& c) {
    Params p = flagship();
    for (int d = 2; d <= 6; ++d) {
        auto w = ManifoldWindow::grow(p, d);
        VerificationReport r = verify_roundtrips(w, d + 2);
        c.expect(r.passed(), "depth " + std::to_string(d) + ": " + r.str());
        c.expect(r.checked >= 5, "depth " + std::to_string(d) + " ran too few legs");
    }
    return c.ok;
}

bool criterion_admissibility(Checker& c) {
    Params p = flagship();
    auto w = ManifoldWindow::grow(p, 9);
    KneadingSet ks = kneading_set(w, 16);
    FoldingTree t = folding_tree(w);

    VerificationReport r = verify_admissibility_consistency(w, ks, t, 8, 100, 1, 20);
    c.expect(r.passed(), r.str());
    c.expect(r.checked >= 255, "fewer conclusive checks than the enumeration alone");

    c.expect(admissible_kneading(ks, word_from_string("-++-")).rejected() &&
                 admissible_tree(t, word_from_string("-++-")).rejected(),
             "-++- not rejected");
    for (const char* s : {"-+-", "-++++"})
        c.expect(admissible_kneading(ks, word_from_string(s)).accepted() &&
                     admissible_tree(t, word_from_string(s)).accepted(),
                 std::string(s) + " not accepted");
    return c.ok;
}

bool criterion_order(Checker& c) {
    auto w = ManifoldWindow::grow(flagship(), 6);
    VerificationReport r = verify_order_lemma(w, 1000, 1);
    c.expect(r.passed(), r.str());
    c.expect(r.checked >= 900, "too few conclusive pairs: " + std::to_string(r.checked));
    return c.ok;
}

bool criterion_markov(Checker& c) {
    auto w = ManifoldWindow::grow(flagship(), 6);
    VerificationReport r = verify_markov(w);
    c.expect(r.passed(), r.str());
    // 27 basic-point images plus 26 non-leaf arc spans settle exactly.
    c.expect(r.checked == 53, "conclusive check count " + std::to_string(r.checked));
    return c.ok;
}

bool criterion_geometry_gates(Checker& c) {
    c.expect(in_set_s(Rational(17, 10), Rational(3, 10)), "(17/10, 3/10) should be in S");
    c.expect(!in_set_s(Rational(7, 4), Rational(1, 2)), "(7/4, 1/2) should be outside S");
    c.expect(!in_set_s(Rational(17, 10), Rational(1, 2)), "(17/10, 1/2) should be outside S");
    c.expect(trapping_check(Params(Rational(17, 10), Rational(3, 10))),
             "triangle not trapped at (17/10, 3/10)");

    RasterOptions opt;
    opt.iterations = 200000;
    opt.transient = 1000;

    try {
        Raster r = render_attractor(Params(Rational(17, 10), Rational(1, 2)), opt);
        c.expect(r.plotted > 0, "nothing plotted at (17/10, 1/2)");
        c.expect(r.max_abs_coord < k_attractor_bound,
                 "orbit reached |coord| = " + std::to_string(r.max_abs_coord));
    } catch (const DivergenceError& e) {
        c.expect(false, std::string("diverged at (17/10, 1/2): ") + e.what());
    }

    Raster rs = render_attractor(Params(Rational(17, 10), Rational(3, 10)), opt);
    c.expect(rs.out_of_bounds == 0,
             std::to_string(rs.out_of_bounds) + " points left the triangle box");
    c.expect(rs.plotted == opt.iterations - opt.transient, "plot count");
    return c.ok;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<bool(Checker&)> run;
    };
    const Criterion criteria[] = {
        {"depth-4 window: points, order, coordinates, arc codes", criterion_depth4_window},
        {"depth-4 folding pattern string", criterion_pattern_string},
        {"depth-4 folding tree: edges, levels, markers", criterion_tree},
        {"kneading data by exact iteration; stable line", criterion_kneading},
        {"conversion round-trips at depths 2-6", criterion_roundtrips},
        {"admissibility predicates agree; spot words", criterion_admissibility},
        {"intrinsic order vs symbolic order on sampled pairs", criterion_order},
        {"Markov property of the depth-6 window", criterion_markov},
        {"parameter gates and attractor bounds", criterion_geometry_gates},
    };

    int failed = 0;
    int id = 0;
    for (const auto& cr : criteria) {
        ++id;
        Checker c;
        bool ok = false;
        std::string why;
        try {
            ok = cr.run(c);
            why = c.first;
        } catch (const std::exception& e) {
            ok = false;
            why = std::string("exception: ") + e.what();
        }
        std::ostringstream line;
        line << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << " - " << cr.name;
        if (!ok) {
            line << " [" << why << "]";
            ++failed;
        }
        std::cout << line.str() << "\n";
    }
    std::cout << (failed == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failed) + " criteria failed")
              << "\n";
    return failed;
}
