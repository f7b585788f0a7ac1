#include "lozi/oracle.hpp"

#include "lozi/error.hpp"
#include "lozi/geometry.hpp"

#include <algorithm>
#include <sstream>

namespace lozi {

std::string VerificationReport::str() const {
    std::ostringstream os;
    os << suite << ": " << (passed() ? "pass" : "FAIL") << " (" << checked << " checked, "
       << inconclusive << " inconclusive";
    if (!failures.empty()) os << ", " << failures.size() << " failures";
    os << ")";
    for (const auto& f : failures) os << "\n  " << f.id << ": " << f.note;
    return os.str();
}

namespace {

void fail(VerificationReport& r, std::string id, std::string note) {
    r.failures.push_back({std::move(id), std::move(note)});
}

GplexResult expected_gplex(OrderResult o) {
    switch (o) {
        case OrderResult::before: return GplexResult::less;
        case OrderResult::after: return GplexResult::greater;
        default: return GplexResult::equal;
    }
}

std::string window_str(const ItinWindow& win) {
    std::ostringstream os;
    os << "lo=" << win.lo << " '" << win.str() << "'";
    return os.str();
}

} // namespace

VerificationReport verify_order_lemma(const ManifoldWindow& w, int pairs, std::uint64_t seed,
                                      int horizon) {
    VerificationReport r;
    r.suite = "order";
    if (pairs < 1) throw DomainError("order suite needs at least one pair");

    const std::vector<WindowPoint> pts = w.sample_points(2 * pairs, seed, horizon);
    for (int k = 0; k < pairs; ++k) {
        const WindowPoint& p = pts[static_cast<std::size_t>(2 * k)];
        const WindowPoint& q = pts[static_cast<std::size_t>(2 * k + 1)];
        const OrderResult o = w.order_compare(p, q);
        const ItinWindow wp = w.itinerary_window(p, horizon);
        const ItinWindow wq = w.itinerary_window(q, horizon);
        const GplexResult g = gplex_compare(wp, wq);
        const GplexResult back = gplex_compare(wq, wp);

        std::ostringstream repro;
        repro << "p=(" << p.arc_e << "," << p.t << ") q=(" << q.arc_e << "," << q.t << ") "
              << window_str(wp) << " vs " << window_str(wq);
        if (g == GplexResult::inconclusive || back == GplexResult::inconclusive) {
            ++r.inconclusive;
            continue;
        }
        if (o != OrderResult::equal && g == GplexResult::equal) {
            // Distinct points whose recorded windows coincide: the horizon
            // is too short to separate them, not a violation.
            ++r.inconclusive;
            continue;
        }
        ++r.checked;
        if (g != expected_gplex(o)) {
            fail(r, "pair-" + std::to_string(k), "order disagrees with gplex: " + repro.str());
            continue;
        }
        const GplexResult mirrored = g == GplexResult::less    ? GplexResult::greater
                                     : g == GplexResult::greater ? GplexResult::less
                                                                 : GplexResult::equal;
        if (back != mirrored) {
            fail(r, "antisym-" + std::to_string(k), "gplex not antisymmetric: " + repro.str());
        }
    }

    // Reflexivity on a sampled point, including the aliased form (e, 1) of
    // an arc endpoint against (e + 1, 0).
    {
        const WindowPoint& p = pts.front();
        ++r.checked;
        if (w.order_compare(p, p) != OrderResult::equal) {
            fail(r, "reflexive-order", "point not order-equal to itself");
        }
        const ItinWindow wp = w.itinerary_window(p, horizon);
        ++r.checked;
        if (gplex_compare(wp, wp) != GplexResult::equal) {
            fail(r, "reflexive-gplex", window_str(wp));
        }
        if (p.arc_e < w.e_max() - 1) {
            const WindowPoint hi = w.make_point(p.arc_e, Rational(1));
            const WindowPoint lo = w.make_point(p.arc_e + 1, Rational(0));
            ++r.checked;
            if (w.order_compare(hi, lo) != OrderResult::equal) {
                fail(r, "alias", "endpoint aliases (e,1) and (e+1,0) not order-equal at e=" +
                                     std::to_string(p.arc_e));
            }
        }
    }

    // E_0 and E_1 bound the seed arc; their windows, built by exact orbit
    // iteration with the points' own time-0 signs, must come out ordered
    // even though both tails eventually agree.
    {
        ItinWindow w0;
        w0.lo = 0;
        w0.syms = orbit_itinerary(w.params(), w.point(0).coords, horizon + 1);
        ItinWindow w1;
        w1.lo = 0;
        w1.syms = orbit_itinerary(w.params(), w.point(1).coords, horizon + 1);
        ++r.checked;
        if (gplex_compare(w0, w1) != GplexResult::less) {
            fail(r, "anchor-pair", window_str(w0) + " vs " + window_str(w1) + " expected less");
        }
    }
    return r;
}

namespace {

struct TwinVerdict {
    Verdict kneading;
    Verdict tree;
    bool disagree() const {
        if (kneading.inconclusive() || tree.inconclusive()) return false;
        return kneading.kind != tree.kind;
    }
};

TwinVerdict judge(const KneadingSet& ks, const FoldingTree& t, const SymbolWord& word) {
    return {admissible_kneading(ks, word), admissible_tree(t, word, WalkMode::right_tail)};
}

/// Smallest '-'-headed prefix of word that still disagrees.
SymbolWord shrink_disagreement(const KneadingSet& ks, const FoldingTree& t,
                               const SymbolWord& word) {
    for (std::size_t len = 1; len < word.size(); ++len) {
        const SymbolWord pref(word.begin(), word.begin() + static_cast<long>(len));
        if (judge(ks, t, pref).disagree()) return pref;
    }
    return word;
}

} // namespace

VerificationReport verify_admissibility_consistency(const ManifoldWindow& w,
                                                    const KneadingSet& ks, const FoldingTree& t,
                                                    int exhaustive_len, int samples,
                                                    std::uint64_t seed, int horizon) {
    VerificationReport r;
    r.suite = "admissibility";
    if (exhaustive_len < 1) throw DomainError("exhaustive length must be at least 1");

    for (int len = 1; len <= exhaustive_len; ++len) {
        const std::uint64_t masks = 1ULL << (len - 1);
        for (std::uint64_t m = 0; m < masks; ++m) {
            SymbolWord word{Sym::minus};
            for (int i = 1; i < len; ++i) {
                word.push_back((m >> (i - 1)) & 1 ? Sym::plus : Sym::minus);
            }
            const TwinVerdict tv = judge(ks, t, word);
            if (tv.kneading.inconclusive() || tv.tree.inconclusive()) {
                ++r.inconclusive;
                continue;
            }
            ++r.checked;
            if (tv.disagree()) {
                const SymbolWord small = shrink_disagreement(ks, t, word);
                const TwinVerdict stv = judge(ks, t, small);
                fail(r, "disagree",
                     "'" + to_string(small) + "' kneading=" + stv.kneading.str() +
                         " tree=" + stv.tree.str());
            }
        }
    }

    // Right tails read off sampled window points are realized by
    // construction: the itinerary window is all '+' before its recorded
    // part, so the suffix from the first non-plus symbol is the genuine
    // tail of a point with all-plus history. Cut to the depth both
    // predicates can police, it must come back accepted twice.
    const std::vector<WindowPoint> pts = w.sample_points(samples, seed, horizon);
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const ItinWindow win = w.itinerary_window(pts[k], horizon);
        std::size_t i0 = 0;
        while (i0 < win.syms.size() && win.syms[i0] == Sym::plus) ++i0;
        if (i0 == win.syms.size()) {
            ++r.checked;  // the point never leaves the plus side: nothing to test
            continue;
        }
        const std::size_t len =
            std::min(win.syms.size() - i0, static_cast<std::size_t>(w.depth()));
        const SymbolWord word(win.syms.begin() + static_cast<long>(i0),
                              win.syms.begin() + static_cast<long>(i0 + len));
        const TwinVerdict tv = judge(ks, t, word);
        ++r.checked;
        if (!tv.kneading.accepted() || !tv.tree.accepted()) {
            fail(r, "sample-" + std::to_string(k),
                 "live tail '" + to_string(word) + "' kneading=" + tv.kneading.str() +
                     " tree=" + tv.tree.str());
        }
    }
    return r;
}

VerificationReport verify_markov(const ManifoldWindow& w) {
    VerificationReport r;
    r.suite = "markov";
    const Params& p = w.params();

    for (long e = w.e_min(); e <= w.e_max(); ++e) {
        const auto img = w.orbit_image(e);
        if (!img) {
            ++r.inconclusive;
            continue;
        }
        ++r.checked;
        if (!(lozi_apply(p, w.point(e).coords) == w.point(*img).coords)) {
            fail(r, "orbit-" + std::to_string(e),
                 "L(E_" + std::to_string(e) + ") is not E_" + std::to_string(*img));
        }
    }

    for (long e = w.e_min(); e < w.e_max(); ++e) {
        const auto kids = w.children(e);
        if (!kids) {
            ++r.inconclusive;
            continue;
        }
        const auto [clo, chi] = *kids;
        const PlanePoint a = lozi_apply(p, w.point(e + 1).coords);  // image low end
        const PlanePoint b = lozi_apply(p, w.point(e).coords);      // image high end
        ++r.checked;
        if (!(a == w.point(clo).coords) || !(b == w.point(chi + 1).coords)) {
            fail(r, "span-" + std::to_string(e),
                 "image of arc " + std::to_string(e) + " does not span points E_" +
                     std::to_string(clo) + "..E_" + std::to_string(chi + 1));
            continue;
        }
        const QuadExt dx = b.x - a.x;
        const QuadExt dy = b.y - a.y;
        const bool use_x = !dx.is_zero();
        QuadExt prev(Rational(0));
        bool ok = true;
        for (long j = clo + 1; j <= chi; ++j) {
            const PlanePoint& q = w.point(j).coords;
            if (!((q.y - a.y) * dx == (q.x - a.x) * dy)) {
                fail(r, "line-" + std::to_string(e),
                     "E_" + std::to_string(j) + " is off the image line of arc " +
                         std::to_string(e));
                ok = false;
                break;
            }
            const QuadExt s = use_x ? (q.x - a.x) / dx : (q.y - a.y) / dy;
            if (!(prev < s)) {
                fail(r, "order-" + std::to_string(e),
                     "E_" + std::to_string(j) + " breaks the parameter order on arc " +
                         std::to_string(e) + "'s image");
                ok = false;
                break;
            }
            prev = s;
        }
        if (ok && chi >= clo + 1) {
            const QuadExt one(Rational(1));
            if (!(prev < one)) {
                fail(r, "order-" + std::to_string(e),
                     "last interior point not before the image end of arc " + std::to_string(e));
            }
        }
    }
    return r;
}

namespace {

bool tails_match(const KneadingEntry& a, const KneadingEntry& b) {
    const std::size_t k = std::min(a.tail.size(), b.tail.size());
    if (!std::equal(a.tail.begin(), a.tail.begin() + static_cast<long>(k), b.tail.begin())) {
        return false;
    }
    if (a.tail.size() == b.tail.size()) return true;
    // The shorter record must admit to being cut off.
    return a.tail.size() < b.tail.size() ? a.truncated : b.truncated;
}

bool sets_match(const KneadingSet& a, const KneadingSet& b, std::string& why) {
    if (a.alpha_complete_len != b.alpha_complete_len) {
        why = "alpha horizons differ";
        return false;
    }
    if (a.entries.size() != b.entries.size()) {
        why = "entry counts differ: " + std::to_string(a.entries.size()) + " vs " +
              std::to_string(b.entries.size());
        return false;
    }
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        const KneadingEntry& x = a.entries[i];
        const KneadingEntry& y = b.entries[i];
        if (x.n != y.n || x.alpha != y.alpha) {
            why = "entry " + std::to_string(i) + " differs in n or alpha";
            return false;
        }
        if (!tails_match(x, y)) {
            why = "entry n=" + std::to_string(x.n) + " tails differ: '" +
                  to_string(x.tail) + "' vs '" + to_string(y.tail) + "'";
            return false;
        }
    }
    return true;
}

bool patterns_match(const FoldingPattern& a, const FoldingPattern& b, std::string& why) {
    if (!a.same_shape(b)) {
        why = "shapes differ: '" + a.render() + "' vs '" + b.render() + "'";
        return false;
    }
    for (std::size_t i = 0; i < a.slots.size(); ++i) {
        if (a.slots[i].has_label != b.slots[i].has_label) {
            why = "slot " + std::to_string(i) + " labelling differs";
            return false;
        }
        if (a.slots[i].has_label && a.slots[i].label != b.slots[i].label) {
            why = "slot " + std::to_string(i) + ": " + a.slots[i].label.str() + " vs " +
                  b.slots[i].label.str();
            return false;
        }
    }
    return true;
}

} // namespace

VerificationReport verify_roundtrips(const ManifoldWindow& w, int tail_len) {
    VerificationReport r;
    r.suite = "roundtrip";
    if (tail_len < w.depth() + 1) {
        // Rebuilding the depth-N pattern reads tail symbol N+1 of entry 0.
        throw DomainError("roundtrip at depth " + std::to_string(w.depth()) +
                          " needs kneading tails of length at least " +
                          std::to_string(w.depth() + 1));
    }

    const KneadingSet ks = kneading_set(w, tail_len);
    const FoldingPattern pat = folding_pattern(w);
    const FoldingTree tree = folding_tree(w);
    std::string why;

    auto check_pattern = [&](const char* id, const FoldingPattern& got) {
        ++r.checked;
        if (!patterns_match(got, pat, why)) fail(r, id, why);
    };
    auto check_tree = [&](const char* id, const FoldingTree& got) {
        ++r.checked;
        if (!got.same_structure(tree)) fail(r, id, "tree structure differs");
    };
    auto check_set = [&](const char* id, const KneadingSet& got) {
        ++r.checked;
        if (!sets_match(got, ks, why)) fail(r, id, why);
    };

    try {
        const FoldingPattern p1 = pattern_from_kneading(ks, w.depth());
        check_pattern("set-to-pattern", p1);

        const FoldingTree t1 = tree_from_pattern(pat);
        check_tree("pattern-to-tree", t1);

        const KneadingSet k1 = kneading_from_tree(tree, tail_len);
        check_set("tree-to-set", k1);

        const FoldingTree t2 = tree_from_pattern(p1);
        check_tree("set-to-tree", t2);

        const KneadingSet k2 = kneading_from_tree(t1, tail_len);
        check_set("pattern-to-set", k2);

        const KneadingSet k3 = kneading_from_tree(tree_from_pattern(p1), tail_len);
        check_set("full-cycle", k3);

        const FoldingTree naked = tree_from_edges(tree.edges());
        check_tree("tree-from-edges", naked);
    } catch (const Error& ex) {
        fail(r, "conversion-throw", ex.what());
    }
    return r;
}

VerificationReport verify_arc_code_order(const ManifoldWindow& w) {
    VerificationReport r;
    r.suite = "arc-order";

    std::vector<long> es;
    for (long e = w.e_min(); e < w.e_max(); ++e) es.push_back(e);

    for (long e : es) {
        ++r.checked;
        const bool odd = w.arc(e).code.size() % 2 != 0;
        if (odd != (e < 0)) {
            fail(r, "side-" + std::to_string(e),
                 "arc " + std::to_string(e) + " with code '" + to_string(w.arc(e).code) +
                     "' sits on the wrong side of arc 0");
        }
    }

    // Quadratic in the arc count; thin out deterministically on big windows.
    const std::size_t stride = es.size() > 256 ? es.size() / 256 + 1 : 1;
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); j += stride) {
            ++r.checked;
            const int got = compare_codes_by_position(w.arc(es[i]).code, w.arc(es[j]).code);
            if (got != -1) {
                fail(r, "pair",
                     "codes '" + to_string(w.arc(es[i]).code) + "' and '" +
                         to_string(w.arc(es[j]).code) + "' misordered (got " +
                         std::to_string(got) + ")");
                if (r.failures.size() > 4) return r;
            }
        }
    }
    return r;
}

} // namespace lozi
