#include "lozi/admissible.hpp"

#include "lozi/error.hpp"

#include <algorithm>
#include <optional>

namespace lozi {

std::string Verdict::str() const {
    std::string s;
    switch (kind) {
        case Kind::accepted: s = "accepted"; break;
        case Kind::rejected: s = "rejected"; break;
        case Kind::inconclusive: s = "inconclusive"; break;
    }
    if (!detail.empty()) s += " (" + detail + ")";
    return s;
}

namespace {

bool is_prefix(const SymbolWord& p, const SymbolWord& w) {
    if (p.size() >= w.size()) return false;
    return std::equal(p.begin(), p.end(), w.begin());
}

void check_word(const SymbolWord& w) {
    if (w.empty()) throw DomainError("admissibility test needs a nonempty word");
    for (Sym s : w) {
        if (s == Sym::axis) throw DomainError("axis symbols are not testable");
    }
}

/// One endpoint of the arc reached by the certification walk, addressed
/// into kneading data: the gluing point whose image starts entry n's tail,
/// or the orbit point L^j(T_n) read off that tail.
struct EndMark {
    enum class Kind { unknown, gluing, orbit };
    Kind kind = Kind::unknown;
    long n = 0;
    std::size_t j = 0;  // orbit only
};

enum class WalkOutcome { open, certified, rejected };

/// Walk the word through the arcs of the manifold using only kneading
/// tails. The two endpoints of the current arc are tracked as marks; their
/// image signs decide each step exactly: equal signs mean the image stays
/// in one half-plane (the next symbol is forced), different signs mean the
/// image crosses the axis (both continuations exist). Comparisons alone
/// miss the forced case when the word turns off an arc that never splits.
/// Returns certified when every step was decided, rejected (filling `out`)
/// when a forced sign is violated, open when the marks run out of data.
WalkOutcome forced_sign_walk(const KneadingSet& ks, const SymbolWord& w, Verdict& out) {
    if (!ks.find(0)) return WalkOutcome::open;

    auto image_sign = [&ks](const EndMark& m) -> std::optional<Sym> {
        switch (m.kind) {
            case EndMark::Kind::unknown: return std::nullopt;
            case EndMark::Kind::gluing: return Sym::plus;  // the image is a turning point
            case EndMark::Kind::orbit: {
                const KneadingEntry* e = ks.find(m.n);
                if (!e || m.j + 1 >= e->tail.size()) return std::nullopt;
                // An axis hit anywhere up to the wanted index makes the
                // later symbols unreliable.
                for (std::size_t k = 0; k <= m.j + 1; ++k) {
                    if (e->tail[k] == Sym::axis) return std::nullopt;
                }
                return e->tail[m.j + 1];
            }
        }
        return std::nullopt;
    };
    auto advance = [](const EndMark& m) -> EndMark {
        switch (m.kind) {
            case EndMark::Kind::unknown: break;
            case EndMark::Kind::gluing: return {EndMark::Kind::orbit, m.n, 0};
            case EndMark::Kind::orbit: return {EndMark::Kind::orbit, m.n, m.j + 1};
        }
        return {};
    };

    EndMark a{EndMark::Kind::gluing, 0, 0};  // the gluing end of the seed arc
    EndMark b{EndMark::Kind::orbit, 0, 0};   // the turning end, T_0 itself
    SymbolWord prefix;
    prefix.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Sym s = w[i];
        const KneadingEntry* split = nullptr;
        for (const auto& ent : ks.entries) {
            if (ent.alpha == prefix) {
                split = &ent;
                break;
            }
        }
        const std::optional<Sym> sa = image_sign(a);
        const std::optional<Sym> sb = image_sign(b);

        if (split || (sa && sb && *sa != *sb)) {
            // The arc's image crosses the axis: both continuations exist.
            // The new arc runs from the crossing to the image of the
            // endpoint that lies on side s.
            EndMark side;
            if (sa && *sa == s) {
                side = advance(a);
            } else if (sb && *sb == s) {
                side = advance(b);
            } else if (sa && sb) {
                return WalkOutcome::open;  // both images off side s: data disagree
            } else if (sa || sb) {
                side = advance(sa ? b : a);  // the undetermined endpoint is on side s
            }
            a = split ? EndMark{EndMark::Kind::gluing, split->n, 0} : EndMark{};
            b = side;
        } else if (sa && sb) {
            // Equal endpoint image signs: the image stays strictly in one
            // half-plane, so the arc has a single continuation.
            if (*sa != s) {
                out.kind = Verdict::Kind::rejected;
                out.position = static_cast<long>(i);
                out.detail = "arc '" + to_string(prefix) + "' maps into one half-plane: position " +
                             std::to_string(i) + " must be '" + std::string(1, to_char(*sa)) + "'";
                return WalkOutcome::rejected;
            }
            a = advance(a);
            b = advance(b);
        } else if (sa || sb) {
            // One image sign known. If it matches s the step is safe either
            // way: with a hidden split the matching image still bounds the
            // side-s child; without one it is the forced sign.
            const Sym known = sa ? *sa : *sb;
            if (known != s) return WalkOutcome::open;  // cannot tell forced from split
            a = advance(a);
            b = advance(b);
        } else {
            return WalkOutcome::open;  // both endpoints starved
        }
        prefix.push_back(s);
    }
    return WalkOutcome::certified;
}

} // namespace

Verdict admissible_kneading(const KneadingSet& ks, const SymbolWord& w) {
    check_word(w);
    if (w[0] != Sym::minus) {
        throw DomainError("a right tail starts with '-'; use the window walk otherwise");
    }

    Verdict v;
    bool starved = false;
    long starved_n = 0;
    for (const auto& ent : ks.entries) {
        if (!is_prefix(ent.alpha, w)) continue;
        // w = alpha, turning symbol, u...; u races the recorded tail.
        const std::size_t off = ent.alpha.size() + 1;
        SymbolWord u(w.begin() + static_cast<long>(off), w.end());
        SymbolWord tail = ent.tail;
        tail.erase(std::find(tail.begin(), tail.end(), Sym::axis), tail.end());

        const PlexResult r = plex_compare(u, tail);
        if (r == PlexResult::greater) {
            std::size_t k = 0;
            while (k < u.size() && k < tail.size() && u[k] == tail[k]) ++k;
            v.kind = Verdict::Kind::rejected;
            v.has_at = true;
            v.at = ent.n;
            v.position = static_cast<long>(off + k);
            v.detail = "exceeds the tail of entry n=" + std::to_string(ent.n) +
                       " at position " + std::to_string(v.position);
            return v;
        }
        if (r == PlexResult::incomparable_prefix && u.size() > tail.size()) {
            starved = true;
            starved_n = ent.n;
        }
    }

    // The comparisons only police arcs that split; the walk below also
    // pins the words down along arcs that do not, and a complete walk is
    // an acceptance certificate in its own right.
    switch (forced_sign_walk(ks, w, v)) {
        case WalkOutcome::rejected: return v;
        case WalkOutcome::certified:
            v.kind = Verdict::Kind::accepted;
            return v;
        case WalkOutcome::open: break;
    }

    if (starved) {
        v.kind = Verdict::Kind::inconclusive;
        v.has_at = true;
        v.at = starved_n;
        v.detail = "runs past the recorded tail of entry n=" + std::to_string(starved_n);
        return v;
    }
    if (static_cast<long>(w.size()) - 2 > ks.alpha_complete_len) {
        v.kind = Verdict::Kind::inconclusive;
        v.detail = "word length " + std::to_string(w.size()) +
                   " exceeds the reliable alpha horizon " +
                   std::to_string(ks.alpha_complete_len + 2);
        return v;
    }
    v.kind = Verdict::Kind::accepted;
    return v;
}

namespace {

/// One walk attempt from a given start vertex. Returns accepted if the
/// whole word is consumed, rejected on a dead end, inconclusive when the
/// walk leaves the known tree.
Verdict walk_from(const FoldingTree& t, const SymbolWord& w, long start) {
    Verdict v;
    if (t.at(start).sign != w[0]) {
        v.kind = Verdict::Kind::rejected;
        v.has_at = true;
        v.at = start;
        v.position = 0;
        v.detail = "start vertex sign mismatch";
        return v;
    }
    long cur = start;
    for (std::size_t i = 1; i < w.size(); ++i) {
        const auto& vx = t.at(cur);
        if (!vx.children_known) {
            v.kind = Verdict::Kind::inconclusive;
            v.has_at = true;
            v.at = cur;
            v.position = static_cast<long>(i);
            v.detail = "walk leaves the known tree at vertex " + std::to_string(cur);
            return v;
        }
        long next = 0;
        bool found = false;
        for (long c : vx.children) {
            if (t.at(c).sign == w[i]) {
                next = c;
                found = true;
                break;
            }
        }
        if (!found) {
            v.kind = Verdict::Kind::rejected;
            v.has_at = true;
            v.at = cur;
            v.position = static_cast<long>(i);
            v.detail = "no child of vertex " + std::to_string(cur) + " carries '" +
                       std::string(1, to_char(w[i])) + "'";
            return v;
        }
        cur = next;
    }
    v.kind = Verdict::Kind::accepted;
    v.has_at = true;
    v.at = cur;
    v.position = static_cast<long>(w.size());
    return v;
}

} // namespace

Verdict admissible_tree(const FoldingTree& t, const SymbolWord& w, WalkMode mode) {
    check_word(w);
    if (mode == WalkMode::right_tail) {
        if (w[0] != Sym::minus) {
            throw DomainError("a right tail starts with '-'; use the window walk otherwise");
        }
        // Vertex 0 is where every right tail enters; its first proper child
        // carries the '-'. Realize this by stepping through the root loop.
        SymbolWord padded;
        padded.push_back(Sym::plus);
        padded.insert(padded.end(), w.begin(), w.end());
        return walk_from(t, padded, 0);
    }

    bool any_alive = false;
    Verdict best_reject;
    best_reject.kind = Verdict::Kind::rejected;
    best_reject.position = -1;
    for (const auto& [label, vx] : t.verts) {
        if (vx.sign != w[0]) continue;
        const Verdict v = walk_from(t, w, label);
        if (v.accepted()) return v;
        if (v.inconclusive()) any_alive = true;
        if (v.rejected() && v.position > best_reject.position) best_reject = v;
    }
    if (any_alive) {
        Verdict v;
        v.kind = Verdict::Kind::inconclusive;
        v.detail = "some walks leave the known tree before finishing";
        return v;
    }
    if (best_reject.position < 0) {
        best_reject.detail = "no vertex carries '" + std::string(1, to_char(w[0])) + "'";
        best_reject.position = 0;
        best_reject.has_at = false;
    }
    return best_reject;
}

} // namespace lozi
