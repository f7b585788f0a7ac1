#include "lozi/symbolic.hpp"

#include "lozi/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lozi {

PlexResult plex_compare(const SymbolWord& u, const SymbolWord& v) {
    const std::size_t m = std::min(u.size(), v.size());
    std::size_t k = 0;
    std::size_t plus_count = 0;
    for (; k < m && u[k] == v[k]; ++k) {
        if (u[k] == Sym::plus) ++plus_count;
    }
    if (k == m) {
        return u.size() == v.size() ? PlexResult::equal : PlexResult::incomparable_prefix;
    }
    bool lt = static_cast<int>(u[k]) < static_cast<int>(v[k]);
    if (plus_count % 2 == 1) lt = !lt;
    return lt ? PlexResult::less : PlexResult::greater;
}

namespace {

long first_non_plus(const ItinWindow& w) {
    for (std::size_t j = 0; j < w.syms.size(); ++j) {
        if (w.syms[j] != Sym::plus) return w.lo + static_cast<long>(j);
    }
    return w.hi() + 1;
}

} // namespace

GplexResult gplex_compare(const ItinWindow& p, const ItinWindow& q) {
    const long n = std::max(1L, 1 - std::min(first_non_plus(p), first_non_plus(q)));
    const long hi = std::min(p.hi(), q.hi());
    long plus_count = 0;
    for (long k = -n + 1; k <= hi; ++k) {
        const Sym a = p.at(k);
        const Sym b = q.at(k);
        if (a != b) {
            bool lt = static_cast<int>(a) < static_cast<int>(b);
            if (plus_count % 2 == 1) lt = !lt;
            // Reading the two-sided order through sigma^{n-1} reverses it
            // once more when n is even.
            if (n % 2 == 0) lt = !lt;
            return lt ? GplexResult::less : GplexResult::greater;
        }
        if (a == Sym::plus) ++plus_count;
    }
    if (p.lo == q.lo && p.syms.size() == q.syms.size()) return GplexResult::equal;
    return GplexResult::inconclusive;
}

int compare_codes_by_position(const SymbolWord& a, const SymbolWord& b) {
    if (a == b) return 0;
    auto side = [](const SymbolWord& c) -> int {
        if (c.empty()) return 0;
        return c.size() % 2 == 1 ? -1 : 1;
    };
    const int sa = side(a);
    const int sb = side(b);
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 1) {
        // Right of arc 0: position grows with distance from X.
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        const PlexResult r = plex_compare(a, b);
        if (r == PlexResult::less) return 1;
        if (r == PlexResult::greater) return -1;
    } else {
        // Left of arc 0: position shrinks as distance grows.
        if (a.size() != b.size()) return a.size() > b.size() ? -1 : 1;
        const PlexResult r = plex_compare(a, b);
        if (r == PlexResult::less) return -1;
        if (r == PlexResult::greater) return 1;
    }
    throw DomainError("arc codes of equal length must be plex comparable");
}

std::vector<long> number_kneading_alphas(const std::vector<SymbolWord>& alphas) {
    std::vector<std::size_t> order(alphas.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return compare_codes_by_position(alphas[i], alphas[j]) < 0;
    });
    long zero_pos = -1;
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (k > 0 && compare_codes_by_position(alphas[order[k - 1]], alphas[order[k]]) == 0) {
            throw DomainError("duplicate alpha word: " + to_string(alphas[order[k]]));
        }
        if (alphas[order[k]].empty()) zero_pos = static_cast<long>(k);
    }
    if (zero_pos < 0) throw DomainError("no entry with the empty alpha (n = 0) present");
    std::vector<long> ns(alphas.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        ns[order[k]] = static_cast<long>(k) - zero_pos;
    }
    return ns;
}

const KneadingEntry* KneadingSet::find(long n) const {
    for (const auto& e : entries) {
        if (e.n == n) return &e;
    }
    return nullptr;
}

KneadingSet kneading_set(const ManifoldWindow& w, int tail_len) {
    if (tail_len < 1) throw DomainError("kneading tail length must be at least 1");
    KneadingSet ks;
    ks.tail_len = tail_len;
    ks.alpha_complete_len = w.depth() - 1;
    for (long e = w.e_min(); e <= w.e_max(); ++e) {
        const BasicPoint& bp = w.point(e);
        if (bp.label.kind != Label::Kind::gluing) continue;
        const BasicArc& left = w.arc(e - 1);
        const BasicArc& right = w.arc(e);
        if (left.parent_e != right.parent_e) {
            throw GrowthError("internal: arcs flanking a gluing point disagree on their parent");
        }
        KneadingEntry ent;
        ent.n = -bp.label.n;
        // Arc codes are stable across growth, so the current arc at the
        // parent's E-index carries the parent's code.
        ent.alpha = w.arc(left.parent_e).code;
        PlanePoint t = lozi_apply(w.params(), bp.coords);
        ent.tail.reserve(static_cast<std::size_t>(tail_len));
        for (int i = 0; i < tail_len; ++i) {
            const int s = t.x.sign();
            ent.tail.push_back(static_cast<Sym>(s));
            if (s == 0) ent.truncated = true;
            t = lozi_apply(w.params(), t);
        }
        ks.entries.push_back(std::move(ent));
    }
    std::sort(ks.entries.begin(), ks.entries.end(),
              [](const KneadingEntry& a, const KneadingEntry& b) { return a.n < b.n; });
    return ks;
}

std::size_t FoldingPattern::x_slot() const {
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i].kind == 'X') return i;
    }
    throw DomainError("pattern has no X slot");
}

std::size_t FoldingPattern::slot_of_e(long e) const {
    const long lo = e_min();
    long seen = -1;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i].kind == 'X') continue;
        ++seen;
        if (lo + seen == e) return i;
    }
    throw DomainError("pattern has no point with index E_" + std::to_string(e));
}

long FoldingPattern::e_of_slot(std::size_t idx) const {
    if (idx >= slots.size()) throw DomainError("pattern slot index out of range");
    if (slots[idx].kind == 'X') throw DomainError("the X slot carries no point index");
    const std::size_t x = x_slot();
    if (x == 0 || slots[x - 1].kind != 'G') {
        throw DomainError("pattern lacks the anchor gluing immediately left of X");
    }
    long count = 0;   // non-X slots strictly before idx
    long anchor = 0;  // non-X slots strictly before the G_0 slot
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i].kind == 'X') continue;
        if (i < idx) ++count;
        if (i < x - 1) ++anchor;
    }
    return count - anchor;
}

long FoldingPattern::e_min() const {
    std::size_t first = 0;
    while (first < slots.size() && slots[first].kind == 'X') ++first;
    return e_of_slot(first);
}

long FoldingPattern::e_max() const {
    std::size_t last = slots.size();
    while (last > 0 && slots[last - 1].kind == 'X') --last;
    return e_of_slot(last - 1);
}

std::string FoldingPattern::render() const {
    if (gaps.size() != slots.size() + 1) throw DomainError("pattern gaps out of step with slots");
    std::string out;
    for (std::size_t k = 0; k < slots.size(); ++k) {
        out.push_back(to_char(gaps[k]));
        out.push_back(slots[k].kind);
    }
    out.push_back(to_char(gaps[slots.size()]));
    return out;
}

bool FoldingPattern::same_shape(const FoldingPattern& o) const {
    if (slots.size() != o.slots.size() || gaps != o.gaps || arrow != o.arrow) return false;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i].kind != o.slots[i].kind) return false;
    }
    return true;
}

FoldingPattern folding_pattern(const ManifoldWindow& w) {
    FoldingPattern pat;
    for (long e = w.e_min(); e <= w.e_max(); ++e) {
        if (e == 1) pat.slots.push_back({'X', false, {}});
        const Label& lab = w.point(e).label;
        pat.slots.push_back({lab.kind == Label::Kind::gluing ? 'G' : 'T', true, lab});
    }
    // Gap left of each slot: the sign of the arc it cuts; the two gaps
    // flanking X are the halves of arc 0, both +.
    pat.gaps.push_back(w.arc(w.e_min()).sign);
    long left_e = w.e_min();
    for (std::size_t k = 1; k < pat.slots.size(); ++k) {
        if (pat.slots[k].kind == 'X' || pat.slots[k - 1].kind == 'X') {
            pat.gaps.push_back(Sym::plus);
            if (pat.slots[k].kind != 'X') ++left_e;
            continue;
        }
        pat.gaps.push_back(w.arc(left_e).sign);
        ++left_e;
    }
    pat.gaps.push_back(w.arc(w.e_max() - 1).sign);
    for (long e = w.e_min(); e <= w.e_max(); ++e) {
        if (auto img = w.orbit_image(e)) pat.arrow[e] = *img;
    }
    return pat;
}

const FoldingTree::Vertex& FoldingTree::at(long label) const {
    const auto it = verts.find(label);
    if (it == verts.end()) {
        throw DomainError("tree has no vertex " + std::to_string(label));
    }
    return it->second;
}

std::vector<std::pair<long, long>> FoldingTree::edges() const {
    std::vector<std::pair<long, long>> out;
    for (const auto& level : levels) {
        for (long u : level) {
            const Vertex& v = at(u);
            for (long c : v.children) out.emplace_back(u, c);
        }
    }
    return out;
}

bool FoldingTree::same_structure(const FoldingTree& o) const {
    if (levels != o.levels) return false;
    if (verts.size() != o.verts.size()) return false;
    for (const auto& [label, v] : verts) {
        const auto it = o.verts.find(label);
        if (it == o.verts.end()) return false;
        const Vertex& u = it->second;
        if (v.level != u.level || v.sign != u.sign || v.code != u.code ||
            v.children != u.children || v.children_known != u.children_known ||
            v.has_parent != u.has_parent || (v.has_parent && v.parent != u.parent)) {
            return false;
        }
    }
    return true;
}

namespace {

void sort_by_abs(std::vector<long>& v) {
    std::sort(v.begin(), v.end(), [](long a, long b) {
        const long aa = a < 0 ? -a : a;
        const long bb = b < 0 ? -b : b;
        return aa != bb ? aa < bb : a < b;
    });
}

} // namespace

FoldingTree folding_tree(const ManifoldWindow& w) {
    FoldingTree t;
    int max_level = 0;
    for (long e = w.e_min(); e < w.e_max(); ++e) {
        const BasicArc& a = w.arc(e);
        FoldingTree::Vertex v;
        v.label = e;
        v.level = static_cast<int>(a.code.size());
        v.sign = a.sign;
        v.code = a.code;
        if (e != 0) {
            v.parent = a.parent_e;
            v.has_parent = true;
        }
        if (auto range = w.children(e)) {
            v.children_known = true;
            for (long c = range->first; c <= range->second; ++c) v.children.push_back(c);
            sort_by_abs(v.children);
        }
        max_level = std::max(max_level, v.level);
        t.verts[e] = std::move(v);
    }
    t.levels.assign(static_cast<std::size_t>(max_level) + 1, {});
    for (const auto& [label, v] : t.verts) {
        t.levels[static_cast<std::size_t>(v.level)].push_back(label);
    }
    for (auto& level : t.levels) sort_by_abs(level);
    return t;
}

std::string MarkerRow::str() const {
    std::ostringstream os;
    if (leading_gluing) os << "G ";
    for (std::size_t k = 0; k < labels.size(); ++k) {
        os << to_char(signs[k]) << labels[k] << ' ' << after[k];
        if (k + 1 < labels.size()) os << ' ';
    }
    return os.str();
}

std::vector<MarkerRow> tree_markers(const FoldingTree& t) {
    std::vector<MarkerRow> rows;
    for (std::size_t li = 0; li < t.levels.size(); ++li) {
        const auto& level = t.levels[li];
        MarkerRow row;
        row.leading_gluing = (li == 1);
        for (std::size_t k = 0; k < level.size(); ++k) {
            const auto& v = t.at(level[k]);
            row.labels.push_back(level[k]);
            row.signs.push_back(v.sign);
            if (k + 1 < level.size()) {
                const auto& nx = t.at(level[k + 1]);
                const bool siblings =
                    v.has_parent && nx.has_parent && v.parent == nx.parent;
                row.after.push_back(siblings ? 'G' : 'T');
            } else {
                row.after.push_back('T');
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

FoldingTree tree_from_edges(const std::vector<std::pair<long, long>>& edges) {
    std::map<long, std::vector<long>> ch;
    std::set<std::pair<long, long>> seen;
    std::set<long> vertices;
    for (const auto& e : edges) {
        if (!seen.insert(e).second) {
            throw DomainError("duplicate tree edge " + std::to_string(e.first) + " -> " +
                              std::to_string(e.second));
        }
        ch[e.first].push_back(e.second);
        vertices.insert(e.first);
        vertices.insert(e.second);
    }
    const auto root = ch.find(0);
    auto contains = [](const std::vector<long>& v, long x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    };
    if (root == ch.end() || !contains(root->second, 0) || !contains(root->second, -1)) {
        throw DomainError("tree lacks the base structure (vertex 0 with self-loop and child -1)");
    }
    for (auto& [u, cs] : ch) {
        sort_by_abs(cs);
        const std::size_t real = cs.size() - (u == 0 ? 1 : 0);
        if (real < 1 || real > 2) {
            throw DomainError("vertex " + std::to_string(u) + " must have 1 or 2 children");
        }
    }

    std::map<long, long> parent;
    for (const auto& [u, cs] : ch) {
        for (long v : cs) {
            if (u == 0 && v == 0) continue;
            if (!parent.emplace(v, u).second) {
                throw DomainError("vertex " + std::to_string(v) + " has two parents");
            }
        }
    }
    if (parent.count(0)) throw DomainError("vertex 0 cannot have a parent");

    FoldingTree t;
    t.levels.push_back({0});
    std::map<long, int> level{{0, 0}};
    std::vector<long> frontier{0};
    while (!frontier.empty()) {
        std::vector<long> next;
        for (long u : frontier) {
            const auto it = ch.find(u);
            if (it == ch.end()) continue;
            for (long v : it->second) {
                if (u == 0 && v == 0) continue;
                level[v] = level[u] + 1;
                next.push_back(v);
            }
        }
        if (next.empty()) break;
        sort_by_abs(next);
        t.levels.push_back(next);
        frontier = std::move(next);
    }
    if (level.size() != vertices.size()) {
        throw DomainError("tree edges do not form a single tree rooted at 0");
    }
    for (const auto& [v, lv] : level) {
        const bool odd = lv % 2 == 1;
        if (lv > 0 && ((odd && v >= 0) || (!odd && v <= 0))) {
            throw DomainError("vertex " + std::to_string(v) +
                              " violates the level parity convention");
        }
    }

    // Signs: + at vertex 0; reading each side's levels as one left-to-right
    // chain, the sign flips exactly at gluing markers (between siblings).
    // The R- chain starts with the G_0 marker, whose left side is X with
    // sign +.
    std::map<long, Sym> sign;
    for (int parity = 0; parity < 2; ++parity) {
        std::vector<long> chain;
        for (std::size_t li = static_cast<std::size_t>(parity); li < t.levels.size(); li += 2) {
            chain.insert(chain.end(), t.levels[li].begin(), t.levels[li].end());
        }
        if (chain.empty()) continue;
        Sym cur = parity == 0 ? Sym::plus : Sym::minus;
        sign[chain[0]] = cur;
        for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
            const auto pu = parent.find(chain[k]);
            const auto pv = parent.find(chain[k + 1]);
            const bool siblings =
                pu != parent.end() && pv != parent.end() && pu->second == pv->second;
            if (siblings) cur = opposite(cur);
            sign[chain[k + 1]] = cur;
        }
    }

    for (const auto& [v, lv] : level) {
        FoldingTree::Vertex vx;
        vx.label = v;
        vx.level = lv;
        vx.sign = sign.at(v);
        const auto it = ch.find(v);
        if (it != ch.end()) {
            vx.children = it->second;
            vx.children_known = true;
        }
        const auto pit = parent.find(v);
        if (pit != parent.end()) {
            vx.parent = pit->second;
            vx.has_parent = true;
        }
        t.verts[v] = std::move(vx);
    }
    // Codes follow parent chains, which the level order respects.
    for (const auto& lvl : t.levels) {
        for (long v : lvl) {
            auto& vx = t.verts.at(v);
            if (v == 0) continue;
            vx.code = t.verts.at(vx.parent).code;
            vx.code.push_back(vx.sign);
        }
    }
    for (const auto& [v, vx] : t.verts) {
        if (vx.children.size() == 2 &&
            t.verts.at(vx.children[0]).sign == t.verts.at(vx.children[1]).sign) {
            throw DomainError("vertex " + std::to_string(v) +
                              " has two children of equal sign");
        }
    }
    return t;
}

} // namespace lozi
