#include "lozi/symbolic.hpp"

#include "lozi/error.hpp"

#include <algorithm>
#include <map>

namespace lozi {

namespace {

Sym tail_sign(const KneadingSet& ks, long n, int j, int step) {
    const KneadingEntry* e = ks.find(n);
    if (e == nullptr) {
        throw TruncationError("reconstruction step " + std::to_string(step) +
                              " needs the missing kneading entry n=" + std::to_string(n));
    }
    if (j - 1 >= static_cast<int>(e->tail.size())) {
        throw TruncationError("reconstruction step " + std::to_string(step) + " needs symbol " +
                              std::to_string(j) + " of the tail of entry n=" + std::to_string(n) +
                              ", recorded length is " + std::to_string(e->tail.size()));
    }
    const Sym s = e->tail[static_cast<std::size_t>(j - 1)];
    if (s == Sym::axis) {
        throw TruncationError("tail of entry n=" + std::to_string(n) +
                              " hits the axis at position " + std::to_string(j) +
                              "; reconstruction cannot branch");
    }
    return s;
}

Sym slot_sign(const KneadingSet& ks, const FoldingPattern::Slot& s, int step) {
    if (s.kind == 'X') return Sym::plus;
    return tail_sign(ks, s.label.n, s.label.j, step);
}

} // namespace

FoldingPattern pattern_from_kneading(const KneadingSet& ks, int target_depth) {
    if (target_depth < 1) throw DomainError("target depth must be at least 1");
    if (ks.entries.empty()) throw DomainError("kneading set is empty");
    {
        std::vector<SymbolWord> alphas;
        alphas.reserve(ks.entries.size());
        for (const auto& e : ks.entries) alphas.push_back(e.alpha);
        const std::vector<long> ns = number_kneading_alphas(alphas);
        for (std::size_t i = 0; i < ns.size(); ++i) {
            if (ns[i] != ks.entries[i].n) {
                throw DomainError("entry numbering inconsistent with alpha positions at n=" +
                                  std::to_string(ks.entries[i].n));
            }
        }
    }

    using Slot = FoldingPattern::Slot;
    std::vector<Slot> slots = {
        {'T', true, Label::turning(0, 2)},
        {'G', true, Label::gluing(0)},
        {'X', false, {}},
        {'T', true, Label::turning(0, 1)},
    };

    for (int step = 1; step < target_depth; ++step) {
        std::vector<Slot> imgs;
        imgs.reserve(slots.size());
        for (auto it = slots.rbegin(); it != slots.rend(); ++it) {
            if (it->kind == 'X') {
                imgs.push_back(*it);
            } else {
                imgs.push_back({'T', true, it->label.image()});
            }
        }
        std::vector<Slot> out;
        out.reserve(2 * imgs.size());
        for (std::size_t k = 0; k < imgs.size(); ++k) {
            if (k > 0) {
                const int prev = static_cast<int>(slot_sign(ks, imgs[k - 1], step));
                const int curr = static_cast<int>(slot_sign(ks, imgs[k], step));
                if (prev * curr < 0) out.push_back({'G', false, {}});
            }
            out.push_back(imgs[k]);
        }
        // Number the gluings; the one immediately left of X is G_0.
        std::vector<std::size_t> gpos;
        std::size_t xpos = out.size();
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (out[i].kind == 'G') gpos.push_back(i);
            if (out[i].kind == 'X') xpos = i;
        }
        long anchor = -1;
        for (std::size_t k = 0; k < gpos.size(); ++k) {
            if (gpos[k] < xpos) anchor = static_cast<long>(k);
        }
        if (anchor < 0 || gpos[static_cast<std::size_t>(anchor)] + 1 != xpos) {
            throw DomainError("reconstruction lost the anchor gluing left of X at step " +
                              std::to_string(step));
        }
        for (std::size_t k = 0; k < gpos.size(); ++k) {
            out[gpos[k]].label = Label::gluing(static_cast<long>(k) - anchor);
            out[gpos[k]].has_label = true;
        }
        slots = std::move(out);
    }

    FoldingPattern pat;
    pat.slots = slots;
    // Signs change exactly at gluings, so every gap borrows the sign of an
    // adjacent T (or X, counted +); at least one neighbor qualifies.
    const int final_step = target_depth - 1;
    for (std::size_t k = 0; k <= slots.size(); ++k) {
        const Slot* lt = k > 0 ? &slots[k - 1] : nullptr;
        const Slot* rt = k < slots.size() ? &slots[k] : nullptr;
        if (lt != nullptr && lt->kind != 'G') {
            pat.gaps.push_back(slot_sign(ks, *lt, final_step));
        } else if (rt != nullptr && rt->kind != 'G') {
            pat.gaps.push_back(slot_sign(ks, *rt, final_step));
        } else {
            throw DomainError("gap with no signed neighbor in the reconstructed pattern");
        }
    }
    // Arrows from the label identities L(G_m) = T_{-m}, L(T_n^j) = T_n^{j+1}.
    std::map<Label, long, bool (*)(const Label&, const Label&)> by_label(
        [](const Label& a, const Label& b) {
            if (a.kind != b.kind) return a.kind < b.kind;
            if (a.n != b.n) return a.n < b.n;
            const int aj = a.kind == Label::Kind::gluing ? 1 : a.j;
            const int bj = b.kind == Label::Kind::gluing ? 1 : b.j;
            return aj < bj;
        });
    for (std::size_t i = 0; i < pat.slots.size(); ++i) {
        if (pat.slots[i].kind == 'X') continue;
        by_label[pat.slots[i].label] = pat.e_of_slot(i);
    }
    for (std::size_t i = 0; i < pat.slots.size(); ++i) {
        if (pat.slots[i].kind == 'X') continue;
        const auto it = by_label.find(pat.slots[i].label.image());
        if (it != by_label.end()) pat.arrow[pat.e_of_slot(i)] = it->second;
    }
    return pat;
}

FoldingTree tree_from_pattern(const FoldingPattern& pat) {
    if (pat.arrow.empty()) throw DomainError("pattern carries no arrow map");
    const long lo = pat.e_min();
    const long hi = pat.e_max();

    auto arc_sign = [&](long e) {
        const std::size_t i1 = pat.slot_of_e(e);
        return pat.gaps.at(i1 + 1);
    };

    std::map<long, std::vector<long>> ch;
    for (long e = lo; e < hi; ++e) {
        const auto a1 = pat.arrow.find(e);
        const auto a2 = pat.arrow.find(e + 1);
        if (a1 == pat.arrow.end() || a2 == pat.arrow.end()) continue;
        const long clo = a2->second;
        const long chi = a1->second - 1;
        if (clo > chi || clo < lo || chi >= hi) {
            throw DomainError("pattern arrows are not order-reversing around arc " +
                              std::to_string(e));
        }
        std::vector<long> cs;
        for (long c = clo; c <= chi; ++c) cs.push_back(c);
        std::sort(cs.begin(), cs.end(), [](long a, long b) {
            const long aa = a < 0 ? -a : a;
            const long bb = b < 0 ? -b : b;
            return aa != bb ? aa < bb : a < b;
        });
        ch[e] = std::move(cs);
    }
    if (ch.find(0) == ch.end()) {
        throw DomainError("pattern arrow map incomplete: no children derivable for arc 0");
    }

    FoldingTree t;
    {
        FoldingTree::Vertex root;
        root.label = 0;
        root.level = 0;
        root.sign = arc_sign(0);
        root.children = ch.at(0);
        root.children_known = true;
        t.verts[0] = std::move(root);
    }
    t.levels.push_back({0});
    std::vector<long> frontier{0};
    while (!frontier.empty()) {
        std::vector<long> next;
        for (long u : frontier) {
            const auto it = ch.find(u);
            if (it == ch.end()) continue;
            for (long v : it->second) {
                if (u == 0 && v == 0) continue;
                FoldingTree::Vertex vx;
                vx.label = v;
                vx.level = t.verts.at(u).level + 1;
                vx.sign = arc_sign(v);
                vx.code = t.verts.at(u).code;
                vx.code.push_back(vx.sign);
                vx.parent = u;
                vx.has_parent = true;
                const auto cit = ch.find(v);
                if (cit != ch.end()) {
                    vx.children = cit->second;
                    vx.children_known = true;
                }
                if (!t.verts.emplace(v, std::move(vx)).second) {
                    throw DomainError("pattern arrows revisit arc " + std::to_string(v));
                }
                next.push_back(v);
            }
        }
        if (next.empty()) break;
        std::sort(next.begin(), next.end(), [](long a, long b) {
            const long aa = a < 0 ? -a : a;
            const long bb = b < 0 ? -b : b;
            return aa != bb ? aa < bb : a < b;
        });
        t.levels.push_back(next);
        frontier = std::move(next);
    }
    return t;
}

namespace {

bool last_child(const FoldingTree& t, long u, long& out) {
    const auto& v = t.at(u);
    if (!v.children_known || v.children.empty()) return false;
    if (u == 0) {
        // The root's own slot is the self-loop; its last real child is the
        // deepest-label one besides itself.
        for (auto it = v.children.rbegin(); it != v.children.rend(); ++it) {
            if (*it != 0) {
                out = *it;
                return true;
            }
        }
        return false;
    }
    out = v.children.back();
    return true;
}

SymbolWord read_tail(const FoldingTree& t, long start, int tail_len, bool& truncated) {
    SymbolWord tail;
    long u = start;
    while (static_cast<int>(tail.size()) < tail_len) {
        tail.push_back(t.at(u).sign);
        long nxt = 0;
        if (!last_child(t, u, nxt)) break;
        u = nxt;
    }
    truncated = static_cast<int>(tail.size()) < tail_len;
    return tail;
}

} // namespace

KneadingSet kneading_from_tree(const FoldingTree& t, int tail_len) {
    if (tail_len < 1) throw DomainError("kneading tail length must be at least 1");
    KneadingSet ks;
    ks.tail_len = tail_len;
    ks.alpha_complete_len = t.depth() - 1;

    std::vector<KneadingEntry> entries;
    {
        KneadingEntry root;
        root.alpha = {};
        root.tail = read_tail(t, 0, tail_len, root.truncated);
        entries.push_back(std::move(root));
    }
    for (const auto& level : t.levels) {
        for (std::size_t k = 0; k + 1 < level.size(); ++k) {
            const auto& u = t.at(level[k]);
            const auto& v = t.at(level[k + 1]);
            if (!(u.has_parent && v.has_parent && u.parent == v.parent)) continue;
            // A gluing marker sits between these siblings; its turning point
            // hangs below the left sibling's chain of last children.
            KneadingEntry ent;
            ent.alpha = t.at(u.parent).code;
            long start = 0;
            if (last_child(t, u.label, start)) {
                ent.tail = read_tail(t, start, tail_len, ent.truncated);
            } else {
                ent.truncated = true;
            }
            entries.push_back(std::move(ent));
        }
    }

    std::vector<SymbolWord> alphas;
    alphas.reserve(entries.size());
    for (const auto& e : entries) alphas.push_back(e.alpha);
    const std::vector<long> ns = number_kneading_alphas(alphas);
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i].n = ns[i];
    std::sort(entries.begin(), entries.end(),
              [](const KneadingEntry& a, const KneadingEntry& b) { return a.n < b.n; });
    ks.entries = std::move(entries);
    return ks;
}

} // namespace lozi
