#pragma once

#include "lozi/manifold.hpp"
#include "lozi/symbol.hpp"

#include <map>
#include <string>
#include <vector>

namespace lozi {

/// Parity-lexicographical comparison: at the first difference position k,
/// u precedes v iff u_k < v_k (with - < 0 < +) when the common prefix holds
/// an even number of +, and the reverse when odd. A word that ends as a
/// strict prefix of the other is incomparable.
enum class PlexResult { less, equal, greater, incomparable_prefix };
PlexResult plex_compare(const SymbolWord& u, const SymbolWord& v);

/// Two-sided refinement on itinerary windows (implicit all-+ left tails):
/// pick n with every symbol before -n known to be +, compare the parity-lex
/// order of the windows read from position -n+1, flipping for even n.
/// inconclusive when both windows agree up to the shorter recorded end.
enum class GplexResult { less, equal, greater, inconclusive };
GplexResult gplex_compare(const ItinWindow& p, const ItinWindow& q);

/// Window order of two arcs from their codes alone: -1 when the first arc
/// lies before the second, +1 after, 0 when the codes are equal.
/// Odd-length codes sit left of arc 0 (empty code), even-length right;
/// within a side longer codes are farther from arc 0 and equal-length codes
/// are ordered by parity-lex, reversed on the left side.
int compare_codes_by_position(const SymbolWord& a, const SymbolWord& b);

/// Recover entry indices n from arc-code alphas alone: position the codes
/// with compare_codes_by_position, anchor the empty code at 0 and number
/// consecutively. Throws DomainError when no empty alpha or duplicates.
std::vector<long> number_kneading_alphas(const std::vector<SymbolWord>& alphas);

/// One kneading sequence, split as the pair (alpha, tail): the full object
/// is the left-infinite word (all +)(alpha)(axis) followed by tail, where
/// tail is the itinerary of the turning point T_n.
struct KneadingEntry {
    long n = 0;
    SymbolWord alpha;
    SymbolWord tail;
    bool truncated = false;
};

struct KneadingSet {
    std::vector<KneadingEntry> entries;  // sorted by n
    /// Every arc code of length <= alpha_complete_len appears among alphas
    /// of a sufficiently deep window; predicates use this to bound
    /// conclusiveness.
    int alpha_complete_len = 0;
    int tail_len = 0;

    const KneadingEntry* find(long n) const;
};

/// One entry per gluing point G_m of the window (n = -m): alpha is the code
/// of the arc whose image splits at G_m, the tail is the exact itinerary of
/// T_n = L(G_m) for tail_len steps. An axis hit inside a tail flags the
/// entry truncated at that point.
KneadingSet kneading_set(const ManifoldWindow& w, int tail_len);

/// The window rendered as a line of symbols G/T/X with signed gaps and the
/// arrow map describing L on basic points.
struct FoldingPattern {
    struct Slot {
        char kind = 'T';   // 'G', 'T' or 'X'
        bool has_label = false;
        Label label;       // meaningful when has_label
    };

    std::vector<Slot> slots;
    /// gaps[k] sits left of slots[k]; gaps[slots.size()] is rightmost.
    std::vector<Sym> gaps;
    /// E-index to E-index, image under L where the image is in the pattern.
    std::map<long, long> arrow;

    std::size_t x_slot() const;               // index of the X slot
    std::size_t slot_of_e(long e) const;      // slot index of point E_e
    long e_of_slot(std::size_t idx) const;    // inverse; X slot rejected
    long e_min() const;
    long e_max() const;

    /// Signed rendering, e.g. "-T-G+T+G-T-G+X+T+G-T-G+T+T+T+G-T-".
    std::string render() const;
    /// Kinds, gaps and arrows equal (labels not compared).
    bool same_shape(const FoldingPattern& o) const;
};

FoldingPattern folding_pattern(const ManifoldWindow& w);

/// The Markov graph of the window arranged by levels. Vertex labels are arc
/// E-indices; an edge i -> j means L(arc i) covers arc j. Vertex 0 carries
/// the self-loop. Levels group vertices by code length; within a level
/// vertices are kept in tree order (ascending |label|), matching the
/// planar embedding read off the window.
struct FoldingTree {
    struct Vertex {
        long label = 0;
        int level = 0;
        Sym sign = Sym::plus;
        SymbolWord code;
        long parent = 0;
        bool has_parent = false;
        std::vector<long> children;  // ascending |label|
        bool children_known = false;
    };

    std::map<long, Vertex> verts;
    std::vector<std::vector<long>> levels;

    int depth() const { return static_cast<int>(levels.size()) - 1; }
    bool has(long label) const { return verts.count(label) != 0; }
    const Vertex& at(long label) const;
    /// Edges in tree order (parents by level then position).
    std::vector<std::pair<long, long>> edges() const;
    /// Vertices, signs, levels and children all equal.
    bool same_structure(const FoldingTree& o) const;
};

FoldingTree folding_tree(const ManifoldWindow& w);

/// Marker row for one tree level: the G/T separators between and after the
/// vertices, G exactly between siblings; level 1 carries the leading G_0.
struct MarkerRow {
    bool leading_gluing = false;
    std::vector<long> labels;
    std::vector<Sym> signs;
    std::vector<char> after;  // 'G' or 'T' following each vertex
    std::string str() const;
};
std::vector<MarkerRow> tree_markers(const FoldingTree& t);

/// Rebuild the full tree (levels, signs, codes, markers) from the bare edge
/// list: signs are forced by the marker chains, starting from + at vertex 0
/// and flipping exactly at G markers.
FoldingTree tree_from_edges(const std::vector<std::pair<long, long>>& edges);

/// Inductive reconstruction of the pattern from kneading data alone:
/// start from [T, G, X, T], repeatedly map the slots (reversing order),
/// read the new T signs from the kneading tails, insert a G between
/// adjacent slots of opposite sign, renumber gluings around the one left
/// of X. Throws TruncationError naming the failing step when tails or
/// entries run out; throws DomainError when alphas and entry numbers
/// disagree.
FoldingPattern pattern_from_kneading(const KneadingSet& ks, int target_depth);

/// Vertices from pattern gaps, children from consecutive arrow values,
/// signs from gap signs, levels by breadth-first descent from gap 0.
FoldingTree tree_from_pattern(const FoldingPattern& pat);

/// Entry per G marker (plus the root entry for T_0): alpha is the code of
/// the siblings' parent, the tail reads vertex signs down the chain of
/// last children. Entries are numbered from the alphas alone.
KneadingSet kneading_from_tree(const FoldingTree& t, int tail_len);

} // namespace lozi
