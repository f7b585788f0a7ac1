#pragma once

#include "lozi/symbolic.hpp"

#include <string>

namespace lozi {

/// Outcome of an admissibility test. A finite window of data can prove a
/// word admissible or refute it, but may also run out of evidence; the
/// third verdict is explicit rather than silently optimistic.
struct Verdict {
    enum class Kind { accepted, rejected, inconclusive };

    Kind kind = Kind::inconclusive;
    bool has_at = false;
    long at = 0;        // kneading entry n, or tree vertex label
    long position = 0;  // index into the word where the test settled
    std::string detail;

    bool accepted() const { return kind == Kind::accepted; }
    bool rejected() const { return kind == Kind::rejected; }
    bool inconclusive() const { return kind == Kind::inconclusive; }
    std::string str() const;
};

/// Kneading-set test of a finite word w (w[0] must be '-', no axis
/// symbols). For every entry whose alpha is a proper prefix of w, the part
/// of w past the alpha and the turning symbol is compared against the
/// entry's tail in parity-lexicographic order; exceeding any tail kills the
/// word. The tails are also strong enough to retrace the word arc by arc:
/// when the image of the current arc stays in one half-plane the next
/// symbol is forced, and taking the other sign kills the word too (the
/// comparisons cannot see this along arcs that never split). A word whose
/// every step is retraced this way is accepted outright. Otherwise,
/// comparisons that run off recorded data, and words longer than the
/// reliably recorded alphas can police, come back inconclusive.
Verdict admissible_kneading(const KneadingSet& ks, const SymbolWord& w);

/// Tree test of the same words: walk the Markov graph from the root,
/// steering by sign. A dead end rejects; walking off the known part of the
/// tree is inconclusive.
enum class WalkMode {
    right_tail,  // w is read as x_1 x_2 ...; the walk starts at vertex 0
    window,      // w may start anywhere; every matching vertex is tried
};

Verdict admissible_tree(const FoldingTree& t, const SymbolWord& w,
                        WalkMode mode = WalkMode::right_tail);

} // namespace lozi
