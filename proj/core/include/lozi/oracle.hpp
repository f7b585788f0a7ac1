#pragma once

#include "lozi/admissible.hpp"
#include "lozi/symbolic.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lozi {

/// One failed check inside a verification suite.
struct VerifyCase {
    std::string id;    // stable name of the check
    std::string note;  // counterexample or reproducer data
};

/// Outcome of a verification suite. checked counts conclusive comparisons,
/// inconclusive the ones skipped for lack of recorded evidence; any entry
/// in failures means the cross-check found a real disagreement.
struct VerificationReport {
    std::string suite;
    long checked = 0;
    long inconclusive = 0;
    std::vector<VerifyCase> failures;

    bool passed() const { return failures.empty(); }
    std::string str() const;
};

/// Cross-checks the intrinsic order of window points against the symbolic
/// gplex order of their itinerary windows on sampled pairs, plus the fixed
/// boundary pair (E_0, E_1) whose windows are built by exact iteration.
VerificationReport verify_order_lemma(const ManifoldWindow& w, int pairs, std::uint64_t seed,
                                      int horizon = 30);

/// Runs both admissibility predicates against each other: exhaustively on
/// every '-'-headed word up to exhaustive_len, and on itinerary prefixes of
/// sampled window points, which must come back accepted.
VerificationReport verify_admissibility_consistency(const ManifoldWindow& w,
                                                    const KneadingSet& ks, const FoldingTree& t,
                                                    int exhaustive_len, int samples,
                                                    std::uint64_t seed, int horizon = 20);

/// Checks the Markov property: the image of every non-leaf arc is exactly
/// the union of its children, endpoint for endpoint, with the intermediate
/// basic points collinear and strictly ordered along the image segment.
VerificationReport verify_markov(const ManifoldWindow& w);

/// Round-trips the three symbolic presentations through every conversion
/// (set -> pattern -> tree -> set and all partial legs) and rebuilds the
/// tree from its naked edge list, comparing against the directly computed
/// objects. Tail comparisons are truncation-aware.
VerificationReport verify_roundtrips(const ManifoldWindow& w, int tail_len);

/// Checks that compare_codes_by_position reproduces the actual left-to-right
/// order of the window's arcs from their codes alone.
VerificationReport verify_arc_code_order(const ManifoldWindow& w);

} // namespace lozi
