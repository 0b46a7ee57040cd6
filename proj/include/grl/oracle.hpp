// The semantic consequence oracle: decides Gamma |= t ("/\ {e <= s} -> e <= t")
// over the standard models -- R for LA/LA_GUARD, [0,1] for MV/MV_GUARD -- by
// exact-rational Fourier-Motzkin behind case splits, plus quantifier-free
// validity over ordered abelian groups.
#pragma once

#include "grl/qf_formula.hpp"
#include "grl/term.hpp"

#include <map>
#include <vector>

namespace grl {

struct DecideResult {
    bool holds = false;
    // When !holds: a rational point where all premises hold and the
    // conclusion fails (for conclusion Lambda: a point satisfying the
    // premises).
    std::map<std::string, Rat> counterexample;
};

// LA/LA_GUARD: true iff at every real point where all premises are >= 0 the
// conclusion is >= 0. Guards are removed by innermost-first sign case splits
// (u|>v becomes v under u>=0 and e under u<0).
// MV/MV_GUARD: premises mean s = 1 and the conclusion t = 1 over [0,1].
// Conclusion Lambda decides premise-unsatisfiability.
DecideResult decide(Sig sig, const VarContext& ctx, const std::vector<TermPtr>& premises,
                    const Conclusion& conclusion);

bool decide_bool(Sig sig, const VarContext& ctx, const std::vector<TermPtr>& premises,
                 const Conclusion& conclusion);

// Validity of a quantifier-free boolean combination of LA literals over all
// ordered abelian groups: valid over R (DNF the negation, Fourier-Motzkin
// each disjunct) and valid in the trivial one-element group.
bool decide_oag_qf(const QFPtr& formula);

// Validity of phi over R alone (used to compare qe outputs on the divisible
// model).
bool valid_over_reals(const QFPtr& formula);

}  // namespace grl
