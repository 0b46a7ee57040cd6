// One-variable elimination for guard-free LA pairs: given s(x,y) and
// t(x,y) (or Lambda), produce pairs (s'_k, t'_k) over x alone with
//   {u & s} |= t | v  iff  for all k, {u & s'_k} |= t'_k | v
// for arbitrary guard-free side terms u(x,z), v(x,z). The premise side is
// put in join-of-meets form, the conclusion in meet-of-joins form, each
// (disjunct, conjunct) pair is uniformized to coefficient +-k and fused, and
// the case table
//   s' = s0 [& (s1+s2)]    t' = t0 [| (t1+t2)] [| (t1-s1)] [| (t2-s2)]
// is applied, a case firing only when its bounds occur.
#pragma once

#include "grl/guard_calculus.hpp"
#include "grl/linform.hpp"
#include "grl/term.hpp"

#include <string>
#include <vector>

namespace grl {

struct EliminationResult {
    std::vector<JudgmentPair> pairs;  // y never occurs in any component
    Int k_scale{1};                   // lcm of the per-pair scale factors
};

// Single uniformized pair -> the case table output.
JudgmentPair eliminate_basic(const UniformParts& parts);

EliminationResult eliminate(const TermPtr& s, const Conclusion& t, const std::string& y,
                            Sig sig);

}  // namespace grl
