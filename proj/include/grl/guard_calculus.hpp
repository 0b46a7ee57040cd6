// The syntactic guard calculus: the deduction-theorem transform
// (Gamma u {s} |= t iff Gamma |= s|>t), nabla-based disjunct reversal
// (Gamma |= s|t iff Gamma u {nabla s} |= t), and guard elimination, which
// rewrites a judgment pair (s, t) into guard-free pairs (s'_i, t'_i) with
//   {u & s} |= t | v  iff  for all i, {u & s'_i} |= t'_i | v
// for every guard-free u, v.
#pragma once

#include "grl/term.hpp"

#include <utility>
#include <vector>

namespace grl {

using JudgmentPair = std::pair<TermPtr, Conclusion>;

struct GuardElimResult {
    std::vector<JudgmentPair> pairs;  // guard-free
};

struct Judgment {
    std::vector<TermPtr> premises;
    Conclusion conclusion;
};

// (Gamma, s, t) -> (Gamma, s |> t); t = Lambda is rejected (s |> Lambda is
// never formed).
Judgment deduction_right(const std::vector<TermPtr>& premises, const TermPtr& s,
                         const Conclusion& t, Sig sig);

// Inverse: conclusion must be a guard node s |> t.
Judgment deduction_left(const std::vector<TermPtr>& premises, const Conclusion& conclusion,
                        Sig sig);

// (Gamma, s | t) -> (Gamma u {nabla s}, t); s = Lambda adds the unit premise e.
Judgment reverse_disjunct(const std::vector<TermPtr>& premises, const Conclusion& s,
                          const Conclusion& t, const VarContext& ctx, Sig sig);

// Innermost-first branching on guard occurrences, premise side before
// conclusion side; pair count <= 2^(guard count).
GuardElimResult eliminate_guards(const TermPtr& s, const Conclusion& t, Sig sig);

// Premise-position guard stripping: w'[w1 |> w2] -> w'[w2] & w1 until
// guard-free ({w} |= t implies {strip(w)} |= t; used for witnesses).
TermPtr strip_guards_premise(TermPtr w);

}  // namespace grl
