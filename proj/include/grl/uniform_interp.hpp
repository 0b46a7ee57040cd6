// Right and left uniform interpolants for LA_GUARD terms.
//
// Right: s*(x) = \/_i \/_k (s''_ik & nabla t''_ik), where (s'_i, t'_i) come
// from guard elimination of (s, Lambda) and (s''_ik, t''_ik) from one-variable
// elimination; contract: {s} |= v iff {s*} |= v for every v(x).
//
// Left: t*(x) = /\_i /\_k (s''_ik |> (t''_ik | w)) for a witness w(x) with
// {w} |= t; contract: {u} |= t iff {u} |= t* for every u(x,z). The canonical
// witness candidate is /\ {s'' |> t'' : t'' != Lambda}, made guard-free by the
// premise rewrite before use.
#pragma once

#include "grl/guard_calculus.hpp"
#include "grl/term.hpp"
#include "grl/var_elimination.hpp"

#include <optional>
#include <vector>

namespace grl {

struct InterpolantReport {
    TermPtr input;
    std::string variable;
    std::optional<TermPtr> output;  // nullopt = NoWitness (left side only)
    std::vector<JudgmentPair> guard_pairs;
    std::vector<JudgmentPair> elim_pairs;
    std::optional<TermPtr> witness_used;  // left side only
};

class WitnessError : public std::runtime_error {
  public:
    explicit WitnessError(const std::string& what) : std::runtime_error(what) {}
};

// ctx carries the ambient xs (which also fix nabla's conjunction) and
// declares y; sig must be LA_GUARD.
TermPtr right_interpolant(const TermPtr& s, const std::string& y, const VarContext& ctx,
                          Sig sig, InterpolantReport* report = nullptr);

// Guard-free verified witness for {w} |= t, or nullopt when the canonical
// candidate fails verification.
std::optional<TermPtr> canonical_witness(const TermPtr& t, const std::string& y,
                                         const VarContext& ctx, Sig sig);

// witness: optional user-supplied w; it is guard-stripped and verified, and a
// failing supplied witness throws WitnessError (distinct from the NoWitness
// result when no witness can be found).
std::optional<TermPtr> left_interpolant(const TermPtr& t, const std::string& y,
                                        const VarContext& ctx, Sig sig,
                                        const std::optional<TermPtr>& witness = std::nullopt,
                                        InterpolantReport* report = nullptr);

}  // namespace grl
