#include "grl/uniform_interp.hpp"

#include "grl/oracle.hpp"

namespace grl {

namespace {

void require_la_guard(Sig sig, const char* who) {
    if (sig != Sig::LAGuard)
        throw std::invalid_argument(std::string(who) + ": LA_GUARD signature required");
}

// Guard elimination followed by per-pair variable elimination; returns the
// flattened (s'', t'') list.
std::vector<JudgmentPair> pipeline(const TermPtr& s, const Conclusion& t,
                                   const std::string& y, Sig sig,
                                   std::vector<JudgmentPair>* guard_pairs_out) {
    GuardElimResult ge = eliminate_guards(s, t, sig);
    if (guard_pairs_out) *guard_pairs_out = ge.pairs;
    std::vector<JudgmentPair> out;
    for (const auto& [si, ti] : ge.pairs) {
        EliminationResult er = eliminate(si, ti, y, Sig::LA);
        out.insert(out.end(), er.pairs.begin(), er.pairs.end());
    }
    return out;
}

VarContext xs_only(const VarContext& ctx) { return VarContext(ctx.xs(), std::nullopt, {}); }

}  // namespace

TermPtr right_interpolant(const TermPtr& s, const std::string& y, const VarContext& ctx,
                          Sig sig, InterpolantReport* report) {
    require_la_guard(sig, "right_interpolant");
    std::vector<JudgmentPair> guard_pairs;
    std::vector<JudgmentPair> pairs = pipeline(s, Conclusion::lambda(), y, sig, &guard_pairs);
    VarContext nabla_ctx = xs_only(ctx);
    std::vector<TermPtr> disjuncts;
    for (const auto& [sk, tk] : pairs)
        disjuncts.push_back(Term::meet(sk, nabla(tk, nabla_ctx, sig)));
    TermPtr star = join_all(disjuncts);
    if (report) {
        report->input = s;
        report->variable = y;
        report->output = star;
        report->guard_pairs = std::move(guard_pairs);
        report->elim_pairs = std::move(pairs);
    }
    return star;
}

namespace {

// Shared by canonical_witness and left_interpolant: both need the (s'', t'')
// pairs of (e, t).
struct LeftPipeline {
    std::vector<JudgmentPair> guard_pairs;
    std::vector<JudgmentPair> pairs;
};

LeftPipeline left_pipeline(const TermPtr& t, const std::string& y, Sig sig) {
    LeftPipeline lp;
    lp.pairs = pipeline(Term::e(), Conclusion(t), y, sig, &lp.guard_pairs);
    return lp;
}

TermPtr canonical_candidate(const std::vector<JudgmentPair>& pairs) {
    std::vector<TermPtr> parts;
    for (const auto& [sk, tk] : pairs)
        if (!tk.is_lambda()) parts.push_back(Term::guard(sk, tk.term));
    return meet_all(parts);
}

bool witness_verifies(const TermPtr& w, const TermPtr& t, const VarContext& ctx, Sig sig) {
    return decide_bool(sig, ctx, {w}, Conclusion(t));
}

}  // namespace

std::optional<TermPtr> canonical_witness(const TermPtr& t, const std::string& y,
                                         const VarContext& ctx, Sig sig) {
    require_la_guard(sig, "canonical_witness");
    LeftPipeline lp = left_pipeline(t, y, sig);
    TermPtr w = strip_guards_premise(canonical_candidate(lp.pairs));
    if (!witness_verifies(w, t, ctx, sig)) return std::nullopt;
    return w;
}

std::optional<TermPtr> left_interpolant(const TermPtr& t, const std::string& y,
                                        const VarContext& ctx, Sig sig,
                                        const std::optional<TermPtr>& witness,
                                        InterpolantReport* report) {
    require_la_guard(sig, "left_interpolant");
    LeftPipeline lp = left_pipeline(t, y, sig);

    TermPtr w;
    if (witness) {
        w = strip_guards_premise(*witness);
        if (!witness_verifies(w, t, ctx, sig))
            throw WitnessError("left_interpolant: supplied witness fails {w} |= t");
    } else {
        TermPtr cand = strip_guards_premise(canonical_candidate(lp.pairs));
        if (!witness_verifies(cand, t, ctx, sig)) {
            if (report) {
                report->input = t;
                report->variable = y;
                report->output = std::nullopt;
                report->guard_pairs = std::move(lp.guard_pairs);
                report->elim_pairs = std::move(lp.pairs);
            }
            return std::nullopt;
        }
        w = cand;
    }

    // t''' = t'' | w (Lambda | w = w), t* = /\ (s'' |> t''').
    std::vector<TermPtr> conjuncts;
    for (const auto& [sk, tk] : lp.pairs) {
        TermPtr t3 = tk.is_lambda() ? w : Term::join(tk.term, w);
        conjuncts.push_back(Term::guard(sk, t3));
    }
    TermPtr star = meet_all(conjuncts);
    if (report) {
        report->input = t;
        report->variable = y;
        report->output = star;
        report->guard_pairs = std::move(lp.guard_pairs);
        report->elim_pairs = std::move(lp.pairs);
        report->witness_used = w;
    }
    return star;
}

}  // namespace grl
