#include "grl/var_elimination.hpp"

#include <algorithm>

namespace grl {

namespace {

// Sum of a join and a meet fragment pointwise: max_i a_i - min_j b_j =
// max_{i,j} (a_i - b_j), and dually. All fragment arithmetic stays flat.
MeetForms meet_plus_meet(const MeetForms& a, const MeetForms& b) {
    MeetForms out;
    for (const auto& fa : a)
        for (const auto& fb : b) out.push_back(fa + fb);
    return canonical_forms(std::move(out));
}

JoinForms join_plus_join(const JoinForms& a, const JoinForms& b) {
    JoinForms out;
    for (const auto& fa : a)
        for (const auto& fb : b) out.push_back(fa + fb);
    return canonical_forms(std::move(out));
}

JoinForms join_minus_meet(const JoinForms& a, const MeetForms& b) {
    JoinForms out;
    for (const auto& fa : a)
        for (const auto& fb : b) out.push_back(fa - fb);
    return canonical_forms(std::move(out));
}

// Zero meet factors are inert in premise position ({u & (e & w)} |= c iff
// {u & w} |= c), so the output premise drops them; e survives only as the
// empty meet.
MeetForms drop_zero_forms(MeetForms m) {
    MeetForms out;
    for (auto& f : m)
        if (!f.is_zero()) out.push_back(std::move(f));
    return out;
}

}  // namespace

JudgmentPair eliminate_basic(const UniformParts& p) {
    MeetForms premise = p.s0;
    if (p.s1 && p.s2) {
        MeetForms sum = meet_plus_meet(*p.s1, *p.s2);
        premise.insert(premise.end(), sum.begin(), sum.end());
    }
    premise = drop_zero_forms(canonical_forms(std::move(premise)));
    TermPtr s_out = meet_forms_to_term(premise);

    JoinForms branches;
    if (p.t0) branches.insert(branches.end(), p.t0->begin(), p.t0->end());
    if (p.t1 && p.t2) {
        JoinForms sum = join_plus_join(*p.t1, *p.t2);
        branches.insert(branches.end(), sum.begin(), sum.end());
    }
    if (p.s1 && p.t1) {
        JoinForms d = join_minus_meet(*p.t1, *p.s1);
        branches.insert(branches.end(), d.begin(), d.end());
    }
    if (p.s2 && p.t2) {
        JoinForms d = join_minus_meet(*p.t2, *p.s2);
        branches.insert(branches.end(), d.begin(), d.end());
    }
    branches = canonical_forms(std::move(branches));
    Conclusion t_out =
        branches.empty() ? Conclusion::lambda() : Conclusion(join_forms_to_term(branches));
    return {s_out, t_out};
}

EliminationResult eliminate(const TermPtr& s, const Conclusion& t, const std::string& y,
                            Sig sig) {
    if (!is_la(sig))
        throw std::invalid_argument("eliminate: LA signature required");
    if (has_guard(s) || (!t.is_lambda() && has_guard(t.term)))
        throw std::invalid_argument("eliminate: inputs must be guard-free");

    GroupNormalForm s_nf = la_normalize(s);
    std::vector<std::optional<JoinForms>> conjuncts;
    if (t.is_lambda()) {
        conjuncts.push_back(std::nullopt);
    } else {
        for (auto& j : la_normalize_cnf(t.term)) conjuncts.emplace_back(std::move(j));
    }

    EliminationResult res;
    for (const auto& meet : s_nf.disjuncts)
        for (const auto& conj : conjuncts) {
            UniformParts parts = uniformize_y(meet, conj, y);
            res.k_scale = int_lcm(res.k_scale, parts.k);
            res.pairs.push_back(eliminate_basic(parts));
        }
    return res;
}

}  // namespace grl
