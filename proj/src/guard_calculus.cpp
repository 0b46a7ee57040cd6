#include "grl/guard_calculus.hpp"

namespace grl {

namespace {

void require_guard_sig(Sig sig, const char* who) {
    if (!allows_guard(sig))
        throw std::invalid_argument(std::string(who) + ": guard signature required");
}

// Leftmost-innermost guard node (both children guard-free), post-order DFS.
TermPtr innermost_guard(const TermPtr& t) {
    if (!t) return nullptr;
    if (TermPtr l = innermost_guard(t->left())) return l;
    if (TermPtr r = innermost_guard(t->right())) return r;
    return t->kind() == Kind::Guard ? t : nullptr;
}

// Replace the first DFS occurrence pointer-equal to `target`.
TermPtr replace_first(const TermPtr& t, const TermPtr& target, const TermPtr& repl,
                      bool& done) {
    if (done || !t) return t;
    if (t == target) {
        done = true;
        return repl;
    }
    switch (t->kind()) {
        case Kind::Var:
        case Kind::E:
        case Kind::Zero:
            return t;
        case Kind::Delta: {
            TermPtr l = replace_first(t->left(), target, repl, done);
            return l == t->left() ? t : Term::delta(std::move(l));
        }
        default: {
            TermPtr l = replace_first(t->left(), target, repl, done);
            TermPtr r = replace_first(t->right(), target, repl, done);
            if (l == t->left() && r == t->right()) return t;
            return std::make_shared<Term>(t->kind(), "", std::move(l), std::move(r));
        }
    }
}

TermPtr replace_occurrence(const TermPtr& t, const TermPtr& target, const TermPtr& repl) {
    bool done = false;
    return replace_first(t, target, repl, done);
}

void eliminate_rec(const TermPtr& s, const Conclusion& t, std::vector<JudgmentPair>& out) {
    if (TermPtr g = innermost_guard(s)) {
        // {u & s'[s2] & s1} |= t | v  and  {u & s'[e]} |= t | s1 | v
        eliminate_rec(Term::meet(replace_occurrence(s, g, g->right()), g->left()), t, out);
        eliminate_rec(replace_occurrence(s, g, Term::e()), join_concl(t, g->left()), out);
        return;
    }
    if (!t.is_lambda()) {
        if (TermPtr g = innermost_guard(t.term)) {
            // {u & s & t1} |= t'[t2] | v  and  {u & s} |= t'[e] | t1 | v
            eliminate_rec(Term::meet(s, g->left()),
                          Conclusion(replace_occurrence(t.term, g, g->right())), out);
            eliminate_rec(
                s, Conclusion(Term::join(replace_occurrence(t.term, g, Term::e()), g->left())),
                out);
            return;
        }
    }
    out.push_back({s, t});
}

}  // namespace

Judgment deduction_right(const std::vector<TermPtr>& premises, const TermPtr& s,
                         const Conclusion& t, Sig sig) {
    require_guard_sig(sig, "deduction_right");
    if (t.is_lambda())
        throw std::invalid_argument("deduction_right: s |> Lambda is never formed");
    return Judgment{premises, Conclusion(Term::guard(s, t.term))};
}

Judgment deduction_left(const std::vector<TermPtr>& premises, const Conclusion& conclusion,
                        Sig sig) {
    require_guard_sig(sig, "deduction_left");
    if (conclusion.is_lambda() || conclusion.term->kind() != Kind::Guard)
        throw std::invalid_argument("deduction_left: conclusion must be s |> t");
    Judgment j;
    j.premises = premises;
    j.premises.push_back(conclusion.term->left());
    j.conclusion = Conclusion(conclusion.term->right());
    return j;
}

Judgment reverse_disjunct(const std::vector<TermPtr>& premises, const Conclusion& s,
                          const Conclusion& t, const VarContext& ctx, Sig sig) {
    require_guard_sig(sig, "reverse_disjunct");
    Judgment j;
    j.premises = premises;
    j.premises.push_back(nabla(s, ctx, sig));
    j.conclusion = t;
    return j;
}

GuardElimResult eliminate_guards(const TermPtr& s, const Conclusion& t, Sig sig) {
    require_guard_sig(sig, "eliminate_guards");
    TermPtr s_in = has_delta(s) ? mv_delta_expand(s) : s;
    Conclusion t_in = t;
    if (!t.is_lambda() && has_delta(t.term)) t_in = Conclusion(mv_delta_expand(t.term));
    GuardElimResult res;
    eliminate_rec(s_in, t_in, res.pairs);
    return res;
}

TermPtr strip_guards_premise(TermPtr w) {
    if (has_delta(w)) w = mv_delta_expand(w);
    while (TermPtr g = innermost_guard(w))
        w = Term::meet(replace_occurrence(w, g, g->right()), g->left());
    return w;
}

}  // namespace grl
