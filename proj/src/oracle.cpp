#include "grl/oracle.hpp"

#include "grl/constraints.hpp"
#include "grl/linform.hpp"
#include "grl/mv_pieces.hpp"

#include <algorithm>

namespace grl {

namespace {

// ---------------------------------------------------------------------------
// Constraint search: a problem is a list of items, each a disjunction of
// constraint bundles; satisfiability means picking one bundle per item so the
// union is feasible. Bundles are explored depth-first with Fourier-Motzkin
// pruning (adding constraints can never make an infeasible prefix feasible).

using Bundle = std::vector<LinearConstraint>;
using OrItem = std::vector<Bundle>;

class SatSearch {
  public:
    SatSearch(std::vector<OrItem> items, bool unit_box) : items_(std::move(items)) {
        sys_.unit_box = unit_box;
        // Deterministic branching-factor order: forced items first.
        std::stable_sort(items_.begin(), items_.end(),
                         [](const OrItem& a, const OrItem& b) { return a.size() < b.size(); });
    }

    bool run(std::map<std::string, Rat>* witness_out) {
        bool sat = step(0);
        if (sat && witness_out) *witness_out = witness_;
        return sat;
    }

  private:
    bool step(size_t idx) {
        FmResult fm = fm_feasible(sys_);
        if (!fm.feasible) return false;
        if (idx == items_.size()) {
            witness_ = fm.witness;
            return true;
        }
        for (const Bundle& alt : items_[idx]) {
            size_t mark = sys_.constraints.size();
            for (const auto& c : alt) sys_.add(c);
            if (step(idx + 1)) return true;
            sys_.constraints.resize(mark);
        }
        return false;
    }

    std::vector<OrItem> items_;
    ConstraintSystem sys_;
    std::map<std::string, Rat> witness_;
};

// ---------------------------------------------------------------------------
// LA atoms: sign conditions on join-of-meets normal forms.

enum class NfRel { GE0, GT0, LE0, LT0 };

// sigma >= 0 (max of mins): some disjunct has all forms >= 0.
// sigma < 0: every disjunct has some form < 0 -- one item per disjunct.
void push_nf_atom(std::vector<OrItem>& items, const GroupNormalForm& nf, NfRel rel) {
    switch (rel) {
        case NfRel::GE0:
        case NfRel::GT0: {
            OrItem item;
            for (const auto& meet : nf.disjuncts) {
                Bundle b;
                for (const auto& f : meet)
                    b.push_back(rel == NfRel::GE0 ? form_ge0(f) : form_gt0(f));
                item.push_back(std::move(b));
            }
            items.push_back(std::move(item));
            break;
        }
        case NfRel::LE0:
        case NfRel::LT0: {
            for (const auto& meet : nf.disjuncts) {
                OrItem item;
                for (const auto& f : meet)
                    item.push_back(Bundle{rel == NfRel::LE0 ? form_le0(f) : form_lt0(f)});
                items.push_back(std::move(item));
            }
            break;
        }
    }
}

// ---------------------------------------------------------------------------
// Guard removal for the LA model: innermost-first sign case splits.

struct SignCond {
    TermPtr term;  // guard-free
    bool nonneg;
};

struct GuardBranch {
    std::vector<SignCond> conds;
    TermPtr pure;
};

TermPtr innermost_guard(const TermPtr& t) {
    if (!t) return nullptr;
    if (TermPtr l = innermost_guard(t->left())) return l;
    if (TermPtr r = innermost_guard(t->right())) return r;
    return t->kind() == Kind::Guard ? t : nullptr;
}

// Replace every occurrence structurally equal to `target` (all such
// occurrences take the same value, so one sign split covers them).
TermPtr replace_equal(const TermPtr& t, const TermPtr& target, const TermPtr& repl) {
    if (equal(t, target)) return repl;
    switch (t->kind()) {
        case Kind::Var:
        case Kind::E:
        case Kind::Zero:
            return t;
        case Kind::Delta:
            return Term::delta(replace_equal(t->left(), target, repl));
        default: {
            TermPtr l = replace_equal(t->left(), target, repl);
            TermPtr r = replace_equal(t->right(), target, repl);
            if (l == t->left() && r == t->right()) return t;
            return std::make_shared<Term>(t->kind(), "", std::move(l), std::move(r));
        }
    }
}

void la_guard_split(const TermPtr& t, std::vector<SignCond>& conds,
                    std::vector<GuardBranch>& out) {
    TermPtr g = innermost_guard(t);
    if (!g) {
        out.push_back(GuardBranch{conds, t});
        return;
    }
    conds.push_back(SignCond{g->left(), true});
    la_guard_split(replace_equal(t, g, g->right()), conds, out);
    conds.back() = SignCond{g->left(), false};
    la_guard_split(replace_equal(t, g, Term::e()), conds, out);
    conds.pop_back();
}

std::vector<GuardBranch> la_guard_branches(const TermPtr& t) {
    std::vector<GuardBranch> out;
    std::vector<SignCond> conds;
    la_guard_split(t, conds, out);
    return out;
}

void push_cond_atoms(std::vector<OrItem>& items, const std::vector<SignCond>& conds) {
    for (const auto& c : conds)
        push_nf_atom(items, la_normalize(c.term), c.nonneg ? NfRel::GE0 : NfRel::LT0);
}

// ---------------------------------------------------------------------------
// MV atoms.

void push_mv_atom(std::vector<OrItem>& items, const TermPtr& t, bool at_least_one) {
    OrItem item;
    for (const auto& piece : mv_pieces(t)) {
        Bundle b = piece.guards;
        b.push_back(at_least_one ? affine_ge(piece.value, Rat(1))
                                 : affine_lt(piece.value, Rat(1)));
        item.push_back(std::move(b));
    }
    items.push_back(std::move(item));
}

void fill_defaults(std::map<std::string, Rat>& point, const VarContext& ctx) {
    for (const auto& v : ctx.all())
        if (!point.count(v)) point.emplace(v, Rat(0));
}

}  // namespace

DecideResult decide(Sig sig, const VarContext& ctx, const std::vector<TermPtr>& premises,
                    const Conclusion& conclusion) {
    if (is_prl(sig))
        throw std::invalid_argument("decide: no standard model for PRL signatures");
    auto check_term = [&](const TermPtr& t) {
        for (const auto& v : free_vars(t))
            if (!ctx.declares(v))
                throw std::invalid_argument("decide: undeclared variable " + v);
        if (!allows_guard(sig) && has_guard(t))
            throw std::invalid_argument(std::string("decide: guard node under ") + sig_name(sig));
        if (has_delta(t) && sig != Sig::MVGuard)
            throw std::invalid_argument("decide: Delta requires MV_GUARD");
    };
    for (const auto& p : premises) check_term(p);
    if (!conclusion.is_lambda()) check_term(conclusion.term);

    DecideResult res;

    if (is_mv(sig)) {
        std::vector<OrItem> items;
        for (const auto& p : premises) push_mv_atom(items, p, true);
        if (!conclusion.is_lambda()) push_mv_atom(items, conclusion.term, false);
        std::map<std::string, Rat> witness;
        if (SatSearch(std::move(items), true).run(&witness)) {
            fill_defaults(witness, ctx);
            res.holds = false;
            res.counterexample = std::move(witness);
        } else {
            res.holds = true;
        }
        return res;
    }

    // LA: enumerate guard sign-splits of every term, then search.
    std::vector<std::vector<GuardBranch>> premise_branches;
    for (const auto& p : premises) premise_branches.push_back(la_guard_branches(p));
    std::vector<GuardBranch> conclusion_branches;
    if (!conclusion.is_lambda()) conclusion_branches = la_guard_branches(conclusion.term);
    else conclusion_branches.push_back(GuardBranch{});  // placeholder, no conclusion atom

    std::vector<size_t> pick(premise_branches.size(), 0);
    while (true) {
        for (const auto& cbr : conclusion_branches) {
            std::vector<OrItem> items;
            for (size_t i = 0; i < premise_branches.size(); ++i) {
                const GuardBranch& br = premise_branches[i][pick[i]];
                push_cond_atoms(items, br.conds);
                push_nf_atom(items, la_normalize(br.pure), NfRel::GE0);
            }
            if (!conclusion.is_lambda()) {
                push_cond_atoms(items, cbr.conds);
                push_nf_atom(items, la_normalize(cbr.pure), NfRel::LT0);
            }
            std::map<std::string, Rat> witness;
            if (SatSearch(std::move(items), false).run(&witness)) {
                fill_defaults(witness, ctx);
                res.holds = false;
                res.counterexample = std::move(witness);
                return res;
            }
        }
        size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < premise_branches[i].size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
    res.holds = true;
    return res;
}

bool decide_bool(Sig sig, const VarContext& ctx, const std::vector<TermPtr>& premises,
                 const Conclusion& conclusion) {
    return decide(sig, ctx, premises, conclusion).holds;
}

// ---------------------------------------------------------------------------
// Quantifier-free validity over ordered abelian groups.

namespace {

struct SLit {
    LitRel rel;
    TermPtr lhs, rhs;
};

// NNF with negation resolved at the literal level:
// !(s~t) = s<t or t<s, !(s<=t) = t<s, !(s<t) = t<=s.
QFPtr nnf(const QFPtr& f, bool neg) {
    switch (f->kind()) {
        case QF::Kind::True: return neg ? QF::bot() : QF::top();
        case QF::Kind::False: return neg ? QF::top() : QF::bot();
        case QF::Kind::Not: return nnf(f->left(), !neg);
        case QF::Kind::And: {
            QFPtr l = nnf(f->left(), neg), r = nnf(f->right(), neg);
            return neg ? QF::disj(l, r) : QF::conj(l, r);
        }
        case QF::Kind::Or: {
            QFPtr l = nnf(f->left(), neg), r = nnf(f->right(), neg);
            return neg ? QF::conj(l, r) : QF::disj(l, r);
        }
        case QF::Kind::Lit:
            if (!neg) return f;
            switch (f->rel()) {
                case LitRel::Eq:
                    return QF::disj(QF::lit(LitRel::Lt, f->lhs(), f->rhs()),
                                    QF::lit(LitRel::Lt, f->rhs(), f->lhs()));
                case LitRel::Le: return QF::lit(LitRel::Lt, f->rhs(), f->lhs());
                case LitRel::Lt: return QF::lit(LitRel::Le, f->rhs(), f->lhs());
            }
    }
    throw std::logic_error("nnf: bad kind");
}

void dnf(const QFPtr& f, std::vector<SLit> current, std::vector<std::vector<SLit>>& out) {
    switch (f->kind()) {
        case QF::Kind::True:
            out.push_back(std::move(current));
            return;
        case QF::Kind::False:
            return;
        case QF::Kind::Lit:
            current.push_back(SLit{f->rel(), f->lhs(), f->rhs()});
            out.push_back(std::move(current));
            return;
        case QF::Kind::And: {
            // flatten the left conjunct into every disjunct of the right
            std::vector<std::vector<SLit>> ls;
            dnf(f->left(), {}, ls);
            for (const auto& l : ls) {
                std::vector<SLit> cur = current;
                cur.insert(cur.end(), l.begin(), l.end());
                dnf(f->right(), std::move(cur), out);
            }
            return;
        }
        case QF::Kind::Or:
            dnf(f->left(), current, out);
            dnf(f->right(), std::move(current), out);
            return;
        case QF::Kind::Not:
            throw std::logic_error("dnf: formula not in NNF");
    }
}

// s - t as an LA term.
TermPtr diff_term(const TermPtr& s, const TermPtr& t) {
    return Term::prod(s, Term::lres(t, Term::e()));
}

bool conjunct_satisfiable_over_R(const std::vector<SLit>& lits) {
    std::vector<OrItem> items;
    for (const auto& lit : lits) {
        GroupNormalForm d = la_normalize(diff_term(lit.lhs, lit.rhs));
        switch (lit.rel) {
            case LitRel::Eq:
                push_nf_atom(items, d, NfRel::GE0);
                push_nf_atom(items, d, NfRel::LE0);
                break;
            case LitRel::Le: push_nf_atom(items, d, NfRel::LE0); break;
            case LitRel::Lt: push_nf_atom(items, d, NfRel::LT0); break;
        }
    }
    return SatSearch(std::move(items), false).run(nullptr);
}

bool trivially_valid(const QFPtr& f) {
    switch (f->kind()) {
        case QF::Kind::True: return true;
        case QF::Kind::False: return false;
        case QF::Kind::Not: return !trivially_valid(f->left());
        case QF::Kind::And: return trivially_valid(f->left()) && trivially_valid(f->right());
        case QF::Kind::Or: return trivially_valid(f->left()) || trivially_valid(f->right());
        case QF::Kind::Lit: return f->rel() != LitRel::Lt;  // all terms collapse
    }
    throw std::logic_error("trivially_valid: bad kind");
}

}  // namespace

bool valid_over_reals(const QFPtr& formula) {
    std::vector<std::vector<SLit>> disjuncts;
    dnf(nnf(formula, true), {}, disjuncts);
    for (const auto& d : disjuncts)
        if (conjunct_satisfiable_over_R(d)) return false;
    return true;
}

bool decide_oag_qf(const QFPtr& formula) {
    return valid_over_reals(formula) && trivially_valid(formula);
}

}  // namespace grl
