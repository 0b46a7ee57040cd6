// Terms of the pointed-residuated-lattice language L = {&,|,*,\,/,e,0} and
// its guard extension L|> = L + {|>}, plus the derived operations the rest of
// the library builds on (x==y, nabla, powers, MV Delta).
//
// Terms are immutable trees shared through shared_ptr; every operation here
// is pure, so terms can be freely shared across threads.
#pragma once

#include "grl/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace grl {

// ---------------------------------------------------------------------------
// Signature

enum class Sig { LA, LAGuard, MV, MVGuard, PRL, PRLGuard };

inline bool allows_guard(Sig s) {
    return s == Sig::LAGuard || s == Sig::MVGuard || s == Sig::PRLGuard;
}
inline bool is_la(Sig s) { return s == Sig::LA || s == Sig::LAGuard; }
inline bool is_mv(Sig s) { return s == Sig::MV || s == Sig::MVGuard; }
inline bool is_prl(Sig s) { return s == Sig::PRL || s == Sig::PRLGuard; }

const char* sig_name(Sig s);
std::optional<Sig> sig_from_name(const std::string& name);

// ---------------------------------------------------------------------------
// Term

enum class Kind {
    Var,
    E,     // monoid unit e
    Zero,  // distinguished constant 0
    Meet,
    Join,
    Prod,
    LRes,  // l \ r
    RRes,  // l / r
    Guard, // l |> r
    Delta, // MV_GUARD sugar; eliminated by mv_delta_expand
};

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
  public:
    static TermPtr var(std::string name);
    static TermPtr e();
    static TermPtr zero();
    static TermPtr meet(TermPtr l, TermPtr r);
    static TermPtr join(TermPtr l, TermPtr r);
    static TermPtr prod(TermPtr l, TermPtr r);
    static TermPtr lres(TermPtr l, TermPtr r);
    static TermPtr rres(TermPtr l, TermPtr r);
    static TermPtr guard(TermPtr l, TermPtr r);
    static TermPtr delta(TermPtr arg);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const TermPtr& left() const { return left_; }
    const TermPtr& right() const { return right_; }

    bool is_binary() const { return static_cast<bool>(right_); }

    Term(Kind k, std::string name, TermPtr l, TermPtr r)
        : kind_(k), name_(std::move(name)), left_(std::move(l)), right_(std::move(r)) {}

  private:
    Kind kind_;
    std::string name_;
    TermPtr left_, right_;
};

bool equal(const TermPtr& a, const TermPtr& b);

// Meet/join over a list, left-associated. Empty meet = e; joins must be
// non-empty (the empty join is Lambda, which is not a term).
TermPtr meet_all(const std::vector<TermPtr>& ts);
TermPtr join_all(const std::vector<TermPtr>& ts);

// ---------------------------------------------------------------------------
// Conclusion: a term or the absent marker Lambda (neutral for join; as a
// conclusion it denotes premise-unsatisfiability).

struct Conclusion {
    TermPtr term;  // null = Lambda

    Conclusion() = default;
    Conclusion(TermPtr t) : term(std::move(t)) {}
    static Conclusion lambda() { return Conclusion(); }
    bool is_lambda() const { return !term; }
};

inline Conclusion join_concl(const Conclusion& c, const TermPtr& t) {
    if (c.is_lambda()) return Conclusion(t);
    return Conclusion(Term::join(c.term, t));
}
inline Conclusion join_concl(const TermPtr& t, const Conclusion& c) {
    if (c.is_lambda()) return Conclusion(t);
    return Conclusion(Term::join(t, c.term));
}

// ---------------------------------------------------------------------------
// VarContext: ambient variables x1..xn, optional eliminable variable y, and
// parameters z1..zm; the three groups are pairwise disjoint. Order is the
// declaration order and fixes the conjunction order inside nabla.

class VarContext {
  public:
    VarContext() = default;
    VarContext(std::vector<std::string> xs, std::optional<std::string> y,
               std::vector<std::string> zs);

    const std::vector<std::string>& xs() const { return xs_; }
    const std::optional<std::string>& eliminable() const { return y_; }
    const std::vector<std::string>& zs() const { return zs_; }

    bool declares(const std::string& name) const;
    std::vector<std::string> all() const;

  private:
    std::vector<std::string> xs_;
    std::optional<std::string> y_;
    std::vector<std::string> zs_;
};

// ---------------------------------------------------------------------------
// Operations

std::set<std::string> free_vars(const TermPtr& t);
void collect_free_vars(const TermPtr& t, std::set<std::string>& out);

TermPtr substitute(const TermPtr& t, const std::map<std::string, TermPtr>& m);

// x==y := (x\y) & (y\x) & e; equals e exactly when the arguments are equal.
TermPtr equiv(const TermPtr& s, const TermPtr& t);

// nabla s := s |> ((0==e) & /\_j (x_j==e)) over the context's xs;
// nabla Lambda := e. Requires a guard signature.
TermPtr nabla(const Conclusion& s, const VarContext& ctx, Sig sig);

// t^n with t^0 = e, t^(n+1) = t * t^n.
TermPtr power(const TermPtr& t, unsigned n);

// a <= b as the premise-shaped term a\b (e <= a\b iff a <= b).
inline TermPtr leq_term(const TermPtr& a, const TermPtr& b) { return Term::lres(a, b); }

// MV_GUARD Delta sugar: expand rewrites Delta x -> (x|>0)|>0; introduce
// rewrites x|>y -> ~Delta x ++ y (Delta kept abstract), where
// ~a = a\0 and a ++ b = (a\0)\b.
TermPtr mv_delta_expand(const TermPtr& t);
TermPtr mv_delta_introduce(const TermPtr& t);

bool has_guard(const TermPtr& t);
bool has_delta(const TermPtr& t);

// ---------------------------------------------------------------------------
// Standard-model evaluation (used by tests and witness checks).
// LA: R with min/max/+, e = 0 = group identity.
// MV: [0,1] with Lukasiewicz operations, e = 1.

Rat eval_la(const TermPtr& t, const std::map<std::string, Rat>& point);
Rat eval_mv(const TermPtr& t, const std::map<std::string, Rat>& point);
Rat eval_model(Sig sig, const TermPtr& t, const std::map<std::string, Rat>& point);

// Model-specific threshold for "e <= t": 0 for LA, 1 for MV.
Rat unit_value(Sig sig);

}  // namespace grl
