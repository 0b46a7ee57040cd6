// Quantifier-free boolean combinations of LA literals (equations s ~ t,
// inequalities s <= t and s < t), shared by the ordered-abelian-group oracle
// and the classical model-completion constructions. s < t abbreviates
// (s <= t) & !(s ~ t); negation is pushed onto literals when normalizing.
#pragma once

#include "grl/term.hpp"

#include <memory>
#include <string>
#include <vector>

namespace grl {

enum class LitRel { Eq, Le, Lt };

class QF;
using QFPtr = std::shared_ptr<const QF>;

class QF {
  public:
    enum class Kind { Lit, And, Or, Not, True, False };

    static QFPtr lit(LitRel rel, TermPtr lhs, TermPtr rhs);
    static QFPtr conj(QFPtr l, QFPtr r);
    static QFPtr disj(QFPtr l, QFPtr r);
    static QFPtr neg(QFPtr f);
    static QFPtr top();
    static QFPtr bot();

    static QFPtr conj_all(const std::vector<QFPtr>& fs);  // empty = top
    static QFPtr disj_all(const std::vector<QFPtr>& fs);  // empty = bot

    Kind kind() const { return kind_; }
    LitRel rel() const { return rel_; }
    const TermPtr& lhs() const { return lhs_; }
    const TermPtr& rhs() const { return rhs_; }
    const QFPtr& left() const { return l_; }
    const QFPtr& right() const { return r_; }

    QF(Kind k, LitRel rel, TermPtr lhs, TermPtr rhs, QFPtr l, QFPtr r)
        : kind_(k), rel_(rel), lhs_(std::move(lhs)), rhs_(std::move(rhs)),
          l_(std::move(l)), r_(std::move(r)) {}

  private:
    Kind kind_;
    LitRel rel_;
    TermPtr lhs_, rhs_;
    QFPtr l_, r_;
};

std::set<std::string> qf_free_vars(const QFPtr& f);

// Signed literal and the psi+/psi- split of a literal conjunction. The split
// follows the abbreviation s < t := (s <= t) & !(s ~ t): a strict literal
// contributes a positive inequality and a negated equation.
struct Literal {
    LitRel rel = LitRel::Eq;
    TermPtr lhs, rhs;
    bool negated = false;
};

struct LiteralConjunction {
    std::vector<Literal> positive;  // equations and inequalities (Eq/Le, not negated)
    std::vector<Literal> negative;  // negated equations

    static LiteralConjunction from_literals(const std::vector<Literal>& lits);

    QFPtr to_formula() const;
    QFPtr positive_formula() const;
    std::set<std::string> vars() const;
};

// Text format: literals `s == t`, `s <= t`, `s < t`, connectives `&&`, `||`,
// `!`, constants `true`/`false`; term syntax as in parse_term.
QFPtr parse_qf(const std::string& src, Sig sig);
LiteralConjunction parse_literal_conjunction(const std::string& src, Sig sig);
std::string print_qf(const QFPtr& f, Sig sig);

}  // namespace grl
