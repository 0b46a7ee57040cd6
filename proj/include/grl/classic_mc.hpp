// Classical model-completion constructions: the chi formula for ordered
// abelian groups, existential quantifier elimination for divisible ordered
// abelian groups, and the chi formula for dense linear orders with endpoints.
// DLO terms are lattice terms over variables and the endpoints, with the
// bottom endpoint written 0 (Zero) and the top endpoint written 1 (the E
// constant in the shared AST).
#pragma once

#include "grl/qf_formula.hpp"

#include <string>

namespace grl {

// chi(x) for a conjunction of LA literals psi(x,y): entailed disjunctions of
// term comparisons per disjunct plus entailed nonzero-variable disjunctions,
// conjoined with the y-free part of psi; bottom when psi is unsatisfiable
// over ordered abelian groups.
QFPtr chi_oag(const LiteralConjunction& psi, const std::string& y);

// Quantifier-free equivalent of (exists y. psi) over divisible ordered
// abelian groups, by pairing lower and upper bounds on y with strictness
// bookkeeping.
QFPtr qe_doag(const LiteralConjunction& psi, const std::string& y);

// chi for linear orders with endpoints. Supports up to 2 parameters besides
// y (candidate enumeration is exponential in (n+2)^2).
QFPtr chi_dlo(const LiteralConjunction& psi, const std::string& y);

// Validity over all linear orders with endpoints, decided by evaluating on a
// rational grid dense enough to realize every order type of the variables
// plus endpoints, together with the one-element chain.
bool dlo_valid(const QFPtr& f);

// DLO text syntax: terms over identifiers, 0, 1, & and |; literals and
// connectives as in parse_qf.
QFPtr parse_qf_dlo(const std::string& src);
LiteralConjunction parse_literal_conjunction_dlo(const std::string& src);
std::string print_qf_dlo(const QFPtr& f);

}  // namespace grl
