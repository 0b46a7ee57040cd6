// Normal forms for guard-free LA terms: joins of meets of homogeneous integer
// linear forms (R interprets * as +, \ and / as differences, & as min, | as
// max, and both constants as 0, so every guard-free LA term is a min-max
// combination of integer forms).
#pragma once

#include "grl/term.hpp"

#include <map>
#include <optional>
#include <vector>

namespace grl {

// Homogeneous linear form; no zero coefficients stored, the empty map is the
// constant 0 (= e in LA).
struct LinForm {
    std::map<std::string, Int> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    Int coeff(const std::string& v) const {
        auto it = coeffs.find(v);
        return it == coeffs.end() ? Int(0) : it->second;
    }
    void set(const std::string& v, Int c) {
        if (c == 0) coeffs.erase(v);
        else coeffs[v] = std::move(c);
    }

    friend LinForm operator+(const LinForm& a, const LinForm& b);
    friend LinForm operator-(const LinForm& a, const LinForm& b);
    LinForm scaled(const Int& m) const;
    LinForm negated() const;

    Rat value_at(const std::map<std::string, Rat>& point) const;

    auto operator<=>(const LinForm&) const = default;
};

// Both are plain form lists; the alias records which lattice connective the
// list abbreviates.
using MeetForms = std::vector<LinForm>;  // min over the forms
using JoinForms = std::vector<LinForm>;  // max over the forms

struct GroupNormalForm {
    std::vector<MeetForms> disjuncts;  // non-empty join of non-empty meets

    Rat value_at(const std::map<std::string, Rat>& point) const;
    auto operator<=>(const GroupNormalForm&) const = default;
};

// Canonicalization: sort+dedupe forms within a meet, drop meets that are
// supersets of other meets (min over a superset is pointwise smaller, so the
// branch is redundant inside a join), sort+dedupe the disjunct list.
MeetForms canonical_forms(MeetForms m);
GroupNormalForm canonical(GroupNormalForm nf);

// Join-of-meets normal form of a guard-free LA term; pointwise equal over R.
// Throws std::invalid_argument on Guard/Delta nodes.
GroupNormalForm la_normalize(const TermPtr& t);

// Meet-of-joins of t (dual normal form), computed as the formwise negation of
// la_normalize(-t).
std::vector<JoinForms> la_normalize_cnf(const TermPtr& t);

// Consequence-preserving scalings (m >= 1): {u & v} |= w iff {u & m*v} |= w
// scales one premise meet factor; {u} |= v | w iff {u} |= v | m*w scales one
// conclusion join branch.
MeetForms scale_meet_factor(MeetForms m, size_t factor_index, const Int& multiplier);
JoinForms scale_join_branch(JoinForms j, size_t branch_index, const Int& multiplier);

// Term reconstruction: forms map back to products of variables and their
// formal inverses (x\e), variables in name order.
TermPtr form_to_term(const LinForm& f);
TermPtr meet_forms_to_term(const MeetForms& m);
TermPtr join_forms_to_term(const JoinForms& j);
TermPtr nf_to_term(const GroupNormalForm& nf);

// ---------------------------------------------------------------------------
// Uniformization for one-variable elimination: the meet (premise side) and
// join (conclusion side) of a pair are rescaled so every y-coefficient is
// +-k (k = lcm over both sides), then fused: all (a_i + ky) factors into
// s1 + ky with s1 the meet of the a_i, dually on the other side.

struct UniformParts {
    Int k{1};
    MeetForms s0;                    // y-free premise factors (empty = e)
    std::optional<MeetForms> s1;     // x-parts of the fused s1 + ky factor
    std::optional<MeetForms> s2;     // x-parts of the fused s2 - ky factor
    std::optional<JoinForms> t0;     // y-free conclusion branches; nullopt = Lambda
    std::optional<JoinForms> t1;     // x-parts of the fused t1 + ky branch
    std::optional<JoinForms> t2;     // x-parts of the fused t2 - ky branch
};

// conclusion_join: nullopt encodes Lambda.
UniformParts uniformize_y(const MeetForms& premise,
                          const std::optional<JoinForms>& conclusion_join,
                          const std::string& y);

}  // namespace grl
