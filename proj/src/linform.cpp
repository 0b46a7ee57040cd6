#include "grl/linform.hpp"

#include <algorithm>

namespace grl {

LinForm operator+(const LinForm& a, const LinForm& b) {
    LinForm out = a;
    for (const auto& [v, c] : b.coeffs) out.set(v, out.coeff(v) + c);
    return out;
}

LinForm operator-(const LinForm& a, const LinForm& b) {
    LinForm out = a;
    for (const auto& [v, c] : b.coeffs) out.set(v, out.coeff(v) - c);
    return out;
}

LinForm LinForm::scaled(const Int& m) const {
    LinForm out;
    if (m == 0) return out;
    for (const auto& [v, c] : coeffs) out.coeffs.emplace(v, c * m);
    return out;
}

LinForm LinForm::negated() const { return scaled(Int(-1)); }

Rat LinForm::value_at(const std::map<std::string, Rat>& point) const {
    Rat acc(0);
    for (const auto& [v, c] : coeffs) {
        auto it = point.find(v);
        if (it == point.end()) throw std::invalid_argument("LinForm: unbound variable " + v);
        acc += Rat(c) * it->second;
    }
    return acc;
}

Rat GroupNormalForm::value_at(const std::map<std::string, Rat>& point) const {
    std::optional<Rat> best;
    for (const auto& meet : disjuncts) {
        std::optional<Rat> m;
        for (const auto& f : meet) {
            Rat v = f.value_at(point);
            if (!m || v < *m) m = v;
        }
        if (!best || *m > *best) best = m;
    }
    return *best;
}

MeetForms canonical_forms(MeetForms m) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    return m;
}

namespace {
// a subset-of b, both sorted
bool subset_of(const MeetForms& a, const MeetForms& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}
}  // namespace

GroupNormalForm canonical(GroupNormalForm nf) {
    for (auto& m : nf.disjuncts) m = canonical_forms(std::move(m));
    std::sort(nf.disjuncts.begin(), nf.disjuncts.end());
    nf.disjuncts.erase(std::unique(nf.disjuncts.begin(), nf.disjuncts.end()),
                       nf.disjuncts.end());
    std::vector<MeetForms> kept;
    for (size_t i = 0; i < nf.disjuncts.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < nf.disjuncts.size() && !dominated; ++j)
            if (i != j && subset_of(nf.disjuncts[j], nf.disjuncts[i]))
                dominated = true;  // strict subset: duplicates already removed
        if (!dominated) kept.push_back(nf.disjuncts[i]);
    }
    nf.disjuncts = std::move(kept);
    return nf;
}

namespace {

GroupNormalForm nf_const_zero() { return GroupNormalForm{{MeetForms{LinForm{}}}}; }

GroupNormalForm nf_var(const std::string& name) {
    LinForm f;
    f.set(name, Int(1));
    return GroupNormalForm{{MeetForms{f}}};
}

// max distributes over min and +: combine disjunct-by-disjunct.
GroupNormalForm nf_join(const GroupNormalForm& a, const GroupNormalForm& b) {
    GroupNormalForm out = a;
    out.disjuncts.insert(out.disjuncts.end(), b.disjuncts.begin(), b.disjuncts.end());
    return out;
}

GroupNormalForm nf_meet(const GroupNormalForm& a, const GroupNormalForm& b) {
    GroupNormalForm out;
    for (const auto& ma : a.disjuncts)
        for (const auto& mb : b.disjuncts) {
            MeetForms m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            out.disjuncts.push_back(std::move(m));
        }
    return out;
}

GroupNormalForm nf_sum(const GroupNormalForm& a, const GroupNormalForm& b) {
    GroupNormalForm out;
    for (const auto& ma : a.disjuncts)
        for (const auto& mb : b.disjuncts) {
            MeetForms m;
            for (const auto& fa : ma)
                for (const auto& fb : mb) m.push_back(fa + fb);
            out.disjuncts.push_back(std::move(m));
        }
    return out;
}

// -(join of meets) = meet of joins of negated forms; redistribute by choosing
// one form per disjunct.
GroupNormalForm nf_neg(const GroupNormalForm& a) {
    GroupNormalForm out;
    std::vector<size_t> choice(a.disjuncts.size(), 0);
    while (true) {
        MeetForms m;
        for (size_t d = 0; d < a.disjuncts.size(); ++d)
            m.push_back(a.disjuncts[d][choice[d]].negated());
        out.disjuncts.push_back(std::move(m));
        size_t d = 0;
        for (; d < choice.size(); ++d) {
            if (++choice[d] < a.disjuncts[d].size()) break;
            choice[d] = 0;
        }
        if (d == choice.size()) break;
    }
    return out;
}

GroupNormalForm normalize_rec(const TermPtr& t) {
    switch (t->kind()) {
        case Kind::Var: return nf_var(t->name());
        case Kind::E:
        case Kind::Zero: return nf_const_zero();
        case Kind::Meet:
            return canonical(nf_meet(normalize_rec(t->left()), normalize_rec(t->right())));
        case Kind::Join:
            return canonical(nf_join(normalize_rec(t->left()), normalize_rec(t->right())));
        case Kind::Prod:
            return canonical(nf_sum(normalize_rec(t->left()), normalize_rec(t->right())));
        case Kind::LRes:  // a\b = b - a
            return canonical(
                nf_sum(normalize_rec(t->right()), nf_neg(normalize_rec(t->left()))));
        case Kind::RRes:  // a/b = a - b
            return canonical(
                nf_sum(normalize_rec(t->left()), nf_neg(normalize_rec(t->right()))));
        case Kind::Guard:
            throw std::invalid_argument("la_normalize: guard node in guard-free normalization");
        case Kind::Delta:
            throw std::invalid_argument("la_normalize: Delta is not an LA term");
    }
    throw std::logic_error("la_normalize: bad kind");
}

}  // namespace

GroupNormalForm la_normalize(const TermPtr& t) { return canonical(normalize_rec(t)); }

std::vector<JoinForms> la_normalize_cnf(const TermPtr& t) {
    GroupNormalForm neg = la_normalize(Term::lres(t, Term::e()));  // -t
    std::vector<JoinForms> out;
    for (const auto& meet : neg.disjuncts) {
        JoinForms j;
        for (const auto& f : meet) j.push_back(f.negated());
        out.push_back(canonical_forms(std::move(j)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MeetForms scale_meet_factor(MeetForms m, size_t factor_index, const Int& multiplier) {
    if (multiplier < 1) throw std::invalid_argument("scale_meet_factor: multiplier must be >= 1");
    if (factor_index >= m.size()) throw std::invalid_argument("scale_meet_factor: bad index");
    m[factor_index] = m[factor_index].scaled(multiplier);
    return m;
}

JoinForms scale_join_branch(JoinForms j, size_t branch_index, const Int& multiplier) {
    if (multiplier < 1) throw std::invalid_argument("scale_join_branch: multiplier must be >= 1");
    if (branch_index >= j.size()) throw std::invalid_argument("scale_join_branch: bad index");
    j[branch_index] = j[branch_index].scaled(multiplier);
    return j;
}

TermPtr form_to_term(const LinForm& f) {
    TermPtr pos, neg;
    auto append = [](TermPtr& acc, const TermPtr& v, const Int& count) {
        for (Int i = 0; i < count; ++i) acc = acc ? Term::prod(acc, v) : v;
    };
    for (const auto& [v, c] : f.coeffs) {
        if (c > 0) append(pos, Term::var(v), c);
        else append(neg, Term::var(v), -c);
    }
    if (!pos && !neg) return Term::e();
    if (!neg) return pos;
    TermPtr inv = Term::lres(neg, Term::e());
    return pos ? Term::prod(pos, inv) : inv;
}

TermPtr meet_forms_to_term(const MeetForms& m) {
    if (m.empty()) return Term::e();
    TermPtr acc = form_to_term(m[0]);
    for (size_t i = 1; i < m.size(); ++i) acc = Term::meet(acc, form_to_term(m[i]));
    return acc;
}

TermPtr join_forms_to_term(const JoinForms& j) {
    if (j.empty()) throw std::invalid_argument("join_forms_to_term: empty join");
    TermPtr acc = form_to_term(j[0]);
    for (size_t i = 1; i < j.size(); ++i) acc = Term::join(acc, form_to_term(j[i]));
    return acc;
}

TermPtr nf_to_term(const GroupNormalForm& nf) {
    if (nf.disjuncts.empty()) throw std::invalid_argument("nf_to_term: empty normal form");
    TermPtr acc = meet_forms_to_term(nf.disjuncts[0]);
    for (size_t i = 1; i < nf.disjuncts.size(); ++i)
        acc = Term::join(acc, meet_forms_to_term(nf.disjuncts[i]));
    return acc;
}

UniformParts uniformize_y(const MeetForms& premise,
                          const std::optional<JoinForms>& conclusion_join,
                          const std::string& y) {
    UniformParts out;
    Int k(1);
    for (const auto& f : premise) {
        Int c = f.coeff(y);
        if (c != 0) k = int_lcm(k, int_abs(c));
    }
    if (conclusion_join)
        for (const auto& f : *conclusion_join) {
            Int c = f.coeff(y);
            if (c != 0) k = int_lcm(k, int_abs(c));
        }
    out.k = k;

    auto split = [&](const std::vector<LinForm>& forms, std::vector<LinForm>& free_part,
                     std::optional<std::vector<LinForm>>& plus_part,
                     std::optional<std::vector<LinForm>>& minus_part) {
        for (const auto& f : forms) {
            Int c = f.coeff(y);
            if (c == 0) {
                free_part.push_back(f);
                continue;
            }
            LinForm scaled = f.scaled(k / int_abs(c));
            scaled.set(y, Int(0));  // keep only the x-part
            if (c > 0) {
                if (!plus_part) plus_part.emplace();
                plus_part->push_back(std::move(scaled));
            } else {
                if (!minus_part) minus_part.emplace();
                minus_part->push_back(std::move(scaled));
            }
        }
    };

    split(premise, out.s0, out.s1, out.s2);
    out.s0 = canonical_forms(std::move(out.s0));
    if (out.s1) *out.s1 = canonical_forms(std::move(*out.s1));
    if (out.s2) *out.s2 = canonical_forms(std::move(*out.s2));

    if (conclusion_join) {
        JoinForms t0;
        split(*conclusion_join, t0, out.t1, out.t2);
        if (!t0.empty()) out.t0 = canonical_forms(std::move(t0));
        if (out.t1) *out.t1 = canonical_forms(std::move(*out.t1));
        if (out.t2) *out.t2 = canonical_forms(std::move(*out.t2));
    }
    return out;
}

}  // namespace grl
