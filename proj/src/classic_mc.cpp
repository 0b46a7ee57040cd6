#include "grl/classic_mc.hpp"

#include "grl/linform.hpp"
#include "grl/oracle.hpp"
#include "grl/syntax.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace grl {

namespace {

// ---------------------------------------------------------------------------
// Group-literal decomposition: over linearly ordered groups every LA literal
// splits into a disjunction of conjunctions of sign conditions f >= 0 / f > 0
// on integer forms.

struct GC {
    LinForm form;
    bool strict = false;
};

using GCConj = std::vector<GC>;
using GCDnf = std::vector<GCConj>;

GCDnf dnf_and(const GCDnf& a, const GCDnf& b) {
    GCDnf out;
    for (const auto& ca : a)
        for (const auto& cb : b) {
            GCConj c = ca;
            c.insert(c.end(), cb.begin(), cb.end());
            out.push_back(std::move(c));
        }
    return out;
}

GCDnf dnf_or(GCDnf a, const GCDnf& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

TermPtr diff_term(const TermPtr& a, const TermPtr& b) {
    return Term::prod(a, Term::lres(b, Term::e()));
}

// sigma >= 0 (or > 0): some disjunct of the join-of-meets has all forms so.
GCDnf nf_ge(const GroupNormalForm& nf, bool strict) {
    GCDnf out;
    for (const auto& meet : nf.disjuncts) {
        GCConj c;
        for (const auto& f : meet) c.push_back(GC{f, strict});
        out.push_back(std::move(c));
    }
    return out;
}

// sigma <= 0 (or < 0): every disjunct has some form so; one choice per
// disjunct.
GCDnf nf_le(const GroupNormalForm& nf, bool strict) {
    GCDnf out{{}};
    for (const auto& meet : nf.disjuncts) {
        GCDnf step;
        for (const auto& f : meet) step.push_back(GCConj{GC{f.negated(), strict}});
        out = dnf_and(out, step);
    }
    return out;
}

GCDnf literal_gc_dnf(const Literal& lit) {
    if (!lit.negated) {
        switch (lit.rel) {
            case LitRel::Eq: {
                GroupNormalForm d = la_normalize(diff_term(lit.lhs, lit.rhs));
                return dnf_and(nf_ge(d, false), nf_le(d, false));
            }
            case LitRel::Le: return nf_ge(la_normalize(diff_term(lit.rhs, lit.lhs)), false);
            case LitRel::Lt: return nf_ge(la_normalize(diff_term(lit.rhs, lit.lhs)), true);
        }
    }
    switch (lit.rel) {
        case LitRel::Eq: {  // s < t or t < s
            GCDnf l = nf_ge(la_normalize(diff_term(lit.rhs, lit.lhs)), true);
            GCDnf r = nf_ge(la_normalize(diff_term(lit.lhs, lit.rhs)), true);
            return dnf_or(std::move(l), r);
        }
        case LitRel::Le: return nf_ge(la_normalize(diff_term(lit.lhs, lit.rhs)), true);
        case LitRel::Lt: return nf_ge(la_normalize(diff_term(lit.lhs, lit.rhs)), false);
    }
    throw std::logic_error("literal_gc_dnf: bad literal");
}

GCDnf literals_gc_dnf(const std::vector<Literal>& lits) {
    GCDnf out{{}};
    for (const auto& lit : lits) out = dnf_and(out, literal_gc_dnf(lit));
    return out;
}

// Divide out the gcd of the coefficients (sign-preserving) for readable
// output; sound for sign conditions.
LinForm primitive(const LinForm& f) {
    Int g(0);
    for (const auto& [v, c] : f.coeffs) g = int_gcd(g, c);
    if (g <= 1) return f;
    LinForm out;
    for (const auto& [v, c] : f.coeffs) out.coeffs.emplace(v, c / g);
    return out;
}

// f >= 0 (or > 0) rendered as neg-part <= pos-part (or <).
QFPtr gc_to_literal(const GC& gc) {
    LinForm f = primitive(gc.form);
    if (f.is_zero()) return gc.strict ? QF::bot() : QF::top();
    LinForm pos, neg;
    for (const auto& [v, c] : f.coeffs)
        (c > 0 ? pos : neg).coeffs.emplace(v, c > 0 ? c : -c);
    return QF::lit(gc.strict ? LitRel::Lt : LitRel::Le, form_to_term(neg), form_to_term(pos));
}

QFPtr gcconj_to_formula(const GCConj& conj) {
    std::vector<QFPtr> parts;
    for (const auto& gc : conj) {
        QFPtr lit = gc_to_literal(gc);
        if (lit->kind() == QF::Kind::False) return QF::bot();
        if (lit->kind() != QF::Kind::True) parts.push_back(std::move(lit));
    }
    return QF::conj_all(parts);
}

}  // namespace

// ---------------------------------------------------------------------------
// qe_doag

QFPtr qe_doag(const LiteralConjunction& psi, const std::string& y) {
    std::vector<Literal> lits = psi.positive;
    lits.insert(lits.end(), psi.negative.begin(), psi.negative.end());
    std::vector<QFPtr> out_disjuncts;
    for (const auto& conj : literals_gc_dnf(lits)) {
        GCConj lowers, uppers, frees;
        for (const auto& gc : conj) {
            Int c = gc.form.coeff(y);
            if (c == 0) frees.push_back(gc);
            else if (c > 0) lowers.push_back(gc);
            else uppers.push_back(gc);
        }
        GCConj result = frees;
        for (const auto& lo : lowers)
            for (const auto& up : uppers) {
                GC r;
                Int cl = lo.form.coeff(y);
                Int cu = up.form.coeff(y);
                r.form = lo.form.scaled(-cu) + up.form.scaled(cl);
                r.strict = lo.strict || up.strict;
                result.push_back(std::move(r));
            }
        QFPtr f = gcconj_to_formula(result);
        if (f->kind() != QF::Kind::False) out_disjuncts.push_back(std::move(f));
    }
    return QF::disj_all(out_disjuncts);
}

// ---------------------------------------------------------------------------
// chi_oag

namespace {

bool literal_mentions(const Literal& l, const std::string& y) {
    return free_vars(l.lhs).count(y) || free_vars(l.rhs).count(y);
}

QFPtr literals_to_formula(const std::vector<Literal>& lits) {
    std::vector<QFPtr> parts;
    for (const auto& l : lits) {
        QFPtr lit = QF::lit(l.rel, l.lhs, l.rhs);
        parts.push_back(l.negated ? QF::neg(lit) : lit);
    }
    return QF::conj_all(parts);
}

std::string qf_key(const QFPtr& f) { return print_qf(f, Sig::LA); }

constexpr size_t kCandidateCap = 200000;

}  // namespace

QFPtr chi_oag(const LiteralConjunction& psi, const std::string& y) {
    QFPtr psif = psi.to_formula();
    if (decide_oag_qf(QF::neg(psif))) return QF::bot();  // psi unsatisfiable

    std::vector<Literal> y_lits, free_lits;
    for (const auto& bucket : {psi.positive, psi.negative})
        for (const auto& l : bucket)
            (literal_mentions(l, y) ? y_lits : free_lits).push_back(l);

    std::vector<QFPtr> chi_parts;

    if (!y_lits.empty()) {
        GCDnf disjuncts = literals_gc_dnf(y_lits);

        Int p(1);
        for (const auto& conj : disjuncts)
            for (const auto& gc : conj) {
                Int c = gc.form.coeff(y);
                if (c != 0) p = int_lcm(p, int_abs(c));
            }

        // Per-disjunct term pools: x-side terms of p*y-comparisons plus both
        // sides of y-free conditions.
        std::vector<std::vector<LinForm>> pools;
        for (const auto& conj : disjuncts) {
            std::vector<LinForm> pool;
            auto add = [&pool](LinForm f) {
                f = primitive(f);
                if (std::find(pool.begin(), pool.end(), f) == pool.end())
                    pool.push_back(std::move(f));
            };
            for (const auto& gc : conj) {
                Int c = gc.form.coeff(y);
                if (c != 0) {
                    LinForm scaled = gc.form.scaled(p / int_abs(c));
                    scaled.set(y, Int(0));
                    // c > 0: p*y >= -r, the compared term is -r; c < 0:
                    // p*y <= r with term r.
                    add(c > 0 ? scaled.negated() : scaled);
                } else {
                    LinForm pos, neg;
                    for (const auto& [v, k] : gc.form.coeffs)
                        (k > 0 ? pos : neg).coeffs.emplace(v, k > 0 ? k : -k);
                    add(pos);
                    add(neg);
                }
            }
            if (pool.empty()) pool.push_back(LinForm{});  // the zero term
            pools.push_back(std::move(pool));
        }

        size_t total = 1;
        for (const auto& pool : pools) {
            total *= 2 * pool.size() * pool.size();
            if (total > kCandidateCap)
                throw std::invalid_argument("chi_oag: candidate space too large");
        }

        // Enumerate one (term, term, relation) choice per disjunct.
        std::vector<size_t> idx(pools.size(), 0);
        std::vector<std::string> seen;
        while (true) {
            std::vector<QFPtr> cand_parts;
            for (size_t j = 0; j < pools.size(); ++j) {
                const auto& pool = pools[j];
                size_t v = idx[j];
                bool strict = v % 2;
                size_t a = (v / 2) % pool.size();
                size_t b = (v / 2) / pool.size();
                cand_parts.push_back(QF::lit(strict ? LitRel::Lt : LitRel::Le,
                                             form_to_term(pool[a]), form_to_term(pool[b])));
            }
            QFPtr cand = QF::disj_all(cand_parts);
            std::string key = qf_key(cand);
            if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
                seen.push_back(key);
                if (!decide_oag_qf(cand) && decide_oag_qf(QF::disj(QF::neg(psif), cand)))
                    chi_parts.push_back(cand);
            }
            size_t j = 0;
            for (; j < pools.size(); ++j) {
                if (++idx[j] < 2 * pools[j].size() * pools[j].size()) break;
                idx[j] = 0;
            }
            if (j == pools.size()) break;
        }
    }

    // Entailed disjunctions of !(x_i ~ 0), minimal subsets only.
    {
        std::set<std::string> var_set = psi.vars();
        var_set.erase(y);
        std::vector<std::string> xs(var_set.begin(), var_set.end());
        if (xs.size() <= 12 && !xs.empty()) {
            std::vector<unsigned> survivors;
            for (unsigned mask = 1; mask < (1u << xs.size()); ++mask) {
                bool redundant = false;
                for (unsigned s : survivors)
                    if ((s & mask) == s) {
                        redundant = true;
                        break;
                    }
                if (redundant) continue;
                std::vector<QFPtr> parts;
                for (size_t i = 0; i < xs.size(); ++i)
                    if (mask & (1u << i))
                        parts.push_back(
                            QF::neg(QF::lit(LitRel::Eq, Term::var(xs[i]), Term::zero())));
                QFPtr cand = QF::disj_all(parts);
                if (decide_oag_qf(QF::disj(QF::neg(psif), cand))) {
                    survivors.push_back(mask);
                    chi_parts.push_back(cand);
                }
            }
        }
    }

    if (!free_lits.empty()) chi_parts.push_back(literals_to_formula(free_lits));
    return QF::conj_all(chi_parts);
}

// ---------------------------------------------------------------------------
// DLO: evaluation over bounded chains via rational grids.

namespace {

Rat dlo_eval_term(const TermPtr& t, const std::map<std::string, Rat>& point) {
    switch (t->kind()) {
        case Kind::Var: return point.at(t->name());
        case Kind::Zero: return Rat(0);
        case Kind::E: return Rat(1);
        case Kind::Meet:
            return std::min(dlo_eval_term(t->left(), point), dlo_eval_term(t->right(), point));
        case Kind::Join:
            return std::max(dlo_eval_term(t->left(), point), dlo_eval_term(t->right(), point));
        default:
            throw std::invalid_argument("DLO terms admit only variables, 0, 1, & and |");
    }
}

bool dlo_eval(const QFPtr& f, const std::map<std::string, Rat>& point) {
    switch (f->kind()) {
        case QF::Kind::True: return true;
        case QF::Kind::False: return false;
        case QF::Kind::Not: return !dlo_eval(f->left(), point);
        case QF::Kind::And: return dlo_eval(f->left(), point) && dlo_eval(f->right(), point);
        case QF::Kind::Or: return dlo_eval(f->left(), point) || dlo_eval(f->right(), point);
        case QF::Kind::Lit: {
            Rat a = dlo_eval_term(f->lhs(), point);
            Rat b = dlo_eval_term(f->rhs(), point);
            switch (f->rel()) {
                case LitRel::Eq: return a == b;
                case LitRel::Le: return a <= b;
                case LitRel::Lt: return a < b;
            }
        }
    }
    throw std::logic_error("dlo_eval: bad kind");
}

// In the one-element chain all terms coincide.
bool dlo_eval_trivial(const QFPtr& f) {
    switch (f->kind()) {
        case QF::Kind::True: return true;
        case QF::Kind::False: return false;
        case QF::Kind::Not: return !dlo_eval_trivial(f->left());
        case QF::Kind::And:
            return dlo_eval_trivial(f->left()) && dlo_eval_trivial(f->right());
        case QF::Kind::Or: return dlo_eval_trivial(f->left()) || dlo_eval_trivial(f->right());
        case QF::Kind::Lit: return f->rel() != LitRel::Lt;
    }
    throw std::logic_error("dlo_eval_trivial: bad kind");
}

// All assignments of vars into the grid {j/(2n+1) : 0 <= j <= 2n+1}; any
// order type of n points between endpoints is realized.
void for_each_grid_point(const std::vector<std::string>& vars,
                         const std::function<void(const std::map<std::string, Rat>&)>& fn) {
    size_t n = vars.size();
    long levels = 2 * static_cast<long>(n) + 2;
    std::vector<long> idx(n, 0);
    std::map<std::string, Rat> point;
    while (true) {
        point.clear();
        for (size_t i = 0; i < n; ++i) point[vars[i]] = Rat(idx[i], levels - 1);
        fn(point);
        size_t i = 0;
        for (; i < n; ++i) {
            if (++idx[i] < levels) break;
            idx[i] = 0;
        }
        if (i == n) break;
    }
}

}  // namespace

bool dlo_valid(const QFPtr& f) {
    auto vs = qf_free_vars(f);
    std::vector<std::string> vars(vs.begin(), vs.end());
    bool ok = dlo_eval_trivial(f);
    if (!ok) return false;
    for_each_grid_point(vars, [&](const std::map<std::string, Rat>& p) {
        if (ok && !dlo_eval(f, p)) ok = false;
    });
    return ok;
}

QFPtr chi_dlo(const LiteralConjunction& psi, const std::string& y) {
    QFPtr psif = psi.to_formula();
    auto one = [] { return Term::e(); };

    auto vars_set = psi.vars();
    std::vector<std::string> all_vars(vars_set.begin(), vars_set.end());
    bool trivial_sat = dlo_eval_trivial(psif);
    bool grid_sat = false;
    for_each_grid_point(all_vars, [&](const std::map<std::string, Rat>& p) {
        if (!grid_sat && dlo_eval(psif, p)) grid_sat = true;
    });
    if (!trivial_sat && !grid_sat) return QF::bot();

    vars_set.erase(y);
    std::vector<std::string> xs(vars_set.begin(), vars_set.end());
    if (xs.empty())
        return grid_sat ? QF::neg(QF::lit(LitRel::Eq, Term::zero(), one()))
                        : QF::lit(LitRel::Eq, Term::zero(), one());

    if (xs.size() > 2)
        throw std::invalid_argument("chi_dlo: more than 2 parameters besides y "
                                    "exceeds the desk-scale candidate enumeration");

    std::vector<Literal> y_lits, free_lits;
    for (const auto& bucket : {psi.positive, psi.negative})
        for (const auto& l : bucket)
            (literal_mentions(l, y) ? y_lits : free_lits).push_back(l);

    // Pseudo-variable pool: parameters plus both endpoints.
    std::vector<TermPtr> pool;
    for (const auto& x : xs) pool.push_back(Term::var(x));
    pool.push_back(Term::zero());
    pool.push_back(one());
    size_t np = pool.size();
    size_t npairs = np * np;

    // Precompute per (pair, relation) truth over every grid point; candidate
    // tests then reduce to coverage checks of the points satisfying psi
    // (entailment) or of all points (validity).
    std::vector<std::map<std::string, Rat>> grid;
    for_each_grid_point(all_vars,
                        [&](const std::map<std::string, Rat>& p) { grid.push_back(p); });
    std::vector<size_t> sat_idx;
    for (size_t i = 0; i < grid.size(); ++i)
        if (dlo_eval(psif, grid[i])) sat_idx.push_back(i);

    std::vector<std::vector<bool>> pair_sat(2 * npairs);
    std::vector<bool> pair_trivial(2 * npairs);
    for (size_t pr = 0; pr < npairs; ++pr) {
        TermPtr a = pool[pr % np], b = pool[pr / np];
        for (int strict = 0; strict < 2; ++strict) {
            QFPtr lit = QF::lit(strict ? LitRel::Lt : LitRel::Le, a, b);
            auto& bits = pair_sat[2 * pr + strict];
            bits.resize(grid.size());
            for (size_t i = 0; i < grid.size(); ++i) bits[i] = dlo_eval(lit, grid[i]);
            pair_trivial[2 * pr + strict] = dlo_eval_trivial(lit);
        }
    }

    auto covers = [&](unsigned mask, int strict, const std::vector<size_t>& idx) {
        for (size_t i : idx) {
            bool cover = false;
            for (size_t pr = 0; pr < npairs && !cover; ++pr)
                if ((mask & (1u << pr)) && pair_sat[2 * pr + strict][i]) cover = true;
            if (!cover) return false;
        }
        return true;
    };
    auto covers_trivial = [&](unsigned mask, int strict) {
        for (size_t pr = 0; pr < npairs; ++pr)
            if ((mask & (1u << pr)) && pair_trivial[2 * pr + strict]) return true;
        return false;
    };
    std::vector<size_t> all_idx(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) all_idx[i] = i;

    // Enumerate subsets of pairs per relation, smallest first; keep minimal
    // entailed candidates, skipping those valid over the whole class.
    std::vector<QFPtr> chi_parts;
    for (int strict = 0; strict < 2; ++strict) {
        std::vector<unsigned> survivors;
        std::vector<unsigned> masks;
        for (unsigned mask = 1; mask < (1u << npairs); ++mask) masks.push_back(mask);
        std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
            int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        for (unsigned mask : masks) {
            bool redundant = false;
            for (unsigned s : survivors)
                if ((s & mask) == s) {
                    redundant = true;
                    break;
                }
            if (redundant) continue;
            if (covers(mask, strict, all_idx) && covers_trivial(mask, strict))
                continue;  // valid outright, conjoining it adds nothing
            bool entailed = covers(mask, strict, sat_idx) &&
                            (!trivial_sat || covers_trivial(mask, strict));
            if (!entailed) continue;
            survivors.push_back(mask);
            std::vector<QFPtr> parts;
            for (size_t pr = 0; pr < npairs; ++pr)
                if (mask & (1u << pr))
                    parts.push_back(QF::lit(strict ? LitRel::Lt : LitRel::Le, pool[pr % np],
                                            pool[pr / np]));
            chi_parts.push_back(QF::disj_all(parts));
        }
    }

    if (!trivial_sat)
        chi_parts.push_back(QF::neg(QF::lit(LitRel::Eq, Term::zero(), one())));
    if (!free_lits.empty()) chi_parts.push_back(literals_to_formula(free_lits));
    return QF::conj_all(chi_parts);
}

// ---------------------------------------------------------------------------
// DLO text syntax.

namespace {

// Standalone digit 1 denotes the top endpoint; rewrite to the reserved `e`
// before term parsing.
std::string rewrite_ones(const std::string& src) {
    std::string out;
    auto word_char = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    };
    for (size_t i = 0; i < src.size(); ++i) {
        bool standalone = src[i] == '1' && (i == 0 || !word_char(src[i - 1])) &&
                          (i + 1 >= src.size() || !word_char(src[i + 1]));
        out.push_back(standalone ? 'e' : src[i]);
    }
    return out;
}

void check_dlo_term(const TermPtr& t) {
    switch (t->kind()) {
        case Kind::Var:
        case Kind::Zero:
        case Kind::E:
            return;
        case Kind::Meet:
        case Kind::Join:
            check_dlo_term(t->left());
            check_dlo_term(t->right());
            return;
        default:
            throw std::invalid_argument("DLO terms admit only variables, 0, 1, & and |");
    }
}

void check_dlo_formula(const QFPtr& f) {
    if (!f) return;
    if (f->kind() == QF::Kind::Lit) {
        check_dlo_term(f->lhs());
        check_dlo_term(f->rhs());
        return;
    }
    check_dlo_formula(f->left());
    check_dlo_formula(f->right());
}

void print_dlo_term(std::ostringstream& out, const TermPtr& t, int parent) {
    int prec = t->kind() == Kind::Meet ? 1 : t->kind() == Kind::Join ? 2 : 0;
    bool parens = prec > parent || (prec != 0 && prec == parent);
    if (parens) out << '(';
    switch (t->kind()) {
        case Kind::Var: out << t->name(); break;
        case Kind::Zero: out << '0'; break;
        case Kind::E: out << '1'; break;
        case Kind::Meet:
            print_dlo_term(out, t->left(), 1);
            out << " & ";
            print_dlo_term(out, t->right(), 1);
            break;
        case Kind::Join:
            print_dlo_term(out, t->left(), 2);
            out << " | ";
            print_dlo_term(out, t->right(), 2);
            break;
        default: throw std::invalid_argument("print_qf_dlo: not a DLO term");
    }
    if (parens) out << ')';
}

void print_dlo_rec(std::ostringstream& out, const QFPtr& f, int parent) {
    int prec = 0;
    switch (f->kind()) {
        case QF::Kind::Not: prec = 1; break;
        case QF::Kind::And: prec = 2; break;
        case QF::Kind::Or: prec = 3; break;
        default: prec = 0;
    }
    bool parens = prec > parent;
    if (parens) out << '(';
    switch (f->kind()) {
        case QF::Kind::True: out << "true"; break;
        case QF::Kind::False: out << "false"; break;
        case QF::Kind::Lit: {
            std::ostringstream a, b;
            print_dlo_term(a, f->lhs(), 100);
            print_dlo_term(b, f->rhs(), 100);
            const char* rel = f->rel() == LitRel::Eq ? " == "
                              : f->rel() == LitRel::Le ? " <= "
                                                       : " < ";
            out << a.str() << rel << b.str();
            break;
        }
        case QF::Kind::Not:
            out << '!';
            print_dlo_rec(out, f->left(), 0);
            break;
        case QF::Kind::And:
            print_dlo_rec(out, f->left(), 2);
            out << " && ";
            print_dlo_rec(out, f->right(), 2);
            break;
        case QF::Kind::Or:
            print_dlo_rec(out, f->left(), 3);
            out << " || ";
            print_dlo_rec(out, f->right(), 3);
            break;
    }
    if (parens) out << ')';
}

}  // namespace

QFPtr parse_qf_dlo(const std::string& src) {
    QFPtr f = parse_qf(rewrite_ones(src), Sig::PRL);
    check_dlo_formula(f);
    return f;
}

LiteralConjunction parse_literal_conjunction_dlo(const std::string& src) {
    LiteralConjunction lc = parse_literal_conjunction(rewrite_ones(src), Sig::PRL);
    for (const auto& l : lc.positive) {
        check_dlo_term(l.lhs);
        check_dlo_term(l.rhs);
    }
    for (const auto& l : lc.negative) {
        check_dlo_term(l.lhs);
        check_dlo_term(l.rhs);
    }
    return lc;
}

std::string print_qf_dlo(const QFPtr& f) {
    std::ostringstream out;
    print_dlo_rec(out, f, 100);
    return out.str();
}

}  // namespace grl
