#include "grl/term.hpp"

#include <algorithm>

namespace grl {

const char* sig_name(Sig s) {
    switch (s) {
        case Sig::LA: return "LA";
        case Sig::LAGuard: return "LA_GUARD";
        case Sig::MV: return "MV";
        case Sig::MVGuard: return "MV_GUARD";
        case Sig::PRL: return "PRL";
        case Sig::PRLGuard: return "PRL_GUARD";
    }
    return "?";
}

std::optional<Sig> sig_from_name(const std::string& name) {
    if (name == "LA") return Sig::LA;
    if (name == "LA_GUARD") return Sig::LAGuard;
    if (name == "MV") return Sig::MV;
    if (name == "MV_GUARD") return Sig::MVGuard;
    if (name == "PRL") return Sig::PRL;
    if (name == "PRL_GUARD") return Sig::PRLGuard;
    return std::nullopt;
}

TermPtr Term::var(std::string name) {
    return std::make_shared<Term>(Kind::Var, std::move(name), nullptr, nullptr);
}
TermPtr Term::e() {
    static const TermPtr unit = std::make_shared<Term>(Kind::E, "", nullptr, nullptr);
    return unit;
}
TermPtr Term::zero() {
    static const TermPtr z = std::make_shared<Term>(Kind::Zero, "", nullptr, nullptr);
    return z;
}
TermPtr Term::meet(TermPtr l, TermPtr r) {
    return std::make_shared<Term>(Kind::Meet, "", std::move(l), std::move(r));
}
TermPtr Term::join(TermPtr l, TermPtr r) {
    return std::make_shared<Term>(Kind::Join, "", std::move(l), std::move(r));
}
TermPtr Term::prod(TermPtr l, TermPtr r) {
    return std::make_shared<Term>(Kind::Prod, "", std::move(l), std::move(r));
}
TermPtr Term::lres(TermPtr l, TermPtr r) {
    return std::make_shared<Term>(Kind::LRes, "", std::move(l), std::move(r));
}
TermPtr Term::rres(TermPtr l, TermPtr r) {
    return std::make_shared<Term>(Kind::RRes, "", std::move(l), std::move(r));
}
TermPtr Term::guard(TermPtr l, TermPtr r) {
    return std::make_shared<Term>(Kind::Guard, "", std::move(l), std::move(r));
}
TermPtr Term::delta(TermPtr arg) {
    return std::make_shared<Term>(Kind::Delta, "", std::move(arg), nullptr);
}

bool equal(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case Kind::Var: return a->name() == b->name();
        case Kind::E:
        case Kind::Zero: return true;
        case Kind::Delta: return equal(a->left(), b->left());
        default: return equal(a->left(), b->left()) && equal(a->right(), b->right());
    }
}

TermPtr meet_all(const std::vector<TermPtr>& ts) {
    if (ts.empty()) return Term::e();
    TermPtr acc = ts[0];
    for (size_t i = 1; i < ts.size(); ++i) acc = Term::meet(acc, ts[i]);
    return acc;
}

TermPtr join_all(const std::vector<TermPtr>& ts) {
    if (ts.empty()) throw std::invalid_argument("join_all: empty join is Lambda, not a term");
    TermPtr acc = ts[0];
    for (size_t i = 1; i < ts.size(); ++i) acc = Term::join(acc, ts[i]);
    return acc;
}

VarContext::VarContext(std::vector<std::string> xs, std::optional<std::string> y,
                       std::vector<std::string> zs)
    : xs_(std::move(xs)), y_(std::move(y)), zs_(std::move(zs)) {
    std::set<std::string> seen;
    auto add = [&seen](const std::string& n) {
        if (!seen.insert(n).second)
            throw std::invalid_argument("VarContext: duplicate variable " + n);
    };
    for (const auto& n : xs_) add(n);
    if (y_) add(*y_);
    for (const auto& n : zs_) add(n);
}

bool VarContext::declares(const std::string& name) const {
    if (y_ && *y_ == name) return true;
    return std::find(xs_.begin(), xs_.end(), name) != xs_.end() ||
           std::find(zs_.begin(), zs_.end(), name) != zs_.end();
}

std::vector<std::string> VarContext::all() const {
    std::vector<std::string> out = xs_;
    if (y_) out.push_back(*y_);
    out.insert(out.end(), zs_.begin(), zs_.end());
    return out;
}

void collect_free_vars(const TermPtr& t, std::set<std::string>& out) {
    if (!t) return;
    if (t->kind() == Kind::Var) {
        out.insert(t->name());
        return;
    }
    collect_free_vars(t->left(), out);
    collect_free_vars(t->right(), out);
}

std::set<std::string> free_vars(const TermPtr& t) {
    std::set<std::string> out;
    collect_free_vars(t, out);
    return out;
}

TermPtr substitute(const TermPtr& t, const std::map<std::string, TermPtr>& m) {
    switch (t->kind()) {
        case Kind::Var: {
            auto it = m.find(t->name());
            return it == m.end() ? t : it->second;
        }
        case Kind::E:
        case Kind::Zero:
            return t;
        case Kind::Delta:
            return Term::delta(substitute(t->left(), m));
        default: {
            TermPtr l = substitute(t->left(), m);
            TermPtr r = substitute(t->right(), m);
            if (l == t->left() && r == t->right()) return t;
            return std::make_shared<Term>(t->kind(), "", std::move(l), std::move(r));
        }
    }
}

TermPtr equiv(const TermPtr& s, const TermPtr& t) {
    return Term::meet(Term::meet(Term::lres(s, t), Term::lres(t, s)), Term::e());
}

TermPtr nabla(const Conclusion& s, const VarContext& ctx, Sig sig) {
    if (!allows_guard(sig))
        throw std::invalid_argument("nabla requires a guard signature");
    if (s.is_lambda()) return Term::e();
    TermPtr body = equiv(Term::zero(), Term::e());
    for (const auto& x : ctx.xs())
        body = Term::meet(body, equiv(Term::var(x), Term::e()));
    return Term::guard(s.term, body);
}

TermPtr power(const TermPtr& t, unsigned n) {
    if (n == 0) return Term::e();
    return Term::prod(t, power(t, n - 1));
}

namespace {
TermPtr mv_neg(const TermPtr& t) { return Term::lres(t, Term::zero()); }
TermPtr mv_oplus(const TermPtr& a, const TermPtr& b) {
    return Term::lres(Term::lres(a, Term::zero()), b);
}
}  // namespace

TermPtr mv_delta_expand(const TermPtr& t) {
    switch (t->kind()) {
        case Kind::Var:
        case Kind::E:
        case Kind::Zero:
            return t;
        case Kind::Delta: {
            TermPtr x = mv_delta_expand(t->left());
            return Term::guard(Term::guard(x, Term::zero()), Term::zero());
        }
        default: {
            TermPtr l = mv_delta_expand(t->left());
            TermPtr r = mv_delta_expand(t->right());
            if (l == t->left() && r == t->right()) return t;
            return std::make_shared<Term>(t->kind(), "", std::move(l), std::move(r));
        }
    }
}

TermPtr mv_delta_introduce(const TermPtr& t) {
    switch (t->kind()) {
        case Kind::Var:
        case Kind::E:
        case Kind::Zero:
            return t;
        case Kind::Delta:
            return Term::delta(mv_delta_introduce(t->left()));
        case Kind::Guard: {
            TermPtr x = mv_delta_introduce(t->left());
            TermPtr y = mv_delta_introduce(t->right());
            return mv_oplus(mv_neg(Term::delta(x)), y);
        }
        default: {
            TermPtr l = mv_delta_introduce(t->left());
            TermPtr r = mv_delta_introduce(t->right());
            if (l == t->left() && r == t->right()) return t;
            return std::make_shared<Term>(t->kind(), "", std::move(l), std::move(r));
        }
    }
}

bool has_guard(const TermPtr& t) {
    if (!t) return false;
    if (t->kind() == Kind::Guard) return true;
    return has_guard(t->left()) || has_guard(t->right());
}

bool has_delta(const TermPtr& t) {
    if (!t) return false;
    if (t->kind() == Kind::Delta) return true;
    return has_delta(t->left()) || has_delta(t->right());
}

Rat eval_la(const TermPtr& t, const std::map<std::string, Rat>& point) {
    switch (t->kind()) {
        case Kind::Var: {
            auto it = point.find(t->name());
            if (it == point.end())
                throw std::invalid_argument("eval_la: unbound variable " + t->name());
            return it->second;
        }
        case Kind::E:
        case Kind::Zero:
            return Rat(0);
        case Kind::Meet: return std::min(eval_la(t->left(), point), eval_la(t->right(), point));
        case Kind::Join: return std::max(eval_la(t->left(), point), eval_la(t->right(), point));
        case Kind::Prod: return eval_la(t->left(), point) + eval_la(t->right(), point);
        case Kind::LRes: return eval_la(t->right(), point) - eval_la(t->left(), point);
        case Kind::RRes: return eval_la(t->left(), point) - eval_la(t->right(), point);
        case Kind::Guard: {
            Rat g = eval_la(t->left(), point);
            return g >= 0 ? eval_la(t->right(), point) : Rat(0);
        }
        case Kind::Delta:
            throw std::invalid_argument("eval_la: Delta outside MV");
    }
    throw std::logic_error("eval_la: bad kind");
}

namespace {
Rat clamp01(const Rat& v) {
    if (v < 0) return Rat(0);
    if (v > 1) return Rat(1);
    return v;
}
}  // namespace

Rat eval_mv(const TermPtr& t, const std::map<std::string, Rat>& point) {
    switch (t->kind()) {
        case Kind::Var: {
            auto it = point.find(t->name());
            if (it == point.end())
                throw std::invalid_argument("eval_mv: unbound variable " + t->name());
            return it->second;
        }
        case Kind::E: return Rat(1);
        case Kind::Zero: return Rat(0);
        case Kind::Meet: return std::min(eval_mv(t->left(), point), eval_mv(t->right(), point));
        case Kind::Join: return std::max(eval_mv(t->left(), point), eval_mv(t->right(), point));
        case Kind::Prod:
            return clamp01(eval_mv(t->left(), point) + eval_mv(t->right(), point) - 1);
        case Kind::LRes:
            return clamp01(Rat(1) - eval_mv(t->left(), point) + eval_mv(t->right(), point));
        case Kind::RRes:
            return clamp01(eval_mv(t->left(), point) + Rat(1) - eval_mv(t->right(), point));
        case Kind::Guard: {
            Rat g = eval_mv(t->left(), point);
            return g >= 1 ? eval_mv(t->right(), point) : Rat(1);
        }
        case Kind::Delta: {
            Rat v = eval_mv(t->left(), point);
            return v >= 1 ? Rat(1) : Rat(0);
        }
    }
    throw std::logic_error("eval_mv: bad kind");
}

Rat eval_model(Sig sig, const TermPtr& t, const std::map<std::string, Rat>& point) {
    if (is_la(sig)) return eval_la(t, point);
    if (is_mv(sig)) return eval_mv(t, point);
    throw std::invalid_argument("eval_model: no standard model for PRL signatures");
}

Rat unit_value(Sig sig) { return is_mv(sig) ? Rat(1) : Rat(0); }

}  // namespace grl
