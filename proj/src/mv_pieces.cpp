#include "grl/mv_pieces.hpp"

#include <functional>

namespace grl {

AffineForm operator+(const AffineForm& a, const AffineForm& b) {
    AffineForm out = a;
    for (const auto& [v, c] : b.coeffs) out.set(v, out.coeff(v) + c);
    out.constant += b.constant;
    return out;
}

AffineForm operator-(const AffineForm& a, const AffineForm& b) {
    AffineForm out = a;
    for (const auto& [v, c] : b.coeffs) out.set(v, out.coeff(v) - c);
    out.constant -= b.constant;
    return out;
}

Rat AffineForm::value_at(const std::map<std::string, Rat>& point) const {
    Rat acc = constant;
    for (const auto& [v, c] : coeffs) {
        auto it = point.find(v);
        if (it == point.end()) throw std::invalid_argument("AffineForm: unbound variable " + v);
        acc += c * it->second;
    }
    return acc;
}

namespace {
LinearConstraint affine_rel(const AffineForm& a, const Rat& rhs, Rel rel, bool negate) {
    LinearConstraint c;
    c.rel = rel;
    for (const auto& [v, k] : a.coeffs) c.lhs[v] = negate ? -k : k;
    c.bound = negate ? a.constant - rhs : rhs - a.constant;
    return c;
}
}  // namespace

LinearConstraint affine_ge(const AffineForm& a, const Rat& rhs) {
    return affine_rel(a, rhs, Rel::GE, false);
}
LinearConstraint affine_gt(const AffineForm& a, const Rat& rhs) {
    return affine_rel(a, rhs, Rel::GT, false);
}
// a <= rhs  <=>  -a >= -rhs
LinearConstraint affine_le(const AffineForm& a, const Rat& rhs) {
    return affine_rel(a, rhs, Rel::GE, true);
}
LinearConstraint affine_lt(const AffineForm& a, const Rat& rhs) {
    return affine_rel(a, rhs, Rel::GT, true);
}

namespace {

AffineForm af_const(long v) {
    AffineForm a;
    a.constant = Rat(v);
    return a;
}

// a <= b as a constraint: b - a >= 0.
LinearConstraint le_between(const AffineForm& a, const AffineForm& b) {
    return affine_ge(b - a, Rat(0));
}

std::vector<MvPiece> combine2(const std::vector<MvPiece>& ls, const std::vector<MvPiece>& rs,
                              const std::function<std::vector<MvPiece>(const MvPiece&,
                                                                       const MvPiece&)>& f) {
    std::vector<MvPiece> out;
    for (const auto& l : ls)
        for (const auto& r : rs) {
            for (auto& piece : f(l, r)) {
                piece.guards.insert(piece.guards.end(), l.guards.begin(), l.guards.end());
                piece.guards.insert(piece.guards.end(), r.guards.begin(), r.guards.end());
                out.push_back(std::move(piece));
            }
        }
    return out;
}

}  // namespace

std::vector<MvPiece> mv_pieces(const TermPtr& term) {
    TermPtr t = has_delta(term) ? mv_delta_expand(term) : term;
    switch (t->kind()) {
        case Kind::Var: {
            AffineForm a;
            a.set(t->name(), Rat(1));
            return {MvPiece{{}, a}};
        }
        case Kind::E: return {MvPiece{{}, af_const(1)}};
        case Kind::Zero: return {MvPiece{{}, af_const(0)}};
        case Kind::Meet:
            return combine2(mv_pieces(t->left()), mv_pieces(t->right()),
                            [](const MvPiece& l, const MvPiece& r) {
                                return std::vector<MvPiece>{
                                    MvPiece{{le_between(l.value, r.value)}, l.value},
                                    MvPiece{{le_between(r.value, l.value)}, r.value}};
                            });
        case Kind::Join:
            return combine2(mv_pieces(t->left()), mv_pieces(t->right()),
                            [](const MvPiece& l, const MvPiece& r) {
                                return std::vector<MvPiece>{
                                    MvPiece{{le_between(r.value, l.value)}, l.value},
                                    MvPiece{{le_between(l.value, r.value)}, r.value}};
                            });
        case Kind::Prod:  // max(0, a+b-1)
            return combine2(mv_pieces(t->left()), mv_pieces(t->right()),
                            [](const MvPiece& l, const MvPiece& r) {
                                AffineForm sum = l.value + r.value - af_const(1);
                                return std::vector<MvPiece>{
                                    MvPiece{{affine_ge(sum, Rat(0))}, sum},
                                    MvPiece{{affine_le(sum, Rat(0))}, af_const(0)}};
                            });
        case Kind::LRes:  // min(1, 1 - a + b)
            return combine2(mv_pieces(t->left()), mv_pieces(t->right()),
                            [](const MvPiece& l, const MvPiece& r) {
                                AffineForm v = af_const(1) - l.value + r.value;
                                return std::vector<MvPiece>{
                                    MvPiece{{affine_le(v, Rat(1))}, v},
                                    MvPiece{{affine_ge(v, Rat(1))}, af_const(1)}};
                            });
        case Kind::RRes:  // min(1, a + 1 - b)
            return combine2(mv_pieces(t->left()), mv_pieces(t->right()),
                            [](const MvPiece& l, const MvPiece& r) {
                                AffineForm v = l.value + af_const(1) - r.value;
                                return std::vector<MvPiece>{
                                    MvPiece{{affine_le(v, Rat(1))}, v},
                                    MvPiece{{affine_ge(v, Rat(1))}, af_const(1)}};
                            });
        case Kind::Guard:  // value r if l >= 1, else 1; the split is strict
            return combine2(mv_pieces(t->left()), mv_pieces(t->right()),
                            [](const MvPiece& l, const MvPiece& r) {
                                return std::vector<MvPiece>{
                                    MvPiece{{affine_ge(l.value, Rat(1))}, r.value},
                                    MvPiece{{affine_lt(l.value, Rat(1))}, af_const(1)}};
                            });
        case Kind::Delta:
            throw std::logic_error("mv_pieces: Delta survived expansion");
    }
    throw std::logic_error("mv_pieces: bad kind");
}

}  // namespace grl
