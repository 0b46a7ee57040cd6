// Piecewise-affine decomposition of MV terms over [0,1]^n: one binary split
// per truncation point, guard regions cover the box and on each region the
// affine value equals the term.
#pragma once

#include "grl/constraints.hpp"
#include "grl/term.hpp"

#include <vector>

namespace grl {

// Affine form with rational coefficients: sum coeffs[v]*v + constant.
struct AffineForm {
    std::map<std::string, Rat> coeffs;
    Rat constant{0};

    Rat coeff(const std::string& v) const {
        auto it = coeffs.find(v);
        return it == coeffs.end() ? Rat(0) : it->second;
    }
    void set(const std::string& v, Rat c) {
        if (c == 0) coeffs.erase(v);
        else coeffs[v] = std::move(c);
    }

    friend AffineForm operator+(const AffineForm& a, const AffineForm& b);
    friend AffineForm operator-(const AffineForm& a, const AffineForm& b);
    Rat value_at(const std::map<std::string, Rat>& point) const;
};

// value >= rhs / > / <= / < as linear constraints on the piece variables.
LinearConstraint affine_ge(const AffineForm& a, const Rat& rhs);
LinearConstraint affine_gt(const AffineForm& a, const Rat& rhs);
LinearConstraint affine_le(const AffineForm& a, const Rat& rhs);
LinearConstraint affine_lt(const AffineForm& a, const Rat& rhs);

struct MvPiece {
    std::vector<LinearConstraint> guards;  // region within [0,1]^n
    AffineForm value;
};

// Pieces of an MV/MV_GUARD term (Delta is expanded first). Within [0,1]^n
// every point satisfies at least one piece's guards, and on each region the
// affine value equals the Lukasiewicz evaluation of the term.
std::vector<MvPiece> mv_pieces(const TermPtr& t);

}  // namespace grl
