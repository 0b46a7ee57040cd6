// Exact-rational linear constraint systems and Fourier-Motzkin feasibility
// with strict/non-strict tracking.
#pragma once

#include "grl/linform.hpp"
#include "grl/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace grl {

enum class Rel { GE, GT };  // lhs >= bound, lhs > bound

struct LinearConstraint {
    std::map<std::string, Rat> lhs;
    Rat bound{0};
    Rel rel = Rel::GE;

    Rat coeff(const std::string& v) const {
        auto it = lhs.find(v);
        return it == lhs.end() ? Rat(0) : it->second;
    }
    void set(const std::string& v, Rat c) {
        if (c == 0) lhs.erase(v);
        else lhs[v] = std::move(c);
    }

    bool satisfied_by(const std::map<std::string, Rat>& point) const;
    std::string to_string() const;
};

// f >= 0 / f > 0 / f <= 0 / f < 0 as constraints on an integer form.
LinearConstraint form_ge0(const LinForm& f);
LinearConstraint form_gt0(const LinForm& f);
LinearConstraint form_le0(const LinForm& f);
LinearConstraint form_lt0(const LinForm& f);

struct ConstraintSystem {
    std::vector<LinearConstraint> constraints;
    // When set, every variable is additionally constrained to [0,1] (the MV
    // standard model's carrier).
    bool unit_box = false;

    void add(LinearConstraint c) { constraints.push_back(std::move(c)); }
};

struct FmResult {
    bool feasible = false;
    std::map<std::string, Rat> witness;  // rational point when feasible
};

// Eliminates variables one at a time, pairing lower and upper bounds;
// any combination involving a strict constraint stays strict. The witness is
// recovered by back-substitution in reverse elimination order.
FmResult fm_feasible(const ConstraintSystem& sys);

}  // namespace grl
