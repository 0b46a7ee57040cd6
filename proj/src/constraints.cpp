#include "grl/constraints.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace grl {

bool LinearConstraint::satisfied_by(const std::map<std::string, Rat>& point) const {
    Rat acc(0);
    for (const auto& [v, c] : lhs) {
        auto it = point.find(v);
        if (it == point.end())
            throw std::invalid_argument("constraint: unbound variable " + v);
        acc += c * it->second;
    }
    return rel == Rel::GE ? acc >= bound : acc > bound;
}

std::string LinearConstraint::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [v, c] : lhs) {
        if (!first) out << " + ";
        out << rat_str(c) << "*" << v;
        first = false;
    }
    if (first) out << "0";
    out << (rel == Rel::GE ? " >= " : " > ") << rat_str(bound);
    return out.str();
}

namespace {
LinearConstraint from_form(const LinForm& f, Rel rel, bool negate) {
    LinearConstraint c;
    c.rel = rel;
    for (const auto& [v, k] : f.coeffs) c.lhs[v] = negate ? Rat(-k) : Rat(k);
    return c;
}
}  // namespace

LinearConstraint form_ge0(const LinForm& f) { return from_form(f, Rel::GE, false); }
LinearConstraint form_gt0(const LinForm& f) { return from_form(f, Rel::GT, false); }
LinearConstraint form_le0(const LinForm& f) { return from_form(f, Rel::GE, true); }
LinearConstraint form_lt0(const LinForm& f) { return from_form(f, Rel::GT, true); }

namespace {

std::vector<std::string> system_vars(const std::vector<LinearConstraint>& cs) {
    std::set<std::string> names;
    for (const auto& c : cs)
        for (const auto& [v, k] : c.lhs) names.insert(v);
    return {names.begin(), names.end()};
}

// One bound on the variable being eliminated: coeff*x + rest >=/> bound.
// coeff > 0 gives a lower bound x >= (bound - rest)/coeff, coeff < 0 an upper.
struct Bound {
    std::map<std::string, Rat> rest;
    Rat bound;
    Rat coeff;
    Rel rel;

    Rat eval(const std::map<std::string, Rat>& point) const {
        Rat acc = bound;
        for (const auto& [v, c] : rest) acc -= c * point.at(v);
        return acc / coeff;
    }
};

}  // namespace

FmResult fm_feasible(const ConstraintSystem& sys) {
    std::vector<LinearConstraint> cs = sys.constraints;
    std::vector<std::string> vars = system_vars(cs);
    if (sys.unit_box) {
        for (const auto& v : vars) {
            LinearConstraint lo, hi;
            lo.set(v, Rat(1));   // x >= 0
            hi.set(v, Rat(-1));  // -x >= -1
            hi.bound = Rat(-1);
            cs.push_back(std::move(lo));
            cs.push_back(std::move(hi));
        }
    }

    struct Level {
        std::string var;
        std::vector<Bound> lowers, uppers;
    };
    std::vector<Level> levels;

    for (const auto& x : vars) {
        Level level;
        level.var = x;
        std::vector<LinearConstraint> rest;
        for (const auto& c : cs) {
            Rat k = c.coeff(x);
            if (k == 0) {
                rest.push_back(c);
                continue;
            }
            Bound b;
            b.rest = c.lhs;
            b.rest.erase(x);
            b.bound = c.bound;
            b.coeff = k;
            b.rel = c.rel;
            (k > 0 ? level.lowers : level.uppers).push_back(std::move(b));
        }
        // Pair each lower with each upper: multiply the lower constraint by
        // -a_U > 0 and the upper by a_L > 0 and add; the x terms cancel and
        // the combination is strict if either side is.
        for (const auto& lo : level.lowers)
            for (const auto& up : level.uppers) {
                Rat ml = -up.coeff;  // multiplier for the lower constraint
                Rat mu = lo.coeff;   // multiplier for the upper constraint
                LinearConstraint out;
                out.rel = (lo.rel == Rel::GT || up.rel == Rel::GT) ? Rel::GT : Rel::GE;
                for (const auto& [v, r] : lo.rest) out.set(v, out.coeff(v) + ml * r);
                for (const auto& [v, r] : up.rest) out.set(v, out.coeff(v) + mu * r);
                out.bound = ml * lo.bound + mu * up.bound;
                rest.push_back(std::move(out));
            }
        cs = std::move(rest);
        levels.push_back(std::move(level));
    }

    for (const auto& c : cs) {
        if (!c.lhs.empty()) throw std::logic_error("fm_feasible: non-ground residue");
        if (c.rel == Rel::GE ? !(0 >= c.bound) : !(0 > c.bound)) return {};
    }

    // Back-substitute a witness in reverse elimination order: take the
    // tightest lower/upper bounds under the partial assignment and pick the
    // midpoint (or shift by 1 when one-sided and strict).
    FmResult res;
    res.feasible = true;
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
        std::optional<Rat> lo_val, up_val;
        bool lo_strict = false, up_strict = false;
        for (const auto& b : it->lowers) {
            Rat v = b.eval(res.witness);
            if (!lo_val || v > *lo_val) {
                lo_val = v;
                lo_strict = b.rel == Rel::GT;
            } else if (v == *lo_val && b.rel == Rel::GT) {
                lo_strict = true;
            }
        }
        for (const auto& b : it->uppers) {
            Rat v = b.eval(res.witness);
            if (!up_val || v < *up_val) {
                up_val = v;
                up_strict = b.rel == Rel::GT;
            } else if (v == *up_val && b.rel == Rel::GT) {
                up_strict = true;
            }
        }
        Rat chosen(0);
        if (lo_val && up_val) {
            if (*lo_val == *up_val) chosen = *lo_val;  // only possible non-strict
            else chosen = (*lo_val + *up_val) / 2;
        } else if (lo_val) {
            chosen = lo_strict ? *lo_val + 1 : *lo_val;
        } else if (up_val) {
            chosen = up_strict ? *up_val - 1 : *up_val;
        }
        res.witness[it->var] = chosen;
    }
    return res;
}

}  // namespace grl
