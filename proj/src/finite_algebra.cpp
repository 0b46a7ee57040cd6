#include "grl/finite_algebra.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

namespace grl {

namespace {

OpTable table_from(size_t n, const std::function<size_t(size_t, size_t)>& f) {
    OpTable t(n, std::vector<size_t>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) t[i][j] = f(i, j);
    return t;
}

}  // namespace

FiniteAlgebra FiniteAlgebra::lukasiewicz(size_t n) {
    if (n < 2) throw std::invalid_argument("lukasiewicz: need at least 2 elements");
    FiniteAlgebra a;
    size_t top = n - 1;
    for (size_t i = 0; i < n; ++i) {
        std::ostringstream name;
        name << i << "/" << top;
        a.elements.push_back(name.str());
    }
    a.e = top;
    a.zero = 0;
    a.meet = table_from(n, [](size_t i, size_t j) { return std::min(i, j); });
    a.join = table_from(n, [](size_t i, size_t j) { return std::max(i, j); });
    a.prod = table_from(n, [top](size_t i, size_t j) {
        return i + j >= top ? i + j - top : 0;
    });
    a.lres = table_from(n, [top](size_t i, size_t j) {
        return std::min(top, top - i + j);
    });
    a.rres = table_from(n, [top](size_t i, size_t j) {
        return std::min(top, i + top - j);
    });
    return a;
}

FiniteAlgebra FiniteAlgebra::boolean2() {
    FiniteAlgebra a;
    a.elements = {"0", "1"};
    a.e = 1;
    a.zero = 0;
    a.meet = table_from(2, [](size_t i, size_t j) { return std::min(i, j); });
    a.join = table_from(2, [](size_t i, size_t j) { return std::max(i, j); });
    a.prod = a.meet;
    a.lres = table_from(2, [](size_t i, size_t j) { return i <= j ? size_t(1) : j; });
    a.rres = table_from(2, [](size_t i, size_t j) { return j <= i ? size_t(1) : i; });
    return a;
}

FiniteAlgebra FiniteAlgebra::godel_chain(size_t n) {
    if (n < 2) throw std::invalid_argument("godel_chain: need at least 2 elements");
    FiniteAlgebra a;
    size_t top = n - 1;
    for (size_t i = 0; i < n; ++i) a.elements.push_back("g" + std::to_string(i));
    a.e = top;
    a.zero = 0;
    a.meet = table_from(n, [](size_t i, size_t j) { return std::min(i, j); });
    a.join = table_from(n, [](size_t i, size_t j) { return std::max(i, j); });
    a.prod = a.meet;
    a.lres = table_from(n, [top](size_t i, size_t j) { return i <= j ? top : j; });
    a.rres = table_from(n, [top](size_t i, size_t j) { return j <= i ? top : i; });
    return a;
}

namespace {

using nlohmann::json;

OpTable parse_table(const json& j, size_t n, const std::string& name) {
    if (!j.is_array() || j.size() != n)
        throw std::invalid_argument("finite algebra: '" + name + "' must be an " +
                                    std::to_string(n) + "x" + std::to_string(n) + " matrix");
    OpTable t;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != n)
            throw std::invalid_argument("finite algebra: ragged '" + name + "' table");
        std::vector<size_t> r;
        for (const auto& cell : row) {
            if (!cell.is_number_unsigned() || cell.get<size_t>() >= n)
                throw std::invalid_argument("finite algebra: '" + name +
                                            "' entries must be element indices");
            r.push_back(cell.get<size_t>());
        }
        t.push_back(std::move(r));
    }
    return t;
}

}  // namespace

FiniteAlgebra FiniteAlgebra::from_json(const std::string& json_text) {
    json j = json::parse(json_text);
    FiniteAlgebra a;
    if (!j.contains("elements") || !j["elements"].is_array())
        throw std::invalid_argument("finite algebra: missing 'elements'");
    for (const auto& el : j["elements"]) a.elements.push_back(el.get<std::string>());
    size_t n = a.elements.size();
    if (n == 0) throw std::invalid_argument("finite algebra: empty universe");
    auto idx = [&](const char* key) {
        if (!j.contains(key) || !j[key].is_number_unsigned() || j[key].get<size_t>() >= n)
            throw std::invalid_argument(std::string("finite algebra: bad '") + key + "'");
        return j[key].get<size_t>();
    };
    a.e = idx("e");
    a.zero = idx("zero");
    a.meet = parse_table(j.at("meet"), n, "meet");
    a.join = parse_table(j.at("join"), n, "join");
    a.prod = parse_table(j.at("prod"), n, "prod");
    a.lres = parse_table(j.at("lres"), n, "lres");
    a.rres = parse_table(j.at("rres"), n, "rres");
    if (j.contains("guard")) a.guard = parse_table(j["guard"], n, "guard");
    return a;
}

std::string FiniteAlgebra::to_json() const {
    json j;
    j["elements"] = elements;
    j["e"] = e;
    j["zero"] = zero;
    j["meet"] = meet;
    j["join"] = join;
    j["prod"] = prod;
    j["lres"] = lres;
    j["rres"] = rres;
    if (guard) j["guard"] = *guard;
    return j.dump(2);
}

// ---------------------------------------------------------------------------
// Validation

namespace {

struct Checker {
    const FiniteAlgebra& a;
    std::vector<AxiomReport>& out;

    std::string name2(size_t x, size_t y) const {
        return "(" + a.elements[x] + ", " + a.elements[y] + ")";
    }
    std::string name3(size_t x, size_t y, size_t z) const {
        return "(" + a.elements[x] + ", " + a.elements[y] + ", " + a.elements[z] + ")";
    }

    void check2(const std::string& axiom, const std::function<bool(size_t, size_t)>& ok) {
        for (size_t x = 0; x < a.size(); ++x)
            for (size_t y = 0; y < a.size(); ++y)
                if (!ok(x, y)) {
                    out.push_back({axiom, false, name2(x, y)});
                    return;
                }
        out.push_back({axiom, true, ""});
    }

    void check3(const std::string& axiom,
                const std::function<bool(size_t, size_t, size_t)>& ok) {
        for (size_t x = 0; x < a.size(); ++x)
            for (size_t y = 0; y < a.size(); ++y)
                for (size_t z = 0; z < a.size(); ++z)
                    if (!ok(x, y, z)) {
                        out.push_back({axiom, false, name3(x, y, z)});
                        return;
                    }
        out.push_back({axiom, true, ""});
    }
};

}  // namespace

std::vector<AxiomReport> validate(const FiniteAlgebra& a, bool mv_mode) {
    size_t n = a.size();
    for (const OpTable* t : {&a.meet, &a.join, &a.prod, &a.lres, &a.rres}) {
        if (t->size() != n) throw std::invalid_argument("validate: malformed table dimensions");
        for (const auto& row : *t)
            if (row.size() != n)
                throw std::invalid_argument("validate: malformed table dimensions");
    }
    if (a.guard && (a.guard->size() != n || (*a.guard)[0].size() != n))
        throw std::invalid_argument("validate: malformed guard table");

    std::vector<AxiomReport> out;
    Checker c{a, out};

    c.check2("meet commutative", [&](size_t x, size_t y) { return a.meet[x][y] == a.meet[y][x]; });
    c.check2("join commutative", [&](size_t x, size_t y) { return a.join[x][y] == a.join[y][x]; });
    c.check3("meet associative", [&](size_t x, size_t y, size_t z) {
        return a.meet[a.meet[x][y]][z] == a.meet[x][a.meet[y][z]];
    });
    c.check3("join associative", [&](size_t x, size_t y, size_t z) {
        return a.join[a.join[x][y]][z] == a.join[x][a.join[y][z]];
    });
    c.check2("meet idempotent-absorption", [&](size_t x, size_t y) {
        return a.meet[x][a.join[x][y]] == x;
    });
    c.check2("join idempotent-absorption", [&](size_t x, size_t y) {
        return a.join[x][a.meet[x][y]] == x;
    });
    c.check3("product associative", [&](size_t x, size_t y, size_t z) {
        return a.prod[a.prod[x][y]][z] == a.prod[x][a.prod[y][z]];
    });
    c.check2("unit element", [&](size_t x, size_t) {
        return a.prod[a.e][x] == x && a.prod[x][a.e] == x;
    });
    c.check3("residuation law", [&](size_t x, size_t y, size_t z) {
        bool left = a.leq(y, a.lres[x][z]);
        bool mid = a.leq(a.prod[x][y], z);
        bool right = a.leq(x, a.rres[z][y]);
        return left == mid && mid == right;
    });
    if (a.guard) {
        c.check2("linear order (guard expansion)",
                 [&](size_t x, size_t y) { return a.leq(x, y) || a.leq(y, x); });
        c.check2("guard operation", [&](size_t x, size_t y) {
            size_t expect = a.leq(a.e, x) ? y : a.e;
            return (*a.guard)[x][y] == expect;
        });
    }
    if (mv_mode) {
        auto neg = [&](size_t x) { return a.lres[x][a.zero]; };
        auto oplus = [&](size_t x, size_t y) { return a.lres[neg(x)][y]; };
        c.check3("MV1 oplus associative", [&](size_t x, size_t y, size_t z) {
            return oplus(x, oplus(y, z)) == oplus(oplus(x, y), z);
        });
        c.check2("MV2 oplus commutative",
                 [&](size_t x, size_t y) { return oplus(x, y) == oplus(y, x); });
        c.check2("MV3 zero unit", [&](size_t x, size_t) { return oplus(x, a.zero) == x; });
        c.check2("MV4 double negation", [&](size_t x, size_t) { return neg(neg(x)) == x; });
        c.check2("MV5 top absorbing",
                 [&](size_t x, size_t) { return oplus(x, neg(a.zero)) == neg(a.zero); });
        c.check2("MV6", [&](size_t x, size_t y) {
            return oplus(neg(oplus(neg(x), y)), y) == oplus(neg(oplus(neg(y), x)), x);
        });
    }
    return out;
}

bool all_pass(const std::vector<AxiomReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const AxiomReport& r) { return r.pass; });
}

bool is_hamiltonian(const FiniteAlgebra& a, unsigned k, std::pair<size_t, size_t>* witness) {
    if (k < 1) throw std::invalid_argument("is_hamiltonian: k must be >= 1");
    for (size_t x = 0; x < a.size(); ++x) {
        size_t p = a.power_el(a.meet[x][a.e], k);
        for (size_t y = 0; y < a.size(); ++y)
            if (a.prod[p][y] != a.prod[y][p]) {
                if (witness) *witness = {x, y};
                return false;
            }
    }
    return true;
}

Congruence::Congruence(size_t n) : parent_(n) {
    for (size_t i = 0; i < n; ++i) parent_[i] = i;
}

size_t Congruence::find(size_t a) const {
    while (parent_[a] != a) {
        parent_[a] = parent_[parent_[a]];
        a = parent_[a];
    }
    return a;
}

void Congruence::unite(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
}

Congruence cg_bruteforce(const FiniteAlgebra& a, size_t b1, size_t b2) {
    Congruence c(a.size());
    c.unite(b1, b2);
    std::vector<const OpTable*> ops = {&a.meet, &a.join, &a.prod, &a.lres, &a.rres};
    if (a.guard) ops.push_back(&*a.guard);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t x = 0; x < a.size(); ++x)
            for (size_t y = x + 1; y < a.size(); ++y) {
                if (!c.same(x, y)) continue;
                for (const OpTable* op : ops)
                    for (size_t z = 0; z < a.size(); ++z) {
                        size_t l1 = (*op)[x][z], l2 = (*op)[y][z];
                        if (!c.same(l1, l2)) {
                            c.unite(l1, l2);
                            changed = true;
                        }
                        size_t r1 = (*op)[z][x], r2 = (*op)[z][y];
                        if (!c.same(r1, r2)) {
                            c.unite(r1, r2);
                            changed = true;
                        }
                    }
            }
    }
    return c;
}

std::vector<std::vector<bool>> cg_hamiltonian(const FiniteAlgebra& a, size_t b1, size_t b2) {
    size_t d = a.equiv_el(b1, b2);
    // Powers of d decrease (d <= e) and stabilize within |A| steps.
    std::vector<size_t> powers{a.e};
    while (true) {
        size_t next = a.prod[d][powers.back()];
        if (next == powers.back()) break;
        powers.push_back(next);
    }
    std::vector<std::vector<bool>> rel(a.size(), std::vector<bool>(a.size(), false));
    for (size_t x = 0; x < a.size(); ++x)
        for (size_t y = 0; y < a.size(); ++y) {
            size_t eq = a.equiv_el(x, y);
            for (size_t p : powers)
                if (a.leq(p, eq)) {
                    rel[x][y] = true;
                    break;
                }
        }
    return rel;
}

bool congruence_equals_relation(const Congruence& c,
                                const std::vector<std::vector<bool>>& rel) {
    for (size_t x = 0; x < c.size(); ++x)
        for (size_t y = 0; y < c.size(); ++y)
            if (c.same(x, y) != static_cast<bool>(rel[x][y])) return false;
    return true;
}

bool check_edpc_exponent(const FiniteAlgebra& a, unsigned n) {
    for (size_t x = 0; x < a.size(); ++x) {
        size_t b = a.meet[x][a.e];
        if (a.power_el(b, n) != a.power_el(b, n + 1)) return false;
    }
    return true;
}

bool check_cip_identity(const FiniteAlgebra& a, size_t b1, size_t b2, size_t c1, size_t c2) {
    Congruence cg1 = cg_bruteforce(a, b1, b2);
    Congruence cg2 = cg_bruteforce(a, c1, c2);
    size_t j = a.join[a.equiv_el(b1, b2)][a.equiv_el(c1, c2)];
    Congruence rhs = cg_bruteforce(a, a.e, j);
    for (size_t x = 0; x < a.size(); ++x)
        for (size_t y = 0; y < a.size(); ++y) {
            bool lhs = cg1.same(x, y) && cg2.same(x, y);
            if (lhs != rhs.same(x, y)) return false;
        }
    return true;
}

}  // namespace grl
