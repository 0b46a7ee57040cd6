// Finite pointed-residuated-lattice workbench: axiom validation, the
// Hamiltonian law, principal congruences computed two ways, the EDPC
// exponent law and the compact-intersection identity.
#pragma once

#include "grl/term.hpp"

#include <optional>
#include <string>
#include <vector>

namespace grl {

using OpTable = std::vector<std::vector<size_t>>;

struct FiniteAlgebra {
    std::vector<std::string> elements;
    size_t e = 0;
    size_t zero = 0;
    OpTable meet, join, prod, lres, rres;
    std::optional<OpTable> guard;

    size_t size() const { return elements.size(); }
    bool leq(size_t a, size_t b) const { return meet[a][b] == a; }

    // (a\b) & (b\a) & e
    size_t equiv_el(size_t a, size_t b) const {
        return meet[meet[lres[a][b]][lres[b][a]]][e];
    }
    size_t power_el(size_t a, unsigned n) const {
        size_t acc = e;
        for (unsigned i = 0; i < n; ++i) acc = prod[a][acc];
        return acc;
    }

    static FiniteAlgebra lukasiewicz(size_t n);  // n-element chain, n >= 2
    static FiniteAlgebra boolean2();
    static FiniteAlgebra godel_chain(size_t n);

    static FiniteAlgebra from_json(const std::string& json_text);
    std::string to_json() const;
};

struct AxiomReport {
    std::string axiom;
    bool pass = false;
    std::string witness;  // first counterexample, element names
};

// PRL axioms (lattice, monoid, residuation law, guard-table consistency when
// present); mv_mode additionally checks MV1..MV6 over the derived operations
// ~x = x\0 and x (+) y = (x\0)\y.
std::vector<AxiomReport> validate(const FiniteAlgebra& a, bool mv_mode = false);
bool all_pass(const std::vector<AxiomReport>& reports);

// (x & e)^k * y ~ y * (x & e)^k, exhaustively.
bool is_hamiltonian(const FiniteAlgebra& a, unsigned k,
                    std::pair<size_t, size_t>* witness = nullptr);

// Union-find partition compatible with every operation table.
class Congruence {
  public:
    explicit Congruence(size_t n);
    size_t find(size_t a) const;
    void unite(size_t a, size_t b);
    bool same(size_t a, size_t b) const { return find(a) == find(b); }
    size_t size() const { return parent_.size(); }

  private:
    mutable std::vector<size_t> parent_;
};

// Least congruence containing (b1, b2): closure under symmetry, transitivity
// and one-sided translations of every operation.
Congruence cg_bruteforce(const FiniteAlgebra& a, size_t b1, size_t b2);

// {(a1,a2) : (b1==b2)^n <= a1==a2 for some n up to the power-stabilization
// index}; agrees with cg_bruteforce on Hamiltonian algebras.
std::vector<std::vector<bool>> cg_hamiltonian(const FiniteAlgebra& a, size_t b1, size_t b2);

bool congruence_equals_relation(const Congruence& c,
                                const std::vector<std::vector<bool>>& rel);

// (x & e)^n ~ (x & e)^(n+1), exhaustively.
bool check_edpc_exponent(const FiniteAlgebra& a, unsigned n);

// Cg(b1,b2) /\ Cg(c1,c2) = Cg(e, (b1==b2) | (c1==c2)).
bool check_cip_identity(const FiniteAlgebra& a, size_t b1, size_t b2, size_t c1, size_t c2);

}  // namespace grl
