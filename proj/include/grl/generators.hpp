// Seeded random generation of terms and linear forms for the verification
// harness. Per-case seeds are derived by splitmix so case generation is
// order-independent.
#pragma once

#include "grl/linform.hpp"
#include "grl/term.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace grl {

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index);

struct TermGenConfig {
    Sig sig = Sig::LA;
    std::vector<std::string> vars;
    int max_depth = 5;
    double guard_prob = 0.15;
};

// Node categories weighted constants:variables:operators = 2:3:5; guards
// drawn with cfg.guard_prob inside the operator share.
TermPtr random_term(std::mt19937_64& rng, const TermGenConfig& cfg);

int guard_count(const TermPtr& t);

LinForm random_linform(std::mt19937_64& rng, const std::vector<std::string>& vars,
                       int coeff_range);

// Meet (or join) of 1..max_forms random forms, as a core LA term.
TermPtr random_form_meet(std::mt19937_64& rng, const std::vector<std::string>& vars,
                         int coeff_range, int max_forms);
TermPtr random_form_join(std::mt19937_64& rng, const std::vector<std::string>& vars,
                         int coeff_range, int max_forms);

}  // namespace grl
