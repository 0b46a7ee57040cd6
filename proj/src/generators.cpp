#include "grl/generators.hpp"

namespace grl {

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

TermPtr gen(std::mt19937_64& rng, const TermGenConfig& cfg, int depth) {
    std::uniform_int_distribution<int> cat(0, 9);
    std::uniform_int_distribution<size_t> var_pick(0, cfg.vars.empty() ? 0 : cfg.vars.size() - 1);
    int c = depth <= 0 ? cat(rng) % 5 : cat(rng);  // leaves only at depth 0
    if (c < 2 || cfg.vars.empty() && c < 5) {
        return rng() % 2 ? Term::e() : Term::zero();
    }
    if (c < 5) return Term::var(cfg.vars[var_pick(rng)]);
    if (allows_guard(cfg.sig) &&
        std::uniform_real_distribution<double>(0, 1)(rng) < cfg.guard_prob)
        return Term::guard(gen(rng, cfg, depth - 1), gen(rng, cfg, depth - 1));
    switch (rng() % 5) {
        case 0: return Term::meet(gen(rng, cfg, depth - 1), gen(rng, cfg, depth - 1));
        case 1: return Term::join(gen(rng, cfg, depth - 1), gen(rng, cfg, depth - 1));
        case 2: return Term::prod(gen(rng, cfg, depth - 1), gen(rng, cfg, depth - 1));
        case 3: return Term::lres(gen(rng, cfg, depth - 1), gen(rng, cfg, depth - 1));
        default: return Term::rres(gen(rng, cfg, depth - 1), gen(rng, cfg, depth - 1));
    }
}

}  // namespace

TermPtr random_term(std::mt19937_64& rng, const TermGenConfig& cfg) {
    return gen(rng, cfg, cfg.max_depth);
}

int guard_count(const TermPtr& t) {
    if (!t) return 0;
    int n = t->kind() == Kind::Guard ? 1 : 0;
    return n + guard_count(t->left()) + guard_count(t->right());
}

LinForm random_linform(std::mt19937_64& rng, const std::vector<std::string>& vars,
                       int coeff_range) {
    std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
    LinForm f;
    for (const auto& v : vars) f.set(v, Int(coeff(rng)));
    return f;
}

TermPtr random_form_meet(std::mt19937_64& rng, const std::vector<std::string>& vars,
                         int coeff_range, int max_forms) {
    std::uniform_int_distribution<int> count(1, max_forms);
    int n = count(rng);
    TermPtr acc;
    for (int i = 0; i < n; ++i) {
        TermPtr f = form_to_term(random_linform(rng, vars, coeff_range));
        acc = acc ? Term::meet(acc, f) : f;
    }
    return acc;
}

TermPtr random_form_join(std::mt19937_64& rng, const std::vector<std::string>& vars,
                         int coeff_range, int max_forms) {
    std::uniform_int_distribution<int> count(1, max_forms);
    int n = count(rng);
    TermPtr acc;
    for (int i = 0; i < n; ++i) {
        TermPtr f = form_to_term(random_linform(rng, vars, coeff_range));
        acc = acc ? Term::join(acc, f) : f;
    }
    return acc;
}

}  // namespace grl
