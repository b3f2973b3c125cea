#include "ctseq/synthesis.hpp"

#include <map>
#include <stdexcept>

namespace ctseq {

namespace {

struct Closure {
    std::vector<LaurentPoly> states;  // BFS discovery order
    std::vector<std::uint32_t> delta;
};

Closure close(const CtSpec& spec, std::uint32_t state_limit) {
    if (!is_prime(spec.p))
        throw std::invalid_argument("synth_dfao: modulus is not prime");
    if (state_limit < 1)
        throw std::invalid_argument("synth_dfao: state limit must be >= 1");
    const std::uint32_t p = spec.p;

    // P^d for d in [0, p).
    std::vector<LaurentPoly> ppow;
    ppow.reserve(p);
    ppow.push_back(LaurentPoly::constant(p, 1));
    for (std::uint32_t d = 1; d < p; ++d)
        ppow.push_back(lp_mul(ppow.back(), spec.P));

    Closure c;
    std::map<LaurentPoly, std::uint32_t> ids;
    auto intern = [&](const LaurentPoly& r) {
        auto [it, fresh] = ids.emplace(r, static_cast<std::uint32_t>(c.states.size()));
        if (fresh) {
            c.states.push_back(r);
            if (c.states.size() > state_limit)
                throw std::runtime_error(
                    "synth_dfao: state explosion, closure exceeds limit of " +
                    std::to_string(state_limit) + " states");
        }
        return it->second;
    };

    intern(spec.Q);
    for (std::uint32_t cur = 0; cur < c.states.size(); ++cur) {
        // Copy: intern may reallocate the state vector.
        const LaurentPoly r = c.states[cur];
        for (std::uint32_t d = 0; d < p; ++d)
            c.delta.push_back(intern(cartier(lp_mul(ppow[d], r), p)));
    }
    return c;
}

}  // namespace

std::vector<LaurentPoly> synth_states(const CtSpec& spec,
                                      std::uint32_t state_limit) {
    return close(spec, state_limit).states;
}

Dfao synth_dfao(const CtSpec& spec, std::uint32_t state_limit) {
    const Closure c = close(spec, state_limit);
    Dfao a;
    a.base = spec.p;
    a.modulus = spec.p;
    a.initial = 0;
    a.out.reserve(c.states.size());
    for (const LaurentPoly& r : c.states) a.out.push_back(lp_ct(r));
    a.delta = c.delta;
    return dfao_minimize(a);
}

}  // namespace ctseq
