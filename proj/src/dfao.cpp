#include "ctseq/dfao.hpp"

#include <stdexcept>
#include <string>

#include "dfa_minimize.hpp"

namespace ctseq {

std::uint32_t Dfao::value(std::uint64_t n) const {
    std::uint32_t s = initial;
    while (n > 0) {
        s = next(s, static_cast<std::uint32_t>(n % base));
        n /= base;
    }
    return out[s];
}

void Dfao::validate() const {
    if (base < 2) throw std::invalid_argument("Dfao: base must be >= 2");
    if (modulus < 2) throw std::invalid_argument("Dfao: modulus must be >= 2");
    const std::uint32_t n = num_states();
    if (n == 0) throw std::invalid_argument("Dfao: no states");
    if (initial >= n) throw std::invalid_argument("Dfao: initial state out of range");
    if (delta.size() != static_cast<std::size_t>(n) * base)
        throw std::invalid_argument("Dfao: transition table is not total");
    for (std::uint32_t t : delta)
        if (t >= n) throw std::invalid_argument("Dfao: transition target out of range");
    for (std::uint32_t v : out)
        if (v >= modulus) throw std::invalid_argument("Dfao: output out of range");
    // Trailing-zero stability on the reachable part.
    std::vector<char> seen(n, 0);
    std::vector<std::uint32_t> stack{initial};
    seen[initial] = 1;
    while (!stack.empty()) {
        const std::uint32_t s = stack.back();
        stack.pop_back();
        if (out[next(s, 0)] != out[s])
            throw std::invalid_argument(
                "Dfao: trailing-zero stability violated at state " +
                std::to_string(s));
        for (std::uint32_t d = 0; d < base; ++d) {
            const std::uint32_t t = next(s, d);
            if (!seen[t]) {
                seen[t] = 1;
                stack.push_back(t);
            }
        }
    }
}

Dfao dfao_minimize(const Dfao& a) {
    const detail::MinDfa r =
        detail::minimize_dfa(a.num_states(), a.base, a.delta, a.initial, a.out);
    Dfao out;
    out.base = a.base;
    out.modulus = a.modulus;
    out.initial = r.initial;
    out.out = r.labels;
    out.delta = r.delta;
    return out;
}

}  // namespace ctseq
