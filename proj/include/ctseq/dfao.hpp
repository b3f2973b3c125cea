// Deterministic finite automaton with output (DFAO), lsd-first.
//
// A Dfao reads the base-k digits of n least-significant-digit first and
// emits the output of the final state; n = 0 is the empty digit string.
// Trailing-zero stability (out(delta(q, 0)) == out(q) for every reachable
// q) is a type invariant: it makes the value independent of zero padding.

#ifndef CTSEQ_DFAO_HPP
#define CTSEQ_DFAO_HPP

#include <cstdint>
#include <vector>

namespace ctseq {

struct Dfao {
    std::uint32_t base = 2;
    std::uint32_t modulus = 2;  // outputs lie in [0, modulus)
    std::uint32_t initial = 0;
    std::vector<std::uint32_t> out;    // one output per state
    std::vector<std::uint32_t> delta;  // delta[s * base + d]

    std::uint32_t num_states() const {
        return static_cast<std::uint32_t>(out.size());
    }
    std::uint32_t next(std::uint32_t s, std::uint32_t d) const {
        return delta[static_cast<std::size_t>(s) * base + d];
    }

    /// Sequence value at n: walk the lsd-first digits of n.
    std::uint32_t value(std::uint64_t n) const;

    /// Throws std::invalid_argument on any type-invariant violation
    /// (totality/ranges, trailing-zero stability).
    void validate() const;

    bool operator==(const Dfao& o) const = default;
};

/// Moore minimization: merges output-equivalent states, drops unreachable
/// ones, and renumbers by BFS from the initial state with digits ascending.
Dfao dfao_minimize(const Dfao& a);

}  // namespace ctseq

#endif
