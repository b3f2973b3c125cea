// Constant-term automaton synthesis.
//
// Given a(n) = ct[P(x)^n Q(x)] mod p with p prime, builds the lsd-first
// base-p DFAO computing a.  States are Laurent polynomials: the start
// state is Q and reading digit d maps R to the Cartier image of P^d * R.
// This closes into finitely many states because mod p the Frobenius
// identity P(x)^p = P(x^p) lets one digit of n be absorbed per step while
// the state supports stay inside a fixed window.

#ifndef CTSEQ_SYNTHESIS_HPP
#define CTSEQ_SYNTHESIS_HPP

#include <cstdint>
#include <vector>

#include "ctseq/dfao.hpp"
#include "ctseq/laurent.hpp"

namespace ctseq {

/// Synthesizes the minimized DFAO for a CtSpec.  Throws std::runtime_error
/// if the breadth-first closure exceeds state_limit and
/// std::invalid_argument if p is not prime.
Dfao synth_dfao(const CtSpec& spec, std::uint32_t state_limit = 1000000);

/// The raw (unminimized) closure states in BFS discovery order, digit
/// order ascending; exposed for support-window diagnostics.
std::vector<LaurentPoly> synth_states(const CtSpec& spec,
                                      std::uint32_t state_limit = 1000000);

}  // namespace ctseq

#endif
