// The built-in sequence registry: a session preloaded with the Thue-Morse
// automaton and the synthesized DFAOs for the Catalan, Motzkin and central
// trinomial sequences at their standard moduli.

#ifndef CTSEQ_REGISTRY_HPP
#define CTSEQ_REGISTRY_HPP

#include <string>
#include <vector>

#include "ctseq/sequences.hpp"
#include "ctseq/session.hpp"

namespace ctseq {

struct BuiltinSeq {
    const char* name;
    SeqKind kind;
    std::uint32_t p;
};

/// T_lsd plus MOT2, MOT3, MOT5, TRI3, TRI5, CAT3, CAT5 (the named DFAOs).
const std::vector<BuiltinSeq>& builtin_sequences();

/// Builds a session with every built-in sequence registered.  When
/// cache_dir is nonempty, automata are loaded from `<dir>/<NAME>.aut` when
/// present and saved there after synthesis.  Every automaton is self-tested
/// against its oracle for n < 10^4 before registration.
Session make_builtin_session(const std::string& cache_dir = "");

}  // namespace ctseq

#endif
