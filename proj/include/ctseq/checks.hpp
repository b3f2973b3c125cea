// Named checks: each one mechanically re-establishes one theorem about
// the Catalan / Motzkin / central-trinomial sequences modulo a prime, by
// running query-language scripts against the built-in registry and
// comparing languages, verdicts and value sets.

#ifndef CTSEQ_CHECKS_HPP
#define CTSEQ_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ctseq/sequences.hpp"

namespace ctseq {

struct XcheckReport {
    SeqKind kind = SeqKind::Catalan;
    std::uint32_t p = 2;
    std::size_t count = 0;
    bool ok = false;
    std::uint64_t first_mismatch = 0;  // meaningful when !ok
    std::uint32_t automaton_value = 0, oracle_value = 0;
    bool output_zero_seen = false;
    std::uint32_t automaton_states = 0;
};

/// Differential test: synthesized DFAO against the module oracle for all
/// n < count.
XcheckReport xcheck(SeqKind kind, std::uint32_t p, std::size_t count);

struct CheckStep {
    std::string description;
    bool pass = false;
    std::string detail;  // witness / mismatch info on failure
};

struct CheckResult {
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::vector<CheckStep> steps;
};

std::vector<std::string> list_checks();
/// Throws std::invalid_argument for an unknown name.
CheckResult run_check(const std::string& name);

}  // namespace ctseq

#endif
