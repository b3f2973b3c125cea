// Text persistence for automata (bit-exact, line-oriented) and dot export.
//
// Format, one record per line, '#' comments ignored:
//   ctaut 1
//   base <k> kind <dfa|dfao> [mod <m>] tracks <name,...|->
//   states <N> initial <q0>
//   s <id> <accept|reject|out <v>>
//   t <from> <d1[,d2,...]> <to>
// Transitions carry one digit per track, in track order ('-' for the empty
// tuple of a zero-track automaton, and for a DFAO's unnamed single input).
// Emission is byte-deterministic given canonical state numbering.

#ifndef CTSEQ_AUTOMATON_IO_HPP
#define CTSEQ_AUTOMATON_IO_HPP

#include <string>
#include <variant>

#include "ctseq/dfao.hpp"
#include "ctseq/multidfa.hpp"

namespace ctseq {

std::string emit_automaton(const Dfao& a);
std::string emit_automaton(const MultiDfa& a);

void save_automaton(const Dfao& a, const std::string& path);
void save_automaton(const MultiDfa& a, const std::string& path);

using LoadedAutomaton = std::variant<Dfao, MultiDfa>;

/// Parses and validates (totality, ranges, pad invariance / trailing-zero
/// stability).  Malformed input raises std::runtime_error with a line
/// number.
LoadedAutomaton parse_automaton(const std::string& text);
LoadedAutomaton load_automaton(const std::string& path);

std::string to_dot(const Dfao& a);
std::string to_dot(const MultiDfa& a);
void export_dot(const Dfao& a, const std::string& path);
void export_dot(const MultiDfa& a, const std::string& path);

}  // namespace ctseq

#endif
