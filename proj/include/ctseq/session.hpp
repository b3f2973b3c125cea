// Session state (named sequences and predicates) and the compiler from
// formulas to multi-track automata.
//
// Compilation notes:
//   - compiled tracks are the formula's free variables, sorted;
//   - subtraction is relational (monus): an atom whose term subtracts
//     more than it has is false for that assignment, via a fresh
//     existential witness z with z + subtrahend = minuend;
//   - X[e] rel @v routes through a fresh index variable and a slice of
//     the sequence automaton; X[e1] = X[e2] expands over output values;
//   - quantifiers compile to projection (E) and to ~E~ (A).

#ifndef CTSEQ_SESSION_HPP
#define CTSEQ_SESSION_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ctseq/dfao.hpp"
#include "ctseq/formula.hpp"
#include "ctseq/multidfa.hpp"
#include "ctseq/parser.hpp"

namespace ctseq {

struct Predicate {
    std::vector<std::string> params;  // sorted; equal to automaton.tracks
    MultiDfa automaton;
};

class Session {
  public:
    /// Duplicate sequence names are rejected.
    void register_sequence(const std::string& name, Dfao a);
    const Dfao* find_sequence(const std::string& name) const;

    /// def/eval both land here; a later definition replaces an earlier
    /// one of the same name (scripts reuse scratch names like `tmp`).
    void register_predicate(const std::string& name, Predicate p);
    const Predicate* find_predicate(const std::string& name) const;

    const std::map<std::string, Dfao>& sequences() const { return sequences_; }
    const std::map<std::string, Predicate>& predicates() const {
        return predicates_;
    }

  private:
    std::map<std::string, Dfao> sequences_;
    std::map<std::string, Predicate> predicates_;
};

struct Verdict {
    enum class Kind { True, False, Automaton };
    Kind kind = Kind::False;
    std::string name;
    MultiDfa automaton;

    bool is_true() const { return kind == Kind::True; }
    std::string text() const;
};

/// Compiles a formula over base-k numerals against the session's names.
MultiDfa compile(const Formula& f, std::uint32_t base, const Session& s);

/// Runs one parsed command: compiles, registers the result as a callable
/// predicate under the command name, and reports TRUE/FALSE for closed
/// formulas or the automaton for open ones.
Verdict eval_command(const Command& cmd, Session& s);

/// Parses and runs a whole script; the first failing command aborts.
std::vector<Verdict> run_script(std::string_view src, Session& s);

}  // namespace ctseq

#endif
