// Multi-track automata over tuples of base-k digits, and the algebra on
// them: product, complement, projection, linear relations, slicing a DFAO
// by output value, equivalence, witnesses and enumeration.
//
// A MultiDfa denotes a relation on naturals, one named track per variable.
// Words are read lsd-first; the representation of 0 is the empty string,
// and every automaton accepts a word iff it accepts the word followed by
// any number of all-zero tuples (zero-pad invariance).  With zero tracks
// the automaton denotes a truth value.

#ifndef CTSEQ_MULTIDFA_HPP
#define CTSEQ_MULTIDFA_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctseq/dfao.hpp"

namespace ctseq {

struct MultiDfa {
    std::uint32_t base = 2;
    std::vector<std::string> tracks;  // distinct variable names; may be empty
    std::uint32_t initial = 0;
    std::vector<char> accepting;       // one flag per state
    std::vector<std::uint32_t> delta;  // delta[s * symbol_count + sym]

    std::uint32_t num_states() const {
        return static_cast<std::uint32_t>(accepting.size());
    }
    /// base^(#tracks); tuples are encoded track-0-major, so ascending
    /// symbol index is ascending lexicographic tuple order.
    std::uint32_t symbol_count() const;
    /// Convenience accessor; hot loops should index delta directly with a
    /// precomputed symbol count.
    std::uint32_t next(std::uint32_t s, std::uint32_t sym) const {
        return delta[static_cast<std::size_t>(s) * symbol_count() + sym];
    }

    bool accepts_word(const std::vector<std::uint32_t>& symbols) const;
    /// Membership of a tuple of naturals (values in track order): encodes
    /// each component lsd-first, pads to a common length, runs the word.
    bool accepts(const std::vector<std::uint64_t>& values) const;
    /// Zero-track verdict.
    bool is_true() const;

    /// Throws std::invalid_argument on invariant violations (totality,
    /// duplicate track names, zero-pad invariance).
    void validate() const;

    bool operator==(const MultiDfa& o) const = default;
};

std::uint32_t encode_tuple(std::uint32_t base,
                           const std::vector<std::uint32_t>& digits);
std::vector<std::uint32_t> decode_tuple(std::uint32_t base, std::size_t ntracks,
                                        std::uint32_t sym);

/// Constant automaton over the given tracks.
MultiDfa mdfa_const(std::uint32_t base, std::vector<std::string> tracks,
                    bool value);

enum class BoolOp { And, Or, Xor };

/// Synchronized product.  Result tracks are a's tracks followed by b's new
/// tracks; shared names are synchronized.  Both operands must share a base.
MultiDfa product(const MultiDfa& a, const MultiDfa& b, BoolOp op);

MultiDfa complement(const MultiDfa& a);

/// Existential projection: erases the named track, saturates acceptance
/// along all-zero-tuple paths, determinizes and minimizes.
MultiDfa project(const MultiDfa& a, const std::string& track);

enum class LinRel { Eq, Le };

/// Automaton of the linear relation  sum coeffs[v]*v + c  (= 0 | <= 0).
MultiDfa linear_automaton(std::uint32_t base,
                          const std::map<std::string, std::int64_t>& coeffs,
                          std::int64_t c, LinRel rel);

/// Single-track automaton accepting the representations of
/// { n : a(n) = v }.  The track is named `track`.
MultiDfa dfao_slice(const Dfao& a, std::uint32_t v, std::string track = "n");

/// Renames tracks (simultaneously); `renames` maps old name -> new name.
MultiDfa rename_tracks(const MultiDfa& a,
                       const std::map<std::string, std::string>& renames);

/// Permutes the track order to ascending name order.
MultiDfa sort_tracks(const MultiDfa& a);

/// Hopcroft-style minimization plus canonical BFS renumbering (symbols
/// ascending).  Every operation above already returns minimized automata.
MultiDfa minimize(const MultiDfa& a);

bool is_empty(const MultiDfa& a);

/// Same language?  Requires equal bases and equal track-name sets; track
/// order is aligned by name.
bool equivalent(const MultiDfa& a, const MultiDfa& b);

/// None if the language is empty, else the lexicographically least
/// shortest accepted word decoded to one natural per track.
std::optional<std::vector<std::uint64_t>> witness(const MultiDfa& a);

/// All accepted tuples with every component < limit, in ascending
/// lexicographic order by track.
std::vector<std::vector<std::uint64_t>> enumerate_accepted(const MultiDfa& a,
                                                           std::uint64_t limit);

}  // namespace ctseq

#endif
