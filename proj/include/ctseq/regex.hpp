// Digit regular expressions and their compilation to single-track
// automata.
//
// A pattern is matched against the CANONICAL lsd representation of n
// (shortest form: empty string for 0, last digit nonzero); the compiled
// automaton is then pad-closed, accepting every zero-padded variant.

#ifndef CTSEQ_REGEX_HPP
#define CTSEQ_REGEX_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ctseq/multidfa.hpp"

namespace ctseq {

struct DigitRegex;
using RegexPtr = std::shared_ptr<const DigitRegex>;

struct DigitRegex {
    enum class Kind { Epsilon, Literal, Class, Concat, Union, Star, Plus };
    Kind kind;
    std::uint32_t digit = 0;           // Literal
    std::vector<std::uint32_t> digits; // Class
    RegexPtr a, b;
};

namespace rx {
RegexPtr eps();
RegexPtr lit(std::uint32_t digit);
RegexPtr cls(std::vector<std::uint32_t> digits);
/// Any single digit of the given base.
RegexPtr any(std::uint32_t base);
RegexPtr cat(RegexPtr a, RegexPtr b);
RegexPtr cat(std::initializer_list<RegexPtr> parts);
RegexPtr alt(RegexPtr a, RegexPtr b);
RegexPtr star(RegexPtr a);
RegexPtr plus(RegexPtr a);
}  // namespace rx

/// Thompson construction, determinization, minimization; result accepts
/// exactly the padded representations of { n : canonical lsd of n matches }.
MultiDfa regex_compile(const DigitRegex& r, std::uint32_t base,
                       std::string track = "n");

}  // namespace ctseq

#endif
