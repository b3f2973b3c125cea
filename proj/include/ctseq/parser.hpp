// Lexer and recursive-descent parser for the query language.
//
// Script grammar:   ( ('def'|'eval') NAME "FORMULA" ':' )*   with '#'
// line comments.  A formula starts with the base header '?lsd_k'.
// Operator precedence, tightest first: atoms/comparisons, ~, &, |, =>,
// <=>.  A quantifier ('E'/'A' plus a comma-separated variable list)
// extends to the end of the enclosing parenthesized group.

#ifndef CTSEQ_PARSER_HPP
#define CTSEQ_PARSER_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ctseq/formula.hpp"

namespace ctseq {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(col) + ": " + msg),
          line(line),
          col(col) {}
};

struct Command {
    enum class Kind { Def, Eval };
    Kind kind;
    std::string name;
    std::uint32_t base = 2;
    FormulaPtr formula;
    int line = 1, col = 1;
};

std::vector<Command> parse_script(std::string_view src);

/// Parses a bare formula string of the form "?lsd_k BODY".
std::pair<std::uint32_t, FormulaPtr> parse_formula(std::string_view src);

}  // namespace ctseq

#endif
