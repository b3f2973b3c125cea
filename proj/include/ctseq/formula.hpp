// AST for the first-order query language over (N, +, <, constant
// multiplication, sequence indexing).

#ifndef CTSEQ_FORMULA_HPP
#define CTSEQ_FORMULA_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace ctseq {

struct Term;
struct Formula;
using TermPtr = std::shared_ptr<const Term>;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Term {
    enum class Kind { Var, Const, Sum, Diff, Mul };
    Kind kind;
    std::string var;         // Var
    std::uint64_t value = 0; // Const
    std::uint64_t coeff = 0; // Mul: coeff * a
    TermPtr a, b;

    static TermPtr make_var(std::string name);
    static TermPtr make_const(std::uint64_t v);
    static TermPtr sum(TermPtr a, TermPtr b);
    static TermPtr diff(TermPtr a, TermPtr b);
    static TermPtr mul(std::uint64_t coeff, TermPtr a);
};

enum class CmpRel { Eq, Ne, Lt, Le, Gt, Ge };

struct Formula {
    enum class Kind {
        Compare,   // t1 rel t2
        SeqCmp,    // SEQ[t] (=|!=) @v   or   SEQ1[t1] (=|!=) SEQ2[t2]
        Call,      // $name(args...)
        Not, And, Or, Implies, Iff,
        Exists, Forall,
    };
    Kind kind;

    CmpRel rel = CmpRel::Eq;  // Compare / SeqCmp (Eq or Ne only for SeqCmp)
    TermPtr t1, t2;

    std::string seq1, seq2;        // SeqCmp; seq2 empty means literal rhs
    std::uint64_t out_literal = 0; // SeqCmp with literal rhs

    std::string call_name;         // Call
    std::vector<TermPtr> args;

    FormulaPtr a, b;               // connectives (b unused by Not)

    std::vector<std::string> bound;  // quantifiers
    FormulaPtr body;

    static FormulaPtr compare(TermPtr t1, CmpRel rel, TermPtr t2);
    static FormulaPtr seq_literal(std::string seq, TermPtr index, CmpRel rel,
                                  std::uint64_t literal);
    static FormulaPtr seq_pair(std::string seq1, TermPtr i1, CmpRel rel,
                               std::string seq2, TermPtr i2);
    static FormulaPtr call(std::string name, std::vector<TermPtr> args);
    static FormulaPtr negate(FormulaPtr a);
    static FormulaPtr binary(Kind kind, FormulaPtr a, FormulaPtr b);
    static FormulaPtr quantifier(Kind kind, std::vector<std::string> vars,
                                 FormulaPtr body);
};

/// Free variables, sorted.
std::set<std::string> free_variables(const Formula& f);
std::set<std::string> term_variables(const Term& t);

/// Round-trippable rendering (parse(print(f)) reproduces the AST for any
/// parser-produced formula).
std::string to_string(const Term& t);
std::string to_string(const Formula& f);

bool equal(const Term& a, const Term& b);
bool equal(const Formula& a, const Formula& b);

}  // namespace ctseq

#endif
