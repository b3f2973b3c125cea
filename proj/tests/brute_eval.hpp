// Test-only reference semantics for the query language: a direct
// recursive truth evaluator over bounded naturals, independent of the
// automaton pipeline.  Sequence values come straight from oracle tables,
// predicate calls from stored ASTs.
//
// Quantifiers range over [0, quantifier_bound); corpus formulas are
// chosen so that this bound is semantically exact for the tested
// assignments (every quantifier is bounded by free variables or
// constants below the bound).

#ifndef CTSEQ_TESTS_BRUTE_EVAL_HPP
#define CTSEQ_TESTS_BRUTE_EVAL_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctseq/formula.hpp"
#include "ctseq/parser.hpp"

namespace ctseq::testsupport {

struct BruteWorld {
    std::uint64_t quantifier_bound = 256;
    std::map<std::string, std::vector<std::uint8_t>> sequences;
    // Predicate name -> (sorted params, body AST).
    std::map<std::string, std::pair<std::vector<std::string>, FormulaPtr>>
        predicates;
};

/// A formula compiled for fast repeated evaluation: variables are interned
/// into frame slots, predicate bodies into sub-programs.
class BruteProgram {
  public:
    BruteProgram(const BruteWorld& world, const Formula& f)
        : world_(world) {
        const auto fv = free_variables(f);
        free_.assign(fv.begin(), fv.end());
        std::map<std::string, int> slots;
        for (const auto& v : free_) slots.emplace(v, static_cast<int>(slots.size()));
        nslots_ = static_cast<int>(free_.size());
        root_ = compile_formula(f, slots);
    }

    const std::vector<std::string>& free_vars() const { return free_; }

    bool eval(const std::vector<std::uint64_t>& assignment) const {
        std::vector<std::uint64_t> frame(nslots_, 0);
        for (std::size_t i = 0; i < assignment.size(); ++i) frame[i] = assignment[i];
        return eval_formula(root_, frame);
    }

  private:
    enum class TK { Var, Const, Sum, Diff, Mul };
    struct TNode {
        TK kind;
        int slot = -1;
        std::uint64_t value = 0;
        int a = -1, b = -1;
    };
    enum class FK {
        Compare, SeqLit, SeqPair, Call, Not, And, Or, Implies, Iff, Exists,
        Forall,
    };
    struct FNode {
        FK kind;
        CmpRel rel = CmpRel::Eq;
        int t1 = -1, t2 = -1;
        const std::vector<std::uint8_t>* seq1 = nullptr;
        const std::vector<std::uint8_t>* seq2 = nullptr;
        std::uint64_t literal = 0;
        std::shared_ptr<BruteProgram> callee;
        std::vector<int> args;
        int a = -1, b = -1;
        std::vector<int> quant_slots;
    };

    int compile_term(const Term& t, const std::map<std::string, int>& slots) {
        TNode n;
        switch (t.kind) {
            case Term::Kind::Var:
                n.kind = TK::Var;
                n.slot = slots.at(t.var);
                break;
            case Term::Kind::Const:
                n.kind = TK::Const;
                n.value = t.value;
                break;
            case Term::Kind::Sum:
                n.kind = TK::Sum;
                n.a = compile_term(*t.a, slots);
                n.b = compile_term(*t.b, slots);
                break;
            case Term::Kind::Diff:
                n.kind = TK::Diff;
                n.a = compile_term(*t.a, slots);
                n.b = compile_term(*t.b, slots);
                break;
            case Term::Kind::Mul:
                n.kind = TK::Mul;
                n.value = t.coeff;
                n.a = compile_term(*t.a, slots);
                break;
        }
        terms_.push_back(n);
        return static_cast<int>(terms_.size() - 1);
    }

    const std::vector<std::uint8_t>* lookup_seq(const std::string& name) {
        auto it = world_.sequences.find(name);
        if (it == world_.sequences.end())
            throw std::runtime_error("brute eval: unknown sequence " + name);
        return &it->second;
    }

    int compile_formula(const Formula& f, std::map<std::string, int>& slots) {
        FNode n;
        switch (f.kind) {
            case Formula::Kind::Compare:
                n.kind = FK::Compare;
                n.rel = f.rel;
                n.t1 = compile_term(*f.t1, slots);
                n.t2 = compile_term(*f.t2, slots);
                break;
            case Formula::Kind::SeqCmp:
                n.rel = f.rel;
                n.seq1 = lookup_seq(f.seq1);
                n.t1 = compile_term(*f.t1, slots);
                if (f.seq2.empty()) {
                    n.kind = FK::SeqLit;
                    n.literal = f.out_literal;
                } else {
                    n.kind = FK::SeqPair;
                    n.seq2 = lookup_seq(f.seq2);
                    n.t2 = compile_term(*f.t2, slots);
                }
                break;
            case Formula::Kind::Call: {
                n.kind = FK::Call;
                auto it = world_.predicates.find(f.call_name);
                if (it == world_.predicates.end())
                    throw std::runtime_error("brute eval: unknown predicate " +
                                             f.call_name);
                if (it->second.first.size() != f.args.size())
                    throw std::runtime_error("brute eval: arity mismatch for " +
                                             f.call_name);
                n.callee =
                    std::make_shared<BruteProgram>(world_, *it->second.second);
                if (n.callee->free_vars() != it->second.first)
                    throw std::runtime_error(
                        "brute eval: parameter mismatch for " + f.call_name);
                for (const auto& a : f.args)
                    n.args.push_back(compile_term(*a, slots));
                break;
            }
            case Formula::Kind::Not:
                n.kind = FK::Not;
                n.a = compile_formula(*f.a, slots);
                break;
            case Formula::Kind::And:
            case Formula::Kind::Or:
            case Formula::Kind::Implies:
            case Formula::Kind::Iff:
                n.kind = f.kind == Formula::Kind::And       ? FK::And
                         : f.kind == Formula::Kind::Or      ? FK::Or
                         : f.kind == Formula::Kind::Implies ? FK::Implies
                                                            : FK::Iff;
                n.a = compile_formula(*f.a, slots);
                n.b = compile_formula(*f.b, slots);
                break;
            case Formula::Kind::Exists:
            case Formula::Kind::Forall: {
                n.kind = f.kind == Formula::Kind::Exists ? FK::Exists : FK::Forall;
                std::map<std::string, int> inner = slots;
                for (const auto& v : f.bound) {
                    const int slot = nslots_++;
                    inner[v] = slot;
                    n.quant_slots.push_back(slot);
                }
                n.a = compile_formula(*f.body, inner);
                break;
            }
        }
        forms_.push_back(std::move(n));
        return static_cast<int>(forms_.size() - 1);
    }

    bool eval_term(int idx, std::vector<std::uint64_t>& frame,
                   std::uint64_t& out) const {
        const TNode& n = terms_[idx];
        switch (n.kind) {
            case TK::Var: out = frame[n.slot]; return true;
            case TK::Const: out = n.value; return true;
            case TK::Sum: {
                std::uint64_t x, y;
                if (!eval_term(n.a, frame, x) || !eval_term(n.b, frame, y))
                    return false;
                out = x + y;
                return true;
            }
            case TK::Diff: {
                std::uint64_t x, y;
                if (!eval_term(n.a, frame, x) || !eval_term(n.b, frame, y))
                    return false;
                if (x < y) return false;  // undefined over N
                out = x - y;
                return true;
            }
            case TK::Mul: {
                std::uint64_t x;
                if (!eval_term(n.a, frame, x)) return false;
                out = n.value * x;
                return true;
            }
        }
        return false;
    }

    std::uint8_t seq_at(const std::vector<std::uint8_t>& table,
                        std::uint64_t i) const {
        if (i >= table.size())
            throw std::out_of_range("brute eval: oracle table too small (index " +
                                    std::to_string(i) + ")");
        return table[i];
    }

    static bool compare(CmpRel rel, std::uint64_t x, std::uint64_t y) {
        switch (rel) {
            case CmpRel::Eq: return x == y;
            case CmpRel::Ne: return x != y;
            case CmpRel::Lt: return x < y;
            case CmpRel::Le: return x <= y;
            case CmpRel::Gt: return x > y;
            case CmpRel::Ge: return x >= y;
        }
        return false;
    }

    bool eval_formula(int idx, std::vector<std::uint64_t>& frame) const {
        const FNode& n = forms_[idx];
        switch (n.kind) {
            case FK::Compare: {
                std::uint64_t x, y;
                return eval_term(n.t1, frame, x) && eval_term(n.t2, frame, y) &&
                       compare(n.rel, x, y);
            }
            case FK::SeqLit: {
                std::uint64_t i;
                if (!eval_term(n.t1, frame, i)) return false;
                const bool eq = seq_at(*n.seq1, i) == n.literal;
                return n.rel == CmpRel::Eq ? eq : !eq;
            }
            case FK::SeqPair: {
                std::uint64_t i, j;
                if (!eval_term(n.t1, frame, i) || !eval_term(n.t2, frame, j))
                    return false;
                const bool eq = seq_at(*n.seq1, i) == seq_at(*n.seq2, j);
                return n.rel == CmpRel::Eq ? eq : !eq;
            }
            case FK::Call: {
                std::vector<std::uint64_t> sub(n.args.size());
                for (std::size_t k = 0; k < n.args.size(); ++k)
                    if (!eval_term(n.args[k], frame, sub[k])) return false;
                return n.callee->eval(sub);
            }
            case FK::Not: return !eval_formula(n.a, frame);
            case FK::And:
                return eval_formula(n.a, frame) && eval_formula(n.b, frame);
            case FK::Or:
                return eval_formula(n.a, frame) || eval_formula(n.b, frame);
            case FK::Implies:
                return !eval_formula(n.a, frame) || eval_formula(n.b, frame);
            case FK::Iff:
                return eval_formula(n.a, frame) == eval_formula(n.b, frame);
            case FK::Exists:
            case FK::Forall: {
                const bool exists = n.kind == FK::Exists;
                return quant(n, 0, frame, exists);
            }
        }
        return false;
    }

    bool quant(const FNode& n, std::size_t k,
               std::vector<std::uint64_t>& frame, bool exists) const {
        if (k == n.quant_slots.size()) return eval_formula(n.a, frame);
        const int slot = n.quant_slots[k];
        for (std::uint64_t v = 0; v < world_.quantifier_bound; ++v) {
            frame[slot] = v;
            const bool r = quant(n, k + 1, frame, exists);
            if (exists && r) return true;
            if (!exists && !r) return false;
        }
        return !exists;
    }

    const BruteWorld& world_;
    std::vector<std::string> free_;
    int nslots_ = 0;
    std::vector<TNode> terms_;
    std::vector<FNode> forms_;
    int root_ = -1;
};

inline bool brute_eval(const BruteWorld& world, const Formula& f,
                       const std::vector<std::uint64_t>& assignment) {
    return BruteProgram(world, f).eval(assignment);
}

}  // namespace ctseq::testsupport

#endif
