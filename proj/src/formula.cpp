#include "ctseq/formula.hpp"

#include <sstream>
#include <stdexcept>

namespace ctseq {

TermPtr Term::make_var(std::string name) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Var;
    t->var = std::move(name);
    return t;
}

TermPtr Term::make_const(std::uint64_t v) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Const;
    t->value = v;
    return t;
}

TermPtr Term::sum(TermPtr a, TermPtr b) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Sum;
    t->a = std::move(a);
    t->b = std::move(b);
    return t;
}

TermPtr Term::diff(TermPtr a, TermPtr b) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Diff;
    t->a = std::move(a);
    t->b = std::move(b);
    return t;
}

TermPtr Term::mul(std::uint64_t coeff, TermPtr a) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Mul;
    t->coeff = coeff;
    t->a = std::move(a);
    return t;
}

FormulaPtr Formula::compare(TermPtr t1, CmpRel rel, TermPtr t2) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::Compare;
    f->rel = rel;
    f->t1 = std::move(t1);
    f->t2 = std::move(t2);
    return f;
}

FormulaPtr Formula::seq_literal(std::string seq, TermPtr index, CmpRel rel,
                                std::uint64_t literal) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::SeqCmp;
    f->rel = rel;
    f->seq1 = std::move(seq);
    f->t1 = std::move(index);
    f->out_literal = literal;
    return f;
}

FormulaPtr Formula::seq_pair(std::string seq1, TermPtr i1, CmpRel rel,
                             std::string seq2, TermPtr i2) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::SeqCmp;
    f->rel = rel;
    f->seq1 = std::move(seq1);
    f->t1 = std::move(i1);
    f->seq2 = std::move(seq2);
    f->t2 = std::move(i2);
    return f;
}

FormulaPtr Formula::call(std::string name, std::vector<TermPtr> args) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::Call;
    f->call_name = std::move(name);
    f->args = std::move(args);
    return f;
}

FormulaPtr Formula::negate(FormulaPtr a) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::Not;
    f->a = std::move(a);
    return f;
}

FormulaPtr Formula::binary(Kind kind, FormulaPtr a, FormulaPtr b) {
    auto f = std::make_shared<Formula>();
    f->kind = kind;
    f->a = std::move(a);
    f->b = std::move(b);
    return f;
}

FormulaPtr Formula::quantifier(Kind kind, std::vector<std::string> vars,
                               FormulaPtr body) {
    auto f = std::make_shared<Formula>();
    f->kind = kind;
    f->bound = std::move(vars);
    f->body = std::move(body);
    return f;
}

namespace {

void collect_term_vars(const Term& t, std::set<std::string>& out) {
    switch (t.kind) {
        case Term::Kind::Var: out.insert(t.var); break;
        case Term::Kind::Const: break;
        case Term::Kind::Sum:
        case Term::Kind::Diff:
            collect_term_vars(*t.a, out);
            collect_term_vars(*t.b, out);
            break;
        case Term::Kind::Mul: collect_term_vars(*t.a, out); break;
    }
}

void collect_free(const Formula& f, std::set<std::string>& bound,
                  std::set<std::string>& out) {
    auto add_term = [&](const TermPtr& t) {
        if (!t) return;
        std::set<std::string> vars;
        collect_term_vars(*t, vars);
        for (const auto& v : vars)
            if (!bound.contains(v)) out.insert(v);
    };
    switch (f.kind) {
        case Formula::Kind::Compare:
        case Formula::Kind::SeqCmp:
            add_term(f.t1);
            add_term(f.t2);
            break;
        case Formula::Kind::Call:
            for (const auto& a : f.args) add_term(a);
            break;
        case Formula::Kind::Not: collect_free(*f.a, bound, out); break;
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
        case Formula::Kind::Iff:
            collect_free(*f.a, bound, out);
            collect_free(*f.b, bound, out);
            break;
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
            for (const auto& v : f.bound) bound.insert(v);
            collect_free(*f.body, bound, out);
            for (const auto& v : f.bound) bound.erase(v);
            break;
        }
    }
}

const char* rel_text(CmpRel r) {
    switch (r) {
        case CmpRel::Eq: return "=";
        case CmpRel::Ne: return "!=";
        case CmpRel::Lt: return "<";
        case CmpRel::Le: return "<=";
        case CmpRel::Gt: return ">";
        case CmpRel::Ge: return ">=";
    }
    return "?";
}

}  // namespace

std::set<std::string> term_variables(const Term& t) {
    std::set<std::string> out;
    collect_term_vars(t, out);
    return out;
}

std::set<std::string> free_variables(const Formula& f) {
    std::set<std::string> bound, out;
    collect_free(f, bound, out);
    return out;
}

std::string to_string(const Term& t) {
    switch (t.kind) {
        case Term::Kind::Var: return t.var;
        case Term::Kind::Const: return std::to_string(t.value);
        case Term::Kind::Sum: return to_string(*t.a) + "+" + to_string(*t.b);
        case Term::Kind::Diff: return to_string(*t.a) + "-" + to_string(*t.b);
        case Term::Kind::Mul:
            return std::to_string(t.coeff) + "*" + to_string(*t.a);
    }
    return "?";
}

std::string to_string(const Formula& f) {
    std::ostringstream os;
    switch (f.kind) {
        case Formula::Kind::Compare:
            os << to_string(*f.t1) << rel_text(f.rel) << to_string(*f.t2);
            break;
        case Formula::Kind::SeqCmp:
            os << f.seq1 << "[" << to_string(*f.t1) << "]" << rel_text(f.rel);
            if (f.seq2.empty())
                os << "@" << f.out_literal;
            else
                os << f.seq2 << "[" << to_string(*f.t2) << "]";
            break;
        case Formula::Kind::Call: {
            os << "$" << f.call_name << "(";
            for (std::size_t i = 0; i < f.args.size(); ++i) {
                if (i) os << ",";
                os << to_string(*f.args[i]);
            }
            os << ")";
            break;
        }
        case Formula::Kind::Not: os << "~(" << to_string(*f.a) << ")"; break;
        case Formula::Kind::And:
            os << "(" << to_string(*f.a) << ") & (" << to_string(*f.b) << ")";
            break;
        case Formula::Kind::Or:
            os << "(" << to_string(*f.a) << ") | (" << to_string(*f.b) << ")";
            break;
        case Formula::Kind::Implies:
            os << "(" << to_string(*f.a) << ") => (" << to_string(*f.b) << ")";
            break;
        case Formula::Kind::Iff:
            os << "(" << to_string(*f.a) << ") <=> (" << to_string(*f.b) << ")";
            break;
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
            os << (f.kind == Formula::Kind::Exists ? "E" : "A");
            for (std::size_t i = 0; i < f.bound.size(); ++i) {
                if (i) os << ",";
                os << f.bound[i];
            }
            os << " (" << to_string(*f.body) << ")";
            break;
        }
    }
    return os.str();
}

bool equal(const Term& a, const Term& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Term::Kind::Var: return a.var == b.var;
        case Term::Kind::Const: return a.value == b.value;
        case Term::Kind::Sum:
        case Term::Kind::Diff:
            return equal(*a.a, *b.a) && equal(*a.b, *b.b);
        case Term::Kind::Mul: return a.coeff == b.coeff && equal(*a.a, *b.a);
    }
    return false;
}

bool equal(const Formula& a, const Formula& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Formula::Kind::Compare:
            return a.rel == b.rel && equal(*a.t1, *b.t1) && equal(*a.t2, *b.t2);
        case Formula::Kind::SeqCmp:
            if (a.rel != b.rel || a.seq1 != b.seq1 || a.seq2 != b.seq2)
                return false;
            if (!equal(*a.t1, *b.t1)) return false;
            if (a.seq2.empty()) return a.out_literal == b.out_literal;
            return equal(*a.t2, *b.t2);
        case Formula::Kind::Call: {
            if (a.call_name != b.call_name || a.args.size() != b.args.size())
                return false;
            for (std::size_t i = 0; i < a.args.size(); ++i)
                if (!equal(*a.args[i], *b.args[i])) return false;
            return true;
        }
        case Formula::Kind::Not: return equal(*a.a, *b.a);
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
        case Formula::Kind::Iff:
            return equal(*a.a, *b.a) && equal(*a.b, *b.b);
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
            return a.bound == b.bound && equal(*a.body, *b.body);
    }
    return false;
}

}  // namespace ctseq
