#include "ctseq/session.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctseq {

void Session::register_sequence(const std::string& name, Dfao a) {
    if (sequences_.contains(name))
        throw std::invalid_argument("sequence '" + name + "' already registered");
    sequences_.emplace(name, std::move(a));
}

const Dfao* Session::find_sequence(const std::string& name) const {
    auto it = sequences_.find(name);
    return it == sequences_.end() ? nullptr : &it->second;
}

void Session::register_predicate(const std::string& name, Predicate p) {
    predicates_[name] = std::move(p);
}

const Predicate* Session::find_predicate(const std::string& name) const {
    auto it = predicates_.find(name);
    return it == predicates_.end() ? nullptr : &it->second;
}

std::string Verdict::text() const {
    switch (kind) {
        case Kind::True: return "TRUE";
        case Kind::False: return "FALSE";
        case Kind::Automaton:
            return "automaton(" + std::to_string(automaton.tracks.size()) +
                   " tracks, " + std::to_string(automaton.num_states()) +
                   " states)";
    }
    return "?";
}

namespace {

// Linear combination over variables plus a constant.
struct LinComb {
    std::map<std::string, std::int64_t> coeffs;
    std::int64_t constant = 0;

    void add(const LinComb& o, std::int64_t scale) {
        for (const auto& [v, c] : o.coeffs) coeffs[v] += scale * c;
        constant += scale * o.constant;
    }
    bool constant_only() const {
        for (const auto& [v, c] : coeffs)
            if (c != 0) return false;
        return true;
    }
};

// A term normalized to a linear combination plus monus side conditions:
// each entry of `constraints` is a linear combination required to be 0,
// and `fresh` lists the existential witnesses to project away.
struct NormTerm {
    LinComb lin;
    std::vector<LinComb> constraints;
    std::vector<std::string> fresh;
};

class Compiler {
  public:
    Compiler(std::uint32_t base, const Session& session)
        : base_(base), session_(session) {}

    MultiDfa run(const Formula& f) {
        MultiDfa a = compile_formula(f);
        // Keep vanished free variables as tracks (x = x loses x in the
        // linear form but the contract exposes it).
        std::vector<std::string> missing;
        for (const auto& v : free_variables(f))
            if (std::find(a.tracks.begin(), a.tracks.end(), v) == a.tracks.end())
                missing.push_back(v);
        if (!missing.empty())
            a = product(a, mdfa_const(base_, missing, true), BoolOp::And);
        return sort_tracks(a);
    }

  private:
    std::string fresh_var() { return "#z" + std::to_string(counter_++); }

    NormTerm normalize(const Term& t) {
        NormTerm n;
        switch (t.kind) {
            case Term::Kind::Var: n.lin.coeffs[t.var] = 1; break;
            case Term::Kind::Const:
                n.lin.constant = static_cast<std::int64_t>(t.value);
                break;
            case Term::Kind::Sum: {
                n = normalize(*t.a);
                NormTerm nb = normalize(*t.b);
                n.lin.add(nb.lin, 1);
                merge_side(n, nb);
                break;
            }
            case Term::Kind::Mul: {
                n = normalize(*t.a);
                const std::int64_t c = static_cast<std::int64_t>(t.coeff);
                for (auto& [v, w] : n.lin.coeffs) w *= c;
                n.lin.constant *= c;
                break;
            }
            case Term::Kind::Diff: {
                // t = a - b over N: a fresh z with z + b = a carries the
                // value; no z exists when a < b, making the atom false.
                n = normalize(*t.a);
                NormTerm nb = normalize(*t.b);
                const std::string z = fresh_var();
                LinComb side;  // z + b - a = 0
                side.coeffs[z] = 1;
                side.add(nb.lin, 1);
                side.add(n.lin, -1);
                NormTerm out;
                out.lin.coeffs[z] = 1;
                out.constraints = std::move(n.constraints);
                merge_side(out, nb);
                out.constraints.push_back(std::move(side));
                out.fresh = std::move(n.fresh);
                for (auto& f : nb.fresh) out.fresh.push_back(std::move(f));
                out.fresh.push_back(z);
                n = std::move(out);
                break;
            }
        }
        return n;
    }

    static void merge_side(NormTerm& into, NormTerm& from) {
        for (auto& c : from.constraints) into.constraints.push_back(std::move(c));
        for (auto& f : from.fresh) into.fresh.push_back(std::move(f));
    }

    MultiDfa lin_to_dfa(const LinComb& lc, LinRel rel) const {
        if (lc.constant_only()) {
            const bool truth = rel == LinRel::Eq ? lc.constant == 0
                                                 : lc.constant <= 0;
            std::vector<std::string> tracks;
            for (const auto& [v, c] : lc.coeffs) tracks.push_back(v);
            return mdfa_const(base_, std::move(tracks), truth);
        }
        return linear_automaton(base_, lc.coeffs, lc.constant, rel);
    }

    /// Conjoins monus side conditions and projects the fresh witnesses.
    MultiDfa finish_atom(MultiDfa atom, const NormTerm& n) const {
        for (const auto& side : n.constraints)
            atom = product(atom, lin_to_dfa(side, LinRel::Eq), BoolOp::And);
        for (const auto& z : n.fresh)
            if (std::find(atom.tracks.begin(), atom.tracks.end(), z) !=
                atom.tracks.end())
                atom = project(atom, z);
        return atom;
    }

    MultiDfa compile_compare(const Formula& f) {
        NormTerm n1 = normalize(*f.t1);
        NormTerm n2 = normalize(*f.t2);
        LinComb d = n1.lin;  // t1 - t2
        d.add(n2.lin, -1);
        MultiDfa atom = [&] {
            switch (f.rel) {
                case CmpRel::Eq: return lin_to_dfa(d, LinRel::Eq);
                case CmpRel::Ne: return complement(lin_to_dfa(d, LinRel::Eq));
                case CmpRel::Le: return lin_to_dfa(d, LinRel::Le);
                case CmpRel::Lt: {
                    LinComb e = d;
                    e.constant += 1;
                    return lin_to_dfa(e, LinRel::Le);
                }
                case CmpRel::Ge: {
                    LinComb e;
                    e.add(d, -1);
                    return lin_to_dfa(e, LinRel::Le);
                }
                case CmpRel::Gt: {
                    LinComb e;
                    e.add(d, -1);
                    e.constant += 1;
                    return lin_to_dfa(e, LinRel::Le);
                }
            }
            throw std::logic_error("bad relation");
        }();
        NormTerm sides;
        sides.constraints = std::move(n1.constraints);
        for (auto& c : n2.constraints) sides.constraints.push_back(std::move(c));
        sides.fresh = std::move(n1.fresh);
        for (auto& z : n2.fresh) sides.fresh.push_back(std::move(z));
        return finish_atom(std::move(atom), sides);
    }

    const Dfao& lookup_sequence(const std::string& name) const {
        const Dfao* d = session_.find_sequence(name);
        if (!d) throw std::invalid_argument("unknown sequence '" + name + "'");
        if (d->base != base_)
            throw std::invalid_argument("sequence '" + name + "' has base " +
                                        std::to_string(d->base) +
                                        ", formula uses base " +
                                        std::to_string(base_));
        return *d;
    }

    /// Membership automaton for "seq at index = value of track u".
    MultiDfa indexed_slice(const Dfao& seq, std::uint32_t v,
                           const std::string& u, const NormTerm& index) const {
        MultiDfa atom = dfao_slice(seq, v, u);
        LinComb eq;  // u - index = 0
        eq.coeffs[u] = 1;
        eq.add(index.lin, -1);
        return product(atom, lin_to_dfa(eq, LinRel::Eq), BoolOp::And);
    }

    MultiDfa compile_seqcmp(const Formula& f) {
        const Dfao& s1 = lookup_sequence(f.seq1);
        NormTerm n1 = normalize(*f.t1);
        if (f.seq2.empty()) {
            if (f.out_literal >= s1.modulus)
                throw std::invalid_argument(
                    "output literal @" + std::to_string(f.out_literal) +
                    " out of range for sequence '" + f.seq1 + "' (modulus " +
                    std::to_string(s1.modulus) + ")");
            const std::string u = fresh_var();
            MultiDfa atom = indexed_slice(
                s1, static_cast<std::uint32_t>(f.out_literal), u, n1);
            if (f.rel == CmpRel::Ne) {
                // Complement only the value test, keeping the index
                // definedness condition: build union of the other slices.
                MultiDfa other = mdfa_const(base_, {u}, false);
                for (std::uint32_t v = 0; v < s1.modulus; ++v) {
                    if (v == f.out_literal) continue;
                    other = product(other, dfao_slice(s1, v, u), BoolOp::Or);
                }
                LinComb eq;
                eq.coeffs[u] = 1;
                eq.add(n1.lin, -1);
                atom = product(other, lin_to_dfa(eq, LinRel::Eq), BoolOp::And);
            }
            n1.fresh.push_back(u);
            return finish_atom(std::move(atom), n1);
        }
        // X[e1] rel Y[e2]
        const Dfao& s2 = lookup_sequence(f.seq2);
        NormTerm n2 = normalize(*f.t2);
        const std::string u1 = fresh_var(), u2 = fresh_var();
        // Pointwise equality of the two outputs as a relation on (u1, u2).
        MultiDfa same = mdfa_const(base_, {u1, u2}, false);
        for (std::uint32_t v = 0; v < std::min(s1.modulus, s2.modulus); ++v)
            same = product(
                same,
                product(dfao_slice(s1, v, u1), dfao_slice(s2, v, u2), BoolOp::And),
                BoolOp::Or);
        if (f.rel == CmpRel::Ne) same = complement(same);
        LinComb eq1, eq2;
        eq1.coeffs[u1] = 1;
        eq1.add(n1.lin, -1);
        eq2.coeffs[u2] = 1;
        eq2.add(n2.lin, -1);
        MultiDfa atom = product(same, lin_to_dfa(eq1, LinRel::Eq), BoolOp::And);
        atom = product(atom, lin_to_dfa(eq2, LinRel::Eq), BoolOp::And);
        NormTerm sides;
        sides.constraints = std::move(n1.constraints);
        for (auto& c : n2.constraints) sides.constraints.push_back(std::move(c));
        sides.fresh = std::move(n1.fresh);
        for (auto& z : n2.fresh) sides.fresh.push_back(std::move(z));
        sides.fresh.push_back(u1);
        sides.fresh.push_back(u2);
        return finish_atom(std::move(atom), sides);
    }

    MultiDfa compile_call(const Formula& f) {
        const Predicate* p = session_.find_predicate(f.call_name);
        if (!p)
            throw std::invalid_argument("unknown predicate '$" + f.call_name + "'");
        if (p->params.size() != f.args.size())
            throw std::invalid_argument(
                "predicate '$" + f.call_name + "' expects " +
                std::to_string(p->params.size()) + " arguments, got " +
                std::to_string(f.args.size()));
        if (!p->params.empty() && p->automaton.base != base_)
            throw std::invalid_argument("predicate '$" + f.call_name +
                                        "' has base " +
                                        std::to_string(p->automaton.base) +
                                        ", formula uses base " +
                                        std::to_string(base_));
        // Rename parameters to fresh names, pin each to its argument term,
        // then project the fresh names away.
        std::map<std::string, std::string> renames;
        std::vector<std::string> fresh_params;
        for (const auto& param : p->params) {
            fresh_params.push_back(fresh_var());
            renames[param] = fresh_params.back();
        }
        MultiDfa atom = rename_tracks(p->automaton, renames);
        NormTerm sides;
        for (std::size_t i = 0; i < f.args.size(); ++i) {
            NormTerm ni = normalize(*f.args[i]);
            LinComb eq;
            eq.coeffs[fresh_params[i]] = 1;
            eq.add(ni.lin, -1);
            atom = product(atom, lin_to_dfa(eq, LinRel::Eq), BoolOp::And);
            for (auto& c : ni.constraints)
                sides.constraints.push_back(std::move(c));
            for (auto& z : ni.fresh) sides.fresh.push_back(std::move(z));
        }
        for (const auto& u : fresh_params) sides.fresh.push_back(u);
        return finish_atom(std::move(atom), sides);
    }

    MultiDfa compile_formula(const Formula& f) {
        switch (f.kind) {
            case Formula::Kind::Compare: return compile_compare(f);
            case Formula::Kind::SeqCmp: return compile_seqcmp(f);
            case Formula::Kind::Call: return compile_call(f);
            case Formula::Kind::Not: return complement(compile_formula(*f.a));
            case Formula::Kind::And:
                return product(compile_formula(*f.a), compile_formula(*f.b),
                               BoolOp::And);
            case Formula::Kind::Or:
                return product(compile_formula(*f.a), compile_formula(*f.b),
                               BoolOp::Or);
            case Formula::Kind::Implies:
                return product(complement(compile_formula(*f.a)),
                               compile_formula(*f.b), BoolOp::Or);
            case Formula::Kind::Iff:
                return complement(product(compile_formula(*f.a),
                                          compile_formula(*f.b), BoolOp::Xor));
            case Formula::Kind::Exists: {
                MultiDfa a = compile_formula(*f.body);
                for (const auto& v : f.bound)
                    if (std::find(a.tracks.begin(), a.tracks.end(), v) !=
                        a.tracks.end())
                        a = project(a, v);
                return a;
            }
            case Formula::Kind::Forall: {
                MultiDfa a = complement(compile_formula(*f.body));
                for (const auto& v : f.bound)
                    if (std::find(a.tracks.begin(), a.tracks.end(), v) !=
                        a.tracks.end())
                        a = project(a, v);
                return complement(a);
            }
        }
        throw std::logic_error("bad formula kind");
    }

    std::uint32_t base_;
    const Session& session_;
    std::uint64_t counter_ = 0;
};

}  // namespace

MultiDfa compile(const Formula& f, std::uint32_t base, const Session& s) {
    return Compiler(base, s).run(f);
}

Verdict eval_command(const Command& cmd, Session& s) {
    MultiDfa a = compile(*cmd.formula, cmd.base, s);
    s.register_predicate(cmd.name, Predicate{a.tracks, a});
    Verdict v;
    v.name = cmd.name;
    if (a.tracks.empty())
        v.kind = a.is_true() ? Verdict::Kind::True : Verdict::Kind::False;
    else
        v.kind = Verdict::Kind::Automaton;
    v.automaton = std::move(a);
    return v;
}

std::vector<Verdict> run_script(std::string_view src, Session& s) {
    const std::vector<Command> commands = parse_script(src);
    std::vector<Verdict> out;
    out.reserve(commands.size());
    for (const Command& cmd : commands) {
        try {
            out.push_back(eval_command(cmd, s));
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw std::runtime_error("command '" + cmd.name + "' (line " +
                                     std::to_string(cmd.line) +
                                     "): " + e.what());
        }
    }
    return out;
}

}  // namespace ctseq
