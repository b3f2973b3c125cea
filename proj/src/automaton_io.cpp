#include "ctseq/automaton_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ctseq {

namespace {

void emit_transitions(std::ostringstream& os, std::uint32_t states,
                      std::uint32_t symbols, std::uint32_t base,
                      std::size_t ntracks,
                      const std::vector<std::uint32_t>& delta) {
    for (std::uint32_t s = 0; s < states; ++s)
        for (std::uint32_t sym = 0; sym < symbols; ++sym) {
            os << "t " << s << " ";
            if (ntracks == 0) {
                os << "-";
            } else {
                const auto dig = decode_tuple(base, ntracks, sym);
                for (std::size_t i = 0; i < dig.size(); ++i) {
                    if (i) os << ",";
                    os << dig[i];
                }
            }
            os << " " << delta[static_cast<std::size_t>(s) * symbols + sym]
               << "\n";
        }
}

void write_file(const std::string& text, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
    if (!f) throw std::runtime_error("write failed: " + path);
}

struct LineReader {
    std::istringstream in;
    int line_no = 0;

    explicit LineReader(const std::string& text) : in(text) {}

    /// Next meaningful line split into fields, or empty at EOF.
    std::vector<std::string> next() {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            const std::size_t hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            std::istringstream ls(line);
            std::vector<std::string> fields;
            std::string w;
            while (ls >> w) fields.push_back(w);
            if (!fields.empty()) return fields;
        }
        return {};
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::runtime_error("automaton file, line " +
                                 std::to_string(line_no) + ": " + msg);
    }
};

std::uint64_t parse_num(LineReader& r, const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        r.fail("expected a number, got '" + s + "'");
    return std::stoull(s);
}

}  // namespace

std::string emit_automaton(const Dfao& a) {
    std::ostringstream os;
    os << "ctaut 1\n";
    os << "base " << a.base << " kind dfao mod " << a.modulus << " tracks -\n";
    os << "states " << a.num_states() << " initial " << a.initial << "\n";
    for (std::uint32_t s = 0; s < a.num_states(); ++s)
        os << "s " << s << " out " << a.out[s] << "\n";
    for (std::uint32_t s = 0; s < a.num_states(); ++s)
        for (std::uint32_t d = 0; d < a.base; ++d)
            os << "t " << s << " " << d << " " << a.next(s, d) << "\n";
    return os.str();
}

std::string emit_automaton(const MultiDfa& a) {
    std::ostringstream os;
    os << "ctaut 1\n";
    os << "base " << a.base << " kind dfa tracks ";
    if (a.tracks.empty()) {
        os << "-";
    } else {
        for (std::size_t i = 0; i < a.tracks.size(); ++i) {
            if (i) os << ",";
            os << a.tracks[i];
        }
    }
    os << "\n";
    os << "states " << a.num_states() << " initial " << a.initial << "\n";
    for (std::uint32_t s = 0; s < a.num_states(); ++s)
        os << "s " << s << " " << (a.accepting[s] ? "accept" : "reject") << "\n";
    emit_transitions(os, a.num_states(), a.symbol_count(), a.base,
                     a.tracks.size(), a.delta);
    return os.str();
}

void save_automaton(const Dfao& a, const std::string& path) {
    write_file(emit_automaton(a), path);
}

void save_automaton(const MultiDfa& a, const std::string& path) {
    write_file(emit_automaton(a), path);
}

LoadedAutomaton parse_automaton(const std::string& text) {
    LineReader r(text);

    auto header = r.next();
    if (header.size() != 2 || header[0] != "ctaut" || header[1] != "1")
        r.fail("expected header 'ctaut 1'");

    auto meta = r.next();
    if (meta.empty() || meta[0] != "base") r.fail("expected 'base ...' line");
    std::size_t i = 1;
    if (i >= meta.size()) r.fail("missing base value");
    const std::uint32_t base = static_cast<std::uint32_t>(parse_num(r, meta[i++]));
    if (i + 1 >= meta.size() || meta[i] != "kind") r.fail("missing 'kind'");
    ++i;
    const std::string kind = meta[i++];
    if (kind != "dfa" && kind != "dfao") r.fail("kind must be dfa or dfao");
    std::uint32_t mod = 0;
    if (kind == "dfao") {
        if (i + 1 >= meta.size() || meta[i] != "mod")
            r.fail("dfao requires 'mod <m>'");
        ++i;
        mod = static_cast<std::uint32_t>(parse_num(r, meta[i++]));
    }
    if (i + 1 >= meta.size() || meta[i] != "tracks") r.fail("missing 'tracks'");
    ++i;
    std::vector<std::string> tracks;
    if (meta[i] != "-") {
        std::istringstream ts(meta[i]);
        std::string name;
        while (std::getline(ts, name, ',')) {
            if (name.empty()) r.fail("empty track name");
            tracks.push_back(name);
        }
    }
    ++i;
    if (i != meta.size()) r.fail("trailing fields on base line");
    if (kind == "dfao" && !tracks.empty())
        r.fail("a dfao has no named tracks");

    auto counts = r.next();
    if (counts.size() != 4 || counts[0] != "states" || counts[2] != "initial")
        r.fail("expected 'states <N> initial <q>'");
    const std::uint32_t nstates = static_cast<std::uint32_t>(parse_num(r, counts[1]));
    const std::uint32_t initial = static_cast<std::uint32_t>(parse_num(r, counts[3]));
    if (nstates == 0) r.fail("automaton needs at least one state");

    const std::size_t ntracks = tracks.size();
    std::uint64_t symbols = 1;
    if (kind == "dfao") {
        symbols = base;
    } else {
        for (std::size_t t = 0; t < ntracks; ++t) symbols *= base;
    }

    std::vector<int> outs(nstates, -1);
    std::vector<std::uint32_t> delta(nstates * symbols, 0);
    std::vector<char> have(nstates * symbols, 0);

    std::size_t state_lines = 0, trans_lines = 0;
    for (;;) {
        auto f = r.next();
        if (f.empty()) break;
        if (f[0] == "s") {
            if (f.size() < 3) r.fail("malformed state line");
            const std::uint64_t id = parse_num(r, f[1]);
            if (id >= nstates) r.fail("state id out of range");
            if (outs[id] != -1) r.fail("duplicate state line");
            if (kind == "dfao") {
                if (f.size() != 4 || f[2] != "out")
                    r.fail("dfao state line needs 'out <v>'");
                const std::uint64_t v = parse_num(r, f[3]);
                if (v >= mod) r.fail("output out of range");
                outs[id] = static_cast<int>(v);
            } else {
                if (f.size() != 3 || (f[2] != "accept" && f[2] != "reject"))
                    r.fail("dfa state line needs accept|reject");
                outs[id] = f[2] == "accept" ? 1 : 0;
            }
            ++state_lines;
        } else if (f[0] == "t") {
            if (f.size() != 4) r.fail("malformed transition line");
            const std::uint64_t from = parse_num(r, f[1]);
            const std::uint64_t to = parse_num(r, f[3]);
            if (from >= nstates || to >= nstates)
                r.fail("transition state out of range");
            std::uint64_t sym = 0;
            if (f[2] == "-") {
                if (kind == "dfao" || ntracks != 0)
                    r.fail("'-' tuple only valid for zero tracks");
            } else {
                std::istringstream ds(f[2]);
                std::string d;
                std::size_t count = 0;
                while (std::getline(ds, d, ',')) {
                    const std::uint64_t dv = parse_num(r, d);
                    if (dv >= base) r.fail("digit out of range");
                    sym = sym * base + dv;
                    ++count;
                }
                const std::size_t want = kind == "dfao" ? 1 : ntracks;
                if (count != want) r.fail("wrong tuple width");
            }
            const std::size_t idx = from * symbols + sym;
            if (have[idx]) r.fail("duplicate transition");
            have[idx] = 1;
            delta[idx] = static_cast<std::uint32_t>(to);
            ++trans_lines;
        } else {
            r.fail("unknown record '" + f[0] + "'");
        }
    }
    if (state_lines != nstates) r.fail("missing state lines");
    if (trans_lines != nstates * symbols)
        r.fail("transition table is not total");
    if (initial >= nstates) r.fail("initial state out of range");

    if (kind == "dfao") {
        Dfao a;
        a.base = base;
        a.modulus = mod;
        a.initial = initial;
        a.out.assign(outs.begin(), outs.end());
        a.delta = std::move(delta);
        a.validate();
        return a;
    }
    MultiDfa a;
    a.base = base;
    a.tracks = std::move(tracks);
    a.initial = initial;
    a.accepting.assign(outs.begin(), outs.end());
    a.delta = std::move(delta);
    a.validate();
    return a;
}

LoadedAutomaton load_automaton(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    try {
        return parse_automaton(buf.str());
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

namespace {

std::string dot_prologue() {
    return "digraph automaton {\n"
           "  rankdir=LR;\n"
           "  label=\"input read lsd-first\";\n"
           "  start [shape=point];\n";
}

}  // namespace

std::string to_dot(const Dfao& a) {
    std::ostringstream os;
    os << dot_prologue();
    os << "  start -> q" << a.initial << ";\n";
    for (std::uint32_t s = 0; s < a.num_states(); ++s)
        os << "  q" << s << " [shape=circle,label=\"" << s << "/" << a.out[s]
           << "\"];\n";
    for (std::uint32_t s = 0; s < a.num_states(); ++s)
        for (std::uint32_t d = 0; d < a.base; ++d)
            os << "  q" << s << " -> q" << a.next(s, d) << " [label=\"" << d
               << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const MultiDfa& a) {
    std::ostringstream os;
    const std::uint32_t sc = a.symbol_count();
    os << dot_prologue();
    os << "  start -> q" << a.initial << ";\n";
    for (std::uint32_t s = 0; s < a.num_states(); ++s)
        os << "  q" << s << " [shape="
           << (a.accepting[s] ? "doublecircle" : "circle") << ",label=\"" << s
           << "\"];\n";
    for (std::uint32_t s = 0; s < a.num_states(); ++s)
        for (std::uint32_t sym = 0; sym < sc; ++sym) {
            os << "  q" << s << " -> q" << a.next(s, sym) << " [label=\"";
            if (a.tracks.empty()) {
                os << "-";
            } else {
                const auto dig = decode_tuple(a.base, a.tracks.size(), sym);
                for (std::size_t i = 0; i < dig.size(); ++i) {
                    if (i) os << ",";
                    os << dig[i];
                }
            }
            os << "\"];\n";
        }
    os << "}\n";
    return os.str();
}

void export_dot(const Dfao& a, const std::string& path) {
    write_file(to_dot(a), path);
}

void export_dot(const MultiDfa& a, const std::string& path) {
    write_file(to_dot(a), path);
}

}  // namespace ctseq
