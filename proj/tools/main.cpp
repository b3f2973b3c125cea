// ctseq command-line tool: synthesize sequence automata, run query
// scripts, execute the named checks, and dump oracle values.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctseq/automaton_io.hpp"
#include "ctseq/checks.hpp"
#include "ctseq/registry.hpp"
#include "ctseq/session.hpp"
#include "ctseq/synthesis.hpp"

namespace {

using ctseq::SeqKind;

int cmd_synth(const std::string& seq, std::uint32_t mod,
              const std::string& out, const std::string& dot,
              std::uint32_t limit) {
    const SeqKind kind = ctseq::seq_kind_from_name(seq);
    const ctseq::Dfao a = ctseq::synth_dfao(ctseq::builtin_ctspec(kind, mod), limit);
    ctseq::save_automaton(a, out);
    if (!dot.empty()) ctseq::export_dot(a, dot);
    std::cout << seq << " mod " << mod << ": " << a.num_states()
              << " states, written to " << out << "\n";
    return 0;
}

int cmd_query(const std::string& file, const std::string& registry_dir,
              const std::string& cache_dir) {
    std::ifstream f(file, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open " << file << "\n";
        return 2;
    }
    std::ostringstream buf;
    buf << f.rdbuf();

    ctseq::Session ses = ctseq::make_builtin_session(cache_dir);
    if (!registry_dir.empty()) {
        for (const auto& entry :
             std::filesystem::directory_iterator(registry_dir)) {
            if (entry.path().extension() != ".aut") continue;
            ctseq::LoadedAutomaton la = ctseq::load_automaton(entry.path().string());
            const std::string name = entry.path().stem().string();
            if (std::holds_alternative<ctseq::Dfao>(la))
                ses.register_sequence(name, std::get<ctseq::Dfao>(std::move(la)));
            else
                ses.register_predicate(
                    name,
                    ctseq::Predicate{std::get<ctseq::MultiDfa>(la).tracks,
                                     std::get<ctseq::MultiDfa>(std::move(la))});
        }
    }

    const auto verdicts = ctseq::run_script(buf.str(), ses);
    const std::filesystem::path beside = std::filesystem::path(file).parent_path();
    for (const auto& v : verdicts) {
        std::cout << v.name << ": " << v.text() << "\n";
        if (v.kind == ctseq::Verdict::Kind::Automaton) {
            const auto path = beside / (v.name + ".aut");
            ctseq::save_automaton(v.automaton, path.string());
        }
    }
    return 0;
}

int cmd_check(bool all, std::vector<std::string> names, bool json) {
    if (all || names.empty()) names = ctseq::list_checks();
    bool ok = true;
    nlohmann::json out = nlohmann::json::array();
    for (const auto& name : names) {
        const ctseq::CheckResult r = ctseq::run_check(name);
        ok = ok && r.pass;
        if (json) {
            nlohmann::json steps = nlohmann::json::array();
            for (const auto& st : r.steps)
                steps.push_back({{"description", st.description},
                                 {"pass", st.pass},
                                 {"detail", st.detail}});
            out.push_back({{"name", r.name},
                           {"pass", r.pass},
                           {"seconds", r.seconds},
                           {"steps", steps}});
        } else {
            std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << "\n";
            for (const auto& st : r.steps) {
                std::cout << "  " << (st.pass ? "ok " : "FAIL ") << st.description;
                if (!st.pass && !st.detail.empty()) std::cout << " [" << st.detail << "]";
                std::cout << "\n";
            }
        }
    }
    if (json) std::cout << out.dump(2) << "\n";
    return ok ? 0 : 1;
}

int cmd_oracle(const std::string& seq, std::uint32_t mod, std::size_t count) {
    const SeqKind kind = ctseq::seq_kind_from_name(seq);
    const ctseq::OracleTable t = ctseq::oracle_table(kind, count, mod);
    for (std::size_t n = 0; n < t.values.size(); ++n)
        std::cout << (n ? " " : "") << static_cast<unsigned>(t.values[n]);
    std::cout << "\n";
    return 0;
}

int cmd_xcheck(const std::string& seq, std::uint32_t mod, std::size_t count) {
    const SeqKind kind = ctseq::seq_kind_from_name(seq);
    const ctseq::XcheckReport r = ctseq::xcheck(kind, mod, count);
    if (r.ok) {
        std::cout << "xcheck " << seq << " mod " << mod << ": OK for n < "
                  << count << " (" << r.automaton_states << " states)\n";
        return 0;
    }
    std::cout << "xcheck " << seq << " mod " << mod << ": MISMATCH at n="
              << r.first_mismatch << " automaton=" << r.automaton_value
              << " oracle=" << r.oracle_value << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constant-term sequence automata toolkit"};
    app.require_subcommand(1);

    std::string seq, out, dot, file, registry_dir, cache_dir = ".ctseq";
    std::uint32_t mod = 0, limit = 1000000;
    std::size_t count = 0;
    bool all = false, json = false;
    std::vector<std::string> names;

    auto* synth = app.add_subcommand("synth", "synthesize a sequence automaton");
    synth->add_option("--seq", seq, "catalan|motzkin|trinomial")->required();
    synth->add_option("--mod", mod, "prime modulus (also the digit base)")->required();
    synth->add_option("--out", out, "output automaton file")->required();
    synth->add_option("--dot", dot, "also write a dot rendering");
    synth->add_option("--limit", limit, "state limit for the closure");

    auto* query = app.add_subcommand("query", "run a query script");
    query->add_option("--file", file, "script file")->required();
    query->add_option("--registry", registry_dir,
                      "directory of extra .aut files to preload");
    query->add_option("--cache", cache_dir, "automaton cache directory");

    auto* check = app.add_subcommand("check", "run named checks");
    check->add_flag("--all", all, "run every check");
    check->add_flag("--json", json, "JSON output");
    check->add_option("names", names, "check names (see --all)");

    auto* oracle = app.add_subcommand("oracle", "print oracle values");
    oracle->add_option("--seq", seq, "catalan|motzkin|trinomial")->required();
    oracle->add_option("--mod", mod, "modulus")->required();
    oracle->add_option("--count", count, "how many values")->required();

    auto* xchk = app.add_subcommand("xcheck", "automaton vs oracle");
    xchk->add_option("--seq", seq, "catalan|motzkin|trinomial")->required();
    xchk->add_option("--mod", mod, "prime modulus")->required();
    xchk->add_option("--count", count, "values to compare")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (synth->parsed()) return cmd_synth(seq, mod, out, dot, limit);
        if (query->parsed()) return cmd_query(file, registry_dir, cache_dir);
        if (check->parsed()) return cmd_check(all, names, json);
        if (oracle->parsed()) return cmd_oracle(seq, mod, count);
        if (xchk->parsed()) return cmd_xcheck(seq, mod, count);
    } catch (const ctseq::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
