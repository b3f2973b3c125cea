#include "ctseq/registry.hpp"

#include <filesystem>
#include <mutex>
#include <stdexcept>

#include "ctseq/automaton_io.hpp"
#include "ctseq/synthesis.hpp"

namespace ctseq {

namespace {

constexpr std::size_t kSelfTestCount = 10000;

void self_test(const char* name, const Dfao& a, const OracleTable& oracle) {
    for (std::size_t n = 0; n < oracle.values.size(); ++n)
        if (a.value(n) != oracle.values[n])
            throw std::runtime_error(
                std::string("registry self-test failed for ") + name +
                " at n=" + std::to_string(n) + ": automaton " +
                std::to_string(a.value(n)) + ", oracle " +
                std::to_string(oracle.values[n]));
}

void self_test_thue_morse(const Dfao& a) {
    for (std::uint64_t n = 0; n < kSelfTestCount; ++n) {
        const std::uint32_t parity = __builtin_popcountll(n) & 1;
        if (a.value(n) != parity)
            throw std::runtime_error("registry self-test failed for T_lsd at n=" +
                                     std::to_string(n));
    }
}

Dfao synth_builtin(const BuiltinSeq& b) {
    return synth_dfao(builtin_ctspec(b.kind, b.p));
}

Session build(const std::string& cache_dir) {
    Session s;
    {
        Dfao tm = thue_morse_dfao();
        tm.validate();
        self_test_thue_morse(tm);
        s.register_sequence("T_lsd", std::move(tm));
    }
    for (const BuiltinSeq& b : builtin_sequences()) {
        Dfao a;
        bool loaded = false;
        std::filesystem::path file;
        if (!cache_dir.empty()) {
            file = std::filesystem::path(cache_dir) / (std::string(b.name) + ".aut");
            if (std::filesystem::exists(file)) {
                LoadedAutomaton la = load_automaton(file.string());
                if (!std::holds_alternative<Dfao>(la))
                    throw std::runtime_error(file.string() + ": expected a dfao");
                a = std::get<Dfao>(std::move(la));
                loaded = true;
            }
        }
        if (!loaded) a = synth_builtin(b);
        self_test(b.name, a, oracle_table(b.kind, kSelfTestCount, b.p));
        if (!cache_dir.empty() && !loaded) {
            std::filesystem::create_directories(cache_dir);
            save_automaton(a, file.string());
        }
        s.register_sequence(b.name, std::move(a));
    }
    return s;
}

}  // namespace

const std::vector<BuiltinSeq>& builtin_sequences() {
    static const std::vector<BuiltinSeq> kSeqs = {
        {"MOT2", SeqKind::Motzkin, 2},  {"MOT3", SeqKind::Motzkin, 3},
        {"MOT5", SeqKind::Motzkin, 5},  {"TRI3", SeqKind::Trinomial, 3},
        {"TRI5", SeqKind::Trinomial, 5}, {"CAT3", SeqKind::Catalan, 3},
        {"CAT5", SeqKind::Catalan, 5},
    };
    return kSeqs;
}

Session make_builtin_session(const std::string& cache_dir) {
    if (cache_dir.empty()) {
        // The plain registry is immutable; build it once and hand out copies.
        static const Session prototype = build("");
        return prototype;
    }
    return build(cache_dir);
}

}  // namespace ctseq
