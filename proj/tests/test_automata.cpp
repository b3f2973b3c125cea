#include <doctest.h>

#include <random>

#include "ctseq/multidfa.hpp"
#include "ctseq/registry.hpp"
#include "ctseq/sequences.hpp"

using namespace ctseq;

namespace {

MultiDfa evens(std::uint32_t base) {
    // n even: 2m - n = 0 projected over m.
    return project(
        linear_automaton(base, {{"m", 2}, {"n", -1}}, 0, LinRel::Eq), "m");
}

void audit_pad_invariance(const MultiDfa& a) {
    const std::uint32_t sc = a.symbol_count();
    for (std::uint32_t q = 0; q < a.num_states(); ++q)
        CHECK(a.accepting[a.delta[static_cast<std::size_t>(q) * sc]] ==
              a.accepting[q]);
}

}  // namespace

TEST_CASE("dfao_value reads lsd-first digits") {
    const Dfao tm = thue_morse_dfao();
    CHECK(tm.value(0) == 0);
    CHECK(tm.value(3) == 0);
    CHECK(tm.value(4) == 1);
    const Session ses = make_builtin_session();
    CHECK(ses.find_sequence("MOT2")->value(2) == 0);
    CHECK(ses.find_sequence("TRI5")->value(4) == 4);
    CHECK(ses.find_sequence("MOT5")->value(0) ==
          ses.find_sequence("MOT5")->out[ses.find_sequence("MOT5")->initial]);
}

TEST_CASE("dfao_slice basics") {
    const Session ses = make_builtin_session();
    const Dfao& mot2 = *ses.find_sequence("MOT2");
    const MultiDfa s0 = dfao_slice(mot2, 0);
    CHECK(s0.accepts({2}));
    CHECK(s0.accepts({3}));
    CHECK(!s0.accepts({4}));
    audit_pad_invariance(s0);

    // Output values partition N.
    const Dfao& mot5 = *ses.find_sequence("MOT5");
    MultiDfa all = dfao_slice(mot5, 0);
    for (std::uint32_t v = 1; v < 5; ++v)
        all = product(all, dfao_slice(mot5, v), BoolOp::Or);
    CHECK(equivalent(all, mdfa_const(5, {"n"}, true)));
    CHECK(is_empty(product(dfao_slice(mot5, 0), dfao_slice(mot5, 1), BoolOp::And)));

    const Dfao& tri5 = *ses.find_sequence("TRI5");
    CHECK(is_empty(dfao_slice(tri5, 0)));

    CHECK_THROWS_AS(dfao_slice(mot5, 9), std::invalid_argument);
}

TEST_CASE("product and complement") {
    const MultiDfa ev = evens(2);
    const MultiDfa od = complement(ev);
    CHECK(is_empty(product(ev, od, BoolOp::And)));
    CHECK(equivalent(product(ev, od, BoolOp::Or), mdfa_const(2, {"n"}, true)));
    CHECK(equivalent(product(ev, ev, BoolOp::And), ev));
    CHECK(equivalent(complement(od), ev));
    audit_pad_invariance(product(ev, od, BoolOp::Or));
}

TEST_CASE("projection computes existential images") {
    // x + y = 3 projected over y leaves x <= 3.
    const MultiDfa sum3 =
        linear_automaton(2, {{"x", 1}, {"y", 1}}, -3, LinRel::Eq);
    const MultiDfa le3 = project(sum3, "y");
    for (std::uint64_t x = 0; x < 10; ++x)
        CHECK(le3.accepts({x}) == (x <= 3));

    const MultiDfa eq = linear_automaton(3, {{"x", 1}, {"y", -1}}, 0, LinRel::Eq);
    CHECK(equivalent(project(eq, "y"), mdfa_const(3, {"x"}, true)));

    CHECK_THROWS_AS(project(eq, "zzz"), std::invalid_argument);
}

TEST_CASE("linear automata match integer arithmetic") {
    const MultiDfa sum =
        linear_automaton(2, {{"x", 1}, {"y", 1}, {"z", -1}}, 0, LinRel::Eq);
    CHECK(sum.accepts({1, 2, 3}));
    CHECK(!sum.accepts({1, 2, 4}));
    const MultiDfa m4 = linear_automaton(2, {{"i", -4}, {"n", 1}}, 2, LinRel::Eq);
    CHECK(m4.accepts({1, 2}));  // n + 2 = 4i at (i, n) = (1, 2)

    const MultiDfa le = linear_automaton(5, {{"x", 1}, {"y", -1}}, 0, LinRel::Le);
    CHECK(le.accepts({3, 5}));
    CHECK(!le.accepts({5, 3}));

    // Exhaustive window, all relations, random coefficients.
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> cdist(-30, 30);
    for (int iter = 0; iter < 40; ++iter) {
        const std::uint32_t base = iter % 2 ? 2 : 3;
        const std::int64_t a = coef(rng), b = coef(rng), c = cdist(rng);
        const LinRel rel = iter % 3 == 0 ? LinRel::Eq : LinRel::Le;
        const MultiDfa aut =
            linear_automaton(base, {{"x", a}, {"y", b}}, c, rel);
        audit_pad_invariance(aut);
        for (std::int64_t x = 0; x < 40; ++x)
            for (std::int64_t y = 0; y < 40; ++y) {
                const std::int64_t v = a * x + b * y + c;
                const bool want = rel == LinRel::Eq ? v == 0 : v <= 0;
                CHECK(aut.accepts({static_cast<std::uint64_t>(x),
                                   static_cast<std::uint64_t>(y)}) == want);
            }
    }

    CHECK_THROWS_AS(linear_automaton(2, {}, 0, LinRel::Eq),
                    std::invalid_argument);
}

TEST_CASE("equivalence and witnesses") {
    const MultiDfa ev = evens(2);
    CHECK(equivalent(ev, ev));
    CHECK(equivalent(ev, complement(complement(ev))));
    CHECK_THROWS_AS(equivalent(ev, mdfa_const(3, {"n"}, true)),
                    std::invalid_argument);
    CHECK_THROWS_AS(equivalent(ev, mdfa_const(2, {"m"}, true)),
                    std::invalid_argument);

    CHECK(!witness(mdfa_const(2, {"n"}, false)).has_value());
    const Session ses = make_builtin_session();
    const auto w = witness(dfao_slice(*ses.find_sequence("MOT2"), 0));
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<std::uint64_t>{2});  // M_2 is the first even one

    const MultiDfa zero_sum =
        linear_automaton(2, {{"x", 1}, {"y", 1}}, 0, LinRel::Eq);
    const auto wz = witness(zero_sum);
    REQUIRE(wz.has_value());
    CHECK(*wz == std::vector<std::uint64_t>{0, 0});
}

TEST_CASE("enumeration") {
    const Session ses = make_builtin_session();
    const auto evens_mot = enumerate_accepted(
        dfao_slice(*ses.find_sequence("MOT2"), 0), 12);
    std::vector<std::vector<std::uint64_t>> want{{2}, {3}, {10}, {11}};
    CHECK(evens_mot == want);
    CHECK(enumerate_accepted(mdfa_const(2, {"n"}, false), 100).empty());
}

TEST_CASE("minimization properties") {
    const MultiDfa ev = evens(5);
    CHECK(minimize(ev) == ev);

    // No two distinct states of a minimized automaton are equivalent:
    // distinguish every pair by breadth-first search over pairs.
    const Session ses = make_builtin_session();
    const MultiDfa a = dfao_slice(*ses.find_sequence("CAT3"), 0);
    const std::uint32_t n = a.num_states(), sc = a.symbol_count();
    for (std::uint32_t p = 0; p < n; ++p)
        for (std::uint32_t q = p + 1; q < n; ++q) {
            // BFS on the pair graph looking for a distinguishing word.
            std::vector<char> seen(n * n, 0);
            std::vector<std::pair<std::uint32_t, std::uint32_t>> stack{{p, q}};
            bool distinguished = false;
            while (!stack.empty() && !distinguished) {
                auto [s, t] = stack.back();
                stack.pop_back();
                if ((a.accepting[s] != 0) != (a.accepting[t] != 0)) {
                    distinguished = true;
                    break;
                }
                if (seen[s * n + t]) continue;
                seen[s * n + t] = 1;
                for (std::uint32_t c = 0; c < sc; ++c)
                    stack.push_back({a.delta[s * sc + c], a.delta[t * sc + c]});
            }
            CHECK(distinguished);
        }
}

TEST_CASE("zero-track automata denote truth values") {
    const MultiDfa t = mdfa_const(2, {}, true);
    CHECK(t.is_true());
    CHECK(!complement(t).is_true());
    CHECK(equivalent(t, complement(complement(t))));
    const auto w = witness(t);
    REQUIRE(w.has_value());
    CHECK(w->empty());
}

TEST_CASE("set semantics of the boolean algebra against brute force") {
    const Session ses = make_builtin_session();
    const MultiDfa s1 = dfao_slice(*ses.find_sequence("MOT3"), 1, "x");
    const MultiDfa lt = linear_automaton(3, {{"x", 1}, {"y", -1}}, 1, LinRel::Le);
    const MultiDfa both = product(s1, lt, BoolOp::And);
    const MultiDfa either = product(s1, lt, BoolOp::Or);
    const MultiDfa neither = complement(either);
    const MultiDfa ex = project(both, "x");
    const Dfao& mot3 = *ses.find_sequence("MOT3");
    for (std::uint64_t x = 0; x < 64; ++x) {
        bool p = mot3.value(x) == 1;
        for (std::uint64_t y = 0; y < 64; ++y) {
            const bool q = x < y;
            CHECK(both.accepts({x, y}) == (p && q));
            CHECK(either.accepts({x, y}) == (p || q));
            CHECK(neither.accepts({x, y}) == !(p || q));
        }
    }
    for (std::uint64_t y = 0; y < 64; ++y) {
        bool any_x = false;
        for (std::uint64_t x = 0; x < y; ++x)
            if (mot3.value(x) == 1) { any_x = true; break; }
        CHECK(ex.accepts({y}) == any_x);
    }
}
