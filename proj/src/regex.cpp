#include "ctseq/regex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dfa_minimize.hpp"

namespace ctseq {

namespace rx {

namespace {
std::shared_ptr<DigitRegex> node(DigitRegex::Kind kind) {
    auto r = std::make_shared<DigitRegex>();
    r->kind = kind;
    return r;
}
}  // namespace

RegexPtr eps() { return node(DigitRegex::Kind::Epsilon); }

RegexPtr lit(std::uint32_t digit) {
    auto r = std::make_shared<DigitRegex>();
    r->kind = DigitRegex::Kind::Literal;
    r->digit = digit;
    return r;
}

RegexPtr cls(std::vector<std::uint32_t> digits) {
    auto r = std::make_shared<DigitRegex>();
    r->kind = DigitRegex::Kind::Class;
    r->digits = std::move(digits);
    return r;
}

RegexPtr any(std::uint32_t base) {
    std::vector<std::uint32_t> all(base);
    for (std::uint32_t d = 0; d < base; ++d) all[d] = d;
    return cls(std::move(all));
}

RegexPtr cat(RegexPtr a, RegexPtr b) {
    auto r = node(DigitRegex::Kind::Concat);
    r->a = std::move(a);
    r->b = std::move(b);
    return r;
}

RegexPtr cat(std::initializer_list<RegexPtr> parts) {
    RegexPtr r;
    for (const RegexPtr& p : parts) r = r ? cat(r, p) : p;
    if (!r) r = eps();
    return r;
}

RegexPtr alt(RegexPtr a, RegexPtr b) {
    auto r = node(DigitRegex::Kind::Union);
    r->a = std::move(a);
    r->b = std::move(b);
    return r;
}

RegexPtr star(RegexPtr a) {
    auto r = node(DigitRegex::Kind::Star);
    r->a = std::move(a);
    return r;
}

RegexPtr plus(RegexPtr a) {
    auto r = node(DigitRegex::Kind::Plus);
    r->a = std::move(a);
    return r;
}

}  // namespace rx

namespace {

// Thompson NFA over single digits with epsilon edges.
struct ThompsonNfa {
    static constexpr std::uint32_t kEps = 0xffffffffu;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> edges;

    std::uint32_t add_state() {
        edges.emplace_back();
        return static_cast<std::uint32_t>(edges.size() - 1);
    }
    void add_edge(std::uint32_t from, std::uint32_t sym, std::uint32_t to) {
        edges[from].emplace_back(sym, to);
    }
};

struct Fragment {
    std::uint32_t start, accept;
};

Fragment build(ThompsonNfa& nfa, const DigitRegex& r, std::uint32_t base) {
    const std::uint32_t s = nfa.add_state();
    const std::uint32_t t = nfa.add_state();
    switch (r.kind) {
        case DigitRegex::Kind::Epsilon:
            nfa.add_edge(s, ThompsonNfa::kEps, t);
            break;
        case DigitRegex::Kind::Literal:
            if (r.digit >= base)
                throw std::invalid_argument("regex: digit literal >= base");
            nfa.add_edge(s, r.digit, t);
            break;
        case DigitRegex::Kind::Class:
            for (std::uint32_t d : r.digits) {
                if (d >= base)
                    throw std::invalid_argument("regex: class digit >= base");
                nfa.add_edge(s, d, t);
            }
            break;
        case DigitRegex::Kind::Concat: {
            const Fragment fa = build(nfa, *r.a, base);
            const Fragment fb = build(nfa, *r.b, base);
            nfa.add_edge(s, ThompsonNfa::kEps, fa.start);
            nfa.add_edge(fa.accept, ThompsonNfa::kEps, fb.start);
            nfa.add_edge(fb.accept, ThompsonNfa::kEps, t);
            break;
        }
        case DigitRegex::Kind::Union: {
            const Fragment fa = build(nfa, *r.a, base);
            const Fragment fb = build(nfa, *r.b, base);
            nfa.add_edge(s, ThompsonNfa::kEps, fa.start);
            nfa.add_edge(s, ThompsonNfa::kEps, fb.start);
            nfa.add_edge(fa.accept, ThompsonNfa::kEps, t);
            nfa.add_edge(fb.accept, ThompsonNfa::kEps, t);
            break;
        }
        case DigitRegex::Kind::Star: {
            const Fragment fa = build(nfa, *r.a, base);
            nfa.add_edge(s, ThompsonNfa::kEps, t);
            nfa.add_edge(s, ThompsonNfa::kEps, fa.start);
            nfa.add_edge(fa.accept, ThompsonNfa::kEps, fa.start);
            nfa.add_edge(fa.accept, ThompsonNfa::kEps, t);
            break;
        }
        case DigitRegex::Kind::Plus: {
            const Fragment fa = build(nfa, *r.a, base);
            nfa.add_edge(s, ThompsonNfa::kEps, fa.start);
            nfa.add_edge(fa.accept, ThompsonNfa::kEps, fa.start);
            nfa.add_edge(fa.accept, ThompsonNfa::kEps, t);
            break;
        }
    }
    return {s, t};
}

void eps_close(const ThompsonNfa& nfa, std::vector<std::uint32_t>& set,
               std::vector<char>& mark) {
    std::vector<std::uint32_t> stack = set;
    while (!stack.empty()) {
        const std::uint32_t s = stack.back();
        stack.pop_back();
        for (const auto& [sym, to] : nfa.edges[s])
            if (sym == ThompsonNfa::kEps && !mark[to]) {
                mark[to] = 1;
                set.push_back(to);
                stack.push_back(to);
            }
    }
    std::sort(set.begin(), set.end());
}

}  // namespace

MultiDfa regex_compile(const DigitRegex& r, std::uint32_t base,
                       std::string track) {
    ThompsonNfa nfa;
    const Fragment f = build(nfa, r, base);
    const std::uint32_t n = static_cast<std::uint32_t>(nfa.edges.size());

    // Subset construction.
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    std::vector<std::vector<std::uint32_t>> subsets;
    auto intern = [&](std::vector<std::uint32_t> v) {
        auto [it, fresh] = ids.emplace(std::move(v),
                                       static_cast<std::uint32_t>(subsets.size()));
        if (fresh) subsets.push_back(it->first);
        return it->second;
    };

    std::vector<char> mark(n, 0);
    std::vector<std::uint32_t> init{f.start};
    mark[f.start] = 1;
    eps_close(nfa, init, mark);
    for (std::uint32_t s : init) mark[s] = 0;
    const std::uint32_t initial = intern(std::move(init));

    std::vector<std::uint32_t> delta;
    std::vector<char> accepting;
    for (std::uint32_t cur = 0; cur < subsets.size(); ++cur) {
        const std::vector<std::uint32_t> members = subsets[cur];
        accepting.push_back(static_cast<char>(
            std::binary_search(members.begin(), members.end(), f.accept)));
        for (std::uint32_t d = 0; d < base; ++d) {
            std::vector<std::uint32_t> next;
            for (std::uint32_t s : members)
                for (const auto& [sym, to] : nfa.edges[s])
                    if (sym == d && !mark[to]) {
                        mark[to] = 1;
                        next.push_back(to);
                    }
            eps_close(nfa, next, mark);
            for (std::uint32_t s : next) mark[s] = 0;
            delta.push_back(intern(std::move(next)));
        }
    }

    // Canonical-representation wrap: track whether the word read so far,
    // with trailing zeros stripped, is in the regex language.  States are
    // (dfa state, flag); reading a nonzero digit refreshes the flag,
    // reading 0 preserves it, acceptance is the flag.  This yields the
    // pad closure of { canonical(n) in L }.
    const std::uint32_t dn = static_cast<std::uint32_t>(accepting.size());
    MultiDfa out;
    out.base = base;
    out.tracks = {std::move(track)};
    out.initial = initial * 2 + (accepting[initial] ? 1 : 0);
    out.accepting.resize(static_cast<std::size_t>(dn) * 2);
    out.delta.resize(static_cast<std::size_t>(dn) * 2 * base);
    for (std::uint32_t q = 0; q < dn; ++q) {
        for (std::uint32_t flag = 0; flag < 2; ++flag) {
            const std::uint32_t id = q * 2 + flag;
            out.accepting[id] = static_cast<char>(flag);
            for (std::uint32_t d = 0; d < base; ++d) {
                const std::uint32_t qn = delta[static_cast<std::size_t>(q) * base + d];
                const std::uint32_t fn = d == 0 ? flag : (accepting[qn] ? 1 : 0);
                out.delta[static_cast<std::size_t>(id) * base + d] = qn * 2 + fn;
            }
        }
    }
    return minimize(out);
}

}  // namespace ctseq
