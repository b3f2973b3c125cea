#include "ctseq/multidfa.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "dfa_minimize.hpp"

namespace ctseq {

namespace {

constexpr std::uint32_t kUnset = 0xffffffffu;

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

void check_symbol_space(std::uint64_t count) {
    if (count > (1u << 26))
        throw std::invalid_argument("MultiDfa: tuple alphabet too large");
}

MultiDfa canonical(MultiDfa a) {
    const std::uint32_t k = a.symbol_count();
    std::vector<std::uint32_t> labels(a.accepting.begin(), a.accepting.end());
    const detail::MinDfa r =
        detail::minimize_dfa(a.num_states(), k, a.delta, a.initial, labels);
    MultiDfa out;
    out.base = a.base;
    out.tracks = std::move(a.tracks);
    out.initial = r.initial;
    out.accepting.assign(r.labels.begin(), r.labels.end());
    out.delta = r.delta;
    return out;
}

}  // namespace

std::uint32_t MultiDfa::symbol_count() const {
    const std::uint64_t c = ipow(base, tracks.size());
    check_symbol_space(c);
    return static_cast<std::uint32_t>(c);
}

bool MultiDfa::accepts_word(const std::vector<std::uint32_t>& symbols) const {
    const std::uint32_t sc = symbol_count();
    std::uint32_t s = initial;
    for (std::uint32_t sym : symbols)
        s = delta[static_cast<std::size_t>(s) * sc + sym];
    return accepting[s] != 0;
}

bool MultiDfa::accepts(const std::vector<std::uint64_t>& values) const {
    if (values.size() != tracks.size())
        throw std::invalid_argument("MultiDfa::accepts: arity mismatch");
    const std::uint32_t sc = symbol_count();
    std::vector<std::uint64_t> rest = values;
    std::uint32_t s = initial;
    for (;;) {
        bool all_zero = true;
        for (std::uint64_t v : rest)
            if (v != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) break;
        std::uint32_t sym = 0;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            sym = sym * base + static_cast<std::uint32_t>(rest[i] % base);
            rest[i] /= base;
        }
        s = delta[static_cast<std::size_t>(s) * sc + sym];
    }
    return accepting[s] != 0;
}

bool MultiDfa::is_true() const {
    if (!tracks.empty())
        throw std::logic_error("MultiDfa::is_true: automaton has tracks");
    return accepting[initial] != 0;
}

void MultiDfa::validate() const {
    if (base < 2) throw std::invalid_argument("MultiDfa: base must be >= 2");
    {
        std::vector<std::string> names = tracks;
        std::sort(names.begin(), names.end());
        if (std::adjacent_find(names.begin(), names.end()) != names.end())
            throw std::invalid_argument("MultiDfa: duplicate track name");
    }
    const std::uint32_t n = num_states();
    const std::uint32_t sc = symbol_count();
    if (n == 0) throw std::invalid_argument("MultiDfa: no states");
    if (initial >= n) throw std::invalid_argument("MultiDfa: initial out of range");
    if (delta.size() != static_cast<std::size_t>(n) * sc)
        throw std::invalid_argument("MultiDfa: transition table is not total");
    for (std::uint32_t t : delta)
        if (t >= n) throw std::invalid_argument("MultiDfa: transition target out of range");
    // Zero-pad invariance audit on the reachable part: the all-zero tuple
    // (symbol 0) must preserve acceptance.
    std::vector<char> seen(n, 0);
    std::vector<std::uint32_t> stack{initial};
    seen[initial] = 1;
    while (!stack.empty()) {
        const std::uint32_t s = stack.back();
        stack.pop_back();
        if (accepting[delta[static_cast<std::size_t>(s) * sc]] != accepting[s])
            throw std::invalid_argument("MultiDfa: zero-pad invariance violated");
        for (std::uint32_t c = 0; c < sc; ++c) {
            const std::uint32_t t = delta[static_cast<std::size_t>(s) * sc + c];
            if (!seen[t]) {
                seen[t] = 1;
                stack.push_back(t);
            }
        }
    }
}

std::uint32_t encode_tuple(std::uint32_t base,
                           const std::vector<std::uint32_t>& digits) {
    std::uint32_t sym = 0;
    for (std::uint32_t d : digits) sym = sym * base + d;
    return sym;
}

std::vector<std::uint32_t> decode_tuple(std::uint32_t base, std::size_t ntracks,
                                        std::uint32_t sym) {
    std::vector<std::uint32_t> digits(ntracks);
    for (std::size_t i = ntracks; i-- > 0;) {
        digits[i] = sym % base;
        sym /= base;
    }
    return digits;
}

MultiDfa mdfa_const(std::uint32_t base, std::vector<std::string> tracks,
                    bool value) {
    MultiDfa a;
    a.base = base;
    a.tracks = std::move(tracks);
    a.initial = 0;
    a.accepting = {static_cast<char>(value)};
    a.delta.assign(a.symbol_count(), 0);
    return a;
}

MultiDfa product(const MultiDfa& a, const MultiDfa& b, BoolOp op) {
    if (a.base != b.base) throw std::invalid_argument("product: base mismatch");
    const std::uint32_t k = a.base;

    std::vector<std::string> utracks = a.tracks;
    for (const auto& t : b.tracks)
        if (std::find(utracks.begin(), utracks.end(), t) == utracks.end())
            utracks.push_back(t);
    const std::uint64_t usc64 = ipow(k, utracks.size());
    check_symbol_space(usc64);
    const std::uint32_t usc = static_cast<std::uint32_t>(usc64);

    // Position of each operand track inside the union tuple.
    std::vector<std::size_t> apos(a.tracks.size()), bpos(b.tracks.size());
    for (std::size_t i = 0; i < a.tracks.size(); ++i) apos[i] = i;  // prefix
    for (std::size_t i = 0; i < b.tracks.size(); ++i)
        bpos[i] = static_cast<std::size_t>(
            std::find(utracks.begin(), utracks.end(), b.tracks[i]) -
            utracks.begin());

    std::vector<std::uint32_t> amap(usc), bmap(usc);
    for (std::uint32_t us = 0; us < usc; ++us) {
        const auto dig = decode_tuple(k, utracks.size(), us);
        std::uint32_t as = 0, bs = 0;
        for (std::size_t i = 0; i < apos.size(); ++i) as = as * k + dig[apos[i]];
        for (std::size_t i = 0; i < bpos.size(); ++i) bs = bs * k + dig[bpos[i]];
        amap[us] = as;
        bmap[us] = bs;
    }

    const std::uint32_t asc = a.symbol_count(), bsc = b.symbol_count();
    const std::uint64_t nb = b.num_states();
    std::unordered_map<std::uint64_t, std::uint32_t> ids;
    std::vector<std::uint64_t> pairs;
    auto intern = [&](std::uint32_t sa, std::uint32_t sb) {
        const std::uint64_t key = static_cast<std::uint64_t>(sa) * nb + sb;
        auto [it, fresh] = ids.emplace(key, static_cast<std::uint32_t>(pairs.size()));
        if (fresh) pairs.push_back(key);
        return it->second;
    };

    MultiDfa r;
    r.base = k;
    r.tracks = utracks;
    r.initial = intern(a.initial, b.initial);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const std::uint32_t sa = static_cast<std::uint32_t>(pairs[i] / nb);
        const std::uint32_t sb = static_cast<std::uint32_t>(pairs[i] % nb);
        const bool fa = a.accepting[sa] != 0, fb = b.accepting[sb] != 0;
        bool acc = false;
        switch (op) {
            case BoolOp::And: acc = fa && fb; break;
            case BoolOp::Or: acc = fa || fb; break;
            case BoolOp::Xor: acc = fa != fb; break;
        }
        r.accepting.push_back(static_cast<char>(acc));
        for (std::uint32_t us = 0; us < usc; ++us) {
            const std::uint32_t ta = a.delta[static_cast<std::size_t>(sa) * asc + amap[us]];
            const std::uint32_t tb = b.delta[static_cast<std::size_t>(sb) * bsc + bmap[us]];
            r.delta.push_back(intern(ta, tb));
        }
    }
    return canonical(std::move(r));
}

MultiDfa complement(const MultiDfa& a) {
    MultiDfa r = a;
    for (char& f : r.accepting) f = static_cast<char>(!f);
    return r;
}

MultiDfa project(const MultiDfa& a, const std::string& track) {
    const auto it = std::find(a.tracks.begin(), a.tracks.end(), track);
    if (it == a.tracks.end())
        throw std::invalid_argument("project: unknown track " + track);
    const std::size_t ti = static_cast<std::size_t>(it - a.tracks.begin());
    const std::uint32_t k = a.base;
    const std::size_t m = a.tracks.size();
    const std::uint32_t sc = a.symbol_count();
    const std::uint32_t rsc = static_cast<std::uint32_t>(ipow(k, m - 1));
    const std::uint32_t n = a.num_states();

    // Full symbol for (reduced symbol, erased digit).
    std::vector<std::uint32_t> fullsym(static_cast<std::size_t>(rsc) * k);
    for (std::uint32_t rs = 0; rs < rsc; ++rs) {
        const auto rdig = decode_tuple(k, m - 1, rs);
        for (std::uint32_t d = 0; d < k; ++d) {
            std::vector<std::uint32_t> dig(m);
            for (std::size_t i = 0, j = 0; i < m; ++i)
                dig[i] = (i == ti) ? d : rdig[j++];
            fullsym[static_cast<std::size_t>(rs) * k + d] = encode_tuple(k, dig);
        }
    }

    // Acceptance saturation: a state accepts if a path of tuples whose
    // surviving tracks are all zero reaches an accepting state.
    std::vector<char> extacc(a.accepting.begin(), a.accepting.end());
    {
        std::vector<std::vector<std::uint32_t>> rev(n);
        for (std::uint32_t s = 0; s < n; ++s)
            for (std::uint32_t d = 0; d < k; ++d) {
                const std::uint32_t t =
                    a.delta[static_cast<std::size_t>(s) * sc + fullsym[d]];
                rev[t].push_back(s);
            }
        std::vector<std::uint32_t> stack;
        for (std::uint32_t s = 0; s < n; ++s)
            if (extacc[s]) stack.push_back(s);
        while (!stack.empty()) {
            const std::uint32_t t = stack.back();
            stack.pop_back();
            for (std::uint32_t s : rev[t])
                if (!extacc[s]) {
                    extacc[s] = 1;
                    stack.push_back(s);
                }
        }
    }

    // Subset construction over the reduced alphabet.
    std::vector<std::vector<std::uint32_t>> subsets;
    auto subset_hash = [](const std::vector<std::uint32_t>& v) {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint32_t x : v) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    };
    // Sorted subsets interned by content; hash buckets keyed by hash value
    // with chained exact comparison.
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
    auto intern_subset = [&](std::vector<std::uint32_t> v) -> std::uint32_t {
        const std::uint64_t h = subset_hash(v);
        auto& bucket = buckets[h];
        for (std::uint32_t id : bucket)
            if (subsets[id] == v) return id;
        const std::uint32_t id = static_cast<std::uint32_t>(subsets.size());
        subsets.push_back(std::move(v));
        bucket.push_back(id);
        return id;
    };

    MultiDfa r;
    r.base = k;
    r.tracks.reserve(m - 1);
    for (std::size_t i = 0; i < m; ++i)
        if (i != ti) r.tracks.push_back(a.tracks[i]);

    r.initial = intern_subset({a.initial});
    std::vector<char> mark(n, 0);
    std::vector<std::uint32_t> targets;
    for (std::uint32_t cur = 0; cur < subsets.size(); ++cur) {
        const std::vector<std::uint32_t> members = subsets[cur];
        bool acc = false;
        for (std::uint32_t s : members)
            if (extacc[s]) {
                acc = true;
                break;
            }
        r.accepting.push_back(static_cast<char>(acc));
        for (std::uint32_t rs = 0; rs < rsc; ++rs) {
            targets.clear();
            const std::size_t rowbase = static_cast<std::size_t>(rs) * k;
            for (std::uint32_t s : members) {
                const std::size_t row = static_cast<std::size_t>(s) * sc;
                for (std::uint32_t d = 0; d < k; ++d) {
                    const std::uint32_t t = a.delta[row + fullsym[rowbase + d]];
                    if (!mark[t]) {
                        mark[t] = 1;
                        targets.push_back(t);
                    }
                }
            }
            std::sort(targets.begin(), targets.end());
            for (std::uint32_t t : targets) mark[t] = 0;
            r.delta.push_back(intern_subset(targets));
        }
    }
    return canonical(std::move(r));
}

MultiDfa linear_automaton(std::uint32_t base,
                          const std::map<std::string, std::int64_t>& coeffs,
                          std::int64_t c, LinRel rel) {
    if (base < 2) throw std::invalid_argument("linear_automaton: base must be >= 2");
    if (coeffs.empty())
        throw std::invalid_argument("linear_automaton: at least one track required");
    const std::uint32_t k = base;
    std::vector<std::string> tracks;
    std::vector<std::int64_t> weight;
    for (const auto& [name, w] : coeffs) {
        tracks.push_back(name);
        weight.push_back(w);
    }
    const std::uint64_t sc64 = ipow(k, tracks.size());
    check_symbol_space(sc64);
    const std::uint32_t sc = static_cast<std::uint32_t>(sc64);

    // Weighted digit sum per tuple symbol.
    std::vector<std::int64_t> wsum(sc, 0);
    for (std::uint32_t sym = 0; sym < sc; ++sym) {
        const auto dig = decode_tuple(k, tracks.size(), sym);
        std::int64_t s = 0;
        for (std::size_t i = 0; i < dig.size(); ++i) s += weight[i] * dig[i];
        wsum[sym] = s;
    }

    // Carry-state BFS.  For Eq the carry s means "remaining digits must
    // contribute exactly -s"; for Le the carry is the remaining budget.
    std::unordered_map<std::int64_t, std::uint32_t> ids;
    std::vector<std::int64_t> carries;
    auto intern = [&](std::int64_t v) {
        auto [it, fresh] = ids.emplace(v, static_cast<std::uint32_t>(carries.size()));
        if (fresh) {
            carries.push_back(v);
            if (carries.size() > 2000000)
                throw std::logic_error("linear_automaton: carry explosion");
        }
        return it->second;
    };

    MultiDfa r;
    r.base = k;
    r.tracks = tracks;
    std::vector<std::uint32_t> delta;
    std::vector<char> accepting;

    if (rel == LinRel::Eq) {
        const std::uint32_t dead_marker = kUnset;
        r.initial = intern(c);
        std::vector<std::uint32_t> rows;  // staged transitions, dead = kUnset
        for (std::uint32_t cur = 0; cur < carries.size(); ++cur) {
            const std::int64_t s = carries[cur];
            accepting.push_back(static_cast<char>(s == 0));
            for (std::uint32_t sym = 0; sym < sc; ++sym) {
                const std::int64_t t = s + wsum[sym];
                if (t % k != 0) {
                    rows.push_back(dead_marker);
                } else {
                    rows.push_back(intern(t / k));
                }
            }
        }
        // Append an explicit dead state.
        const std::uint32_t dead = static_cast<std::uint32_t>(carries.size());
        for (std::uint32_t& t : rows)
            if (t == dead_marker) t = dead;
        accepting.push_back(0);
        for (std::uint32_t sym = 0; sym < sc; ++sym) rows.push_back(dead);
        delta = std::move(rows);
    } else {
        r.initial = intern(-c);
        for (std::uint32_t cur = 0; cur < carries.size(); ++cur) {
            const std::int64_t b = carries[cur];
            accepting.push_back(static_cast<char>(b >= 0));
            for (std::uint32_t sym = 0; sym < sc; ++sym) {
                std::int64_t x = b - wsum[sym];
                std::int64_t q = x / static_cast<std::int64_t>(k);
                if (x % static_cast<std::int64_t>(k) != 0 && x < 0) --q;
                delta.push_back(intern(q));
            }
        }
    }
    r.accepting = std::move(accepting);
    r.delta = std::move(delta);
    return canonical(std::move(r));
}

MultiDfa dfao_slice(const Dfao& a, std::uint32_t v, std::string track) {
    if (v >= a.modulus)
        throw std::invalid_argument("dfao_slice: output value out of range");
    MultiDfa r;
    r.base = a.base;
    r.tracks = {std::move(track)};
    r.initial = a.initial;
    r.accepting.resize(a.num_states());
    for (std::uint32_t s = 0; s < a.num_states(); ++s)
        r.accepting[s] = static_cast<char>(a.out[s] == v);
    r.delta = a.delta;
    return canonical(std::move(r));
}

MultiDfa rename_tracks(const MultiDfa& a,
                       const std::map<std::string, std::string>& renames) {
    MultiDfa r = a;
    for (auto& t : r.tracks) {
        auto it = renames.find(t);
        if (it != renames.end()) t = it->second;
    }
    std::vector<std::string> names = r.tracks;
    std::sort(names.begin(), names.end());
    if (std::adjacent_find(names.begin(), names.end()) != names.end())
        throw std::invalid_argument("rename_tracks: duplicate track name");
    return r;
}

MultiDfa sort_tracks(const MultiDfa& a) {
    if (std::is_sorted(a.tracks.begin(), a.tracks.end())) return a;
    const std::size_t m = a.tracks.size();
    const std::uint32_t k = a.base;
    const std::uint32_t sc = a.symbol_count();
    std::vector<std::size_t> perm(m);  // perm[new pos] = old pos
    for (std::size_t i = 0; i < m; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
        return a.tracks[x] < a.tracks[y];
    });

    MultiDfa r;
    r.base = k;
    r.tracks.resize(m);
    for (std::size_t i = 0; i < m; ++i) r.tracks[i] = a.tracks[perm[i]];
    r.initial = a.initial;
    r.accepting = a.accepting;

    std::vector<std::uint32_t> symmap(sc);  // new symbol -> old symbol
    for (std::uint32_t ns = 0; ns < sc; ++ns) {
        const auto ndig = decode_tuple(k, m, ns);
        std::vector<std::uint32_t> odig(m);
        for (std::size_t i = 0; i < m; ++i) odig[perm[i]] = ndig[i];
        symmap[ns] = encode_tuple(k, odig);
    }
    r.delta.resize(a.delta.size());
    for (std::uint32_t s = 0; s < a.num_states(); ++s)
        for (std::uint32_t ns = 0; ns < sc; ++ns)
            r.delta[static_cast<std::size_t>(s) * sc + ns] =
                a.delta[static_cast<std::size_t>(s) * sc + symmap[ns]];
    return canonical(std::move(r));
}

MultiDfa minimize(const MultiDfa& a) { return canonical(a); }

bool is_empty(const MultiDfa& a) {
    const std::uint32_t sc = a.symbol_count();
    std::vector<char> seen(a.num_states(), 0);
    std::vector<std::uint32_t> stack{a.initial};
    seen[a.initial] = 1;
    while (!stack.empty()) {
        const std::uint32_t s = stack.back();
        stack.pop_back();
        if (a.accepting[s]) return false;
        for (std::uint32_t c = 0; c < sc; ++c) {
            const std::uint32_t t = a.delta[static_cast<std::size_t>(s) * sc + c];
            if (!seen[t]) {
                seen[t] = 1;
                stack.push_back(t);
            }
        }
    }
    return true;
}

bool equivalent(const MultiDfa& a, const MultiDfa& b) {
    if (a.base != b.base) throw std::invalid_argument("equivalent: base mismatch");
    std::vector<std::string> ta = a.tracks, tb = b.tracks;
    std::sort(ta.begin(), ta.end());
    std::sort(tb.begin(), tb.end());
    if (ta != tb) throw std::invalid_argument("equivalent: track sets differ");
    return is_empty(product(sort_tracks(a), sort_tracks(b), BoolOp::Xor));
}

std::optional<std::vector<std::uint64_t>> witness(const MultiDfa& a) {
    const std::uint32_t sc = a.symbol_count();
    const std::uint32_t n = a.num_states();
    std::vector<std::uint32_t> parent(n, kUnset), via(n, kUnset);
    std::vector<char> seen(n, 0);
    std::deque<std::uint32_t> queue{a.initial};
    seen[a.initial] = 1;
    std::uint32_t found = kUnset;
    if (a.accepting[a.initial]) {
        found = a.initial;
    } else {
        while (!queue.empty() && found == kUnset) {
            const std::uint32_t s = queue.front();
            queue.pop_front();
            for (std::uint32_t c = 0; c < sc && found == kUnset; ++c) {
                const std::uint32_t t = a.delta[static_cast<std::size_t>(s) * sc + c];
                if (!seen[t]) {
                    seen[t] = 1;
                    parent[t] = s;
                    via[t] = c;
                    if (a.accepting[t]) found = t;
                    queue.push_back(t);
                }
            }
        }
    }
    if (found == kUnset) return std::nullopt;
    std::vector<std::uint32_t> word;
    for (std::uint32_t s = found; s != a.initial; s = parent[s])
        word.push_back(via[s]);
    std::reverse(word.begin(), word.end());
    // Decode the word, one natural per track.
    std::vector<std::uint64_t> values(a.tracks.size(), 0);
    std::uint64_t place = 1;
    for (std::uint32_t sym : word) {
        const auto dig = decode_tuple(a.base, a.tracks.size(), sym);
        for (std::size_t i = 0; i < values.size(); ++i)
            values[i] += place * dig[i];
        place *= a.base;
    }
    return values;
}

std::vector<std::vector<std::uint64_t>> enumerate_accepted(const MultiDfa& a,
                                                           std::uint64_t limit) {
    std::vector<std::vector<std::uint64_t>> out;
    const std::size_t m = a.tracks.size();
    if (m == 0) {
        if (a.is_true()) out.push_back({});
        return out;
    }
    if (limit == 0) return out;
    std::vector<std::uint64_t> v(m, 0);
    for (;;) {
        if (a.accepts(v)) out.push_back(v);
        std::size_t i = m;
        while (i-- > 0) {
            if (++v[i] < limit) break;
            v[i] = 0;
            if (i == 0) return out;
        }
    }
}

}  // namespace ctseq
