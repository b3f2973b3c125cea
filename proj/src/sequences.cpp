#include "ctseq/sequences.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctseq {

using boost::multiprecision::cpp_int;

std::string seq_kind_name(SeqKind kind) {
    switch (kind) {
        case SeqKind::Catalan: return "catalan";
        case SeqKind::Motzkin: return "motzkin";
        case SeqKind::Trinomial: return "trinomial";
    }
    throw std::logic_error("seq_kind_name: bad kind");
}

SeqKind seq_kind_from_name(const std::string& name) {
    if (name == "catalan") return SeqKind::Catalan;
    if (name == "motzkin") return SeqKind::Motzkin;
    if (name == "trinomial") return SeqKind::Trinomial;
    throw std::invalid_argument("unknown sequence kind: " + name);
}

CtSpec builtin_ctspec(SeqKind kind, std::uint32_t p) {
    if (!is_prime(p))
        throw std::invalid_argument("builtin_ctspec: modulus " +
                                    std::to_string(p) + " is not prime");
    switch (kind) {
        case SeqKind::Catalan:
            // C_n = ct[(1/x + 2 + x)^n (1 - x)]
            return CtSpec::make("catalan", p,
                                LaurentPoly(p, {{-1, 1}, {0, 2}, {1, 1}}),
                                LaurentPoly(p, {{0, 1}, {1, -1}}));
        case SeqKind::Motzkin:
            // M_n = ct[(1/x + 1 + x)^n (1 - x^2)]
            return CtSpec::make("motzkin", p,
                                LaurentPoly(p, {{-1, 1}, {0, 1}, {1, 1}}),
                                LaurentPoly(p, {{0, 1}, {2, -1}}));
        case SeqKind::Trinomial:
            // T_n = ct[(1/x + 1 + x)^n]
            return CtSpec::make("trinomial", p,
                                LaurentPoly(p, {{-1, 1}, {0, 1}, {1, 1}}),
                                LaurentPoly::constant(p, 1));
    }
    throw std::logic_error("builtin_ctspec: bad kind");
}

Dfao thue_morse_dfao() {
    Dfao a;
    a.base = 2;
    a.modulus = 2;
    a.initial = 0;
    a.out = {0, 1};
    // On 0 stay, on 1 flip.
    a.delta = {0, 1, 1, 0};
    return a;
}

namespace {

void check_oracle_args(std::size_t N, std::uint32_t m) {
    if (m < 2) throw std::invalid_argument("oracle: modulus must be >= 2");
    if (m > 250) throw std::invalid_argument("oracle: modulus too large for byte tables");
    if (N > 100000) throw std::invalid_argument("oracle: N exceeds the 1e5 bound");
}

}  // namespace

TrinomialTables oracle_trinomial(std::size_t N, std::uint32_t m) {
    check_oracle_args(N, m);
    TrinomialTables t{{SeqKind::Trinomial, m, {}}, {SeqKind::Motzkin, m, {}}};
    t.central.values.resize(N);
    t.motzkin.values.resize(N);
    if (N == 0) return t;

    // Half rows of the symmetric triangle: row[j] = [x^{n+j}] (1+x+x^2)^n.
    // Kept as bytes with branchless reduction so the inner loop vectorizes.
    const std::uint8_t mm = static_cast<std::uint8_t>(m);
    std::vector<std::uint8_t> row(N + 2, 0), next(N + 2, 0);
    row[0] = 1 % mm;
    auto red = [mm](unsigned v) -> std::uint8_t {
        v -= mm * (v >= mm);
        v -= mm * (v >= mm);
        return static_cast<std::uint8_t>(v);
    };
    for (std::size_t n = 0;; ++n) {
        t.central.values[n] = row[0];
        t.motzkin.values[n] =
            static_cast<std::uint8_t>((row[0] + mm - row[2]) % mm);
        if (n + 1 == N) break;
        // row_{n+1}[j] = row_n[j-1] + row_n[j] + row_n[j+1], mirrored at 0.
        next[0] = red(row[0] + 2u * row[1]);
        const std::size_t len = n + 2;  // valid entries of the next row
        for (std::size_t j = 1; j <= len; ++j)
            next[j] = red(row[j - 1] + row[j] + row[j + 1]);
        row.swap(next);
    }
    return t;
}

OracleTable oracle_catalan(std::size_t N, std::uint32_t m) {
    check_oracle_args(N, m);
    OracleTable t{SeqKind::Catalan, m, {}};
    t.values.resize(N);
    if (N == 0) return t;
    std::vector<std::uint8_t> c(N);
    c[0] = static_cast<std::uint8_t>(1 % m);
    // C_{n+1} = sum_{i<=n} C_i C_{n-i}; symmetric halves, reduce once per row.
    for (std::size_t n = 1; n < N; ++n) {
        std::uint64_t acc = 0;
        std::size_t i = 0, j = n - 1;
        for (; i < j; ++i, --j)
            acc += static_cast<std::uint32_t>(c[i]) * c[j];
        acc *= 2;
        if (i == j) acc += static_cast<std::uint32_t>(c[i]) * c[i];
        c[n] = static_cast<std::uint8_t>(acc % m);
    }
    t.values.assign(c.begin(), c.end());
    return t;
}

OracleTable oracle_table(SeqKind kind, std::size_t N, std::uint32_t m) {
    switch (kind) {
        case SeqKind::Catalan: return oracle_catalan(N, m);
        case SeqKind::Motzkin: return oracle_trinomial(N, m).motzkin;
        case SeqKind::Trinomial: return oracle_trinomial(N, m).central;
    }
    throw std::logic_error("oracle_table: bad kind");
}

std::vector<std::uint32_t> tau_prefix(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("tau_prefix: p is not prime");
    const TrinomialTables t = oracle_trinomial(p, p);
    std::vector<std::uint32_t> tau(t.central.values.begin(),
                                   t.central.values.end());
    return tau;
}

std::uint32_t tri_lucas_eval(std::uint64_t n, std::uint32_t p) {
    static thread_local std::uint32_t cached_p = 0;
    static thread_local std::vector<std::uint32_t> tau;
    if (cached_p != p) {
        tau = tau_prefix(p);
        cached_p = p;
    }
    std::uint64_t prod = 1 % p;
    while (n > 0) {
        prod = prod * tau[n % p] % p;
        n /= p;
    }
    return static_cast<std::uint32_t>(prod);
}

MorphismSpec build_tri_morphism(std::uint32_t p) {
    const std::vector<std::uint32_t> tau = tau_prefix(p);
    for (std::uint32_t i = 0; i < p; ++i)
        if (tau[i] == 0)
            throw std::invalid_argument(
                "build_tri_morphism: tau_" + std::to_string(i) +
                " = 0 mod " + std::to_string(p) + ", morphism undefined");

    // Multiplicative closure of {tau_i} in (Z/p)^*.
    std::vector<char> in(p, 0);
    std::vector<std::uint32_t> closure;
    for (std::uint32_t v : tau)
        if (!in[v]) {
            in[v] = 1;
            closure.push_back(v);
        }
    for (std::size_t i = 0; i < closure.size(); ++i)
        for (std::uint32_t v : tau) {
            const std::uint32_t w =
                static_cast<std::uint32_t>(static_cast<std::uint64_t>(closure[i]) * v % p);
            if (!in[w]) {
                in[w] = 1;
                closure.push_back(w);
            }
        }
    std::sort(closure.begin(), closure.end());

    MorphismSpec m;
    m.modulus = p;
    m.alphabet = closure;
    m.seed = 1 % p;
    for (std::uint32_t a : closure) {
        std::vector<std::uint32_t> img(p);
        for (std::uint32_t j = 0; j < p; ++j)
            img[j] = static_cast<std::uint32_t>(
                static_cast<std::uint64_t>(a) * tau[j] % p);
        m.images.emplace(a, std::move(img));
    }
    return m;
}

PrimitivityResult primitivity_check(const MorphismSpec& m) {
    const std::size_t q = m.alphabet.size();
    std::map<std::uint32_t, std::size_t> index;
    for (std::size_t i = 0; i < q; ++i) index.emplace(m.alphabet[i], i);

    // Boolean incidence matrix R[a][b] = "b occurs in f(a)".
    std::vector<char> reach(q * q, 0);
    for (std::size_t i = 0; i < q; ++i) {
        const auto& img = m.images.at(m.alphabet[i]);
        for (std::uint32_t letter : img) {
            auto it = index.find(letter);
            if (it == index.end())
                throw std::invalid_argument("primitivity_check: image letter outside alphabet");
            reach[i * q + it->second] = 1;
        }
    }

    const std::uint64_t bound = static_cast<std::uint64_t>(q - 1) * (q - 1) + 1;
    std::vector<char> cur = reach, tmp(q * q);
    for (std::uint64_t t = 1; t <= bound; ++t) {
        bool all = true;
        for (char v : cur)
            if (!v) {
                all = false;
                break;
            }
        if (all) return {true, t};
        // cur <- cur * R (boolean)
        std::fill(tmp.begin(), tmp.end(), 0);
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = 0; j < q; ++j)
                if (cur[i * q + j])
                    for (std::size_t l = 0; l < q; ++l)
                        if (reach[j * q + l]) tmp[i * q + l] = 1;
        if (tmp == cur) break;  // stabilized short of full: never primitive
        cur.swap(tmp);
    }
    return {false, 0};
}

std::vector<std::uint32_t> fixed_point_prefix(const MorphismSpec& m,
                                              std::size_t len) {
    auto seed_img = m.images.find(m.seed);
    if (seed_img == m.images.end() || seed_img->second.empty() ||
        seed_img->second.front() != m.seed)
        throw std::invalid_argument("fixed_point_prefix: seed is not prolongable");
    std::vector<std::uint32_t> w{m.seed};
    while (w.size() < len) {
        std::vector<std::uint32_t> next;
        next.reserve(len);
        for (std::uint32_t a : w) {
            const auto& img = m.images.at(a);
            for (std::uint32_t b : img) {
                next.push_back(b);
                if (next.size() == len) break;
            }
            if (next.size() == len) break;
        }
        if (next.size() <= w.size())
            throw std::invalid_argument(
                "fixed_point_prefix: seed image does not grow");
        w.swap(next);
    }
    w.resize(len);
    return w;
}

std::vector<std::uint32_t> a113305_primes(std::uint32_t limit) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 2; p <= limit; ++p) {
        if (!is_prime(p)) continue;
        const std::vector<std::uint32_t> tau = tau_prefix(p);
        if (std::find(tau.begin(), tau.end(), 0u) == tau.end()) out.push_back(p);
    }
    return out;
}

bool primitive_root_in_prefix(std::uint32_t p) {
    if (!is_prime(p))
        throw std::invalid_argument("primitive_root_in_prefix: p is not prime");
    const std::vector<std::uint32_t> tau = tau_prefix(p);
    for (std::uint32_t v : tau) {
        if (v == 0) continue;
        // Multiplicative order of v.
        std::uint64_t x = v % p;
        std::uint32_t order = 1;
        while (x != 1 % p) {
            x = x * v % p;
            ++order;
        }
        if (order == p - 1) return true;
    }
    return false;
}

std::vector<cpp_int> exact_catalan(std::size_t N) {
    std::vector<cpp_int> c;
    c.reserve(N);
    if (N == 0) return c;
    c.push_back(1);
    for (std::size_t n = 1; n < N; ++n)
        c.push_back(c.back() * 2 * (2 * static_cast<int>(n) - 1) /
                    (static_cast<int>(n) + 1));
    return c;
}

std::vector<cpp_int> exact_motzkin(std::size_t N) {
    const std::vector<cpp_int> cat = exact_catalan(N);
    std::vector<cpp_int> m;
    m.reserve(N);
    for (std::size_t n = 0; n < N; ++n) {
        cpp_int sum = 0;
        cpp_int binom = 1;  // binom(n, 0)
        for (std::size_t k = 0; 2 * k <= n; ++k) {
            sum += binom * cat[k];
            // binom(n, 2k) -> binom(n, 2k+2)
            binom = binom * (static_cast<int>(n) - 2 * static_cast<int>(k)) /
                    (2 * static_cast<int>(k) + 1);
            binom = binom * (static_cast<int>(n) - 2 * static_cast<int>(k) - 1) /
                    (2 * static_cast<int>(k) + 2);
        }
        m.push_back(sum);
    }
    return m;
}

}  // namespace ctseq
