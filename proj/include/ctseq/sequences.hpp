// Built-in sequence specifications and the independent oracles used to
// cross-check every synthesized automaton:
//   - the trinomial triangle (rows of (1+x+x^2)^n mod m), which yields both
//     the central trinomial coefficients T_n and the Motzkin numbers M_n,
//   - the Catalan convolution recurrence,
//   - exact big-integer references for spot checks,
//   - the digit-product evaluation of T_n mod p, the residue morphism whose
//     fixed point is (T_n mod p), and the primes dividing no T_n.

#ifndef CTSEQ_SEQUENCES_HPP
#define CTSEQ_SEQUENCES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ctseq/dfao.hpp"
#include "ctseq/laurent.hpp"

namespace ctseq {

enum class SeqKind { Catalan, Motzkin, Trinomial };

std::string seq_kind_name(SeqKind kind);
SeqKind seq_kind_from_name(const std::string& name);

/// The (P, Q) pair defining the sequence as ct[P^n Q] mod p.
CtSpec builtin_ctspec(SeqKind kind, std::uint32_t p);

/// Base-2 DFAO for the Thue-Morse sequence (parity of the number of
/// 1-digits, so the lsd automaton equals the classical msd one).
Dfao thue_morse_dfao();

struct OracleTable {
    SeqKind kind;
    std::uint32_t modulus;
    std::vector<std::uint8_t> values;  // values[n] = a(n) mod modulus
};

struct TrinomialTables {
    OracleTable central;  // T_n mod m
    OracleTable motzkin;  // M_n mod m  (central column minus the +2 column)
};

/// Triangle recurrence mod m for n < N.  Quadratic cost; N <= 1e5.
TrinomialTables oracle_trinomial(std::size_t N, std::uint32_t m);

/// Catalan convolution recurrence mod m for n < N.  Quadratic; N <= 1e5.
OracleTable oracle_catalan(std::size_t N, std::uint32_t m);

/// Fetches the oracle for one sequence kind (computing the trinomial
/// triangle when kind is Motzkin or Trinomial).
OracleTable oracle_table(SeqKind kind, std::size_t N, std::uint32_t m);

/// T_n mod p as the product of T_{n_i} mod p over the base-p digits n_i.
std::uint32_t tri_lucas_eval(std::uint64_t n, std::uint32_t p);

/// tau_i = T_i mod p for i < p.
std::vector<std::uint32_t> tau_prefix(std::uint32_t p);

/// Morphism over an alphabet of residues mod some prime.
struct MorphismSpec {
    std::uint32_t modulus;
    std::vector<std::uint32_t> alphabet;  // sorted, distinct
    std::map<std::uint32_t, std::vector<std::uint32_t>> images;
    std::uint32_t seed;
};

/// The residue morphism tau_i -> (tau_i*tau_0)(tau_i*tau_1)...(tau_i*tau_{p-1})
/// extended multiplicatively to the closure of {tau_i} in (Z/p)^*.
/// Throws std::invalid_argument when some tau_i is 0 (morphism undefined).
MorphismSpec build_tri_morphism(std::uint32_t p);

struct PrimitivityResult {
    bool primitive = false;
    std::uint64_t exponent = 0;  // least t with every f^t(a) full, if primitive
};

/// Primitivity test, iterating the incidence relation up to the Wielandt
/// bound (q-1)^2 + 1.
PrimitivityResult primitivity_check(const MorphismSpec& m);

/// First `len` letters of the fixed point obtained by iterating the
/// morphism from its seed.  Throws if the seed is not prolongable.
std::vector<std::uint32_t> fixed_point_prefix(const MorphismSpec& m,
                                              std::size_t len);

/// Primes p <= limit dividing no central trinomial coefficient
/// (equivalently: tau_i != 0 for all i < p).
std::vector<std::uint32_t> a113305_primes(std::uint32_t limit);

/// Does {tau_i : i < p} contain a primitive root modulo p?
bool primitive_root_in_prefix(std::uint32_t p);

// Exact big-integer references (for dual-oracle spot checks).
std::vector<boost::multiprecision::cpp_int> exact_catalan(std::size_t N);
/// M_n = sum_k binom(n, 2k) * C_k, straight from the binomial-sum formula.
std::vector<boost::multiprecision::cpp_int> exact_motzkin(std::size_t N);

}  // namespace ctseq

#endif
