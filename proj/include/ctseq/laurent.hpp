// Sparse Laurent-polynomial arithmetic over Z/m.
//
// LaurentPoly is the carrier of the P, Q pairs that define sequences as
// constant terms of P(x)^n Q(x), and of the states of the automaton
// synthesis in synthesis.hpp.  Values are immutable once built up; all
// operations below are pure.

#ifndef CTSEQ_LAURENT_HPP
#define CTSEQ_LAURENT_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace ctseq {

bool is_prime(std::uint64_t n);

/// Sparse Laurent polynomial with coefficients in Z/m, m >= 2.
/// Canonical form: no stored coefficient is 0, so two polynomials are
/// equal iff their coefficient maps are equal.
class LaurentPoly {
  public:
    explicit LaurentPoly(std::uint32_t modulus);
    LaurentPoly(std::uint32_t modulus,
                std::initializer_list<std::pair<int, std::int64_t>> terms);

    static LaurentPoly constant(std::uint32_t modulus, std::int64_t c);
    static LaurentPoly monomial(std::uint32_t modulus, int exp, std::int64_t c);

    std::uint32_t modulus() const { return modulus_; }
    const std::map<int, std::uint32_t>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    std::uint32_t coeff(int exp) const;

    /// Adds c*x^exp, keeping the sparse form canonical.
    void add_term(int exp, std::int64_t c);

    int min_exp() const;  ///< requires a nonempty support
    int max_exp() const;

    std::string to_string() const;

    bool operator==(const LaurentPoly& o) const = default;
    /// Total order (modulus, then coefficient map); used as a map key by
    /// the synthesis state table.
    bool operator<(const LaurentPoly& o) const;

  private:
    std::uint32_t modulus_;
    std::map<int, std::uint32_t> coeffs_;
};

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_pow(const LaurentPoly& a, std::uint64_t e);

/// Coefficient of x^0, as a residue in [0, m).
std::uint32_t lp_ct(const LaurentPoly& a);

/// Substitutes x -> x^p (multiplies every exponent by p).
LaurentPoly inflate(const LaurentPoly& a, std::uint32_t p);

/// Cartier operator: keeps the coefficients at exponents divisible by p
/// and divides those exponents by p.  Adjoint to inflate under the
/// constant-term pairing: ct(A * inflate(B, p)) = ct(cartier(A, p) * B).
LaurentPoly cartier(const LaurentPoly& a, std::uint32_t p);

/// A sequence defined as a(n) = ct[P(x)^n Q(x)] mod p.
struct CtSpec {
    std::string name;
    std::uint32_t p;  // prime; both the digit base and the modulus
    LaurentPoly P;
    LaurentPoly Q;

    /// Validates primality of p, matching moduli, and nonempty P support.
    static CtSpec make(std::string name, std::uint32_t p, LaurentPoly P,
                       LaurentPoly Q);
};

}  // namespace ctseq

#endif
