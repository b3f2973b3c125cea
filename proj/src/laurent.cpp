#include "ctseq/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace ctseq {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

std::uint32_t reduce(std::int64_t c, std::uint32_t m) {
    std::int64_t r = c % static_cast<std::int64_t>(m);
    if (r < 0) r += m;
    return static_cast<std::uint32_t>(r);
}

void check_modulus(std::uint32_t m) {
    if (m < 2) throw std::invalid_argument("LaurentPoly: modulus must be >= 2");
}

}  // namespace

LaurentPoly::LaurentPoly(std::uint32_t modulus) : modulus_(modulus) {
    check_modulus(modulus);
}

LaurentPoly::LaurentPoly(std::uint32_t modulus,
                         std::initializer_list<std::pair<int, std::int64_t>> terms)
    : modulus_(modulus) {
    check_modulus(modulus);
    for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::constant(std::uint32_t modulus, std::int64_t c) {
    LaurentPoly r(modulus);
    r.add_term(0, c);
    return r;
}

LaurentPoly LaurentPoly::monomial(std::uint32_t modulus, int exp, std::int64_t c) {
    LaurentPoly r(modulus);
    r.add_term(exp, c);
    return r;
}

std::uint32_t LaurentPoly::coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int exp, std::int64_t c) {
    auto it = coeffs_.find(exp);
    std::int64_t cur = it == coeffs_.end() ? 0 : it->second;
    std::uint32_t r = reduce(cur + c, modulus_);
    if (r == 0) {
        if (it != coeffs_.end()) coeffs_.erase(it);
    } else if (it != coeffs_.end()) {
        it->second = r;
    } else {
        coeffs_.emplace(exp, r);
    }
}

int LaurentPoly::min_exp() const {
    if (coeffs_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return coeffs_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (coeffs_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

std::string LaurentPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        if (e == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << "x^" << e;
        }
    }
    return os.str();
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    if (modulus_ != o.modulus_) return modulus_ < o.modulus_;
    return coeffs_ < o.coeffs_;
}

namespace {

void check_same_modulus(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("LaurentPoly: modulus mismatch");
}

}  // namespace

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) {
    check_same_modulus(a, b);
    LaurentPoly r = a;
    for (const auto& [e, c] : b.coeffs()) r.add_term(e, c);
    return r;
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) {
    check_same_modulus(a, b);
    LaurentPoly r(a.modulus());
    for (const auto& [ea, ca] : a.coeffs())
        for (const auto& [eb, cb] : b.coeffs())
            r.add_term(ea + eb, static_cast<std::int64_t>(ca) * cb);
    return r;
}

LaurentPoly lp_pow(const LaurentPoly& a, std::uint64_t e) {
    LaurentPoly result = LaurentPoly::constant(a.modulus(), 1);
    LaurentPoly base = a;
    while (e > 0) {
        if (e & 1) result = lp_mul(result, base);
        e >>= 1;
        if (e > 0) base = lp_mul(base, base);
    }
    return result;
}

std::uint32_t lp_ct(const LaurentPoly& a) { return a.coeff(0); }

LaurentPoly inflate(const LaurentPoly& a, std::uint32_t p) {
    LaurentPoly r(a.modulus());
    for (const auto& [e, c] : a.coeffs())
        r.add_term(e * static_cast<int>(p), c);
    return r;
}

LaurentPoly cartier(const LaurentPoly& a, std::uint32_t p) {
    if (p != a.modulus())
        throw std::invalid_argument("cartier: p must equal the modulus");
    if (!is_prime(p)) throw std::invalid_argument("cartier: p must be prime");
    const int ip = static_cast<int>(p);
    LaurentPoly r(a.modulus());
    for (const auto& [e, c] : a.coeffs()) {
        // C++ integer division truncates toward zero; test divisibility first.
        if (e % ip == 0) r.add_term(e / ip, c);
    }
    return r;
}

CtSpec CtSpec::make(std::string name, std::uint32_t p, LaurentPoly P,
                    LaurentPoly Q) {
    if (!is_prime(p))
        throw std::invalid_argument("CtSpec: modulus " + std::to_string(p) +
                                    " is not prime");
    if (P.modulus() != p || Q.modulus() != p)
        throw std::invalid_argument("CtSpec: P and Q must be reduced mod p");
    if (P.is_zero()) throw std::invalid_argument("CtSpec: P has empty support");
    return CtSpec{std::move(name), p, std::move(P), std::move(Q)};
}

}  // namespace ctseq
