#include <doctest.h>

#include "ctseq/regex.hpp"

using namespace ctseq;
using namespace ctseq::rx;

namespace {

// Canonical lsd digits of n, least significant first.
std::vector<std::uint32_t> lsd_digits(std::uint64_t n, std::uint32_t base) {
    std::vector<std::uint32_t> d;
    while (n) {
        d.push_back(n % base);
        n /= base;
    }
    return d;
}

bool brute_match(const DigitRegex& r, const std::vector<std::uint32_t>& w,
                 std::size_t lo, std::size_t hi);

bool match_concat(const DigitRegex& r, const std::vector<std::uint32_t>& w,
                  std::size_t lo, std::size_t hi) {
    for (std::size_t mid = lo; mid <= hi; ++mid)
        if (brute_match(*r.a, w, lo, mid) && brute_match(*r.b, w, mid, hi))
            return true;
    return false;
}

// Exponential-time reference matcher, fine for short words.
bool brute_match(const DigitRegex& r, const std::vector<std::uint32_t>& w,
                 std::size_t lo, std::size_t hi) {
    switch (r.kind) {
        case DigitRegex::Kind::Epsilon: return lo == hi;
        case DigitRegex::Kind::Literal:
            return hi == lo + 1 && w[lo] == r.digit;
        case DigitRegex::Kind::Class:
            if (hi != lo + 1) return false;
            for (std::uint32_t d : r.digits)
                if (w[lo] == d) return true;
            return false;
        case DigitRegex::Kind::Concat: return match_concat(r, w, lo, hi);
        case DigitRegex::Kind::Union:
            return brute_match(*r.a, w, lo, hi) || brute_match(*r.b, w, lo, hi);
        case DigitRegex::Kind::Star: {
            if (lo == hi) return true;
            for (std::size_t mid = lo + 1; mid <= hi; ++mid)
                if (brute_match(*r.a, w, lo, mid) && brute_match(r, w, mid, hi))
                    return true;
            return false;
        }
        case DigitRegex::Kind::Plus: {
            for (std::size_t mid = lo + 1; mid <= hi; ++mid)
                if (brute_match(*r.a, w, lo, mid)) {
                    if (mid == hi) return true;
                    const DigitRegex star_rest{DigitRegex::Kind::Star, 0, {}, r.a, nullptr};
                    if (brute_match(star_rest, w, mid, hi)) return true;
                }
            return false;
        }
    }
    return false;
}

void check_against_brute(const RegexPtr& r, std::uint32_t base,
                         std::uint64_t limit) {
    const MultiDfa a = regex_compile(*r, base);
    for (std::uint64_t n = 0; n < limit; ++n) {
        const auto w = lsd_digits(n, base);
        CHECK(a.accepts({n}) == brute_match(*r, w, 0, w.size()));
    }
}

}  // namespace

TEST_CASE("base 3 pattern 2 1 1* accepts 5") {
    const MultiDfa a = regex_compile(*cat({lit(2), lit(1), star(lit(1))}), 3);
    CHECK(a.accepts({5}));   // canonical lsd "21"
    CHECK(!a.accepts({2}));
    CHECK(a.accepts({14}));  // 2 + 1*3 + 1*9 -> "211"
    CHECK(!a.accepts({0}));
}

TEST_CASE("universal pattern accepts everything") {
    const MultiDfa a = regex_compile(*star(cls({0, 1})), 2);
    for (std::uint64_t n = 0; n < 50; ++n) CHECK(a.accepts({n}));
}

TEST_CASE("base 5 pattern (00)* 1 Sigma* accepts 25") {
    const RegexPtr r = cat({star(cat(lit(0), lit(0))), lit(1), star(any(5))});
    const MultiDfa a = regex_compile(*r, 5);
    CHECK(a.accepts({25}));  // canonical lsd "001"
    CHECK(a.accepts({1}));
    CHECK(a.accepts({6}));   // "11"
    CHECK(!a.accepts({5}));  // "01": one leading zero
    CHECK(!a.accepts({0}));
}

TEST_CASE("matching is against the canonical representation, pad-closed") {
    // Sigma* 0 can never match a canonical representation.
    const MultiDfa never = regex_compile(*cat(star(any(2)), lit(0)), 2);
    for (std::uint64_t n = 0; n < 40; ++n) CHECK(!never.accepts({n}));
    // The empty-string pattern matches exactly n = 0, padded or not.
    const MultiDfa zero = regex_compile(*eps(), 2);
    CHECK(zero.accepts({0}));
    CHECK(zero.accepts_word({0, 0, 0}));
    CHECK(!zero.accepts({1}));
    // Literal 0 never matches: the canonical form of 0 is the empty string.
    const MultiDfa zero_digit = regex_compile(*lit(0), 3);
    for (std::uint64_t n = 0; n < 30; ++n) CHECK(!zero_digit.accepts({n}));
}

TEST_CASE("compiled automata agree with a reference matcher") {
    check_against_brute(alt(cat({lit(1), star(cls({0, 1})), lit(1)}), lit(1)), 2,
                        256);
    check_against_brute(cat({star(lit(0)), lit(1),
                             star(cat({star(lit(0)), lit(1), star(lit(0)), lit(1)})),
                             star(lit(0))}),
                        2, 256);
    check_against_brute(cat({star(cat(lit(0), lit(0))), lit(2), star(any(3))}), 3,
                        243);
    check_against_brute(plus(cls({1, 2})), 3, 243);
    check_against_brute(star(alt(lit(0), cat(lit(1), lit(2)))), 3, 243);
}

TEST_CASE("malformed patterns are rejected") {
    CHECK_THROWS_AS(regex_compile(*lit(7), 5), std::invalid_argument);
    CHECK_THROWS_AS(regex_compile(*cls({0, 4}), 3), std::invalid_argument);
}
