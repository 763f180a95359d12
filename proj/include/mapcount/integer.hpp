#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace mapcount {

// All counts are exact arbitrary-precision integers. GMP backs the
// arithmetic; nothing in the library ever touches floating point.
using Int = mpz_class;

// Divisibility assertion failed while assembling a table entry. This means
// the recurrence implementation itself is wrong, so computation must stop;
// truncating would silently corrupt every later entry.
class ExactnessError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A lookup or derived computation needs entries beyond the bounds a table
// was built with.
class TableTooSmallError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

inline std::string to_decimal(const Int& value) {
    return value.get_str(10);
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int pow_ui(unsigned long base, unsigned long exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

// value / divisor, insisting the division leaves no remainder.
inline Int exact_quotient(const Int& value, unsigned long divisor,
                          const char* what) {
    if (divisor == 0 || !mpz_divisible_ui_p(value.get_mpz_t(), divisor)) {
        throw ExactnessError(std::string(what) + ": " + to_decimal(value) +
                             " is not divisible by " + std::to_string(divisor));
    }
    Int q;
    mpz_divexact_ui(q.get_mpz_t(), value.get_mpz_t(), divisor);
    return q;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

inline int moebius(long n) {
    int mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

}  // namespace mapcount
