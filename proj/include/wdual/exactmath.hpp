#ifndef WDUAL_EXACTMATH_HPP
#define WDUAL_EXACTMATH_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Exact scalar arithmetic used everywhere else: arbitrary-precision
// integers/rationals (GMP), q-combinatorics, and the small closed-form
// polynomial quantities the constructions need.  No floating point.

namespace wdual {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int int_pow(long base, unsigned long e) { return int_pow(Int(base), e); }

// binomial(n,2) as an exponent helper; n >= 0
inline unsigned long choose2(long n) {
    if (n < 2) return 0;
    return static_cast<unsigned long>(n) * static_cast<unsigned long>(n - 1) / 2;
}

// Gaussian binomial coefficient [m over j]_q; 0 when j < 0 or j > m.
Int qbinom(long m, long j, long q);

// sum_{j=0}^k (-1)^j q^C(j,2) [k over j]_q; equals 1 for k = 0, else 0.
Int cauchy_alternating_sum(long k, long q);

// p_0 = 0, p_i = 1 + 2q + 3q^2 + ... + i q^{i-1}
Int p_poly(long i, long q);

// Moebius function of the subspace lattice for a codimension-c interval:
// (-1)^c q^C(c,2)
Int moebius_subspace(long c, long q);

// Trial-division factorization of a prime power.  Returns true and fills
// (p, e) when q = p^e with p prime and e >= 1; q <= 2^32 assumed.
bool prime_power(long q, long& p, long& e);

// Throws std::invalid_argument unless q is a prime power >= 2.
void require_prime_power(long q);

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace wdual

#endif
