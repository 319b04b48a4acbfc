#include "wdual/exactmath.hpp"

namespace wdual {

Int qbinom(long m, long j, long q) {
    if (m < 0) throw std::invalid_argument("qbinom: m must be nonnegative");
    if (q < 2) throw std::invalid_argument("qbinom: q must be >= 2");
    if (j < 0 || j > m) return 0;
    if (j > m - j) j = m - j;  // symmetry keeps the product short
    // [m over j]_q = prod_{i=0}^{j-1} (q^{m-i} - 1) / (q^{i+1} - 1),
    // evaluated as an exact integer by keeping a running rational product
    // numerator/denominator and dividing at the end.
    Int num = 1, den = 1;
    Int Q(q);
    for (long i = 0; i < j; ++i) {
        num *= int_pow(Q, static_cast<unsigned long>(m - i)) - 1;
        den *= int_pow(Q, static_cast<unsigned long>(i + 1)) - 1;
    }
    Int r, rem;
    mpz_tdiv_qr(r.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0) throw std::logic_error("qbinom: non-integral result");
    return r;
}

Int cauchy_alternating_sum(long k, long q) {
    if (k < 0) throw std::invalid_argument("cauchy_alternating_sum: k must be nonnegative");
    Int acc = 0;
    for (long j = 0; j <= k; ++j) {
        Int term = int_pow(q, choose2(j)) * qbinom(k, j, q);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

Int p_poly(long i, long q) {
    if (i < 0) throw std::invalid_argument("p_poly: i must be nonnegative");
    Int acc = 0;
    for (long t = 1; t <= i; ++t) acc += Int(t) * int_pow(q, static_cast<unsigned long>(t - 1));
    return acc;
}

Int moebius_subspace(long c, long q) {
    if (c < 0) throw std::invalid_argument("moebius_subspace: c must be nonnegative");
    Int v = int_pow(q, choose2(c));
    return (c % 2 == 0) ? v : -v;
}

bool prime_power(long q, long& p, long& e) {
    if (q < 2) return false;
    long n = q;
    long d = 2;
    while (d * d <= n) {
        if (n % d == 0) break;
        ++d;
    }
    if (d * d > n) d = n;  // q itself is prime
    p = d;
    e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return n == 1;
}

void require_prime_power(long q) {
    long p, e;
    if (!prime_power(q, p, e))
        throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
}

}  // namespace wdual
