#include "wdual/chainring.hpp"

#include <stdexcept>

namespace wdual {

ChainRing::ChainRing(long q, long p, long m, Rep rep) : q_(q), p_(p), m_(m), rep_(rep) {
    if (m_ < 1) throw std::invalid_argument("ChainRing: m must be >= 1");
    require_prime_power(q_);
    if (rep_ == Rep::PolyQuotient) fq_ = field(q_);
    size_ = int_pow(q_, static_cast<unsigned long>(m_));
    // element codes live in uint64; cap so products of IntegersModPM codes
    // cannot overflow either
    if (mpz_sizeinbase(size_.get_mpz_t(), 2) > 31)
        throw std::invalid_argument("ChainRing: |R| too large for concrete element arithmetic");
    size_u64_ = size_.get_ui();
}

ChainRing ChainRing::integers_mod(long p, long m) {
    long pp, pe;
    if (!prime_power(p, pp, pe) || pe != 1)
        throw std::invalid_argument("ChainRing::integers_mod: p must be prime");
    return ChainRing(p, p, m, Rep::IntegersModPM);
}

ChainRing ChainRing::poly_quotient(long q, long m) {
    long p, e;
    if (!prime_power(q, p, e)) throw std::invalid_argument("ChainRing::poly_quotient: q must be a prime power");
    return ChainRing(q, p, m, Rep::PolyQuotient);
}

ChainRing ChainRing::quotient(long k) const {
    if (k < 1 || k > m_) throw std::invalid_argument("ChainRing::quotient: need 1 <= k <= m");
    return ChainRing(q_, p_, k, rep_);
}

ChainRing::Elem ChainRing::one() const { return 1; }

ChainRing::Elem ChainRing::theta_pow(long i) const {
    if (i >= m_) return 0;
    if (i < 0) throw std::invalid_argument("theta_pow: negative exponent");
    Elem t = 1;
    if (rep_ == Rep::IntegersModPM) {
        for (long j = 0; j < i; ++j) t *= static_cast<Elem>(p_);
    } else {
        for (long j = 0; j < i; ++j) t *= static_cast<Elem>(q_);  // multiply by x
    }
    return t;
}

ChainRing::Elem ChainRing::lift_residue(int a) const {
    if (a < 0 || a >= q_) throw std::invalid_argument("lift_residue: out of range");
    return static_cast<Elem>(a);  // both encodings place the residue in digit 0
}

ChainRing::Elem ChainRing::add(Elem a, Elem b) const {
    if (rep_ == Rep::IntegersModPM) return (a + b) % size_u64_;
    Elem r = 0, mult = 1;
    for (long i = 0; i < m_; ++i) {
        int da = static_cast<int>((a / mult) % static_cast<Elem>(q_));
        int db = static_cast<int>((b / mult) % static_cast<Elem>(q_));
        r += static_cast<Elem>(fq_->add(da, db)) * mult;
        mult *= static_cast<Elem>(q_);
    }
    return r;
}

ChainRing::Elem ChainRing::neg(Elem a) const {
    if (rep_ == Rep::IntegersModPM) return (size_u64_ - a) % size_u64_;
    Elem r = 0, mult = 1;
    for (long i = 0; i < m_; ++i) {
        int da = static_cast<int>((a / mult) % static_cast<Elem>(q_));
        r += static_cast<Elem>(fq_->neg(da)) * mult;
        mult *= static_cast<Elem>(q_);
    }
    return r;
}

ChainRing::Elem ChainRing::mul(Elem a, Elem b) const {
    if (rep_ == Rep::IntegersModPM) return (a * b) % size_u64_;
    // truncated polynomial product: x^m = 0
    std::vector<int> ca(static_cast<size_t>(m_)), cb(static_cast<size_t>(m_)), cr(static_cast<size_t>(m_), 0);
    Elem ta = a, tb = b;
    for (long i = 0; i < m_; ++i) {
        ca[static_cast<size_t>(i)] = static_cast<int>(ta % static_cast<Elem>(q_));
        cb[static_cast<size_t>(i)] = static_cast<int>(tb % static_cast<Elem>(q_));
        ta /= static_cast<Elem>(q_);
        tb /= static_cast<Elem>(q_);
    }
    for (long i = 0; i < m_; ++i) {
        if (ca[static_cast<size_t>(i)] == 0) continue;
        for (long j = 0; i + j < m_; ++j)
            cr[static_cast<size_t>(i + j)] = fq_->add(
                cr[static_cast<size_t>(i + j)], fq_->mul(ca[static_cast<size_t>(i)], cb[static_cast<size_t>(j)]));
    }
    Elem r = 0;
    for (long i = m_ - 1; i >= 0; --i) r = r * static_cast<Elem>(q_) + static_cast<Elem>(cr[static_cast<size_t>(i)]);
    return r;
}

long ChainRing::valuation(Elem a) const {
    if (a == 0) return m_;
    if (rep_ == Rep::IntegersModPM) {
        long v = 0;
        while (a % static_cast<Elem>(p_) == 0) {
            a /= static_cast<Elem>(p_);
            ++v;
        }
        return v;
    }
    long v = 0;
    while (a % static_cast<Elem>(q_) == 0) {
        a /= static_cast<Elem>(q_);
        ++v;
    }
    return v;
}

Int ChainRing::orbit_size(long i) const {
    if (i < 0 || i > m_) throw std::invalid_argument("orbit_size: class out of range");
    if (i == m_) return 1;
    return int_pow(q_, static_cast<unsigned long>(m_ - i - 1)) * (q_ - 1);
}

std::vector<std::vector<Int>> ChainRing::generalized_kravchuk() const {
    std::vector<std::vector<Int>> K(static_cast<size_t>(m_ + 1), std::vector<Int>(static_cast<size_t>(m_ + 1)));
    for (long i = 0; i <= m_; ++i) {
        for (long j = 0; j <= m_; ++j) {
            Int v;
            if (i == m_)
                v = 1;
            else if (i + j <= m_ - 2)
                v = 0;
            else if (i + j == m_ - 1)
                v = -int_pow(q_, static_cast<unsigned long>(m_ - i - 1));
            else
                v = int_pow(q_, static_cast<unsigned long>(m_ - i - 1)) * (q_ - 1);
            K[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
        }
    }
    return K;
}

namespace {
void require_same(const ChainElement& a, const ChainElement& b) {
    if (a.ring == nullptr || b.ring == nullptr || !a.ring->same_ring(*b.ring))
        throw std::invalid_argument("chain element operands belong to different rings");
}
}  // namespace

ChainElement operator+(const ChainElement& a, const ChainElement& b) {
    require_same(a, b);
    return ChainElement(*a.ring, a.ring->add(a.code, b.code));
}

ChainElement operator*(const ChainElement& a, const ChainElement& b) {
    require_same(a, b);
    return ChainElement(*a.ring, a.ring->mul(a.code, b.code));
}

ChainElement ChainElement::operator-() const { return ChainElement(*ring, ring->neg(code)); }

bool operator==(const ChainElement& a, const ChainElement& b) {
    require_same(a, b);
    return a.code == b.code;
}

long valuation(const ChainElement& e) { return e.ring->valuation(e.code); }
bool is_unit(const ChainElement& e) { return e.ring->is_unit(e.code); }

}  // namespace wdual
