#ifndef WDUAL_CHAINRING_HPP
#define WDUAL_CHAINRING_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "wdual/exactmath.hpp"
#include "wdual/fq.hpp"

namespace wdual {

// A finite chain ring R with residue field F_q and nilpotency index m:
// either Z/p^m (requires q = p prime) or F_q[x]/(x^m).  The ideal chain is
// (theta^0) > (theta) > ... > (theta^m) = 0 with |(theta^j)| = q^{m-j}.
//
// Elements are carried as integer codes 0..q^m-1: the residue itself for
// IntegersModPM, the base-q digit string of the coefficient vector for
// PolyQuotient.  Concrete element arithmetic exists for the brute-force
// oracles; all enumerator math runs on (q, m) orbit data alone.
class ChainRing {
  public:
    enum class Rep { IntegersModPM, PolyQuotient };
    using Elem = std::uint64_t;

    static ChainRing integers_mod(long p, long m);   // Z/p^m
    static ChainRing poly_quotient(long q, long m);  // F_q[x]/(x^m)

    long q() const { return q_; }
    long p() const { return p_; }
    long m() const { return m_; }
    Rep rep() const { return rep_; }
    const Int& size() const { return size_; }
    // |R| as a machine integer; element enumeration requires it to fit
    std::uint64_t size_u64() const { return size_u64_; }

    ChainRing quotient(long k) const;  // Z_k = R/(theta^k), itself a chain ring

    Elem zero() const { return 0; }
    Elem one() const;
    Elem theta_pow(long i) const;  // representative theta^i (i >= m gives 0)
    Elem lift_residue(int a) const;  // section F_q -> R (constant/integer lift)

    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const;

    // largest i with a in (theta^i); valuation(0) = m
    long valuation(Elem a) const;
    bool is_unit(Elem a) const { return valuation(a) == 0; }

    // |orb(theta^i)| = q^{m-i-1}(q-1) for i < m, 1 for i = m
    Int orbit_size(long i) const;

    // Generalized Kravchuk matrix, (m+1)x(m+1): row i = orbit class of the
    // summed variable, column j = orbit class of the character parameter.
    std::vector<std::vector<Int>> generalized_kravchuk() const;

    bool same_ring(const ChainRing& other) const {
        return q_ == other.q_ && m_ == other.m_ && rep_ == other.rep_;
    }

  private:
    ChainRing(long q, long p, long m, Rep rep);

    long q_, p_, m_;
    Rep rep_;
    std::shared_ptr<const Fq> fq_;  // residue field (PolyQuotient only)
    Int size_;
    std::uint64_t size_u64_;
};

// Value-semantic element with its ring identity, for the public arithmetic
// surface; mixed-ring operands are rejected.
struct ChainElement {
    const ChainRing* ring = nullptr;
    ChainRing::Elem code = 0;

    ChainElement() = default;
    ChainElement(const ChainRing& r, ChainRing::Elem c) : ring(&r), code(c) {}

    friend ChainElement operator+(const ChainElement& a, const ChainElement& b);
    friend ChainElement operator*(const ChainElement& a, const ChainElement& b);
    ChainElement operator-() const;
    friend bool operator==(const ChainElement& a, const ChainElement& b);
};

long valuation(const ChainElement& e);
bool is_unit(const ChainElement& e);

}  // namespace wdual

#endif
