#ifndef WDUAL_FQ_HPP
#define WDUAL_FQ_HPP

#include <memory>
#include <vector>

#include "wdual/exactmath.hpp"

namespace wdual {

// Finite field F_q, q = p^e.  Elements are encoded as integers 0..q-1; for
// e > 1 the encoding is the base-p digit expansion of the coefficient vector
// (digit i = coefficient of x^i) relative to the modulus polynomial.
// Multiplication goes through log/antilog tables built at construction.
class Fq {
  public:
    using Elem = int;

    // Prime field or a built-in extension (q in {4, 8, 9, 16, 25, 27}).
    explicit Fq(long q);
    // Extension field from a user-supplied monic irreducible polynomial over
    // F_p, coefficients ascending, degree e = modulus.size()-1.
    Fq(long p, std::vector<int> modulus);

    long q() const { return q_; }
    long p() const { return p_; }
    long degree() const { return e_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;

    // coefficient vector of the element (length e, entries 0..p-1)
    std::vector<int> coeffs(Elem a) const;
    Elem from_coeffs(const std::vector<int>& c) const;

    bool operator==(const Fq& other) const { return q_ == other.q_ && modulus_ == other.modulus_; }

  private:
    void build_tables();
    Elem poly_mul(Elem a, Elem b) const;  // table-free, used only for setup

    long q_ = 0, p_ = 0, e_ = 1;
    std::vector<int> modulus_;          // empty for prime fields
    std::vector<int> log_, antilog_;    // log_[a] for a != 0; antilog_[i] = g^i
};

// Shared immutable field handles; fields are cheap but the tables are worth
// reusing across rings, matrices, and orbit indexes.
std::shared_ptr<const Fq> field(long q);

}  // namespace wdual

#endif
