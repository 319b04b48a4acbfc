#ifndef WDUAL_ENUMERATORS_HPP
#define WDUAL_ENUMERATORS_HPP

#include <map>
#include <string>
#include <vector>

#include "wdual/exactmath.hpp"
#include "wdual/weights.hpp"

namespace wdual {

// Sparse exact multivariate enumerator over orbit-class variables
// Z_0..Z_{classes-1}: a map from exponent vectors (one entry per class,
// summing to the code length) to integer coefficients.  Covers both the
// symmetrized enumerator (chain valuation classes) and the rank partition
// enumerator (matrix rank classes).
class PartitionEnumerator {
  public:
    using Exponents = std::vector<long>;

    PartitionEnumerator(long classes, long length) : classes_(classes), length_(length) {}

    long classes() const { return classes_; }
    long length() const { return length_; }
    const std::map<Exponents, Int>& terms() const { return terms_; }

    void add_term(const Exponents& e, const Int& coeff);
    Int coefficient_total() const;

    bool operator==(const PartitionEnumerator& o) const {
        return classes_ == o.classes_ && length_ == o.length_ && terms_ == o.terms_;
    }

    std::string to_string() const;  // "coeff Z0^a Z1^b + ..." in key order

  private:
    long classes_, length_;
    std::map<Exponents, Int> terms_;
};

// w-weight enumerator: sparse map j -> A_j
class WWEnumerator {
  public:
    WWEnumerator() = default;

    const std::map<long, Int>& terms() const { return terms_; }
    void add(long deg, const Int& coeff);
    Int coefficient(long deg) const;
    Int total() const;
    long max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    bool operator==(const WWEnumerator& o) const { return terms_ == o.terms_; }
    bool prefix_equals(const WWEnumerator& o, long maxdeg) const;

    std::string to_string(long maxdeg = -1) const;  // "1 + 16t + 1848t^2 + ..."

  private:
    std::map<long, Int> terms_;
};

// MacWilliams transform of a partition enumerator: substitute
// Zcal_j <- sum_i K_{ij} Z_i, expand exactly, and divide by |C|.  The
// result is the enumerator of the dual code, with coefficients summing to
// |R|^n / |C|.  Throws std::domain_error when the division is not exact
// (the input was not the enumerator of a linear code over the claimed
// ring).
PartitionEnumerator macwilliams_transform(const PartitionEnumerator& e,
                                          const std::vector<std::vector<Int>>& K,
                                          const Int& code_size);

// Z_i -> t^{w_i} (zero class -> t^0); class count must match the family
WWEnumerator specialize(const PartitionEnumerator& e, const WeightTable& w);

// A_j of the dual code for j <= maxdeg only; agrees with
// specialize(macwilliams_transform(...)) on that range but skips the full
// multivariate expansion
WWEnumerator truncated_dual_wwe(const PartitionEnumerator& e, const std::vector<std::vector<Int>>& K,
                                const Int& code_size, const WeightTable& w, long maxdeg);

// (1/|C|) * sum_j A_j (X+aY)^{N-j} (X-Y)^j evaluated at X=1, Y=t, where N =
// total homogeneous degree (length * w_max).  This is the binary
// MacWilliams substitution used by the positive identities.
WWEnumerator mw_binary_substitution(const WWEnumerator& primal, long total_degree, const Int& a,
                                    const Int& code_size);

}  // namespace wdual

#endif
