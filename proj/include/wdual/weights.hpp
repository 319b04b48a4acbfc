#ifndef WDUAL_WEIGHTS_HPP
#define WDUAL_WEIGHTS_HPP

#include <optional>
#include <vector>

#include "wdual/exactmath.hpp"

namespace wdual {

enum class Family { Chain, Matrix };

// A maximal-symmetry weight given by its per-orbit-class values.  Chain
// family stores w_0..w_{m-1} (value on orb(theta^i)); matrix family stores
// w_1..w_k (value on rank-i matrices).  The zero class always weighs 0 and
// is never stored.
class WeightTable {
  public:
    static WeightTable chain(long q, long m, std::vector<Int> values);
    static WeightTable matrix(long q, long k, std::vector<Int> values);

    Family family() const { return family_; }
    long q() const { return q_; }
    long m() const { return mk_; }  // chain nilpotency index
    long k() const { return mk_; }  // matrix size
    long classes() const { return mk_ + 1; }  // orbit classes including zero
    const std::vector<Int>& values() const { return values_; }

    // weight of orbit class i: chain i in 0..m (w_m = 0); matrix i in 0..k
    // (w_0 = 0)
    const Int& class_weight(long i) const;

    Int max_value() const;

    WeightTable scaled(const Int& c) const;

    bool is_hamming_multiple() const;

  private:
    WeightTable(Family f, long q, long mk, std::vector<Int> values);
    Family family_;
    long q_, mk_;
    std::vector<Int> values_;
    Int zero_ = 0;
};

WeightTable hamming_chain(long q, long m);
WeightTable hamming_matrix(long q, long k);

// chain homogeneous weight with zeta = q-1: w_i = q-1 for i <= m-2,
// w_{m-1} = q
WeightTable homogeneous_chain(long q, long m);

// matrix homogeneous weight with zeta = (q^k-1)...(q-1)/q; integer values
WeightTable homogeneous_matrix(long k, long q);

// epsilon_i = w_i - w_{i-1} for i = 1..m (w_m = 0); eps_prime has length m-1
// with eps_prime_i = eps_i for i <= m-2 and eps_prime_{m-1} =
// q eps_{m-1} + eps_m.  Chain family only.
struct EpsilonData {
    std::vector<Int> eps;        // eps[i-1] = epsilon_i, i = 1..m
    std::vector<Int> eps_prime;  // eps_prime[i-1] = epsilon'_i, i = 1..m-1
};
EpsilonData epsilons(const WeightTable& w);

// minimum positive weight value and the index set attaining it
struct MinWeightData {
    Int wmin;
    std::vector<long> index_set;  // chain: subset of 0..m-1; matrix: of 1..k
};
MinWeightData min_weight(const WeightTable& w);
std::vector<long> weight_index_set(const WeightTable& w, const Int& d);  // I_d

// block-diagonal coefficients c_1..c_k of the W_0 matrix (w_0 = 0):
// c_j = (-1)^j q^C(j,2) sum_{l=1}^j (-1)^l q^C(l,2) [j over l]_q w_l
std::vector<Int> c_coefficients(const WeightTable& w);
bool is_nondegenerate(const WeightTable& w);  // all c_j != 0

// gamma such that every nonzero left ideal B has sum_{b in B} w(b) =
// gamma |B|, when such a constant exists
std::optional<Rat> egalitarian_check(const WeightTable& w);

}  // namespace wdual

#endif
