#ifndef WDUAL_CODES_HPP
#define WDUAL_CODES_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "wdual/chainring.hpp"
#include "wdual/enumerators.hpp"
#include "wdual/matrixring.hpp"
#include "wdual/weights.hpp"

namespace wdual {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// rank_of_pairing over all index pairs, precomputed once per orbit index
std::vector<std::vector<int>> pairing_rank_table(const OrbitIndex& orbits);

// enumerate the functional orbits of S_k in construction order: level i
// ascending (B_0 first), inside a level the free coordinates ascending with
// mu_1 as the least significant digit.  Representatives are normalized so
// the last nonzero coordinate is 1.
std::vector<std::vector<int>> sk_functional_orbits(long k, long q);
long sk_level(const std::vector<int>& mu);  // the i with mu in B_i; k for 0

// A linear code over a chain ring presented by a multiplicity function on
// the functional orbits of its information module (Z_k cyclic or S_k
// semisimple).
class ChainCode {
  public:
    enum class Module { Cyclic, Semisimple };

    // cyclic Z_k = R/(theta^k): functional classes are right multiplication
    // by theta^{m-k+j}, addressed by j = 0..k-1
    static ChainCode cyclic(ChainRing ring, long k, std::vector<Int> mult, Int zero_mult);
    // semisimple S_k: functional orbits keyed by normalized mu in F_q^k
    static ChainCode semisimple(ChainRing ring, long k, std::map<std::vector<int>, Int> mult, Int zero_mult);

    const ChainRing& ring() const { return ring_; }
    Module module_kind() const { return module_; }
    long k() const { return k_; }
    const std::vector<Int>& cyclic_mult() const { return zk_mult_; }
    const std::map<std::vector<int>, Int>& semisimple_mult() const { return sk_mult_; }
    const Int& zero_mult() const { return zero_mult_; }

    Int length() const;
    Int efflength() const;
    Int module_size() const;  // q^k
    Int kernel_size() const;
    Int code_size() const;    // module_size / kernel_size

    // list of orbit weights W(eta): cyclic -> value per class i = 0..k;
    // semisimple -> zero orbit first, then per normalized 1-dim module
    // vector in sk_functional_orbits order of the module side
    std::vector<Int> orbit_weights(const WeightTable& w) const;

    PartitionEnumerator se() const;               // classes = m+1 valuation classes
    WWEnumerator wwe(const WeightTable& w) const;

    // generator rows over R (entries as ring element codes); lengths must
    // fit in machine integers
    std::vector<std::vector<ChainRing::Elem>> generator_rows() const;

  private:
    ChainCode(ChainRing ring, Module mod, long k);

    ChainRing ring_;
    Module module_;
    long k_;
    std::vector<Int> zk_mult_;
    std::map<std::vector<int>, Int> sk_mult_;
    Int zero_mult_ = 0;
};

// A linear code over M_{k x k}(F_q) with information module M_{k x m}(F_q),
// presented by multiplicities on the functional orbit index (subspaces of
// F_q^m of dimension <= k; index 0, the zero subspace, is the zero
// functional).
class MatrixCode {
  public:
    MatrixCode(long k, long m, std::shared_ptr<const Fq> F, std::shared_ptr<const OrbitIndex> orbits,
               std::vector<Int> mult);

    long k() const { return k_; }
    long m() const { return m_; }
    long q() const { return F_->q(); }
    const OrbitIndex& orbits() const { return *orbits_; }
    std::shared_ptr<const OrbitIndex> orbits_ptr() const { return orbits_; }
    const std::vector<Int>& mult() const { return mult_; }

    Int length() const;
    Int efflength() const;
    Int module_size() const;  // q^{km}
    Int kernel_size() const;
    Int code_size() const;

    std::vector<Int> orbit_weights(const WeightTable& w) const;  // per orbit index
    std::vector<Int> rank_sums() const;                          // eta-bar, size k+1

    PartitionEnumerator se() const;  // rank partition, classes = k+1
    WWEnumerator wwe(const WeightTable& w) const;

    // one m x k functional representative per unit of multiplicity
    std::vector<FqMatrix> functional_columns() const;

  private:
    long k_, m_;
    std::shared_ptr<const Fq> F_;
    std::shared_ptr<const OrbitIndex> orbits_;
    std::vector<Int> mult_;
};

// Brute-force right dual w-weight enumerators: enumerate all y in R^n and
// keep those annihilated by the generators.  Refuses (BudgetExceeded) when
// |R|^n exceeds the budget.
WWEnumerator brute_force_dual_wwe(const ChainRing& ring, const std::vector<std::vector<ChainRing::Elem>>& rows,
                                  const WeightTable& w, const Int& budget = Int(1) << 24);
WWEnumerator brute_force_dual_wwe(const MatrixCode& code, const WeightTable& w, const Int& budget = Int(1) << 24);

// primal w-weight enumerator by direct codeword iteration (oracle; budgeted)
WWEnumerator brute_force_primal_wwe(const ChainRing& ring, const std::vector<std::vector<ChainRing::Elem>>& rows,
                                    const WeightTable& w, const Int& budget = Int(1) << 24);

// total weight of the code, computed coordinate-by-coordinate, plus the
// egalitarian prediction gamma |C| efflength(C) when w is egalitarian
struct WeightSum {
    Int total;
    std::optional<Rat> egalitarian_prediction;
};
WeightSum weight_sum_check(const ChainCode& code, const WeightTable& w);
WeightSum weight_sum_check(const MatrixCode& code, const WeightTable& w);

// full dual-code pipeline: symmetrized / rank partition enumerator, its
// MacWilliams transform, and the specialized dual w-weight enumerator
PartitionEnumerator dual_se(const ChainCode& code);
PartitionEnumerator dual_se(const MatrixCode& code);
WWEnumerator dual_wwe(const ChainCode& code, const WeightTable& w);
WWEnumerator dual_wwe(const MatrixCode& code, const WeightTable& w);
WWEnumerator dual_wwe_prefix(const ChainCode& code, const WeightTable& w, long maxdeg);
WWEnumerator dual_wwe_prefix(const MatrixCode& code, const WeightTable& w, long maxdeg);

}  // namespace wdual

#endif
