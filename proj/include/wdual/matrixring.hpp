#ifndef WDUAL_MATRIXRING_HPP
#define WDUAL_MATRIXRING_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "wdual/exactmath.hpp"
#include "wdual/fq.hpp"

namespace wdual {

// Dense matrix over F_q with entries in the field's integer encoding.
class FqMatrix {
  public:
    FqMatrix() = default;
    FqMatrix(std::shared_ptr<const Fq> F, long rows, long cols)
        : F_(std::move(F)), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols), 0) {}

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const Fq& field() const { return *F_; }
    std::shared_ptr<const Fq> field_ptr() const { return F_; }

    int operator()(long r, long c) const { return a_[static_cast<size_t>(r * cols_ + c)]; }
    int& operator()(long r, long c) { return a_[static_cast<size_t>(r * cols_ + c)]; }

    FqMatrix transposed() const;
    FqMatrix mul(const FqMatrix& other) const;

    // in-place row reduction to RREF; returns the rank
    long rref();
    long rank() const;

    bool operator==(const FqMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  private:
    std::shared_ptr<const Fq> F_;
    long rows_ = 0, cols_ = 0;
    std::vector<int> a_;
};

// A linear subspace of F_q^m held by its unique RREF basis (rows = basis
// vectors; the zero subspace has an empty basis).
class Subspace {
  public:
    Subspace() = default;
    // rows of `basis` span the subspace; reduced internally
    Subspace(std::shared_ptr<const Fq> F, long ambient, const std::vector<std::vector<int>>& basis);

    long ambient() const { return m_; }
    long dim() const { return static_cast<long>(rows_.size()); }
    const std::vector<std::vector<int>>& basis() const { return rows_; }
    const Fq& field() const { return *F_; }
    std::shared_ptr<const Fq> field_ptr() const { return F_; }

    bool contains(const std::vector<int>& v) const;
    bool contains(const Subspace& other) const;

    Subspace perp() const;                        // orthogonal w.r.t. the standard dot product
    Subspace sum(const Subspace& other) const;    // X + Y
    Subspace intersect(const Subspace& other) const;

    // stable text key, also used in JSON: rows joined by ';', digits base q
    std::string key() const;

    bool operator==(const Subspace& o) const { return m_ == o.m_ && rows_ == o.rows_; }
    bool operator<(const Subspace& o) const;  // dimension-grouped lexicographic

  private:
    std::shared_ptr<const Fq> F_;
    long m_ = 0;
    std::vector<std::vector<int>> rows_;
};

// dim X - dim(X ∩ Y^perp); equals the rank of the evaluation x·lambda for
// orbit representatives with row space X and column space Y
long rank_of_pairing(const Subspace& X, const Subspace& Y);

Subspace subspace_from_key(std::shared_ptr<const Fq> F, long ambient, const std::string& key);

// All subspaces of F_q^m of dimension <= maxdim in a fixed total order,
// grouped by ascending dimension, with position lookup by canonical form.
class OrbitIndex {
  public:
    // default order: lexicographic on RREF basis matrices within each dimension
    static OrbitIndex lexicographic(long m, long maxdim, std::shared_ptr<const Fq> F);
    // explicit order (used for the published example ordering)
    static OrbitIndex from_list(long m, std::vector<Subspace> order);

    long ambient() const { return m_; }
    long maxdim() const { return maxdim_; }
    long count() const { return static_cast<long>(order_.size()); }
    long count_of_dim(long d) const;
    long first_of_dim(long d) const;  // offset of the first index with dim d
    const Subspace& at(long idx) const { return order_[static_cast<size_t>(idx)]; }
    long index_of(const Subspace& s) const;

    // rank_of_pairing over all index pairs, built once on first use
    const std::vector<std::vector<int>>& pairing_ranks() const;

  private:
    struct PairingCache {
        std::once_flag once;
        std::vector<std::vector<int>> prt;
    };

    long m_ = 0, maxdim_ = 0;
    std::vector<Subspace> order_;
    std::map<std::string, long> pos_;
    std::vector<long> dim_offset_;  // size maxdim+2
    std::shared_ptr<PairingCache> prt_cache_ = std::make_shared<PairingCache>();
};

// orbit size S_j of rank-j matrices in M_{k x m}: prod_{i=0}^{j-1} (q^k - q^i)
Int orbit_size_matrix(long j, long k, long q);

// |ann(i, lambda)| for rk lambda = j in R = M_{k x k}(F_q):
// S_i * [k-j over i]_q when i <= k-j, else 0
Int ann_count(long i, long j, long k, long q);

// helpers exposed for testing, per the rank-partition character sums
Int kravchuk_B(long i, long ell, long k, long q);
Int kravchuk_I(long a, long b, long c, long d, long q);

// (k+1)x(k+1) Kravchuk matrix of the rank partition on M_{k x k}(F_q)
std::vector<std::vector<Int>> rank_kravchuk(long k, long q);

// Element arithmetic for R = M_{k x k}(F_q) with elements packed as integer
// codes (base-q digits, row-major).  Used by the brute-force oracles.
class MatrixRingOps {
  public:
    using Elem = std::uint64_t;
    MatrixRingOps(long k, std::shared_ptr<const Fq> F);

    long k() const { return k_; }
    std::uint64_t size() const { return size_; }  // q^{k^2}

    FqMatrix decode(Elem a) const;
    Elem encode(const FqMatrix& x) const;
    Elem add(Elem a, Elem b) const;
    Elem mul(Elem a, Elem b) const;
    long rank(Elem a) const;
    int trace(Elem a) const;

  private:
    long k_;
    std::shared_ptr<const Fq> F_;
    std::uint64_t size_;
};

}  // namespace wdual

#endif
