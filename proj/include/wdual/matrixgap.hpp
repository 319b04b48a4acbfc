#ifndef WDUAL_MATRIXGAP_HPP
#define WDUAL_MATRIXGAP_HPP

#include <memory>

#include "wdual/codes.hpp"
#include "wdual/linalg.hpp"
#include "wdual/verdict.hpp"

namespace wdual {

// Total orders on the subspace orbit index.  Lex is the default
// (dimension-grouped, lexicographic RREF bases).  PaperK2M3Q2 is the
// published example ordering for k=2, m=3, q=2, shipped so the example
// vectors reproduce bit-for-bit; it also pins the anchor orbits used by the
// swap construction.
enum class SubspaceOrdering { Lex, PaperK2M3Q2 };

std::shared_ptr<const OrbitIndex> orbit_index_for(long k, long m, long q, SubspaceOrdering ord);

// W_0 / P_0 matrices over the nonzero orbits (global orbit index t maps to
// matrix row/column t-1)
struct WStructure {
    long k, m, q;
    SubspaceOrdering ordering;
    std::shared_ptr<const OrbitIndex> orbits;
    IntMatrix W0;
    IntMatrix P0;
};

WStructure build_W0(long k, long m, long q, const WeightTable& w, SubspaceOrdering ord = SubspaceOrdering::Lex);
IntMatrix build_P0(const OrbitIndex& orbits);

// Extract c_1..c_k from P0 W0 P0^T, verifying the exact block-diagonal
// shape (block j equals c_j times the incidence matrix of
// "alpha meets delta-perp trivially"); throws std::logic_error otherwise.
std::vector<Int> block_diagonalize(const WStructure& ws);

// averaged W-matrix; the (k+1)x(k+1) form keeps w_0 as an explicit value
IntMatrix build_Wbar(long k, long m, long q, const WeightTable& w, const Int& w0);
IntMatrix build_Wbar0(long k, long m, long q, const WeightTable& w);  // k x k, indices 1..k

// triangular factors diagonalizing Wbar0 to diag(q^{j(m-j)} c_j)
IntMatrix q0_left(long k, long m, long q);
IntMatrix q0_right(long k, long q);  // the T matrix

// value of W eta at a rank-i orbit for eta the indicator of the rank-j
// functional orbits
Int omega_locally_constant(long j, long i, long k, long m, long q, const WeightTable& w);

IntMatrix ann_matrix(long k, long q);   // (k+1)x(k+1), |ann(i,j)|
IntMatrix sann_matrix(long k, long q);  // k x k, |ann(i,j)| - |ann(i,0)|

// net singleton contributions: entry i-1 = contribution of rank-i
// singletons to A^sing_{w_i}(D^perp) - A^sing_{w_i}(C^perp), for codes of
// equal length with rank-sum difference delta_eta_bar over ranks 1..k
std::vector<Int> singleton_deltas(const std::vector<Int>& delta_eta_bar, long k, long q);

// The swap construction: two codes C, D on M_{k x m} whose orbit weights
// exchange the common value on q^k - q^s chosen rank-s orbits with the
// value on one rank-(s+1) orbit, leaving everything else fixed.
struct SwapPair {
    long s, k, m, q;
    SubspaceOrdering ordering;
    long lambda0_index, y_index;
    std::vector<long> x_indices;
    std::vector<Int> varsigma;  // +-1 pattern over nonzero orbits
    std::vector<Int> sigma;     // c w_1 W0^{-1} varsigma, integral
    Int c, a, b, delta;
    Int alpha_lo, alpha_hi;  // W0 1_{O+} at ranks s and s+1
    Int length;
    MatrixCode C;
    MatrixCode D;
};

SwapPair build_swap(long s, long k, long m, long q, const WeightTable& w,
                    SubspaceOrdering ord = SubspaceOrdering::Lex);

// Degenerate construction when c_j = 0: split the P0 row of the first
// dimension-j subspace into positive and negative parts, pad both with the
// same minimal set of rank-1 functionals until injective, and give the
// positive side one zero functional to balance the lengths.
struct DegeneratePair {
    long j, k, m, q;
    SubspaceOrdering ordering;
    long gamma_index;
    Int length;
    MatrixCode plus;
    MatrixCode minus;
};

DegeneratePair build_degenerate_pair(long j, long k, long m, long q, const WeightTable& w,
                                     SubspaceOrdering ord = SubspaceOrdering::Lex);

// Decision procedure for matrix-ring weights with maximal symmetry;
// constructions and classification use m = k+1.
Verdict classify_matrix(const WeightTable& w);

// Re-run a Fails witness end-to-end: rebuild the construction, confirm the
// primal enumerators agree, and confirm A_d(D^perp) - A_d(C^perp) equals the
// claimed delta through the MacWilliams pipeline.  Skipped (returns true)
// when the pair is longer than maxlen.
bool verify_matrix_witness(const Verdict& v, const WeightTable& w, long maxlen = 2000);

}  // namespace wdual

#endif
