#ifndef WDUAL_CHAINGAP_HPP
#define WDUAL_CHAINGAP_HPP

#include "wdual/codes.hpp"
#include "wdual/verdict.hpp"
#include "wdual/weights.hpp"

namespace wdual {

// Two chain-ring codes with equal w-weight enumerators: C_k on the cyclic
// module Z_k (functional classes theta^{m-k}..theta^{m-1}, each repeated
// q^{k-1} w_{m-1} times) and D_k on the semisimple module S_k (each
// functional orbit of level i repeated a_i times).  Whichever is shorter is
// padded with zero functionals so the lengths agree.
struct ChainPair {
    long k;
    WeightTable w;
    std::vector<Int> a;  // a_0..a_{k-1}
    Int delta_cap;       // zero-column balance Delta_k
    Int length;
    ChainCode C;
    ChainCode D;
};

// a_i = sum_{j=0}^{i} q^j w_{m-j-1}
Int chain_a_coefficient(const WeightTable& w, long i);

// Delta_k = k q^{k-1} w_{m-1} - sum_{i=0}^{k-1} q^{k-i-1} a_i, also computed
// through the epsilon' expansion; the two routes are asserted equal.
Int delta_cap(const WeightTable& w, long k);

// delta_k = A_w0(C_k^perp) - A_w0(D_k^perp) at the minimum weight, by the
// two-case singleton formula
Int delta_singleton(const WeightTable& w, long k);

// the same quantity through the epsilon expansion; valid when the weight is
// weakly monotone with minimum set {0..j0}, j0 >= 1
Int delta_singleton_via_epsilons(const WeightTable& w, long k);

// A_d(C_k^perp) - A_d(D_k^perp) for any d in the singleton-only window
// w0 <= d < 2 w0; d outside the window is rejected
Int general_d_delta(const WeightTable& w, long k, const Int& d);

ChainPair build_chain_pair(const WeightTable& w, long k);

// Decision procedure for chain-ring weights with maximal symmetry.
Verdict classify_chain(const WeightTable& w);

// Re-run a Fails witness end-to-end: rebuild the pair, confirm the primal
// enumerators agree, and confirm A_d(C_k^perp) - A_d(D_k^perp) equals the
// claimed delta through the MacWilliams pipeline.  Skipped (returns true)
// when the pair is longer than maxlen.
bool verify_chain_witness(const Verdict& v, const WeightTable& w, long maxlen = 2000);

}  // namespace wdual

#endif
