#include "wdual/matrixgap.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

namespace wdual {

namespace {

std::vector<Subspace> paper_order_k2m3q2() {
    auto F = field(2);
    auto sub = [&](std::vector<std::vector<int>> rows) { return Subspace(F, 3, rows); };
    std::vector<Subspace> order;
    order.push_back(sub({}));
    // rank 1
    order.push_back(sub({{1, 0, 1}}));
    order.push_back(sub({{0, 1, 0}}));
    order.push_back(sub({{0, 0, 1}}));
    order.push_back(sub({{1, 1, 1}}));
    order.push_back(sub({{0, 1, 1}}));
    order.push_back(sub({{1, 0, 0}}));
    order.push_back(sub({{1, 1, 0}}));
    // rank 2
    order.push_back(sub({{1, 0, 0}, {0, 1, 0}}));
    order.push_back(sub({{1, 0, 1}, {0, 1, 0}}));
    order.push_back(sub({{1, 0, 0}, {0, 0, 1}}));
    order.push_back(sub({{1, 1, 0}, {0, 0, 1}}));
    order.push_back(sub({{1, 0, 0}, {0, 1, 1}}));
    order.push_back(sub({{0, 1, 0}, {0, 0, 1}}));
    order.push_back(sub({{1, 0, 1}, {0, 1, 1}}));
    return order;
}

// weight-independent data reused across constructions at one (k, m, q, ord)
struct SolveContext {
    std::shared_ptr<const OrbitIndex> orbits;
    std::vector<std::vector<int>> prt;
    IntMatrix P0;
    std::vector<RatMatrix> inc_inv;  // index j-1: inverse of the dim-j incidence block
};

const SolveContext& solve_context(long k, long m, long q, SubspaceOrdering ord) {
    static std::mutex mu;
    static std::map<std::tuple<long, long, long, int>, std::unique_ptr<SolveContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(k, m, q, static_cast<int>(ord));
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    auto ctx = std::make_unique<SolveContext>();
    ctx->orbits = orbit_index_for(k, m, q, ord);
    ctx->prt = ctx->orbits->pairing_ranks();
    ctx->P0 = build_P0(*ctx->orbits);
    const OrbitIndex& ox = *ctx->orbits;
    for (long j = 1; j <= k; ++j) {
        long off = ox.first_of_dim(j), cnt = ox.count_of_dim(j);
        RatMatrix inc(static_cast<size_t>(cnt), std::vector<Rat>(static_cast<size_t>(cnt), Rat(0)));
        for (long a = 0; a < cnt; ++a)
            for (long d = 0; d < cnt; ++d)
                if (ctx->prt[static_cast<size_t>(off + a)][static_cast<size_t>(off + d)] == j) inc[static_cast<size_t>(a)][static_cast<size_t>(d)] = 1;
        ctx->inc_inv.push_back(invert_rational(std::move(inc)));
    }
    const SolveContext& ref = *ctx;
    cache.emplace(key, std::move(ctx));
    return ref;
}

void require_km(long k, long m) {
    if (k < 2 || m < k) throw std::invalid_argument("matrixgap: need 2 <= k <= m");
}

// solve W0 u = rhs through P0^T (P0 W0 P0^T)^{-1} P0, using the cached
// incidence inverses; c_j are the block coefficients of the weight
std::vector<Rat> solve_W0(const SolveContext& ctx, long k, const std::vector<Int>& c,
                          const std::vector<Int>& rhs) {
    const OrbitIndex& ox = *ctx.orbits;
    long n = ox.count() - 1;
    std::vector<Int> v = mat_vec(ctx.P0, rhs);
    std::vector<Rat> z(static_cast<size_t>(n), Rat(0));
    for (long j = 1; j <= k; ++j) {
        if (c[static_cast<size_t>(j - 1)] == 0) throw std::domain_error("solve_W0: degenerate weight");
        long off = ox.first_of_dim(j) - 1, cnt = ox.count_of_dim(j);
        const RatMatrix& inv = ctx.inc_inv[static_cast<size_t>(j - 1)];
        for (long a = 0; a < cnt; ++a) {
            Rat acc(0);
            for (long d = 0; d < cnt; ++d)
                if (inv[static_cast<size_t>(a)][static_cast<size_t>(d)] != 0)
                    acc += inv[static_cast<size_t>(a)][static_cast<size_t>(d)] * Rat(v[static_cast<size_t>(off + d)]);
            acc /= Rat(c[static_cast<size_t>(j - 1)]);
            acc.canonicalize();
            z[static_cast<size_t>(off + a)] = acc;
        }
    }
    // u = P0^T z
    std::vector<Rat> u(static_cast<size_t>(n), Rat(0));
    for (long r = 0; r < n; ++r)
        for (long cidx = 0; cidx < n; ++cidx)
            if (ctx.P0[static_cast<size_t>(r)][static_cast<size_t>(cidx)] != 0 && z[static_cast<size_t>(r)] != 0)
                u[static_cast<size_t>(cidx)] += Rat(ctx.P0[static_cast<size_t>(r)][static_cast<size_t>(cidx)]) * z[static_cast<size_t>(r)];
    for (Rat& x : u) x.canonicalize();
    return u;
}

}  // namespace

std::shared_ptr<const OrbitIndex> orbit_index_for(long k, long m, long q, SubspaceOrdering ord) {
    require_km(k, m);
    if (ord == SubspaceOrdering::PaperK2M3Q2) {
        if (k != 2 || m != 3 || q != 2)
            throw std::invalid_argument("orbit_index_for: the published ordering only covers k=2, m=3, q=2");
        return std::make_shared<const OrbitIndex>(OrbitIndex::from_list(3, paper_order_k2m3q2()));
    }
    return std::make_shared<const OrbitIndex>(OrbitIndex::lexicographic(m, k, field(q)));
}

WStructure build_W0(long k, long m, long q, const WeightTable& w, SubspaceOrdering ord) {
    require_km(k, m);
    if (w.family() != Family::Matrix || w.k() != k || w.q() != q)
        throw std::invalid_argument("build_W0: weight family mismatch");
    const SolveContext& ctx = solve_context(k, m, q, ord);
    long n = ctx.orbits->count() - 1;
    WStructure ws{k, m, q, ord, ctx.orbits, IntMatrix(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n))),
                  ctx.P0};
    for (long x = 1; x <= n; ++x)
        for (long t = 1; t <= n; ++t)
            ws.W0[static_cast<size_t>(x - 1)][static_cast<size_t>(t - 1)] =
                w.class_weight(ctx.prt[static_cast<size_t>(x)][static_cast<size_t>(t)]);
    return ws;
}

IntMatrix build_P0(const OrbitIndex& orbits) {
    long n = orbits.count() - 1;
    long q = orbits.at(0).field().q();
    IntMatrix P0(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), Int(0)));
    for (long a = 1; a <= n; ++a) {
        const Subspace& alpha = orbits.at(a);
        for (long b = 1; b <= n; ++b) {
            const Subspace& beta = orbits.at(b);
            if (beta.dim() > alpha.dim()) continue;  // triangular under the rank grouping
            if (alpha.contains(beta))
                P0[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)] = moebius_subspace(beta.dim(), q);
        }
    }
    return P0;
}

std::vector<Int> block_diagonalize(const WStructure& ws) {
    const OrbitIndex& ox = *ws.orbits;
    const SolveContext& ctx = solve_context(ws.k, ws.m, ws.q, ws.ordering);
    IntMatrix M = mat_mul(mat_mul(ws.P0, ws.W0), mat_transpose(ws.P0));
    std::vector<Int> c(static_cast<size_t>(ws.k), Int(0));
    std::vector<bool> have(static_cast<size_t>(ws.k + 1), false);
    long n = ox.count() - 1;
    for (long a = 1; a <= n; ++a)
        for (long d = 1; d <= n; ++d) {
            const Int& v = M[static_cast<size_t>(a - 1)][static_cast<size_t>(d - 1)];
            long da = ox.at(a).dim(), dd = ox.at(d).dim();
            if (da != dd) {
                if (v != 0) throw std::logic_error("block_diagonalize: off-block entry is nonzero");
                continue;
            }
            bool incident = ctx.prt[static_cast<size_t>(a)][static_cast<size_t>(d)] == da;
            if (!incident) {
                if (v != 0) throw std::logic_error("block_diagonalize: zero-incidence entry is nonzero");
                continue;
            }
            if (!have[da]) {
                c[static_cast<size_t>(da - 1)] = v;
                have[da] = true;
            } else if (c[static_cast<size_t>(da - 1)] != v) {
                throw std::logic_error("block_diagonalize: block is not a constant multiple of the incidence matrix");
            }
        }
    return c;
}

IntMatrix build_Wbar(long k, long m, long q, const WeightTable& w, const Int& w0) {
    require_km(k, m);
    IntMatrix M(static_cast<size_t>(k + 1), std::vector<Int>(static_cast<size_t>(k + 1), Int(0)));
    for (long i = 0; i <= k; ++i)
        for (long j = 0; j <= k; ++j) {
            Int acc = 0;
            for (long d = 0; d <= i; ++d) {
                if (d > m - j || i - d > j) continue;  // vanishing binomials
                Int count = int_pow(q, static_cast<unsigned long>((i - d) * (m - j - d))) * qbinom(m - j, d, q) *
                            qbinom(j, i - d, q);
                const Int& wv = (i - d == 0) ? w0 : w.class_weight(i - d);
                acc += count * wv;
            }
            M[static_cast<size_t>(i)][static_cast<size_t>(j)] = acc;
        }
    return M;
}

IntMatrix build_Wbar0(long k, long m, long q, const WeightTable& w) {
    IntMatrix full = build_Wbar(k, m, q, w, Int(0));
    IntMatrix M(static_cast<size_t>(k), std::vector<Int>(static_cast<size_t>(k)));
    for (long i = 1; i <= k; ++i)
        for (long j = 1; j <= k; ++j)
            M[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = full[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return M;
}

IntMatrix q0_left(long k, long m, long q) {
    IntMatrix Q(static_cast<size_t>(k), std::vector<Int>(static_cast<size_t>(k), Int(0)));
    for (long i = 1; i <= k; ++i)
        for (long j = 1; j <= k; ++j) {
            Int v = int_pow(q, choose2(j)) * qbinom(m - j, i - j, q);
            Q[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = (j % 2 == 0) ? v : -v;
        }
    return Q;
}

IntMatrix q0_right(long k, long q) {
    IntMatrix Q(static_cast<size_t>(k), std::vector<Int>(static_cast<size_t>(k), Int(0)));
    for (long i = 1; i <= k; ++i)
        for (long j = 1; j <= k; ++j) {
            Int v = int_pow(q, choose2(i)) * qbinom(j, i, q);
            Q[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = (i % 2 == 0) ? v : -v;
        }
    return Q;
}

Int omega_locally_constant(long j, long i, long k, long m, long q, const WeightTable& w) {
    require_km(k, m);
    if (j < 0 || j > k || i < 0 || i > k) throw std::invalid_argument("omega_locally_constant: rank out of range");
    Int acc = 0;
    for (long d = 0; d <= std::min(j, m - i); ++d) {
        Int count = int_pow(q, static_cast<unsigned long>((m - i - d) * (j - d))) * qbinom(m - i, d, q) *
                    qbinom(i, j - d, q);
        acc += count * w.class_weight(j - d);
    }
    return acc;
}

IntMatrix ann_matrix(long k, long q) {
    IntMatrix A(static_cast<size_t>(k + 1), std::vector<Int>(static_cast<size_t>(k + 1)));
    for (long i = 0; i <= k; ++i)
        for (long j = 0; j <= k; ++j) A[static_cast<size_t>(i)][static_cast<size_t>(j)] = ann_count(i, j, k, q);
    return A;
}

IntMatrix sann_matrix(long k, long q) {
    IntMatrix A(static_cast<size_t>(k), std::vector<Int>(static_cast<size_t>(k)));
    for (long i = 1; i <= k; ++i)
        for (long j = 1; j <= k; ++j)
            A[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = ann_count(i, j, k, q) - ann_count(i, 0, k, q);
    return A;
}

std::vector<Int> singleton_deltas(const std::vector<Int>& delta_eta_bar, long k, long q) {
    if (static_cast<long>(delta_eta_bar.size()) != k)
        throw std::invalid_argument("singleton_deltas: expected rank sums over 1..k");
    return mat_vec(sann_matrix(k, q), delta_eta_bar);
}

SwapPair build_swap(long s, long k, long m, long q, const WeightTable& w, SubspaceOrdering ord) {
    require_km(k, m);
    if (s < 1 || s >= k) throw std::invalid_argument("build_swap: need 1 <= s < k");
    if (m <= k) throw std::invalid_argument("build_swap: need m > k");
    if (w.family() != Family::Matrix || w.k() != k || w.q() != q)
        throw std::invalid_argument("build_swap: weight family mismatch");
    std::vector<Int> c_coeffs = c_coefficients(w);
    for (const Int& c : c_coeffs)
        if (c == 0)
            throw std::domain_error("build_swap: degenerate weight (use build_degenerate_pair)");

    const SolveContext& ctx = solve_context(k, m, q, ord);
    const OrbitIndex& ox = *ctx.orbits;
    long n = ox.count() - 1;

    // anchor orbits
    long lambda0 = -1, yidx = -1;
    std::vector<long> xs;
    long need = 0;
    {
        Int cnt = int_pow(q, static_cast<unsigned long>(k)) - int_pow(q, static_cast<unsigned long>(s));
        if (!cnt.fits_slong_p()) throw std::domain_error("build_swap: too many swap orbits");
        need = cnt.get_si();
    }
    if (ord == SubspaceOrdering::PaperK2M3Q2 && s == 1) {
        // published example anchors: lambda_0 is the fourth rank-1 orbit,
        // the swapped rank-1 orbits are the second and third, and the
        // rank-2 orbit is the last one
        lambda0 = ox.first_of_dim(1) + 3;
        xs = {ox.first_of_dim(1) + 1, ox.first_of_dim(1) + 2};
        yidx = ox.first_of_dim(2) + 6;
    } else {
        lambda0 = ox.first_of_dim(1);
        Subspace L0perp = ox.at(lambda0).perp();
        for (long t = ox.first_of_dim(s); t < ox.first_of_dim(s) + ox.count_of_dim(s); ++t) {
            if (static_cast<long>(xs.size()) == need) break;
            if (!L0perp.contains(ox.at(t))) xs.push_back(t);
        }
        for (long t = ox.first_of_dim(s + 1); t < ox.first_of_dim(s + 1) + ox.count_of_dim(s + 1); ++t)
            if (L0perp.contains(ox.at(t))) {
                yidx = t;
                break;
            }
    }
    if (static_cast<long>(xs.size()) != need || yidx < 0)
        throw std::logic_error("build_swap: not enough anchor subspaces");

    std::vector<Int> varsigma(static_cast<size_t>(n), Int(0));
    for (long t : xs) varsigma[static_cast<size_t>(t - 1)] = -1;
    varsigma[static_cast<size_t>(yidx - 1)] = 1;

    // sigma = c w_1 W0^{-1} varsigma with the smallest positive integral c
    std::vector<Rat> u = solve_W0(ctx, k, c_coeffs, varsigma);
    const Int& w1 = w.class_weight(1);
    Int cscale = 1;
    for (Rat& r : u) {
        r *= Rat(w1);
        r.canonicalize();
        Int den = r.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), cscale.get_mpz_t(), den.get_mpz_t());
        cscale = cscale / g * den;  // lcm
    }
    std::vector<Int> sigma(static_cast<size_t>(n));
    for (long t = 0; t < n; ++t) {
        Rat v = u[static_cast<size_t>(t)] * Rat(cscale);
        v.canonicalize();
        if (v.get_den() != 1) throw std::logic_error("build_swap: sigma failed to clear denominators");
        sigma[static_cast<size_t>(t)] = v.get_num();
    }
    // verify W0 sigma = c w_1 varsigma directly against the weight matrix
    {
        WStructure ws = build_W0(k, m, q, w, ord);
        std::vector<Int> lhs = mat_vec(ws.W0, sigma);
        for (long t = 0; t < n; ++t)
            if (lhs[static_cast<size_t>(t)] != cscale * w1 * varsigma[static_cast<size_t>(t)])
                throw std::logic_error("build_swap: W0 sigma != c w1 varsigma");
    }

    Int delta = 0, sigmin = 0;
    for (const Int& v : sigma) {
        delta += v;
        if (v < sigmin) sigmin = v;
    }

    Int alpha_lo = 0, alpha_hi = 0;
    for (long j = 1; j <= k; ++j) {
        alpha_lo += omega_locally_constant(j, s, k, m, q, w);
        alpha_hi += omega_locally_constant(j, s + 1, k, m, q, w);
    }

    Int a = 1;
    if (sigmin < 0) {
        Int need_a;
        mpz_cdiv_q(need_a.get_mpz_t(), Int(-sigmin).get_mpz_t(), w1.get_mpz_t());
        if (need_a > a) a = need_a;
    }

    Int qpow = int_pow(q, static_cast<unsigned long>(m - s - 1));
    Int b = 0;
    {
        Int diff = a * (alpha_lo - alpha_hi);
        if (diff >= 0) {
            mpz_fdiv_q(b.get_mpz_t(), diff.get_mpz_t(), qpow.get_mpz_t());
            b += 1;
        }
    }

    for (;;) {
        Int lam_coeff = cscale + a * (alpha_hi - alpha_lo) + b * qpow;
        std::vector<Int> etaC(static_cast<size_t>(n + 1), Int(0)), etaD(static_cast<size_t>(n + 1), Int(0));
        etaC[0] = delta > 0 ? delta : Int(0);
        etaD[0] = delta < 0 ? -delta : Int(0);
        for (long t = 1; t <= n; ++t) {
            Int v = a * w1;
            if (ox.at(t).dim() == 1) v += b;
            if (t == lambda0) v += lam_coeff;
            etaC[static_cast<size_t>(t)] = v;
            etaD[static_cast<size_t>(t)] = v + sigma[static_cast<size_t>(t - 1)];
            if (etaC[static_cast<size_t>(t)] < 0 || etaD[static_cast<size_t>(t)] < 0)
                throw std::logic_error("build_swap: negative multiplicity");
        }
        MatrixCode C(k, m, field(q), ctx.orbits, etaC);
        MatrixCode D(k, m, field(q), ctx.orbits, etaD);
        if (C.kernel_size() == 1 && D.kernel_size() == 1) {
            Int lenC = C.length(), lenD = D.length();
            if (lenC != lenD) throw std::logic_error("build_swap: lengths differ");
            return SwapPair{s,       k,        m,
                            q,       ord,      lambda0,
                            yidx,    xs,       std::move(varsigma),
                            std::move(sigma),  cscale,
                            a,       b,        delta,
                            alpha_lo, alpha_hi, lenC,
                            std::move(C), std::move(D)};
        }
        b += 1;  // a larger b restores injectivity (all rank-1 functionals present)
    }
}

DegeneratePair build_degenerate_pair(long j, long k, long m, long q, const WeightTable& w, SubspaceOrdering ord) {
    require_km(k, m);
    if (j < 2 || j > k) throw std::invalid_argument("build_degenerate_pair: need 2 <= j <= k");
    std::vector<Int> c = c_coefficients(w);
    if (c[static_cast<size_t>(j - 1)] != 0)
        throw std::invalid_argument("build_degenerate_pair: c_j is nonzero for this weight");

    const SolveContext& ctx = solve_context(k, m, q, ord);
    const OrbitIndex& ox = *ctx.orbits;
    long n = ox.count() - 1;
    long gamma = ox.first_of_dim(j);

    std::vector<Int> etaP(static_cast<size_t>(n + 1), Int(0)), etaM(static_cast<size_t>(n + 1), Int(0));
    const Subspace& G = ox.at(gamma);
    for (long t = 1; t <= n; ++t) {
        const Subspace& beta = ox.at(t);
        if (beta.dim() > j || !G.contains(beta)) continue;
        Int mu = moebius_subspace(beta.dim(), q);
        if (mu > 0)
            etaP[static_cast<size_t>(t)] = mu;
        else
            etaM[static_cast<size_t>(t)] = -mu;
    }
    // pad both with the same minimal set of rank-1 functionals until the
    // supports span F_q^m (the supports of both parts span gamma already)
    Subspace span = G;
    for (long t = ox.first_of_dim(1); t < ox.first_of_dim(1) + ox.count_of_dim(1) && span.dim() < m; ++t) {
        if (span.contains(ox.at(t))) continue;
        etaP[static_cast<size_t>(t)] += 1;
        etaM[static_cast<size_t>(t)] += 1;
        span = span.sum(ox.at(t));
    }
    if (span.dim() < m) throw std::logic_error("build_degenerate_pair: could not reach an injective presentation");
    etaP[0] = 1;  // balances the lengths (alternating q-binomial sum)

    MatrixCode plus(k, m, field(q), ctx.orbits, etaP);
    MatrixCode minus(k, m, field(q), ctx.orbits, etaM);
    Int lenP = plus.length(), lenM = minus.length();
    if (lenP != lenM) throw std::logic_error("build_degenerate_pair: lengths differ");
    if (plus.kernel_size() != 1 || minus.kernel_size() != 1)
        throw std::logic_error("build_degenerate_pair: presentation not injective");
    return DegeneratePair{j, k, m, q, ord, gamma, lenP, std::move(plus), std::move(minus)};
}

namespace {

// singleton contribution vector of an ordered pair (C, D) of equal length
std::vector<Int> pair_contribs(const MatrixCode& C, const MatrixCode& D, long k, long q) {
    std::vector<Int> barC = C.rank_sums(), barD = D.rank_sums();
    std::vector<Int> diff(static_cast<size_t>(k));
    for (long i = 1; i <= k; ++i)
        diff[static_cast<size_t>(i - 1)] = barD[static_cast<size_t>(i)] - barC[static_cast<size_t>(i)];
    return singleton_deltas(diff, k, q);
}

}  // namespace

Verdict classify_matrix(const WeightTable& w) {
    if (w.family() != Family::Matrix) throw std::invalid_argument("classify_matrix: matrix-family weight required");
    long k = w.k(), q = w.q();
    long m = k + 1;

    if (w.is_hamming_multiple())
        return Verdict::respects("hamming-multiple", "all ranks share one value");
    if (k == 2 && q == 2 && w.class_weight(1) == 2 * w.class_weight(2))
        return Verdict::respects("binary-2x2-homogeneous",
                                 "multiple of the homogeneous weight on 2x2 binary matrices");

    MinWeightData mw = min_weight(w);
    auto fails = [&](std::string rule, long s, long j, Int d, Int delta) {
        if (delta == 0) throw std::logic_error("classify_matrix: witness delta vanished under rule " + rule);
        Verdict v;
        v.kind = Verdict::Kind::Fails;
        v.rule = std::move(rule);
        v.s = s;
        v.j = j;
        v.m = m;
        v.d = std::move(d);
        v.delta = std::move(delta);
        return v;
    };
    auto sum_over = [&](const std::vector<Int>& contribs, const std::vector<long>& idx) {
        Int acc = 0;
        for (long i : idx) acc += contribs[static_cast<size_t>(i - 1)];
        return acc;
    };

    if (is_nondegenerate(w)) {
        // a weight value d with minw <= d < 2 minw whose index set avoids
        // rank k gives a guaranteed witness at s = max I_d
        long best_s = -1;
        Int best_d = 0;
        std::set<Int> values(w.values().begin(), w.values().end());
        for (const Int& v : values) {
            if (v < mw.wmin || v >= 2 * mw.wmin) continue;
            std::vector<long> idx = weight_index_set(w, v);
            if (std::find(idx.begin(), idx.end(), k) != idx.end()) continue;
            long s = idx.back();
            if (best_s < 0 || s < best_s || (s == best_s && v < best_d)) {
                best_s = s;
                best_d = v;
            }
        }
        if (best_s >= 1) {
            SwapPair sp = build_swap(best_s, k, m, q, w);
            std::vector<Int> contribs = pair_contribs(sp.C, sp.D, k, q);
            Int delta = sum_over(contribs, weight_index_set(w, best_d));
            return fails("swap-construction", best_s, 0, best_d, delta);
        }
        // every admissible d meets rank k; compare at the minimum weight,
        // where higher-rank swaps can still separate the duals
        for (long s = k - 1; s >= 1; --s) {
            SwapPair sp = build_swap(s, k, m, q, w);
            std::vector<Int> contribs = pair_contribs(sp.C, sp.D, k, q);
            Int delta = sum_over(contribs, mw.index_set);
            if (delta != 0) return fails("swap-construction", s, 0, mw.wmin, delta);
        }
        return Verdict::unknown(k <= 3 ? "swap-scan-exhausted" : "rank4-unclassified",
                                "no singleton-window witness from the swap constructions");
    }

    // degenerate weight: use the kernel-row construction at the smallest
    // vanishing block
    std::vector<Int> cs = c_coefficients(w);
    long jstar = 0;
    for (long j = 2; j <= k; ++j)
        if (cs[static_cast<size_t>(j - 1)] == 0) {
            jstar = j;
            break;
        }
    DegeneratePair dp = build_degenerate_pair(jstar, k, m, q, w);
    std::vector<Int> contribs = pair_contribs(dp.plus, dp.minus, k, q);
    std::set<Int> values(w.values().begin(), w.values().end());
    for (const Int& v : values) {
        if (v < mw.wmin || v >= 2 * mw.wmin) continue;
        Int delta = sum_over(contribs, weight_index_set(w, v));
        if (delta != 0) return fails("degenerate-pair", 0, jstar, v, delta);
    }
    if (k == 3 && jstar == 3)
        return Verdict::unknown("rank3-degenerate-unsettled",
                                "the top-block degeneracy with all small-weight differences vanishing is open");
    return Verdict::unknown("degenerate-scan-exhausted",
                            "no singleton-window witness from the degenerate construction");
}

bool verify_matrix_witness(const Verdict& v, const WeightTable& w, long maxlen) {
    if (v.kind != Verdict::Kind::Fails) return true;
    const MatrixCode* C = nullptr;
    const MatrixCode* D = nullptr;
    std::optional<SwapPair> sp;
    std::optional<DegeneratePair> dp;
    if (v.s > 0) {
        sp.emplace(build_swap(v.s, w.k(), v.m, w.q(), w));
        C = &sp->C;
        D = &sp->D;
    } else {
        dp.emplace(build_degenerate_pair(v.j, w.k(), v.m, w.q(), w));
        C = &dp->plus;
        D = &dp->minus;
    }
    if (C->wwe(w) != D->wwe(w)) return false;
    if (C->length() > maxlen) return true;
    if (!v.d.fits_slong_p()) return false;
    long d = v.d.get_si();
    WWEnumerator dc = dual_wwe_prefix(*C, w, d);
    WWEnumerator dd = dual_wwe_prefix(*D, w, d);
    return dd.coefficient(d) - dc.coefficient(d) == v.delta;
}

}  // namespace wdual
