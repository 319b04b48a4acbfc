#include <doctest.h>

#include <set>
#include <vector>

#include "wdual/codes.hpp"
#include "wdual/matrixring.hpp"

using namespace wdual;

namespace {

std::vector<Subspace> all_subspaces(long m, long q) {
    OrbitIndex idx = OrbitIndex::lexicographic(m, m, field(q));
    std::vector<Subspace> out;
    for (long t = 0; t < idx.count(); ++t) out.push_back(idx.at(t));
    return out;
}

}  // namespace

TEST_CASE("rref and rank") {
    auto F = field(2);
    FqMatrix zero(F, 2, 3);
    CHECK(zero.rank() == 0);
    FqMatrix eye(F, 2, 2);
    eye(0, 0) = eye(1, 1) = 1;
    CHECK(eye.rank() == 2);
    FqMatrix r1(F, 2, 3);
    r1(0, 0) = 1;
    r1(0, 2) = 1;
    FqMatrix red = r1;
    CHECK(red.rref() == 1);
    CHECK(red == r1);  // already in reduced form
}

TEST_CASE("subspace enumeration counts") {
    CHECK(OrbitIndex::lexicographic(3, 2, field(2)).count() == 15);  // 1 + 7 + 7
    CHECK(OrbitIndex::lexicographic(2, 2, field(2)).count() == 5);   // 1 + 3 + 1
    CHECK(OrbitIndex::lexicographic(1, 0, field(3)).count() == 1);
    for (long q : {2L, 3L})
        for (long m = 1; m <= 5; ++m) {
            OrbitIndex idx = OrbitIndex::lexicographic(m, m, field(q));
            for (long d = 0; d <= m; ++d) CHECK(Int(idx.count_of_dim(d)) == qbinom(m, d, q));
        }
    // independent brute force: row spaces of all d x m matrices
    for (long q : {2L, 3L}) {
        long mmax = q == 2 ? 4 : 3;
        for (long m = 1; m <= mmax; ++m)
            for (long d = 0; d <= m; ++d) {
                auto F = field(q);
                std::set<std::string> seen;
                std::vector<int> entries(static_cast<size_t>(d * m), 0);
                for (;;) {
                    FqMatrix mat(F, d, m);
                    for (long r = 0; r < d; ++r)
                        for (long c = 0; c < m; ++c) mat(r, c) = entries[static_cast<size_t>(r * m + c)];
                    if (mat.rank() == d) {
                        std::vector<std::vector<int>> rows;
                        FqMatrix red = mat;
                        red.rref();
                        for (long r = 0; r < d; ++r) {
                            rows.emplace_back();
                            for (long c = 0; c < m; ++c) rows.back().push_back(red(r, c));
                        }
                        seen.insert(Subspace(F, m, rows).key());
                    }
                    size_t i = 0;
                    while (i < entries.size() && entries[i] == q - 1) entries[i++] = 0;
                    if (i == entries.size()) break;
                    ++entries[i];
                }
                if (d == 0) seen.insert("0");
                CHECK(Int(static_cast<long>(seen.size())) == qbinom(m, d, q));
            }
    }
}

TEST_CASE("perp, sum, intersect") {
    auto F = field(2);
    Subspace zero(F, 3, {});
    CHECK(zero.perp().dim() == 3);
    Subspace e1(F, 3, {{1, 0, 0}});
    Subspace p = e1.perp();
    CHECK(p.dim() == 2);
    CHECK(p.contains({0, 1, 0}));
    CHECK(p.contains({0, 0, 1}));
    CHECK_FALSE(p.contains({1, 0, 0}));

    for (long q : {2L, 3L})
        for (long m = 1; m <= 4; ++m) {
            auto subs = all_subspaces(m, q);
            for (const Subspace& X : subs) {
                CHECK(X.perp().perp() == X);
                CHECK(X.perp().dim() == m - X.dim());
            }
            if (m <= 3)
                for (const Subspace& X : subs)
                    for (const Subspace& Y : subs) CHECK(X.intersect(Y).perp() == X.perp().sum(Y.perp()));
        }
    Subspace amb2(field(2), 2, {{1, 0}});
    CHECK_THROWS_AS(e1.sum(amb2), std::invalid_argument);
}

TEST_CASE("rank of the evaluation pairing") {
    auto F = field(2);
    Subspace zero(F, 3, {});
    Subspace any(F, 3, {{1, 1, 0}, {0, 0, 1}});
    CHECK(rank_of_pairing(any, zero) == 0);
    Subspace v101(F, 3, {{1, 0, 1}});
    CHECK(rank_of_pairing(v101, v101) == 0);  // self-orthogonal line
    Subspace e1(F, 3, {{1, 0, 0}});
    CHECK(rank_of_pairing(e1, e1) == 1);
    // the two dimension formulas agree on every pair
    for (long q : {2L, 3L})
        for (long m = 1; m <= 4; ++m) {
            auto subs = all_subspaces(m, q);
            for (const Subspace& X : subs)
                for (const Subspace& Y : subs) {
                    long lhs = X.dim() - X.intersect(Y.perp()).dim();
                    long rhs = Y.dim() - Y.intersect(X.perp()).dim();
                    CHECK(lhs == rhs);
                    CHECK(lhs == rank_of_pairing(X, Y));
                }
        }
}

TEST_CASE("counting subspaces with a fixed intersection") {
    long q = 2;
    for (long v = 1; v <= 4; ++v) {
        auto subs = all_subspaces(v, q);
        for (const Subspace& D : subs) {
            long d = D.dim();
            for (long b = 0; b <= v; ++b)
                for (long j = 0; j <= std::min(b, d); ++j) {
                    long count = 0;
                    for (const Subspace& B : subs)
                        if (B.dim() == b && B.intersect(D).dim() == j) ++count;
                    Int expect = int_pow(q, static_cast<unsigned long>((b - j) * (d - j))) * qbinom(d, j, q) *
                                 qbinom(v - d, b - j, q);
                    CHECK(Int(count) == expect);
                }
        }
    }
}

TEST_CASE("orbit sizes of rank-j matrices") {
    CHECK(orbit_size_matrix(1, 2, 2) == 3);
    CHECK(orbit_size_matrix(2, 2, 2) == 6);
    CHECK(orbit_size_matrix(0, 5, 3) == 1);
    for (long q : {2L, 3L})
        for (long k = 1; k <= 4; ++k)
            for (long j = 0; j < k; ++j)
                CHECK(orbit_size_matrix(j + 1, k, q) ==
                      orbit_size_matrix(j, k, q) *
                          (int_pow(q, static_cast<unsigned long>(k)) - int_pow(q, static_cast<unsigned long>(j))));
}

TEST_CASE("annihilator counts") {
    // full k=2 table at q=2 and the symbolic entries
    std::vector<std::vector<long>> expect{{1, 1, 1}, {9, 3, 0}, {6, 0, 0}};
    for (long i = 0; i <= 2; ++i)
        for (long j = 0; j <= 2; ++j)
            CHECK(ann_count(i, j, 2, 2) == expect[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    for (long q : {2L, 3L, 5L}) {
        CHECK(ann_count(1, 0, 2, q) == (q * q - 1) * (q + 1));
        CHECK(ann_count(1, 1, 2, q) == q * q - 1);
        CHECK(ann_count(2, 0, 2, q) == (q * q - 1) * (q * q - q));
        CHECK(ann_count(2, 1, 2, q) == 0);
        for (long j = 0; j <= 2; ++j) CHECK(ann_count(0, j, 2, q) == 1);
    }
    // brute force for k = 2: count rank-i ring elements annihilating one
    // rank-j functional representative
    for (long q : {2L, 3L}) {
        auto F = field(q);
        MatrixRingOps ops(2, F);
        for (long j = 0; j <= 2; ++j) {
            FqMatrix lam(F, 2, 2);
            for (long t = 0; t < j; ++t) lam(t, t) = 1;
            for (long i = 0; i <= 2; ++i) {
                long count = 0;
                for (std::uint64_t r = 0; r < ops.size(); ++r) {
                    if (ops.rank(r) != i) continue;
                    if (lam.mul(ops.decode(r)).rank() == 0) ++count;
                }
                CHECK(Int(count) == ann_count(i, j, 2, q));
            }
        }
    }
}

TEST_CASE("rank partition Kravchuk matrix") {
    auto K = rank_kravchuk(2, 2);
    std::vector<std::vector<long>> expect{{1, 1, 1}, {9, 1, -3}, {6, -2, 2}};
    for (long i = 0; i <= 2; ++i)
        for (long j = 0; j <= 2; ++j)
            CHECK(K[static_cast<size_t>(i)][static_cast<size_t>(j)] == expect[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    // symbolic k=2 entries for several q
    for (long q : {2L, 3L, 4L, 5L}) {
        auto Kq = rank_kravchuk(2, q);
        CHECK(Kq[1][0] == (q * q - 1) * (q + 1));
        CHECK(Kq[1][1] == q * q - q - 1);
        CHECK(Kq[1][2] == -q - 1);
        CHECK(Kq[2][0] == (q * q - q) * (q * q - 1));
        CHECK(Kq[2][1] == -(q * q) + q);
        CHECK(Kq[2][2] == q);
    }
    // column j = 0 lists the total counts per rank
    CHECK(K[0][0] == 1);
    CHECK(K[1][0] == 9);
    CHECK(K[2][0] == 6);
    // column sums: character orthogonality over the whole ring
    for (long q : {2L, 3L, 4L})
        for (long k = 1; k <= 4; ++k) {
            auto Kk = rank_kravchuk(k, q);
            for (long j = 0; j <= k; ++j) {
                Int sum = 0;
                for (long i = 0; i <= k; ++i) sum += Kk[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (j == 0)
                    CHECK(sum == int_pow(q, static_cast<unsigned long>(k * k)));
                else
                    CHECK(sum == 0);
            }
        }
}

TEST_CASE("rank Kravchuk against brute-force character sums over 2x2 binary matrices") {
    auto F = field(2);
    MatrixRingOps ops(2, F);
    auto K = rank_kravchuk(2, 2);
    for (long j = 0; j <= 2; ++j) {
        FqMatrix r(F, 2, 2);
        for (long t = 0; t < j; ++t) r(t, t) = 1;
        std::uint64_t rc = ops.encode(r);
        std::vector<long> sums(3, 0);
        for (std::uint64_t s = 0; s < ops.size(); ++s) {
            int tr = ops.trace(ops.mul(s, rc));
            sums[static_cast<size_t>(ops.rank(s))] += (tr == 0 ? 1 : -1);
        }
        for (long i = 0; i <= 2; ++i) CHECK(K[static_cast<size_t>(i)][static_cast<size_t>(j)] == sums[static_cast<size_t>(i)]);
    }
}

TEST_CASE("extension fields accept user-supplied moduli") {
    // x^2 + x + 1 over F_2 builds F_4
    Fq f4(2, {1, 1, 1});
    CHECK(f4.q() == 4);
    CHECK(f4.mul(2, 3) == 1);  // x(x+1) = x^2 + x = 1
    // a reducible polynomial is rejected
    CHECK_THROWS_AS(Fq(2, std::vector<int>{0, 0, 1}), std::invalid_argument);   // x^2
    CHECK_THROWS_AS(Fq(2, std::vector<int>{1, 0, 1}), std::invalid_argument);   // (x+1)^2
    // non-monic rejected
    CHECK_THROWS_AS(Fq(3, std::vector<int>{1, 1, 2}), std::invalid_argument);
    // ambient mismatch in the pairing is rejected
    auto F = field(2);
    Subspace a(F, 3, {{1, 0, 0}});
    Subspace b(F, 2, {{1, 0}});
    CHECK_THROWS_AS(rank_of_pairing(a, b), std::invalid_argument);
}

TEST_CASE("subspace keys round-trip") {
    auto F = field(3);
    auto subs = all_subspaces(3, 3);
    for (const Subspace& s : subs) CHECK(subspace_from_key(F, 3, s.key()) == s);
}
