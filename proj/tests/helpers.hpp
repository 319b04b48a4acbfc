#ifndef WDUAL_TEST_HELPERS_HPP
#define WDUAL_TEST_HELPERS_HPP

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "wdual/chaingap.hpp"
#include "wdual/matrixgap.hpp"

// Shared brute-force machinery for the positive MacWilliams identities and
// the oracle-equivalence checks.  Everything here recomputes enumerators
// from first principles (codeword iteration over explicit ring elements) so
// it stays independent of the library's orbit-based paths.

namespace wdual_test {

using namespace wdual;

using Word = std::vector<ChainRing::Elem>;

// all distinct submodules of R^n spanned by up to `gens` generators
inline std::vector<std::vector<Word>> enumerate_chain_codes(const ChainRing& ring, long n, long gens) {
    std::uint64_t R = ring.size_u64();
    std::uint64_t vecs = 1;
    for (long i = 0; i < n; ++i) vecs *= R;
    auto decode = [&](std::uint64_t code) {
        Word w(static_cast<size_t>(n));
        for (long i = 0; i < n; ++i) {
            w[static_cast<size_t>(i)] = code % R;
            code /= R;
        }
        return w;
    };
    std::set<std::vector<Word>> seen;
    std::vector<std::uint64_t> pick(static_cast<size_t>(gens), 0);
    for (;;) {
        std::set<Word> span;
        std::vector<std::uint64_t> coeff(static_cast<size_t>(gens), 0);
        for (;;) {
            Word acc(static_cast<size_t>(n), 0);
            for (long g = 0; g < gens; ++g) {
                Word base = decode(pick[static_cast<size_t>(g)]);
                for (long i = 0; i < n; ++i)
                    acc[static_cast<size_t>(i)] = ring.add(
                        acc[static_cast<size_t>(i)], ring.mul(coeff[static_cast<size_t>(g)], base[static_cast<size_t>(i)]));
            }
            span.insert(std::move(acc));
            size_t gi = 0;
            while (gi < coeff.size() && coeff[gi] == R - 1) coeff[gi++] = 0;
            if (gi == coeff.size()) break;
            ++coeff[gi];
        }
        seen.insert(std::vector<Word>(span.begin(), span.end()));
        size_t pi = 0;
        while (pi < pick.size() && pick[pi] == vecs - 1) pick[pi++] = 0;
        if (pi == pick.size()) break;
        ++pick[pi];
    }
    return std::vector<std::vector<Word>>(seen.begin(), seen.end());
}

inline WWEnumerator chain_words_howe(const ChainRing& ring, const std::vector<Word>& words, const WeightTable& w) {
    WWEnumerator out;
    for (const Word& x : words) {
        long s = 0;
        for (ChainRing::Elem e : x) s += static_cast<long>(w.class_weight(ring.valuation(e)).get_si());
        out.add(s, 1);
    }
    return out;
}

inline std::vector<Word> chain_brute_dual(const ChainRing& ring, const std::vector<Word>& code, long n) {
    std::uint64_t R = ring.size_u64();
    std::vector<Word> dual;
    std::vector<std::uint64_t> digit(static_cast<size_t>(n), 0);
    for (;;) {
        Word y(digit.begin(), digit.end());
        bool ok = true;
        for (const Word& x : code) {
            ChainRing::Elem dot = 0;
            for (long i = 0; i < n; ++i)
                dot = ring.add(dot, ring.mul(x[static_cast<size_t>(i)], y[static_cast<size_t>(i)]));
            if (dot != 0) {
                ok = false;
                break;
            }
        }
        if (ok) dual.push_back(std::move(y));
        size_t i = 0;
        while (i < digit.size() && digit[i] == R - 1) digit[i++] = 0;
        if (i == digit.size()) break;
        ++digit[i];
    }
    return dual;
}

// checks the binary substitution identity howe_{C-perp}(X, Y) =
// (1/|C|) howe_C(X + aY, X - Y) for every submodule generated by up to
// `gens` generators; returns the number of codes checked, -1 on failure
inline long check_chain_binary_identity(const ChainRing& ring, long n, long gens, const WeightTable& w,
                                        const Int& a) {
    long wmax = static_cast<long>(w.max_value().get_si());
    auto codes = enumerate_chain_codes(ring, n, gens);
    for (const auto& code : codes) {
        WWEnumerator primal = chain_words_howe(ring, code, w);
        auto dual = chain_brute_dual(ring, code, n);
        WWEnumerator dual_howe = chain_words_howe(ring, dual, w);
        WWEnumerator predicted =
            mw_binary_substitution(primal, n * wmax, a, Int(static_cast<long>(code.size())));
        if (!(predicted == dual_howe)) return -1;
    }
    return static_cast<long>(codes.size());
}

// ---- matrix side ----

using MWord = std::vector<std::uint64_t>;  // entries are MatrixRingOps codes

struct M22 {
    MatrixRingOps ops{2, field(2)};
    std::vector<std::vector<std::uint64_t>> mul_table;
    std::vector<long> rank_of;

    M22() {
        mul_table.assign(16, std::vector<std::uint64_t>(16));
        rank_of.assign(16, 0);
        for (std::uint64_t a = 0; a < 16; ++a) {
            rank_of[static_cast<size_t>(a)] = ops.rank(a);
            for (std::uint64_t b = 0; b < 16; ++b) mul_table[static_cast<size_t>(a)][static_cast<size_t>(b)] = ops.mul(a, b);
        }
    }
};

inline const M22& m22() {
    static const M22 instance;
    return instance;
}

// left span of the given generator words in R^n, R = M_{2x2}(F_2)
inline std::vector<MWord> m22_span(const std::vector<MWord>& gens, long n) {
    const M22& R = m22();
    std::set<MWord> span;
    std::vector<std::uint64_t> coeff(gens.size(), 0);
    for (;;) {
        MWord acc(static_cast<size_t>(n), 0);
        for (size_t g = 0; g < gens.size(); ++g)
            for (long i = 0; i < n; ++i)
                acc[static_cast<size_t>(i)] = R.ops.add(
                    acc[static_cast<size_t>(i)], R.mul_table[static_cast<size_t>(coeff[g])][static_cast<size_t>(gens[g][static_cast<size_t>(i)])]);
        span.insert(std::move(acc));
        size_t gi = 0;
        while (gi < coeff.size() && coeff[gi] == 15) coeff[gi++] = 0;
        if (gi == coeff.size()) break;
        ++coeff[gi];
    }
    return std::vector<MWord>(span.begin(), span.end());
}

inline WWEnumerator m22_howe(const std::vector<MWord>& words, const WeightTable& w) {
    const M22& R = m22();
    WWEnumerator out;
    for (const MWord& x : words) {
        long s = 0;
        for (std::uint64_t e : x) s += static_cast<long>(w.class_weight(R.rank_of[static_cast<size_t>(e)]).get_si());
        out.add(s, 1);
    }
    return out;
}

inline std::vector<MWord> m22_brute_dual(const std::vector<MWord>& gens, long n) {
    const M22& R = m22();
    std::vector<MWord> dual;
    std::vector<std::uint64_t> digit(static_cast<size_t>(n), 0);
    for (;;) {
        bool ok = true;
        for (const MWord& g : gens) {
            std::uint64_t dot = 0;
            for (long i = 0; i < n; ++i)
                dot = R.ops.add(dot, R.mul_table[static_cast<size_t>(g[static_cast<size_t>(i)])][static_cast<size_t>(digit[static_cast<size_t>(i)])]);
            if (dot != 0) {
                ok = false;
                break;
            }
        }
        if (ok) dual.emplace_back(digit.begin(), digit.end());
        size_t i = 0;
        while (i < digit.size() && digit[i] == 15) digit[i++] = 0;
        if (i == digit.size()) break;
        ++digit[i];
    }
    return dual;
}

// identity howe_{C-perp}(X,Y) = (1/|C|) howe_C(X+3Y, X-Y) on `count`
// random codes of length <= 3; returns false on the first failure
inline bool check_m22_homog_identity(long count, unsigned seed) {
    WeightTable w = homogeneous_matrix(2, 2);
    std::mt19937 rng(seed);
    for (long t = 0; t < count; ++t) {
        long n = 1 + static_cast<long>(rng() % 3);
        long gens = 1 + static_cast<long>(rng() % 2);
        std::vector<MWord> g(static_cast<size_t>(gens), MWord(static_cast<size_t>(n)));
        for (auto& row : g)
            for (auto& e : row) e = rng() % 16;
        auto code = m22_span(g, n);
        WWEnumerator primal = m22_howe(code, w);
        WWEnumerator dual_howe = m22_howe(m22_brute_dual(g, n), w);
        WWEnumerator predicted =
            mw_binary_substitution(primal, 2 * n, Int(3), Int(static_cast<long>(code.size())));
        if (!(predicted == dual_howe)) return false;
    }
    return true;
}

// random multiplicity-function codes for the oracle-equivalence checks
inline ChainCode random_chain_code(std::mt19937& rng, long q, long m, long max_total) {
    long p, e;
    prime_power(q, p, e);
    ChainRing ring = e == 1 ? ChainRing::integers_mod(q, m) : ChainRing::poly_quotient(q, m);
    long k = 1 + static_cast<long>(rng() % static_cast<unsigned long>(m));
    bool cyclic = rng() % 2 == 0;
    long budget = max_total;
    if (cyclic) {
        std::vector<Int> mult(static_cast<size_t>(k), Int(0));
        for (long j = 0; j < k && budget > 0; ++j) {
            long c = static_cast<long>(rng() % 3);
            c = std::min(c, budget);
            mult[static_cast<size_t>(j)] = c;
            budget -= c;
        }
        if (mult == std::vector<Int>(static_cast<size_t>(k), Int(0))) mult[0] = 1;
        return ChainCode::cyclic(ring, k, mult, Int(rng() % 2));
    }
    std::map<std::vector<int>, Int> mult;
    auto orbits = sk_functional_orbits(k, q);
    for (const auto& mu : orbits) {
        if (budget <= 0) break;
        long c = static_cast<long>(rng() % 2);
        c = std::min(c, budget);
        if (c > 0) {
            mult[mu] = c;
            budget -= c;
        }
    }
    if (mult.empty()) mult[orbits.front()] = 1;
    return ChainCode::semisimple(ring, k, std::move(mult), Int(rng() % 2));
}

inline MatrixCode random_matrix_code(std::mt19937& rng, long k, long m, long q, long max_total) {
    auto orbits = orbit_index_for(k, m, q, SubspaceOrdering::Lex);
    std::vector<Int> mult(static_cast<size_t>(orbits->count()), Int(0));
    long budget = max_total;
    mult[0] = rng() % 2;
    while (budget > 0) {
        long t = static_cast<long>(rng() % static_cast<unsigned long>(orbits->count() - 1)) + 1;
        mult[static_cast<size_t>(t)] += 1;
        --budget;
        if (rng() % 3 == 0) break;
    }
    bool empty = true;
    for (long t = 1; t < orbits->count(); ++t) empty = empty && mult[static_cast<size_t>(t)] == 0;
    if (empty) mult[1] = 1;
    return MatrixCode(k, m, field(q), orbits, std::move(mult));
}

}  // namespace wdual_test

#endif
