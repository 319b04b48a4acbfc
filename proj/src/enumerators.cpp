#include "wdual/enumerators.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace wdual {

void PartitionEnumerator::add_term(const Exponents& e, const Int& coeff) {
    if (static_cast<long>(e.size()) != classes_)
        throw std::invalid_argument("PartitionEnumerator: exponent vector has wrong arity");
    long total = 0;
    for (long v : e) {
        if (v < 0) throw std::invalid_argument("PartitionEnumerator: negative exponent");
        total += v;
    }
    if (total != length_) throw std::invalid_argument("PartitionEnumerator: exponents must sum to the length");
    if (coeff == 0) return;
    Int& slot = terms_[e];
    slot += coeff;
    if (slot == 0) terms_.erase(e);
}

Int PartitionEnumerator::coefficient_total() const {
    Int t = 0;
    for (const auto& [e, c] : terms_) t += c;
    return t;
}

std::string PartitionEnumerator::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (long i = 0; i < classes_; ++i) {
            long v = e[static_cast<size_t>(i)];
            if (v == 0) continue;
            os << " Z" << i;
            if (v > 1) os << "^" << v;
        }
    }
    if (first) os << "0";
    return os.str();
}

void WWEnumerator::add(long deg, const Int& coeff) {
    if (coeff == 0) return;
    Int& slot = terms_[deg];
    slot += coeff;
    if (slot == 0) terms_.erase(deg);
}

Int WWEnumerator::coefficient(long deg) const {
    auto it = terms_.find(deg);
    return it == terms_.end() ? Int(0) : it->second;
}

Int WWEnumerator::total() const {
    Int t = 0;
    for (const auto& [d, c] : terms_) t += c;
    return t;
}

bool WWEnumerator::prefix_equals(const WWEnumerator& o, long maxdeg) const {
    for (long d = 0; d <= maxdeg; ++d)
        if (coefficient(d) != o.coefficient(d)) return false;
    return true;
}

std::string WWEnumerator::to_string(long maxdeg) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (maxdeg >= 0 && d > maxdeg) break;
        if (!first) os << " + ";
        first = false;
        if (c != 1 || d == 0) os << c.get_str();
        if (d >= 1) {
            if (c != 1) os << " ";
            os << "t";
            if (d > 1) os << "^" << d;
        }
    }
    if (first) os << "0";
    if (maxdeg >= 0 && !terms_.empty() && terms_.rbegin()->first > maxdeg) os << " + ...";
    return os.str();
}

namespace {

// Dense homogeneous polynomials in c variables: a degree-t polynomial is a
// flat array indexed by the combinatorial rank of the exponent tail
// (e_1..e_{c-1}); the slack e_0 = t - sum is implicit.  The rank of a tail
// is sum_i binom(p_i, i) with p_i = e_1+...+e_i + i-1, which is independent
// of t, so multiplying by a linear form only ever shifts ranks forward.
class HomogExpander {
  public:
    HomogExpander(long classes, long maxdeg) : c_(classes) {
        Int guard;
        mpz_bin_uiui(guard.get_mpz_t(), static_cast<unsigned long>(maxdeg + classes - 1),
                     static_cast<unsigned long>(classes - 1));
        if (guard > Int(1) << 31) throw std::domain_error("macwilliams_transform: expansion too large");
        long n = maxdeg + classes + 2;
        pascal_.assign(static_cast<size_t>(n), std::vector<unsigned long long>(static_cast<size_t>(classes + 1), 0));
        for (long i = 0; i < n; ++i) {
            pascal_[static_cast<size_t>(i)][0] = 1;
            for (long j = 1; j <= std::min<long>(i, classes); ++j)
                pascal_[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    pascal_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                    (i - 1 >= j ? pascal_[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] : 0);
        }
    }

    unsigned long long size_of_degree(long t) const {
        return binom(t + c_ - 1, c_ - 1);  // number of tails with sum <= t
    }

    // rank of the tail of `e` (entries e[1]..e[c-1])
    size_t rank(const std::vector<long>& e) const {
        unsigned long long r = 0;
        long prefix = 0;
        for (long i = 1; i < c_; ++i) {
            prefix += e[static_cast<size_t>(i)];
            r += binom(prefix + i - 1, i);
        }
        return static_cast<size_t>(r);
    }

    // multiply a degree-t polynomial by the linear form sum_i L[i] Z_i
    std::vector<Int> mul_linear(const std::vector<Int>& poly, long t, const std::vector<Int>& L) const {
        std::vector<Int> out(static_cast<size_t>(size_of_degree(t + 1)));
        std::vector<long> e(static_cast<size_t>(c_), 0);  // e[0] is the slack
        e[0] = t;
        while (true) {
            size_t r = rank(e);
            const Int& v = poly[r];
            if (v != 0) {
                // Z_0 keeps the tail (slack absorbs the degree bump)
                if (L[0] != 0) mpz_addmul(out[r].get_mpz_t(), L[0].get_mpz_t(), v.get_mpz_t());
                unsigned long long rr = r;
                long prefix = 0;
                // walking i upward, rank(e + delta_i) = rank(e) +
                // sum_{j>=i} binom(p_j, j-1); accumulate from the back
                std::vector<unsigned long long> inc(static_cast<size_t>(c_), 0);
                for (long i = 1; i < c_; ++i) {
                    prefix += e[static_cast<size_t>(i)];
                    inc[static_cast<size_t>(i)] = binom(prefix + i - 1, i - 1);
                }
                unsigned long long suffix = 0;
                for (long i = c_ - 1; i >= 1; --i) {
                    suffix += inc[static_cast<size_t>(i)];
                    if (L[static_cast<size_t>(i)] != 0)
                        mpz_addmul(out[static_cast<size_t>(rr + suffix)].get_mpz_t(),
                                   L[static_cast<size_t>(i)].get_mpz_t(), v.get_mpz_t());
                }
            }
            // odometer over tails with sum <= t
            long i = 1;
            while (i < c_ && e[0] == 0) {
                e[0] += e[static_cast<size_t>(i)];
                e[static_cast<size_t>(i)] = 0;
                ++i;
            }
            if (i >= c_) break;
            --e[0];
            ++e[static_cast<size_t>(i)];
        }
        return out;
    }

    // expand coeff * prod_j (sum_i K[i][j] Z_i)^{exps[j]} to full degree
    std::vector<Int> expand(const std::vector<long>& exps, const Int& coeff,
                            const std::vector<std::vector<Int>>& K) const {
        std::vector<Int> poly{coeff};
        long t = 0;
        for (long j = 0; j < c_; ++j) {
            std::vector<Int> L(static_cast<size_t>(c_));
            for (long i = 0; i < c_; ++i) L[static_cast<size_t>(i)] = K[static_cast<size_t>(i)][static_cast<size_t>(j)];
            for (long rep = 0; rep < exps[static_cast<size_t>(j)]; ++rep) {
                poly = mul_linear(poly, t, L);
                ++t;
            }
        }
        return poly;
    }

  private:
    unsigned long long binom(long n, long k) const {
        if (k < 0 || n < 0 || k > n) return 0;
        return pascal_[static_cast<size_t>(n)][static_cast<size_t>(k)];
    }

    long c_;
    std::vector<std::vector<unsigned long long>> pascal_;
};

}  // namespace

PartitionEnumerator macwilliams_transform(const PartitionEnumerator& e, const std::vector<std::vector<Int>>& K,
                                          const Int& code_size) {
    long c = e.classes();
    if (static_cast<long>(K.size()) != c)
        throw std::invalid_argument("macwilliams_transform: Kravchuk matrix does not match the class count");
    for (const auto& row : K)
        if (static_cast<long>(row.size()) != c)
            throw std::invalid_argument("macwilliams_transform: Kravchuk matrix is not square");
    if (code_size <= 0 || e.coefficient_total() != code_size)
        throw std::invalid_argument("macwilliams_transform: code size does not match the coefficient total");

    long n = e.length();
    HomogExpander ex(c, n);

    // expand each primal monomial independently, then merge
    std::vector<const std::pair<const PartitionEnumerator::Exponents, Int>*> items;
    for (const auto& kv : e.terms()) items.push_back(&kv);

    std::vector<Int> acc(static_cast<size_t>(ex.size_of_degree(n)));
    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(items.size()));
    if (workers > 1 && n > 64) {
        std::vector<std::future<std::vector<Int>>> futs;
        for (const auto* kv : items)
            futs.push_back(std::async(std::launch::async, [&ex, &K, kv]() { return ex.expand(kv->first, kv->second, K); }));
        for (auto& f : futs) {
            std::vector<Int> part = f.get();
            for (size_t i = 0; i < acc.size(); ++i)
                if (part[i] != 0) acc[i] += part[i];
        }
    } else {
        for (const auto* kv : items) {
            std::vector<Int> part = ex.expand(kv->first, kv->second, K);
            for (size_t i = 0; i < acc.size(); ++i)
                if (part[i] != 0) acc[i] += part[i];
        }
    }

    // gather, dividing exactly by |C|
    PartitionEnumerator out(c, n);
    std::vector<long> exps(static_cast<size_t>(c), 0);
    exps[0] = n;
    while (true) {
        const Int& v = acc[ex.rank(exps)];
        if (v != 0) {
            if (!mpz_divisible_p(v.get_mpz_t(), code_size.get_mpz_t()))
                throw std::domain_error("macwilliams_transform: coefficient not divisible by |C|; "
                                        "input is not a linear code enumerator");
            Int q;
            mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), code_size.get_mpz_t());
            out.add_term(exps, q);
        }
        long i = 1;
        while (i < c && exps[0] == 0) {
            exps[0] += exps[static_cast<size_t>(i)];
            exps[static_cast<size_t>(i)] = 0;
            ++i;
        }
        if (i >= c) break;
        --exps[0];
        ++exps[static_cast<size_t>(i)];
    }
    return out;
}

WWEnumerator specialize(const PartitionEnumerator& e, const WeightTable& w) {
    if (w.classes() != e.classes())
        throw std::invalid_argument("specialize: class count does not match the weight family");
    WWEnumerator out;
    for (const auto& [exps, coeff] : e.terms()) {
        Int deg = 0;
        for (long i = 0; i < e.classes(); ++i) deg += Int(exps[static_cast<size_t>(i)]) * w.class_weight(i);
        if (!deg.fits_slong_p()) throw std::domain_error("specialize: weight degree exceeds machine range");
        out.add(deg.get_si(), coeff);
    }
    return out;
}

WWEnumerator truncated_dual_wwe(const PartitionEnumerator& e, const std::vector<std::vector<Int>>& K,
                                const Int& code_size, const WeightTable& w, long maxdeg) {
    if (maxdeg < 0) throw std::invalid_argument("truncated_dual_wwe: maxdeg must be >= 0");
    long c = e.classes();
    if (w.classes() != c) throw std::invalid_argument("truncated_dual_wwe: class count mismatch");
    if (code_size <= 0 || e.coefficient_total() != code_size)
        throw std::invalid_argument("truncated_dual_wwe: code size does not match the coefficient total");

    // column j of K specializes to the univariate polynomial
    // f_j(t) = sum_i K_{ij} t^{w_i}
    std::vector<std::vector<std::pair<long, Int>>> f(static_cast<size_t>(c));
    for (long j = 0; j < c; ++j) {
        std::map<long, Int> col;
        for (long i = 0; i < c; ++i) {
            const Int& wi = w.class_weight(i);
            if (!wi.fits_slong_p()) throw std::domain_error("truncated_dual_wwe: weight exceeds machine range");
            col[wi.get_si()] += K[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
        for (const auto& [d, v] : col)
            if (v != 0 && d <= maxdeg) f[static_cast<size_t>(j)].emplace_back(d, v);
    }

    std::vector<Int> acc(static_cast<size_t>(maxdeg + 1));
    for (const auto& [exps, coeff] : e.terms()) {
        std::vector<Int> poly(static_cast<size_t>(maxdeg + 1));
        poly[0] = coeff;
        long low = 0;  // lowest exponent that can still be nonzero
        for (long j = 0; j < c && low <= maxdeg; ++j) {
            const auto& form = f[static_cast<size_t>(j)];
            long minexp = form.empty() ? maxdeg + 1 : form.front().first;
            for (long rep = 0; rep < exps[static_cast<size_t>(j)] && low <= maxdeg; ++rep) {
                std::vector<Int> next(static_cast<size_t>(maxdeg + 1));
                for (long d = low; d <= maxdeg; ++d) {
                    if (poly[static_cast<size_t>(d)] == 0) continue;
                    for (const auto& [fd, fv] : form) {
                        if (d + fd > maxdeg) break;
                        mpz_addmul(next[static_cast<size_t>(d + fd)].get_mpz_t(), fv.get_mpz_t(),
                                   poly[static_cast<size_t>(d)].get_mpz_t());
                    }
                }
                poly.swap(next);
                low += minexp;
            }
        }
        for (long d = 0; d <= maxdeg; ++d)
            if (poly[static_cast<size_t>(d)] != 0) acc[static_cast<size_t>(d)] += poly[static_cast<size_t>(d)];
    }

    WWEnumerator out;
    for (long d = 0; d <= maxdeg; ++d) {
        const Int& v = acc[static_cast<size_t>(d)];
        if (v == 0) continue;
        if (!mpz_divisible_p(v.get_mpz_t(), code_size.get_mpz_t()))
            throw std::domain_error("truncated_dual_wwe: coefficient not divisible by |C|");
        Int q;
        mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), code_size.get_mpz_t());
        out.add(d, q);
    }
    return out;
}

WWEnumerator mw_binary_substitution(const WWEnumerator& primal, long total_degree, const Int& a,
                                    const Int& code_size) {
    long N = total_degree;
    if (N < primal.max_degree()) throw std::invalid_argument("mw_binary_substitution: total degree too small");
    std::vector<Int> acc(static_cast<size_t>(N + 1));
    // binomials as exact integers
    std::vector<std::vector<Int>> C(static_cast<size_t>(N + 1), std::vector<Int>(static_cast<size_t>(N + 1)));
    for (long i = 0; i <= N; ++i) {
        C[static_cast<size_t>(i)][0] = 1;
        for (long j = 1; j <= i; ++j)
            C[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                C[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                (j <= i - 1 ? C[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] : Int(0));
    }
    for (const auto& [j, Aj] : primal.terms()) {
        // (X + aY)^{N-j} (X - Y)^j at X=1, Y=t
        std::vector<Int> p1(static_cast<size_t>(N - j + 1));
        Int apow = 1;
        for (long i = 0; i <= N - j; ++i) {
            p1[static_cast<size_t>(i)] = C[static_cast<size_t>(N - j)][static_cast<size_t>(i)] * apow;
            apow *= a;
        }
        std::vector<Int> p2(static_cast<size_t>(j + 1));
        for (long i = 0; i <= j; ++i) {
            p2[static_cast<size_t>(i)] = C[static_cast<size_t>(j)][static_cast<size_t>(i)];
            if (i % 2 != 0) p2[static_cast<size_t>(i)] = -p2[static_cast<size_t>(i)];
        }
        for (long u = 0; u <= N - j; ++u)
            for (long v = 0; v <= j; ++v) acc[static_cast<size_t>(u + v)] += Aj * p1[static_cast<size_t>(u)] * p2[static_cast<size_t>(v)];
    }
    WWEnumerator out;
    for (long d = 0; d <= N; ++d) {
        if (acc[static_cast<size_t>(d)] == 0) continue;
        if (!mpz_divisible_p(acc[static_cast<size_t>(d)].get_mpz_t(), code_size.get_mpz_t()))
            throw std::domain_error("mw_binary_substitution: coefficient not divisible by |C|");
        Int q;
        mpz_divexact(q.get_mpz_t(), acc[static_cast<size_t>(d)].get_mpz_t(), code_size.get_mpz_t());
        out.add(d, q);
    }
    return out;
}

}  // namespace wdual
