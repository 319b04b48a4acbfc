#include "wdual/codes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wdual {

namespace {

long to_long(const Int& v, const char* what) {
    if (!v.fits_slong_p()) throw std::domain_error(std::string(what) + " exceeds machine range");
    return v.get_si();
}

unsigned long to_ulong(const Int& v, const char* what) {
    if (v < 0 || !v.fits_ulong_p()) throw std::domain_error(std::string(what) + " out of range");
    return v.get_ui();
}

}  // namespace

std::vector<std::vector<int>> pairing_rank_table(const OrbitIndex& orbits) { return orbits.pairing_ranks(); }

std::vector<std::vector<int>> sk_functional_orbits(long k, long q) {
    std::vector<std::vector<int>> out;
    for (long i = 0; i <= k - 1; ++i) {
        // B_i: mu_{k-i} = 1, higher entries 0, lower entries free (mu_1 is
        // the least significant digit of the enumeration)
        long free_count = k - i - 1;
        std::uint64_t total = 1;
        for (long t = 0; t < free_count; ++t) total *= static_cast<std::uint64_t>(q);
        for (std::uint64_t code = 0; code < total; ++code) {
            std::vector<int> mu(static_cast<size_t>(k), 0);
            std::uint64_t c = code;
            for (long t = 0; t < free_count; ++t) {
                mu[static_cast<size_t>(t)] = static_cast<int>(c % static_cast<std::uint64_t>(q));
                c /= static_cast<std::uint64_t>(q);
            }
            mu[static_cast<size_t>(k - i - 1)] = 1;
            out.push_back(std::move(mu));
        }
    }
    return out;
}

long sk_level(const std::vector<int>& mu) {
    long k = static_cast<long>(mu.size());
    for (long pos = k - 1; pos >= 0; --pos)
        if (mu[static_cast<size_t>(pos)] != 0) return k - 1 - pos;
    return k;
}

ChainCode::ChainCode(ChainRing ring, Module mod, long k) : ring_(std::move(ring)), module_(mod), k_(k) {
    if (k_ < 1 || k_ > ring_.m()) throw std::invalid_argument("ChainCode: need 1 <= k <= m");
}

ChainCode ChainCode::cyclic(ChainRing ring, long k, std::vector<Int> mult, Int zero_mult) {
    ChainCode c(std::move(ring), Module::Cyclic, k);
    if (static_cast<long>(mult.size()) != k) throw std::invalid_argument("ChainCode::cyclic: expected k multiplicities");
    for (const Int& v : mult)
        if (v < 0) throw std::invalid_argument("ChainCode: negative multiplicity");
    if (zero_mult < 0) throw std::invalid_argument("ChainCode: negative zero multiplicity");
    c.zk_mult_ = std::move(mult);
    c.zero_mult_ = std::move(zero_mult);
    return c;
}

ChainCode ChainCode::semisimple(ChainRing ring, long k, std::map<std::vector<int>, Int> mult, Int zero_mult) {
    ChainCode c(std::move(ring), Module::Semisimple, k);
    for (const auto& [mu, v] : mult) {
        if (static_cast<long>(mu.size()) != k) throw std::invalid_argument("ChainCode: mu has wrong length");
        if (sk_level(mu) >= k) throw std::invalid_argument("ChainCode: zero functional goes in zero_mult");
        long last = -1;
        for (long i = 0; i < k; ++i) {
            int e = mu[static_cast<size_t>(i)];
            if (e < 0 || e >= c.ring_.q()) throw std::invalid_argument("ChainCode: mu entry out of range");
            if (e != 0) last = i;
        }
        if (mu[static_cast<size_t>(last)] != 1)
            throw std::invalid_argument("ChainCode: mu must be normalized (last nonzero entry 1)");
        if (v < 0) throw std::invalid_argument("ChainCode: negative multiplicity");
    }
    if (zero_mult < 0) throw std::invalid_argument("ChainCode: negative zero multiplicity");
    c.sk_mult_ = std::move(mult);
    c.zero_mult_ = std::move(zero_mult);
    return c;
}

Int ChainCode::length() const {
    Int n = zero_mult_;
    if (module_ == Module::Cyclic)
        for (const Int& v : zk_mult_) n += v;
    else
        for (const auto& [mu, v] : sk_mult_) n += v;
    return n;
}

Int ChainCode::efflength() const { return length() - zero_mult_; }

Int ChainCode::module_size() const { return int_pow(ring_.q(), static_cast<unsigned long>(k_)); }

Int ChainCode::kernel_size() const {
    long q = ring_.q();
    if (module_ == Module::Cyclic) {
        long jmin = k_;
        for (long j = 0; j < k_; ++j)
            if (zk_mult_[static_cast<size_t>(j)] > 0) {
                jmin = j;
                break;
            }
        return int_pow(q, static_cast<unsigned long>(jmin));
    }
    // rank of the span of the supported functionals over F_q
    auto F = field(q);
    std::vector<std::vector<int>> rows;
    for (const auto& [mu, v] : sk_mult_)
        if (v > 0) rows.push_back(mu);
    FqMatrix mat(F, static_cast<long>(rows.size()), k_);
    for (long r = 0; r < static_cast<long>(rows.size()); ++r)
        for (long c = 0; c < k_; ++c) mat(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
    long rk = mat.rref();
    return int_pow(q, static_cast<unsigned long>(k_ - rk));
}

Int ChainCode::code_size() const {
    Int ks = kernel_size();
    Int ms = module_size();
    Int cs;
    mpz_divexact(cs.get_mpz_t(), ms.get_mpz_t(), ks.get_mpz_t());
    return cs;
}

std::vector<Int> ChainCode::orbit_weights(const WeightTable& w) const {
    if (w.family() != Family::Chain || w.q() != ring_.q() || w.m() != ring_.m())
        throw std::invalid_argument("ChainCode::orbit_weights: weight family mismatch");
    long m = ring_.m();
    if (module_ == Module::Cyclic) {
        std::vector<Int> omega(static_cast<size_t>(k_ + 1));
        for (long i = 0; i <= k_; ++i) {
            Int acc = 0;
            for (long j = 0; j < k_; ++j)
                acc += zk_mult_[static_cast<size_t>(j)] * w.class_weight(std::min(i + m - k_ + j, m));
            omega[static_cast<size_t>(i)] = acc;
        }
        return omega;
    }
    auto F = field(ring_.q());
    auto reps = sk_functional_orbits(k_, ring_.q());
    std::vector<Int> omega;
    omega.push_back(0);  // zero orbit
    for (const auto& x : reps) {
        Int acc = 0;
        for (const auto& [mu, v] : sk_mult_) {
            int dot = 0;
            for (long i = 0; i < k_; ++i)
                dot = F->add(dot, F->mul(x[static_cast<size_t>(i)], mu[static_cast<size_t>(i)]));
            if (dot != 0) acc += v;
        }
        omega.push_back(acc * w.class_weight(m - 1));
    }
    return omega;
}

PartitionEnumerator ChainCode::se() const {
    long m = ring_.m();
    long q = ring_.q();
    std::map<PartitionEnumerator::Exponents, Int> acc;
    long n = to_long(length(), "code length");
    if (module_ == Module::Cyclic) {
        for (long i = 0; i <= k_; ++i) {
            PartitionEnumerator::Exponents e(static_cast<size_t>(m + 1), 0);
            for (long j = 0; j < k_; ++j)
                e[static_cast<size_t>(std::min(i + m - k_ + j, m))] +=
                    to_long(zk_mult_[static_cast<size_t>(j)], "multiplicity");
            e[static_cast<size_t>(m)] += to_long(zero_mult_, "multiplicity");
            Int size = i == k_ ? Int(1) : int_pow(q, static_cast<unsigned long>(k_ - i - 1)) * (q - 1);
            acc[e] += size;
        }
    } else {
        auto F = field(q);
        auto reps = sk_functional_orbits(k_, q);
        {
            PartitionEnumerator::Exponents e(static_cast<size_t>(m + 1), 0);
            e[static_cast<size_t>(m)] = n;
            acc[e] += 1;  // zero orbit
        }
        for (const auto& x : reps) {
            Int hit = 0;
            for (const auto& [mu, v] : sk_mult_) {
                int dot = 0;
                for (long i = 0; i < k_; ++i)
                    dot = F->add(dot, F->mul(x[static_cast<size_t>(i)], mu[static_cast<size_t>(i)]));
                if (dot != 0) hit += v;
            }
            PartitionEnumerator::Exponents e(static_cast<size_t>(m + 1), 0);
            long hits = to_long(hit, "multiplicity");
            e[static_cast<size_t>(m - 1)] = hits;
            e[static_cast<size_t>(m)] = n - hits;
            acc[e] += q - 1;
        }
    }
    PartitionEnumerator out(m + 1, n);
    Int ker = kernel_size();
    for (auto& [e, c] : acc) {
        if (!mpz_divisible_p(c.get_mpz_t(), ker.get_mpz_t()))
            throw std::logic_error("ChainCode::se: kernel division not exact");
        Int v;
        mpz_divexact(v.get_mpz_t(), c.get_mpz_t(), ker.get_mpz_t());
        out.add_term(e, v);
    }
    return out;
}

WWEnumerator ChainCode::wwe(const WeightTable& w) const {
    std::vector<Int> omega = orbit_weights(w);
    long q = ring_.q();
    std::map<long, Int> acc;
    if (module_ == Module::Cyclic) {
        for (long i = 0; i <= k_; ++i) {
            Int size = i == k_ ? Int(1) : int_pow(q, static_cast<unsigned long>(k_ - i - 1)) * (q - 1);
            acc[to_long(omega[static_cast<size_t>(i)], "orbit weight")] += size;
        }
    } else {
        acc[0] += 1;
        for (size_t t = 1; t < omega.size(); ++t) acc[to_long(omega[t], "orbit weight")] += q - 1;
    }
    Int ker = kernel_size();
    WWEnumerator out;
    for (auto& [d, c] : acc) {
        if (!mpz_divisible_p(c.get_mpz_t(), ker.get_mpz_t()))
            throw std::logic_error("ChainCode::wwe: kernel division not exact");
        Int v;
        mpz_divexact(v.get_mpz_t(), c.get_mpz_t(), ker.get_mpz_t());
        out.add(d, v);
    }
    return out;
}

std::vector<std::vector<ChainRing::Elem>> ChainCode::generator_rows() const {
    long m = ring_.m();
    std::vector<std::vector<ChainRing::Elem>> rows;
    if (module_ == Module::Cyclic) {
        std::vector<ChainRing::Elem> row;
        for (long j = 0; j < k_; ++j) {
            unsigned long reps = to_ulong(zk_mult_[static_cast<size_t>(j)], "multiplicity");
            for (unsigned long r = 0; r < reps; ++r) row.push_back(ring_.theta_pow(m - k_ + j));
        }
        unsigned long zr = to_ulong(zero_mult_, "multiplicity");
        for (unsigned long r = 0; r < zr; ++r) row.push_back(0);
        rows.push_back(std::move(row));
        return rows;
    }
    rows.assign(static_cast<size_t>(k_), {});
    ChainRing::Elem tpow = ring_.theta_pow(m - 1);
    auto append_column = [&](const std::vector<int>& mu) {
        for (long r = 0; r < k_; ++r)
            rows[static_cast<size_t>(r)].push_back(
                ring_.mul(ring_.lift_residue(mu[static_cast<size_t>(r)]), tpow));
    };
    for (const auto& mu : sk_functional_orbits(k_, ring_.q())) {
        auto it = sk_mult_.find(mu);
        if (it == sk_mult_.end()) continue;
        unsigned long reps = to_ulong(it->second, "multiplicity");
        for (unsigned long r = 0; r < reps; ++r) append_column(mu);
    }
    unsigned long zr = to_ulong(zero_mult_, "multiplicity");
    for (unsigned long r = 0; r < zr; ++r)
        for (long i = 0; i < k_; ++i) rows[static_cast<size_t>(i)].push_back(0);
    return rows;
}

MatrixCode::MatrixCode(long k, long m, std::shared_ptr<const Fq> F, std::shared_ptr<const OrbitIndex> orbits,
                       std::vector<Int> mult)
    : k_(k), m_(m), F_(std::move(F)), orbits_(std::move(orbits)), mult_(std::move(mult)) {
    if (k_ < 1 || m_ < k_) throw std::invalid_argument("MatrixCode: need 1 <= k <= m");
    if (orbits_->ambient() != m_ || orbits_->maxdim() != k_)
        throw std::invalid_argument("MatrixCode: orbit index does not match (k, m)");
    if (static_cast<long>(mult_.size()) != orbits_->count())
        throw std::invalid_argument("MatrixCode: one multiplicity per orbit required");
    for (const Int& v : mult_)
        if (v < 0) throw std::invalid_argument("MatrixCode: negative multiplicity");
}

Int MatrixCode::length() const {
    Int n = 0;
    for (const Int& v : mult_) n += v;
    return n;
}

Int MatrixCode::efflength() const { return length() - mult_[0]; }

Int MatrixCode::module_size() const { return int_pow(F_->q(), static_cast<unsigned long>(k_ * m_)); }

Int MatrixCode::kernel_size() const {
    Subspace span(F_, m_, {});
    for (long t = 1; t < orbits_->count(); ++t)
        if (mult_[static_cast<size_t>(t)] > 0) span = span.sum(orbits_->at(t));
    return int_pow(F_->q(), static_cast<unsigned long>(k_ * (m_ - span.dim())));
}

Int MatrixCode::code_size() const {
    Int ks = kernel_size();
    Int ms = module_size();
    Int cs;
    mpz_divexact(cs.get_mpz_t(), ms.get_mpz_t(), ks.get_mpz_t());
    return cs;
}

std::vector<Int> MatrixCode::orbit_weights(const WeightTable& w) const {
    if (w.family() != Family::Matrix || w.q() != F_->q() || w.k() != k_)
        throw std::invalid_argument("MatrixCode::orbit_weights: weight family mismatch");
    const auto& prt = orbits_->pairing_ranks();
    std::vector<Int> omega(static_cast<size_t>(orbits_->count()));
    for (long x = 0; x < orbits_->count(); ++x) {
        Int acc = 0;
        for (long t = 0; t < orbits_->count(); ++t) {
            const Int& v = mult_[static_cast<size_t>(t)];
            if (v == 0) continue;
            acc += v * w.class_weight(prt[static_cast<size_t>(x)][static_cast<size_t>(t)]);
        }
        omega[static_cast<size_t>(x)] = acc;
    }
    return omega;
}

std::vector<Int> MatrixCode::rank_sums() const {
    std::vector<Int> bar(static_cast<size_t>(k_ + 1));
    for (long t = 0; t < orbits_->count(); ++t)
        bar[static_cast<size_t>(orbits_->at(t).dim())] += mult_[static_cast<size_t>(t)];
    return bar;
}

PartitionEnumerator MatrixCode::se() const {
    long n = to_long(length(), "code length");
    const auto& prt = orbits_->pairing_ranks();
    std::map<PartitionEnumerator::Exponents, Int> acc;
    for (long x = 0; x < orbits_->count(); ++x) {
        PartitionEnumerator::Exponents e(static_cast<size_t>(k_ + 1), 0);
        for (long t = 0; t < orbits_->count(); ++t) {
            const Int& v = mult_[static_cast<size_t>(t)];
            if (v == 0) continue;
            e[static_cast<size_t>(prt[static_cast<size_t>(x)][static_cast<size_t>(t)])] +=
                to_long(v, "multiplicity");
        }
        acc[e] += orbit_size_matrix(orbits_->at(x).dim(), k_, F_->q());
    }
    Int ker = kernel_size();
    PartitionEnumerator out(k_ + 1, n);
    for (auto& [e, c] : acc) {
        if (!mpz_divisible_p(c.get_mpz_t(), ker.get_mpz_t()))
            throw std::logic_error("MatrixCode::se: kernel division not exact");
        Int v;
        mpz_divexact(v.get_mpz_t(), c.get_mpz_t(), ker.get_mpz_t());
        out.add_term(e, v);
    }
    return out;
}

WWEnumerator MatrixCode::wwe(const WeightTable& w) const {
    std::vector<Int> omega = orbit_weights(w);
    std::map<long, Int> acc;
    for (long x = 0; x < orbits_->count(); ++x)
        acc[to_long(omega[static_cast<size_t>(x)], "orbit weight")] += orbit_size_matrix(orbits_->at(x).dim(), k_, F_->q());
    Int ker = kernel_size();
    WWEnumerator out;
    for (auto& [d, c] : acc) {
        if (!mpz_divisible_p(c.get_mpz_t(), ker.get_mpz_t()))
            throw std::logic_error("MatrixCode::wwe: kernel division not exact");
        Int v;
        mpz_divexact(v.get_mpz_t(), c.get_mpz_t(), ker.get_mpz_t());
        out.add(d, v);
    }
    return out;
}

std::vector<FqMatrix> MatrixCode::functional_columns() const {
    std::vector<FqMatrix> cols;
    for (long t = 0; t < orbits_->count(); ++t) {
        unsigned long reps = to_ulong(mult_[static_cast<size_t>(t)], "multiplicity");
        if (reps == 0) continue;
        const Subspace& Y = orbits_->at(t);
        FqMatrix lam(F_, m_, k_);
        for (long c = 0; c < Y.dim(); ++c)
            for (long r = 0; r < m_; ++r) lam(r, c) = Y.basis()[static_cast<size_t>(c)][static_cast<size_t>(r)];
        for (unsigned long r = 0; r < reps; ++r) cols.push_back(lam);
    }
    return cols;
}

namespace {

void check_budget(const Int& ring_size, size_t n, const Int& budget) {
    Int total;
    mpz_pow_ui(total.get_mpz_t(), ring_size.get_mpz_t(), static_cast<unsigned long>(n));
    if (total > budget)
        throw BudgetExceeded("brute-force search space " + total.get_str() + " exceeds budget " +
                             budget.get_str());
}

}  // namespace

WWEnumerator brute_force_dual_wwe(const ChainRing& ring, const std::vector<std::vector<ChainRing::Elem>>& rows,
                                  const WeightTable& w, const Int& budget) {
    if (rows.empty()) throw std::invalid_argument("brute_force_dual_wwe: no generator rows");
    size_t n = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != n) throw std::invalid_argument("brute_force_dual_wwe: ragged generator matrix");
    check_budget(ring.size(), n, budget);
    if (w.family() != Family::Chain || w.q() != ring.q() || w.m() != ring.m())
        throw std::invalid_argument("brute_force_dual_wwe: weight family mismatch");

    std::vector<long> wv(static_cast<size_t>(ring.m() + 1));
    for (long i = 0; i <= ring.m(); ++i) wv[static_cast<size_t>(i)] = to_long(w.class_weight(i), "weight value");

    std::uint64_t R = ring.size_u64();
    size_t nrows = rows.size();
    WWEnumerator out;
    // depth-first over positions, keeping the partial dot products per row
    std::vector<std::vector<ChainRing::Elem>> partial(n + 1, std::vector<ChainRing::Elem>(nrows, 0));
    std::vector<std::uint64_t> digit(n, 0);
    std::vector<long> wsum(n + 1, 0);
    size_t pos = 0;
    while (true) {
        if (pos == n) {
            bool zero = true;
            for (size_t r = 0; r < nrows; ++r)
                if (partial[n][r] != 0) {
                    zero = false;
                    break;
                }
            if (zero) out.add(wsum[n], 1);
            // backtrack
            while (pos > 0 && digit[pos - 1] == R - 1) --pos;
            if (pos == 0) break;
            ++digit[pos - 1];
            --pos;
        }
        ChainRing::Elem y = digit[pos];
        for (size_t r = 0; r < nrows; ++r)
            partial[pos + 1][r] = ring.add(partial[pos][r], ring.mul(rows[r][pos], y));
        wsum[pos + 1] = wsum[pos] + wv[static_cast<size_t>(ring.valuation(y))];
        ++pos;
        if (pos <= n - 1) digit[pos] = 0;
    }
    return out;
}

WWEnumerator brute_force_primal_wwe(const ChainRing& ring, const std::vector<std::vector<ChainRing::Elem>>& rows,
                                    const WeightTable& w, const Int& budget) {
    if (rows.empty()) throw std::invalid_argument("brute_force_primal_wwe: no generator rows");
    size_t n = rows.front().size();
    check_budget(ring.size(), rows.size(), budget);
    if (w.family() != Family::Chain || w.q() != ring.q() || w.m() != ring.m())
        throw std::invalid_argument("brute_force_primal_wwe: weight family mismatch");

    std::vector<long> wv(static_cast<size_t>(ring.m() + 1));
    for (long i = 0; i <= ring.m(); ++i) wv[static_cast<size_t>(i)] = to_long(w.class_weight(i), "weight value");

    std::uint64_t R = ring.size_u64();
    std::set<std::vector<ChainRing::Elem>> seen;
    std::vector<std::uint64_t> msg(rows.size(), 0);
    while (true) {
        std::vector<ChainRing::Elem> word(n, 0);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (msg[r] == 0) continue;
            for (size_t j = 0; j < n; ++j) word[j] = ring.add(word[j], ring.mul(msg[r], rows[r][j]));
        }
        seen.insert(std::move(word));
        size_t i = 0;
        while (i < rows.size() && msg[i] == R - 1) msg[i++] = 0;
        if (i == rows.size()) break;
        ++msg[i];
    }
    WWEnumerator out;
    for (const auto& word : seen) {
        long s = 0;
        for (ChainRing::Elem e : word) s += wv[static_cast<size_t>(ring.valuation(e))];
        out.add(s, 1);
    }
    return out;
}

WWEnumerator brute_force_dual_wwe(const MatrixCode& code, const WeightTable& w, const Int& budget) {
    if (w.family() != Family::Matrix || w.q() != code.q() || w.k() != code.k())
        throw std::invalid_argument("brute_force_dual_wwe: weight family mismatch");
    // functional_columns includes the zero functional as all-zero columns
    std::vector<FqMatrix> lams = code.functional_columns();
    size_t n = lams.size();
    long k = code.k(), m = code.m();
    auto F = field(code.q());
    MatrixRingOps ops(k, F);
    check_budget(Int(static_cast<unsigned long>(ops.size())), n, budget);

    std::vector<long> wv(static_cast<size_t>(k + 1));
    for (long i = 0; i <= k; ++i) wv[static_cast<size_t>(i)] = to_long(w.class_weight(i), "weight value");
    std::vector<long> rank_of(static_cast<size_t>(ops.size()));
    for (std::uint64_t a = 0; a < ops.size(); ++a) rank_of[static_cast<size_t>(a)] = ops.rank(a);

    // per position, precompute lambda_j * y for every ring element y
    size_t cells = static_cast<size_t>(m * k);
    std::vector<std::vector<std::vector<int>>> table(n);
    for (size_t j = 0; j < n; ++j) {
        table[j].assign(static_cast<size_t>(ops.size()), std::vector<int>(cells, 0));
        for (std::uint64_t a = 0; a < ops.size(); ++a) {
            FqMatrix prod = lams[j].mul(ops.decode(a));
            for (long r = 0; r < m; ++r)
                for (long c = 0; c < k; ++c)
                    table[j][static_cast<size_t>(a)][static_cast<size_t>(r * k + c)] = prod(r, c);
        }
    }

    WWEnumerator out;
    std::vector<std::vector<int>> partial(n + 1, std::vector<int>(cells, 0));
    std::vector<std::uint64_t> digit(n, 0);
    std::vector<long> wsum(n + 1, 0);
    size_t pos = 0;
    while (true) {
        if (pos == n) {
            bool zero = std::all_of(partial[n].begin(), partial[n].end(), [](int v) { return v == 0; });
            if (zero) out.add(wsum[n], 1);
            while (pos > 0 && digit[pos - 1] == ops.size() - 1) --pos;
            if (pos == 0) break;
            ++digit[pos - 1];
            --pos;
        }
        std::uint64_t y = digit[pos];
        const auto& add = table[pos][static_cast<size_t>(y)];
        for (size_t c = 0; c < cells; ++c) partial[pos + 1][c] = F->add(partial[pos][c], add[c]);
        wsum[pos + 1] = wsum[pos] + wv[static_cast<size_t>(rank_of[static_cast<size_t>(y)])];
        ++pos;
        if (pos <= n - 1) digit[pos] = 0;
    }
    return out;
}

WeightSum weight_sum_check(const ChainCode& code, const WeightTable& w) {
    long q = code.ring().q(), m = code.ring().m(), k = code.k();
    auto ideal_weight_sum = [&](long i0) {  // sum of w over (theta^{i0})
        Int acc = 0;
        for (long i = i0; i < m; ++i)
            acc += int_pow(q, static_cast<unsigned long>(m - i - 1)) * (q - 1) * w.class_weight(i);
        return acc;
    };
    Int lhs = 0;
    if (code.module_kind() == ChainCode::Module::Cyclic) {
        for (long j = 0; j < k; ++j)
            lhs += code.cyclic_mult()[static_cast<size_t>(j)] * int_pow(q, static_cast<unsigned long>(j)) *
                   ideal_weight_sum(m - k + j);
    } else {
        Int per = int_pow(q, static_cast<unsigned long>(k - 1)) * (q - 1) * w.class_weight(m - 1);
        for (const auto& [mu, v] : code.semisimple_mult()) lhs += v * per;
    }
    Int ker = code.kernel_size();
    if (!mpz_divisible_p(lhs.get_mpz_t(), ker.get_mpz_t()))
        throw std::logic_error("weight_sum_check: kernel division not exact");
    Int total;
    mpz_divexact(total.get_mpz_t(), lhs.get_mpz_t(), ker.get_mpz_t());

    WeightSum out{total, std::nullopt};
    if (auto gamma = egalitarian_check(w)) out.egalitarian_prediction = *gamma * Rat(code.code_size() * code.efflength());
    return out;
}

PartitionEnumerator dual_se(const ChainCode& code) {
    return macwilliams_transform(code.se(), code.ring().generalized_kravchuk(), code.code_size());
}

PartitionEnumerator dual_se(const MatrixCode& code) {
    return macwilliams_transform(code.se(), rank_kravchuk(code.k(), code.q()), code.code_size());
}

WWEnumerator dual_wwe(const ChainCode& code, const WeightTable& w) { return specialize(dual_se(code), w); }

WWEnumerator dual_wwe(const MatrixCode& code, const WeightTable& w) { return specialize(dual_se(code), w); }

WWEnumerator dual_wwe_prefix(const ChainCode& code, const WeightTable& w, long maxdeg) {
    return truncated_dual_wwe(code.se(), code.ring().generalized_kravchuk(), code.code_size(), w, maxdeg);
}

WWEnumerator dual_wwe_prefix(const MatrixCode& code, const WeightTable& w, long maxdeg) {
    return truncated_dual_wwe(code.se(), rank_kravchuk(code.k(), code.q()), code.code_size(), w, maxdeg);
}

WeightSum weight_sum_check(const MatrixCode& code, const WeightTable& w) {
    long q = code.q(), k = code.k(), m = code.m();
    auto module_weight_sum = [&](long j) {  // sum of w over a cyclic module of rank j
        Int acc = 0;
        for (long i = 1; i <= j; ++i) acc += qbinom(j, i, q) * orbit_size_matrix(i, k, q) * w.class_weight(i);
        return acc;
    };
    Int lhs = 0;
    for (long t = 1; t < code.orbits().count(); ++t) {
        const Int& v = code.mult()[static_cast<size_t>(t)];
        if (v == 0) continue;
        long j = code.orbits().at(t).dim();
        lhs += v * int_pow(q, static_cast<unsigned long>(k * (m - j))) * module_weight_sum(j);
    }
    Int ker = code.kernel_size();
    if (!mpz_divisible_p(lhs.get_mpz_t(), ker.get_mpz_t()))
        throw std::logic_error("weight_sum_check: kernel division not exact");
    Int total;
    mpz_divexact(total.get_mpz_t(), lhs.get_mpz_t(), ker.get_mpz_t());

    WeightSum out{total, std::nullopt};
    if (auto gamma = egalitarian_check(w)) out.egalitarian_prediction = *gamma * Rat(code.code_size() * code.efflength());
    return out;
}

}  // namespace wdual
