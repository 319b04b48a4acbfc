#include "wdual/weights.hpp"

#include <stdexcept>

#include "wdual/matrixring.hpp"

namespace wdual {

WeightTable::WeightTable(Family f, long q, long mk, std::vector<Int> values)
    : family_(f), q_(q), mk_(mk), values_(std::move(values)) {
    require_prime_power(q_);
    if (mk_ < 1) throw std::invalid_argument("WeightTable: need m >= 1 / k >= 1");
    if (static_cast<long>(values_.size()) != mk_)
        throw std::invalid_argument("WeightTable: expected " + std::to_string(mk_) + " values");
    for (const Int& v : values_)
        if (v <= 0) throw std::invalid_argument("WeightTable: stored values must be positive");
}

WeightTable WeightTable::chain(long q, long m, std::vector<Int> values) {
    return WeightTable(Family::Chain, q, m, std::move(values));
}

WeightTable WeightTable::matrix(long q, long k, std::vector<Int> values) {
    return WeightTable(Family::Matrix, q, k, std::move(values));
}

const Int& WeightTable::class_weight(long i) const {
    if (family_ == Family::Chain) {
        if (i < 0 || i > mk_) throw std::invalid_argument("class_weight: class out of range");
        return i == mk_ ? zero_ : values_[static_cast<size_t>(i)];
    }
    if (i < 0 || i > mk_) throw std::invalid_argument("class_weight: rank out of range");
    return i == 0 ? zero_ : values_[static_cast<size_t>(i - 1)];
}

Int WeightTable::max_value() const {
    Int m = 0;
    for (const Int& v : values_)
        if (v > m) m = v;
    return m;
}

WeightTable WeightTable::scaled(const Int& c) const {
    if (c < 1) throw std::invalid_argument("WeightTable::scaled: factor must be >= 1");
    std::vector<Int> v = values_;
    for (Int& x : v) x *= c;
    return WeightTable(family_, q_, mk_, std::move(v));
}

bool WeightTable::is_hamming_multiple() const {
    for (const Int& v : values_)
        if (v != values_.front()) return false;
    return true;
}

WeightTable hamming_chain(long q, long m) { return WeightTable::chain(q, m, std::vector<Int>(static_cast<size_t>(m), 1)); }

WeightTable hamming_matrix(long q, long k) {
    return WeightTable::matrix(q, k, std::vector<Int>(static_cast<size_t>(k), 1));
}

WeightTable homogeneous_chain(long q, long m) {
    std::vector<Int> v(static_cast<size_t>(m), Int(q - 1));
    v[static_cast<size_t>(m - 1)] = q;
    return WeightTable::chain(q, m, std::move(v));
}

WeightTable homogeneous_matrix(long k, long q) {
    // zeta = (q^k - 1)(q^{k-1} - 1)...(q - 1)/q
    Int num = 1;
    for (long t = 1; t <= k; ++t) num *= int_pow(q, static_cast<unsigned long>(t)) - 1;
    Rat zeta = make_rat(num, Int(q));
    std::vector<Int> v;
    for (long rho = 1; rho <= k; ++rho) {
        Int den = 1;
        for (long t = k - rho + 1; t <= k; ++t) den *= int_pow(q, static_cast<unsigned long>(t)) - 1;
        Rat inner = 1 - make_rat(rho % 2 == 0 ? Int(1) : Int(-1), den);
        Rat w = zeta * inner;
        if (w.get_den() != 1) throw std::logic_error("homogeneous_matrix: non-integer value under the stated zeta");
        v.push_back(w.get_num());
    }
    return WeightTable::matrix(q, k, std::move(v));
}

EpsilonData epsilons(const WeightTable& w) {
    if (w.family() != Family::Chain) throw std::invalid_argument("epsilons: chain family only");
    long m = w.m();
    EpsilonData e;
    for (long i = 1; i <= m; ++i) e.eps.push_back(w.class_weight(i) - w.class_weight(i - 1));
    for (long i = 1; i <= m - 1; ++i) {
        if (i <= m - 2)
            e.eps_prime.push_back(e.eps[static_cast<size_t>(i - 1)]);
        else
            e.eps_prime.push_back(Int(w.q()) * e.eps[static_cast<size_t>(m - 2)] + e.eps[static_cast<size_t>(m - 1)]);
    }
    return e;
}

MinWeightData min_weight(const WeightTable& w) {
    MinWeightData d;
    d.wmin = w.values().front();
    for (const Int& v : w.values())
        if (v < d.wmin) d.wmin = v;
    d.index_set = weight_index_set(w, d.wmin);
    return d;
}

std::vector<long> weight_index_set(const WeightTable& w, const Int& d) {
    std::vector<long> idx;
    long base = w.family() == Family::Chain ? 0 : 1;
    for (long i = 0; i < static_cast<long>(w.values().size()); ++i)
        if (w.values()[static_cast<size_t>(i)] == d) idx.push_back(i + base);
    return idx;
}

std::vector<Int> c_coefficients(const WeightTable& w) {
    if (w.family() != Family::Matrix) throw std::invalid_argument("c_coefficients: matrix family only");
    long k = w.k(), q = w.q();
    std::vector<Int> c;
    for (long j = 1; j <= k; ++j) {
        Int inner = 0;
        for (long l = 1; l <= j; ++l) {
            Int term = int_pow(q, choose2(l)) * qbinom(j, l, q) * w.class_weight(l);
            if (l % 2 == 0)
                inner += term;
            else
                inner -= term;
        }
        Int cj = int_pow(q, choose2(j)) * inner;
        if (j % 2 != 0) cj = -cj;
        c.push_back(cj);
    }
    return c;
}

bool is_nondegenerate(const WeightTable& w) {
    for (const Int& c : c_coefficients(w))
        if (c == 0) return false;
    return true;
}

std::optional<Rat> egalitarian_check(const WeightTable& w) {
    long q = w.q();
    std::optional<Rat> gamma;
    if (w.family() == Family::Chain) {
        long m = w.m();
        // nonzero ideals are (theta^j), j = 0..m-1, of size q^{m-j};
        // orb(theta^i) has size q^{m-i-1}(q-1)
        for (long j = 0; j < m; ++j) {
            Int total = 0;
            for (long i = j; i < m; ++i)
                total += int_pow(q, static_cast<unsigned long>(m - i - 1)) * (q - 1) * w.class_weight(i);
            Rat g = make_rat(total, int_pow(q, static_cast<unsigned long>(m - j)));
            if (!gamma)
                gamma = g;
            else if (*gamma != g)
                return std::nullopt;
        }
    } else {
        long k = w.k();
        // one cyclic module R r per rank j; |R r| = q^{kj}; it contains
        // [j over i]_q * S_i elements of rank i
        for (long j = 1; j <= k; ++j) {
            Int total = 0;
            for (long i = 1; i <= j; ++i)
                total += qbinom(j, i, q) * orbit_size_matrix(i, k, q) * w.class_weight(i);
            Rat g = make_rat(total, int_pow(q, static_cast<unsigned long>(k * j)));
            if (!gamma)
                gamma = g;
            else if (*gamma != g)
                return std::nullopt;
        }
    }
    return gamma;
}

}  // namespace wdual
