#include "wdual/fq.hpp"

#include <map>
#include <mutex>

namespace wdual {

namespace {

const std::map<long, std::vector<int>>& builtin_moduli() {
    // monic irreducible over F_p, coefficients ascending
    static const std::map<long, std::vector<int>> table = {
        {4, {1, 1, 1}},        // x^2 + x + 1
        {8, {1, 1, 0, 1}},     // x^3 + x + 1
        {9, {2, 2, 1}},        // x^2 + 2x + 2
        {16, {1, 1, 0, 0, 1}}, // x^4 + x + 1
        {25, {2, 4, 1}},       // x^2 + 4x + 2
        {27, {1, 2, 0, 1}},    // x^3 + 2x + 1
    };
    return table;
}

}  // namespace

Fq::Fq(long q) {
    long p = 0, e = 0;
    if (!prime_power(q, p, e)) throw std::invalid_argument("Fq: q is not a prime power");
    if (e == 1) {
        q_ = p_ = q;
        e_ = 1;
        return;
    }
    auto it = builtin_moduli().find(q);
    if (it == builtin_moduli().end())
        throw std::invalid_argument("Fq: no built-in modulus for q = " + std::to_string(q) +
                                    "; supply an irreducible polynomial");
    p_ = p;
    e_ = e;
    q_ = q;
    modulus_ = it->second;
    build_tables();
}

Fq::Fq(long p, std::vector<int> modulus) : p_(p), modulus_(std::move(modulus)) {
    long pp, pe;
    if (!prime_power(p, pp, pe) || pe != 1) throw std::invalid_argument("Fq: p must be prime");
    e_ = static_cast<long>(modulus_.size()) - 1;
    if (e_ < 1) throw std::invalid_argument("Fq: modulus must have positive degree");
    for (int& c : modulus_) c = ((c % static_cast<int>(p)) + static_cast<int>(p)) % static_cast<int>(p);
    if (modulus_.back() != 1) throw std::invalid_argument("Fq: modulus must be monic");
    q_ = 1;
    for (long i = 0; i < e_; ++i) q_ *= p_;
    build_tables();
}

std::vector<int> Fq::coeffs(Elem a) const {
    std::vector<int> c(static_cast<size_t>(e_), 0);
    for (long i = 0; i < e_; ++i) {
        c[static_cast<size_t>(i)] = static_cast<int>(a % p_);
        a = static_cast<Elem>(a / p_);
    }
    return c;
}

Fq::Elem Fq::from_coeffs(const std::vector<int>& c) const {
    Elem a = 0;
    for (long i = e_ - 1; i >= 0; --i) {
        int d = i < static_cast<long>(c.size()) ? c[static_cast<size_t>(i)] : 0;
        d = ((d % static_cast<int>(p_)) + static_cast<int>(p_)) % static_cast<int>(p_);
        a = static_cast<Elem>(a * p_ + d);
    }
    return a;
}

Fq::Elem Fq::add(Elem a, Elem b) const {
    if (e_ == 1) return static_cast<Elem>((a + b) % p_);
    Elem r = 0, mult = 1;
    for (long i = 0; i < e_; ++i) {
        long da = (a / mult) % p_, db = (b / mult) % p_;
        r = static_cast<Elem>(r + ((da + db) % p_) * mult);
        mult = static_cast<Elem>(mult * p_);
    }
    return r;
}

Fq::Elem Fq::neg(Elem a) const {
    if (e_ == 1) return static_cast<Elem>((p_ - a) % p_);
    Elem r = 0, mult = 1;
    for (long i = 0; i < e_; ++i) {
        long da = (a / mult) % p_;
        r = static_cast<Elem>(r + ((p_ - da) % p_) * mult);
        mult = static_cast<Elem>(mult * p_);
    }
    return r;
}

Fq::Elem Fq::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Fq::Elem Fq::poly_mul(Elem a, Elem b) const {
    std::vector<int> ca = coeffs(a), cb = coeffs(b);
    std::vector<int> prod(static_cast<size_t>(2 * e_ - 1), 0);
    for (long i = 0; i < e_; ++i)
        for (long j = 0; j < e_; ++j)
            prod[static_cast<size_t>(i + j)] =
                static_cast<int>((prod[static_cast<size_t>(i + j)] +
                                  static_cast<long>(ca[static_cast<size_t>(i)]) * cb[static_cast<size_t>(j)]) %
                                 p_);
    // reduce mod the monic modulus
    for (long d = 2 * e_ - 2; d >= e_; --d) {
        int top = prod[static_cast<size_t>(d)];
        if (top == 0) continue;
        prod[static_cast<size_t>(d)] = 0;
        for (long i = 0; i < e_; ++i) {
            long idx = d - e_ + i;
            long v = prod[static_cast<size_t>(idx)] - static_cast<long>(top) * modulus_[static_cast<size_t>(i)];
            prod[static_cast<size_t>(idx)] = static_cast<int>(((v % p_) + p_) % p_);
        }
    }
    prod.resize(static_cast<size_t>(e_));
    return from_coeffs(prod);
}

void Fq::build_tables() {
    // Validate irreducibility by checking that some element has
    // multiplicative order q-1; a reducible modulus has zero divisors, which
    // the generator search detects (a power cycle shorter than q-1 through 0
    // or a repeat).
    log_.assign(static_cast<size_t>(q_), -1);
    antilog_.assign(static_cast<size_t>(q_ - 1), 0);
    for (Elem g = 2; g < q_; ++g) {
        std::fill(log_.begin(), log_.end(), -1);
        Elem x = 1;
        long i = 0;
        for (; i < q_ - 1; ++i) {
            if (x == 0 || log_[static_cast<size_t>(x)] != -1) break;
            log_[static_cast<size_t>(x)] = static_cast<int>(i);
            antilog_[static_cast<size_t>(i)] = x;
            x = poly_mul(x, g);
        }
        if (i == q_ - 1 && x == 1) return;  // g generates F_q^*
    }
    throw std::invalid_argument("Fq: modulus is not irreducible over F_p");
}

Fq::Elem Fq::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (e_ == 1) return static_cast<Elem>((static_cast<long>(a) * b) % p_);
    long s = log_[static_cast<size_t>(a)] + log_[static_cast<size_t>(b)];
    if (s >= q_ - 1) s -= q_ - 1;
    return antilog_[static_cast<size_t>(s)];
}

Fq::Elem Fq::inv(Elem a) const {
    if (a == 0) throw std::domain_error("Fq: inverse of zero");
    if (a == 1) return 1;
    if (e_ == 1) {
        // extended Euclid on machine integers
        long t = 0, newt = 1, r = p_, newr = a;
        while (newr != 0) {
            long quo = r / newr;
            long tmp = t - quo * newt;
            t = newt;
            newt = tmp;
            tmp = r - quo * newr;
            r = newr;
            newr = tmp;
        }
        return static_cast<Elem>(((t % p_) + p_) % p_);
    }
    return antilog_[static_cast<size_t>((q_ - 1) - log_[static_cast<size_t>(a)])];
}

std::shared_ptr<const Fq> field(long q) {
    static std::mutex mu;
    static std::map<long, std::shared_ptr<const Fq>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
    auto f = std::make_shared<const Fq>(q);
    cache.emplace(q, f);
    return f;
}

}  // namespace wdual
