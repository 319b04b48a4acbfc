#include "wdual/matrixring.hpp"

#include <algorithm>
#include <stdexcept>

namespace wdual {

FqMatrix FqMatrix::transposed() const {
    FqMatrix t(F_, cols_, rows_);
    for (long r = 0; r < rows_; ++r)
        for (long c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

FqMatrix FqMatrix::mul(const FqMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("FqMatrix::mul: shape mismatch");
    FqMatrix out(F_, rows_, other.cols_);
    for (long r = 0; r < rows_; ++r)
        for (long i = 0; i < cols_; ++i) {
            int v = (*this)(r, i);
            if (v == 0) continue;
            for (long c = 0; c < other.cols_; ++c)
                out(r, c) = F_->add(out(r, c), F_->mul(v, other(i, c)));
        }
    return out;
}

long FqMatrix::rref() {
    long piv_row = 0;
    for (long c = 0; c < cols_ && piv_row < rows_; ++c) {
        long sel = -1;
        for (long r = piv_row; r < rows_; ++r)
            if ((*this)(r, c) != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != piv_row)
            for (long j = 0; j < cols_; ++j) std::swap((*this)(sel, j), (*this)(piv_row, j));
        int inv = F_->inv((*this)(piv_row, c));
        for (long j = 0; j < cols_; ++j) (*this)(piv_row, j) = F_->mul((*this)(piv_row, j), inv);
        for (long r = 0; r < rows_; ++r) {
            if (r == piv_row) continue;
            int f = (*this)(r, c);
            if (f == 0) continue;
            for (long j = 0; j < cols_; ++j)
                (*this)(r, j) = F_->sub((*this)(r, j), F_->mul(f, (*this)(piv_row, j)));
        }
        ++piv_row;
    }
    return piv_row;
}

long FqMatrix::rank() const {
    FqMatrix copy = *this;
    return copy.rref();
}

Subspace::Subspace(std::shared_ptr<const Fq> F, long ambient, const std::vector<std::vector<int>>& basis)
    : F_(std::move(F)), m_(ambient) {
    FqMatrix mat(F_, static_cast<long>(basis.size()), m_);
    for (size_t r = 0; r < basis.size(); ++r) {
        if (static_cast<long>(basis[r].size()) != m_)
            throw std::invalid_argument("Subspace: basis vector length mismatch");
        for (long c = 0; c < m_; ++c) mat(static_cast<long>(r), c) = basis[r][static_cast<size_t>(c)];
    }
    long rk = mat.rref();
    rows_.resize(static_cast<size_t>(rk), std::vector<int>(static_cast<size_t>(m_)));
    for (long r = 0; r < rk; ++r)
        for (long c = 0; c < m_; ++c) rows_[static_cast<size_t>(r)][static_cast<size_t>(c)] = mat(r, c);
}

bool Subspace::contains(const std::vector<int>& v) const {
    // reduce v against the RREF rows
    std::vector<int> w = v;
    for (const auto& row : rows_) {
        long pivot = 0;
        while (pivot < m_ && row[static_cast<size_t>(pivot)] == 0) ++pivot;
        int f = w[static_cast<size_t>(pivot)];
        if (f == 0) continue;
        for (long c = 0; c < m_; ++c)
            w[static_cast<size_t>(c)] = F_->sub(w[static_cast<size_t>(c)], F_->mul(f, row[static_cast<size_t>(c)]));
    }
    return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& row : other.rows_)
        if (!contains(row)) return false;
    return true;
}

Subspace Subspace::perp() const {
    // nullspace of the d x m RREF basis
    long d = dim();
    std::vector<long> pivots;
    std::vector<bool> is_pivot(static_cast<size_t>(m_), false);
    for (long r = 0; r < d; ++r) {
        long c = 0;
        while (c < m_ && rows_[static_cast<size_t>(r)][static_cast<size_t>(c)] == 0) ++c;
        pivots.push_back(c);
        is_pivot[static_cast<size_t>(c)] = true;
    }
    std::vector<std::vector<int>> nul;
    for (long free = 0; free < m_; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<int> v(static_cast<size_t>(m_), 0);
        v[static_cast<size_t>(free)] = 1;
        for (long r = 0; r < d; ++r)
            v[static_cast<size_t>(pivots[static_cast<size_t>(r)])] =
                F_->neg(rows_[static_cast<size_t>(r)][static_cast<size_t>(free)]);
        nul.push_back(std::move(v));
    }
    return Subspace(F_, m_, nul);
}

Subspace Subspace::sum(const Subspace& other) const {
    if (m_ != other.m_) throw std::invalid_argument("Subspace::sum: ambient mismatch");
    std::vector<std::vector<int>> stacked = rows_;
    stacked.insert(stacked.end(), other.rows_.begin(), other.rows_.end());
    return Subspace(F_, m_, stacked);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (m_ != other.m_) throw std::invalid_argument("Subspace::intersect: ambient mismatch");
    return perp().sum(other.perp()).perp();
}

std::string Subspace::key() const {
    std::string s;
    for (const auto& row : rows_) {
        if (!s.empty()) s += ';';
        for (size_t i = 0; i < row.size(); ++i) {
            if (i > 0) s += ',';
            s += std::to_string(row[i]);
        }
    }
    return s.empty() ? std::string("0") : s;
}

Subspace subspace_from_key(std::shared_ptr<const Fq> F, long ambient, const std::string& key) {
    if (key == "0") return Subspace(std::move(F), ambient, {});
    std::vector<std::vector<int>> rows(1);
    std::string cur;
    auto flush = [&]() {
        rows.back().push_back(std::stoi(cur));
        cur.clear();
    };
    for (char ch : key) {
        if (ch == ',') {
            flush();
        } else if (ch == ';') {
            flush();
            rows.emplace_back();
        } else {
            cur += ch;
        }
    }
    flush();
    return Subspace(std::move(F), ambient, rows);
}

bool Subspace::operator<(const Subspace& o) const {
    if (dim() != o.dim()) return dim() < o.dim();
    return rows_ < o.rows_;
}

long rank_of_pairing(const Subspace& X, const Subspace& Y) {
    if (X.ambient() != Y.ambient()) throw std::invalid_argument("rank_of_pairing: ambient mismatch");
    return X.dim() - X.intersect(Y.perp()).dim();
}

namespace {

// enumerate all RREF basis matrices of rank d in F_q^m, lexicographically
void enumerate_rref(long m, long d, const std::shared_ptr<const Fq>& F, std::vector<Subspace>& out) {
    if (d == 0) {
        out.emplace_back(F, m, std::vector<std::vector<int>>{});
        return;
    }
    long q = F->q();
    // choose pivot columns c_0 < c_1 < ... < c_{d-1}
    std::vector<long> piv(static_cast<size_t>(d));
    for (long i = 0; i < d; ++i) piv[static_cast<size_t>(i)] = i;
    std::vector<Subspace> found;
    while (true) {
        // free positions: (r, c) with c > piv[r], c not a pivot column
        std::vector<std::pair<long, long>> free_pos;
        std::vector<bool> is_piv(static_cast<size_t>(m), false);
        for (long r = 0; r < d; ++r) is_piv[static_cast<size_t>(piv[static_cast<size_t>(r)])] = true;
        for (long r = 0; r < d; ++r)
            for (long c = piv[static_cast<size_t>(r)] + 1; c < m; ++c)
                if (!is_piv[static_cast<size_t>(c)]) free_pos.emplace_back(r, c);

        std::vector<std::vector<int>> rows(static_cast<size_t>(d), std::vector<int>(static_cast<size_t>(m), 0));
        for (long r = 0; r < d; ++r) rows[static_cast<size_t>(r)][static_cast<size_t>(piv[static_cast<size_t>(r)])] = 1;

        std::uint64_t total = 1;
        for (size_t i = 0; i < free_pos.size(); ++i) total *= static_cast<std::uint64_t>(q);
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t t = code;
            for (const auto& [r, c] : free_pos) {
                rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = static_cast<int>(t % static_cast<std::uint64_t>(q));
                t /= static_cast<std::uint64_t>(q);
            }
            found.emplace_back(F, m, rows);
        }

        // next pivot combination
        long i = d - 1;
        while (i >= 0 && piv[static_cast<size_t>(i)] == m - d + i) --i;
        if (i < 0) break;
        ++piv[static_cast<size_t>(i)];
        for (long j = i + 1; j < d; ++j) piv[static_cast<size_t>(j)] = piv[static_cast<size_t>(j - 1)] + 1;
    }
    std::sort(found.begin(), found.end());
    out.insert(out.end(), found.begin(), found.end());
}

}  // namespace

OrbitIndex OrbitIndex::lexicographic(long m, long maxdim, std::shared_ptr<const Fq> F) {
    if (maxdim > m) throw std::invalid_argument("OrbitIndex: maxdim > ambient dimension");
    std::vector<Subspace> order;
    for (long d = 0; d <= maxdim; ++d) enumerate_rref(m, d, F, order);
    return from_list(m, std::move(order));
}

OrbitIndex OrbitIndex::from_list(long m, std::vector<Subspace> order) {
    OrbitIndex idx;
    idx.m_ = m;
    idx.order_ = std::move(order);
    long maxdim = 0;
    for (long i = 0; i < static_cast<long>(idx.order_.size()); ++i) {
        const Subspace& s = idx.order_[static_cast<size_t>(i)];
        if (s.ambient() != m) throw std::invalid_argument("OrbitIndex: ambient mismatch in order list");
        if (i > 0 && s.dim() < idx.order_[static_cast<size_t>(i - 1)].dim())
            throw std::invalid_argument("OrbitIndex: order must be grouped by ascending dimension");
        maxdim = std::max(maxdim, s.dim());
        if (!idx.pos_.emplace(s.key(), i).second)
            throw std::invalid_argument("OrbitIndex: duplicate subspace in order list");
    }
    idx.maxdim_ = maxdim;
    idx.dim_offset_.assign(static_cast<size_t>(maxdim + 2), 0);
    for (const Subspace& s : idx.order_)
        for (long d = s.dim() + 1; d <= maxdim + 1; ++d) ++idx.dim_offset_[static_cast<size_t>(d)];
    // sanity: counts per dimension match the q-binomial coefficients
    long q = idx.order_.empty() ? 0 : idx.order_.front().field().q();
    for (long d = 0; d <= maxdim && q >= 2; ++d)
        if (Int(idx.count_of_dim(d)) != qbinom(m, d, q))
            throw std::logic_error("OrbitIndex: subspace count does not match the q-binomial coefficient");
    return idx;
}

long OrbitIndex::count_of_dim(long d) const {
    if (d < 0 || d > maxdim_) return 0;
    return dim_offset_[static_cast<size_t>(d + 1)] - dim_offset_[static_cast<size_t>(d)];
}

long OrbitIndex::first_of_dim(long d) const { return dim_offset_[static_cast<size_t>(d)]; }

long OrbitIndex::index_of(const Subspace& s) const {
    auto it = pos_.find(s.key());
    if (it == pos_.end()) throw std::invalid_argument("OrbitIndex: subspace not in index");
    return it->second;
}

const std::vector<std::vector<int>>& OrbitIndex::pairing_ranks() const {
    std::call_once(prt_cache_->once, [this] {
        long n = count();
        std::vector<Subspace> perps(static_cast<size_t>(n));
        for (long t = 0; t < n; ++t) perps[static_cast<size_t>(t)] = at(t).perp();
        auto& prt = prt_cache_->prt;
        prt.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
        for (long x = 0; x < n; ++x) {
            const Subspace& X = at(x);
            for (long t = 0; t < n; ++t)
                prt[static_cast<size_t>(x)][static_cast<size_t>(t)] =
                    static_cast<int>(X.dim() - X.intersect(perps[static_cast<size_t>(t)]).dim());
        }
    });
    return prt_cache_->prt;
}

Int orbit_size_matrix(long j, long k, long q) {
    if (j < 0 || j > k) throw std::invalid_argument("orbit_size_matrix: need 0 <= j <= k");
    Int s = 1;
    for (long i = 0; i < j; ++i)
        s *= int_pow(q, static_cast<unsigned long>(k)) - int_pow(q, static_cast<unsigned long>(i));
    return s;
}

Int ann_count(long i, long j, long k, long q) {
    if (i < 0 || i > k || j < 0 || j > k) throw std::invalid_argument("ann_count: rank out of range");
    if (i > k - j) return 0;
    return orbit_size_matrix(i, k, q) * qbinom(k - j, i, q);
}

Int kravchuk_B(long i, long ell, long k, long q) {
    Int acc = 0;
    for (long j = 0; j <= ell; ++j) {
        Int term = int_pow(q, choose2(i - j)) * int_pow(q, static_cast<unsigned long>(k * j)) * qbinom(ell, j, q);
        if ((i - j) % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

Int kravchuk_I(long a, long b, long c, long d, long q) {
    if (d < 0 || d > c || b - d < 0 || b - d > a - c) return 0;
    return int_pow(q, static_cast<unsigned long>((b - d) * (c - d))) * qbinom(c, d, q) * qbinom(a - c, b - d, q);
}

std::vector<std::vector<Int>> rank_kravchuk(long k, long q) {
    std::vector<std::vector<Int>> K(static_cast<size_t>(k + 1), std::vector<Int>(static_cast<size_t>(k + 1)));
    for (long i = 0; i <= k; ++i)
        for (long j = 0; j <= k; ++j) {
            Int acc = 0;
            for (long ell = 0; ell <= i; ++ell) acc += kravchuk_I(k, i, k - j, ell, q) * kravchuk_B(i, ell, k, q);
            K[static_cast<size_t>(i)][static_cast<size_t>(j)] = acc;
        }
    return K;
}

MatrixRingOps::MatrixRingOps(long k, std::shared_ptr<const Fq> F) : k_(k), F_(std::move(F)) {
    size_ = 1;
    for (long i = 0; i < k_ * k_; ++i) {
        size_ *= static_cast<std::uint64_t>(F_->q());
        if (size_ > (1ull << 40)) throw std::invalid_argument("MatrixRingOps: ring too large");
    }
}

FqMatrix MatrixRingOps::decode(Elem a) const {
    FqMatrix x(F_, k_, k_);
    for (long r = 0; r < k_; ++r)
        for (long c = 0; c < k_; ++c) {
            x(r, c) = static_cast<int>(a % static_cast<Elem>(F_->q()));
            a /= static_cast<Elem>(F_->q());
        }
    return x;
}

MatrixRingOps::Elem MatrixRingOps::encode(const FqMatrix& x) const {
    Elem a = 0;
    for (long r = k_ - 1; r >= 0; --r)
        for (long c = k_ - 1; c >= 0; --c) a = a * static_cast<Elem>(F_->q()) + static_cast<Elem>(x(r, c));
    return a;
}

MatrixRingOps::Elem MatrixRingOps::add(Elem a, Elem b) const {
    Elem r = 0, mult = 1;
    for (long i = 0; i < k_ * k_; ++i) {
        int da = static_cast<int>((a / mult) % static_cast<Elem>(F_->q()));
        int db = static_cast<int>((b / mult) % static_cast<Elem>(F_->q()));
        r += static_cast<Elem>(F_->add(da, db)) * mult;
        mult *= static_cast<Elem>(F_->q());
    }
    return r;
}

MatrixRingOps::Elem MatrixRingOps::mul(Elem a, Elem b) const { return encode(decode(a).mul(decode(b))); }

long MatrixRingOps::rank(Elem a) const { return decode(a).rank(); }

int MatrixRingOps::trace(Elem a) const {
    FqMatrix x = decode(a);
    int t = 0;
    for (long i = 0; i < k_; ++i) t = F_->add(t, x(i, i));
    return t;
}

}  // namespace wdual
