#include "wdual/linalg.hpp"

#include <stdexcept>

namespace wdual {

std::vector<Rat> solve_bareiss(IntMatrix A, std::vector<Int> b) {
    size_t n = A.size();
    if (n == 0 || b.size() != n) throw std::invalid_argument("solve_bareiss: shape mismatch");
    for (const auto& row : A)
        if (row.size() != n) throw std::invalid_argument("solve_bareiss: matrix not square");

    Int prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && A[piv][k] == 0) ++piv;
        if (piv == n) throw std::domain_error("solve_bareiss: singular matrix");
        if (piv != k) {
            std::swap(A[piv], A[k]);
            std::swap(b[piv], b[k]);
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int t = A[i][j] * A[k][k] - A[i][k] * A[k][j];
                mpz_divexact(A[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            Int t = b[i] * A[k][k] - A[i][k] * b[k];
            mpz_divexact(b[i].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            A[i][k] = 0;
        }
        prev = A[k][k];
    }
    if (A[n - 1][n - 1] == 0) throw std::domain_error("solve_bareiss: singular matrix");

    std::vector<Rat> x(n);
    for (size_t ri = n; ri-- > 0;) {
        Rat acc(b[ri]);
        for (size_t j = ri + 1; j < n; ++j) acc -= Rat(A[ri][j]) * x[j];
        x[ri] = acc / Rat(A[ri][ri]);
        x[ri].canonicalize();
    }
    return x;
}

RatMatrix invert_rational(RatMatrix A) {
    size_t n = A.size();
    RatMatrix inv(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && A[piv][k] == 0) ++piv;
        if (piv == n) throw std::domain_error("invert_rational: singular matrix");
        if (piv != k) {
            std::swap(A[piv], A[k]);
            std::swap(inv[piv], inv[k]);
        }
        Rat d = A[k][k];
        for (size_t j = 0; j < n; ++j) {
            A[k][j] /= d;
            inv[k][j] /= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == k || A[i][k] == 0) continue;
            Rat f = A[i][k];
            for (size_t j = 0; j < n; ++j) {
                A[i][j] -= f * A[k][j];
                inv[i][j] -= f * inv[k][j];
            }
        }
    }
    return inv;
}

long rational_rank(RatMatrix A) {
    if (A.empty()) return 0;
    size_t rows = A.size(), cols = A[0].size();
    long rank = 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && A[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(A[piv], A[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (A[i][c] == 0) continue;
            Rat f = A[i][c] / A[r][c];
            for (size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B) {
    size_t n = A.size(), m = B.size(), p = m == 0 ? 0 : B[0].size();
    IntMatrix C(n, std::vector<Int>(p, Int(0)));
    for (size_t i = 0; i < n; ++i) {
        if (A[i].size() != m) throw std::invalid_argument("mat_mul: shape mismatch");
        for (size_t k = 0; k < m; ++k) {
            const Int& a = A[i][k];
            if (a == 0) continue;
            for (size_t j = 0; j < p; ++j)
                if (B[k][j] != 0) mpz_addmul(C[i][j].get_mpz_t(), a.get_mpz_t(), B[k][j].get_mpz_t());
        }
    }
    return C;
}

IntMatrix mat_transpose(const IntMatrix& A) {
    size_t n = A.size(), m = n == 0 ? 0 : A[0].size();
    IntMatrix T(m, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) T[j][i] = A[i][j];
    return T;
}

std::vector<Int> mat_vec(const IntMatrix& A, const std::vector<Int>& x) {
    std::vector<Int> y(A.size(), Int(0));
    for (size_t i = 0; i < A.size(); ++i) {
        if (A[i].size() != x.size()) throw std::invalid_argument("mat_vec: shape mismatch");
        for (size_t j = 0; j < x.size(); ++j)
            if (A[i][j] != 0 && x[j] != 0) mpz_addmul(y[i].get_mpz_t(), A[i][j].get_mpz_t(), x[j].get_mpz_t());
    }
    return y;
}

}  // namespace wdual
