#ifndef WDUAL_LINALG_HPP
#define WDUAL_LINALG_HPP

#include <vector>

#include "wdual/exactmath.hpp"

namespace wdual {

using IntMatrix = std::vector<std::vector<Int>>;
using RatMatrix = std::vector<std::vector<Rat>>;

// Solve A x = b exactly for square integer A by fraction-free (Bareiss)
// elimination with exact pivoting; throws std::domain_error when singular.
std::vector<Rat> solve_bareiss(IntMatrix A, std::vector<Int> b);

RatMatrix invert_rational(RatMatrix A);  // throws std::domain_error when singular
long rational_rank(RatMatrix A);

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B);
IntMatrix mat_transpose(const IntMatrix& A);
std::vector<Int> mat_vec(const IntMatrix& A, const std::vector<Int>& x);

}  // namespace wdual

#endif
