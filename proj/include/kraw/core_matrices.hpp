#pragma once

#include <cstddef>
#include <vector>

#include "kraw/matrix.hpp"
#include "kraw/numeric.hpp"
#include "kraw/order.hpp"

namespace kraw {

// Entry (i, j) of the order-N Krawtchouk matrix via the signed binomial
// sum over k of (-1)^k C(j,k) C(N-j, i-k).  Independent of
// krawtchouk_matrix, which expands generating polynomials; the two routes
// are cross-checked in tests.
Int krawtchouk_entry(Order n, std::size_t i, std::size_t j);

// Order-N Krawtchouk matrix: column j holds the coefficients of
// (1+v)^(N-j) (1-v)^j in ascending degree.  Row 0 is all ones; column 0
// holds C(N, i).
ExactMatrix krawtchouk_matrix(Order n);

// diag(C(N,0), ..., C(N,N)).
ExactMatrix binomial_diag(Order n);

// Symmetric Krawtchouk matrix K * diag(C(N,j)).
ExactMatrix symmetric_krawtchouk(Order n);

// N-fold Kronecker power of [[1,1],[1,-1]], size 2^N; requires N >= 1.
// Entry (a, b) is -1 raised to popcount(a AND b).
ExactMatrix sylvester_hadamard(Order n, int cap = limits::hadamard_cap);

// Kronecker product; throws ResourceError if either output dimension
// would exceed dim_cap.
ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b,
                      std::size_t dim_cap = limits::kronecker_dim_cap);

// Tridiagonal matrix with superdiagonal 1..N and subdiagonal N..1.
ExactMatrix kac_matrix(Order n);

// diag(N, N-2, ..., -N).
ExactMatrix lambda_matrix(Order n);

enum class TransformDirection { forward, inverse };

// y = K x (forward) or x = K y / 2^N (inverse).  Applying forward then
// inverse returns the input because K squares to 2^N times the identity.
std::vector<Rat> krawtchouk_transform(const std::vector<Int>& x, Order n,
                                      TransformDirection dir);

// Product of the order-N Sylvester-Hadamard matrix with m, computed by
// in-place butterflies instead of materializing the Hadamard factor.
// Requires m.rows() == 2^N.  Cross-checked against the explicit product
// in tests; used where the explicit product would be too large.
ExactMatrix hadamard_apply(Order n, const ExactMatrix& m,
                           int cap = limits::hadamard_cap);

} // namespace kraw
