#pragma once

#include <vector>

#include "kraw/matrix.hpp"
#include "kraw/numeric.hpp"
#include "kraw/order.hpp"
#include "kraw/polynomial.hpp"
#include "kraw/report.hpp"

namespace kraw {

// A 2x2 operator acting on the variable pair (x0, x1).
struct Operator2x2 {
    Int a00, a01, a10, a11;
};

// Same shape with polynomial entries, e.g. a pencil I + tF.
struct PolyOperator2x2 {
    Poly a00, a01, a10, a11;
};

Operator2x2 identity_operator();
Operator2x2 flip_operator();      // swaps the variables
Operator2x2 sign_operator();      // negates the second variable
Operator2x2 hadamard_operator();  // flip + sign

Operator2x2 compose(const Operator2x2& a, const Operator2x2& b);

// Action induced on the monomials x0^(N-k) x1^k of degree N, obtained by
// substituting the transformed variables and expanding.  Row k holds the
// coefficients of the image of the k-th monomial.  The map is
// multiplicative: the matrix of a composite is the product of the
// matrices, in the same order.
ExactMatrix symmetric_representation(const Operator2x2& a, Order n);
PolyMatrix symmetric_representation(const PolyOperator2x2& a, Order n);

// Compares the induced action of the 2x2 Hadamard operator with the
// transposed Krawtchouk matrix of the same order; they agree entrywise.
CheckReport hbar_transpose_check(Order n);

// Linearization of the induced action of I + tF: the coefficient of t in
// symmetric_representation(I + tF, n).  Tridiagonal with row k holding k
// below and N-k above the diagonal.  Requires N >= 1.
ExactMatrix xf_bar(Order n);

// Linearization for I + tG: diag(N - 2k).
ExactMatrix xg_bar(Order n);

// Top row of the N-fold Kronecker power of I + tF; entry k is the
// monomial t^binary_weight(k).  Materializes 2^N polynomials.
std::vector<Poly> flip_tensor_top_row(Order n, int cap = limits::hadamard_cap);

// Generating polynomial of the top-row exponents: summing the tensor top
// row collects C(N, w) copies of t^w, giving (1 + t)^N.  Computed both
// from the tensor row and from the induced action of I + tF; the routes
// must agree, and a discrepancy raises ConsistencyError.
Poly top_row_generating(Order n, int cap = limits::hadamard_cap);

} // namespace kraw
