#pragma once

#include <cstdint>
#include <vector>

#include "kraw/matrix.hpp"
#include "kraw/order.hpp"

namespace kraw {

// Number of ones in the binary expansion of n.
unsigned binary_weight(std::uint64_t n) noexcept;

// The indices 0 .. 2^N - 1 grouped by binary weight.  classes[w] lists, in
// increasing order, the indices of weight w; class sizes are C(N, w).
struct WeightClassPartition {
    Order order;
    std::vector<std::vector<std::uint64_t>> classes;
};

WeightClassPartition weight_classes(Order n, int cap = limits::hadamard_cap);

// Sum the entries of the order-N Sylvester-Hadamard matrix over pairs of
// weight classes: entry (i, j) of the result is the sum of H(a, b) over
// weight(a) = i, weight(b) = j.  jobs > 1 splits the row sweep across
// threads; the merge order is fixed, so results are identical.
ExactMatrix condense_hadamard(Order n, int jobs = 1,
                              int cap = limits::hadamard_cap);

// Same condensation computed from the sign rule (-1)^weight(a AND b)
// without materializing the Hadamard matrix.  Kept separate from
// condense_hadamard so the two routes can be compared.
ExactMatrix condense_hadamard_signs(Order n, int cap = limits::hadamard_cap);

// Contract a square matrix of even size 2n to size n+1: entry (i, j) of
// the result sums the input entries with 1-based row index in {2i, 2i+1}
// and 1-based column index in {2j, 2j+1}, indices outside 1..2n skipped.
// Every input entry lands in exactly one output entry, so the total entry
// sum is preserved.
ExactMatrix square_contraction(const ExactMatrix& m);

// One step of the symmetric-matrix recursion: contract the Kronecker
// product of s with [[1,1],[1,-1]].  Applied to the order-N symmetric
// Krawtchouk matrix it yields the order-(N+1) one.
ExactMatrix symmetric_recursion_step(const ExactMatrix& s);

// One step of the Krawtchouk recursion: symmetrize with diag(C(N,j)),
// run symmetric_recursion_step, then divide column i by C(N+1, i).  The
// divisions are exact for genuine Krawtchouk input; a remainder raises
// ConsistencyError.
ExactMatrix krawtchouk_recursion_step(const ExactMatrix& k, Order n);

// diag(C(N,i)) grown from diag(1) by contracting Kronecker products with
// the 2x2 identity; route-independent check of the contraction operator.
ExactMatrix binomial_via_contraction(Order n);

} // namespace kraw
