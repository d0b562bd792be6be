#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kraw/matrix.hpp"
#include "kraw/numeric.hpp"
#include "kraw/order.hpp"
#include "kraw/report.hpp"

namespace kraw {

// Exact probability vector over states 0..N: entries nonnegative rationals
// summing to 1.
struct FiniteDistribution {
    FiniteDistribution(Order n, std::vector<Rat> probabilities);

    static FiniteDistribution point_mass(Order n, std::size_t state);

    // P(k) = C(N,k) / 2^N, the stationary law of the urn chain.
    static FiniteDistribution binomial_half(Order n);

    Order order;
    std::vector<Rat> probs;
};

// Column-stochastic transition matrix of the two-urn chain on 0..N: from
// state k one of N balls is drawn uniformly and moved to the other urn, so
// the state drops with probability k/N and rises with probability (N-k)/N.
// Equals 1/N times the tridiagonal matrix with superdiagonal 1..N and
// subdiagonal N..1.  Requires N >= 1.
RationalMatrix urn_step_matrix(Order n);

// Exact law after the given number of steps.
FiniteDistribution evolve_distribution(const FiniteDistribution& start,
                                       std::size_t steps);

// splitmix64: pinned algorithm so simulations replay bit-for-bit anywhere.
// State advances by 0x9E3779B97F4A7C15; output mixes with the standard
// 30/27/31 xor-shift multiply chain.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept;

    // Uniform draw in [0, bound) by rejection; bound must be positive.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

// A simulated urn path: states[0] is the start state and each later entry
// follows by one transition.
struct UrnTrajectory {
    Order order;
    std::uint64_t seed;
    std::vector<int> states;
};

UrnTrajectory simulate_urn(Order n, std::size_t steps, std::uint64_t seed,
                           int start = 0);

// Half the commutator of the urn ladder matrix with diag(N-2i): tridiagonal
// with superdiagonal -1..-N and subdiagonal N..1.  The halving is exact;
// it completes the ladder matrix and diag(N-2i) to a closed bracket triple
// ([kac, abar] = 2 lambda, [abar, lambda] = 2 kac, [lambda, kac] = -2 abar).
ExactMatrix abar_matrix(Order n);

// A finite sequence of +1/-1 signs.
struct SignPath {
    explicit SignPath(std::vector<int> values);
    std::vector<int> values;
};

// Elementary symmetric function e_k of the path entries, evaluated by the
// one-pass recurrence e_k(x1..xm) = e_k(x1..x(m-1)) + x_m e_(k-1)(x1..x(m-1)).
Int elementary_symmetric_eval(const SignPath& path, std::size_t k);

// Terminating Gauss hypergeometric sum with nonpositive integer first
// parameter: sum over n of (a)_n (b)_n / (c)_n * z^n / n!.  The lower
// parameter must not hit zero within the summation range.
Rat gauss_2f1_terminating(long a, const Rat& b, const Rat& c, const Rat& z);

// Weighted orthogonality of Krawtchouk rows: for all row pairs, the sum
// over j of C(N,j) K(alpha,j) K(beta,j) equals 2^N C(N,alpha) when
// alpha == beta and vanishes otherwise.
CheckReport binomial_orthogonality_check(Order n);

} // namespace kraw
