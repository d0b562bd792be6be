#include "kraw/walks.hpp"

#include <limits>
#include <string>
#include <utility>

#include "kraw/core_matrices.hpp"
#include "kraw/errors.hpp"

namespace kraw {

FiniteDistribution::FiniteDistribution(Order n, std::vector<Rat> probabilities)
    : order(n), probs(std::move(probabilities)) {
    if (probs.size() != order.dim()) {
        throw DomainError("distribution length does not match order");
    }
    Rat total = 0;
    for (const Rat& p : probs) {
        if (p < 0) throw DomainError("negative probability");
        total += p;
    }
    if (total != 1) {
        throw DomainError("probabilities must sum to 1, got " + to_string(total));
    }
}

FiniteDistribution FiniteDistribution::point_mass(Order n, std::size_t state) {
    if (state >= n.dim()) throw DomainError("state out of range");
    std::vector<Rat> p(n.dim(), Rat(0));
    p[state] = 1;
    return FiniteDistribution(n, std::move(p));
}

FiniteDistribution FiniteDistribution::binomial_half(Order n) {
    const Int scale = pow2(static_cast<unsigned long>(n.value()));
    std::vector<Rat> p(n.dim());
    for (std::size_t k = 0; k < n.dim(); ++k) {
        Rat q(binomial(static_cast<unsigned long>(n.value()), k), scale);
        q.canonicalize();
        p[k] = q;
    }
    return FiniteDistribution(n, std::move(p));
}

RationalMatrix urn_step_matrix(Order n) {
    if (n.value() < 1) {
        throw DomainError("urn chain needs at least one ball");
    }
    RationalMatrix m = to_rational(kac_matrix(n));
    const Rat inv_n(1, static_cast<unsigned long>(n.value()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            m(i, j) *= inv_n;
            m(i, j).canonicalize();
        }
    }
    return m;
}

FiniteDistribution evolve_distribution(const FiniteDistribution& start,
                                       std::size_t steps) {
    const RationalMatrix step = urn_step_matrix(start.order);
    std::vector<Rat> p = start.probs;
    for (std::size_t s = 0; s < steps; ++s) {
        p = step.apply(p);
    }
    return FiniteDistribution(start.order, std::move(p));
}

std::uint64_t SplitMix64::next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) throw DomainError("empty draw range");
    // Reject the tail that does not divide evenly, so every residue is
    // equally likely.
    const std::uint64_t limit =
        (std::numeric_limits<std::uint64_t>::max() / bound) * bound;
    std::uint64_t r;
    do {
        r = next();
    } while (r >= limit);
    return r % bound;
}

UrnTrajectory simulate_urn(Order n, std::size_t steps, std::uint64_t seed,
                           int start) {
    if (n.value() < 1) {
        throw DomainError("urn chain needs at least one ball");
    }
    if (start < 0 || start > n.value()) {
        throw DomainError("start state out of range");
    }
    SplitMix64 rng(seed);
    UrnTrajectory t{n, seed, {}};
    t.states.reserve(steps + 1);
    int k = start;
    t.states.push_back(k);
    const std::uint64_t balls = static_cast<std::uint64_t>(n.value());
    for (std::size_t s = 0; s < steps; ++s) {
        // Ball indices below k sit in the marked urn; drawing one moves it out.
        const std::uint64_t draw = rng.below(balls);
        k += (draw < static_cast<std::uint64_t>(k)) ? -1 : 1;
        t.states.push_back(k);
    }
    return t;
}

ExactMatrix abar_matrix(Order n) {
    const ExactMatrix a = kac_matrix(n);
    const ExactMatrix l = lambda_matrix(n);
    ExactMatrix c = a * l - l * a;
    for (std::size_t i = 0; i < c.rows(); ++i) {
        for (std::size_t j = 0; j < c.cols(); ++j) {
            Int& cell = c(i, j);
            if (mpz_odd_p(cell.get_mpz_t())) {
                throw ConsistencyError("commutator entry not even at (" +
                                       std::to_string(i) + ", " +
                                       std::to_string(j) + ")");
            }
            mpz_divexact_ui(cell.get_mpz_t(), cell.get_mpz_t(), 2);
        }
    }
    return c;
}

SignPath::SignPath(std::vector<int> vals) : values(std::move(vals)) {
    for (int v : values) {
        if (v != 1 && v != -1) {
            throw DomainError("sign path entries must be +1 or -1");
        }
    }
}

Int elementary_symmetric_eval(const SignPath& path, std::size_t k) {
    if (k > path.values.size()) {
        throw DomainError("symmetric function degree exceeds path length");
    }
    std::vector<Int> e(k + 1, Int(0));
    e[0] = 1;
    std::size_t seen = 0;
    for (int x : path.values) {
        ++seen;
        const std::size_t top = std::min(k, seen);
        for (std::size_t i = top; i >= 1; --i) {
            e[i] += e[i - 1] * x;
        }
    }
    return e[k];
}

Rat gauss_2f1_terminating(long a, const Rat& b, const Rat& c, const Rat& z) {
    if (a > 0) {
        throw DomainError("first parameter must be a nonpositive integer");
    }
    const unsigned long terms = static_cast<unsigned long>(-a);
    Rat sum = 1;
    Rat term = 1;
    for (unsigned long k = 1; k <= terms; ++k) {
        const Rat lower = c + static_cast<long>(k - 1);
        if (lower == 0) {
            throw DomainError("lower parameter hits zero within the sum");
        }
        term *= Rat(a + static_cast<long>(k - 1));
        term *= b + static_cast<long>(k - 1);
        term *= z;
        term /= lower * Rat(static_cast<long>(k));
        sum += term;
    }
    return sum;
}

CheckReport binomial_orthogonality_check(Order n) {
    const ExactMatrix k = krawtchouk_matrix(n);
    const ExactMatrix wts = binomial_diag(n);
    const Int scale = pow2(static_cast<unsigned long>(n.value()));
    for (std::size_t alpha = 0; alpha < k.rows(); ++alpha) {
        for (std::size_t beta = alpha; beta < k.rows(); ++beta) {
            Int sum = 0;
            for (std::size_t j = 0; j < k.cols(); ++j) {
                sum += wts(j, j) * k(alpha, j) * k(beta, j);
            }
            const Int expected = (alpha == beta) ? Int(scale * wts(alpha, alpha)) : Int(0);
            if (sum != expected) {
                return fail_report("ortho-binomial",
                                   {{"alpha", std::to_string(alpha)},
                                    {"beta", std::to_string(beta)},
                                    {"expected", to_string(expected)},
                                    {"actual", to_string(sum)}});
            }
        }
    }
    return pass_report("ortho-binomial");
}

} // namespace kraw
