#pragma once

#include <cstddef>
#include <vector>

#include "kraw/numeric.hpp"
#include "kraw/order.hpp"
#include "kraw/report.hpp"

namespace kraw {

// Tuple of nonnegative exponents / counts.
struct MultiIndex {
    std::vector<unsigned> parts;

    unsigned total() const;
    std::size_t size() const { return parts.size(); }
};

// A finitely supported step distribution: distinct rational values xi with
// positive rational probabilities p summing to 1.  Needs at least two sites.
class SiteDistribution {
public:
    SiteDistribution(std::vector<Rat> values, std::vector<Rat> probabilities);

    std::size_t sites() const { return xi_.size(); }
    const std::vector<Rat>& values() const { return xi_; }
    const std::vector<Rat>& probabilities() const { return p_; }
    const Rat& mean() const { return mean_; }
    const Rat& variance() const { return variance_; }

private:
    std::vector<Rat> xi_;
    std::vector<Rat> p_;
    Rat mean_;
    Rat variance_;
};

// All multi-indices with the given number of parts summing to total, in
// reverse-lexicographic order: the first part descends from total, ties
// broken recursively the same way.
std::vector<MultiIndex> compositions(unsigned total, std::size_t parts);

// Degree-alpha coefficient of the product over sites j of
// (1 + (xi_j - mean) v)^(n_j); zero when alpha exceeds the total of n.
// This is the generating-function route.
Rat gk_polynomial(unsigned alpha, const MultiIndex& n, const SiteDistribution& dist);

// Same value as the explicit sum over k <= n with |k| = alpha of
// prod C(n_j, k_j) (xi_j - mean)^(k_j); kept independent of
// gk_polynomial so the routes can be compared.
Rat gk_explicit_sum(unsigned alpha, const MultiIndex& n, const SiteDistribution& dist);

// Verifies the one-site growth rule: adding a count at `site` changes the
// value by (xi_site - mean) times the degree-(alpha-1) value.
CheckReport gk_recurrence_check(unsigned alpha, const MultiIndex& n,
                                std::size_t site, const SiteDistribution& dist);

// Terminating Lauricella F_B sum over multi-indices k <= r of
// prod_j (-r_j)_(k_j) (b_j)_(k_j) s_j^(k_j) / k_j!  divided by (t)_|k|.
// The lower parameter t must not generate a zero factor within range.
Rat lauricella_fb(const MultiIndex& r, const std::vector<Rat>& b, const Rat& t,
                  const std::vector<Rat>& s);

// Evaluates the degree-alpha polynomial through the Lauricella reduction,
// which requires the first site value to be zero: a falling-factorial
// prefactor times a weighted sum of F_B values over the remaining sites.
// Cross-checked against gk_polynomial in tests.
Rat gk_via_lauricella(unsigned alpha, const MultiIndex& n, const SiteDistribution& dist);

// Orthogonality under the multinomial weight: summing
// multinomial(N; n) prod p_j^(n_j) K_alpha(n) K_beta(n) over all counts n
// with total N gives variance^alpha C(N, alpha) when alpha == beta and
// zero otherwise.
CheckReport multinomial_orthogonality_check(Order n, const SiteDistribution& dist);

} // namespace kraw
