#include "kraw/multivariate.hpp"

#include <functional>
#include <string>
#include <utility>

#include "kraw/errors.hpp"
#include "kraw/polynomial.hpp"

namespace kraw {

unsigned MultiIndex::total() const {
    unsigned t = 0;
    for (unsigned v : parts) t += v;
    return t;
}

SiteDistribution::SiteDistribution(std::vector<Rat> values,
                                   std::vector<Rat> probabilities)
    : xi_(std::move(values)), p_(std::move(probabilities)) {
    if (xi_.size() < 2) {
        throw DomainError("need at least two sites");
    }
    if (p_.size() != xi_.size()) {
        throw DomainError("site values and probabilities differ in length");
    }
    for (std::size_t i = 0; i < xi_.size(); ++i) {
        for (std::size_t j = i + 1; j < xi_.size(); ++j) {
            if (xi_[i] == xi_[j]) throw DomainError("site values must be distinct");
        }
    }
    Rat total = 0;
    for (const Rat& p : p_) {
        if (p <= 0) throw DomainError("site probabilities must be positive");
        total += p;
    }
    if (total != 1) {
        throw DomainError("site probabilities must sum to 1, got " + to_string(total));
    }
    mean_ = 0;
    for (std::size_t j = 0; j < xi_.size(); ++j) mean_ += p_[j] * xi_[j];
    variance_ = 0;
    for (std::size_t j = 0; j < xi_.size(); ++j) {
        const Rat centered = xi_[j] - mean_;
        variance_ += p_[j] * centered * centered;
    }
}

std::vector<MultiIndex> compositions(unsigned total, std::size_t parts) {
    if (parts == 0) {
        throw DomainError("need at least one part");
    }
    std::vector<MultiIndex> out;
    MultiIndex current;
    current.parts.assign(parts, 0);
    std::function<void(std::size_t, unsigned)> fill = [&](std::size_t pos,
                                                          unsigned remaining) {
        if (pos + 1 == parts) {
            current.parts[pos] = remaining;
            out.push_back(current);
            return;
        }
        for (unsigned v = remaining; v != 0; --v) {
            current.parts[pos] = v;
            fill(pos + 1, remaining - v);
        }
        current.parts[pos] = 0;
        fill(pos + 1, remaining);
    };
    fill(0, total);
    return out;
}

namespace {

void require_matching(const MultiIndex& n, const SiteDistribution& dist) {
    if (n.size() != dist.sites()) {
        throw DomainError("multi-index length does not match site count");
    }
}

} // namespace

Rat gk_polynomial(unsigned alpha, const MultiIndex& n, const SiteDistribution& dist) {
    require_matching(n, dist);
    Polynomial<Rat> g{Rat(1)};
    for (std::size_t j = 0; j < n.size(); ++j) {
        const Polynomial<Rat> factor{Rat(1), dist.values()[j] - dist.mean()};
        g = g * factor.pow(n.parts[j]);
    }
    return g.coefficient(alpha);
}

Rat gk_explicit_sum(unsigned alpha, const MultiIndex& n, const SiteDistribution& dist) {
    require_matching(n, dist);
    Rat sum = 0;
    // Depth-first over k <= n componentwise with running degree; the term
    // carries prod C(n_j, k_j) (xi_j - mean)^(k_j).
    std::function<void(std::size_t, unsigned, const Rat&)> walk =
        [&](std::size_t pos, unsigned picked, const Rat& partial) {
            if (picked > alpha) return;
            if (pos == n.size()) {
                if (picked == alpha) sum += partial;
                return;
            }
            const Rat centered = dist.values()[pos] - dist.mean();
            Rat factor = 1;
            for (unsigned k = 0; k <= n.parts[pos]; ++k) {
                if (k > 0) factor *= centered;
                walk(pos + 1, picked + k,
                     partial * Rat(binomial(n.parts[pos], k)) * factor);
            }
        };
    walk(0, 0, Rat(1));
    return sum;
}

CheckReport gk_recurrence_check(unsigned alpha, const MultiIndex& n,
                                std::size_t site, const SiteDistribution& dist) {
    require_matching(n, dist);
    if (alpha == 0) {
        throw DomainError("recurrence needs degree >= 1");
    }
    if (site >= dist.sites()) {
        throw DomainError("site out of range");
    }
    MultiIndex grown = n;
    grown.parts[site] += 1;
    const Rat lhs = gk_polynomial(alpha, grown, dist);
    const Rat rhs = gk_polynomial(alpha, n, dist) +
                    (dist.values()[site] - dist.mean()) *
                        gk_polynomial(alpha - 1, n, dist);
    if (lhs != rhs) {
        std::string counts;
        for (std::size_t j = 0; j < n.size(); ++j) {
            if (j) counts += ",";
            counts += std::to_string(n.parts[j]);
        }
        return fail_report("gk-recurrence", {{"alpha", std::to_string(alpha)},
                                             {"n", counts},
                                             {"site", std::to_string(site)},
                                             {"grown", to_string(lhs)},
                                             {"recurrence", to_string(rhs)}});
    }
    return pass_report("gk-recurrence");
}

Rat lauricella_fb(const MultiIndex& r, const std::vector<Rat>& b, const Rat& t,
                  const std::vector<Rat>& s) {
    const std::size_t d = r.size();
    if (b.size() != d || s.size() != d) {
        throw DomainError("parameter lengths disagree");
    }
    const unsigned top = r.total();
    // (t)_m for every reachable total degree; all must be nonzero.
    std::vector<Rat> lower(top + 1);
    lower[0] = 1;
    for (unsigned m = 1; m <= top; ++m) {
        const Rat factor = t + static_cast<long>(m - 1);
        if (factor == 0) {
            throw DomainError("lower parameter hits zero within the sum");
        }
        lower[m] = lower[m - 1] * factor;
    }
    Rat sum = 0;
    // Term for k is built factor by factor: moving k_j -> k_j + 1
    // multiplies by (-r_j + k_j)(b_j + k_j) s_j / (k_j + 1).
    std::function<void(std::size_t, unsigned, const Rat&)> walk =
        [&](std::size_t pos, unsigned degree, const Rat& partial) {
            if (pos == d) {
                sum += partial / lower[degree];
                return;
            }
            Rat factor = partial;
            const long rj = static_cast<long>(r.parts[pos]);
            walk(pos + 1, degree, factor);
            for (unsigned k = 0; k < r.parts[pos]; ++k) {
                factor *= Rat(-rj + static_cast<long>(k));
                factor *= b[pos] + static_cast<long>(k);
                factor *= s[pos];
                factor /= Rat(static_cast<long>(k) + 1);
                walk(pos + 1, degree + k + 1, factor);
            }
        };
    walk(0, 0, Rat(1));
    return sum;
}

Rat gk_via_lauricella(unsigned alpha, const MultiIndex& n, const SiteDistribution& dist) {
    require_matching(n, dist);
    if (dist.values()[0] != 0) {
        throw DomainError("reduction requires the first site value to be zero");
    }
    const unsigned total = n.total();
    if (alpha > total) return Rat(0);
    const std::size_t d = dist.sites();
    const long big_n = static_cast<long>(total);

    // Falling-factorial prefactor (-N)_alpha.
    const Rat prefactor = rising_factorial(Rat(-big_n), alpha);

    std::vector<Rat> b(d - 1), s(d - 1), weight(d - 1);
    for (std::size_t j = 1; j < d; ++j) {
        b[j - 1] = -Rat(static_cast<long>(n.parts[j]));
        s[j - 1] = Rat(1) / dist.probabilities()[j];
        weight[j - 1] = dist.probabilities()[j] * dist.values()[j];
    }

    Rat sum = 0;
    for (const MultiIndex& r : compositions(alpha, d - 1)) {
        Rat coeff = 1;
        for (std::size_t j = 0; j + 1 < d; ++j) {
            coeff *= rpow(weight[j], r.parts[j]);
            coeff /= Rat(factorial(r.parts[j]));
        }
        sum += coeff * lauricella_fb(r, b, Rat(-big_n), s);
    }
    return prefactor * sum;
}

CheckReport multinomial_orthogonality_check(Order n, const SiteDistribution& dist) {
    const unsigned big_n = static_cast<unsigned>(n.value());
    const std::size_t dim = n.dim();
    const std::vector<MultiIndex> counts = compositions(big_n, dist.sites());

    // Weight and full value table per composition, degrees 0..N.
    const Int n_fact = factorial(big_n);
    std::vector<Rat> weight(counts.size());
    std::vector<std::vector<Rat>> table(counts.size());
    for (std::size_t c = 0; c < counts.size(); ++c) {
        const MultiIndex& m = counts[c];
        Rat w(n_fact);
        for (std::size_t j = 0; j < m.size(); ++j) {
            w /= Rat(factorial(m.parts[j]));
            w *= rpow(dist.probabilities()[j], m.parts[j]);
        }
        weight[c] = w;

        Polynomial<Rat> g{Rat(1)};
        for (std::size_t j = 0; j < m.size(); ++j) {
            const Polynomial<Rat> factor{Rat(1), dist.values()[j] - dist.mean()};
            g = g * factor.pow(m.parts[j]);
        }
        table[c].resize(dim);
        for (std::size_t a = 0; a < dim; ++a) table[c][a] = g.coefficient(a);
    }

    for (unsigned alpha = 0; alpha < dim; ++alpha) {
        for (unsigned beta = alpha; beta < dim; ++beta) {
            Rat sum = 0;
            for (std::size_t c = 0; c < counts.size(); ++c) {
                sum += weight[c] * table[c][alpha] * table[c][beta];
            }
            Rat expected = 0;
            if (alpha == beta) {
                expected = rpow(dist.variance(), alpha) * Rat(binomial(big_n, alpha));
            }
            if (sum != expected) {
                return fail_report("ortho-multinomial",
                                   {{"alpha", std::to_string(alpha)},
                                    {"beta", std::to_string(beta)},
                                    {"expected", to_string(expected)},
                                    {"actual", to_string(sum)}});
            }
        }
    }
    return pass_report("ortho-multinomial");
}

} // namespace kraw
