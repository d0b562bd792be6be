#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstddef>
#include <set>
#include <vector>

#include "kraw/core_matrices.hpp"
#include "kraw/errors.hpp"
#include "kraw/multivariate.hpp"
#include "kraw/numeric.hpp"
#include "kraw/order.hpp"
#include "kraw/walks.hpp"

using namespace kraw;

namespace {

// Three sites at 0, 1, 2 with weights 1/4, 1/2, 1/4: mean 1, variance 1/2.
SiteDistribution three_sites() {
    return SiteDistribution({Rat(0), Rat(1), Rat(2)},
                            {Rat(1, 4), Rat(1, 2), Rat(1, 4)});
}

// Two equiprobable sites at 0 and 1.
SiteDistribution coin_sites() {
    return SiteDistribution({Rat(0), Rat(1)}, {Rat(1, 2), Rat(1, 2)});
}

// Skewed three-site example with rational values.
SiteDistribution skewed_sites() {
    return SiteDistribution({Rat(0), Rat(1, 2), Rat(3)},
                            {Rat(1, 2), Rat(1, 3), Rat(1, 6)});
}

} // namespace

TEST_CASE("site distribution exposes exact moments") {
    const SiteDistribution d = three_sites();
    CHECK(d.sites() == 3);
    CHECK(d.mean() == 1);
    CHECK(d.variance() == Rat(1, 2));

    const SiteDistribution coin = coin_sites();
    CHECK(coin.mean() == Rat(1, 2));
    CHECK(coin.variance() == Rat(1, 4));
}

TEST_CASE("site distribution validation") {
    CHECK_THROWS_AS(SiteDistribution({Rat(1)}, {Rat(1)}), DomainError);
    CHECK_THROWS_AS(SiteDistribution({Rat(0), Rat(0)}, {Rat(1, 2), Rat(1, 2)}),
                    DomainError);
    CHECK_THROWS_AS(SiteDistribution({Rat(0), Rat(1)}, {Rat(1, 2), Rat(1, 3)}),
                    DomainError);
    CHECK_THROWS_AS(SiteDistribution({Rat(0), Rat(1)}, {Rat(3, 2), Rat(-1, 2)}),
                    DomainError);
    CHECK_THROWS_AS(SiteDistribution({Rat(0), Rat(1)}, {Rat(1, 2)}), DomainError);
}

TEST_CASE("compositions enumerate counts in reverse-lexicographic order") {
    const auto all = compositions(2, 3);
    const std::vector<std::vector<unsigned>> expected{
        {2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
    REQUIRE(all.size() == expected.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].parts == expected[i]);
    }
    // Count matches the stars-and-bars formula across a small grid.
    for (unsigned total = 0; total <= 6; ++total) {
        for (std::size_t parts = 1; parts <= 4; ++parts) {
            CHECK(Int(compositions(total, parts).size()) ==
                  binomial(total + parts - 1, parts - 1));
        }
    }
}

TEST_CASE("degree-one value worked by hand") {
    // Counts (1,1,1) over the three-site example: the product expands to
    // (1 - v)(1)(1 + v) = 1 - v^2, so degree 1 vanishes and degree 2 is -1.
    const SiteDistribution d = three_sites();
    const MultiIndex n{{1, 1, 1}};
    CHECK(gk_polynomial(0, n, d) == 1);
    CHECK(gk_polynomial(1, n, d) == 0);
    CHECK(gk_polynomial(2, n, d) == -1);
    CHECK(gk_polynomial(3, n, d) == 0);
    CHECK(gk_polynomial(4, n, d) == 0);
}

TEST_CASE("top degree is the product of centered values") {
    const SiteDistribution d = skewed_sites();
    const Rat mu = d.mean();
    for (const MultiIndex& n : compositions(4, 3)) {
        Rat expected = 1;
        for (std::size_t j = 0; j < 3; ++j) {
            expected *= rpow(d.values()[j] - mu, n.parts[j]);
        }
        CHECK(gk_polynomial(4, n, d) == expected);
    }
}

TEST_CASE("generating route equals the explicit sum") {
    for (const SiteDistribution& d : {three_sites(), coin_sites(), skewed_sites()}) {
        for (unsigned total = 0; total <= 5; ++total) {
            for (const MultiIndex& n : compositions(total, d.sites())) {
                for (unsigned alpha = 0; alpha <= total + 1; ++alpha) {
                    CHECK(gk_polynomial(alpha, n, d) == gk_explicit_sum(alpha, n, d));
                }
            }
        }
    }
}

TEST_CASE("one-site growth recurrence holds across a grid") {
    for (const SiteDistribution& d : {three_sites(), skewed_sites()}) {
        for (unsigned total = 0; total <= 4; ++total) {
            for (const MultiIndex& n : compositions(total, d.sites())) {
                for (std::size_t site = 0; site < d.sites(); ++site) {
                    for (unsigned alpha = 1; alpha <= total + 1; ++alpha) {
                        const CheckReport r = gk_recurrence_check(alpha, n, site, d);
                        CAPTURE(alpha);
                        CAPTURE(site);
                        CHECK(r.pass);
                    }
                }
            }
        }
    }
}

TEST_CASE("two equiprobable sites reduce to scaled matrix columns") {
    // With sites 0 and 1, counts (n0, N - n0): the degree-alpha value is
    // the (alpha, n0) matrix entry divided by 2^alpha.
    const SiteDistribution d = coin_sites();
    for (int total = 0; total <= 8; ++total) {
        const ExactMatrix k = krawtchouk_matrix(Order(total));
        for (unsigned n0 = 0; n0 <= static_cast<unsigned>(total); ++n0) {
            const MultiIndex n{{n0, static_cast<unsigned>(total) - n0}};
            for (unsigned alpha = 0; alpha <= static_cast<unsigned>(total); ++alpha) {
                const Rat expected =
                    Rat(k(alpha, n0)) / Rat(pow2(alpha));
                CHECK(gk_polynomial(alpha, n, d) == expected);
            }
        }
    }
}

TEST_CASE("terminating Lauricella sums evaluate exactly") {
    // One variable collapses to the Gauss sum.
    const MultiIndex r1{{2}};
    const Rat direct = lauricella_fb(r1, {Rat(3)}, Rat(5), {Rat(1, 2)});
    const Rat gauss = gauss_2f1_terminating(-2, Rat(3), Rat(5), Rat(1, 2));
    CHECK(direct == gauss);

    // Two variables, everything written out: r = (1,1), b = (2,3),
    // t = 4, s = (1, 1/2).  Terms over k in {0,1}^2.
    const MultiIndex r2{{1, 1}};
    const Rat sum = lauricella_fb(r2, {Rat(2), Rat(3)}, Rat(4), {Rat(1), Rat(1, 2)});
    // k=(0,0): 1
    // k=(1,0): (-1)(2)(1)/1 / (4) = -1/2
    // k=(0,1): (-1)(3)(1/2)/1 / (4) = -3/8
    // k=(1,1): (-1)(2)(1) * (-1)(3)(1/2) / (4*5) = 3/20
    const Rat expected = Rat(1) - Rat(1, 2) - Rat(3, 8) + Rat(3, 20);
    CHECK(sum == expected);

    CHECK_THROWS_AS(lauricella_fb(r2, {Rat(2)}, Rat(4), {Rat(1), Rat(1)}),
                    DomainError);
    CHECK_THROWS_AS(lauricella_fb(r2, {Rat(2), Rat(3)}, Rat(-1), {Rat(1), Rat(1)}),
                    DomainError);
}

TEST_CASE("hypergeometric route matches the generating route") {
    for (const SiteDistribution& d : {three_sites(), coin_sites(), skewed_sites()}) {
        for (unsigned total = 0; total <= 5; ++total) {
            for (const MultiIndex& n : compositions(total, d.sites())) {
                for (unsigned alpha = 0; alpha <= total; ++alpha) {
                    CAPTURE(alpha);
                    CHECK(gk_via_lauricella(alpha, n, d) == gk_polynomial(alpha, n, d));
                }
            }
        }
    }
}

TEST_CASE("hypergeometric route requires a zero base site") {
    const SiteDistribution shifted({Rat(1), Rat(2)}, {Rat(1, 2), Rat(1, 2)});
    CHECK_THROWS_AS(gk_via_lauricella(1, MultiIndex{{1, 1}}, shifted), DomainError);
}

TEST_CASE("multinomial orthogonality sweeps pass on the fixtures") {
    for (const SiteDistribution& d : {three_sites(), coin_sites(), skewed_sites()}) {
        for (int total = 0; total <= 5; ++total) {
            CAPTURE(total);
            CHECK(multinomial_orthogonality_check(Order(total), d).pass);
        }
    }
}

TEST_CASE("degree-one inner product written out by hand") {
    // Over three sites with N = 3 the squared degree-one norm is
    // variance * C(3,1) = 3/2; computed here by direct enumeration.
    const SiteDistribution d = three_sites();
    Rat sum = 0;
    for (const MultiIndex& n : compositions(3, 3)) {
        Rat weight(factorial(3));
        for (std::size_t j = 0; j < 3; ++j) {
            weight /= Rat(factorial(n.parts[j]));
            weight *= rpow(d.probabilities()[j], n.parts[j]);
        }
        const Rat v = gk_polynomial(1, n, d);
        sum += weight * v * v;
    }
    CHECK(sum == Rat(3, 2));
}

TEST_CASE("four-site sweep stays exact") {
    const SiteDistribution d({Rat(0), Rat(1), Rat(2), Rat(7, 2)},
                             {Rat(1, 3), Rat(1, 4), Rat(1, 4), Rat(1, 6)});
    for (int total = 0; total <= 4; ++total) {
        CHECK(multinomial_orthogonality_check(Order(total), d).pass);
    }
    for (const MultiIndex& n : compositions(3, 4)) {
        for (unsigned alpha = 0; alpha <= 3; ++alpha) {
            CHECK(gk_via_lauricella(alpha, n, d) == gk_polynomial(alpha, n, d));
        }
    }
}

TEST_CASE("degree beyond the total count vanishes") {
    const SiteDistribution d = three_sites();
    const MultiIndex n{{2, 1, 0}};
    CHECK(gk_polynomial(4, n, d) == 0);
    CHECK(gk_explicit_sum(4, n, d) == 0);
    CHECK(gk_via_lauricella(4, n, d) == 0);
}

TEST_CASE("dimension mismatches are rejected") {
    const SiteDistribution d = three_sites();
    CHECK_THROWS_AS(gk_polynomial(1, MultiIndex{{1, 1}}, d), DomainError);
    CHECK_THROWS_AS(gk_recurrence_check(0, MultiIndex{{1, 1, 1}}, 0, d), DomainError);
    CHECK_THROWS_AS(gk_recurrence_check(1, MultiIndex{{1, 1, 1}}, 5, d), DomainError);
    CHECK_THROWS_AS(compositions(3, 0), DomainError);
}
