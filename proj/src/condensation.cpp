#include "kraw/condensation.hpp"

#include <bit>
#include <string>
#include <thread>
#include <utility>

#include "kraw/core_matrices.hpp"
#include "kraw/errors.hpp"
#include "kraw/numeric.hpp"

namespace kraw {

unsigned binary_weight(std::uint64_t n) noexcept {
    return static_cast<unsigned>(std::popcount(n));
}

WeightClassPartition weight_classes(Order n, int cap) {
    if (n.value() > cap) {
        throw ResourceError("weight classes for order " +
                            std::to_string(n.value()) + " exceed cap " +
                            std::to_string(cap));
    }
    std::vector<std::vector<std::uint64_t>> classes(n.dim());
    const std::uint64_t total = std::uint64_t{1} << n.value();
    for (std::uint64_t a = 0; a < total; ++a) {
        classes[binary_weight(a)].push_back(a);
    }
    return WeightClassPartition{n, std::move(classes)};
}

namespace {

void accumulate_rows(const ExactMatrix& h, std::size_t row_begin,
                     std::size_t row_end, ExactMatrix& acc) {
    for (std::size_t a = row_begin; a < row_end; ++a) {
        const unsigned wa = binary_weight(a);
        for (std::size_t b = 0; b < h.cols(); ++b) {
            acc(wa, binary_weight(b)) += h(a, b);
        }
    }
}

} // namespace

ExactMatrix condense_hadamard(Order n, int jobs, int cap) {
    if (jobs < 1) {
        throw DomainError("jobs must be positive");
    }
    const ExactMatrix h = sylvester_hadamard(n, cap);
    const std::size_t dim = n.dim();
    if (jobs == 1 || h.rows() < static_cast<std::size_t>(jobs)) {
        ExactMatrix acc(dim, dim);
        accumulate_rows(h, 0, h.rows(), acc);
        return acc;
    }
    std::vector<ExactMatrix> partial(jobs, ExactMatrix(dim, dim));
    std::vector<std::thread> workers;
    const std::size_t chunk = h.rows() / jobs;
    for (int t = 0; t < jobs; ++t) {
        const std::size_t begin = chunk * t;
        const std::size_t end = (t + 1 == jobs) ? h.rows() : chunk * (t + 1);
        workers.emplace_back(accumulate_rows, std::cref(h), begin, end,
                             std::ref(partial[t]));
    }
    for (auto& w : workers) w.join();
    // Partial sums are merged in worker order; addition of exact integers
    // is associative, so the result never depends on scheduling.
    ExactMatrix acc(dim, dim);
    for (const auto& p : partial) acc = acc + p;
    return acc;
}

ExactMatrix condense_hadamard_signs(Order n, int cap) {
    if (n.value() < 1) {
        throw DomainError("Hadamard order must be at least 1");
    }
    if (n.value() > cap) {
        throw ResourceError("Hadamard order " + std::to_string(n.value()) +
                            " exceeds cap " + std::to_string(cap));
    }
    const std::size_t dim = n.dim();
    const std::uint64_t total = std::uint64_t{1} << n.value();
    ExactMatrix acc(dim, dim);
    for (std::uint64_t a = 0; a < total; ++a) {
        const unsigned wa = binary_weight(a);
        for (std::uint64_t b = 0; b < total; ++b) {
            Int& cell = acc(wa, binary_weight(b));
            if (binary_weight(a & b) % 2 == 0) {
                cell += 1;
            } else {
                cell -= 1;
            }
        }
    }
    return acc;
}

ExactMatrix square_contraction(const ExactMatrix& m) {
    if (!m.is_square() || m.rows() % 2 != 0) {
        throw DomainError("square contraction needs a square matrix of even size");
    }
    const std::size_t size = m.rows();
    const std::size_t half = size / 2;
    ExactMatrix r(half + 1, half + 1);
    for (std::size_t i = 0; i <= half; ++i) {
        for (std::size_t j = 0; j <= half; ++j) {
            Int& cell = r(i, j);
            for (std::size_t a = 2 * i; a <= 2 * i + 1; ++a) {
                if (a < 1 || a > size) continue;
                for (std::size_t b = 2 * j; b <= 2 * j + 1; ++b) {
                    if (b < 1 || b > size) continue;
                    cell += m(a - 1, b - 1);
                }
            }
        }
    }
    return r;
}

ExactMatrix symmetric_recursion_step(const ExactMatrix& s) {
    if (!s.is_square()) {
        throw DomainError("recursion step needs a square matrix");
    }
    const ExactMatrix h2{{1, 1}, {1, -1}};
    return square_contraction(kronecker(s, h2));
}

ExactMatrix krawtchouk_recursion_step(const ExactMatrix& k, Order n) {
    if (k.rows() != n.dim() || k.cols() != n.dim()) {
        throw DomainError("matrix size does not match order");
    }
    const unsigned long next = static_cast<unsigned long>(n.value()) + 1;
    ExactMatrix grown = symmetric_recursion_step(k * binomial_diag(n));
    for (std::size_t j = 0; j < grown.cols(); ++j) {
        const Int d = binomial(next, j);
        for (std::size_t i = 0; i < grown.rows(); ++i) {
            Int& cell = grown(i, j);
            if (!mpz_divisible_p(cell.get_mpz_t(), d.get_mpz_t())) {
                throw ConsistencyError(
                    "column division not exact at (" + std::to_string(i) + ", " +
                    std::to_string(j) + "): " + to_string(cell) +
                    " not divisible by " + to_string(d));
            }
            mpz_divexact(cell.get_mpz_t(), cell.get_mpz_t(), d.get_mpz_t());
        }
    }
    return grown;
}

ExactMatrix binomial_via_contraction(Order n) {
    if (n.value() < 1) {
        throw DomainError("contraction growth starts at order 1");
    }
    const ExactMatrix eye2 = ExactMatrix::identity(2);
    ExactMatrix cur = eye2;
    for (int step = 1; step < n.value(); ++step) {
        cur = square_contraction(kronecker(cur, eye2));
    }
    return cur;
}

} // namespace kraw
