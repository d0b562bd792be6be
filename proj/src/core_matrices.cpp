#include "kraw/core_matrices.hpp"

#include <string>

#include "kraw/errors.hpp"
#include "kraw/polynomial.hpp"

namespace kraw {

namespace {

void require_index(Order n, std::size_t i, const char* what) {
    if (i >= n.dim()) {
        throw DomainError(std::string(what) + " out of range for order " +
                          std::to_string(n.value()));
    }
}

} // namespace

Int krawtchouk_entry(Order n, std::size_t i, std::size_t j) {
    require_index(n, i, "row");
    require_index(n, j, "column");
    const unsigned long N = static_cast<unsigned long>(n.value());
    Int sum = 0;
    for (std::size_t k = 0; k <= j && k <= i; ++k) {
        const Int term = binomial(j, k) * binomial(N - j, i - k);
        if (k % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

ExactMatrix krawtchouk_matrix(Order n) {
    const std::size_t dim = n.dim();
    const unsigned long N = static_cast<unsigned long>(n.value());
    ExactMatrix m(dim, dim);
    const Poly one_plus{1, 1};
    const Poly one_minus{1, -1};
    for (std::size_t j = 0; j < dim; ++j) {
        const Poly col = one_plus.pow(N - j) * one_minus.pow(j);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, j) = col.coefficient(i);
        }
    }
    return m;
}

ExactMatrix binomial_diag(Order n) {
    const std::size_t dim = n.dim();
    const unsigned long N = static_cast<unsigned long>(n.value());
    ExactMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = binomial(N, i);
    }
    return m;
}

ExactMatrix symmetric_krawtchouk(Order n) {
    return krawtchouk_matrix(n) * binomial_diag(n);
}

ExactMatrix sylvester_hadamard(Order n, int cap) {
    if (n.value() < 1) {
        throw DomainError("Hadamard order must be at least 1");
    }
    if (n.value() > cap) {
        throw ResourceError("Hadamard order " + std::to_string(n.value()) +
                            " exceeds cap " + std::to_string(cap));
    }
    const ExactMatrix h2{{1, 1}, {1, -1}};
    ExactMatrix h = h2;
    for (int step = 1; step < n.value(); ++step) {
        h = kronecker(h, h2);
    }
    return h;
}

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b,
                      std::size_t dim_cap) {
    if (a.rows() > dim_cap / b.rows() || a.cols() > dim_cap / b.cols()) {
        throw ResourceError("Kronecker product dimensions exceed cap");
    }
    ExactMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia) {
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const Int& v = a(ia, ja);
            if (v == 0) continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib) {
                for (std::size_t jb = 0; jb < b.cols(); ++jb) {
                    r(ia * b.rows() + ib, ja * b.cols() + jb) = v * b(ib, jb);
                }
            }
        }
    }
    return r;
}

ExactMatrix kac_matrix(Order n) {
    const std::size_t dim = n.dim();
    const int N = n.value();
    ExactMatrix m(dim, dim);
    for (int k = 0; k < N; ++k) {
        m(k, k + 1) = k + 1;      // move down: k+1 marked sites to pick from
        m(k + 1, k) = N - k;      // move up: N-k unmarked sites
    }
    return m;
}

ExactMatrix lambda_matrix(Order n) {
    const std::size_t dim = n.dim();
    const int N = n.value();
    ExactMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = N - 2 * static_cast<int>(i);
    }
    return m;
}

std::vector<Rat> krawtchouk_transform(const std::vector<Int>& x, Order n,
                                      TransformDirection dir) {
    if (x.size() != n.dim()) {
        throw DomainError("vector length does not match order");
    }
    const ExactMatrix k = krawtchouk_matrix(n);
    std::vector<Rat> y(n.dim());
    const Int scale = pow2(static_cast<unsigned long>(n.value()));
    for (std::size_t i = 0; i < n.dim(); ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < n.dim(); ++j) {
            acc += k(i, j) * x[j];
        }
        if (dir == TransformDirection::forward) {
            y[i] = Rat(acc);
        } else {
            Rat q(acc, scale);
            q.canonicalize();
            y[i] = q;
        }
    }
    return y;
}

ExactMatrix hadamard_apply(Order n, const ExactMatrix& m, int cap) {
    if (n.value() < 1) {
        throw DomainError("Hadamard order must be at least 1");
    }
    if (n.value() > cap) {
        throw ResourceError("Hadamard order " + std::to_string(n.value()) +
                            " exceeds cap " + std::to_string(cap));
    }
    const std::size_t rows = std::size_t{1} << n.value();
    if (m.rows() != rows) {
        throw DomainError("row count must be 2^N");
    }
    ExactMatrix r = m;
    // Standard Walsh-Hadamard butterfly; the half-size blocks hold the sum
    // and difference of the recursively transformed halves.
    for (std::size_t len = 1; len < rows; len <<= 1) {
        for (std::size_t base = 0; base < rows; base += 2 * len) {
            for (std::size_t i = base; i < base + len; ++i) {
                for (std::size_t j = 0; j < r.cols(); ++j) {
                    Int a = r(i, j);
                    Int b = r(i + len, j);
                    r(i, j) = a + b;
                    r(i + len, j) = a - b;
                }
            }
        }
    }
    return r;
}

} // namespace kraw
