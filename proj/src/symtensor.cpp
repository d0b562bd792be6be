#include "kraw/symtensor.hpp"

#include <string>

#include "kraw/core_matrices.hpp"
#include "kraw/errors.hpp"

namespace kraw {

namespace {

// Shared expansion: row k of the induced action lists the coefficients of
// y^l in (a00 + a01 y)^(N-k) (a10 + a11 y)^k, the dehomogenized image of
// the k-th degree-N monomial.  The product has degree at most N.
template <typename R>
Matrix<R> representation_matrix(const R& a00, const R& a01, const R& a10,
                                const R& a11, Order n) {
    const std::size_t dim = n.dim();
    const unsigned long N = static_cast<unsigned long>(n.value());
    const Polynomial<R> first{a00, a01};
    const Polynomial<R> second{a10, a11};
    Matrix<R> m(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const Polynomial<R> row = first.pow(N - k) * second.pow(k);
        for (std::size_t l = 0; l < dim; ++l) {
            m(k, l) = row.coefficient(l);
        }
    }
    return m;
}

} // namespace

Operator2x2 identity_operator() { return {1, 0, 0, 1}; }
Operator2x2 flip_operator() { return {0, 1, 1, 0}; }
Operator2x2 sign_operator() { return {1, 0, 0, -1}; }
Operator2x2 hadamard_operator() { return {1, 1, 1, -1}; }

Operator2x2 compose(const Operator2x2& a, const Operator2x2& b) {
    return {a.a00 * b.a00 + a.a01 * b.a10, a.a00 * b.a01 + a.a01 * b.a11,
            a.a10 * b.a00 + a.a11 * b.a10, a.a10 * b.a01 + a.a11 * b.a11};
}

ExactMatrix symmetric_representation(const Operator2x2& a, Order n) {
    return representation_matrix<Int>(a.a00, a.a01, a.a10, a.a11, n);
}

PolyMatrix symmetric_representation(const PolyOperator2x2& a, Order n) {
    return representation_matrix<Poly>(a.a00, a.a01, a.a10, a.a11, n);
}

CheckReport hbar_transpose_check(Order n) {
    const ExactMatrix lhs = symmetric_representation(hadamard_operator(), n);
    const ExactMatrix rhs = krawtchouk_matrix(n).transpose();
    if (auto pos = first_mismatch(lhs, rhs)) {
        return fail_report("hbar", {{"row", std::to_string(pos->first)},
                                    {"col", std::to_string(pos->second)},
                                    {"induced", to_string(lhs(pos->first, pos->second))},
                                    {"transposed", to_string(rhs(pos->first, pos->second))}});
    }
    return pass_report("hbar");
}

namespace {

ExactMatrix linear_part(const PolyMatrix& p) {
    ExactMatrix r(p.rows(), p.cols());
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t j = 0; j < p.cols(); ++j) {
            r(i, j) = p(i, j).coefficient(1);
        }
    }
    return r;
}

} // namespace

ExactMatrix xf_bar(Order n) {
    if (n.value() < 1) {
        throw DomainError("linearized flip action needs order >= 1");
    }
    const Poly one{1};
    const Poly t = Poly::variable();
    return linear_part(symmetric_representation(PolyOperator2x2{one, t, t, one}, n));
}

ExactMatrix xg_bar(Order n) {
    const Poly one_plus{1, 1};
    const Poly one_minus{1, -1};
    return linear_part(symmetric_representation(
        PolyOperator2x2{one_plus, Poly{}, Poly{}, one_minus}, n));
}

std::vector<Poly> flip_tensor_top_row(Order n, int cap) {
    if (n.value() > cap) {
        throw ResourceError("tensor top row for order " +
                            std::to_string(n.value()) + " exceeds cap " +
                            std::to_string(cap));
    }
    // Doubling step: the top row of M tensor X is the top row of X
    // followed by t times that row, because the top row of M = I + tF
    // is (1, t).
    std::vector<Poly> row{Poly{1}};
    const Poly t = Poly::variable();
    for (int step = 0; step < n.value(); ++step) {
        const std::size_t half = row.size();
        row.resize(2 * half);
        for (std::size_t k = 0; k < half; ++k) {
            row[half + k] = row[k] * t;
        }
    }
    return row;
}

Poly top_row_generating(Order n, int cap) {
    const std::vector<Poly> row = flip_tensor_top_row(n, cap);
    Poly from_tensor;
    for (const Poly& p : row) from_tensor += p;

    const Poly one{1};
    const Poly t = Poly::variable();
    const PolyMatrix rep =
        symmetric_representation(PolyOperator2x2{one, t, t, one}, n);
    Poly from_action;
    for (std::size_t l = 0; l < rep.cols(); ++l) {
        // Row 0 entry l is C(N, l) t^l, the weight-l class contribution.
        from_action += rep(0, l);
    }

    if (!(from_tensor == from_action)) {
        throw ConsistencyError("top-row generating polynomials disagree");
    }
    return from_tensor;
}

} // namespace kraw
