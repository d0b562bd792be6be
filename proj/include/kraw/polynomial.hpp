#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "kraw/matrix.hpp"
#include "kraw/numeric.hpp"

namespace kraw {

// Dense univariate polynomial over an exact ring, coefficients stored in
// ascending degree order.  Trailing zero coefficients are trimmed, so the
// zero polynomial stores nothing and two equal polynomials compare equal
// memberwise.
template <typename R>
class Polynomial {
public:
    Polynomial() = default;

    Polynomial(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }

    explicit Polynomial(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(R v) { return Polynomial({std::move(v)}); }

    // The monomial t.
    static Polynomial variable() { return Polynomial({R{0}, R{1}}); }

    bool is_zero() const noexcept { return c_.empty(); }

    // Degree of the zero polynomial is -1.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }

    const std::vector<R>& coefficients() const noexcept { return c_; }

    // Coefficient of t^i; zero beyond the stored range.
    R coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : R{}; }

    bool operator==(const Polynomial&) const = default;

    Polynomial operator+(const Polynomial& o) const {
        std::vector<R> r(std::max(c_.size(), o.c_.size()), R{});
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Polynomial(std::move(r));
    }

    Polynomial operator-(const Polynomial& o) const {
        std::vector<R> r(std::max(c_.size(), o.c_.size()), R{});
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return Polynomial(std::move(r));
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }

    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return Polynomial();
        std::vector<R> r(c_.size() + o.c_.size() - 1, R{});
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == R{}) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) {
                r[i + j] += c_[i] * o.c_[j];
            }
        }
        return Polynomial(std::move(r));
    }

    Polynomial scaled(const R& s) const {
        std::vector<R> r(c_);
        for (auto& v : r) v = v * s;
        return Polynomial(std::move(r));
    }

    Polynomial pow(unsigned long e) const {
        Polynomial r({R{1}});
        for (unsigned long i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    R evaluate(const R& x) const {
        R acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == R{}) c_.pop_back();
    }

    std::vector<R> c_;
};

using Poly = Polynomial<Int>;
using PolyMatrix = Matrix<Poly>;

template <typename R>
std::ostream& operator<<(std::ostream& os, const Polynomial<R>& p) {
    os << "[";
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        if (i) os << ", ";
        os << p.coefficients()[i];
    }
    return os << "]";
}

} // namespace kraw
