#pragma once

#include <cstddef>

namespace kraw {

namespace limits {

// Largest order accepted anywhere in the library.
inline constexpr int order_cap = 64;

// Largest order for operations that touch 2^N-sized objects (full
// Hadamard matrices, path enumerations, tensor top rows).
inline constexpr int hadamard_cap = 20;

// Largest row or column count a Kronecker product may produce.
inline constexpr std::size_t kronecker_dim_cap = std::size_t{1} << 21;

} // namespace limits

// Validated matrix order N >= 0.  Krawtchouk-family matrices of order N
// are (N+1) x (N+1); Sylvester-Hadamard matrices are 2^N x 2^N.
class Order {
public:
    explicit Order(int n, int cap = limits::order_cap);

    int value() const noexcept { return n_; }

    // N + 1, the side of the associated weight-indexed matrices.
    std::size_t dim() const noexcept { return static_cast<std::size_t>(n_) + 1; }

private:
    int n_;
};

} // namespace kraw
