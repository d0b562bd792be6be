#include "kraw/order.hpp"

#include <string>

#include "kraw/errors.hpp"

namespace kraw {

Order::Order(int n, int cap) : n_(n) {
    if (n < 0) {
        throw DomainError("order must be nonnegative, got " + std::to_string(n));
    }
    if (n > cap) {
        throw ResourceError("order " + std::to_string(n) + " exceeds cap " +
                            std::to_string(cap));
    }
}

} // namespace kraw
