#pragma once

// Published reference matrices, transcribed entry for entry.  Kept in one
// place so the acceptance suite compares against literal grids rather than
// anything computed by the library under test.

#include <vector>

#include "kraw/matrix.hpp"
#include "kraw/multivariate.hpp"
#include "kraw/numeric.hpp"

namespace fixtures {

// Krawtchouk matrices of orders 0..6.
inline std::vector<kraw::ExactMatrix> krawtchouk_tables() {
    using M = kraw::ExactMatrix;
    std::vector<M> t;
    t.push_back(M{{1}});
    t.push_back(M{{1, 1}, {1, -1}});
    t.push_back(M{{1, 1, 1}, {2, 0, -2}, {1, -1, 1}});
    t.push_back(M{{1, 1, 1, 1},
                  {3, 1, -1, -3},
                  {3, -1, -1, 3},
                  {1, -1, 1, -1}});
    t.push_back(M{{1, 1, 1, 1, 1},
                  {4, 2, 0, -2, -4},
                  {6, 0, -2, 0, 6},
                  {4, -2, 0, 2, -4},
                  {1, -1, 1, -1, 1}});
    t.push_back(M{{1, 1, 1, 1, 1, 1},
                  {5, 3, 1, -1, -3, -5},
                  {10, 2, -2, -2, 2, 10},
                  {10, -2, -2, 2, 2, -10},
                  {5, -3, 1, 1, -3, 5},
                  {1, -1, 1, -1, 1, -1}});
    t.push_back(M{{1, 1, 1, 1, 1, 1, 1},
                  {6, 4, 2, 0, -2, -4, -6},
                  {15, 5, -1, -3, -1, 5, 15},
                  {20, 0, -4, 0, 4, 0, -20},
                  {15, -5, -1, 3, -1, -5, 15},
                  {6, -4, 2, 0, -2, 4, -6},
                  {1, -1, 1, -1, 1, -1, 1}});
    return t;
}

// Symmetric Krawtchouk matrices of orders 0..6.
inline std::vector<kraw::ExactMatrix> symmetric_tables() {
    using M = kraw::ExactMatrix;
    std::vector<M> t;
    t.push_back(M{{1}});
    t.push_back(M{{1, 1}, {1, -1}});
    t.push_back(M{{1, 2, 1}, {2, 0, -2}, {1, -2, 1}});
    t.push_back(M{{1, 3, 3, 1},
                  {3, 3, -3, -3},
                  {3, -3, -3, 3},
                  {1, -3, 3, -1}});
    t.push_back(M{{1, 4, 6, 4, 1},
                  {4, 8, 0, -8, -4},
                  {6, 0, -12, 0, 6},
                  {4, -8, 0, 8, -4},
                  {1, -4, 6, -4, 1}});
    t.push_back(M{{1, 5, 10, 10, 5, 1},
                  {5, 15, 10, -10, -15, -5},
                  {10, 10, -20, -20, 10, 10},
                  {10, -10, -20, 20, 10, -10},
                  {5, -15, 10, 10, -15, 5},
                  {1, -5, 10, -10, 5, -1}});
    t.push_back(M{{1, 6, 15, 20, 15, 6, 1},
                  {6, 24, 30, 0, -30, -24, -6},
                  {15, 30, -15, -60, -15, 30, 15},
                  {20, 0, -60, 0, 60, 0, -20},
                  {15, -30, -15, 60, -15, -30, 15},
                  {6, -24, 30, 0, -30, 24, -6},
                  {1, -6, 15, -20, 15, -6, 1}});
    return t;
}

// Induced action of the 2x2 Hadamard operator at order 4.
inline kraw::ExactMatrix hbar4() {
    return kraw::ExactMatrix{{1, 4, 6, 4, 1},
                             {1, 2, 0, -2, -1},
                             {1, 0, -2, 0, 1},
                             {1, -2, 0, 2, -1},
                             {1, -4, 6, -4, 1}};
}

// Order-3 ladder triple.
inline kraw::ExactMatrix kac3() {
    return kraw::ExactMatrix{
        {0, 1, 0, 0}, {3, 0, 2, 0}, {0, 2, 0, 3}, {0, 0, 1, 0}};
}

inline kraw::ExactMatrix lambda3() {
    return kraw::ExactMatrix{
        {3, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -3}};
}

inline kraw::ExactMatrix abar3() {
    return kraw::ExactMatrix{
        {0, -1, 0, 0}, {3, 0, -2, 0}, {0, 2, 0, -3}, {0, 0, 1, 0}};
}

// Step distributions used across the multivariate checks.  The first site
// value is zero in all of them, which the Lauricella reduction requires.
inline kraw::SiteDistribution coin_sites() {
    using kraw::Rat;
    return kraw::SiteDistribution({Rat(0), Rat(1)}, {Rat(1, 2), Rat(1, 2)});
}

inline kraw::SiteDistribution three_sites() {
    using kraw::Rat;
    return kraw::SiteDistribution({Rat(0), Rat(1), Rat(2)},
                                  {Rat(1, 4), Rat(1, 2), Rat(1, 4)});
}

inline kraw::SiteDistribution skewed_sites() {
    using kraw::Rat;
    return kraw::SiteDistribution({Rat(0), Rat(1, 2), Rat(3)},
                                  {Rat(1, 2), Rat(1, 3), Rat(1, 6)});
}

inline kraw::SiteDistribution four_sites() {
    using kraw::Rat;
    return kraw::SiteDistribution(
        {Rat(0), Rat(1), Rat(2), Rat(3)},
        {Rat(1, 8), Rat(3, 8), Rat(3, 8), Rat(1, 8)});
}

} // namespace fixtures
