#pragma once

#include <vector>

#include "pvi/rational.hpp"

namespace pvi {

/// All xi in [0,1]^terms, nondecreasing, with each xi_k = p/q and q <= max_denominator,
/// such that sum_k cos(pi xi_k) = 0 exactly. Sorted lexicographically.
/// threads = 0 picks the hardware concurrency.
std::vector<std::vector<Rational>> solve_trig_diophantine(int terms, int max_denominator, unsigned threads = 1);

/// Distinct reduced fractions p/q in [0,1] with q <= max_denominator, ascending.
std::vector<Rational> farey_angles(int max_denominator);

}  // namespace pvi
