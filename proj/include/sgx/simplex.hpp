#pragma once

// Exact linear-programming feasibility over the rationals: phase-1 simplex
// with Bland's rule (deterministic, terminating, no tolerances).

#include "sgx/rational.hpp"

#include <optional>
#include <vector>

namespace sgx {

// Decides feasibility of { x >= 0 : A x = b } and returns a feasible point if
// one exists. A is row-major, every row the same length.
std::optional<std::vector<Rational>> simplex_feasible(std::vector<std::vector<Rational>> A,
                                                      std::vector<Rational> b);

}  // namespace sgx
