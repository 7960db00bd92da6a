#pragma once

#include <cstdint>
#include <random>

#include "freeinv/group.hpp"

namespace freeinv {

// Independent complex Gaussian coefficients on every word of degree
// min_degree..max_degree.
FreePoly random_polynomial(std::size_t d, int min_degree, int max_degree, std::mt19937_64& rng);

// Reynolds projection of a random polynomial.
FreePoly random_invariant(const UnitaryRep& rep, int min_degree, int max_degree, std::mt19937_64& rng);

}  // namespace freeinv
