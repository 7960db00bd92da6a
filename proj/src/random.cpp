#include "freeinv/random.hpp"

namespace freeinv {

FreePoly random_polynomial(std::size_t d, int min_degree, int max_degree, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  std::vector<Term> terms;
  for (int n = min_degree; n <= max_degree; ++n) {
    const auto count = word_count(d, n);
    for (std::uint64_t w = 0; w < count; ++w) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      terms.push_back({Word::from_code(d, n, w), Complex(re, im)});
    }
  }
  return FreePoly(d, std::move(terms));
}

FreePoly random_invariant(const UnitaryRep& rep, int min_degree, int max_degree, std::mt19937_64& rng) {
  return reynolds(rep, random_polynomial(rep.dim(), min_degree, max_degree, rng));
}

}  // namespace freeinv
