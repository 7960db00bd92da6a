#include "freeinv/counting.hpp"

#include <cmath>
#include <string>

namespace freeinv {

namespace {

using Poly = std::vector<Complex>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Complex{});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

void poly_axpy(Poly& acc, Complex s, const Poly& x) {
  if (acc.size() < x.size()) acc.resize(x.size(), Complex{});
  for (std::size_t i = 0; i < x.size(); ++i) acc[i] += s * x[i];
}

void trim(Poly& p, double tol) {
  while (p.size() > 1 && std::abs(p.back()) < tol) p.pop_back();
  for (auto& c : p) {
    if (std::abs(c.real()) < tol) c.real(0.0);
    if (std::abs(c.imag()) < tol) c.imag(0.0);
  }
}

}  // namespace

std::vector<Complex> RationalSeries::expand(int n) const {
  if (den.empty() || std::abs(den[0]) == 0.0) throw CountingError("series denominator vanishes at z = 0");
  std::vector<Complex> out(n + 1, Complex{});
  for (int k = 0; k <= n; ++k) {
    Complex acc = k < static_cast<int>(num.size()) ? num[k] : Complex{};
    for (int j = 1; j <= k && j < static_cast<int>(den.size()); ++j) acc -= den[j] * out[k - j];
    out[k] = acc / den[0];
  }
  return out;
}

std::vector<std::int64_t> f_coefficients(const Character& chi, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be nonnegative");
  std::vector<std::int64_t> f(max_degree + 1);
  std::vector<Complex> power(chi.values.size(), Complex(1.0));
  for (int n = 0; n <= max_degree; ++n) {
    Complex s{};
    for (std::size_t c = 0; c < chi.values.size(); ++c) s += static_cast<double>(chi.class_sizes[c]) * power[c];
    s /= static_cast<double>(chi.group_order);
    const double r = std::round(s.real());
    const double scale = std::max(1.0, std::abs(r));
    if (std::abs(s - Complex(r)) > 1e-6 * scale || r < 0)
      throw CountingError("f_" + std::to_string(n) + " = (" + std::to_string(s.real()) + ", " +
                          std::to_string(s.imag()) + ") is not a nonnegative integer; invalid character data");
    f[n] = static_cast<std::int64_t>(r);
    for (std::size_t c = 0; c < chi.values.size(); ++c) power[c] *= chi.values[c];
  }
  return f;
}

std::vector<std::int64_t> g_from_f(std::span<const std::int64_t> f) {
  if (f.empty() || f[0] != 1) throw CountingError("f_0 must equal 1");
  std::vector<std::int64_t> g(f.size(), 0);
  for (std::size_t n = 1; n < f.size(); ++n) {
    std::int64_t acc = f[n];
    for (std::size_t k = 1; k < n; ++k) acc -= g[k] * f[n - k];
    if (acc < 0) throw CountingError("g_" + std::to_string(n) + " is negative; inconsistent invariant dimensions");
    g[n] = acc;
  }
  return g;
}

RationalSeries closed_form(const Character& chi) {
  const std::size_t k = chi.values.size();
  auto factor = [&](std::size_t s) { return Poly{Complex(1.0), -chi.values[s]}; };
  Poly prod{Complex(1.0)};
  for (std::size_t s = 0; s < k; ++s) prod = poly_mul(prod, factor(s));
  Poly den{Complex{}};
  for (std::size_t t = 0; t < k; ++t) {
    Poly term{Complex(1.0)};
    for (std::size_t s = 0; s < k; ++s)
      if (s != t) term = poly_mul(term, factor(s));
    poly_axpy(den, static_cast<double>(chi.class_sizes[t]), term);
  }
  Poly num = den;
  poly_axpy(num, -static_cast<double>(chi.group_order), prod);
  const Complex lead = den[0];
  for (auto& c : num) c /= lead;
  for (auto& c : den) c /= lead;
  trim(num, 1e-12);
  trim(den, 1e-12);
  return {num, den};
}

CountReport count(const Character& chi, int max_degree) {
  CountReport rep;
  rep.max_degree = max_degree;
  rep.f = f_coefficients(chi, max_degree);
  rep.g = g_from_f(rep.f);
  rep.closed_form = closed_form(chi);
  const auto series = rep.closed_form.expand(max_degree);
  for (int n = 0; n <= max_degree; ++n) {
    const double scale = std::max(1.0, static_cast<double>(rep.g[n]));
    if (std::abs(series[n] - Complex(static_cast<double>(rep.g[n]))) > 1e-8 * scale)
      throw CountingError("closed form disagrees with g_" + std::to_string(n));
  }
  return rep;
}

}  // namespace freeinv
