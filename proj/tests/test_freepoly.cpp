#include <doctest.h>

#include "oracles.hpp"

using namespace freeinv;

namespace {

FreePoly P(const char* text, std::size_t d = 2) { return parse(text, d); }

const char* kEven = "1 + 3*x1*x2 - 7*x1*x1 - x2*x1*x2*x2";

}  // namespace

TEST_CASE("word packing and order") {
  const Letter l[] = {1, 0, 2};
  Word w(3, l);
  CHECK(w.degree() == 3);
  CHECK(w.code() == 1 * 9 + 0 * 3 + 2);
  CHECK(w.to_string() == "x2*x1*x3");
  CHECK(Word(3).to_string() == "1");
  CHECK(Word::from_code(3, 3, w.code()) == w);
  CHECK(w.prefix(1).concat(w.suffix_from(1)) == w);
  CHECK(Word::letter(3, 2) < w);  // shorter first
  const Letter a[] = {0, 2}, b[] = {1, 0};
  CHECK(Word(3, a) < Word(3, b));
  const Letter bad[] = {3};
  CHECK_THROWS_AS(Word(3, bad), std::out_of_range);
  CHECK_THROWS_AS(word_count(2, 64), std::overflow_error);
  CHECK(word_count(2, 63) == (1ull << 63));
}

TEST_CASE("add examples") {
  CHECK((P("x1") + P("-x1")).is_zero());
  CHECK(P("x1 + 2*x2") + P("x2") == P("x1 + 3*x2"));
  std::mt19937_64 rng(1);
  const FreePoly p = oracle::random_poly(3, 4, 12, rng);
  CHECK(p + FreePoly(3) == p);
  CHECK_THROWS_AS(P("x1") + FreePoly(3), AlphabetMismatch);
}

TEST_CASE("mul examples") {
  const FreePoly m = P("x1") * P("x2");
  REQUIRE(m.size() == 1);
  CHECK(m.degree() == 2);
  CHECK(m == P("x1*x2"));
  CHECK(P("x1 + x2") * P("x1 - x2") == P("x1*x1 - x1*x2 + x2*x1 - x2*x2"));
  CHECK((P("x1 + x2") * P("x1 - x2")).size() == 4);
  std::mt19937_64 rng(2);
  const FreePoly p = oracle::random_poly(2, 4, 10, rng);
  CHECK(FreePoly::constant(2, 1.0) * p == p);
  CHECK_THROWS_AS(P("x1") * FreePoly(3), AlphabetMismatch);
}

TEST_CASE("mul matches brute-force concatenation") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const std::size_t d = 1 + t % 3;
    const FreePoly p = oracle::random_poly(d, 4, 8, rng), q = oracle::random_poly(d, 4, 8, rng);
    CHECK(oracle::distance(oracle::to_map(p * q), oracle::mul(oracle::to_map(p), oracle::to_map(q))) < 1e-12);
    if (!p.is_zero() && !q.is_zero()) CHECK((p * q).degree() == p.degree() + q.degree());
  }
}

TEST_CASE("homogeneous_component examples") {
  const HomogeneousSlice s = homogeneous_component(P(kEven), 2);
  REQUIRE(s.coeffs.size() == 4);
  CHECK(s.coeffs[0] == Complex(-7));
  CHECK(s.coeffs[1] == Complex(3));
  CHECK(s.coeffs[2] == Complex(0));
  CHECK(s.coeffs[3] == Complex(0));
  CHECK(homogeneous_component(P(kEven), 7).coeffs.isZero());
  CHECK(homogeneous_component(P(kEven), 7).coeffs.size() == 128);
  const HomogeneousSlice one = homogeneous_component(P("x1 + 2*x2"), 1);
  CHECK(one.coeffs[0] == Complex(1));
  CHECK(one.coeffs[1] == Complex(2));
  CHECK_THROWS_AS(homogeneous_component(P("x1"), -1), std::invalid_argument);
  CHECK_THROWS(HomogeneousSlice(2, 2, Vector::Zero(3)));
}

TEST_CASE("homogeneous slices round trip and match the oracle layout") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const std::size_t d = 1 + t % 3;
    const FreePoly p = oracle::random_poly(d, 4, 10, rng);
    FreePoly rebuilt(d);
    for (int n = 0; n <= 4; ++n) {
      const HomogeneousSlice s = homogeneous_component(p, n);
      CHECK((s.coeffs - oracle::dense(p, n)).norm() == 0.0);
      rebuilt += FreePoly::from_slice(s);
    }
    CHECK(rebuilt == p);
  }
}

TEST_CASE("inner_product and norm examples") {
  CHECK(inner_product(P("x1 + 2*x2"), P("x1 + 2*x2")) == Complex(5));
  CHECK(inner_product(P("x1*x2"), P("x2*x1")) == Complex(0));
  CHECK(inner_product(P("i*x1"), P("x1")) == Complex(0, 1));
  CHECK(inner_product(P("x1"), P("i*x1")) == Complex(0, -1));
  CHECK(norm(FreePoly(2)) == 0.0);
  CHECK(norm(scale(P("x1 + x2"), 1 / std::sqrt(2.0))) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(inner_product(P("x1"), FreePoly(3)), AlphabetMismatch);
}

TEST_CASE("grading identity on random homogeneous instances") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const std::size_t d = 1 + t % 3;
    const int n = 1 + t % 2, m = 1 + (t / 2) % 3;
    const FreePoly p = oracle::random_homogeneous(d, n, rng), q = oracle::random_homogeneous(d, n, rng);
    const FreePoly r = oracle::random_homogeneous(d, m, rng), s = oracle::random_homogeneous(d, m, rng);
    const Complex lhs = oracle::inner(oracle::mul(oracle::to_map(p), oracle::to_map(r)),
                                      oracle::mul(oracle::to_map(q), oracle::to_map(s)));
    const Complex rhs = inner_product(p, q) * inner_product(r, s);
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(rhs)));
    CHECK(std::abs(inner_product(p * r, q * s) - rhs) < 1e-12 * std::max(1.0, std::abs(rhs)));
    CHECK(std::abs(norm(p * r) - norm(p) * norm(r)) < 1e-12 * norm(p) * norm(r));
  }
}

TEST_CASE("words are orthonormal and degrees orthogonal") {
  const auto words = oracle::all_words(2, 3);
  for (std::size_t a = 0; a < words.size(); ++a)
    for (std::size_t b = 0; b < words.size(); ++b) {
      std::vector<Letter> la(words[a].begin(), words[a].end()), lb(words[b].begin(), words[b].end());
      CHECK(inner_product(FreePoly::monomial(Word(2, la)), FreePoly::monomial(Word(2, lb))) == Complex(a == b ? 1 : 0));
    }
  std::mt19937_64 rng(6);
  const FreePoly p = oracle::random_poly(3, 4, 20, rng);
  for (int n = 0; n <= 4; ++n)
    for (int m = n + 1; m <= 4; ++m) CHECK(inner_product(p.homogeneous_part(n), p.homogeneous_part(m)) == Complex(0));
}

TEST_CASE("ring axioms on random instances") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    const std::size_t d = 1 + t % 3;
    const FreePoly p = oracle::random_poly(d, 3, 6, rng, false), q = oracle::random_poly(d, 3, 6, rng, false),
                   r = oracle::random_poly(d, 3, 6, rng, false);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p - p == FreePoly(d));
  }
}

TEST_CASE("canonical form drops dust") {
  FreePoly p = P("x1 + x2");
  p -= P("x1");
  CHECK(p == P("x2"));
  p += FreePoly::monomial(Word::letter(2, 0), 1e-16);
  CHECK(p.size() == 1);
  CHECK(FreePoly(2).degree() == kZeroDegree);
  CHECK(FreePoly::constant(2, 0.0).is_zero());
}

TEST_CASE("parse examples") {
  const FreePoly e = P(kEven);
  CHECK(e.size() == 4);
  CHECK(e.coeff(Word(2)) == Complex(1));
  CHECK(e.coeff(P("x1*x1").terms()[0].word) == Complex(-7));
  CHECK(e.coeff(P("x2*x1*x2*x2").terms()[0].word) == Complex(-1));
  CHECK(P("0").is_zero());
  CHECK(P("(x1+x2)*(x1-x2)").size() == 4);
  CHECK(P("2i*x1") == scale(P("x1"), Complex(0, 2)));
  CHECK(P("(1+2i)*x2") == scale(P("x2"), Complex(1, 2)));
  CHECK(P("-1.5e1 * x1") == scale(P("x1"), -15.0));
  CHECK(P("  x1 *x2\n- x2 ") == P("x1*x2 - x2"));
  CHECK(parse_infer("x3*x1").alphabet_size() == 3);
  CHECK(parse("u2*u1", 2, 'u') == P("x2*x1"));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(P("x3"), ParseError);
  CHECK_THROWS_AS(P("x0"), ParseError);
  CHECK_THROWS_AS(P("x1 +"), ParseError);
  CHECK_THROWS_AS(P("(x1"), ParseError);
  CHECK_THROWS_AS(P("x1 x2"), ParseError);
  CHECK_THROWS_AS(P("y1"), ParseError);
  try {
    P("x1 + x9");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("format and parse round trip") {
  CHECK(format(P(kEven)) == "1 - 7*x1*x1 + 3*x1*x2 - x2*x1*x2*x2");
  CHECK(format(FreePoly(2)) == "0");
  CHECK(format(P("-x1")) == "-x1");
  CHECK(format(P("2i*x1")) == "2i*x1");
  CHECK(format(P("(1-2i)*x1")) == "(1-2i)*x1");
  std::mt19937_64 rng(8);
  std::normal_distribution<double> g;
  for (int t = 0; t < 50; ++t) {
    const std::size_t d = 1 + t % 3;
    FreePoly p = oracle::random_poly(d, 4, 8, rng);
    p += scale(oracle::random_poly(d, 3, 4, rng), Complex(g(rng), g(rng)));
    const FreePoly back = parse(format(p), d);
    CHECK(back == p);
    CHECK(format(back) == format(p));
  }
}
