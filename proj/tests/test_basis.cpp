#include <doctest.h>

#include "oracles.hpp"

using namespace freeinv;

namespace {

UnitaryRep rep(const char* name) { return *builtin_rep(name); }

Matrix columns(const std::vector<FreePoly>& polys, int n) {
  const std::size_t d = polys.front().alphabet_size();
  Matrix m(static_cast<Eigen::Index>(word_count(d, n)), static_cast<Eigen::Index>(polys.size()));
  for (std::size_t k = 0; k < polys.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = oracle::dense(polys[k], n);
  return m;
}

Matrix orthonormalize(const Matrix& m) {
  Eigen::HouseholderQR<Matrix> qr(m);
  return qr.householderQ() * Matrix::Identity(m.rows(), m.cols());
}

double span_distance(const SuperorthoBasis& b, int n, const std::vector<FreePoly>& expected) {
  return projection_distance(b.degree_span(n), orthonormalize(columns(expected, n)));
}

// max |<u_l w, u_m w'>| for l != m over all words with equal total degree <= top, by explicit products.
double brute_superortho(const SuperorthoBasis& b, int top) {
  const int d = static_cast<int>(b.alphabet_size());
  double worst = 0.0;
  for (const auto& el : b.elements())
    for (const auto& em : b.elements()) {
      if (el.index == em.index) continue;
      const auto ul = oracle::to_map(el.poly), um = oracle::to_map(em.poly);
      for (int total = std::max(el.degree, em.degree); total <= top; ++total)
        for (const auto& w : oracle::all_words(d, total - el.degree))
          for (const auto& v : oracle::all_words(d, total - em.degree)) {
            const auto a = oracle::mul(ul, {{w, 1.0}}), c = oracle::mul(um, {{v, 1.0}});
            worst = std::max(worst, std::abs(oracle::inner(a, c)));
          }
    }
  return worst;
}

FreePoly uword(const SuperorthoBasis& b, const std::vector<int>& idx) {
  FreePoly p = FreePoly::constant(b.alphabet_size(), 1.0);
  for (int i : idx) p = p * b.element(i).poly;
  return p;
}

const std::vector<std::string> kBuiltins = {"sym2-natural", "sym3-natural", "even2", "cyclic3-natural",
                                            "dihedral4-natural"};

}  // namespace

TEST_CASE("build_general: even rep") {
  const SuperorthoBasis b = build_general(rep("even2"), 2);
  CHECK(b.counts_by_degree() == std::vector<std::int64_t>{0, 0, 4});
  CHECK(span_distance(b, 2, {parse("x1*x1", 2), parse("x1*x2", 2), parse("x2*x1", 2), parse("x2*x2", 2)}) < 1e-10);
  // The canonical order gives the monomials themselves.
  for (int k = 0; k < 4; ++k)
    CHECK(norm(b.element(k + 1).poly - FreePoly::monomial(Word::from_code(2, 2, static_cast<std::uint64_t>(k)))) < 1e-12);
}

TEST_CASE("build_general: natural S2 rep") {
  const SuperorthoBasis b = build_general(rep("sym2-natural"), 4);
  CHECK(b.counts_by_degree() == std::vector<std::int64_t>{0, 1, 1, 1, 1});
  const FreePoly A = scale(parse("x1 + x2", 2), 1 / std::sqrt(2.0)), B = scale(parse("x1 - x2", 2), 1 / std::sqrt(2.0));
  CHECK(span_distance(b, 1, {A}) < 1e-10);
  CHECK(span_distance(b, 2, {B * B}) < 1e-10);
  CHECK(span_distance(b, 3, {B * A * B}) < 1e-10);
  CHECK(span_distance(b, 4, {B * A * A * B}) < 1e-10);
}

TEST_CASE("build_general: trivial group") {
  const SuperorthoBasis b = build_general(rep("trivial2"), 3);
  CHECK(b.counts_by_degree() == std::vector<std::int64_t>{0, 2, 0, 0});
  CHECK(b.element(1).poly == parse("x1", 2));
  CHECK(b.element(2).poly == parse("x2", 2));
  CHECK(b.complement_dim(1) == 0);
  CHECK(b.complement_dim(3) == 0);
}

TEST_CASE("build errors") {
  CHECK_THROWS_AS(build_general(rep("even2"), 0), BasisError);
  CHECK_THROWS_AS(build_abelian(rep("even2"), 0), BasisError);
  CHECK_THROWS_AS(build_abelian(rep("sym3-natural"), 2), BasisError);
  CHECK(build_basis(rep("sym3-natural"), 2).method() == BasisMethod::General);
  CHECK(build_basis(rep("cyclic3-natural"), 2).method() == BasisMethod::Abelian);
  CHECK(build_basis(rep("cyclic3-natural"), 2, BasisMethod::General).method() == BasisMethod::General);
}

TEST_CASE("build_abelian: cyclic Z3") {
  const SuperorthoBasis b = build_abelian(rep("cyclic3-natural"), 2);
  CHECK(b.counts_by_degree() == std::vector<std::int64_t>{0, 1, 2});
  const Complex w = std::polar(1.0, 2 * M_PI / 3);
  const double s = 1 / std::sqrt(3.0);
  const FreePoly x1 = parse("x1", 3), x2 = parse("x2", 3), x3 = parse("x3", 3);
  const FreePoly u0 = scale(x1 + x2 + x3, s);
  const FreePoly u1 = scale(x1 + scale(x2, w) + scale(x3, std::conj(w)), s);
  const FreePoly um = scale(x1 + scale(x2, std::conj(w)) + scale(x3, w), s);
  CHECK(span_distance(b, 1, {u0}) < 1e-10);
  CHECK(span_distance(b, 2, {u1 * um, um * u1}) < 1e-10);
  CHECK(build_abelian(rep("cyclic3-natural"), 4).counts_by_degree() == std::vector<std::int64_t>{0, 1, 2, 4, 8});
}

TEST_CASE("build_abelian: even rep agrees with the monomials") {
  const SuperorthoBasis b = build_abelian(rep("even2"), 2);
  CHECK(b.counts_by_degree() == std::vector<std::int64_t>{0, 0, 4});
  CHECK(span_distance(b, 2, {parse("x1*x1", 2), parse("x1*x2", 2), parse("x2*x1", 2), parse("x2*x2", 2)}) < 1e-10);
}

TEST_CASE("diagonalize_abelian") {
  const AbelianEigenbasis e = diagonalize_abelian(rep("cyclic4-natural"));
  const UnitaryRep r = rep("cyclic4-natural");
  CHECK((e.vectors.adjoint() * e.vectors - Matrix::Identity(4, 4)).norm() < 1e-12);
  CHECK(e.trivial.front());
  for (int g = 0; g < 4; ++g)
    for (int i = 0; i < 4; ++i) CHECK((r.matrix(g) * e.vectors.col(i) - e.chars[i][g] * e.vectors.col(i)).norm() < 1e-12);
}

TEST_CASE("per-degree counts equal g_n") {
  for (const auto& name : kBuiltins) {
    const UnitaryRep r = rep(name.c_str());
    const int top = r.dim() >= 4 ? 5 : 6;
    const auto g = count(r.character(), top).g;
    CHECK(build_general(r, top).counts_by_degree() == g);
    if (r.is_abelian()) CHECK(build_abelian(r, top).counts_by_degree() == g);
  }
}

TEST_CASE("abelian and general constructions span the same spaces") {
  for (const char* name : {"sym2-natural", "even2", "cyclic3-natural", "cyclic4-natural", "trivial2"}) {
    const UnitaryRep r = rep(name);
    const int top = r.dim() >= 4 ? 4 : 5;
    const SuperorthoBasis a = build_abelian(r, top), g = build_general(r, top);
    for (int n = 1; n <= top; ++n) CHECK(projection_distance(a.degree_span(n), g.degree_span(n)) < 1e-10);
  }
}

TEST_CASE("elements are invariant, unit norm and orthogonal within a degree") {
  for (const auto& name : kBuiltins) {
    const UnitaryRep r = rep(name.c_str());
    const int top = r.dim() >= 4 ? 3 : 4;
    const SuperorthoBasis b = build_general(r, top);
    for (int n = 1; n <= top; ++n) {
      const Matrix R = oracle::reynolds(r, n);
      const Matrix U = b.degree_span(n);
      if (U.cols() == 0) continue;
      CHECK((R * U - U).norm() < 1e-10);
      CHECK((U.adjoint() * U - Matrix::Identity(U.cols(), U.cols())).norm() < 1e-10);
    }
    for (const auto& e : b.elements()) {
      CHECK(std::abs(norm(e.poly) - 1.0) < 1e-10);
      CHECK(e.poly.is_homogeneous());
      CHECK(e.poly.degree() == e.degree);
      CHECK((e.coeffs - oracle::dense(e.poly, e.degree)).norm() < 1e-12);
    }
  }
}

TEST_CASE("carried complements") {
  for (const auto& name : kBuiltins) {
    const UnitaryRep r = rep(name.c_str());
    const int top = r.dim() >= 4 ? 3 : 4;
    const SuperorthoBasis b = build_general(r, top);
    REQUIRE(b.has_complements());
    const auto g = b.counts_by_degree();
    std::size_t prev = 1;
    for (int n = 1; n <= top; ++n) {
      const Matrix C = b.complement_matrix(n);
      CHECK(b.complement_dim(n) == prev * r.dim() - static_cast<std::size_t>(g[n]));
      prev = b.complement_dim(n);
      if (C.cols() == 0) continue;
      CHECK((C.adjoint() * C - Matrix::Identity(C.cols(), C.cols())).norm() < 1e-10);
      // Orthogonal to every invariant, hence annihilated by the Reynolds projector.
      CHECK((oracle::reynolds(r, n) * C).norm() < 1e-10);
      const Matrix U = b.degree_span(n);
      if (U.cols() > 0) CHECK((U.adjoint() * C).norm() < 1e-10);
    }
  }
}

TEST_CASE("construction is deterministic") {
  for (const auto& name : kBuiltins) {
    const UnitaryRep r = rep(name.c_str());
    const SuperorthoBasis a = build_general(r, 3), b = build_general(r, 3);
    CHECK(a.fingerprint() == b.fingerprint());
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(a.elements()[k].coeffs == b.elements()[k].coeffs);
  }
}

TEST_CASE("check_superorthogonality examples") {
  const SuperorthoReport even = check_superorthogonality(build_general(rep("even2"), 2), 2, 1e-12);
  CHECK(even.passed);
  CHECK(even.max_violation < 1e-12);
  CHECK(even.max_total_degree == 4);
  CHECK(even.pairs_checked > 0);
  const SuperorthoReport s2 = check_superorthogonality(build_general(rep("sym2-natural"), 4), 2, 1e-12);
  CHECK(s2.passed);
  CHECK(s2.max_violation < 1e-12);
  const SuperorthoReport one = check_superorthogonality(build_general(rep("trivial1"), 3), 2, 1e-12);
  CHECK(one.max_violation == 0.0);
  CHECK(one.pairs_checked == 0);
  CHECK_THROWS(check_superorthogonality(build_general(rep("even2"), 2), -1, 1e-12));
}

TEST_CASE("check_superorthogonality agrees with explicit products") {
  for (const char* name : {"sym2-natural", "even2", "cyclic3-natural", "sym3-natural"}) {
    const UnitaryRep r = rep(name);
    const int top = r.dim() == 3 ? 2 : 3;
    const SuperorthoBasis b = build_general(r, top);
    const SuperorthoReport rep_ = check_superorthogonality(b, 1, 1e-12);
    CHECK(rep_.max_violation < 1e-12);
    CHECK(brute_superortho(b, top + 1) < 1e-12);
  }
  // x1 and x1*x2 overlap: <x1 * x2, x1x2 * 1> = 1.
  std::vector<BasisElement> elems(2);
  elems[0] = {1, 1, parse("x1", 2), oracle::dense(parse("x1", 2), 1)};
  elems[1] = {2, 2, parse("x1*x2", 2), oracle::dense(parse("x1*x2", 2), 2)};
  const SuperorthoBasis bad(rep("trivial2"), 2, BasisMethod::General, elems, {});
  const SuperorthoReport r = check_superorthogonality(bad, 1, 1e-12);
  CHECK_FALSE(r.passed);
  CHECK(std::abs(r.max_violation - brute_superortho(bad, 3)) < 1e-12);
  CHECK(std::abs(r.max_violation - 1.0) < 1e-12);
}

TEST_CASE("distinct u-words are orthonormal") {
  for (const char* name : {"sym2-natural", "even2", "cyclic3-natural", "sym3-natural"}) {
    const UnitaryRep r = rep(name);
    const SuperorthoBasis b = build_general(r, 5);
    const auto f = count(r.character(), 5).f;
    for (int n = 1; n <= 5; ++n) {
      std::vector<FreePoly> words;
      for_each_uword(b, n, [&](std::span<const int> w) {
        words.push_back(uword(b, std::vector<int>(w.begin(), w.end())));
        CHECK((uword_coeffs(b, w) - oracle::dense(words.back(), n)).norm() < 1e-12);
      });
      CHECK(static_cast<std::int64_t>(words.size()) == f[n]);
      if (words.empty()) continue;
      const Matrix M = columns(words, n);
      CHECK((M.adjoint() * M - Matrix::Identity(M.cols(), M.cols())).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("basis constructor validation") {
  const UnitaryRep r = rep("trivial2");
  std::vector<BasisElement> e(1);
  e[0] = {2, 1, parse("x1", 2), oracle::dense(parse("x1", 2), 1)};
  CHECK_THROWS_AS(SuperorthoBasis(r, 2, BasisMethod::General, e, {}), BasisError);
  e[0] = {1, 3, parse("x1", 2), oracle::dense(parse("x1", 2), 1)};
  CHECK_THROWS_AS(SuperorthoBasis(r, 2, BasisMethod::General, e, {}), BasisError);
  e[0] = {1, 1, parse("x1 + x1*x2", 2), oracle::dense(parse("x1", 2), 1)};
  CHECK_THROWS_AS(SuperorthoBasis(r, 2, BasisMethod::General, e, {}), BasisError);
  CHECK_THROWS_AS(build_general(r, 2).element(3), std::out_of_range);
}
