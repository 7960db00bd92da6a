#include "freeinv/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>

namespace freeinv {

namespace {

int parse_suffix(const std::string& digits) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) throw InputError("bad number in group name");
  return v;
}

const Json& field(const Json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string(where) + ": missing \"" + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key, const char* where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer()) throw InputError(std::string(where) + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

FiniteGroup group_from_json(const Json& g) {
  const std::string kind = field(g, "kind", "group").get<std::string>();
  if (kind == "symmetric") return group_from_generators(GroupKind::Symmetric, int_field(g, "d", "group"));
  if (kind == "cyclic") return group_from_generators(GroupKind::Cyclic, int_field(g, "n", "group"));
  if (kind == "dihedral") return group_from_generators(GroupKind::Dihedral, int_field(g, "n", "group"));
  if (kind == "trivial") return group_from_generators(GroupKind::Trivial, 1);
  if (kind == "table") {
    const Json& t = field(g, "table", "group");
    if (!t.is_array()) throw InputError("group: \"table\" must be a nested array");
    return group_from_table(t.get<std::vector<std::vector<int>>>());
  }
  throw InputError("group: unknown kind \"" + kind + "\"");
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v[i]));
  return out;
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

std::optional<UnitaryRep> builtin_rep(const std::string& name) {
  static const std::regex natural(R"((sym|cyclic|dihedral)(\d+)-natural)");
  static const std::regex trivial(R"(trivial(\d+))");
  std::smatch m;
  if (std::regex_match(name, m, natural)) {
    const int k = parse_suffix(m[2]);
    const GroupKind kind =
        m[1] == "sym" ? GroupKind::Symmetric : m[1] == "cyclic" ? GroupKind::Cyclic : GroupKind::Dihedral;
    return UnitaryRep::natural(group_from_generators(kind, k), name);
  }
  if (std::regex_match(name, m, trivial)) {
    const int d = parse_suffix(m[1]);
    if (d < 1) throw InputError("trivial rep needs d >= 1");
    return UnitaryRep(group_from_generators(GroupKind::Trivial, 1), {Matrix::Identity(d, d)}, name);
  }
  if (name == "even2")
    return UnitaryRep::diagonal(group_from_generators(GroupKind::Cyclic, 2), {{1.0, 1.0}, {-1.0, -1.0}}, name);
  return std::nullopt;
}

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw InputError("complex numbers must be [re, im] pairs");
}

UnitaryRep rep_from_json(const Json& j) {
  FiniteGroup group = group_from_json(field(j, "group", "input"));
  const Json& r = field(j, "rep", "input");
  const std::string kind = field(r, "kind", "rep").get<std::string>();
  const std::string name = j.value("name", group.name() + "-" + kind);
  std::optional<int> dim;
  if (r.contains("dim")) dim = int_field(r, "dim", "rep");

  UnitaryRep rep = [&]() -> UnitaryRep {
    if (kind == "permutation") {
      if (!r.contains("data") || r["data"].is_null()) return UnitaryRep::natural(group, name);
      std::vector<Permutation> images;
      for (const auto& row : r["data"]) {
        Permutation p;
        for (const auto& v : row) p.push_back(v.get<int>() - 1);
        images.push_back(std::move(p));
      }
      if (images.empty()) throw InputError("rep: empty permutation data");
      return UnitaryRep::permutation(group, images, name);
    }
    if (kind == "diagonal") {
      std::vector<std::vector<Complex>> diags;
      for (const auto& row : field(r, "data", "rep")) {
        std::vector<Complex> diag;
        for (const auto& v : row) diag.push_back(complex_from_json(v));
        diags.push_back(std::move(diag));
      }
      return UnitaryRep::diagonal(group, diags, name);
    }
    if (kind == "matrices") {
      std::vector<Matrix> mats;
      for (const auto& mj : field(r, "data", "rep")) {
        const auto n = static_cast<Eigen::Index>(mj.size());
        Matrix m(n, n);
        for (Eigen::Index a = 0; a < n; ++a) {
          if (static_cast<Eigen::Index>(mj[a].size()) != n) throw InputError("rep: matrices must be square");
          for (Eigen::Index b = 0; b < n; ++b) m(a, b) = complex_from_json(mj[a][b]);
        }
        mats.push_back(std::move(m));
      }
      if (mats.empty()) throw InputError("rep: empty matrix data");
      return UnitaryRep(group, std::move(mats), name);
    }
    throw InputError("rep: unknown kind \"" + kind + "\"");
  }();
  if (dim && static_cast<std::size_t>(*dim) != rep.dim())
    throw InputError("rep: \"dim\" is " + std::to_string(*dim) + " but the data has dimension " +
                     std::to_string(rep.dim()));
  return rep;
}

Json rep_to_json(const UnitaryRep& rep) {
  Json mats = Json::array();
  for (const auto& m : rep.matrices()) mats.push_back(matrix_to_json(m));
  return Json{{"name", rep.name()},
              {"group", {{"kind", "table"}, {"table", rep.group().table()}}},
              {"rep", {{"kind", "matrices"}, {"dim", rep.dim()}, {"data", std::move(mats)}}}};
}

UnitaryRep load_rep(const std::string& source) {
  if (auto rep = builtin_rep(source)) return *rep;
  std::ifstream probe(source);
  if (!probe) throw InputError("\"" + source + "\" is neither a built-in group name nor a readable file");
  return rep_from_json(read_json_file(source));
}

Json to_json(const CountReport& r) {
  Json num = Json::array(), den = Json::array();
  for (auto c : r.closed_form.num) num.push_back(complex_to_json(c));
  for (auto c : r.closed_form.den) den.push_back(complex_to_json(c));
  return Json{{"max_degree", r.max_degree},
              {"f", r.f},
              {"g", r.g},
              {"closed_form", {{"num", std::move(num)}, {"den", std::move(den)}}}};
}

Json to_json(const RewriteResult& r) {
  return Json{{"hat", format(r.hat.poly, 'u')},
              {"residual_norm", r.residual_norm},
              {"basis_fingerprint", r.hat.basis_fingerprint}};
}

Json to_json(const SuperorthoBasis& basis) {
  Json elems = Json::array();
  for (const auto& e : basis.elements())
    elems.push_back(Json{{"index", e.index},
                         {"degree", e.degree},
                         {"polynomial", format(e.poly)},
                         {"coefficients", vector_to_json(e.coeffs)}});
  return Json{{"rep", basis.rep().name()},
              {"rep_fingerprint", basis.rep().fingerprint()},
              {"max_degree", basis.max_degree()},
              {"method", basis.method() == BasisMethod::General ? "general" : "abelian"},
              {"fingerprint", basis.fingerprint()},
              {"counts_by_degree", basis.counts_by_degree()},
              {"elements", std::move(elems)}};
}

SuperorthoBasis basis_from_json(const Json& j, const UnitaryRep& rep) {
  if (field(j, "rep_fingerprint", "basis").get<std::string>() != rep.fingerprint())
    throw InputError("basis file was built for a different representation");
  const int max_degree = int_field(j, "max_degree", "basis");
  const std::string method = j.value("method", "general");
  const std::size_t d = rep.dim();
  std::vector<BasisElement> elems;
  for (const auto& ej : field(j, "elements", "basis")) {
    BasisElement e;
    e.index = int_field(ej, "index", "basis element");
    e.degree = int_field(ej, "degree", "basis element");
    if (e.degree < 1 || e.degree > max_degree)
      throw BasisError("basis element u" + std::to_string(e.index) + " has degree out of range");
    const Json& cj = field(ej, "coefficients", "basis element");
    if (cj.size() != word_count(d, e.degree))
      throw BasisError("basis element u" + std::to_string(e.index) + " has " + std::to_string(cj.size()) +
                       " coefficients, expected d^degree");
    e.coeffs.resize(static_cast<Eigen::Index>(cj.size()));
    for (std::size_t k = 0; k < cj.size(); ++k) e.coeffs[static_cast<Eigen::Index>(k)] = complex_from_json(cj[k]);
    e.poly = FreePoly::from_slice(HomogeneousSlice(d, e.degree, e.coeffs));
    if (ej.contains("polynomial")) {
      const FreePoly text = parse(ej["polynomial"].get<std::string>(), d);
      if (norm(text - e.poly) > 1e-9 * std::max(1.0, norm(e.poly)))
        throw BasisError("basis element u" + std::to_string(e.index) + ": polynomial text and coefficients disagree");
    }
    elems.push_back(std::move(e));
  }
  return SuperorthoBasis(rep, max_degree, method == "abelian" ? BasisMethod::Abelian : BasisMethod::General,
                         std::move(elems), {});
}

Json to_json(const SuperorthoReport& r) {
  return Json{{"max_violation", r.max_violation},
              {"worst_pair", {r.worst_lambda, r.worst_mu}},
              {"max_total_degree", r.max_total_degree},
              {"pairs_checked", r.pairs_checked},
              {"passed", r.passed}};
}

Json to_json(const RowBallReport& r) {
  return Json{{"psd_gap", r.psd_gap},
              {"psd_gap_with_complement", optional_number(r.psd_gap_with_complement)},
              {"violations", r.violations},
              {"passed", r.passed}};
}

Json to_json(const SupNormReport& r) {
  return Json{{"sup_p_est", r.sup_p_est},
              {"sup_hat_est", r.sup_hat_est},
              {"fock_lower", r.fock_lower},
              {"fock_upper", r.fock_upper},
              {"max_factor_error", r.max_factor_error},
              {"trials", r.trials},
              {"seed", r.seed},
              {"violations", r.violations},
              {"passed", r.passed}};
}

Json to_json(const DilationReport& r) {
  return Json{{"max_block_error", r.max_block_error},
              {"max_gram_error", r.max_gram_error},
              {"max_closure_excess", r.max_closure_excess},
              {"max_corner_error", r.max_corner_error},
              {"max_norm_excess", r.max_norm_excess},
              {"trials", r.trials},
              {"violations", r.violations},
              {"passed", r.passed}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace freeinv
