#include "hcpair/fixture.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hcpair {

namespace {

using nlohmann::json;

Field parse_field(const std::string& text) {
  if (text == "Q") return Field::rationals();
  if (text.size() > 1 && text[0] == 'F')
    return Field::prime(std::stoull(text.substr(1)));
  throw error("unknown field descriptor: " + text);
}

Scalar parse_scalar(const json& j, const Field& f) {
  if (j.is_number_integer()) return Scalar::of(j.get<long>(), f);
  return Scalar::parse(j.get<std::string>(), f);
}

Mat parse_matrix(const json& j, const Field& f) {
  Mat m;
  for (auto& row : j) {
    Vec r;
    for (auto& e : row) r.push_back(parse_scalar(e, f));
    m.push_back(std::move(r));
  }
  return m;
}

Vec parse_vector(const json& j, const Field& f) {
  Vec v;
  for (auto& e : j) v.push_back(parse_scalar(e, f));
  return v;
}

// coordinate variable names: g11..gmm and d
std::uint32_t coordinate_index(const std::string& name, std::uint32_t m) {
  if (name == "d") return m * m;
  if (name.size() == 3 && name[0] == 'g') {
    std::uint32_t r = name[1] - '1', c = name[2] - '1';
    if (r < m && c < m) return r * m + c;
  }
  throw error("unknown coordinate name: " + name);
}

Poly parse_poly(const json& j, std::uint32_t m, const Field& f) {
  std::uint32_t nvars = m * m + 1;
  Poly p(nvars, f);
  for (auto& term : j) {
    Scalar c = parse_scalar(term.at("c"), f);
    std::vector<std::uint32_t> exps(nvars, 0);
    if (term.contains("m"))
      for (auto& [name, e] : term.at("m").items())
        exps[coordinate_index(name, m)] += e.get<std::uint32_t>();
    p.insert_term(std::move(exps), c);
  }
  return p;
}

Laurent parse_laurent(const json& j,
                      const std::vector<std::string>& param_names,
                      const std::vector<bool>& invertible, const Field& f) {
  std::uint32_t np = static_cast<std::uint32_t>(param_names.size());
  Laurent p(np, f);
  for (auto& term : j) {
    Scalar c = parse_scalar(term.at("c"), f);
    std::vector<std::int32_t> exps(np, 0);
    if (term.contains("m"))
      for (auto& [name, e] : term.at("m").items()) {
        auto it = std::find(param_names.begin(), param_names.end(), name);
        if (it == param_names.end())
          throw error("unknown parameter name: " + name);
        std::size_t idx = it - param_names.begin();
        std::int32_t exp = e.get<std::int32_t>();
        if (exp < 0 && !invertible[idx])
          throw error("negative exponent on a non-invertible parameter");
        exps[idx] = exp;
      }
    p.insert_term(std::move(exps), c);
  }
  return p;
}

Parametrization parse_parametrization(const json& j, std::uint32_t m,
                                      const Field& f) {
  Parametrization param;
  for (auto& pj : j.at("params")) {
    param.param_names.push_back(pj.at("name").get<std::string>());
    param.invertible.push_back(pj.value("invertible", false));
  }
  for (auto& row : j.at("matrix")) {
    std::vector<Laurent> r;
    for (auto& e : row)
      r.push_back(parse_laurent(e, param.param_names, param.invertible, f));
    param.matrix.push_back(std::move(r));
  }
  param.d = parse_laurent(j.at("d"), param.param_names, param.invertible, f);
  if (param.matrix.size() != m)
    throw error("parametrization has the wrong matrix size");
  return param;
}

Poly det_poly(std::uint32_t m, const Field& f) {
  std::vector<std::vector<Poly>> sym(m, std::vector<Poly>(m));
  for (std::uint32_t r = 0; r < m; ++r)
    for (std::uint32_t c = 0; c < m; ++c)
      sym[r][c] = Poly::variable(m * m + 1, f, r * m + c);
  return poly_det(sym);
}

void validate_fixture(FixtureDocument& doc) {
  HCPair& pair = doc.pair;
  const MatrixGroup& g = pair.group;
  std::size_t n = pair.odd_dim();
  if (pair.rho.size() != n) throw error("rho must be n x n");
  for (auto& row : pair.rho)
    if (row.size() != n) throw error("rho must be n x n");
  if (pair.odd_bracket.size() != n) throw error("bracket table must be n x n");
  for (auto& row : pair.odd_bracket) {
    if (row.size() != n) throw error("bracket table must be n x n");
    for (auto& v : row)
      if (v.size() != g.lie_dim())
        throw error("bracket values must live over the Lie basis");
  }
  for (auto& x : g.lie_basis)
    if (x.size() != g.m) throw error("Lie basis matrix has the wrong size");
  for (auto& sub : pair.subpairs) {
    for (auto& w : sub.w_basis)
      if (w.size() != n) throw error("W basis vector has the wrong length");
    for (auto& x : sub.lie_h)
      if (x.size() != g.m) throw error("Lie(H) matrix has the wrong size");
    if (sub.param.empty() && sub.point_list.empty() && !sub.w_basis.empty() &&
        g.lie_dim() > 0)
      throw error("sub-pair needs a parametrization or a point list");
  }
  // the declared Lie block must agree with the assembled one
  if (doc.declared_lie) {
    LieSuperAlgebra assembled = assemble_lie(pair);
    const LieSuperAlgebra& declared = *doc.declared_lie;
    if (declared.even_dim() != assembled.even_dim() ||
        declared.odd_dim() != assembled.odd_dim())
      throw error("declared Lie block has wrong dimensions");
    for (std::size_t i = 0; i < assembled.dim(); ++i)
      for (std::size_t j = 0; j < assembled.dim(); ++j)
        if (declared.bracket_basis(i, j) != assembled.bracket_basis(i, j))
          throw error("declared Lie bracket disagrees with the assembled one");
    for (std::size_t i = 0; i < assembled.odd_dim(); ++i)
      if (declared.two_op_basis(i) != assembled.two_op_basis(i))
        throw error("declared 2-operation disagrees with the assembled one");
  }
}

}  // namespace

FixtureDocument parse_fixture_text(const std::string& json_text) {
  json doc = json::parse(json_text);
  FixtureDocument out;
  out.name = doc.value("name", "fixture");
  out.field = parse_field(doc.value("field", "Q"));
  out.grassmann_n = doc.value("grassmann_n", 6u);
  const Field& f = out.field;

  // group block
  const json& gj = doc.at("group");
  MatrixGroup& g = out.pair.group;
  g.m = gj.at("m").get<std::uint32_t>();
  g.field = f;
  if (gj.contains("equations"))
    for (auto& ej : gj.at("equations")) g.equations.push_back(parse_poly(ej, g.m, f));
  // d det(g) = 1 is always imposed
  Poly ddet = Poly::variable(g.m * g.m + 1, f, g.m * g.m) * det_poly(g.m, f);
  g.equations.push_back(ddet - Poly::constant(g.m * g.m + 1, Scalar::one(f)));
  for (auto& xj : gj.at("lie_basis")) g.lie_basis.push_back(parse_matrix(xj, f));
  if (gj.contains("parametrization"))
    g.param = parse_parametrization(gj.at("parametrization"), g.m, f);
  if (gj.contains("adjoint_even"))
    for (auto& row : gj.at("adjoint_even")) {
      std::vector<Poly> r;
      for (auto& e : row) r.push_back(parse_poly(e, g.m, f));
      g.supplied_adjoint_even.push_back(std::move(r));
    }

  // odd block
  if (doc.contains("odd")) {
    const json& oj = doc.at("odd");
    for (auto& name : oj.at("names"))
      out.pair.odd_names.push_back(name.get<std::string>());
    std::size_t n = out.pair.odd_names.size();
    for (auto& row : oj.at("rho")) {
      std::vector<Poly> r;
      for (auto& e : row) r.push_back(parse_poly(e, g.m, f));
      out.pair.rho.push_back(std::move(r));
    }
    for (auto& row : oj.at("bracket")) {
      std::vector<Vec> r;
      for (auto& e : row) r.push_back(parse_vector(e, f));
      out.pair.odd_bracket.push_back(std::move(r));
    }
    (void)n;
  }

  // sub-pairs
  if (doc.contains("subpairs"))
    for (auto& sj : doc.at("subpairs")) {
      SubPair sub;
      sub.name = sj.value("name", "sub");
      if (sj.contains("equations"))
        for (auto& ej : sj.at("equations"))
          sub.extra_equations.push_back(parse_poly(ej, g.m, f));
      if (sj.contains("parametrization"))
        sub.param = parse_parametrization(sj.at("parametrization"), g.m, f);
      if (sj.contains("points"))
        for (auto& pj : sj.at("points"))
          sub.point_list.push_back(parse_matrix(pj, f));
      if (sj.contains("lie_h"))
        for (auto& xj : sj.at("lie_h")) sub.lie_h.push_back(parse_matrix(xj, f));
      if (sj.contains("w_basis"))
        for (auto& wj : sj.at("w_basis")) sub.w_basis.push_back(parse_vector(wj, f));
      out.pair.subpairs.push_back(std::move(sub));
    }

  if (doc.contains("word_generators"))
    for (auto& wj : doc.at("word_generators"))
      out.pair.word_generators.push_back(parse_matrix(wj, f));

  // optional declared Lie block: sparse constants [i, j, k, coeff]
  if (doc.contains("lie")) {
    const json& lj = doc.at("lie");
    std::vector<std::string> even, odd;
    for (auto& name : lj.at("even_names")) even.push_back(name.get<std::string>());
    for (auto& name : lj.at("odd_names")) odd.push_back(name.get<std::string>());
    LieSuperAlgebra lie(f, even, odd);
    std::map<std::pair<std::size_t, std::size_t>, Vec> brackets;
    for (auto& cj : lj.at("brackets")) {
      std::size_t i = cj.at(0).get<std::size_t>();
      std::size_t j = cj.at(1).get<std::size_t>();
      std::size_t k = cj.at(2).get<std::size_t>();
      Scalar c = parse_scalar(cj.at(3), f);
      auto key = std::make_pair(i, j);
      auto it = brackets.find(key);
      if (it == brackets.end())
        it = brackets.emplace(key, vec_zero(lie.dim(), f)).first;
      it->second[k] += c;
    }
    for (auto& [key, v] : brackets) lie.set_bracket(key.first, key.second, v);
    if (lj.contains("two_op")) {
      std::size_t idx = 0;
      for (auto& tj : lj.at("two_op")) lie.set_two_op(idx++, parse_vector(tj, f));
    }
    out.declared_lie = std::move(lie);
  }

  validate_fixture(out);
  return out;
}

FixtureDocument load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open fixture: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_fixture_text(buffer.str());
}

std::vector<std::string> bundled_fixture_names() {
  return {"osp12", "torus", "glq", "torus_f5", "trivial"};
}

FixtureDocument load_bundled_fixture(const std::string& dir,
                                     const std::string& name) {
  return load_fixture(dir + "/" + name + ".json");
}

}  // namespace hcpair
