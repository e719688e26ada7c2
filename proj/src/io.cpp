#include "coringlab/io.hpp"

#include <fstream>
#include <sstream>

namespace coringlab {

namespace {

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t size_field(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw ParseError(std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

const json& array_of(const json& j, std::size_t n, const std::string& what) {
  if (!j.is_array() || j.size() != n) throw ParseError(what + ": expected an array of length " + std::to_string(n));
  return j;
}

}  // namespace

json field_to_json(const Field& f) { return f.name(); }

Field field_from_json(const json& j) {
  if (!j.is_string()) throw ParseError("field must be \"Q\" or \"F_p\"");
  const auto s = j.get<std::string>();
  if (s == "Q") return Field::rationals();
  if (s.rfind("F_", 0) == 0) {
    try {
      return Field::prime(std::stoull(s.substr(2)));
    } catch (const FieldError& e) {
      throw ParseError(e.what());
    } catch (const std::exception&) {
    }
  }
  throw ParseError("unknown field '" + s + "'");
}

json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Field& f, const json& j) {
  try {
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::from_int(f, j.get<std::int64_t>());
  } catch (const FieldError& e) {
    throw ParseError(e.what());
  }
  throw ParseError("scalar must be a string \"p/q\" or an integer");
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

Vector vector_from_json(const Field& f, const json& j, std::size_t expected) {
  array_of(j, expected, "vector");
  Vector v;
  for (const auto& e : j) v.push_back(scalar_from_json(f, e));
  return v;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vector_to_json(m.row(r)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Matrix matrix_from_json(const Field& f, const json& j) {
  const std::size_t rows = size_field(j, "rows");
  const std::size_t cols = size_field(j, "cols");
  const json& e = array_of(member(j, "entries"), rows, "matrix entries");
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) m.set_row(r, vector_from_json(f, e[r], cols));
  return m;
}

json algebra_to_json(const Algebra& a) {
  json mult = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < a.dim(); ++k) row.push_back(vector_to_json(a.product(i, k)));
    mult.push_back(row);
  }
  return {{"dim", a.dim()}, {"mult", mult}, {"unit", vector_to_json(a.unit())}};
}

Algebra algebra_from_json(const Field& f, const json& j) {
  const std::size_t n = size_field(j, "dim");
  const json& mult = array_of(member(j, "mult"), n, "mult");
  std::vector<Vector> prods;
  for (std::size_t i = 0; i < n; ++i) {
    array_of(mult[i], n, "mult row");
    for (std::size_t k = 0; k < n; ++k) prods.push_back(vector_from_json(f, mult[i][k], n));
  }
  return Algebra(f, n, std::move(prods), vector_from_json(f, member(j, "unit"), n));
}

json coalgebra_to_json(const Coalgebra& c) {
  const std::size_t m = c.dim();
  json comult = json::array();
  for (std::size_t e = 0; e < m; ++e) {
    json block = json::array();
    for (std::size_t j = 0; j < m; ++j) {
      json row = json::array();
      for (std::size_t k = 0; k < m; ++k) row.push_back(scalar_to_json(c.delta(e, j, k)));
      block.push_back(row);
    }
    comult.push_back(block);
  }
  return {{"dim", m}, {"comult", comult}, {"counit", vector_to_json(c.counit())}};
}

Coalgebra coalgebra_from_json(const Field& f, const json& j) {
  const std::size_t m = size_field(j, "dim");
  const json& comult = array_of(member(j, "comult"), m, "comult");
  Matrix delta(f, m * m, m);
  for (std::size_t e = 0; e < m; ++e) {
    array_of(comult[e], m, "comult block");
    for (std::size_t a = 0; a < m; ++a) {
      Vector row = vector_from_json(f, comult[e][a], m);
      for (std::size_t b = 0; b < m; ++b) delta(a * m + b, e) = row[b];
    }
  }
  return Coalgebra(f, m, std::move(delta), vector_from_json(f, member(j, "counit"), m));
}

json module_to_json(const Module& m) {
  json action = json::array();
  for (const auto& a : m.action) action.push_back(matrix_to_json(a));
  return {{"dim", m.dim}, {"side", m.side == Side::Left ? "left" : "right"}, {"action", action}};
}

Module module_from_json(const AlgebraPtr& a, const json& j) {
  Module m;
  m.algebra = a;
  m.dim = size_field(j, "dim");
  const json& side = member(j, "side");
  if (side == "left") {
    m.side = Side::Left;
  } else if (side == "right") {
    m.side = Side::Right;
  } else {
    throw ParseError("side must be \"left\" or \"right\"");
  }
  for (const auto& e : array_of(member(j, "action"), a->dim(), "action")) {
    Matrix act = matrix_from_json(a->field(), e);
    if (act.rows() != m.dim || act.cols() != m.dim) throw ParseError("action matrix has wrong shape");
    m.action.push_back(std::move(act));
  }
  return m;
}

json comodule_to_json(const Comodule& m) {
  json action = json::array();
  for (const auto& a : m.action) action.push_back(matrix_to_json(a));
  return {{"dim", m.dim}, {"action", action}, {"coaction", matrix_to_json(m.coaction)}};
}

Comodule comodule_from_json(const Context& ctx, const json& j) {
  Comodule m;
  m.name = j.value("name", std::string("M"));
  m.dim = size_field(j, "dim");
  for (const auto& e : array_of(member(j, "action"), ctx.n, "action")) {
    Matrix act = matrix_from_json(ctx.field(), e);
    if (act.rows() != m.dim || act.cols() != m.dim) throw ParseError("action matrix has wrong shape");
    m.action.push_back(std::move(act));
  }
  m.coaction = matrix_from_json(ctx.field(), member(j, "coaction"));
  if (m.coaction.rows() != m.dim * ctx.m || m.coaction.cols() != m.dim) throw ParseError("coaction has wrong shape");
  return m;
}

json instance_to_json(const Instance& inst) {
  const EntwiningData& e = inst.data;
  json j;
  if (!inst.name.empty()) j["name"] = inst.name;
  j["field"] = field_to_json(e.algebra->field());
  j["algebra"] = algebra_to_json(*e.algebra);
  j["coalgebra"] = coalgebra_to_json(e.coalgebra);
  if (inst.doi_koppinen) {
    j["entwining"] = {{"kind", "doi_koppinen"}, {"bialgebra", algebra_to_json(*inst.bialgebra)}, {"coaction", matrix_to_json(inst.coaction)}};
  } else {
    j["entwining"] = {{"kind", "matrix"}, {"psi", matrix_to_json(e.psi)}};
  }
  j["unit_coaction"] = vector_to_json(e.unit_coaction);
  return j;
}

Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  Instance inst;
  inst.name = j.value("name", std::string());
  const Field f = field_from_json(member(j, "field"));
  auto a = std::make_shared<Algebra>(algebra_from_json(f, member(j, "algebra")));
  Coalgebra c = coalgebra_from_json(f, member(j, "coalgebra"));
  const std::size_t n = a->dim();
  const std::size_t m = c.dim();
  const json& ent = member(j, "entwining");
  const json& kind = member(ent, "kind");
  Matrix psi;
  if (kind == "matrix") {
    psi = matrix_from_json(f, member(ent, "psi"));
    if (psi.rows() != n * m || psi.cols() != n * m) throw ParseError("psi must be a (dim A * dim C) square matrix");
  } else if (kind == "doi_koppinen") {
    auto h = std::make_shared<Algebra>(algebra_from_json(f, member(ent, "bialgebra")));
    if (h->dim() != m) throw ParseError("bialgebra and coalgebra dimensions differ");
    Matrix coaction = matrix_from_json(f, member(ent, "coaction"));
    if (coaction.rows() != n * m || coaction.cols() != n) throw ParseError("coaction must be (dim A * dim H) x dim A");
    DoiKoppinenResult dk = doi_koppinen(a, *h, c, coaction);
    if (!dk.verdict.ok()) throw ParseError("Doi-Koppinen data rejected: " + dk.verdict.failures.front());
    psi = dk.psi;
    inst.doi_koppinen = true;
    inst.bialgebra = h;
    inst.coaction = std::move(coaction);
  } else {
    throw ParseError("entwining kind must be \"matrix\" or \"doi_koppinen\"");
  }
  Vector unit = vector_from_json(f, member(j, "unit_coaction"), n * m);
  inst.data = EntwiningData{a, std::move(c), std::move(psi), std::move(unit)};
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  try {
    return instance_from_json(j);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const ShapeError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace coringlab
