#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "coringlab/comodule.hpp"
#include "coringlab/fixtures.hpp"

namespace coringlab {

using json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json field_to_json(const Field& f);
Field field_from_json(const json& j);

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Field& f, const json& j);

json vector_to_json(const Vector& v);
Vector vector_from_json(const Field& f, const json& j, std::size_t expected);

/// {"rows":r,"cols":c,"entries":[[...]]}
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const json& j);

/// {"dim":n,"mult":[[[...]]],"unit":[...]} with mult[i][j] = e_i e_j.
json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const Field& f, const json& j);

/// {"dim":m,"comult":[[[...]]],"counit":[...]} with comult[c][j][k] the
/// coefficient of e_j (x) e_k in Delta(e_c).
json coalgebra_to_json(const Coalgebra& c);
Coalgebra coalgebra_from_json(const Field& f, const json& j);

json module_to_json(const Module& m);
Module module_from_json(const AlgebraPtr& a, const json& j);

json comodule_to_json(const Comodule& m);
Comodule comodule_from_json(const Context& ctx, const json& j);

json instance_to_json(const Instance& inst);
/// Throws ParseError on malformed input and on Doi-Koppinen data that fails
/// its bialgebra or comodule-algebra checks.
Instance instance_from_json(const json& j);
Instance load_instance(const std::string& path);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);

}  // namespace coringlab
