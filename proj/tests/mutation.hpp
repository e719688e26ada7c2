#pragma once

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "coringlab/fixtures.hpp"
#include "oracle.hpp"

namespace coringlab::testing {

inline oracle::Q to_q(const Scalar& s) { return oracle::Q(s.to_string()); }

inline std::vector<oracle::Mat> raw_mult(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<oracle::Mat> out(n, oracle::Mat(n, oracle::Vec(n, 0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i][j][k] = to_q(a.product(i, j)[k]);
  return out;
}

inline oracle::Vec raw_vec(const Vector& v) {
  oracle::Vec out;
  for (const auto& s : v) out.push_back(to_q(s));
  return out;
}

inline std::vector<oracle::Mat> raw_comult(const Coalgebra& c) {
  const std::size_t m = c.dim();
  std::vector<oracle::Mat> out(m, oracle::Mat(m, oracle::Vec(m, 0)));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) out[x][j][k] = to_q(c.delta(x, j, k));
  return out;
}

inline oracle::Raw to_raw(const Algebra& a, const Coalgebra& c, const Matrix& psi, const Vector& u) {
  oracle::Raw r;
  r.n = a.dim();
  r.m = c.dim();
  r.mult = raw_mult(a);
  r.unit = raw_vec(a.unit());
  r.comult = raw_comult(c);
  r.counit = raw_vec(c.counit());
  r.psi.assign(r.m, std::vector<oracle::Mat>(r.n, oracle::Mat(r.n, oracle::Vec(r.m, 0))));
  for (std::size_t x = 0; x < r.m; ++x)
    for (std::size_t e = 0; e < r.n; ++e)
      for (std::size_t a2 = 0; a2 < r.n; ++a2)
        for (std::size_t c2 = 0; c2 < r.m; ++c2) r.psi[x][e][a2][c2] = to_q(psi(a2 * r.m + c2, x * r.n + e));
  r.u.assign(r.n, oracle::Vec(r.m, 0));
  if (!u.empty())
    for (std::size_t a2 = 0; a2 < r.n; ++a2)
      for (std::size_t c2 = 0; c2 < r.m; ++c2) r.u[a2][c2] = to_q(u[a2 * r.m + c2]);
  return r;
}

inline oracle::Raw to_raw(const EntwiningData& e) { return to_raw(*e.algebra, e.coalgebra, e.psi, e.unit_coaction); }

/// Axiom name of a failure message: the text before ": ", " at " or " (".
inline std::string category(const std::string& failure) {
  std::size_t cut = failure.size();
  for (const char* sep : {": ", " at ", " ("}) cut = std::min(cut, failure.find(sep));
  return failure.substr(0, cut);
}

inline std::set<std::string> categories(const Verdict& v) {
  std::set<std::string> out;
  for (const auto& f : v.failures) out.insert(category(f));
  return out;
}

struct MutationOutcome {
  std::string fixture;
  std::string verifier;
  std::string mutation;
  std::set<std::string> expected;
  std::set<std::string> reported;
  bool ok() const { return !expected.empty() && expected == reported; }
};

inline std::string join(const std::set<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : ", ") + x;
  return out.empty() ? "(none)" : out;
}

namespace detail {

inline Scalar bump(const Field& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(1, 3);
  return Scalar::from_int(f, (rng() & 1) ? d(rng) : -d(rng));
}

inline std::vector<MutationOutcome> algebra_mutations(const std::string& name, const Algebra& a, std::mt19937_64& rng) {
  std::vector<MutationOutcome> out;
  const Field& f = a.field();
  const std::size_t n = a.dim();
  std::vector<Vector> products;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) products.push_back(a.product(i, j));
  auto run = [&](const std::string& label, const std::vector<Vector>& p, const Vector& u) {
    Algebra b(f, n, p, u);
    std::vector<oracle::Mat> mult(n, oracle::Mat(n, oracle::Vec(n, 0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) mult[i][j][k] = to_q(p[i * n + j][k]);
    out.push_back({name, "algebra", label, oracle::algebra_violations(mult, raw_vec(u)), categories(verify_algebra(b))});
  };
  run("unit doubled", products, scaled(a.unit(), Scalar::from_int(f, 2)));
  run("unit zero", products, zero_vector(f, n));
  run("unit negated", products, scaled(a.unit(), Scalar::from_int(f, -1)));
  for (int attempt = 0; out.size() < 10 && attempt < 200; ++attempt) {
    const std::size_t ij = rng() % (n * n), k = rng() % n;
    auto p = products;
    p[ij][k] += bump(f, rng);
    std::vector<oracle::Mat> mult(n, oracle::Mat(n, oracle::Vec(n, 0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) mult[i][j][l] = to_q(p[i * n + j][l]);
    if (oracle::algebra_violations(mult, raw_vec(a.unit())).empty()) continue;
    run("product (" + std::to_string(ij / n) + "," + std::to_string(ij % n) + ")[" + std::to_string(k) + "] perturbed", p,
        a.unit());
  }
  return out;
}

inline std::vector<MutationOutcome> coalgebra_mutations(const std::string& name, const Coalgebra& c,
                                                        std::mt19937_64& rng) {
  std::vector<MutationOutcome> out;
  const Field& f = c.field();
  const std::size_t m = c.dim();
  auto run = [&](const std::string& label, const Matrix& comult, const Vector& counit) {
    Coalgebra d(f, m, comult, counit);
    out.push_back({name, "coalgebra", label, oracle::coalgebra_violations(raw_comult(d), raw_vec(counit)),
                   categories(verify_coalgebra(d))});
  };
  run("counit doubled", c.comult(), scaled(c.counit(), Scalar::from_int(f, 2)));
  run("counit zero", c.comult(), zero_vector(f, m));
  run("counit negated", c.comult(), scaled(c.counit(), Scalar::from_int(f, -1)));
  for (int attempt = 0; out.size() < 10 && attempt < 200; ++attempt) {
    Matrix comult = c.comult();
    const std::size_t r = rng() % comult.rows(), col = rng() % m;
    comult(r, col) += bump(f, rng);
    Coalgebra d(f, m, comult, c.counit());
    if (oracle::coalgebra_violations(raw_comult(d), raw_vec(c.counit())).empty()) continue;
    run("comultiplication entry (" + std::to_string(r) + "," + std::to_string(col) + ") perturbed", comult, c.counit());
  }
  return out;
}

inline std::vector<MutationOutcome> entwining_mutations(const std::string& name, const EntwiningData& e,
                                                        std::mt19937_64& rng) {
  std::vector<MutationOutcome> out;
  const Field& f = e.algebra->field();
  auto run = [&](const std::string& label, const Matrix& psi) {
    out.push_back({name, "entwining", label,
                   oracle::entwining_violations(to_raw(*e.algebra, e.coalgebra, psi, e.unit_coaction)),
                   categories(verify_entwining(e.algebra, e.coalgebra, psi))});
  };
  run("psi zero", Matrix(f, e.psi.rows(), e.psi.cols()));
  run("psi doubled", e.psi * Scalar::from_int(f, 2));
  run("psi negated", e.psi * Scalar::from_int(f, -1));
  for (int attempt = 0; out.size() < 10 && attempt < 200; ++attempt) {
    Matrix psi = e.psi;
    const std::size_t r = rng() % psi.rows(), col = rng() % psi.cols();
    psi(r, col) += bump(f, rng);
    if (oracle::entwining_violations(to_raw(*e.algebra, e.coalgebra, psi, e.unit_coaction)).empty()) continue;
    run("psi entry (" + std::to_string(r) + "," + std::to_string(col) + ") perturbed", psi);
  }
  return out;
}

/// Scaling the counit or the comultiplication breaks exactly the counit laws;
/// breaking the unit action breaks the corresponding module axioms.
inline std::vector<MutationOutcome> coring_mutations(const std::string& name, const Coring& c) {
  std::vector<MutationOutcome> out;
  const Field& f = c.field();
  const std::set<std::string> laws{"left counit law", "right counit law"};
  auto run = [&](const std::string& label, const Coring& d, std::set<std::string> expected) {
    out.push_back({name, "coring", label, std::move(expected), categories(verify_coring(d))});
  };
  for (int s : {0, 2, -1}) {
    Coring d = c;
    d.counit = c.counit * Scalar::from_int(f, s);
    run("counit scaled by " + std::to_string(s), d, laws);
  }
  for (int s : {0, 2, -1}) {
    Coring d = c;
    d.delta = c.delta * Scalar::from_int(f, s);
    run("comultiplication scaled by " + std::to_string(s), d, laws);
  }
  for (int s : {0, 2}) {
    Coring d = c;
    for (auto& l : d.left) l = l * Scalar::from_int(f, s);
    run("left action scaled by " + std::to_string(s), d, {"left module"});
  }
  for (int s : {0, 2}) {
    Coring d = c;
    for (auto& r : d.right) r = r * Scalar::from_int(f, s);
    run("right action scaled by " + std::to_string(s), d, {"right module"});
  }
  return out;
}

}  // namespace detail

/// Ten corruptions of each structure of a fixture, with the axiom categories
/// expected from the oracle next to the ones the library reports.
inline std::vector<MutationOutcome> mutation_suite(const Instance& inst, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<MutationOutcome> out;
  auto append = [&](std::vector<MutationOutcome> v) { out.insert(out.end(), v.begin(), v.end()); };
  append(detail::algebra_mutations(inst.name, *inst.data.algebra, rng));
  append(detail::coalgebra_mutations(inst.name, inst.data.coalgebra, rng));
  append(detail::entwining_mutations(inst.name, inst.data, rng));
  append(detail::coring_mutations(inst.name, build_coring(inst.data.algebra, inst.data.coalgebra, inst.data.psi)));
  return out;
}

}  // namespace coringlab::testing
