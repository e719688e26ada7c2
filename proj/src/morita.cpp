#include "coringlab/morita.hpp"

#include <string>

#include "coringlab/galois.hpp"

namespace coringlab {

namespace {

std::string triple(const char* a, std::size_t i, const char* b, std::size_t j, const char* c, std::size_t k) {
  return std::string("(") + a + std::to_string(i) + "," + b + std::to_string(j) + "," + c + std::to_string(k) + ")";
}

}  // namespace

CoinvariantSubring compute_B(const Context& ctx) {
  CoinvariantSubring b;
  Matrix cond(ctx.field(), ctx.d, ctx.n);
  for (std::size_t a = 0; a < ctx.n; ++a) {
    cond.set_col(a, subtract(ctx.coring.left[a] * ctx.x, ctx.coring.right[a] * ctx.x));
  }
  b.space = kernel(cond);
  b.embedding = Matrix::from_columns(ctx.field(), ctx.n, b.space.vectors());
  auto sub = induced_subalgebra(*ctx.algebra, b.space);
  if (!sub) {
    b.verdict.fail("coinvariants are not closed under multiplication");
    b.ring = std::make_shared<Algebra>(Algebra::ground(ctx.field()));
    return b;
  }
  b.ring = std::make_shared<Algebra>(std::move(*sub));
  return b;
}

Subspace compute_Q(const Context& ctx) {
  const Field& f = ctx.field();
  const std::size_t d = ctx.d;
  Matrix cond(f, d * d, d);
  Matrix id = Matrix::identity(f, d);
  for (std::size_t p = 0; p < d; ++p) {
    Matrix fp = ctx.dual.maps[p];
    // column k of t is sum c1 q(c2) for c = e_k
    Matrix t = dual_product(ctx.coring, fp, id);
    for (std::size_t k = 0; k < d; ++k) {
      Vector qc = fp.col(k);
      Vector rhs = zero_vector(f, d);
      for (std::size_t a = 0; a < ctx.n; ++a) {
        if (!qc[a].is_zero()) axpy(rhs, qc[a], ctx.coring.left[a] * ctx.x);
      }
      Vector diff = subtract(t.col(k), rhs);
      for (std::size_t i = 0; i < d; ++i) cond(k * d + i, p) = diff[i];
    }
  }
  return kernel(cond);
}

Vector MoritaContext::q_element(const Vector& coords) const { return q.combine(coords); }

Matrix MoritaContext::q_map(const Vector& coords) const {
  if (q_maps.empty()) throw ShapeError("Q is zero");
  return unvec(q_maps.front().field(), q_maps.front().rows(), q_maps.front().cols(), q.combine(coords));
}

MoritaContext build_context(const Context& ctx) {
  const Field& f = ctx.field();
  const std::size_t n = ctx.n;
  MoritaContext mc;
  mc.b = compute_B(ctx);
  mc.verdict.merge(mc.b.verdict, "B");
  mc.q = compute_Q(ctx);
  const std::size_t k = mc.q.dim();
  const std::size_t kb = mc.b.ring->dim();
  for (std::size_t i = 0; i < k; ++i) mc.q_maps.push_back(ctx.sharp_map(mc.q.vector(i)));

  std::vector<Vector> b_in_a;
  for (std::size_t j = 0; j < kb; ++j) b_in_a.push_back(mc.b.embedding.col(j));

  mc.q_right_b = Module{mc.b.ring, Side::Right, k, {}};
  for (std::size_t j = 0; j < kb; ++j) {
    Vector ib = vec(ctx.iota(b_in_a[j]));
    Matrix act(f, k, k);
    for (std::size_t i = 0; i < k; ++i) {
      auto c = mc.q.coordinates(ctx.sharp->multiply(mc.q.vector(i), ib));
      if (!c) {
        mc.verdict.fail("Q is not stable under the right B-action");
        return mc;
      }
      act.set_col(i, *c);
    }
    mc.q_right_b.action.push_back(std::move(act));
  }
  mc.q_left_dual = Module{ctx.sharp, Side::Left, k, {}};
  for (std::size_t p = 0; p < ctx.d; ++p) {
    Vector g = unit_vector(f, ctx.d, p);
    Matrix act(f, k, k);
    for (std::size_t i = 0; i < k; ++i) {
      auto c = mc.q.coordinates(ctx.sharp->multiply(g, mc.q.vector(i)));
      if (!c) {
        mc.verdict.fail("Q is not a left ideal");
        return mc;
      }
      act.set_col(i, *c);
    }
    mc.q_left_dual.action.push_back(std::move(act));
  }
  mc.a_left_b = restrict_scalars(regular_module(ctx.algebra, Side::Left), mc.b.ring, mc.b.embedding);
  mc.a_comodule = algebra_comodule(ctx);
  mc.a_right_dual = dual_action(ctx, mc.a_comodule);
  mc.verdict.merge(verify_module(mc.q_right_b), "Q_B");
  mc.verdict.merge(verify_module(mc.q_left_dual), "*C Q");
  mc.verdict.merge(verify_module(mc.a_right_dual), "A_*C");
  if (!mc.verdict.ok()) return mc;

  // F on the plain tensor Q (x) A, index qi * n + a.
  std::vector<Vector> iota_basis;
  for (std::size_t a = 0; a < n; ++a) iota_basis.push_back(vec(ctx.iota(ctx.algebra->basis_vector(a))));
  Matrix f_plain(f, ctx.d, k * n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t a = 0; a < n; ++a) f_plain.set_col(i * n + a, ctx.sharp->multiply(mc.q.vector(i), iota_basis[a]));
  }
  // G on the plain tensor A (x) Q, index a * k + qi, in B coordinates.
  std::vector<Matrix> q_act;
  for (std::size_t i = 0; i < k; ++i) q_act.push_back(mc.a_right_dual.act(mc.q.vector(i)));
  Matrix g_plain(f, kb, n * k);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < k; ++i) {
      auto c = mc.b.space.coordinates(q_act[i].col(a));
      if (!c) {
        mc.verdict.fail("G takes a value outside B at (e" + std::to_string(a) + ",q" + std::to_string(i) + ")");
        continue;
      }
      g_plain.set_col(a * k + i, *c);
    }
  }
  if (!mc.verdict.ok()) return mc;

  mc.qa = balanced_tensor(mc.q_right_b, mc.a_left_b);
  mc.aq = balanced_tensor(mc.a_right_dual, mc.q_left_dual);
  if (!descends(mc.qa, f_plain)) mc.verdict.fail("F is not balanced over B");
  if (!descends(mc.aq, g_plain)) mc.verdict.fail("G is not balanced over the dual ring");
  mc.f = descend(mc.qa, f_plain);
  mc.g = descend(mc.aq, g_plain);

  auto f_val = [&](std::size_t i, const Vector& a) {
    Vector out = zero_vector(f, ctx.d);
    for (std::size_t j = 0; j < n; ++j) {
      if (!a[j].is_zero()) axpy(out, a[j], f_plain.col(i * n + j));
    }
    return out;
  };
  auto g_val_in_a = [&](const Vector& a, std::size_t i) { return q_act[i] * a; };
  auto embed = [&](const Vector& bc) { return mc.b.embedding * bc; };

  // Bilinearity.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      const Vector ea = ctx.algebra->basis_vector(a);
      for (std::size_t p = 0; p < ctx.d; ++p) {
        Vector g = unit_vector(f, ctx.d, p);
        Vector gq = ctx.sharp->multiply(g, mc.q.vector(i));
        Vector lhs = ctx.sharp->multiply(gq, iota_basis[a]);
        if (lhs != ctx.sharp->multiply(g, f_plain.col(i * n + a))) {
          mc.verdict.fail("F left dual-ring linearity at " + triple("g", p, "q", i, "e", a));
        }
        Vector a_g = mc.a_right_dual.action[p] * ea;
        if (f_val(i, a_g) != ctx.sharp->multiply(f_plain.col(i * n + a), g)) {
          mc.verdict.fail("F right dual-ring linearity at " + triple("q", i, "e", a, "g", p));
        }
      }
      for (std::size_t j = 0; j < kb; ++j) {
        Vector ba = ctx.algebra->multiply(b_in_a[j], ea);
        if (g_val_in_a(ba, i) != ctx.algebra->multiply(b_in_a[j], g_val_in_a(ea, i))) {
          mc.verdict.fail("G left B-linearity at " + triple("b", j, "e", a, "q", i));
        }
        Vector qb = ctx.sharp->multiply(mc.q.vector(i), vec(ctx.iota(b_in_a[j])));
        Vector lhs = mc.a_right_dual.act(qb) * ea;
        if (lhs != ctx.algebra->multiply(g_val_in_a(ea, i), b_in_a[j])) {
          mc.verdict.fail("G right B-linearity at " + triple("e", a, "q", i, "b", j));
        }
      }
    }
  }
  // Associativity.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      const Vector ea = ctx.algebra->basis_vector(a);
      for (std::size_t j = 0; j < k; ++j) {
        Vector lhs = ctx.sharp->multiply(f_plain.col(i * n + a), mc.q.vector(j));
        Vector rhs = ctx.sharp->multiply(mc.q.vector(i), vec(ctx.iota(g_val_in_a(ea, j))));
        if (lhs != rhs) mc.verdict.fail("F(q(x)a)q' = qG(a(x)q') at " + triple("q", i, "e", a, "q", j));
      }
      for (std::size_t a2 = 0; a2 < n; ++a2) {
        const Vector ea2 = ctx.algebra->basis_vector(a2);
        Vector lhs = ctx.algebra->multiply(embed(*mc.b.space.coordinates(g_val_in_a(ea, i))), ea2);
        Vector rhs = mc.a_right_dual.act(f_plain.col(i * n + a2)) * ea;
        if (lhs != rhs) mc.verdict.fail("G(a(x)q)a' = a<-F(q(x)a') at " + triple("e", a, "q", i, "e", a2));
      }
    }
  }
  return mc;
}

std::optional<Matrix> find_qhat(const Context& ctx, const MoritaContext& mc) {
  const std::size_t k = mc.q.dim();
  Matrix sys(ctx.field(), ctx.n, k);
  for (std::size_t i = 0; i < k; ++i) sys.set_col(i, ctx.evaluate(mc.q_maps[i], ctx.x));
  auto t = solve(sys, ctx.algebra->unit());
  if (!t) return std::nullopt;
  return ctx.sharp_map(mc.q.combine(*t));
}

XiResult xi_M(const Context& ctx, const MoritaContext& mc, const Module& dm) {
  XiResult r;
  const std::size_t k = mc.q.dim();
  Subspace mx = x_invariants(ctx, dm);
  r.target_dim = mx.dim();
  TensorProduct t = balanced_tensor(dm, mc.q_left_dual);
  Matrix plain(ctx.field(), dm.dim, dm.dim * k);
  for (std::size_t i = 0; i < k; ++i) {
    Matrix act = dm.act(mc.q.vector(i));
    for (std::size_t v = 0; v < dm.dim; ++v) plain.set_col(v * k + i, act.col(v));
  }
  Matrix map = descend(t, plain);
  for (std::size_t c = 0; c < map.cols(); ++c) {
    if (!mx.contains(map.col(c))) r.lands = false;
  }
  r.map = classify(map);
  return r;
}

TraceResult trace_map(const Context& ctx, const MoritaContext& mc, const Matrix& qhat) {
  TraceResult r;
  const std::size_t n = ctx.n;
  const std::size_t kb = mc.b.ring->dim();
  Matrix act = mc.a_right_dual.act(vec(qhat));
  r.map = Matrix(ctx.field(), kb, n);
  bool lands = true;
  for (std::size_t a = 0; a < n; ++a) {
    auto c = mc.b.space.coordinates(act.col(a));
    if (!c) {
      lands = false;
      continue;
    }
    r.map.set_col(a, *c);
  }
  if (!lands) return r;
  r.left_b_linear = true;
  r.identity_on_b = true;
  for (std::size_t j = 0; j < kb; ++j) {
    Vector b = mc.b.embedding.col(j);
    for (std::size_t a = 0; a < n; ++a) {
      Vector ba = ctx.algebra->multiply(b, ctx.algebra->basis_vector(a));
      if (act * ba != ctx.algebra->multiply(b, act.col(a))) r.left_b_linear = false;
    }
    if (r.map * b != unit_vector(ctx.field(), kb, j)) r.identity_on_b = false;
  }
  return r;
}

OmegaLambda omega_and_lambda(const Context& ctx, const MoritaContext& mc) {
  OmegaLambda r;
  const Field& f = ctx.field();
  const std::size_t n = ctx.n;
  const std::size_t k = mc.q.dim();
  const std::size_t kb = mc.b.ring->dim();
  Subspace hom_qb = hom_module(mc.q_right_b, regular_module(mc.b.ring, Side::Right));
  r.omega_target = hom_qb.dim();
  Matrix omega(f, kb * k, n);
  for (std::size_t a = 0; a < n; ++a) {
    Matrix om(f, kb, k);
    for (std::size_t i = 0; i < k; ++i) {
      auto c = mc.b.space.coordinates(mc.a_right_dual.act(mc.q.vector(i)).col(a));
      if (!c) throw ShapeError("omega: value outside B");
      om.set_col(i, *c);
    }
    Vector v = vec(om);
    if (!hom_qb.contains(v)) r.omega_lands = false;
    omega.set_col(a, v);
  }
  r.omega = classify(omega);

  Subspace end_ba = hom_module(mc.a_left_b, mc.a_left_b);
  r.lambda_target = end_ba.dim();
  Matrix lambda(f, n * n, ctx.d);
  for (std::size_t p = 0; p < ctx.d; ++p) {
    Vector v = vec(mc.a_right_dual.action[p]);
    if (!end_ba.contains(v)) r.lambda_lands = false;
    lambda.set_col(p, v);
  }
  r.lambda = classify(lambda);
  r.lambda_multiplicative = true;
  for (std::size_t p = 0; p < ctx.d && r.lambda_multiplicative; ++p) {
    for (std::size_t q = 0; q < ctx.d; ++q) {
      Matrix pq = mc.a_right_dual.act(ctx.sharp->product(p, q));
      if (pq != mc.a_right_dual.action[q] * mc.a_right_dual.action[p]) {
        r.lambda_multiplicative = false;
        break;
      }
    }
  }
  return r;
}

ClauseTable check_theorem_surj(const Context& ctx, const MoritaContext& mc, const std::vector<Comodule>& witnesses) {
  ClauseTable t;
  t.theorem = "surj";
  MapVerdict g = classify(mc.g);
  t.add("1", g.surjective, "G surjective");
  const bool qhat = find_qhat(ctx, mc).has_value();
  t.add("2", qhat, "q-hat exists");
  bool xi_all = true;
  bool co_all = true;
  for (const auto& w : witnesses) {
    Module dm = dual_action(ctx, w);
    XiResult xi = xi_M(ctx, mc, dm);
    const bool match = coinvariants(ctx, w) == x_invariants(ctx, dm);
    if (!match) t.notes.push_back("M^coC differs from M^x on " + w.name);
    xi_all = xi_all && xi.bijective();
    co_all = co_all && xi.bijective() && match;
  }
  t.add("3", xi_all, "xi_M bijective onto M^x on all witnesses");
  t.add("4", co_all, "M (x) Q = M^coC on all witnesses");
  t.add("5", is_fg_projective(mc.a_right_dual).projective, "A over the dual ring f.g. projective");
  if (g.surjective) {
    const bool b_is_ax = x_invariants(ctx, mc.a_right_dual) == mc.b.space;
    t.add_ungrounded("1-bijective", g.injective && b_is_ax, "G bijective and B = A^x");
  }
  return t;
}

ClauseTable check_theorem_Cfinite(const Context& ctx, const MoritaContext& mc, const std::vector<Comodule>& witnesses) {
  ClauseTable t;
  t.theorem = "C-finite";
  MapVerdict f = classify(mc.f);
  t.add("1", f.surjective, "F surjective");
  if (f.surjective) t.add_ungrounded("1-bijective", f.injective, "F bijective");
  OmegaLambda ol = omega_and_lambda(ctx, mc);
  const bool a2 = is_fg_projective(mc.q_right_b).projective;
  const bool b2 = ol.omega_iso();
  const bool c2 = annihilator(mc.q_left_dual).is_zero();
  t.add("2", a2 && b2 && c2, "Q_B f.g. projective, Omega iso, Q faithful");
  t.add_ungrounded("2a", a2, "Q_B f.g. projective");
  t.add_ungrounded("2b", b2, "Omega bimodule isomorphism");
  t.add_ungrounded("2c", c2, "Q faithful over the dual ring");
  const bool a3 = is_fg_projective(mc.a_left_b).projective;
  const bool b3 = ol.lambda_iso() && ol.lambda_multiplicative;
  t.add("3", a3 && b3, "B A f.g. projective, Lambda ring iso");
  t.add_ungrounded("3a", a3, "B A f.g. projective");
  t.add_ungrounded("3b", b3, "Lambda ring isomorphism");
  t.add("4", is_generator(mc.a_right_dual), "A generator over the dual ring");
  bool psi_all = true;
  for (const auto& w : witnesses) psi_all = psi_all && psi_M(ctx, mc.b, w).bijective();
  t.add("5", psi_all, "Psi_M bijective on all witnesses");
  return t;
}

std::optional<Verdict> psi_tilde_from_F(const Context& ctx, const MoritaContext& mc, const Comodule& m) {
  auto pre = solve(mc.f, ctx.sharp->unit());
  if (!pre) return std::nullopt;
  Verdict v;
  const std::size_t n = ctx.n;
  const std::size_t k = mc.q.dim();
  Vector plain = mc.qa.lift(*pre);
  PsiResult psi = psi_M(ctx, mc.b, m);
  const std::size_t kc = psi.coinv.dim();
  Matrix tilde_plain(ctx.field(), kc * n, m.dim);
  for (std::size_t i = 0; i < k; ++i) {
    Matrix act = dual_action_of(ctx, m, mc.q_maps[i]);
    for (std::size_t a = 0; a < n; ++a) {
      const Scalar& s = plain[i * n + a];
      if (s.is_zero()) continue;
      for (std::size_t w = 0; w < m.dim; ++w) {
        auto c = psi.coinv.coordinates(act.col(w));
        if (!c) {
          v.fail("m q lies outside M^coC");
          return v;
        }
        for (std::size_t j = 0; j < kc; ++j) {
          if (!(*c)[j].is_zero()) tilde_plain(j * n + a, w).add_mul(s, (*c)[j]);
        }
      }
    }
  }
  Matrix tilde = psi.t.projection * tilde_plain;
  if (!(psi.map * tilde).is_identity()) v.fail("Psi o Psi~ is not the identity on " + m.name);
  if (!(tilde * psi.map).is_identity()) v.fail("Psi~ o Psi is not the identity on " + m.name);
  return v;
}

}  // namespace coringlab
