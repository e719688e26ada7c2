#include "coringlab/comodule.hpp"

#include <random>

namespace coringlab {

namespace {

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  }
  return out;
}

std::string pair_name(std::size_t v, std::size_t a) {
  return "(m" + std::to_string(v) + ",e" + std::to_string(a) + ")";
}

}  // namespace

Matrix Comodule::act(const Vector& a) const {
  Matrix out(coaction.field(), dim, dim);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero()) out += a[i] * action[i];
  }
  return out;
}

Matrix Comodule::select(std::size_t c, std::size_t dim_c) const {
  Matrix out(coaction.field(), dim, dim);
  for (std::size_t v = 0; v < dim; ++v) {
    for (std::size_t w = 0; w < dim; ++w) out(v, w) = coaction(v * dim_c + c, w);
  }
  return out;
}

Verdict verify_comodule(const Context& ctx, const Comodule& mod) {
  Verdict v;
  const Field& f = ctx.field();
  const std::size_t d = mod.dim;
  const std::size_t m = ctx.m;
  if (mod.action.size() != ctx.n || mod.coaction.rows() != d * m || mod.coaction.cols() != d) {
    v.fail("shape mismatch in comodule data");
    return v;
  }
  v.merge(verify_module(right_a_module(ctx, mod)), "A-module");
  Matrix id_d = Matrix::identity(f, d);
  Matrix lhs = kron(mod.coaction, Matrix::identity(f, m)) * mod.coaction;
  Matrix rhs = kron(id_d, ctx.coalgebra.comult()) * mod.coaction;
  Matrix counit = kron(id_d, ctx.coalgebra.counit_row()) * mod.coaction;
  for (std::size_t w = 0; w < d; ++w) {
    if (lhs.col(w) != rhs.col(w)) v.fail("coaction coassociativity at m" + std::to_string(w));
    if (counit.col(w) != id_d.col(w)) v.fail("coaction counit at m" + std::to_string(w));
  }
  Matrix act_all(f, d, d * ctx.n);
  for (std::size_t w = 0; w < d; ++w) {
    for (std::size_t a = 0; a < ctx.n; ++a) act_all.set_col(w * ctx.n + a, mod.action[a].col(w));
  }
  Matrix act_i = kron(act_all, Matrix::identity(f, m));
  for (std::size_t a = 0; a < ctx.n; ++a) {
    Matrix l = mod.coaction * mod.action[a];
    Matrix r = act_i * kron(id_d, ctx.psi_a[a]) * mod.coaction;
    for (std::size_t w = 0; w < d; ++w) {
      if (l.col(w) != r.col(w)) v.fail("entwined module law at " + pair_name(w, a));
    }
  }
  return v;
}

Comodule zero_comodule(const Context& ctx) {
  Comodule z;
  z.name = "0";
  z.action.assign(ctx.n, Matrix(ctx.field(), 0, 0));
  z.coaction = Matrix(ctx.field(), 0, 0);
  return z;
}

Comodule algebra_comodule(const Context& ctx) {
  Comodule a;
  a.name = "A";
  a.dim = ctx.n;
  for (std::size_t i = 0; i < ctx.n; ++i) a.action.push_back(ctx.algebra->right(i));
  a.coaction = Matrix(ctx.field(), ctx.d, ctx.n);
  for (std::size_t i = 0; i < ctx.n; ++i) a.coaction.set_col(i, ctx.coring.right[i] * ctx.x);
  return a;
}

Comodule coring_comodule(const Context& ctx) {
  Comodule c;
  c.name = "C";
  c.dim = ctx.d;
  c.action = ctx.coring.right;
  c.coaction = kron(Matrix::identity(ctx.field(), ctx.n), ctx.coalgebra.comult());
  return c;
}

Comodule induced_comodule(const Context& ctx, const Module& w) {
  const Field& f = ctx.field();
  const std::size_t m = ctx.m;
  Comodule out;
  out.name = "W(x)C";
  out.dim = w.dim * m;
  for (std::size_t a = 0; a < ctx.n; ++a) {
    Matrix act(f, out.dim, out.dim);
    const Matrix& pa = ctx.psi_a[a];
    for (std::size_t u = 0; u < w.dim; ++u) {
      for (std::size_t c = 0; c < m; ++c) {
        Vector col = zero_vector(f, out.dim);
        for (std::size_t a2 = 0; a2 < ctx.n; ++a2) {
          for (std::size_t c2 = 0; c2 < m; ++c2) {
            const Scalar& s = pa(a2 * m + c2, c);
            if (s.is_zero()) continue;
            for (std::size_t u2 = 0; u2 < w.dim; ++u2) {
              const Scalar& t = w.action[a2](u2, u);
              if (!t.is_zero()) col[u2 * m + c2].add_mul(s, t);
            }
          }
        }
        act.set_col(u * m + c, col);
      }
    }
    out.action.push_back(std::move(act));
  }
  out.coaction = kron(Matrix::identity(f, w.dim), ctx.coalgebra.comult());
  return out;
}

Comodule dual_comodule(const Context& ctx) {
  const Field& f = ctx.field();
  Comodule out;
  out.name = "*C";
  out.dim = ctx.d;
  for (std::size_t a = 0; a < ctx.n; ++a) {
    out.action.push_back(ctx.sharp->right_mult(vec(ctx.iota(ctx.algebra->basis_vector(a)))));
  }
  out.coaction = Matrix(f, ctx.d * ctx.m, ctx.d);
  for (std::size_t c = 0; c < ctx.m; ++c) {
    Matrix g(f, ctx.n, ctx.m);
    g.set_col(c, ctx.algebra->unit());
    Matrix r = ctx.sharp->right_mult(vec(g));
    for (std::size_t v = 0; v < ctx.d; ++v) {
      for (std::size_t w = 0; w < ctx.d; ++w) out.coaction(v * ctx.m + c, w) = r(v, w);
    }
  }
  return out;
}

Comodule direct_sum(const Comodule& a, const Comodule& b) {
  Comodule out;
  out.name = a.name + "+" + b.name;
  out.dim = a.dim + b.dim;
  for (std::size_t i = 0; i < a.action.size(); ++i) out.action.push_back(block_diagonal(a.action[i], b.action[i]));
  const std::size_t m = a.dim ? a.coaction.rows() / a.dim : (b.dim ? b.coaction.rows() / b.dim : 0);
  out.coaction = Matrix(a.coaction.field(), out.dim * m, out.dim);
  for (std::size_t r = 0; r < a.coaction.rows(); ++r) {
    for (std::size_t c = 0; c < a.dim; ++c) out.coaction(r, c) = a.coaction(r, c);
  }
  for (std::size_t r = 0; r < b.coaction.rows(); ++r) {
    for (std::size_t c = 0; c < b.dim; ++c) out.coaction(a.dim * m + r, a.dim + c) = b.coaction(r, c);
  }
  return out;
}

Comodule subcomodule(const Context& ctx, const Comodule& mod, const Subspace& sub) {
  const Field& f = ctx.field();
  const std::size_t k = sub.dim();
  Comodule out;
  out.name = "sub(" + mod.name + ")";
  out.dim = k;
  std::vector<Vector> basis = sub.vectors();
  auto coords = [&](const Vector& v) {
    auto c = sub.coordinates(v);
    if (!c) throw ShapeError("subcomodule: subspace is not invariant");
    return *c;
  };
  for (std::size_t a = 0; a < ctx.n; ++a) {
    Matrix act(f, k, k);
    for (std::size_t j = 0; j < k; ++j) act.set_col(j, coords(mod.action[a] * basis[j]));
    out.action.push_back(std::move(act));
  }
  out.coaction = Matrix(f, k * ctx.m, k);
  for (std::size_t c = 0; c < ctx.m; ++c) {
    Matrix sel = mod.select(c, ctx.m);
    for (std::size_t j = 0; j < k; ++j) {
      Vector cj = coords(sel * basis[j]);
      for (std::size_t i = 0; i < k; ++i) out.coaction(i * ctx.m + c, j) = cj[i];
    }
  }
  return out;
}

Module right_a_module(const Context& ctx, const Comodule& m) {
  return Module{ctx.algebra, Side::Right, m.dim, m.action};
}

Matrix dual_action_of(const Context& ctx, const Comodule& mod, const Matrix& g) {
  Matrix out(ctx.field(), mod.dim, mod.dim);
  for (std::size_t c = 0; c < ctx.m; ++c) {
    Vector gc = g.col(c);
    if (is_zero(gc)) continue;
    out += mod.act(gc) * mod.select(c, ctx.m);
  }
  return out;
}

Module dual_action(const Context& ctx, const Comodule& mod) {
  Module out{ctx.sharp, Side::Right, mod.dim, {}};
  for (std::size_t p = 0; p < ctx.d; ++p) {
    out.action.push_back(dual_action_of(ctx, mod, ctx.sharp_map(unit_vector(ctx.field(), ctx.d, p))));
  }
  return out;
}

Subspace coinvariants(const Context& ctx, const Comodule& mod) {
  Matrix diff = mod.coaction;
  for (std::size_t a = 0; a < ctx.n; ++a) {
    for (std::size_t c = 0; c < ctx.m; ++c) {
      const Scalar& s = ctx.x[a * ctx.m + c];
      if (s.is_zero()) continue;
      for (std::size_t v = 0; v < mod.dim; ++v) {
        for (std::size_t w = 0; w < mod.dim; ++w) {
          if (!mod.action[a](v, w).is_zero()) diff(v * ctx.m + c, w).sub_mul(s, mod.action[a](v, w));
        }
      }
    }
  }
  return kernel(diff);
}

Subspace x_invariants(const Context& ctx, const Module& dm) {
  std::vector<Matrix> blocks;
  for (std::size_t p = 0; p < ctx.d; ++p) {
    Matrix g = ctx.sharp_map(unit_vector(ctx.field(), ctx.d, p));
    Vector gx = ctx.evaluate(g, ctx.x);
    blocks.push_back(dm.action[p] - dm.act(vec(ctx.iota(gx))));
  }
  return kernel(Matrix::vstack(ctx.field(), dm.dim, blocks));
}

Matrix colinearity_conditions(const Matrix& rm, std::size_t dm, const Matrix& rn, std::size_t dn, std::size_t mc) {
  const Field& f = rm.field();
  Matrix cond(f, dn * mc * dm, dn * dm);
  for (std::size_t v2 = 0; v2 < dn; ++v2) {
    for (std::size_t c = 0; c < mc; ++c) {
      for (std::size_t u = 0; u < dm; ++u) {
        const std::size_t row = (v2 * mc + c) * dm + u;
        for (std::size_t v = 0; v < dn; ++v) {
          const Scalar& s = rn(v2 * mc + c, v);
          if (!s.is_zero()) cond(row, v * dm + u) += s;
        }
        for (std::size_t u2 = 0; u2 < dm; ++u2) {
          const Scalar& s = rm(u2 * mc + c, u);
          if (!s.is_zero()) cond(row, v2 * dm + u2) -= s;
        }
      }
    }
  }
  return cond;
}

Subspace hom_comodule(const Context& ctx, const Comodule& m, const Comodule& n) {
  const Field& f = ctx.field();
  std::vector<Matrix> blocks;
  blocks.push_back(colinearity_conditions(m.coaction, m.dim, n.coaction, n.dim, ctx.m));
  for (const Vector& g : algebra_generators(*ctx.algebra)) {
    Matrix am = m.act(g);
    Matrix an = n.act(g);
    Matrix cond(f, n.dim * m.dim, n.dim * m.dim);
    for (std::size_t v = 0; v < n.dim; ++v) {
      for (std::size_t u = 0; u < m.dim; ++u) {
        const std::size_t row = v * m.dim + u;
        for (std::size_t u2 = 0; u2 < m.dim; ++u2) {
          if (!am(u2, u).is_zero()) cond(row, v * m.dim + u2) += am(u2, u);
        }
        for (std::size_t v2 = 0; v2 < n.dim; ++v2) {
          if (!an(v, v2).is_zero()) cond(row, v2 * m.dim + u) -= an(v, v2);
        }
      }
    }
    blocks.push_back(std::move(cond));
  }
  return kernel(Matrix::vstack(f, n.dim * m.dim, blocks));
}

std::vector<Comodule> witness_family(const Context& ctx, std::size_t kernels, std::uint64_t seed) {
  std::vector<Comodule> out;
  Comodule a = algebra_comodule(ctx);
  Comodule c = coring_comodule(ctx);
  out.push_back(zero_comodule(ctx));
  out.push_back(a);
  out.push_back(c);
  out.push_back(direct_sum(a, c));
  Comodule w = induced_comodule(ctx, free_module(ctx.algebra, Side::Right, 2));
  w.name = "A^2(x)C";
  out.push_back(w);
  out.push_back(dual_comodule(ctx));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  const std::vector<std::size_t> sources{2, 3, 5};
  for (std::size_t k = 0; k < kernels; ++k) {
    const Comodule& src = out[sources[k % sources.size()]];
    Subspace hom = hom_comodule(ctx, src, a);
    Vector combo = zero_vector(ctx.field(), hom.ambient_dim());
    for (std::size_t i = 0; i < hom.dim(); ++i) axpy(combo, Scalar::from_int(ctx.field(), coef(rng)), hom.vector(i));
    Matrix f = unvec(ctx.field(), a.dim, src.dim, combo);
    Comodule ker = subcomodule(ctx, src, kernel(f));
    ker.name = "ker(" + src.name + "->A)#" + std::to_string(k);
    out.push_back(std::move(ker));
  }
  return out;
}

}  // namespace coringlab
