#include "coringlab/entwining.hpp"

#include <string>

namespace coringlab {

namespace {

std::string pair_name(const char* a, std::size_t i, const char* b, std::size_t j) {
  return std::string("(") + a + std::to_string(i) + "," + b + std::to_string(j) + ")";
}

// The multiplication A (x) A -> A, column a' * n + a''.
Matrix multiplication_matrix(const Algebra& a) {
  const std::size_t n = a.dim();
  Matrix mu(a.field(), n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mu.set_col(i * n + j, a.product(i, j));
  }
  return mu;
}

Vector combination(const std::vector<Matrix>& cols, const Vector& coeffs, std::size_t col) {
  Vector out = zero_vector(cols.front().field(), cols.front().rows());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k].is_zero()) axpy(out, coeffs[k], cols[k].col(col));
  }
  return out;
}

}  // namespace

Matrix entwine_column(const Matrix& psi, std::size_t dim_a, std::size_t dim_c, std::size_t a) {
  Matrix out(psi.field(), dim_a * dim_c, dim_c);
  for (std::size_t c = 0; c < dim_c; ++c) out.set_col(c, psi.col(c * dim_a + a));
  return out;
}

Matrix flip_entwining(std::size_t dim_a, std::size_t dim_c, const Field& f) {
  Matrix psi(f, dim_a * dim_c, dim_a * dim_c);
  for (std::size_t c = 0; c < dim_c; ++c) {
    for (std::size_t a = 0; a < dim_a; ++a) psi(a * dim_c + c, c * dim_a + a) = Scalar::one(f);
  }
  return psi;
}

Verdict verify_entwining(const AlgebraPtr& alg, const Coalgebra& c, const Matrix& psi) {
  Verdict v;
  const Algebra& a = *alg;
  const Field& f = a.field();
  const std::size_t n = a.dim();
  const std::size_t m = c.dim();
  if (psi.rows() != n * m || psi.cols() != n * m) {
    v.fail("shape mismatch in entwining map");
    return v;
  }
  std::vector<Matrix> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(entwine_column(psi, n, m, i));
  Matrix mu_i = kron(multiplication_matrix(a), Matrix::identity(f, m));
  Matrix id_m = Matrix::identity(f, m);
  Matrix id_n = Matrix::identity(f, n);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix rhs = mu_i * kron(id_n, cols[j]) * cols[i];
      for (std::size_t k = 0; k < m; ++k) {
        if (combination(cols, a.product(i, j), k) != rhs.col(k)) {
          v.fail("multiplicativity at " + pair_name("e", i, "e", j) + " on c" + std::to_string(k));
        }
      }
    }
  }
  Matrix unit_target = kron(Matrix::column(f, a.unit()), id_m);
  for (std::size_t k = 0; k < m; ++k) {
    if (combination(cols, a.unit(), k) != unit_target.col(k)) v.fail("unit axiom at c" + std::to_string(k));
  }
  Matrix comult_left = kron(id_n, c.comult());
  Matrix psi_i = kron(psi, id_m);
  Matrix counit_right = kron(id_n, c.counit_row());
  for (std::size_t i = 0; i < n; ++i) {
    Matrix lhs = comult_left * cols[i];
    Matrix rhs = psi_i * kron(id_m, cols[i]) * c.comult();
    Matrix counit_lhs = counit_right * cols[i];
    Matrix counit_rhs = Matrix::column(f, a.basis_vector(i)) * c.counit_row();
    for (std::size_t k = 0; k < m; ++k) {
      if (lhs.col(k) != rhs.col(k)) v.fail("comultiplicativity at " + pair_name("c", k, "e", i));
      if (counit_lhs.col(k) != counit_rhs.col(k)) v.fail("counit axiom at " + pair_name("c", k, "e", i));
    }
  }
  return v;
}

Coring build_coring(const AlgebraPtr& alg, const Coalgebra& c, const Matrix& psi) {
  const Algebra& a = *alg;
  const Field& f = a.field();
  const std::size_t n = a.dim();
  const std::size_t m = c.dim();
  const std::size_t d = n * m;
  Coring out;
  out.algebra = alg;
  out.dim = d;
  Matrix mu_i = kron(multiplication_matrix(a), Matrix::identity(f, m));
  Matrix id_n = Matrix::identity(f, n);
  Matrix id_m = Matrix::identity(f, m);
  for (std::size_t i = 0; i < n; ++i) {
    out.left.push_back(kron(a.left(i), id_m));
    out.right.push_back(mu_i * kron(id_n, entwine_column(psi, n, m, i)));
  }
  out.delta = Matrix(f, d * d, d);
  for (std::size_t ai = 0; ai < n; ++ai) {
    for (std::size_t ci = 0; ci < m; ++ci) {
      for (std::size_t c1 = 0; c1 < m; ++c1) {
        for (std::size_t c2 = 0; c2 < m; ++c2) {
          const Scalar& dl = c.delta(ci, c1, c2);
          if (dl.is_zero()) continue;
          for (std::size_t u = 0; u < n; ++u) {
            if (a.unit()[u].is_zero()) continue;
            out.delta((ai * m + c1) * d + u * m + c2, ai * m + ci) += dl * a.unit()[u];
          }
        }
      }
    }
  }
  out.counit = kron(id_n, c.counit_row());
  return out;
}

Algebra build_sharp_ring(const AlgebraPtr& alg, const Coalgebra& c, const Matrix& psi) {
  const Algebra& a = *alg;
  const Field& f = a.field();
  const std::size_t n = a.dim();
  const std::size_t m = c.dim();
  const std::size_t d = n * m;
  // Precompute, for each c1 and a, psi(c1 (x) e_a).
  std::vector<Vector> products;
  products.reserve(d * d);
  for (std::size_t p = 0; p < d; ++p) {
    const std::size_t pa = p / m, pc = p % m;  // f = E_{pa,pc}
    for (std::size_t q = 0; q < d; ++q) {
      const std::size_t qa = q / m, qc = q % m;  // g = E_{qa,qc}
      Matrix h(f, n, m);
      // (f.g)(c) = sum_{c1,c2} delta f(c2)_psi g(c1^psi); f(c2) = delta_{c2,pc} e_pa.
      for (std::size_t col = 0; col < m; ++col) {
        Vector acc = zero_vector(f, n);
        for (std::size_t c1 = 0; c1 < m; ++c1) {
          const Scalar& dl = c.delta(col, c1, pc);
          if (dl.is_zero()) continue;
          for (std::size_t a2 = 0; a2 < n; ++a2) {
            // psi(c1 (x) e_pa) has component e_a2 (x) e_qc.
            const Scalar& ps = psi(a2 * m + qc, c1 * n + pa);
            if (ps.is_zero()) continue;
            axpy(acc, dl * ps, a.product(a2, qa));
          }
        }
        h.set_col(col, acc);
      }
      products.push_back(vec(h));
    }
  }
  Matrix unit = Matrix::column(f, a.unit()) * c.counit_row();
  return Algebra(f, d, std::move(products), vec(unit));
}

Verdict verify_bialgebra(const Algebra& h, const Coalgebra& hc) {
  Verdict v;
  const Field& f = h.field();
  const std::size_t m = h.dim();
  if (hc.dim() != m) {
    v.fail("shape mismatch between algebra and coalgebra");
    return v;
  }
  auto tensor_product = [&](const Vector& x, const Vector& y) {
    // multiplication in H (x) H
    Vector out = zero_vector(f, m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const Scalar& xv = x[i * m + j];
        if (xv.is_zero()) continue;
        for (std::size_t k = 0; k < m; ++k) {
          for (std::size_t l = 0; l < m; ++l) {
            const Scalar& yv = y[k * m + l];
            if (yv.is_zero()) continue;
            Scalar s = xv * yv;
            const Vector& p1 = h.product(i, k);
            const Vector& p2 = h.product(j, l);
            for (std::size_t r = 0; r < m; ++r) {
              if (p1[r].is_zero()) continue;
              for (std::size_t t = 0; t < m; ++t) {
                if (!p2[t].is_zero()) out[r * m + t].add_mul(s, p1[r] * p2[t]);
              }
            }
          }
        }
      }
    }
    return out;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Vector& p = h.product(i, j);
      if (hc.comult() * p != tensor_product(hc.comult().col(i), hc.comult().col(j))) {
        v.fail("comultiplication is not multiplicative at " + pair_name("e", i, "e", j));
      }
      Scalar e = Scalar::zero(f);
      for (std::size_t k = 0; k < m; ++k) e.add_mul(hc.counit()[k], p[k]);
      if (e != hc.counit()[i] * hc.counit()[j]) v.fail("counit is not multiplicative at " + pair_name("e", i, "e", j));
    }
  }
  Vector u = h.unit();
  if (hc.comult() * u != kron(Matrix::column(f, u), Matrix::column(f, u)).col(0)) v.fail("comultiplication of the unit");
  Scalar e = Scalar::zero(f);
  for (std::size_t k = 0; k < m; ++k) e.add_mul(hc.counit()[k], u[k]);
  if (!e.is_one()) v.fail("counit of the unit");
  return v;
}

Verdict verify_comodule_algebra(const Algebra& a, const Algebra& h, const Coalgebra& hc, const Matrix& coaction) {
  Verdict v;
  const Field& f = a.field();
  const std::size_t n = a.dim();
  const std::size_t m = h.dim();
  if (coaction.rows() != n * m || coaction.cols() != n) {
    v.fail("shape mismatch in coaction");
    return v;
  }
  Matrix id_n = Matrix::identity(f, n);
  Matrix id_m = Matrix::identity(f, m);
  Matrix coassoc_l = kron(coaction, id_m) * coaction;
  Matrix coassoc_r = kron(id_n, hc.comult()) * coaction;
  Matrix counit = kron(id_n, hc.counit_row()) * coaction;
  for (std::size_t i = 0; i < n; ++i) {
    if (coassoc_l.col(i) != coassoc_r.col(i)) v.fail("coaction coassociativity at e" + std::to_string(i));
    if (counit.col(i) != id_n.col(i)) v.fail("coaction counit at e" + std::to_string(i));
  }
  auto mult_tensor = [&](const Vector& x, const Vector& y) {
    Vector out = zero_vector(f, n * m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const Scalar& xv = x[i * m + j];
        if (xv.is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t l = 0; l < m; ++l) {
            const Scalar& yv = y[k * m + l];
            if (yv.is_zero()) continue;
            Scalar s = xv * yv;
            const Vector& p1 = a.product(i, k);
            const Vector& p2 = h.product(j, l);
            for (std::size_t r = 0; r < n; ++r) {
              if (p1[r].is_zero()) continue;
              for (std::size_t t = 0; t < m; ++t) {
                if (!p2[t].is_zero()) out[r * m + t].add_mul(s, p1[r] * p2[t]);
              }
            }
          }
        }
      }
    }
    return out;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (coaction * a.product(i, j) != mult_tensor(coaction.col(i), coaction.col(j))) {
        v.fail("coaction is not multiplicative at " + pair_name("e", i, "e", j));
      }
    }
  }
  if (coaction * a.unit() != kron(Matrix::column(f, a.unit()), Matrix::column(f, h.unit())).col(0)) {
    v.fail("coaction of the unit");
  }
  return v;
}

DoiKoppinenResult doi_koppinen(const AlgebraPtr& alg, const Algebra& h, const Coalgebra& hc, const Matrix& coaction) {
  DoiKoppinenResult r;
  r.verdict.merge(verify_algebra(h), "bialgebra algebra");
  r.verdict.merge(verify_coalgebra(hc), "bialgebra coalgebra");
  if (r.verdict.ok()) r.verdict.merge(verify_bialgebra(h, hc), "bialgebra");
  if (r.verdict.ok()) r.verdict.merge(verify_comodule_algebra(*alg, h, hc, coaction), "comodule algebra");
  if (!r.verdict.ok()) return r;
  const Algebra& a = *alg;
  const Field& f = a.field();
  const std::size_t n = a.dim();
  const std::size_t m = h.dim();
  r.psi = Matrix(f, n * m, n * m);
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t ai = 0; ai < n; ++ai) {
      Vector col = zero_vector(f, n * m);
      for (std::size_t a0 = 0; a0 < n; ++a0) {
        for (std::size_t a1 = 0; a1 < m; ++a1) {
          const Scalar& co = coaction(a0 * m + a1, ai);
          if (co.is_zero()) continue;
          const Vector& ca = h.product(c, a1);
          for (std::size_t t = 0; t < m; ++t) {
            if (!ca[t].is_zero()) col[a0 * m + t].add_mul(co, ca[t]);
          }
        }
      }
      r.psi.set_col(c * n + ai, col);
    }
  }
  return r;
}

Matrix Context::to_dual_map(const Matrix& f) const {
  Matrix out(field(), n, d);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < m; ++c) out.set_col(a * m + c, algebra->left(a) * f.col(c));
  }
  return out;
}

Matrix Context::iota(const Vector& a) const { return Matrix::column(field(), a) * coalgebra.counit_row(); }

Vector Context::evaluate(const Matrix& f, const Vector& y) const {
  Vector out = zero_vector(field(), n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < m; ++c) {
      const Scalar& s = y[a * m + c];
      if (!s.is_zero()) axpy(out, s, algebra->left(a) * f.col(c));
    }
  }
  return out;
}

Matrix Context::multiply(const Matrix& f, const Matrix& g) const {
  return sharp_map(sharp->multiply(vec(f), vec(g)));
}

Context make_context(const EntwiningData& e) {
  Context ctx;
  ctx.algebra = e.algebra;
  ctx.coalgebra = e.coalgebra;
  ctx.psi = e.psi;
  ctx.n = e.algebra->dim();
  ctx.m = e.coalgebra.dim();
  ctx.d = ctx.n * ctx.m;
  for (std::size_t a = 0; a < ctx.n; ++a) ctx.psi_a.push_back(entwine_column(e.psi, ctx.n, ctx.m, a));
  ctx.coring = build_coring(e.algebra, e.coalgebra, e.psi);
  ctx.sharp = std::make_shared<Algebra>(build_sharp_ring(e.algebra, e.coalgebra, e.psi));
  std::vector<Matrix> maps;
  for (std::size_t p = 0; p < ctx.d; ++p) {
    maps.push_back(ctx.to_dual_map(unvec(ctx.field(), ctx.n, ctx.m, unit_vector(ctx.field(), ctx.d, p))));
  }
  ctx.dual = dual_ring(ctx.coring, std::move(maps));
  ctx.x = e.unit_coaction;
  return ctx;
}

Verdict verify_sharp_iso(const Context& ctx) {
  Verdict v;
  if (!(*ctx.dual.ring == *ctx.sharp)) v.fail("#-ring and dual ring structure constants differ");
  Subspace hom = hom_module(ctx.coring.left_module(), regular_module(ctx.algebra, Side::Left));
  if (hom != ctx.dual.span) v.fail("#-ring image is not the space of left A-linear maps");
  return v;
}

std::optional<Vector> unit_coaction_factor(const Context& ctx) {
  const Vector& u = ctx.algebra->unit();
  std::size_t pivot = 0;
  while (pivot < ctx.n && u[pivot].is_zero()) ++pivot;
  if (pivot == ctx.n) return std::nullopt;
  Vector y(ctx.m);
  Scalar inv = u[pivot].inverse();
  for (std::size_t c = 0; c < ctx.m; ++c) y[c] = ctx.x[pivot * ctx.m + c] * inv;
  if (kron(Matrix::column(ctx.field(), u), Matrix::column(ctx.field(), y)).col(0) != ctx.x) return std::nullopt;
  return y;
}

}  // namespace coringlab
