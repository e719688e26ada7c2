#include "coringlab/coring.hpp"

#include <string>

namespace coringlab {

namespace {

std::string at(std::size_t i) { return " at e" + std::to_string(i); }

}  // namespace

Module Coring::left_module() const { return Module{algebra, Side::Left, dim, left}; }

Module Coring::right_module() const { return Module{algebra, Side::Right, dim, right}; }

Matrix Coring::right_orbit(const Vector& c) const {
  Matrix m(field(), dim, algebra->dim());
  for (std::size_t a = 0; a < algebra->dim(); ++a) m.set_col(a, right[a] * c);
  return m;
}

Coring trivial_coring(AlgebraPtr a) {
  Coring c;
  const Field& f = a->field();
  const std::size_t n = a->dim();
  c.dim = n;
  for (std::size_t i = 0; i < n; ++i) {
    c.left.push_back(a->left(i));
    c.right.push_back(a->right(i));
  }
  c.delta = Matrix(f, n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) c.delta(i * n + j, i) = a->unit()[j];
  }
  c.counit = Matrix::identity(f, n);
  c.algebra = std::move(a);
  return c;
}

CoringTensors coring_tensors(const Coring& c) {
  CoringTensors t;
  t.square = balanced_tensor(c.right_module(), c.left_module());
  t.square_right = tensor_right_module(t.square, c.algebra, c.right);
  t.cube = balanced_tensor(t.square_right, c.left_module());
  return t;
}

Verdict verify_coring(const Coring& c) {
  Verdict v;
  const Algebra& a = *c.algebra;
  const Field& f = a.field();
  const std::size_t n = a.dim();
  const std::size_t d = c.dim;
  if (c.left.size() != n || c.right.size() != n || c.delta.rows() != d * d || c.delta.cols() != d ||
      c.counit.rows() != n || c.counit.cols() != d) {
    v.fail("shape mismatch in coring data");
    return v;
  }
  v.merge(verify_module(c.left_module()), "left module");
  v.merge(verify_module(c.right_module()), "right module");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (c.left[i] * c.right[j] != c.right[j] * c.left[i]) {
        v.fail("bimodule commutation (e" + std::to_string(i) + ",e" + std::to_string(j) + ")");
      }
    }
  }
  if (!v.ok()) return v;

  for (std::size_t i = 0; i < n; ++i) {
    if (c.counit * c.left[i] != a.left(i) * c.counit) v.fail("counit left linearity" + at(i));
    if (c.counit * c.right[i] != a.right(i) * c.counit) v.fail("counit right linearity" + at(i));
  }

  CoringTensors t = coring_tensors(c);
  Matrix id = Matrix::identity(f, d);
  Matrix pd = t.square.projection * c.delta;
  for (std::size_t i = 0; i < n; ++i) {
    if (pd * c.left[i] != t.square.projection * kron(c.left[i], id) * c.delta) {
      v.fail("comultiplication left linearity" + at(i));
    }
    if (pd * c.right[i] != t.square.projection * kron(id, c.right[i]) * c.delta) {
      v.fail("comultiplication right linearity" + at(i));
    }
  }

  // eps (x) id and id (x) eps, composed with the action maps.
  Matrix left_counit(f, d, d * d);
  Matrix right_counit(f, d, d * d);
  for (std::size_t c1 = 0; c1 < d; ++c1) {
    for (std::size_t c2 = 0; c2 < d; ++c2) {
      Vector l = zero_vector(f, d);
      Vector r = zero_vector(f, d);
      for (std::size_t i = 0; i < n; ++i) {
        if (!c.counit(i, c1).is_zero()) axpy(l, c.counit(i, c1), c.left[i].col(c2));
        if (!c.counit(i, c2).is_zero()) axpy(r, c.counit(i, c2), c.right[i].col(c1));
      }
      left_counit.set_col(c1 * d + c2, l);
      right_counit.set_col(c1 * d + c2, r);
    }
  }
  Matrix lc = left_counit * c.delta;
  Matrix rc = right_counit * c.delta;
  for (std::size_t k = 0; k < d; ++k) {
    if (lc.col(k) != id.col(k)) v.fail("left counit law" + at(k));
    if (rc.col(k) != id.col(k)) v.fail("right counit law" + at(k));
  }

  for (std::size_t k = 0; k < d; ++k) {
    Vector dk = c.delta.col(k);
    Vector lhs = t.cube.project(kron_apply(pd, id, dk));
    Vector rhs = t.cube.project(kron_apply(t.square.projection, id, kron_apply(id, c.delta, dk)));
    if (lhs != rhs) v.fail("coassociativity" + at(k));
  }
  return v;
}

bool is_grouplike(const Coring& c, const Vector& x) {
  if (x.size() != c.dim) throw ShapeError("is_grouplike: vector length");
  if (c.counit * x != c.algebra->unit()) return false;
  TensorProduct sq = balanced_tensor(c.right_module(), c.left_module());
  return sq.project(c.delta * x) == sq.pure(x, x);
}

Matrix dual_product(const Coring& c, const Matrix& f, const Matrix& g) {
  const Field& fl = c.field();
  const std::size_t d = c.dim;
  const std::size_t n = c.algebra->dim();
  // Column k of t is sum_{i,j} delta[(i,j),k] e_i f(e_j).
  Matrix t(fl, d, d);
  for (std::size_t k = 0; k < d; ++k) {
    Vector acc = zero_vector(fl, d);
    for (std::size_t ij = 0; ij < d * d; ++ij) {
      const Scalar& coef = c.delta(ij, k);
      if (coef.is_zero()) continue;
      const std::size_t i = ij / d;
      const std::size_t j = ij % d;
      for (std::size_t l = 0; l < n; ++l) {
        if (f(l, j).is_zero()) continue;
        Scalar s = coef * f(l, j);
        for (std::size_t r = 0; r < d; ++r) {
          if (!c.right[l](r, i).is_zero()) acc[r].add_mul(s, c.right[l](r, i));
        }
      }
    }
    t.set_col(k, acc);
  }
  return g * t;
}

Matrix DualRing::map(const Vector& coords) const {
  if (maps.empty()) throw ShapeError("dual ring has no basis");
  return linear_combination(maps.front().field(), maps.front().rows(), maps.front().cols(), coords, maps);
}

Vector DualRing::coordinates(const Matrix& f) const {
  auto c = span.coordinates(vec(f));
  if (!c) throw ShapeError("map is not in the dual ring");
  // span uses its own echelon basis; convert to coordinates in `maps`.
  std::vector<Vector> cols;
  for (const auto& m : maps) cols.push_back(*span.coordinates(vec(m)));
  auto x = solve(Matrix::from_columns(f.field(), span.dim(), cols), *c);
  return *x;
}

DualRing dual_ring(const Coring& c) {
  Module a_left = regular_module(c.algebra, Side::Left);
  return dual_ring(c, hom_basis(c.left_module(), a_left));
}

DualRing dual_ring(const Coring& c, std::vector<Matrix> basis) {
  const Field& f = c.field();
  const std::size_t n = c.algebra->dim();
  DualRing r;
  r.maps = std::move(basis);
  std::vector<Vector> vs;
  for (const auto& m : r.maps) vs.push_back(vec(m));
  r.span = Subspace::span(f, n * c.dim, vs);
  if (r.span.dim() != r.maps.size()) throw ShapeError("dual ring basis is linearly dependent");
  Matrix change(f, r.span.dim(), r.maps.size());
  for (std::size_t p = 0; p < r.maps.size(); ++p) change.set_col(p, *r.span.coordinates(vs[p]));
  Matrix to_basis = *inverse(change);
  auto coords = [&](const Matrix& m) {
    auto e = r.span.coordinates(vec(m));
    if (!e) throw ShapeError("dual ring is not closed under multiplication");
    return to_basis * *e;
  };
  const std::size_t dim = r.maps.size();
  std::vector<Vector> products;
  products.reserve(dim * dim);
  for (std::size_t p = 0; p < dim; ++p) {
    for (std::size_t q = 0; q < dim; ++q) products.push_back(coords(dual_product(c, r.maps[p], r.maps[q])));
  }
  r.ring = std::make_shared<Algebra>(f, dim, std::move(products), coords(c.counit));
  return r;
}

}  // namespace coringlab
