#include "coringlab/algebra.hpp"

#include <string>

namespace coringlab {

namespace {

std::string basis_name(std::size_t i) { return "e" + std::to_string(i); }

Matrix block_diagonal(const Field& f, const std::vector<Matrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix m(f, rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) m(r0 + r, c0 + c) = b(r, c);
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

Subspace subalgebra_closure(const Algebra& a, const std::vector<Vector>& gens) {
  std::vector<Vector> seed = gens;
  seed.push_back(a.unit());
  Subspace v = Subspace::span(a.field(), a.dim(), seed);
  while (true) {
    std::vector<Vector> more = v.vectors();
    for (const auto& x : v.vectors()) {
      for (const auto& g : gens) more.push_back(a.multiply(x, g));
    }
    Subspace next = Subspace::span(a.field(), a.dim(), more);
    if (next.dim() == v.dim()) return v;
    v = std::move(next);
  }
}

}  // namespace

void Verdict::merge(const Verdict& other, const std::string& prefix) {
  for (const auto& f : other.failures) failures.push_back(prefix.empty() ? f : prefix + ": " + f);
}

Algebra::Algebra(const Field& f, std::size_t dim, std::vector<Vector> products, Vector unit)
    : field_(f), dim_(dim), products_(std::move(products)), unit_(std::move(unit)) {
  if (products_.size() != dim_ * dim_) throw ShapeError("algebra: expected dim^2 products");
  if (unit_.size() != dim_) throw ShapeError("algebra: unit has wrong length");
  for (const auto& p : products_) {
    if (p.size() != dim_) throw ShapeError("algebra: product vector has wrong length");
  }
  left_.assign(dim_, Matrix(f, dim_, dim_));
  right_.assign(dim_, Matrix(f, dim_, dim_));
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      left_[i].set_col(j, product(i, j));
      right_[i].set_col(j, product(j, i));
    }
  }
}

Algebra Algebra::ground(const Field& f) { return Algebra(f, 1, {Vector{Scalar::one(f)}}, Vector{Scalar::one(f)}); }

Matrix Algebra::left_mult(const Vector& a) const { return linear_combination(field_, dim_, dim_, a, left_); }

Matrix Algebra::right_mult(const Vector& a) const { return linear_combination(field_, dim_, dim_, a, right_); }

Vector Algebra::multiply(const Vector& a, const Vector& b) const { return left_mult(a) * b; }

Algebra Algebra::opposite() const {
  std::vector<Vector> p(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) p[i * dim_ + j] = product(j, i);
  }
  return Algebra(field_, dim_, std::move(p), unit_);
}

Verdict verify_algebra(const Algebra& a) {
  Verdict v;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix lhs = a.left_mult(a.product(i, j));
      Matrix rhs = a.left(i) * a.left(j);
      for (std::size_t k = 0; k < n; ++k) {
        if (lhs.col(k) != rhs.col(k)) {
          v.fail("associativity (" + basis_name(i) + "," + basis_name(j) + "," + basis_name(k) + ")");
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vector e = a.basis_vector(i);
    if (a.multiply(a.unit(), e) != e) v.fail("left unit at " + basis_name(i));
    if (a.multiply(e, a.unit()) != e) v.fail("right unit at " + basis_name(i));
  }
  return v;
}

std::optional<Algebra> induced_subalgebra(const Algebra& a, const Subspace& basis) {
  const std::size_t k = basis.dim();
  std::vector<Vector> products;
  products.reserve(k * k);
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = 0; q < k; ++q) {
      auto c = basis.coordinates(a.multiply(basis.vector(p), basis.vector(q)));
      if (!c) return std::nullopt;
      products.push_back(std::move(*c));
    }
  }
  auto unit = basis.coordinates(a.unit());
  if (!unit) return std::nullopt;
  return Algebra(a.field(), k, std::move(products), std::move(*unit));
}

std::vector<Vector> algebra_generators(const Algebra& a) {
  std::vector<Vector> gens;
  Subspace current = subalgebra_closure(a, gens);
  for (std::size_t i = 0; i < a.dim() && !current.is_full(); ++i) {
    Vector e = a.basis_vector(i);
    if (current.contains(e)) continue;
    gens.push_back(e);
    current = subalgebra_closure(a, gens);
  }
  return gens;
}

Matrix Module::act(const Vector& s) const { return linear_combination(field(), dim, dim, s, action); }

Verdict verify_module(const Module& m) {
  Verdict v;
  const Algebra& s = *m.algebra;
  if (m.action.size() != s.dim()) {
    v.fail("expected one action matrix per algebra basis element");
    return v;
  }
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (m.action[i].rows() != m.dim || m.action[i].cols() != m.dim) {
      v.fail("action matrix " + basis_name(i) + " has wrong shape");
      return v;
    }
  }
  if (!m.act(s.unit()).is_identity()) v.fail("unit acts as a non-identity");
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = 0; j < s.dim(); ++j) {
      Matrix lhs = m.act(s.product(i, j));
      Matrix rhs = m.side == Side::Left ? m.action[i] * m.action[j] : m.action[j] * m.action[i];
      if (lhs != rhs) v.fail("action compatibility (" + basis_name(i) + "," + basis_name(j) + ")");
    }
  }
  return v;
}

Module regular_module(AlgebraPtr a, Side side) { return free_module(std::move(a), side, 1); }

Module free_module(AlgebraPtr a, Side side, std::size_t rank) {
  Module m;
  m.side = side;
  m.dim = a->dim() * rank;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    const Matrix& blk = side == Side::Left ? a->left(i) : a->right(i);
    m.action.push_back(block_diagonal(a->field(), std::vector<Matrix>(rank, blk)));
  }
  m.algebra = std::move(a);
  return m;
}

Module direct_sum(const Module& m, const Module& n) {
  if (m.algebra->dim() != n.algebra->dim() || m.side != n.side) throw ShapeError("direct sum of incompatible modules");
  Module s;
  s.algebra = m.algebra;
  s.side = m.side;
  s.dim = m.dim + n.dim;
  for (std::size_t i = 0; i < m.action.size(); ++i) {
    s.action.push_back(block_diagonal(m.field(), {m.action[i], n.action[i]}));
  }
  return s;
}

Module submodule(const Module& m, const Subspace& sub) {
  Module s;
  s.algebra = m.algebra;
  s.side = m.side;
  s.dim = sub.dim();
  for (const auto& a : m.action) {
    Matrix r(m.field(), sub.dim(), sub.dim());
    for (std::size_t p = 0; p < sub.dim(); ++p) {
      auto c = sub.coordinates(a * sub.vector(p));
      if (!c) throw ShapeError("submodule: subspace is not invariant");
      r.set_col(p, *c);
    }
    s.action.push_back(std::move(r));
  }
  return s;
}

Module restrict_scalars(const Module& m, AlgebraPtr t, const Matrix& embedding) {
  Module r;
  r.side = m.side;
  r.dim = m.dim;
  for (std::size_t i = 0; i < t->dim(); ++i) r.action.push_back(m.act(embedding.col(i)));
  r.algebra = std::move(t);
  return r;
}

Subspace generated_submodule(const Module& m, const std::vector<Vector>& vectors) {
  std::vector<Vector> span;
  for (const auto& v : vectors) {
    for (const auto& a : m.action) span.push_back(a * v);
  }
  return Subspace::span(m.field(), m.dim, span);
}

std::vector<Vector> module_generators(const Module& m) {
  std::vector<Vector> gens;
  Subspace current = Subspace::zero(m.field(), m.dim);
  for (std::size_t l = 0; l < m.dim && !current.is_full(); ++l) {
    Vector e = unit_vector(m.field(), m.dim, l);
    if (current.contains(e)) continue;
    gens.push_back(std::move(e));
    current = generated_submodule(m, gens);
  }
  return gens;
}

Matrix generator_map(const Module& m, const std::vector<Vector>& gens) {
  const std::size_t s = m.algebra->dim();
  Matrix phi(m.field(), m.dim, s * gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t i = 0; i < s; ++i) phi.set_col(j * s + i, m.action[i] * gens[j]);
  }
  return phi;
}

Vector TensorProduct::pure(const Vector& m, const Vector& n) const {
  Vector v;
  v.reserve(m.size() * n.size());
  for (const auto& a : m) {
    for (const auto& b : n) v.push_back(a * b);
  }
  return project(v);
}

QuotientSpace TensorProduct::as_quotient() const {
  QuotientSpace q;
  q.ambient_dim = left_dim * right_dim;
  q.relations = relations();
  q.projection = projection;
  q.section = section;
  return q;
}

TensorProduct balanced_tensor(const Module& m, const Module& n) {
  if (m.side != Side::Right || n.side != Side::Left) throw ShapeError("balanced_tensor: need a right and a left module");
  if (m.algebra->dim() != n.algebra->dim()) throw ShapeError("balanced_tensor: modules over different algebras");
  const Field& f = m.field();
  const std::size_t s = m.algebra->dim();
  const std::size_t dm = m.dim;
  const std::size_t dn = n.dim;

  TensorProduct t;
  t.left_dim = dm;
  t.right_dim = dn;
  std::vector<Vector> gens = module_generators(n);
  const std::size_t r = gens.size();
  Matrix phi = generator_map(n, gens);
  // N = S^r / K; M (x)_S N = M^r / (M (x) K), with M^r indexed m * r + j.
  Subspace k = kernel(phi);
  auto x = solve(phi, Matrix::identity(f, dn));
  if (!x) throw ShapeError("balanced_tensor: generator map is not surjective");

  auto spread = [&](const Vector& svec, std::size_t m_idx, Vector& out) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t i = 0; i < s; ++i) {
        const Scalar& c = svec[j * s + i];
        if (c.is_zero()) continue;
        const Matrix& a = m.action[i];
        for (std::size_t mp = 0; mp < dm; ++mp) {
          if (!a(mp, m_idx).is_zero()) out[mp * r + j].add_mul(c, a(mp, m_idx));
        }
      }
    }
  };

  std::vector<Vector> rel;
  rel.reserve(k.dim() * dm);
  for (std::size_t kk = 0; kk < k.dim(); ++kk) {
    Vector kv = k.vector(kk);
    for (std::size_t mi = 0; mi < dm; ++mi) {
      Vector v = zero_vector(f, dm * r);
      spread(kv, mi, v);
      rel.push_back(std::move(v));
    }
  }
  QuotientSpace q = quotient(dm * r, Subspace::span(f, dm * r, rel));

  Matrix to_free(f, dm * r, dm * dn);
  for (std::size_t l = 0; l < dn; ++l) {
    Vector sl = x->col(l);
    for (std::size_t mi = 0; mi < dm; ++mi) {
      Vector v = zero_vector(f, dm * r);
      spread(sl, mi, v);
      to_free.set_col(mi * dn + l, v);
    }
  }
  Matrix from_free(f, dm * dn, dm * r);
  for (std::size_t mi = 0; mi < dm; ++mi) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t l = 0; l < dn; ++l) from_free(mi * dn + l, mi * r + j) = gens[j][l];
    }
  }
  t.projection = q.projection * to_free;
  t.section = from_free * q.section;
  return t;
}

TensorProduct balanced_tensor_naive(const Module& m, const Module& n) {
  if (m.side != Side::Right || n.side != Side::Left) throw ShapeError("balanced_tensor: need a right and a left module");
  if (m.algebra->dim() != n.algebra->dim()) throw ShapeError("balanced_tensor: modules over different algebras");
  const Field& f = m.field();
  std::vector<Matrix> parts;
  for (std::size_t i = 0; i < m.algebra->dim(); ++i) {
    parts.push_back(kron(m.action[i], Matrix::identity(f, n.dim)) - kron(Matrix::identity(f, m.dim), n.action[i]));
  }
  QuotientSpace q = quotient(m.dim * n.dim, image(Matrix::hstack(f, m.dim * n.dim, parts)));
  TensorProduct t;
  t.left_dim = m.dim;
  t.right_dim = n.dim;
  t.projection = q.projection;
  t.section = q.section;
  return t;
}

Matrix descend(const TensorProduct& t, const Matrix& plain) { return plain * t.section; }

bool descends(const TensorProduct& t, const Matrix& plain) { return plain * t.section * t.projection == plain; }

Matrix tensor_maps(const TensorProduct& from, const TensorProduct& to, const Matrix& f, const Matrix& g) {
  if (f.cols() != from.left_dim || g.cols() != from.right_dim || f.rows() != to.left_dim ||
      g.rows() != to.right_dim) {
    throw ShapeError("tensor_maps: shape mismatch");
  }
  Matrix out(f.field(), to.dim(), from.dim());
  for (std::size_t c = 0; c < from.dim(); ++c) out.set_col(c, to.project(kron_apply(f, g, from.section.col(c))));
  return out;
}

Module tensor_right_module(const TensorProduct& t, AlgebraPtr acting, const std::vector<Matrix>& right_on_n) {
  Module r;
  r.side = Side::Right;
  r.dim = t.dim();
  const Field& f = acting->field();
  Matrix id = Matrix::identity(f, t.left_dim);
  for (const auto& a : right_on_n) r.action.push_back(tensor_maps(t, t, id, a));
  r.algebra = std::move(acting);
  return r;
}

Module tensor_left_module(const TensorProduct& t, AlgebraPtr acting, const std::vector<Matrix>& left_on_m) {
  Module r;
  r.side = Side::Left;
  r.dim = t.dim();
  const Field& f = acting->field();
  Matrix id = Matrix::identity(f, t.right_dim);
  for (const auto& a : left_on_m) r.action.push_back(tensor_maps(t, t, a, id));
  r.algebra = std::move(acting);
  return r;
}

Vector vec(const Matrix& m) { return m.data(); }

Matrix unvec(const Field& f, std::size_t rows, std::size_t cols, const Vector& v) {
  if (v.size() != rows * cols) throw ShapeError("unvec: length mismatch");
  Matrix m(f, rows, cols);
  m.data() = v;
  return m;
}

Subspace hom_module(const Module& m, const Module& n) {
  if (m.algebra->dim() != n.algebra->dim() || m.side != n.side) throw ShapeError("hom_module: incompatible modules");
  const Field& f = m.field();
  Matrix im = Matrix::identity(f, m.dim);
  Matrix in = Matrix::identity(f, n.dim);
  std::vector<Matrix> conds;
  for (const auto& g : algebra_generators(*m.algebra)) {
    // T rho_M(g) - rho_N(g) T = 0 on row-major vec(T).
    conds.push_back(kron(in, m.act(g).transpose()) - kron(n.act(g), im));
  }
  if (conds.empty()) return Subspace::full(f, n.dim * m.dim);
  return kernel(Matrix::vstack(f, n.dim * m.dim, conds));
}

std::vector<Matrix> hom_basis(const Module& m, const Module& n) {
  Subspace h = hom_module(m, n);
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < h.dim(); ++i) out.push_back(unvec(m.field(), n.dim, m.dim, h.vector(i)));
  return out;
}

ProjectivityResult is_fg_projective(const Module& m) {
  ProjectivityResult res;
  const Field& f = m.field();
  std::vector<Vector> gens = module_generators(m);
  res.generators = gens.size();
  if (gens.empty()) {
    res.projective = true;
    res.splitting = Matrix(f, 0, m.dim);
    return res;
  }
  Matrix phi = generator_map(m, gens);
  Module fr = free_module(m.algebra, m.side, gens.size());
  std::vector<Matrix> hs = hom_basis(m, fr);
  std::vector<Vector> cols;
  for (const auto& h : hs) cols.push_back(vec(phi * h));
  Matrix sys = Matrix::from_columns(f, m.dim * m.dim, cols);
  auto c = solve(sys, vec(Matrix::identity(f, m.dim)));
  if (!c) return res;
  res.projective = true;
  res.splitting = linear_combination(f, fr.dim, m.dim, *c, hs);
  return res;
}

bool is_generator(const Module& m) {
  const Algebra& s = *m.algebra;
  std::vector<Vector> images;
  for (const auto& h : hom_basis(m, regular_module(m.algebra, m.side))) {
    for (std::size_t c = 0; c < h.cols(); ++c) images.push_back(h.col(c));
  }
  return Subspace::span(s.field(), s.dim(), images).is_full();
}

Subspace annihilator(const Module& m) {
  std::vector<Vector> cols;
  for (const auto& a : m.action) cols.push_back(vec(a));
  return kernel(Matrix::from_columns(m.field(), m.dim * m.dim, cols));
}

bool is_faithful(const Module& m) { return annihilator(m).is_zero(); }

}  // namespace coringlab
