#include "coringlab/cleft.hpp"

#include <random>
#include <stdexcept>

#include "coringlab/kernels.hpp"

namespace coringlab {

const char* to_string(Decision d) {
  switch (d) {
    case Decision::No:
      return "false";
    case Decision::Yes:
      return "true";
    case Decision::Inconclusive:
      break;
  }
  return "inconclusive";
}

namespace {

Matrix combine(const Matrix& offset, const std::vector<Matrix>& family, const Vector& t) {
  Matrix m = offset;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!t[i].is_zero()) m += family[i] * t[i];
  }
  return m;
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  constexpr std::int64_t bound = std::int64_t{1} << 16;
  if (f.is_prime_field()) return Scalar::residue(rng() % f.p, f.p);
  const auto num = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
  const auto den = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(bound)) + 1;
  return Scalar::rational(num, den);
}

/// Index of the first candidate with nonzero determinant.
std::optional<std::size_t> first_invertible(const Matrix& offset, const std::vector<Matrix>& family,
                                            const std::vector<Vector>& candidates) {
  std::vector<char> hit(candidates.size(), 0);
  const auto count = static_cast<std::ptrdiff_t>(candidates.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    hit[static_cast<std::size_t>(i)] = !kernels::serial::determinant(combine(offset, family, candidates[static_cast<std::size_t>(i)])).is_zero();
  }
  for (std::size_t i = 0; i < hit.size(); ++i) {
    if (hit[i]) return i;
  }
  return std::nullopt;
}

/// All points of {0..top}^r in lexicographic order.
std::vector<Vector> grid(const Field& f, std::size_t r, std::uint64_t top) {
  std::vector<Vector> out;
  std::vector<std::uint64_t> digits(r, 0);
  while (true) {
    Vector t;
    for (std::uint64_t d : digits) t.push_back(Scalar::from_int(f, static_cast<std::int64_t>(d)));
    out.push_back(std::move(t));
    std::size_t k = 0;
    while (k < r && digits[k] == top) digits[k++] = 0;
    if (k == r) break;
    ++digits[k];
  }
  return out;
}

bool grid_fits(std::uint64_t side, std::size_t r, std::size_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < r; ++i) {
    if (total > budget / side) return false;
    total *= side;
  }
  return total <= budget;
}

}  // namespace

InvertibleSearch search_invertible(const Field& f, const Matrix& offset, const std::vector<Matrix>& family,
                                   const SearchOptions& opt, bool certify) {
  InvertibleSearch s;
  const std::size_t r = family.size();
  const std::size_t size = offset.rows();
  auto found = [&](const std::vector<Vector>& cands, const char* how) {
    s.evaluations += cands.size();
    if (auto i = first_invertible(offset, family, cands)) {
      s.decision = Decision::Yes;
      s.point = cands[*i];
      s.certificate = how;
      return true;
    }
    return false;
  };

  std::vector<Vector> cands;
  if (r < 64 && (std::size_t{1} << r) <= opt.zero_one_limit) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << r); ++bits) {
      Vector t;
      for (std::size_t i = 0; i < r; ++i) t.push_back(Scalar::from_int(f, static_cast<std::int64_t>((bits >> i) & 1U)));
      cands.push_back(std::move(t));
    }
  } else {
    cands.push_back(zero_vector(f, r));
    for (std::size_t i = 0; i < r; ++i) cands.push_back(unit_vector(f, r, i));
    cands.push_back(Vector(r, Scalar::one(f)));
  }
  if (found(cands, "0/1 pattern")) return s;

  std::mt19937_64 rng(opt.seed);
  cands.clear();
  for (std::size_t k = 0; k < opt.random_trials && r > 0; ++k) {
    Vector t;
    for (std::size_t i = 0; i < r; ++i) t.push_back(random_scalar(f, rng));
    cands.push_back(std::move(t));
  }
  if (found(cands, "random point")) return s;
  if (!certify) return s;

  std::vector<Matrix> all{offset};
  all.insert(all.end(), family.begin(), family.end());
  if (rank(Matrix::hstack(f, size, all)) < size) {
    s.decision = Decision::No;
    s.certificate = "determinant identically zero: common proper image";
    return s;
  }
  if (rank(Matrix::vstack(f, size, all)) < size) {
    s.decision = Decision::No;
    s.certificate = "determinant identically zero: common kernel";
    return s;
  }
  if (f.is_prime_field() && f.p <= size && grid_fits(f.p, r, opt.budget)) {
    if (found(grid(f, r, f.p - 1), "exhaustive")) return s;
    s.decision = Decision::No;
    s.certificate = "exhaustive over F_p";
    return s;
  }
  if ((f.is_rationals() || f.p > size) && grid_fits(size + 1, r, opt.budget)) {
    if (found(grid(f, r, size), "grid point")) return s;
    s.decision = Decision::No;
    s.certificate = "determinant identically zero: vanishes on a degree grid";
    return s;
  }
  s.certificate = "budget exhausted";
  return s;
}

bool IntegralSpace::contains(const Matrix& lambda) const { return space.contains(vec(lambda)); }

bool IntegralSpace::is_total(const Matrix& lambda, const Vector& unit) const { return totality * vec(lambda) == unit; }

IntegralSpace integral_space(const Context& ctx) {
  const Field& f = ctx.field();
  const std::size_t n = ctx.n;
  const std::size_t m = ctx.m;
  IntegralSpace is;
  Comodule a = algebra_comodule(ctx);
  is.space = kernel(colinearity_conditions(ctx.coalgebra.comult(), m, a.coaction, n, m));
  for (std::size_t i = 0; i < is.space.dim(); ++i) is.basis.push_back(unvec(f, n, m, is.space.vector(i)));

  is.totality = Matrix(f, n, n * m);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t c = 0; c < m; ++c) {
      Vector col = zero_vector(f, n);
      for (std::size_t aa = 0; aa < n; ++aa) {
        const Scalar& s = ctx.x[aa * m + c];
        if (!s.is_zero()) axpy(col, s, ctx.algebra->left(aa).col(v));
      }
      is.totality.set_col(v * m + c, col);
    }
  }
  Matrix restricted(f, n, is.basis.size());
  for (std::size_t i = 0; i < is.basis.size(); ++i) restricted.set_col(i, is.totality * is.space.vector(i));
  if (auto t = solve(restricted, ctx.algebra->unit())) {
    Matrix total(f, n, m);
    for (std::size_t i = 0; i < is.basis.size(); ++i) total += is.basis[i] * (*t)[i];
    is.total = std::move(total);
  }
  is.total_directions = kernel(restricted);
  return is;
}

CleftResult find_cleft(const Context& ctx, const IntegralSpace& integrals, const SearchOptions& opt) {
  const Field& f = ctx.field();
  const Algebra& a = *ctx.algebra;
  const Coalgebra& c = ctx.coalgebra;
  const std::size_t size = ctx.n * ctx.m;
  CleftResult r;
  auto finish = [&](const Matrix& lambda, std::string how) {
    auto bar = convolution_inverse(lambda, a, c);
    if (!bar) throw std::logic_error("invertible convolution operator without an inverse");
    r.status = Decision::Yes;
    r.witness = CleftWitness{lambda, *bar, integrals.is_total(lambda, a.unit())};
    r.certificate = std::move(how);
  };

  std::vector<Matrix> ops;
  for (const Matrix& l : integrals.basis) ops.push_back(left_convolution_operator(l, a, c));

  if (integrals.total) {
    std::vector<Matrix> dirs;
    std::vector<Matrix> dir_ops;
    for (std::size_t i = 0; i < integrals.total_directions.dim(); ++i) {
      Vector t = integrals.total_directions.vector(i);
      dirs.push_back(combine(Matrix(f, ctx.n, ctx.m), integrals.basis, t));
      dir_ops.push_back(combine(Matrix(f, size, size), ops, t));
    }
    InvertibleSearch s = search_invertible(f, left_convolution_operator(*integrals.total, a, c), dir_ops, opt, false);
    r.evaluations += s.evaluations;
    if (s.decision == Decision::Yes) {
      finish(combine(*integrals.total, dirs, *s.point), "total integral, " + s.certificate);
      return r;
    }
  }
  if (integrals.basis.empty()) {
    r.status = size == 0 ? Decision::Yes : Decision::No;
    r.certificate = "no nonzero integrals";
    if (size == 0) r.witness = CleftWitness{Matrix(f, ctx.n, ctx.m), Matrix(f, ctx.n, ctx.m), true};
    return r;
  }
  InvertibleSearch s = search_invertible(f, Matrix(f, size, size), ops, opt, true);
  r.evaluations += s.evaluations;
  if (s.decision == Decision::Yes) {
    finish(combine(Matrix(f, ctx.n, ctx.m), integrals.basis, *s.point), s.certificate);
    return r;
  }
  r.status = s.decision;
  r.certificate = s.certificate;
  return r;
}

std::optional<Vector> x_case_element(const Context& ctx) {
  auto y = unit_coaction_factor(ctx);
  if (y && is_grouplike(ctx.coalgebra, *y)) return y;
  return std::nullopt;
}

CoQCheck lemma_coQ_check(const Context& ctx, const IntegralSpace& integrals, const Subspace& q, const Matrix& lambda,
                         const Matrix& lambda_bar) {
  CoQCheck r;
  r.lambda_colinear = integrals.contains(lambda);
  r.lambda_bar_in_q = q.contains(vec(lambda_bar));
  r.biconditional = r.lambda_colinear == r.lambda_bar_in_q;
  if (auto y = x_case_element(ctx); y && r.lambda_colinear) {
    Matrix hat = ctx.multiply(lambda_bar, ctx.iota(lambda * *y));
    r.lambda_hat_in_q = q.contains(vec(hat));
    r.lambda_hat_normalised = ctx.evaluate(hat, ctx.x) == ctx.algebra->unit() && hat * *y == ctx.algebra->unit();
    r.lambda_hat = std::move(hat);
  }
  return r;
}

GammaResult gamma_M(const Context& ctx, const CleftWitness& w, const Comodule& m) {
  const Field& f = ctx.field();
  const std::size_t mc = ctx.m;
  GammaResult r;
  r.coinv = coinvariants(ctx, m);
  const std::size_t k = r.coinv.dim();
  Matrix bar = dual_action_of(ctx, m, w.lambda_bar);
  r.gamma = Matrix(f, k * mc, m.dim);
  r.lands = true;
  for (std::size_t c = 0; c < mc; ++c) {
    Matrix part = bar * m.select(c, mc);
    for (std::size_t u = 0; u < m.dim; ++u) {
      auto coords = r.coinv.coordinates(part.col(u));
      if (!coords) {
        r.lands = false;
        continue;
      }
      for (std::size_t i = 0; i < k; ++i) r.gamma(i * mc + c, u) = (*coords)[i];
    }
  }
  r.inverse = Matrix(f, m.dim, k * mc);
  for (std::size_t c = 0; c < mc; ++c) {
    Matrix act = m.act(w.lambda.col(c));
    for (std::size_t i = 0; i < k; ++i) r.inverse.set_col(i * mc + c, act * r.coinv.vector(i));
  }
  r.left_inverse = r.inverse * r.gamma == Matrix::identity(f, m.dim);
  r.right_inverse = r.gamma * r.inverse == Matrix::identity(f, k * mc);
  return r;
}

PsiTildeResult psi_tilde_M(const Context& ctx, const CoinvariantSubring& b, const CleftWitness& w, const Comodule& m) {
  const Field& f = ctx.field();
  PsiTildeResult r;
  PsiResult psi = psi_M(ctx, b, m);
  Matrix bar = dual_action_of(ctx, m, w.lambda_bar);
  Matrix tilde(f, psi.t.dim(), m.dim);
  for (std::size_t c = 0; c < ctx.m; ++c) {
    Matrix part = bar * m.select(c, ctx.m);
    for (std::size_t u = 0; u < m.dim; ++u) {
      auto coords = psi.coinv.coordinates(part.col(u));
      if (!coords) return r;
      Vector col = tilde.col(u);
      axpy(col, Scalar::one(f), psi.t.pure(*coords, w.lambda.col(c)));
      tilde.set_col(u, col);
    }
  }
  r.left_inverse = tilde * psi.map == Matrix::identity(f, psi.t.dim());
  r.right_inverse = psi.map * tilde == Matrix::identity(f, m.dim);
  return r;
}

NormalBasisResult normal_basis_check(const Context& ctx, const CoinvariantSubring& b, const SearchOptions& opt) {
  const Field& f = ctx.field();
  const std::size_t n = ctx.n;
  const std::size_t m = ctx.m;
  const std::size_t kb = b.ring->dim();
  const std::size_t rows = kb * m;
  NormalBasisResult r;

  Matrix target(f, rows * m, rows);
  for (std::size_t bb = 0; bb < kb; ++bb) {
    for (std::size_t c = 0; c < m; ++c) {
      for (std::size_t c1 = 0; c1 < m; ++c1) {
        for (std::size_t c2 = 0; c2 < m; ++c2) target((bb * m + c1) * m + c2, bb * m + c) = ctx.coalgebra.delta(c, c1, c2);
      }
    }
  }
  std::vector<Matrix> blocks;
  blocks.push_back(colinearity_conditions(algebra_comodule(ctx).coaction, n, target, rows, m));
  const Matrix id_rows = Matrix::identity(f, rows);
  const Matrix id_n = Matrix::identity(f, n);
  for (std::size_t j = 0; j < kb; ++j) {
    Matrix on_a = ctx.algebra->left_mult(b.embedding.col(j));
    Matrix on_bc = kron(b.ring->left(j), Matrix::identity(f, m));
    Matrix cond = kron(id_rows, on_a.transpose());
    cond -= kron(on_bc, id_n);
    blocks.push_back(std::move(cond));
  }
  r.maps = kernel(Matrix::vstack(f, rows * n, blocks));
  if (rows != n) {
    r.status = Decision::No;
    r.certificate = "dimension obstruction";
    return r;
  }
  std::vector<Matrix> family;
  for (std::size_t i = 0; i < r.maps.dim(); ++i) family.push_back(unvec(f, rows, n, r.maps.vector(i)));
  if (family.empty()) {
    r.status = n == 0 ? Decision::Yes : Decision::No;
    r.certificate = "no nonzero maps";
    if (n == 0) r.witness = Matrix(f, 0, 0);
    return r;
  }
  InvertibleSearch s = search_invertible(f, Matrix(f, n, n), family, opt, true);
  r.status = s.decision;
  r.certificate = s.certificate;
  if (s.point) r.witness = combine(Matrix(f, n, n), family, *s.point);
  return r;
}

namespace {

std::optional<bool> known(Decision d) {
  if (d == Decision::Inconclusive) return std::nullopt;
  return d == Decision::Yes;
}

void add_clause(ClauseTable& t, const std::string& id, std::optional<bool> v, const std::string& note) {
  if (v) {
    t.add(id, *v, note);
  } else {
    t.add_ungrounded(id, std::nullopt, note + " (inconclusive)");
  }
}

std::optional<bool> with_nb(bool lhs, std::optional<bool> nb) {
  if (!lhs) return false;
  return nb;
}

}  // namespace

CleftReport check_theorem_main(const Context& ctx, const MoritaContext& mc, const StructureVerdict& sv,
                               const std::vector<Comodule>& witnesses, const SearchOptions& opt) {
  CleftReport rep;
  rep.integrals = integral_space(ctx);
  rep.cleft = find_cleft(ctx, rep.integrals, opt);
  rep.normal_basis = normal_basis_check(ctx, mc.b, opt);
  rep.x_case = x_case_element(ctx);

  if (rep.cleft.witness) {
    const CleftWitness& w = *rep.cleft.witness;
    rep.coq = lemma_coQ_check(ctx, rep.integrals, mc.q, w.lambda, w.lambda_bar);
    for (const auto& m : witnesses) {
      rep.gamma.emplace_back(m.name, gamma_M(ctx, w, m).isomorphism());
      rep.psi_tilde.emplace_back(m.name, psi_tilde_M(ctx, mc.b, w, m).inverse());
    }
  }

  const std::optional<bool> cleft = known(rep.cleft.status);
  const std::optional<bool> nb = known(rep.normal_basis.status);
  const bool lambda_iso = omega_and_lambda(ctx, mc).lambda_iso();

  rep.main.theorem = "main";
  add_clause(rep.main, "1", cleft, "cleft");
  add_clause(rep.main, "2", with_nb(sv.weak, nb), "weak structure theorem and normal basis");
  add_clause(rep.main, "3", with_nb(sv.galois, nb), "Galois and normal basis");
  add_clause(rep.main, "4", with_nb(lambda_iso, nb), "Lambda ring isomorphism and normal basis");
  add_clause(rep.main, "5", with_nb(sv.strong, nb), "strong structure theorem and normal basis");
  rep.main.notes.push_back("cleft: " + rep.cleft.certificate);
  rep.main.notes.push_back("normal basis: " + rep.normal_basis.certificate);
  if (rep.coq && !rep.coq->biconditional) rep.main.notes.push_back("colinearity of lambda and lambda_bar in Q disagree");

  if (rep.x_case) {
    ClauseTable t;
    t.theorem = "x-case";
    add_clause(t, "1", cleft, "cleft");
    add_clause(t, "2", with_nb(sv.strong, nb), "strong structure theorem and normal basis");
    add_clause(t, "3", with_nb(sv.weak, nb), "weak structure theorem and normal basis");
    add_clause(t, "4", with_nb(sv.galois, nb), "Galois and normal basis");
    add_clause(t, "5", with_nb(lambda_iso, nb), "Lambda ring isomorphism and normal basis");
    if (rep.coq && rep.coq->lambda_hat) {
      t.add_ungrounded("co=x", rep.coq->lambda_hat_in_q && rep.coq->lambda_hat_normalised,
                       "lambda_hat in Q with lambda_hat(x) = 1");
    }
    rep.xcase = std::move(t);
  }
  return rep;
}

}  // namespace coringlab
