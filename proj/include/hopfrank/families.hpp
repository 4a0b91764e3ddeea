#pragma once

#include <array>
#include <string>
#include <vector>

#include "hopfrank/algebra.hpp"
#include "hopfrank/projective_line.hpp"
#include "hopfrank/structure.hpp"

namespace hopfrank {

namespace detail {

inline std::string monomial_label(const std::vector<std::pair<std::string, unsigned>>& parts) {
  std::string s;
  for (const auto& [sym, e] : parts) {
    if (e == 0) continue;
    s += sym;
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

inline Term term(scalar c, std::vector<std::size_t> w) { return Term{c, std::move(w)}; }

/// Sparse products in A (x) A, with elements keyed by i * dim + j.
inline Vector tensor_mul(const Algebra& a, const Vector& u, const Vector& v) {
  const std::size_t d = a.dim;
  const PrimeField& f = a.field;
  Vector out(d * d, 0);
  std::vector<std::size_t> su, sv;
  for (std::size_t k = 0; k < u.size(); ++k)
    if (u[k]) su.push_back(k);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k]) sv.push_back(k);
  for (auto ku : su)
    for (auto kv : sv) {
      const std::size_t i1 = ku / d, j1 = ku % d, i2 = kv / d, j2 = kv % d;
      const scalar c = f.mul(u[ku], v[kv]);
      for (const auto& l : a.table[i1 * d + i2])
        for (const auto& r : a.table[j1 * d + j2]) {
          scalar& slot = out[l.index * d + r.index];
          slot = f.add(slot, f.mul(c, f.mul(l.value, r.value)));
        }
    }
  return out;
}

inline Vector pure_tensor(const Algebra& a, const Vector& u, const Vector& v) {
  const std::size_t d = a.dim;
  Vector out(d * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    if (u[i])
      for (std::size_t j = 0; j < d; ++j)
        if (v[j]) out[i * d + j] = a.field.mul(u[i], v[j]);
  return out;
}

}  // namespace detail

/// Attaches Hopf tables given the images of the generators; Delta and
/// epsilon are extended multiplicatively, S anti-multiplicatively, along the
/// basis words.
inline void attach_hopf_from_generators(Algebra& a, const std::vector<Vector>& delta_gens,
                                        const std::vector<scalar>& eps_gens, const std::vector<Vector>& s_gens) {
  const PrimeField& f = a.field;
  HopfData h;
  h.coproduct = Matrix(f, a.dim * a.dim, a.dim);
  h.counit = Vector(a.dim, 0);
  h.antipode = Matrix(f, a.dim, a.dim);
  for (std::size_t b = 0; b < a.dim; ++b) {
    Vector delta = detail::pure_tensor(a, a.unit(), a.unit());
    scalar eps = 1;
    Vector s = a.unit();
    for (auto g : a.basis_words[b]) {
      delta = detail::tensor_mul(a, delta, delta_gens[g]);
      eps = f.mul(eps, eps_gens[g]);
      s = a.mul(s_gens[g], s);
    }
    h.coproduct.set_column(b, delta);
    h.counit[b] = eps;
    h.antipode.set_column(b, s);
  }
  a.hopf = std::move(h);
}

/// The Drinfel'd double D(Lambda_n) of the Taft algebra, with PBW basis
/// x^a X^b g^c G^d in lexicographic order of (a, b, c, d) and q the smallest
/// primitive n-th root of unity.
inline Algebra build_drinfeld_double(unsigned n, PrimeField f) {
  if (n < 2) fail(errc::no_root_of_unity, "n must be at least 2");
  if (n % f.p() == 0 || (f.p() - 1) % n != 0)
    fail(errc::no_root_of_unity, "F_" + std::to_string(f.p()) + " has no primitive " + std::to_string(n) + "-th root");
  const scalar q = primitive_root_of_unity(f, n);
  const scalar qi = f.inv(q);
  const std::size_t dim = std::size_t{n} * n * n * n;
  auto idx = [n](unsigned a, unsigned b, unsigned c, unsigned d) { return ((a * n + b) * n + c) * n + d; };
  enum { X_ = 0, XX = 1, G_ = 2, GG = 3 };  // generator order x, X, g, G

  std::array<Matrix, 4> L{Matrix(f, dim, dim), Matrix(f, dim, dim), Matrix(f, dim, dim), Matrix(f, dim, dim)};
  std::vector<std::string> labels(dim);
  std::vector<std::vector<std::size_t>> words(dim);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      for (unsigned c = 0; c < n; ++c)
        for (unsigned d = 0; d < n; ++d) {
          const std::size_t m = idx(a, b, c, d);
          labels[m] = detail::monomial_label({{"x", a}, {"X", b}, {"g", c}, {"G", d}});
          for (unsigned k = 0; k < a; ++k) words[m].push_back(X_);
          for (unsigned k = 0; k < b; ++k) words[m].push_back(XX);
          for (unsigned k = 0; k < c; ++k) words[m].push_back(G_);
          for (unsigned k = 0; k < d; ++k) words[m].push_back(GG);
          if (a + 1 < n) L[X_](idx(a + 1, b, c, d), m) = 1;
          // g x^a X^b = q^(b - a) x^a X^b g, likewise for G
          const scalar coeff = f.mul(f.pow(qi, a), f.pow(q, b));
          L[G_](idx(a, b, (c + 1) % n, d), m) = coeff;
          L[GG](idx(a, b, c, (d + 1) % n), m) = coeff;
        }
  // X x m' = q^-1 (x X m' - m' + g G m'), by induction on the x-degree.
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      for (unsigned c = 0; c < n; ++c)
        for (unsigned d = 0; d < n; ++d) {
          const std::size_t m = idx(a, b, c, d);
          if (a == 0) {
            if (b + 1 < n) L[XX](idx(0, b + 1, c, d), m) = 1;
            continue;
          }
          const std::size_t mp = idx(a - 1, b, c, d);
          Vector v = L[X_] * L[XX].column(mp);
          v = vsub(f, v, unit_vector(dim, mp));
          v = vadd(f, v, L[G_] * L[GG].column(mp));
          L[XX].set_column(m, scaled(f, v, qi));
        }

  using detail::term;
  const scalar one = 1, mone = f.neg(1);
  std::vector<std::size_t> xn(n, X_), Xn(n, XX), gn(n, G_), Gn(n, GG);
  std::vector<Relation> rels = {
      {"x^n", {term(one, xn)}},
      {"X^n", {term(one, Xn)}},
      {"g^n = 1", {term(one, gn), term(mone, {})}},
      {"G^n = 1", {term(one, Gn), term(mone, {})}},
      {"gG = Gg", {term(one, {G_, GG}), term(mone, {GG, G_})}},
      {"gx = q^-1 xg", {term(one, {G_, X_}), term(f.neg(qi), {X_, G_})}},
      {"gX = q Xg", {term(one, {G_, XX}), term(f.neg(q), {XX, G_})}},
      {"Gx = q^-1 xG", {term(one, {GG, X_}), term(f.neg(qi), {X_, GG})}},
      {"GX = q XG", {term(one, {GG, XX}), term(f.neg(q), {XX, GG})}},
      {"xX - qXx = 1 - gG", {term(one, {X_, XX}), term(f.neg(q), {XX, X_}), term(mone, {}), term(one, {G_, GG})}},
  };
  Algebra alg = algebra_from_regular_action(f, std::move(labels), {"x", "X", "g", "G"},
                                            {L[0], L[1], L[2], L[3]}, std::move(words), std::move(rels));
  alg.family = "d-taft";
  alg.n = n;
  alg.q = q;

  const Vector one_v = alg.unit();
  const Vector x = alg.gen_vectors[X_], X = alg.gen_vectors[XX], g = alg.gen_vectors[G_], G = alg.gen_vectors[GG];
  const Vector g_inv = alg.power(g, n - 1), G_inv = alg.power(G, n - 1);
  using detail::pure_tensor;
  std::vector<Vector> delta = {
      vadd(f, pure_tensor(alg, one_v, x), pure_tensor(alg, x, g)),
      vadd(f, pure_tensor(alg, one_v, X), pure_tensor(alg, X, G)),
      pure_tensor(alg, g, g),
      pure_tensor(alg, G, G),
  };
  std::vector<Vector> anti = {
      scaled(f, alg.mul(x, g_inv), mone),
      scaled(f, alg.mul(X, G_inv), mone),
      g_inv,
      G_inv,
  };
  attach_hopf_from_generators(alg, delta, {0, 0, 1, 1}, anti);

  if (n == 2) {
    const scalar half = f.inv(2), quarter = f.inv(4);
    const Vector gG = alg.mul(g, G);
    auto lin = [&](std::initializer_list<std::pair<scalar, const Vector*>> parts) {
      Vector v(alg.dim, 0);
      for (const auto& [c, p] : parts) axpy(f, v, c, *p);
      return v;
    };
    const Vector fp = lin({{half, &one_v}, {half, &gG}});
    const Vector fm = lin({{half, &one_v}, {f.neg(half), &gG}});
    const Vector ep = lin({{quarter, &one_v}, {quarter, &g}, {quarter, &G}, {quarter, &gG}});
    const Vector em = lin({{quarter, &one_v}, {f.neg(quarter), &g}, {f.neg(quarter), &G}, {quarter, &gG}});
    // f_- block: (1/2)Xx projects each 2-dim simple onto its X-invariant
    // line, and (1 +- g)/2 selects which simple.
    const Vector Xx = alg.mul(X, x), xX = alg.mul(x, X);
    const Vector gp = lin({{half, &one_v}, {half, &g}}), gm = lin({{half, &one_v}, {f.neg(half), &g}});
    const Vector sp = scaled(f, alg.mul(alg.mul(gp, Xx), fm), half);
    const Vector sm = scaled(f, alg.mul(alg.mul(gm, Xx), fm), half);
    const Vector cp = vadd(f, sp, scaled(f, alg.mul(alg.mul(gm, xX), fm), half));
    const Vector cm = vadd(f, sm, scaled(f, alg.mul(alg.mul(gp, xX), fm), half));
    alg.named = {{"f+", fp}, {"f-", fm}, {"e+", ep}, {"e-", em}, {"c+", cp}, {"c-", cm}};
    std::vector<Vector> rad;
    for (const Vector* m : {&x, &X, &xX})
      for (const Vector* h : {&one_v, &g}) rad.push_back(alg.mul(alg.mul(*m, *h), fp));
    alg.tables = make_tables(alg, rad, {fp, cp, cm}, {{"k", ep}, {"k-", em}, {"S+", sp}, {"S-", sm}});
    alg.hints.push_back({alg.mul(x, fp), alg.mul(X, fp), alg.mul(g, fp)});
  } else if (f.p() > dim) {
    alg.tables = analyze(alg);
  }
  return alg;
}

inline AlgebraPtr make_drinfeld_double(unsigned n, PrimeField f) {
  return std::make_shared<const Algebra>(build_drinfeld_double(n, f));
}

/// The basic algebra A: y1^2 = y2^2 = 0, y1y2 + y2y1 = 0, g^2 = 1,
/// g y_i = -y_i g. Basis y1^a y2^b g^c in lexicographic order.
inline Algebra build_basic_algebra_A(PrimeField f) {
  if (f.p() == 2) fail(errc::characteristic_two, "the basic algebra needs odd characteristic");
  auto idx = [](unsigned a, unsigned b, unsigned c) { return a * 4 + b * 2 + c; };
  enum { Y1 = 0, Y2 = 1, G_ = 2 };
  const scalar mone = f.neg(1);
  std::array<Matrix, 3> L{Matrix(f, 8, 8), Matrix(f, 8, 8), Matrix(f, 8, 8)};
  std::vector<std::string> labels(8);
  std::vector<std::vector<std::size_t>> words(8);
  for (unsigned a = 0; a < 2; ++a)
    for (unsigned b = 0; b < 2; ++b)
      for (unsigned c = 0; c < 2; ++c) {
        const std::size_t m = idx(a, b, c);
        labels[m] = detail::monomial_label({{"y1", a}, {"y2", b}, {"g", c}});
        if (a) words[m].push_back(Y1);
        if (b) words[m].push_back(Y2);
        if (c) words[m].push_back(G_);
        if (!a) L[Y1](idx(1, b, c), m) = 1;
        if (!a && !b) L[Y2](idx(0, 1, c), m) = 1;
        if (a && !b) L[Y2](idx(1, 1, c), m) = mone;  // y2 y1 = -y1 y2
        L[G_](idx(a, b, 1 - c), m) = (a + b) % 2 ? mone : 1;
      }
  using detail::term;
  std::vector<Relation> rels = {
      {"y1^2", {term(1, {Y1, Y1})}},
      {"y2^2", {term(1, {Y2, Y2})}},
      {"y1y2 + y2y1", {term(1, {Y1, Y2}), term(1, {Y2, Y1})}},
      {"g^2 = 1", {term(1, {G_, G_}), term(mone, {})}},
      {"gy1 = -y1g", {term(1, {G_, Y1}), term(1, {Y1, G_})}},
      {"gy2 = -y2g", {term(1, {G_, Y2}), term(1, {Y2, G_})}},
  };
  Algebra alg = algebra_from_regular_action(f, std::move(labels), {"y1", "y2", "g"}, {L[0], L[1], L[2]},
                                            std::move(words), std::move(rels));
  alg.family = "basic-A";
  alg.n = 2;
  alg.q = mone;
  const scalar half = f.inv(2);
  const Vector one_v = alg.unit(), g = alg.gen_vectors[G_];
  Vector ep = scaled(f, vadd(f, one_v, g), half), em = scaled(f, vsub(f, one_v, g), half);
  alg.named = {{"e+", ep}, {"e-", em}};
  std::vector<Vector> rad;
  for (std::size_t m = 2; m < 8; ++m) rad.push_back(alg.basis(m));
  alg.tables = make_tables(alg, rad, {one_v}, {{"k+", ep}, {"k-", em}});
  alg.hints.push_back({alg.gen_vectors[Y1], alg.gen_vectors[Y2], g});
  return alg;
}

inline AlgebraPtr make_basic_algebra_A(PrimeField f) {
  return std::make_shared<const Algebra>(build_basic_algebra_A(f));
}

namespace detail {

/// Subalgebra generated by `gens` (parent vectors) with a known spanning
/// set of words and a presentation.
inline SubalgebraEmbedding presented_subalgebra(const AlgebraPtr& parent, std::vector<std::string> names,
                                                std::vector<Vector> gens, std::vector<std::vector<std::size_t>> words,
                                                std::vector<std::string> labels, std::vector<Relation> rels,
                                                std::string family) {
  std::vector<Vector> basis;
  for (const auto& w : words) {
    Vector v = parent->unit();
    for (std::size_t k = w.size(); k-- > 0;) v = parent->mul(gens[w[k]], v);
    basis.push_back(v);
  }
  Algebra sub = algebra_on_span(*parent, basis);
  sub.labels = std::move(labels);
  sub.gen_names = std::move(names);
  Matrix emb = Matrix::from_columns(parent->field, parent->dim, basis);
  Solver s(emb);
  for (const auto& g : gens) sub.gen_vectors.push_back(s.solve_or_throw(g, errc::relation_check_failed));
  sub.basis_words = std::move(words);
  sub.relations = std::move(rels);
  std::vector<Matrix> regular;
  for (const auto& g : sub.gen_vectors) regular.push_back(sub.left_mult(g));
  if (auto bad = violated_relation(sub.relations, regular, Matrix::identity(sub.field, sub.dim)))
    fail(errc::relation_check_failed, "subalgebra violates relation " + *bad);
  sub.family = std::move(family);
  sub.n = parent->n;
  sub.q = parent->q;
  if (sub.field.p() > sub.dim) sub.tables = analyze(sub);
  return {std::make_shared<const Algebra>(std::move(sub)), parent, std::move(emb)};
}

}  // namespace detail

/// H_{ab} = <g, G, t = a x + b X> inside D(Lambda_2); basis t^e g^c G^d.
inline SubalgebraEmbedding subalgebra_H(const AlgebraPtr& D, const ProjPoint& pt) {
  if (D->family != "d-taft" || D->n != 2) fail(errc::algebra_mismatch, "H_ab lives in D(Lambda_2)");
  const PrimeField& f = D->field;
  const scalar a = pt.alpha(), b = pt.beta();
  if (a == 0 && b == 0) fail(errc::zero_point, "t = 0");
  Vector t = vadd(f, scaled(f, D->gen_vectors[0], a), scaled(f, D->gen_vectors[1], b));
  enum { T = 0, G_ = 1, GG = 2 };
  std::vector<std::vector<std::size_t>> words;
  std::vector<std::string> labels;
  for (unsigned e = 0; e < 2; ++e)
    for (unsigned c = 0; c < 2; ++c)
      for (unsigned d = 0; d < 2; ++d) {
        std::vector<std::size_t> w;
        if (e) w.push_back(T);
        if (c) w.push_back(G_);
        if (d) w.push_back(GG);
        words.push_back(w);
        labels.push_back(detail::monomial_label({{"t", e}, {"g", c}, {"G", d}}));
      }
  using detail::term;
  const scalar mone = f.neg(1), ab = f.mul(a, b);
  std::vector<Relation> rels = {
      {"g^2 = 1", {term(1, {G_, G_}), term(mone, {})}},
      {"G^2 = 1", {term(1, {GG, GG}), term(mone, {})}},
      {"gG = Gg", {term(1, {G_, GG}), term(mone, {GG, G_})}},
      {"gt = -tg", {term(1, {G_, T}), term(1, {T, G_})}},
      {"Gt = -tG", {term(1, {GG, T}), term(1, {T, GG})}},
      {"t^2 = ab(1 - gG)", {term(1, {T, T}), term(f.neg(ab), {}), term(ab, {G_, GG})}},
  };
  return detail::presented_subalgebra(D, {"t", "g", "G"}, {t, D->gen_vectors[2], D->gen_vectors[3]},
                                      std::move(words), std::move(labels), std::move(rels), "sub-H");
}

/// B_{ab} = <u = a y1 + b y2, g> inside A; basis 1, g, u, ug.
inline SubalgebraEmbedding subalgebra_B(const AlgebraPtr& A, const ProjPoint& pt) {
  if (A->family != "basic-A") fail(errc::algebra_mismatch, "B_ab lives in the basic algebra");
  const PrimeField& f = A->field;
  Vector u = vadd(f, scaled(f, A->gen_vectors[0], pt.alpha()), scaled(f, A->gen_vectors[1], pt.beta()));
  enum { U = 0, G_ = 1 };
  using detail::term;
  std::vector<Relation> rels = {
      {"u^2", {term(1, {U, U})}},
      {"g^2 = 1", {term(1, {G_, G_}), term(f.neg(1), {})}},
      {"gu = -ug", {term(1, {G_, U}), term(1, {U, G_})}},
  };
  return detail::presented_subalgebra(A, {"u", "g"}, {u, A->gen_vectors[2]}, {{}, {G_}, {U}, {U, G_}},
                                      {"1", "g", "u", "ug"}, std::move(rels), "sub-B");
}

/// eAe for an idempotent e, with basis starting at e. Every basis element is
/// a generator; modules over it are checked against the table.
inline SubalgebraEmbedding corner_algebra(const AlgebraPtr& alg, const Vector& e) {
  if (!alg->is_idempotent(e)) fail(errc::not_idempotent, "corner needs an idempotent");
  if (is_zero(e)) fail(errc::not_idempotent, "corner of the zero idempotent");
  SubspaceBuilder sb(alg->field, alg->dim);
  sb.add(e);
  for (std::size_t i = 0; i < alg->dim; ++i) sb.add(alg->mul(alg->mul(e, alg->basis(i)), e));
  std::vector<Vector> basis = sb.basis();
  Algebra c = algebra_on_span(*alg, basis);
  c.family = "corner";
  c.n = alg->n;
  c.q = alg->q;
  for (std::size_t i = 0; i < c.dim; ++i) {
    c.labels.push_back(i == 0 ? "e" : "b" + std::to_string(i));
    c.gen_names.push_back(c.labels.back());
    c.gen_vectors.push_back(c.basis(i));
  }
  Matrix emb = Matrix::from_columns(alg->field, alg->dim, basis);
  // Compressed generators of the parent are natural identification candidates.
  if (!alg->gen_vectors.empty()) {
    Solver s(emb);
    std::vector<Vector> compressed;
    for (const auto& g : alg->gen_vectors)
      if (auto v = s.solve(alg->mul(alg->mul(e, g), e))) compressed.push_back(*v);
    if (compressed.size() == alg->gen_vectors.size() && compressed.size() >= 3) {
      for (const auto& hint : alg->hints) {
        std::vector<Vector> h;
        for (const auto& v : hint)
          if (auto w = s.solve(alg->mul(alg->mul(e, v), e))) h.push_back(*w);
        if (h.size() == 3) c.hints.push_back(h);
      }
      c.hints.push_back({compressed[0], compressed[1], compressed[2]});
    }
  }
  if (c.field.p() > c.dim) c.tables = analyze(c);
  return {std::make_shared<const Algebra>(std::move(c)), alg, std::move(emb)};
}

/// Direct product of algebras given by tables (used for test fixtures such
/// as M2 + M2).
inline Algebra direct_product(const std::vector<const Algebra*>& parts) {
  Algebra out;
  out.field = parts.front()->field;
  for (auto* p : parts) out.dim += p->dim;
  std::vector<Matrix> left_plain;
  std::size_t off = 0;
  for (auto* p : parts) {
    for (std::size_t i = 0; i < p->dim; ++i) {
      Matrix l(out.field, out.dim, out.dim);
      l.set_block(off, off, p->left[i]);
      left_plain.push_back(std::move(l));
    }
    off += p->dim;
  }
  // Change of basis: new b_0 = sum of units, new b_k = old b_k for k >= 1.
  Matrix P = Matrix::identity(out.field, out.dim);
  off = 0;
  for (auto* p : parts) {
    P(off, 0) = 1;
    off += p->dim;
  }
  Matrix Pinv = *inverse(P);
  out.left.resize(out.dim);
  for (std::size_t k = 0; k < out.dim; ++k) {
    Matrix lk(out.field, out.dim, out.dim);
    for (std::size_t i = 0; i < out.dim; ++i)
      if (P(i, k)) lk.add_scaled(left_plain[i], P(i, k));
    out.left[k] = Pinv * lk * P;
  }
  for (std::size_t k = 0; k < out.dim; ++k) {
    out.labels.push_back(k == 0 ? "1" : "b" + std::to_string(k));
    out.gen_names.push_back(out.labels.back());
    out.gen_vectors.push_back(out.basis(k));
  }
  fill_table(out);
  return out;
}

/// The full matrix algebra M_m(F_p), basis E_ij with E_00 + ... replaced so
/// that index 0 is the identity.
inline Algebra matrix_algebra(PrimeField f, std::size_t m) {
  const std::size_t d = m * m;
  std::vector<Matrix> units;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Matrix e(f, m, m);
      e(i, j) = 1;
      units.push_back(e);
    }
  // basis: identity, then E_ij except E_00
  std::vector<Matrix> basis{Matrix::identity(f, m)};
  for (std::size_t k = 1; k < d; ++k) basis.push_back(units[k]);
  auto coords = [&](const Matrix& x) {
    Vector v(d, 0);
    for (std::size_t k = 1; k < d; ++k) v[k] = x(k / m, k % m);
    v[0] = x(0, 0);
    for (std::size_t i = 1; i < m; ++i) v[i * m + i] = f.sub(v[i * m + i], x(0, 0));
    return v;
  };
  Algebra a;
  a.field = f;
  a.dim = d;
  a.left.assign(d, Matrix(f, d, d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) a.left[i].set_column(j, coords(basis[i] * basis[j]));
  for (std::size_t k = 0; k < d; ++k) {
    a.labels.push_back(k == 0 ? "1" : "E" + std::to_string(k / m) + std::to_string(k % m));
    a.gen_names.push_back(a.labels.back());
    a.gen_vectors.push_back(a.basis(k));
  }
  fill_table(a);
  return a;
}

}  // namespace hopfrank
