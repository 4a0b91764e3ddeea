#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hopfrank/algebra.hpp"
#include "hopfrank/poly.hpp"

namespace hopfrank {

/// Jacobson radical via the trace form {a : tr(L_a L_b) = 0 for all b}.
/// Only valid when p > dim; constructor-supplied tables take precedence.
inline std::vector<Vector> trace_form_radical(const Algebra& a) {
  if (a.field.p() <= a.dim)
    fail(errc::field_too_small, "trace-form radical needs p > dim (p = " + std::to_string(a.field.p()) +
                                    ", dim = " + std::to_string(a.dim) + ")");
  const PrimeField& f = a.field;
  Matrix gram(f, a.dim, a.dim);
  // tr(L_i L_j) = sum_{k,l} L_i(k,l) L_j(l,k)
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = i; j < a.dim; ++j) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < a.dim; ++k)
        for (std::size_t l = 0; l < a.dim; ++l) s += std::uint64_t{a.left[i](k, l)} * a.left[j](l, k) % f.p();
      gram(i, j) = gram(j, i) = static_cast<scalar>(s % f.p());
    }
  return kernel(gram).columns();
}

inline std::vector<Vector> radical_basis(const Algebra& a) {
  if (a.tables) return a.tables->radical;
  return trace_form_radical(a);
}

inline std::vector<Vector> all_basis(const Algebra& a) {
  std::vector<Vector> b;
  for (std::size_t i = 0; i < a.dim; ++i) b.push_back(a.basis(i));
  return b;
}

/// Basis of the center: solve b_i z = z b_i for all basis elements.
inline std::vector<Vector> center(const Algebra& a) {
  std::vector<Matrix> blocks;
  // Generators suffice when every basis element is a word in them.
  std::vector<Vector> probes = a.basis_words.empty() ? all_basis(a) : a.gen_vectors;
  for (const auto& g : probes) blocks.push_back(a.left_mult(g) - a.right_mult(g));
  return kernel(vstack(blocks, a.field, a.dim)).columns();
}

/// e*V*e for V the span of the given vectors (or the whole algebra).
inline std::vector<Vector> corner_span(const Algebra& a, const Vector& e, const std::vector<Vector>& space) {
  SubspaceBuilder sb(a.field, a.dim);
  for (const auto& v : space) sb.add(a.mul(a.mul(e, v), e));
  return sb.basis();
}

/// Minimal polynomial of c inside a corner with unit e (Krylov on powers).
inline Poly minimal_polynomial(const Algebra& a, const Vector& c, const Vector& e) {
  const PrimeField& f = a.field;
  std::vector<Vector> powers{e};
  while (true) {
    Vector next = a.mul(c, powers.back());
    Matrix m = Matrix::from_columns(f, a.dim, powers);
    if (auto sol = Solver(m).solve(next)) {
      Poly mu(powers.size() + 1, 0);
      mu.back() = 1;
      for (std::size_t i = 0; i < powers.size(); ++i) mu[i] = f.neg((*sol)[i]);
      return mu;
    }
    powers.push_back(std::move(next));
    if (powers.size() > a.dim + 1) fail(errc::internal, "minimal polynomial search did not terminate");
  }
}

inline Vector evaluate_poly(const Algebra& a, const Poly& poly, const Vector& c, const Vector& e) {
  Vector r(a.dim, 0);
  for (std::size_t i = poly.size(); i-- > 0;) {
    r = a.mul(c, r);
    axpy(a.field, r, poly[i], e);
  }
  return r;
}

namespace detail {

/// Tries to split the idempotent e using the element c of eAe. Returns a
/// proper idempotent summand (commuting with c) or nothing when the minimal
/// polynomial of c has a single linear factor. `nonsplit` is set when a
/// factor without roots remains.
inline std::optional<Vector> split_with(const Algebra& a, const Vector& e, const Vector& c, bool& nonsplit) {
  const PrimeField& f = a.field;
  Poly mu = minimal_polynomial(a, c, e);
  Poly rest = mu;
  std::vector<std::pair<scalar, unsigned>> roots;
  for (scalar r = 0; r < f.p() && degree(rest) > 0; ++r) {
    unsigned m = 0;
    while (degree(rest) > 0 && poly_eval(f, rest, r) == 0) {
      rest = poly_divmod(f, rest, Poly{f.neg(r), 1}).first;
      ++m;
    }
    if (m) roots.push_back({r, m});
  }
  nonsplit = degree(rest) > 0;
  if (roots.empty() || (roots.size() == 1 && !nonsplit)) return std::nullopt;
  Poly part{1};
  for (unsigned k = 0; k < roots[0].second; ++k) part = poly_mul(f, part, Poly{f.neg(roots[0].first), 1});
  Poly other = poly_divmod(f, mu, part).first;
  // s*other + t*part = 1, so s*other is 1 mod part and 0 mod other.
  ExtGcd g = poly_ext_gcd(f, other, part);
  if (g.g != Poly{1}) fail(errc::internal, "factors of a minimal polynomial are not coprime");
  Poly idem = poly_divmod(f, poly_mul(f, g.s, other), mu).second;
  Vector eps = evaluate_poly(a, idem, c, e);
  if (!a.is_idempotent(eps)) fail(errc::internal, "lifted idempotent is not idempotent");
  return eps;
}

inline Vector random_combination(const PrimeField& f, const std::vector<Vector>& span, std::mt19937_64& rng,
                                 std::size_t dim) {
  Vector v(dim, 0);
  for (const auto& b : span) axpy(f, v, static_cast<scalar>(rng() % f.p()), b);
  return v;
}

/// Splits 1 into orthogonal idempotents that pass `done`, sampling split
/// candidates from `sampler(e)`. Up to 64 fruitless retries per idempotent.
inline std::vector<Vector> split_idempotents(const Algebra& a, const std::function<bool(const Vector&)>& done,
                                             const std::function<std::vector<Vector>(const Vector&)>& sampler,
                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vector> pending{a.unit()}, out;
  while (!pending.empty()) {
    Vector e = pending.back();
    pending.pop_back();
    if (done(e)) {
      out.push_back(e);
      continue;
    }
    std::vector<Vector> span = sampler(e);
    bool split = false;
    bool nonsplit = false;
    for (int attempt = 0; attempt < 64 && !split; ++attempt) {
      Vector c = random_combination(a.field, span, rng, a.dim);
      bool ns = false;
      if (auto eps = split_with(a, e, c, ns)) {
        pending.push_back(vsub(a.field, e, *eps));
        pending.push_back(*eps);
        split = true;
      }
      nonsplit = nonsplit || ns;
    }
    if (!split)
      fail(errc::splitting_failed, nonsplit ? "minimal polynomial has an irreducible factor of degree > 1 over F_" +
                                                  std::to_string(a.field.p())
                                            : "no splitting element found in 64 attempts");
  }
  return out;
}

}  // namespace detail

inline std::size_t span_dim(const Algebra& a, const std::vector<Vector>& vs) {
  SubspaceBuilder sb(a.field, a.dim);
  for (const auto& v : vs) sb.add(v);
  return sb.dim();
}

/// Complete list of orthogonal central primitive idempotents, by splitting
/// the center modulo its radical.
inline std::vector<Vector> central_primitive_idempotents(const Algebra& a, std::uint64_t seed = 0) {
  if (a.tables && !a.tables->central_idempotents.empty()) return a.tables->central_idempotents;
  std::vector<Vector> z = center(a);
  std::vector<Vector> rad = radical_basis(a);
  // rad Z = Z cap J
  Matrix zm = Matrix::from_columns(a.field, a.dim, z);
  Matrix jm = Matrix::from_columns(a.field, a.dim, rad);
  std::vector<Vector> radz = rad.empty() ? std::vector<Vector>{} : intersect_column_spaces(zm, jm).columns();
  auto local = [&](const Vector& e) {
    std::vector<Vector> ez, erz;
    for (const auto& v : z) ez.push_back(a.mul(e, v));
    for (const auto& v : radz) erz.push_back(a.mul(e, v));
    return span_dim(a, ez) - span_dim(a, erz) == 1;
  };
  auto sampler = [&](const Vector& e) {
    std::vector<Vector> ez;
    for (const auto& v : z) ez.push_back(a.mul(e, v));
    return ez;
  };
  return detail::split_idempotents(a, local, sampler, seed);
}

/// Complete set of orthogonal primitive idempotents.
inline std::vector<Vector> primitive_idempotents(const Algebra& a, const std::vector<Vector>& rad,
                                                 std::uint64_t seed = 0) {
  auto primitive = [&](const Vector& e) {
    return corner_span(a, e, all_basis(a)).size() - corner_span(a, e, rad).size() == 1;
  };
  auto sampler = [&](const Vector& e) { return corner_span(a, e, all_basis(a)); };
  return detail::split_idempotents(a, primitive, sampler, seed);
}

/// dim(f A e) - dim(f J e): nonzero iff Ae and Af have the same top, for
/// primitive e, f.
inline std::size_t top_pairing(const Algebra& a, const std::vector<Vector>& rad, const Vector& f, const Vector& e) {
  std::vector<Vector> all, r;
  for (std::size_t i = 0; i < a.dim; ++i) all.push_back(a.mul(a.mul(f, a.basis(i)), e));
  for (const auto& v : rad) r.push_back(a.mul(a.mul(f, v), e));
  return span_dim(a, all) - span_dim(a, r);
}

/// Basis of A*e: b_j*e over the pivot indices j. Index 0 (the unit) comes
/// first, so entry 0 is e.
inline std::vector<Vector> left_ideal_basis(const Algebra& a, const Vector& e) {
  SubspaceBuilder sb(a.field, a.dim);
  for (std::size_t j = 0; j < a.dim; ++j) sb.add(a.mul(a.basis(j), e));
  return sb.basis();
}

/// Assembles tables from a radical, central idempotents and one primitive
/// idempotent per simple.
inline std::shared_ptr<const StructureTables> make_tables(const Algebra& a, std::vector<Vector> radical,
                                                          std::vector<Vector> central,
                                                          const std::vector<std::pair<std::string, Vector>>& simples) {
  auto t = std::make_shared<StructureTables>();
  t->radical = std::move(radical);
  t->central_idempotents = std::move(central);
  for (const auto& [name, e] : simples) {
    if (!a.is_idempotent(e)) fail(errc::not_idempotent, "simple " + name + " has a non-idempotent generator");
    SimpleInfo s;
    s.name = name;
    s.idempotent = e;
    auto basis = left_ideal_basis(a, e);
    s.pim_dim = basis.size();
    std::vector<Vector> je;
    for (const auto& r : t->radical) je.push_back(a.mul(r, e));
    s.dim = s.pim_dim - span_dim(a, je);
    s.block = t->central_idempotents.size();
    for (std::size_t b = 0; b < t->central_idempotents.size(); ++b)
      if (a.mul(t->central_idempotents[b], e) == e) s.block = b;
    t->simples.push_back(std::move(s));
    t->pim_basis.push_back(std::move(basis));
  }
  return t;
}

/// Full structure analysis for p > dim: radical, central primitive
/// idempotents, and one primitive idempotent per isomorphism class of simple
/// modules (ordered by block, then by first appearance). Simples are named
/// S0, S1, ...
inline std::shared_ptr<const StructureTables> analyze(const Algebra& a, std::uint64_t seed = 0) {
  std::vector<Vector> rad = trace_form_radical(a);
  Algebra tmp = a;
  tmp.tables.reset();
  {
    auto t = std::make_shared<StructureTables>();
    t->radical = rad;
    tmp.tables = t;
  }
  std::vector<Vector> central = central_primitive_idempotents(tmp, seed);
  std::vector<Vector> prims = primitive_idempotents(a, rad, seed + 1);
  std::vector<std::pair<std::string, Vector>> reps;
  for (const auto& c : central)
    for (const auto& e : prims) {
      if (a.mul(c, e) != e) continue;
      bool known = false;
      for (const auto& [name, r] : reps)
        if (top_pairing(a, rad, r, e) > 0) known = true;
      if (!known) reps.push_back({"S" + std::to_string(reps.size()), e});
    }
  return make_tables(a, std::move(rad), std::move(central), reps);
}

}  // namespace hopfrank
