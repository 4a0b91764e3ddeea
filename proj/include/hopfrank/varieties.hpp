#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hopfrank/ext.hpp"
#include "hopfrank/projective_line.hpp"

namespace hopfrank {

// ---------------------------------------------------------------------------
// Rank varieties

/// Precomputed restriction of two nilpotent operators to a subspace, for
/// testing rank(a*L1 + b*L2) = dim/2 at many points.
class RankProbe {
 public:
  RankProbe() = default;

  /// l1, l2 act on the span of the columns of `basis`.
  RankProbe(const Matrix& l1, const Matrix& l2, const Matrix& basis)
      : a_(l1 * basis), b_(l2 * basis), m_(basis.cols()) {}

  std::size_t dim() const noexcept { return m_; }

  /// True when the restriction to the point's subalgebra is projective.
  bool projective_at(const ProjPoint& pt) const {
    if (m_ % 2) return false;
    if (m_ == 0) return true;
    Matrix t = a_.scaled(pt.alpha());
    t.add_scaled(b_, pt.beta());
    return rank(t) == m_ / 2;
  }

 private:
  Matrix a_, b_;
  std::size_t m_ = 0;
};

/// For D(Lambda_2): x and X on f_+ M (the f_- block is semisimple, so it
/// never obstructs projectivity). For A: y1 and y2 on M.
inline RankProbe rank_probe(const Rep& m) {
  const Algebra& a = m.alg();
  if (a.family == "d-taft" && a.n == 2) {
    Matrix gg = m.gen("g") * m.gen("G");
    Matrix fp = m.identity() + gg;
    fp = fp.scaled(m.field().inv(2));
    return RankProbe(m.gen("x"), m.gen("X"), image_basis(fp));
  }
  if (a.family == "basic-A") return RankProbe(m.gen("y1"), m.gen("y2"), m.identity());
  fail(errc::unsupported_algebra, "rank varieties are defined over D(Lambda_2) and A");
}

/// Whether M restricted to H_ab (or B_ab over A) is projective.
inline bool rank_point_test(const Rep& m, const ProjPoint& pt) { return rank_probe(m).projective_at(pt); }

inline VarietySet rank_variety(const Rep& m) {
  RankProbe probe = rank_probe(m);
  VarietySet v(m.field());
  for (const auto& pt : projective_line(m.field()))
    if (!probe.projective_at(pt)) v.insert(pt);
  return v;
}

/// Projectivity through the rank criterion, trying `first` before the rest
/// of the line.
inline bool projective_by_rank(const Rep& m, const std::optional<ProjPoint>& first = std::nullopt) {
  RankProbe probe = rank_probe(m);
  if (first && !probe.projective_at(*first)) return false;
  for (const auto& pt : projective_line(m.field()))
    if (!probe.projective_at(pt)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Basic algebra identification

/// An isomorphism A -> corner: columns of `iso` are the images of the basis
/// of A in corner coordinates.
struct BasicIdentification {
  AlgebraPtr basic;
  SubalgebraEmbedding corner;
  Matrix iso;
  std::string method;  // "hint" or "search"
};

namespace detail {

/// Checks the presentation of A on candidate (y1, y2, g) and builds the map.
inline std::optional<Matrix> try_identification(const Algebra& c, const AlgebraPtr& A, const std::vector<Vector>& gens) {
  if (gens.size() != 3) return std::nullopt;
  const Vector& y1 = gens[0];
  const Vector& y2 = gens[1];
  const Vector& g = gens[2];
  const PrimeField& f = c.field;
  const Vector one = c.unit();
  if (!is_zero(c.mul(y1, y1)) || !is_zero(c.mul(y2, y2))) return std::nullopt;
  if (!is_zero(vadd(f, c.mul(y1, y2), c.mul(y2, y1)))) return std::nullopt;
  if (c.mul(g, g) != one) return std::nullopt;
  if (!is_zero(vadd(f, c.mul(g, y1), c.mul(y1, g))) || !is_zero(vadd(f, c.mul(g, y2), c.mul(y2, g))))
    return std::nullopt;
  std::vector<Vector> cols;
  for (const auto& w : A->basis_words) {
    Vector v = one;
    for (std::size_t k = w.size(); k-- > 0;) v = c.mul(gens[w[k]], v);
    cols.push_back(v);
  }
  Matrix iso = Matrix::from_columns(f, c.dim, cols);
  if (rank(iso) != A->dim) return std::nullopt;
  return iso;
}

/// Given v, find w in `space` with v*w + w*v = 0 and (extra)*(v+w) +
/// (v+w)*(extra) = 0 when extra is given; returns a nonzero solution if one
/// exists.
inline std::optional<Vector> anticommuting_partner(const Algebra& c, const Vector& v, const std::vector<Vector>& space,
                                                   const Vector* extra, std::mt19937_64& rng) {
  const PrimeField& f = c.field;
  const std::size_t k = space.size();
  auto anti = [&](const Vector& a, const Vector& b) { return vadd(f, c.mul(a, b), c.mul(b, a)); };
  Matrix lin(f, extra ? 2 * c.dim : c.dim, k);
  Vector rhs(lin.rows(), 0);
  for (std::size_t j = 0; j < k; ++j) {
    Vector col = anti(v, space[j]);
    if (extra) {
      Vector e2 = anti(*extra, space[j]);
      col.insert(col.end(), e2.begin(), e2.end());
    }
    lin.set_column(j, col);
  }
  if (extra) {
    Vector r = anti(*extra, v);
    for (std::size_t i = 0; i < c.dim; ++i) rhs[c.dim + i] = f.neg(r[i]);
  }
  Solver s(lin);
  auto part = s.solve(rhs);
  if (!part) return std::nullopt;
  Matrix ker = kernel(lin);
  Vector lambda = *part;
  for (std::size_t j = 0; j < ker.cols(); ++j) axpy(f, lambda, static_cast<scalar>(rng() % f.p()), ker.column(j));
  Vector w(c.dim, 0);
  for (std::size_t j = 0; j < k; ++j) axpy(f, w, lambda[j], space[j]);
  if (is_zero(w)) return std::nullopt;
  return w;
}

}  // namespace detail

/// Finds y1, y2, g in the corner satisfying the presentation of A. Hints
/// (compressed generators of the parent) are tried first; otherwise g is
/// e1 - e2 for orthogonal primitive idempotents and y1, y2 are assembled from
/// e1 J e2 and e2 J e1 by solving the anticommutation equations.
inline BasicIdentification identify_basic_algebra(const SubalgebraEmbedding& corner, std::uint64_t seed = 0) {
  const Algebra& c = *corner.sub;
  AlgebraPtr A = make_basic_algebra_A(c.field);
  if (c.dim != 8) fail(errc::identification_failed, "corner has dimension " + std::to_string(c.dim) + ", not 8");
  for (const auto& h : c.hints)
    if (auto iso = detail::try_identification(c, A, h)) return {A, corner, *iso, "hint"};
  if (!c.tables) fail(errc::identification_failed, "corner has no structure tables");
  const auto& rad = c.tables->radical;
  std::vector<Vector> prims;
  try {
    prims = primitive_idempotents(c, rad, seed);
  } catch (const error&) {
    fail(errc::identification_failed, "corner does not split into primitive idempotents");
  }
  if (prims.size() != 2 || rad.size() != 6) fail(errc::identification_failed, "corner is not of the shape of A");
  const PrimeField& f = c.field;
  const Vector g = vsub(f, prims[0], prims[1]);
  auto sandwich = [&](const Vector& l, const Vector& r) {
    SubspaceBuilder sb(f, c.dim);
    for (const auto& j : rad) sb.add(c.mul(c.mul(l, j), r));
    return sb.basis();
  };
  const auto s12 = sandwich(prims[0], prims[1]);
  const auto s21 = sandwich(prims[1], prims[0]);
  if (s12.empty() || s21.empty()) fail(errc::identification_failed, "no arrows between the simples");
  std::mt19937_64 rng(seed);
  auto rand_in = [&](const std::vector<Vector>& sp) {
    Vector v(c.dim, 0);
    for (const auto& b : sp) axpy(f, v, static_cast<scalar>(rng() % f.p()), b);
    return v;
  };
  for (int attempt = 0; attempt < 256; ++attempt) {
    Vector v1 = rand_in(s12);
    auto w1 = detail::anticommuting_partner(c, v1, s21, nullptr, rng);
    if (!w1) continue;
    Vector y1 = vadd(f, v1, *w1);
    Vector v2 = rand_in(s12);
    auto w2 = detail::anticommuting_partner(c, v2, s21, &y1, rng);
    if (!w2) continue;
    Vector y2 = vadd(f, v2, *w2);
    if (auto iso = detail::try_identification(c, A, {y1, y2, g})) return {A, corner, *iso, "search"};
  }
  fail(errc::identification_failed, "no presentation of A found after 256 attempts");
}

/// eM for M in the block, as a module over A through the identification.
inline Rep transport_to_basic(const Rep& m, const BasicIdentification& id) {
  if (!same_algebra(m.algebra(), id.corner.parent)) fail(errc::bad_identification, "module not over the parent");
  Rep em = block_component(m, id.corner);
  std::vector<Matrix> gens;
  for (const auto& gv : id.basic->gen_vectors) gens.push_back(em.act(id.iso * gv));
  if (auto bad = violated_relation(id.basic->relations, gens, em.identity()))
    fail(errc::bad_identification, "transported action violates " + *bad);
  return Rep(id.basic, em.dim(), std::move(gens));
}

inline VarietySet rank_variety_block(const Rep& m, const BasicIdentification& id) {
  return rank_variety(transport_to_basic(m, id));
}

/// The basic corner of D(Lambda_2)'s principal block: e = f_+ = e_+ + e_-.
inline SubalgebraEmbedding principal_corner(const AlgebraPtr& D) { return corner_algebra(D, D->element("f+")); }

// ---------------------------------------------------------------------------
// Restriction to H_ab and support varieties

/// A degree-2 class u x + v y + w z.
struct ExtRingPoint {
  scalar u = 0, v = 0, w = 0;
};

/// Coefficient of gamma in the restriction of u x + v y + w z to H_ab.
inline scalar restriction_coefficient(const PrimeField& f, const ExtRingPoint& c, const ProjPoint& pt) {
  const scalar a = pt.alpha(), b = pt.beta();
  return f.add(f.add(f.mul(c.u, f.mul(a, a)), f.mul(c.v, f.mul(b, b))), f.mul(c.w, f.mul(a, b)));
}

/// beta z - alpha y and beta x - alpha z: both restrict to zero exactly at pt.
inline std::pair<ExtRingPoint, ExtRingPoint> kernel_pair(const PrimeField& f, const ProjPoint& pt) {
  const scalar a = pt.alpha(), b = pt.beta();
  return {ExtRingPoint{0, f.neg(a), b}, ExtRingPoint{b, 0, f.neg(a)}};
}

inline ExtElement ext2_element(const ResolutionPtr& canonical, const ExtRingPoint& c) {
  return ext2_element(canonical, c.u, c.v, c.w);
}

/// Caches L_zeta1 (x) L_zeta2 for every point of the line.
class SupportContext {
 public:
  explicit SupportContext(const AlgebraPtr& D)
      : D_(D), canon_(std::make_shared<const Resolution>(canonical_resolution_k(D, 3))) {}

  const ResolutionPtr& canonical() const noexcept { return canon_; }

  const Rep& probe_module(const ProjPoint& pt) {
    auto it = cache_.find(pt.index(D_->field));
    if (it != cache_.end()) return it->second;
    auto [z1, z2] = kernel_pair(D_->field, pt);
    Rep l = tensor(L_zeta(ext2_element(canon_, z1)), L_zeta(ext2_element(canon_, z2)));
    return cache_.emplace(pt.index(D_->field), std::move(l)).first->second;
  }

  /// M (x) L_zeta1 (x) L_zeta2 for the kernel pair of pt.
  Rep twisted(const Rep& m, const ProjPoint& pt) { return tensor(m, probe_module(pt)); }

 private:
  AlgebraPtr D_;
  ResolutionPtr canon_;
  std::map<std::size_t, Rep> cache_;
};

/// Points where M (x) L_zeta1 (x) L_zeta2 fails to be projective.
inline VarietySet support_variety(const Rep& m, SupportContext& ctx) {
  VarietySet v(m.field());
  for (const auto& pt : projective_line(m.field()))
    if (!projective_by_rank(ctx.twisted(m, pt), pt)) v.insert(pt);
  return v;
}

inline VarietySet support_variety(const Rep& m) {
  SupportContext ctx(m.algebra());
  return support_variety(m, ctx);
}

// ---------------------------------------------------------------------------
// General n

struct BlockReport {
  std::size_t index = 0;
  std::size_t dim = 0;
  std::size_t radical_dim = 0;
  std::vector<std::size_t> simple_dims;
  std::size_t corner_dim = 0;
  std::string identified;  // "hint", "search", "semisimple" or the failure
};

/// Central idempotents, then for each block a basic idempotent (one
/// primitive idempotent per simple, from one orthogonal family) and an
/// attempt to identify the corner with A.
inline std::vector<BlockReport> block_pipeline(const AlgebraPtr& alg, std::uint64_t seed = 0) {
  const auto& t = alg->require_tables();
  const PrimeField& f = alg->field;
  std::vector<Vector> prims = primitive_idempotents(*alg, t.radical, seed);
  std::vector<BlockReport> out;
  for (std::size_t b = 0; b < t.central_idempotents.size(); ++b) {
    const Vector& c = t.central_idempotents[b];
    BlockReport r;
    r.index = b;
    std::vector<Vector> block_span, rad_span;
    for (std::size_t i = 0; i < alg->dim; ++i) block_span.push_back(alg->mul(c, alg->basis(i)));
    for (const auto& j : t.radical) rad_span.push_back(alg->mul(c, j));
    r.dim = span_dim(*alg, block_span);
    r.radical_dim = span_dim(*alg, rad_span);
    Vector e(alg->dim, 0);
    std::vector<Vector> chosen;
    for (const auto& p : prims) {
      if (alg->mul(c, p) != p) continue;
      bool known = false;
      for (const auto& q : chosen)
        if (top_pairing(*alg, t.radical, q, p) > 0) known = true;
      if (known) continue;
      chosen.push_back(p);
      e = vadd(f, e, p);
    }
    for (const auto& s : t.simples)
      if (s.block == b) r.simple_dims.push_back(s.dim);
    auto corner = corner_algebra(alg, e);
    r.corner_dim = corner.sub->dim;
    if (r.radical_dim == 0) {
      r.identified = "semisimple";
    } else {
      try {
        r.identified = identify_basic_algebra(corner, seed).method;
      } catch (const error& ex) {
        r.identified = std::string(errc_name(ex.code()));
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace hopfrank
