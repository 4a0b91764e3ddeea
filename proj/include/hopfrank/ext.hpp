#pragma once

#include <memory>
#include <random>
#include <vector>

#include "hopfrank/resolution.hpp"

namespace hopfrank {

using ResolutionPtr = std::shared_ptr<const Resolution>;

/// A class in Ext^n(M, N) as a cocycle P_n -> N on a resolution of M.
struct ExtElement {
  std::size_t degree = 0;
  ResolutionPtr source;
  Rep target;
  Matrix cocycle;  // N.dim x P_n.dim
};

/// Whether phi: P_n -> N is phi' o d_n for some phi' on P_{n-1}.
inline bool is_coboundary(const Resolution& r, std::size_t n, const Rep& target, const Matrix& phi) {
  if (n == 0) return phi.is_zero();
  HomSpace from(r.terms.at(n - 1), target), to(r.terms.at(n), target);
  Matrix cob = coboundary_matrix(r, n - 1, target, from, to);
  Solver s(cob);
  return s.solve(to.coords(phi)).has_value();
}

inline bool is_zero_class(const ExtElement& z) { return is_coboundary(*z.source, z.degree, z.target, z.cocycle); }

/// The class u*x + v*y + w*z on the canonical resolution of k: generators
/// (a, b, c) of P_+^3 go to u*a + w*b + v*c.
inline ExtElement ext2_element(const ResolutionPtr& canonical, scalar u, scalar v, scalar w) {
  if (u == 0 && v == 0 && w == 0) fail(errc::zero_class, "(u, v, w) = 0");
  if (canonical->length() < 2 || canonical->terms.at(2).summands() != 3)
    fail(errc::internal, "expected the canonical resolution of k");
  HomSpace h(canonical->terms[2], canonical->target);
  return {2, canonical, canonical->target, h.to_map({u, w, v})};
}

/// Chain maps theta_i: P_{n+i} -> Q_i over the class's cocycle, degree by
/// degree, for i = 0..depth. Each generator image is a solution of the
/// lifting equation projected by the summand idempotent.
inline std::vector<Matrix> lift_chain_map(const Matrix& cocycle, std::size_t n, const Resolution& src,
                                          const Resolution& tgt, std::size_t depth) {
  if (!src.has_terms()) fail(errc::internal, "source resolution has no summand data");
  if (src.length() < n + depth || tgt.length() < depth) fail(errc::lift_failed, "resolutions too short for the lift");
  std::vector<Matrix> theta;
  for (std::size_t i = 0; i <= depth; ++i) {
    const ProjectiveModule& p = src.terms[n + i];
    const Rep& q = tgt.modules[i];
    Solver s(tgt.differentials[i]);
    std::vector<Vector> images;
    for (std::size_t g = 0; g < p.summands(); ++g) {
      Vector gen = p.generator(g);
      Vector rhs = i == 0 ? cocycle * gen : theta[i - 1] * (src.differentials[n + i] * gen);
      auto y = s.solve(rhs);
      if (!y) fail(errc::lift_failed, "no lift in degree " + std::to_string(i));
      images.push_back(q.apply(p.idempotent[g], *y));
    }
    theta.push_back(map_from_generators(p, q, images));
  }
  return theta;
}

inline std::vector<Matrix> lift_chain_map(const ExtElement& z, const Resolution& tgt, std::size_t depth) {
  return lift_chain_map(z.cocycle, z.degree, *z.source, tgt, depth);
}

/// eta . zeta for zeta in Ext^n(M, N) and eta in Ext^m(N, L), eta given on
/// a resolution of N.
inline ExtElement yoneda(const ExtElement& eta, const ExtElement& zeta) {
  require_same_algebra(zeta.target, eta.source->target);
  auto theta = lift_chain_map(zeta, *eta.source, eta.degree);
  return {zeta.degree + eta.degree, zeta.source, eta.target, eta.cocycle * theta[eta.degree]};
}

/// Omega^2(k) = im(d_2) inside P_1, as a module, with the map
/// zeta-hat: Omega^2(k) -> k induced by a degree-2 cocycle.
struct OmegaTwo {
  Rep module;
  Matrix basis;  // columns in P_1 coordinates
  Matrix zeta_hat;
};

inline OmegaTwo omega_two(const ExtElement& z) {
  if (z.degree != 2) fail(errc::dimension_mismatch, "L_zeta needs a degree-2 class");
  const Resolution& r = *z.source;
  const Matrix& d2 = r.differentials.at(2);
  auto red = rref(d2);
  OmegaTwo o;
  o.basis = d2.select_columns(red.pivots);
  o.module = submodule(r.modules[1], o.basis);
  o.zeta_hat = z.cocycle.select_columns(red.pivots);
  return o;
}

/// L_zeta = ker(zeta-hat: Omega^2(k) -> k).
inline Rep L_zeta(const ExtElement& z) {
  if (z.target.dim() != 1 || z.source->target.dim() != 1) fail(errc::unsupported_algebra, "L_zeta is built over k");
  if (z.cocycle.is_zero()) fail(errc::zero_class, "zeta = 0");
  OmegaTwo o = omega_two(z);
  return submodule(o.module, kernel(o.zeta_hat));
}

/// Coefficient of the degree-2 generator of Ext_H(k, k) in the restriction
/// of a class to H_ab, computed by lifting id_k from the periodic resolution
/// over H into the restricted canonical resolution.
inline scalar restriction_coefficient_by_lift(const ExtElement& cls, const ProjPoint& pt) {
  const Resolution& canon = *cls.source;
  SubalgebraEmbedding H = subalgebra_H(canon.target.algebra(), pt);
  Resolution q = periodic_resolution_H(H, 2);
  Resolution p = restrict_resolution(canon, H);
  auto theta = lift_chain_map(q.differentials[0], 0, q, p, 2);
  return (cls.cocycle * (theta[2] * q.terms[2].generator(0)))[0];
}

/// Image of e_+ under the degree-2 lift above, in the coordinates (a, b, c)
/// of the three generators of P_+^3.
inline Vector restriction_lift_coordinates(const ResolutionPtr& canon, const ProjPoint& pt) {
  SubalgebraEmbedding H = subalgebra_H(canon->target.algebra(), pt);
  Resolution q = periodic_resolution_H(H, 2);
  Resolution p = restrict_resolution(*canon, H);
  auto theta = lift_chain_map(q.differentials[0], 0, q, p, 2);
  Vector img = theta[2] * q.terms[2].generator(0);
  Vector out;
  for (std::size_t s = 0; s < 3; ++s) out.push_back((ext2_element(canon, s == 0, s == 2, s == 1).cocycle * img)[0]);
  return out;
}

// ---------------------------------------------------------------------------
// Heller translate

/// P_* (x) M with augmentation eps (x) id, a projective resolution of M.
inline Resolution tensor_resolution(const Resolution& p, const Rep& m) {
  Resolution out;
  out.target = m;
  const Matrix id = m.identity();
  for (const auto& mod : p.modules) out.modules.push_back(tensor(mod, m));
  for (const auto& d : p.differentials) out.differentials.push_back(kron(d, id));
  return out;
}

/// Cocycle on a resolution R of M representing zeta (x) M in Ext^2(M, M):
/// lift id_M into P_* (x) M, then apply zeta (x) id in degree 2.
inline Matrix tensor_class_cocycle(const ExtElement& zeta, const Resolution& r) {
  Resolution pm = tensor_resolution(*zeta.source, r.target);
  auto phi = lift_chain_map(r.differentials[0], 0, r, pm, 2);
  return kron(zeta.cocycle, r.target.identity()) * phi[2];
}

/// For f = zeta (x) M: Omega^2(f) and zeta (x) Omega^2(M) agree as stable
/// maps Omega^4(M) -> Omega^2(M); the difference, pulled back to R_4, must be
/// a coboundary from Hom(R_3, Omega^2 M) (maps out of Omega^4 M factor
/// through a projective exactly when they extend over R_3).
inline bool heller_stability_check(const ExtElement& zeta, const Rep& m) {
  if (zeta.cocycle.is_zero()) fail(errc::zero_class, "zeta = 0");
  if (zeta.degree != 2) fail(errc::dimension_mismatch, "expected a degree-2 class");
  if (is_projective(m)) return true;
  const Resolution r = minimal_resolution(m, 4);
  if (r.length() < 4) return true;

  // f_M as a cocycle R_2 -> M, then Omega^2 of it via a self-lift.
  Matrix c = tensor_class_cocycle(zeta, r);
  auto psi = lift_chain_map(c, 2, r, r, 2);

  // Omega^2 M = im d_2 inside R_1, resolved by R_{>=2}.
  auto red = rref(r.differentials[2]);
  Matrix omega_basis = r.differentials[2].select_columns(red.pivots);
  Rep omega = submodule(r.modules[1], omega_basis);
  Solver to_omega(omega_basis);
  Resolution shifted;
  shifted.target = omega;
  for (std::size_t i = 2; i <= r.length(); ++i) {
    shifted.terms.push_back(r.terms[i]);
    shifted.modules.push_back(r.modules[i]);
    shifted.differentials.push_back(i == 2 ? *to_omega.solve(r.differentials[2]) : r.differentials[i]);
  }
  Matrix c_shift = tensor_class_cocycle(zeta, shifted);

  Matrix omega2_f = *to_omega.solve(r.differentials[2] * psi[2]);
  Matrix diff = omega2_f - c_shift;
  return is_coboundary(shifted, 2, omega, diff);
}

// ---------------------------------------------------------------------------
// Generation in degree one

/// For odd n <= upto: products Ext^{n-1}(k-, k-) . Ext^1(k, k-) span
/// Ext^n(k, k-). Returns the per-degree (rank, dim) pairs.
struct GenerationRow {
  std::size_t degree, rank, dim;
};

inline std::vector<GenerationRow> generation_in_degree_one(const AlgebraPtr& D, std::size_t upto) {
  auto rk = std::make_shared<const Resolution>(canonical_resolution_k(D, upto + 1));
  auto rm = std::make_shared<const Resolution>(canonical_resolution_k_minus(D, upto + 1));
  const Rep& km = rm->target;
  HomSpace h1(rk->terms[1], km);
  std::vector<std::vector<Matrix>> thetas;
  for (std::size_t b = 0; b < h1.dim(); ++b)
    thetas.push_back(lift_chain_map(h1.to_map(unit_vector(h1.dim(), b)), 1, *rk, *rm, upto - 1));
  std::vector<GenerationRow> out;
  for (std::size_t n = 1; n <= upto; n += 2) {
    HomSpace hn(rk->terms[n], km), hm(rm->terms[n - 1], km);
    std::vector<Matrix> products;
    for (std::size_t a = 0; a < hm.dim(); ++a)
      for (const auto& th : thetas) products.push_back(hm.to_map(unit_vector(hm.dim(), a)) * th[n - 1]);
    std::size_t dim = ext_dims(*rk, km, n)[n];
    out.push_back({n, rank(hn.coords_matrix(products)), dim});
  }
  return out;
}

inline bool generation_in_degree_one_check(const AlgebraPtr& D, std::size_t upto) {
  for (const auto& row : generation_in_degree_one(D, upto))
    if (row.rank != row.dim) return false;
  return true;
}

}  // namespace hopfrank
