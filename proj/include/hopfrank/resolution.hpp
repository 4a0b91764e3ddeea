#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hopfrank/modules.hpp"

namespace hopfrank {

/// A projective resolution P_* -> M. differentials[0] is the augmentation
/// P_0 -> M; differentials[i] maps P_i -> P_{i-1}.
///
/// `terms` carries the summand structure needed to lift maps out of the
/// resolution; resolutions obtained by restriction keep only `modules`.
struct Resolution {
  Rep target;
  std::vector<Rep> modules;
  std::vector<ProjectiveModule> terms;
  std::vector<Matrix> differentials;

  /// Highest computed degree.
  std::size_t length() const noexcept { return modules.empty() ? 0 : modules.size() - 1; }
  bool has_terms() const noexcept { return terms.size() == modules.size(); }

  /// Number of summands of each simple type in degree i (tables order).
  std::vector<std::size_t> multiplicities(std::size_t i) const {
    std::vector<std::size_t> out(target.alg().require_tables().simples.size(), 0);
    for (auto c : terms.at(i).summand_class) ++out.at(c);
    return out;
  }
};

/// Exactness (ranks plus d*d = 0), intertwining, and optionally minimality
/// (every differential lands in the radical of its target).
inline void verify_resolution(const Resolution& r, bool minimal) {
  const std::size_t L = r.length();
  auto bad = [](const std::string& what) { fail(errc::internal, "resolution check failed: " + what); };
  if (rank(r.differentials[0]) != r.target.dim()) bad("augmentation not surjective");
  if (!is_intertwiner(r.modules[0], r.target, r.differentials[0])) bad("augmentation not a module map");
  for (std::size_t i = 1; i <= L; ++i) {
    const Matrix& d = r.differentials[i];
    const Matrix& prev = r.differentials[i - 1];
    if (!is_intertwiner(r.modules[i], r.modules[i - 1], d)) bad("d" + std::to_string(i) + " not a module map");
    if (!(prev * d).is_zero()) bad("d" + std::to_string(i - 1) + " d" + std::to_string(i) + " != 0");
    if (rank(d) + rank(prev) != r.modules[i - 1].dim()) bad("not exact in degree " + std::to_string(i - 1));
    if (minimal) {
      Matrix rad = radical_of_module(r.modules[i - 1]);
      if (rank(hstack({rad, d}, r.target.field(), rad.rows())) != rad.cols())
        bad("d" + std::to_string(i) + " not into the radical");
    }
  }
}

/// Minimal resolution by iterated projective covers. Stops early when a
/// kernel vanishes.
inline Resolution minimal_resolution(const Rep& m, std::size_t length) {
  Resolution r;
  r.target = m;
  ProjectiveCover c = projective_cover(m);
  r.terms.push_back(c.projective);
  r.modules.push_back(c.projective.module);
  r.differentials.push_back(c.epi);
  Matrix kb = kernel(c.epi);
  for (std::size_t i = 1; i <= length && kb.cols() > 0; ++i) {
    Rep k = submodule(r.modules.back(), kb);
    ProjectiveCover ck = projective_cover(k);
    Matrix d = kb * ck.epi;
    r.terms.push_back(ck.projective);
    r.modules.push_back(ck.projective.module);
    r.differentials.push_back(d);
    kb = kernel(d);
  }
  verify_resolution(r, true);
  return r;
}

/// Omega^n(M): kernel of the n-th map of a minimal resolution.
inline Rep syzygy(const Rep& m, std::size_t n) {
  Rep cur = m;
  for (std::size_t i = 0; i < n; ++i) {
    if (cur.dim() == 0) return cur;
    ProjectiveCover c = projective_cover(cur);
    cur = submodule(c.projective.module, kernel(c.epi));
  }
  return cur;
}

/// A term sum a * (generator `summand` of the previous degree).
using GeneratorImage = std::vector<std::pair<std::size_t, Vector>>;

/// Resolution written down by hand: idempotents of each degree and the image
/// of every generator. aug[s] is the image of the s-th degree-0 generator.
inline Resolution explicit_resolution(const AlgebraPtr& alg, const Rep& target,
                                      const std::vector<std::vector<Vector>>& idems, const std::vector<Vector>& aug,
                                      const std::vector<std::vector<GeneratorImage>>& images, bool minimal = true) {
  Resolution r;
  r.target = target;
  std::vector<std::size_t> classes;
  const StructureTables* t = alg->tables.get();
  for (std::size_t i = 0; i < idems.size(); ++i) {
    std::vector<std::size_t> cls;
    if (t)
      for (const auto& e : idems[i]) {
        std::size_t found = t->simples.size();
        for (std::size_t c = 0; c < t->simples.size(); ++c)
          if (top_pairing(*alg, t->radical, t->simples[c].idempotent, e) > 0) found = c;
        cls.push_back(found);
      }
    r.terms.push_back(projective_from_idempotents(alg, idems[i], cls));
    r.modules.push_back(r.terms.back().module);
  }
  r.differentials.push_back(map_from_generators(r.terms[0], target, aug));
  for (std::size_t i = 1; i < idems.size(); ++i) {
    const ProjectiveModule& prev = r.terms[i - 1];
    std::vector<Vector> ims;
    for (const auto& img : images[i]) {
      Vector v(prev.module.dim(), 0);
      for (const auto& [s, a] : img) v = vadd(alg->field, v, prev.element(s, a));
      ims.push_back(v);
    }
    r.differentials.push_back(map_from_generators(r.terms[i], prev.module, ims));
  }
  verify_resolution(r, minimal);
  return r;
}

/// Degree i has i+1 generators, with idempotent e0 in even and e1 in odd
/// degrees; generator j maps to a*[j] + b*[j-1].
inline Resolution staircase_resolution(const AlgebraPtr& alg, const Rep& target, const Vector& e0, const Vector& e1,
                                       const Vector& a, const Vector& b, std::size_t length) {
  std::vector<std::vector<Vector>> idems;
  std::vector<std::vector<GeneratorImage>> images(length + 1);
  for (std::size_t i = 0; i <= length; ++i) {
    idems.emplace_back(i + 1, i % 2 == 0 ? e0 : e1);
    if (i == 0) continue;
    for (std::size_t j = 0; j <= i; ++j) {
      GeneratorImage img;
      if (j < i) img.push_back({j, a});
      if (j >= 1) img.push_back({j - 1, b});
      images[i].push_back(std::move(img));
    }
  }
  return explicit_resolution(alg, target, idems, {Vector{1}}, images);
}

/// The hand-written resolution of k over D(Lambda_2) whose degree-2 term
/// fixes the coordinates (x, y, z): generator j of P_i maps to
/// x*[j] + X*[j-1], and e_+ maps to 1.
inline Resolution canonical_resolution_k(const AlgebraPtr& D, std::size_t length = 12) {
  if (D->family != "d-taft" || D->n != 2) fail(errc::unsupported_algebra, "canonical frame exists for D(Lambda_2)");
  return staircase_resolution(D, standard_modules(D).at("k"), D->element("e+"), D->element("e-"), D->gen_vectors[0],
                              D->gen_vectors[1], length);
}

/// The same staircase with e_+ and e_- exchanged, resolving k_-.
inline Resolution canonical_resolution_k_minus(const AlgebraPtr& D, std::size_t length = 12) {
  if (D->family != "d-taft" || D->n != 2) fail(errc::unsupported_algebra, "canonical frame exists for D(Lambda_2)");
  return staircase_resolution(D, standard_modules(D).at("k-"), D->element("e-"), D->element("e+"), D->gen_vectors[0],
                              D->gen_vectors[1], length);
}

/// Over the basic algebra: generator j maps to y2*[j] + y1*[j-1], resolving
/// k+ (sign = +1) or k- (sign = -1).
inline Resolution canonical_resolution_A(const AlgebraPtr& A, int sign, std::size_t length = 12) {
  if (A->family != "basic-A") fail(errc::unsupported_algebra, "expected the basic algebra");
  auto sm = standard_modules(A);
  const Vector& ep = A->element("e+");
  const Vector& em = A->element("e-");
  return sign > 0 ? staircase_resolution(A, sm.at("k+"), ep, em, A->gen_vectors[1], A->gen_vectors[0], length)
                  : staircase_resolution(A, sm.at("k-"), em, ep, A->gen_vectors[1], A->gen_vectors[0], length);
}

/// Periodic resolution of the trivial module of H_ab by H*e_+, H*e_-, H*e_+,
/// ... with every generator mapping to t times the previous one.
inline Resolution periodic_resolution_H(const SubalgebraEmbedding& H, std::size_t length) {
  const AlgebraPtr& sub = H.sub;
  Solver s(H.embed);
  const Vector ep = s.solve_or_throw(H.parent->element("e+"));
  const Vector em = s.solve_or_throw(H.parent->element("e-"));
  const Vector t = sub->gen_vectors[sub->gen_index("t")];
  std::vector<std::vector<Vector>> idems;
  std::vector<std::vector<GeneratorImage>> images(length + 1);
  for (std::size_t i = 0; i <= length; ++i) {
    idems.push_back({i % 2 == 0 ? ep : em});
    if (i > 0) images[i].push_back({{0, t}});
  }
  return explicit_resolution(sub, sub_trivial(H), idems, {Vector{1}}, images);
}

/// The resolution with every module restricted to a subalgebra (still exact;
/// projective because the parent is free over the subalgebra).
inline Resolution restrict_resolution(const Resolution& r, const SubalgebraEmbedding& emb) {
  Resolution out;
  out.target = restrict(r.target, emb);
  for (const auto& m : r.modules) out.modules.push_back(restrict(m, emb));
  out.differentials = r.differentials;
  return out;
}

// ---------------------------------------------------------------------------
// Hom complexes

/// Hom_A(P, N) for P a sum of cyclic projectives A*e_s, coordinatized by the
/// generator images in e_s N.
class HomSpace {
 public:
  HomSpace(const ProjectiveModule& p, const Rep& n) : p_(&p), n_(n) {
    for (std::size_t s = 0; s < p.summands(); ++s) {
      Matrix b = image_basis(n.act(p.idempotent[s]));
      offset_.push_back(dim_);
      dim_ += b.cols();
      solvers_.emplace_back(b);
      bases_.push_back(std::move(b));
    }
  }

  std::size_t dim() const noexcept { return dim_; }

  /// The module map with coordinates c.
  Matrix to_map(const Vector& c) const {
    std::vector<Vector> images;
    for (std::size_t s = 0; s < bases_.size(); ++s) {
      Vector part(c.begin() + offset_[s], c.begin() + offset_[s] + bases_[s].cols());
      images.push_back(bases_[s] * part);
    }
    return map_from_generators(*p_, n_, images);
  }

  /// Coordinates of a module map P -> N.
  Vector coords(const Matrix& phi) const {
    Vector out;
    for (std::size_t s = 0; s < bases_.size(); ++s) {
      Vector part = solvers_[s].solve_or_throw(phi.column(p_->offset[s]), errc::internal);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  /// dim x dim-columns matrix whose columns are the coordinates of the maps.
  Matrix coords_matrix(const std::vector<Matrix>& maps) const {
    Matrix out(n_.field(), dim_, maps.size());
    for (std::size_t k = 0; k < maps.size(); ++k) out.set_column(k, coords(maps[k]));
    return out;
  }

 private:
  const ProjectiveModule* p_;
  Rep n_;
  std::size_t dim_ = 0;
  std::vector<std::size_t> offset_;
  std::vector<Matrix> bases_;
  std::vector<Solver> solvers_;
};

/// Matrix of phi -> phi o d from Hom(P_i, N) to Hom(P_{i+1}, N).
inline Matrix coboundary_matrix(const Resolution& r, std::size_t i, const Rep& n, const HomSpace& from,
                                const HomSpace& to) {
  Matrix out(n.field(), to.dim(), from.dim());
  for (std::size_t c = 0; c < from.dim(); ++c)
    out.set_column(c, to.coords(from.to_map(unit_vector(from.dim(), c)) * r.differentials[i + 1]));
  return out;
}

/// dim Ext^i(M, N) for i = 0..upto, by homology of Hom(P_*, N) over a
/// minimal resolution of M.
inline std::vector<std::size_t> ext_dims(const Resolution& r, const Rep& n, std::size_t upto) {
  require_same_algebra(r.target, n);
  if (!r.has_terms()) fail(errc::internal, "resolution without summand data");
  std::vector<HomSpace> homs;
  for (std::size_t i = 0; i <= upto + 1; ++i) {
    if (i < r.modules.size()) homs.emplace_back(r.terms[i], n);
  }
  std::vector<std::size_t> out;
  std::size_t prev_rank = 0;
  for (std::size_t i = 0; i <= upto; ++i) {
    if (i >= homs.size()) {
      out.push_back(0);
      continue;
    }
    std::size_t rk = 0;
    if (i + 1 < homs.size()) rk = rank(coboundary_matrix(r, i, n, homs[i], homs[i + 1]));
    out.push_back(homs[i].dim() - rk - prev_rank);
    prev_rank = rk;
  }
  return out;
}

inline std::vector<std::size_t> ext_dims(const Rep& m, const Rep& n, std::size_t upto) {
  return ext_dims(minimal_resolution(m, upto + 1), n, upto);
}

}  // namespace hopfrank
