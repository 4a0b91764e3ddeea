#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hopfrank/families.hpp"
#include "hopfrank/rep.hpp"
#include "hopfrank/structure.hpp"

namespace hopfrank {

// ---------------------------------------------------------------------------
// Named modules

/// One-dimensional module on which the generators act by the given scalars.
inline Rep one_dimensional(const AlgebraPtr& alg, const std::vector<scalar>& values) {
  std::vector<Matrix> gens;
  for (auto v : values) {
    Matrix m(alg->field, 1, 1);
    m(0, 0) = v;
    gens.push_back(m);
  }
  return rep_from_generators(alg, std::move(gens));
}

/// The PIM A*e_i of the i-th simple.
inline Rep pim(const AlgebraPtr& alg, std::size_t i) {
  const auto& t = alg->require_tables();
  return left_ideal_module(alg, t.pim_basis.at(i));
}

/// The i-th simple, as the top of its PIM.
inline Rep simple_module(const AlgebraPtr& alg, std::size_t i) {
  const auto& t = alg->require_tables();
  Rep p = pim(alg, i);
  std::vector<Vector> rad;
  Matrix b = Matrix::from_columns(alg->field, alg->dim, t.pim_basis[i]);
  Solver s(b);
  SubspaceBuilder sb(alg->field, p.dim());
  for (const auto& j : t.radical)
    for (const auto& v : t.pim_basis[i]) sb.add(s.solve_or_throw(alg->mul(j, v)));
  return quotient(p, sb.basis_matrix()).module;
}

inline std::size_t simple_index(const Algebra& alg, const std::string& name) {
  const auto& t = alg.require_tables();
  for (std::size_t i = 0; i < t.simples.size(); ++i)
    if (t.simples[i].name == name) return i;
  fail(errc::unknown_symbol, "no simple named " + name);
}

/// k, k-, P+, P- (and for D(Lambda_2) the simple projectives S+, S- of the
/// semisimple block).
inline std::map<std::string, Rep> standard_modules(const AlgebraPtr& alg) {
  const PrimeField& f = alg->field;
  const scalar m1 = f.neg(1);
  std::map<std::string, Rep> out;
  if (alg->family == "d-taft" && alg->n == 2) {
    out["k"] = one_dimensional(alg, {0, 0, 1, 1});
    out["k-"] = one_dimensional(alg, {0, 0, m1, m1});
    out["P+"] = pim(alg, simple_index(*alg, "k"));
    out["P-"] = pim(alg, simple_index(*alg, "k-"));
    out["S+"] = pim(alg, simple_index(*alg, "S+"));
    out["S-"] = pim(alg, simple_index(*alg, "S-"));
  } else if (alg->family == "basic-A") {
    out["k+"] = one_dimensional(alg, {0, 0, 1});
    out["k-"] = one_dimensional(alg, {0, 0, m1});
    out["P+"] = pim(alg, simple_index(*alg, "k+"));
    out["P-"] = pim(alg, simple_index(*alg, "k-"));
  } else {
    fail(errc::unsupported_algebra, "standard modules exist for D(Lambda_2) and A only");
  }
  return out;
}

inline Rep trivial_module(const AlgebraPtr& alg) {
  if (!alg->hopf) fail(errc::missing_hopf_data, "trivial module needs a counit");
  std::vector<scalar> vals;
  for (const auto& g : alg->gen_vectors) {
    scalar s = 0;
    for (std::size_t i = 0; i < alg->dim; ++i) s = alg->field.add(s, alg->field.mul(g[i], alg->hopf->counit[i]));
    vals.push_back(s);
  }
  return one_dimensional(alg, vals);
}

// ---------------------------------------------------------------------------
// Change of algebra

inline Rep restrict(const Rep& m, const SubalgebraEmbedding& emb) {
  if (!same_algebra(m.algebra(), emb.parent)) fail(errc::algebra_mismatch, "module is not over the parent algebra");
  std::vector<Matrix> gens;
  for (const auto& g : emb.sub->gen_vectors) gens.push_back(m.act(emb.image(g)));
  return Rep(emb.sub, m.dim(), std::move(gens));
}

/// Action of Delta(a) on M (x) N, M-index major.
inline Matrix tensor_action(const Rep& m, const Rep& n, const Vector& a) {
  const Algebra& alg = m.alg();
  const Vector delta = alg.hopf->coproduct * a;
  const std::size_t d = alg.dim;
  Matrix out(m.field(), m.dim() * n.dim(), m.dim() * n.dim());
  for (std::size_t idx = 0; idx < delta.size(); ++idx)
    if (delta[idx]) out.add_scaled(kron(m.basis_action(idx / d), n.basis_action(idx % d)), delta[idx]);
  return out;
}

inline Rep tensor(const Rep& m, const Rep& n) {
  require_same_algebra(m, n);
  if (!m.alg().hopf) fail(errc::missing_hopf_data, "tensor product needs a coproduct");
  std::vector<Matrix> gens;
  for (const auto& g : m.alg().gen_vectors) gens.push_back(tensor_action(m, n, g));
  return Rep(m.algebra(), m.dim() * n.dim(), std::move(gens));
}

/// Parent (x)_sub N, with the quotient data kept so that elements can be
/// written down as classes of lambda (x) v.
struct Induced {
  Rep module;
  Matrix projection;  // dim x (parent.dim * N.dim)
  Matrix section;
  std::size_t n_dim = 0;

  /// Class of b_i (x) v.
  Vector class_of(std::size_t i, const Vector& v) const {
    Vector out(module.dim(), 0);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j]) axpy(module.field(), out, v[j], projection.column(i * n_dim + j));
    return out;
  }
};

inline Induced induce_with_data(const SubalgebraEmbedding& emb, const Rep& n) {
  if (!same_algebra(n.algebra(), emb.sub)) fail(errc::algebra_mismatch, "module is not over the subalgebra");
  const Algebra& P = *emb.parent;
  const PrimeField& f = P.field;
  const std::size_t d = P.dim, nd = n.dim(), total = d * nd;
  std::vector<Vector> rels;
  for (std::size_t s = 0; s < emb.sub->gen_vectors.size(); ++s) {
    const Vector gamma = emb.image(emb.sub->gen_vectors[s]);
    const Matrix& act = n.gen(s);
    for (std::size_t i = 0; i < d; ++i) {
      const Vector lg = P.mul(P.basis(i), gamma);
      for (std::size_t v = 0; v < nd; ++v) {
        Vector r(total, 0);
        for (std::size_t j = 0; j < d; ++j)
          if (lg[j]) r[j * nd + v] = f.add(r[j * nd + v], lg[j]);
        for (std::size_t w = 0; w < nd; ++w)
          if (act(w, v)) r[i * nd + w] = f.sub(r[i * nd + w], act(w, v));
        rels.push_back(std::move(r));
      }
    }
  }
  QuotientSpace qs(f, total, rels);
  const Matrix idn = Matrix::identity(f, nd);
  std::vector<Matrix> gens;
  for (const auto& g : P.gen_vectors) gens.push_back(qs.projection() * kron(P.left_mult(g), idn) * qs.section());
  return {Rep(emb.parent, qs.dim(), std::move(gens)), qs.projection(), qs.section(), nd};
}

inline Rep induce(const SubalgebraEmbedding& emb, const Rep& n) { return induce_with_data(emb, n).module; }

/// Trivial module of a subalgebra that inherits a counit from its parent.
inline Rep sub_trivial(const SubalgebraEmbedding& emb) {
  if (!emb.parent->hopf) fail(errc::missing_hopf_data, "parent has no counit");
  std::vector<scalar> vals;
  for (const auto& g : emb.sub->gen_vectors) {
    Vector v = emb.image(g);
    scalar s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s = emb.parent->field.add(s, emb.parent->field.mul(v[i], emb.parent->hopf->counit[i]));
    vals.push_back(s);
  }
  return one_dimensional(emb.sub, vals);
}

// ---------------------------------------------------------------------------
// Homomorphisms

/// Basis of Hom_A(M, N), from the intertwining equations on generators.
inline std::vector<Matrix> hom_basis(const Rep& m, const Rep& n) {
  require_same_algebra(m, n);
  const PrimeField& f = m.field();
  const std::size_t dm = m.dim(), dn = n.dim(), unknowns = dm * dn;
  if (unknowns == 0) return {};
  // Unknown F (dn x dm), row-major index r * dm + c. Equation F*A - B*F = 0.
  // Equations are added one generator at a time, keeping only the kernel.
  Matrix basis = Matrix::identity(f, unknowns);  // columns span the current solution space
  for (std::size_t g = 0; g < m.gens().size() && basis.cols() > 0; ++g) {
    const Matrix& A = m.gen(g);
    const Matrix& B = n.gen(g);
    Matrix eq(f, unknowns, basis.cols());
    for (std::size_t k = 0; k < basis.cols(); ++k) {
      Matrix F(f, dn, dm);
      for (std::size_t r = 0; r < dn; ++r)
        for (std::size_t c = 0; c < dm; ++c) F(r, c) = basis(r * dm + c, k);
      Matrix E = F * A - B * F;
      for (std::size_t r = 0; r < dn; ++r)
        for (std::size_t c = 0; c < dm; ++c) eq(r * dm + c, k) = E(r, c);
    }
    basis = basis * kernel(eq);
  }
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < basis.cols(); ++k) {
    Matrix F(f, dn, dm);
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dm; ++c) F(r, c) = basis(r * dm + c, k);
    out.push_back(std::move(F));
  }
  return out;
}

enum class IsoAnswer { yes, no, inconclusive };

struct IsoResult {
  IsoAnswer answer;
  std::optional<Matrix> witness;  // N.dim x M.dim, when yes
};

/// Randomized search for an invertible intertwiner among at most 32 seeded
/// combinations of a hom basis. Never answers yes or no wrongly.
inline IsoResult is_isomorphic(const Rep& m, const Rep& n, std::uint64_t seed = 0) {
  require_same_algebra(m, n);
  if (m.dim() != n.dim()) return {IsoAnswer::no, std::nullopt};
  if (m.dim() == 0) return {IsoAnswer::yes, Matrix(m.field(), 0, 0)};
  auto hmn = hom_basis(m, n);
  if (hmn.empty()) return {IsoAnswer::no, std::nullopt};
  if (hom_basis(m, m).size() != hmn.size() || hom_basis(n, n).size() != hmn.size()) return {IsoAnswer::no, std::nullopt};
  std::mt19937_64 rng(seed);
  const PrimeField& f = m.field();
  for (int attempt = 0; attempt < 32; ++attempt) {
    Matrix c(f, n.dim(), m.dim());
    for (const auto& h : hmn) c.add_scaled(h, static_cast<scalar>(rng() % f.p()));
    if (rank(c) == m.dim()) return {IsoAnswer::yes, c};
  }
  return {IsoAnswer::inconclusive, std::nullopt};
}

/// The map (M|_sub) induced -> M (x) (k_sub induced),
/// lambda (x) m -> sum lambda_(1) m (x) (lambda_(2) (x) 1), verified to be an
/// invertible intertwiner. This side of the isomorphism is the one that is
/// well defined when Delta(sub) lies in parent (x) sub, which holds for H_ab.
inline ModHom reciprocity_witness(const Rep& m, const SubalgebraEmbedding& emb) {
  const Algebra& P = *emb.parent;
  if (!P.hopf) fail(errc::missing_hopf_data, "reciprocity needs a coproduct");
  Induced src = induce_with_data(emb, restrict(m, emb));
  Induced kind = induce_with_data(emb, sub_trivial(emb));
  Rep dst = tensor(m, kind.module);
  const PrimeField& f = P.field;
  const std::size_t d = P.dim, md = m.dim(), kd = kind.module.dim();
  Matrix w(f, dst.dim(), src.module.dim());
  const Vector one{1};
  for (std::size_t col = 0; col < src.module.dim(); ++col) {
    // representative: sum over (i, v) of section entries, b_i (x) e_v
    const Vector rep = src.section.column(col);
    Vector img(dst.dim(), 0);
    for (std::size_t idx = 0; idx < rep.size(); ++idx) {
      if (!rep[idx]) continue;
      const std::size_t i = idx / md, v = idx % md;
      const Vector delta = P.hopf->coproduct.column(i);
      for (std::size_t t = 0; t < delta.size(); ++t) {
        if (!delta[t]) continue;
        const Vector left = m.basis_action(t / d).column(v);
        const Vector right = kind.class_of(t % d, one);
        const scalar c = f.mul(rep[idx], delta[t]);
        for (std::size_t a = 0; a < md; ++a)
          if (left[a])
            for (std::size_t b = 0; b < kd; ++b)
              if (right[b]) img[a * kd + b] = f.add(img[a * kd + b], f.mul(c, f.mul(left[a], right[b])));
      }
    }
    w.set_column(col, img);
  }
  if (w.rows() != w.cols() || rank(w) != w.cols() || !is_intertwiner(src.module, dst, w))
    fail(errc::witness_not_bijective, "reciprocity map is not an invertible intertwiner");
  return {src.module, dst, w};
}

// ---------------------------------------------------------------------------
// Radical layers, tops, covers

/// Basis (columns) of rad(M) = J*M.
inline Matrix radical_of_module(const Rep& m) {
  const auto& t = m.alg().require_tables();
  SubspaceBuilder sb(m.field(), m.dim());
  for (const auto& j : t.radical) {
    Matrix a = m.act(j);
    for (std::size_t c = 0; c < m.dim(); ++c) sb.add(a.column(c));
    if (sb.dim() == m.dim()) break;
  }
  return sb.basis_matrix();
}

struct TopData {
  std::vector<std::size_t> multiplicity;   // per simple
  std::vector<std::vector<Vector>> generators;  // per simple: vectors of e_i M spanning a complement of e_i rad M
};

inline TopData top_data(const Rep& m) {
  const auto& t = m.alg().require_tables();
  Matrix rad = radical_of_module(m);
  TopData out;
  for (const auto& s : t.simples) {
    Matrix e = m.act(s.idempotent);
    SubspaceBuilder sb(m.field(), m.dim());
    Matrix erad = e * rad;
    for (std::size_t c = 0; c < erad.cols(); ++c) sb.add(erad.column(c));
    std::vector<Vector> gens;
    for (std::size_t c = 0; c < m.dim(); ++c) {
      Vector v = e.column(c);
      if (sb.add(v)) gens.push_back(std::move(v));
    }
    out.multiplicity.push_back(gens.size());
    out.generators.push_back(std::move(gens));
  }
  return out;
}

/// Multiplicity of each simple (in table order) in M / rad M.
inline std::vector<std::size_t> top_multiplicities(const Rep& m) { return top_data(m).multiplicity; }

/// Socle multiplicities: for primitive e_i, dim of e_i soc(M) where soc(M)
/// is the annihilator of J.
inline std::vector<std::size_t> socle_multiplicities(const Rep& m) {
  const auto& t = m.alg().require_tables();
  std::vector<Matrix> blocks;
  for (const auto& j : t.radical) blocks.push_back(m.act(j));
  Matrix soc = blocks.empty() ? m.identity() : kernel(vstack(blocks, m.field(), m.dim()));
  std::vector<std::size_t> out;
  for (const auto& s : t.simples) out.push_back(rank(m.act(s.idempotent) * soc));
  return out;
}

/// A direct sum of cyclic projectives A*e_s, with the bookkeeping to
/// describe homs out of it by the images of its summand generators.
struct ProjectiveModule {
  Rep module;
  std::vector<Vector> idempotent;             // e_s, an algebra vector
  std::vector<std::vector<Vector>> basis;     // per summand: b_k*e_s, entry 0 is e_s
  std::vector<std::size_t> summand_class;     // simple index when built from tables
  std::vector<std::size_t> offset;            // first coordinate of each summand

  std::size_t summands() const noexcept { return idempotent.size(); }

  /// Coordinates of the generator e_s of summand s.
  Vector generator(std::size_t s) const { return unit_vector(module.dim(), offset[s]); }

  /// Coordinates of a*e_s in summand s.
  Vector element(std::size_t s, const Vector& a) const { return module.apply(a, generator(s)); }
};

/// Sum of A*e over the given idempotents.
inline ProjectiveModule projective_from_idempotents(const AlgebraPtr& alg, const std::vector<Vector>& idems,
                                                    std::vector<std::size_t> classes = {}) {
  ProjectiveModule p;
  std::vector<Rep> parts;
  std::size_t off = 0;
  for (const auto& e : idems) {
    auto basis = left_ideal_basis(*alg, e);
    parts.push_back(left_ideal_module(alg, basis));
    p.idempotent.push_back(e);
    p.basis.push_back(std::move(basis));
    p.offset.push_back(off);
    off += parts.back().dim();
  }
  p.summand_class = std::move(classes);
  p.module = parts.empty() ? zero_module(alg) : direct_sum(parts);
  return p;
}

inline ProjectiveModule projective_module(const AlgebraPtr& alg, const std::vector<std::size_t>& classes) {
  const auto& t = alg->require_tables();
  std::vector<Vector> idems;
  for (auto c : classes) idems.push_back(t.simples.at(c).idempotent);
  return projective_from_idempotents(alg, idems, classes);
}

/// Module map P -> N sending the generator of summand s to images[s]
/// (images[s] must lie in e_s N).
inline Matrix map_from_generators(const ProjectiveModule& p, const Rep& n, const std::vector<Vector>& images) {
  Matrix out(n.field(), n.dim(), p.module.dim());
  for (std::size_t s = 0; s < p.summands(); ++s) {
    const auto& basis = p.basis[s];
    for (std::size_t k = 0; k < basis.size(); ++k) out.set_column(p.offset[s] + k, n.apply(basis[k], images[s]));
  }
  return out;
}

struct ProjectiveCover {
  ProjectiveModule projective;
  Matrix epi;  // M.dim x P.dim
};

/// P = sum of PIM(S)^(top multiplicity), with a surjection whose kernel
/// lies in rad P.
inline ProjectiveCover projective_cover(const Rep& m) {
  TopData top = top_data(m);
  std::vector<std::size_t> classes;
  std::vector<Vector> images;
  for (std::size_t i = 0; i < top.multiplicity.size(); ++i)
    for (const auto& v : top.generators[i]) {
      classes.push_back(i);
      images.push_back(v);
    }
  ProjectiveCover c{projective_module(m.algebra(), classes), Matrix()};
  c.epi = map_from_generators(c.projective, m, images);
  if (rank(c.epi) != m.dim()) fail(errc::internal, "projective cover map is not surjective");
  return c;
}

/// Projective iff the cover is an isomorphism: the surjection P -> M then
/// splits, its inverse being a module map.
inline bool is_projective(const Rep& m) {
  if (m.dim() == 0) return true;
  TopData top = top_data(m);
  const auto& t = m.alg().require_tables();
  std::size_t pd = 0;
  for (std::size_t i = 0; i < top.multiplicity.size(); ++i) pd += top.multiplicity[i] * t.simples[i].pim_dim;
  if (pd != m.dim()) return false;
  ProjectiveCover c = projective_cover(m);
  auto inv = inverse(c.epi);
  return inv && is_intertwiner(m, c.projective.module, *inv);
}

// ---------------------------------------------------------------------------
// Blocks and corners

/// eM as a module over the corner algebra eAe (see corner_algebra).
inline Rep block_component(const Rep& m, const SubalgebraEmbedding& corner) {
  if (!same_algebra(m.algebra(), corner.parent)) fail(errc::algebra_mismatch, "module is not over the parent");
  const Vector e = corner.image(corner.sub->unit());
  Matrix ea = m.act(e);
  if (!(ea * ea == ea)) fail(errc::not_idempotent, "corner unit does not act idempotently");
  Matrix basis = image_basis(ea);
  Solver s(basis);
  std::vector<Matrix> gens;
  for (const auto& g : corner.sub->gen_vectors) {
    Matrix a = m.act(corner.image(g)) * basis;
    gens.push_back(s.solve(a).value());
  }
  return Rep(corner.sub, basis.cols(), std::move(gens));
}

inline Rep block_component(const Rep& m, const Vector& e) {
  if (!m.alg().is_idempotent(e)) fail(errc::not_idempotent, "element is not idempotent");
  return block_component(m, corner_algebra(m.algebra(), e));
}

/// cM as a module over A itself, for a central idempotent c.
inline Rep block_submodule(const Rep& m, const Vector& c) {
  if (!m.alg().is_idempotent(c)) fail(errc::not_idempotent, "element is not idempotent");
  return submodule(m, image_basis(m.act(c)));
}

// ---------------------------------------------------------------------------
// Random modules

/// Quotient of A^r by the submodule spun from s seeded random vectors. Each
/// vector is dense or supported on a few coordinates of one summand, so that
/// both large and small submodules occur. A zero quotient is re-seeded.
inline Rep random_module(const AlgebraPtr& alg, std::size_t r, std::size_t s, std::uint64_t seed) {
  if (r == 0) fail(errc::dimension_mismatch, "r must be at least 1");
  const PrimeField& f = alg->field;
  std::vector<Matrix> gens;
  for (const auto& g : alg->gen_vectors) {
    Matrix l = alg->left_mult(g);
    gens.push_back(block_diagonal(std::vector<Matrix>(r, l), f));
  }
  Rep free(alg, alg->dim * r, std::move(gens));
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + attempt);
    std::vector<Vector> seeds;
    for (std::size_t k = 0; k < s; ++k) {
      Vector v(free.dim(), 0);
      if (rng() % 2 == 0) {
        for (auto& x : v) x = static_cast<scalar>(rng() % f.p());
      } else {
        const std::size_t block = rng() % r, nz = 1 + rng() % 3;
        for (std::size_t t = 0; t < nz; ++t) v[block * alg->dim + rng() % alg->dim] = 1 + rng() % (f.p() - 1);
      }
      seeds.push_back(std::move(v));
    }
    Matrix sub = spin(free, seeds);
    if (sub.cols() < free.dim()) return quotient(free, sub).module;
  }
}

}  // namespace hopfrank
