#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hopfrank/algebra.hpp"

namespace hopfrank {

/// A finite-dimensional left module, given by one matrix per generator
/// (column convention: the action on the j-th basis vector is column j).
class Rep {
 public:
  Rep() = default;

  /// Builds without validation; use rep_from_generators for checked input.
  Rep(AlgebraPtr alg, std::size_t dim, std::vector<Matrix> gens)
      : alg_(std::move(alg)), dim_(dim), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {}

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  const Algebra& alg() const noexcept { return *alg_; }
  std::size_t dim() const noexcept { return dim_; }
  const PrimeField& field() const noexcept { return alg_->field; }
  const std::vector<Matrix>& gens() const noexcept { return gens_; }
  const Matrix& gen(std::size_t i) const { return gens_.at(i); }
  const Matrix& gen(const std::string& name) const { return gens_.at(alg_->gen_index(name)); }

  /// Action of the i-th basis element of the algebra (memoized, thread-safe).
  const Matrix& basis_action(std::size_t i) const {
    std::call_once(cache_->once, [this] { fill_cache(); });
    return cache_->basis[i];
  }

  /// Action of an arbitrary algebra element.
  Matrix act(const Vector& a) const {
    Matrix m(field(), dim_, dim_);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i]) m.add_scaled(basis_action(i), a[i]);
    return m;
  }

  Vector apply(const Vector& a, const Vector& v) const { return act(a) * v; }

  Matrix identity() const { return Matrix::identity(field(), dim_); }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Matrix> basis;
  };

  void fill_cache() const {
    const Algebra& a = *alg_;
    std::vector<Matrix> out;
    out.reserve(a.dim);
    if (a.basis_words.empty()) {
      // generators are the basis itself
      for (std::size_t i = 0; i < a.dim; ++i) out.push_back(gens_[i]);
    } else {
      for (std::size_t i = 0; i < a.dim; ++i) {
        const auto& w = a.basis_words[i];
        Matrix m = identity();
        for (std::size_t k = w.size(); k-- > 0;) m = gens_[w[k]] * m;
        out.push_back(std::move(m));
      }
    }
    cache_->basis = std::move(out);
  }

  AlgebraPtr alg_;
  std::size_t dim_ = 0;
  std::vector<Matrix> gens_;
  std::shared_ptr<Cache> cache_;
};

/// A module homomorphism; matrix is target.dim x source.dim.
struct ModHom {
  Rep source;
  Rep target;
  Matrix matrix;
};

inline bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  const bool named_family = a->family == "d-taft" || a->family == "basic-A";
  return named_family && a->family == b->family && a->n == b->n && a->field == b->field && a->dim == b->dim;
}

inline void require_same_algebra(const Rep& m, const Rep& n) {
  if (!same_algebra(m.algebra(), n.algebra())) fail(errc::algebra_mismatch, "modules over different algebras");
}

/// True if the matrix commutes with the generator actions.
inline bool is_intertwiner(const Rep& src, const Rep& dst, const Matrix& f) {
  if (f.rows() != dst.dim() || f.cols() != src.dim()) return false;
  for (std::size_t i = 0; i < src.gens().size(); ++i)
    if (!(f * src.gen(i) == dst.gen(i) * f)) return false;
  return true;
}

/// Checked construction: every defining relation must annihilate the
/// generator matrices; algebras without a presentation are checked against
/// their structure constants.
inline Rep rep_from_generators(const AlgebraPtr& alg, std::vector<Matrix> mats) {
  if (mats.size() != alg->gen_names.size())
    fail(errc::dimension_mismatch, "expected " + std::to_string(alg->gen_names.size()) + " generator matrices, got " +
                                       std::to_string(mats.size()));
  const std::size_t d = mats.empty() ? 0 : mats[0].rows();
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (mats[i].rows() != d || mats[i].cols() != d)
      fail(errc::dimension_mismatch, "generator " + alg->gen_names[i] + " has shape " + mats[i].shape());
    if (!(mats[i].field() == alg->field)) fail(errc::dimension_mismatch, "generator over a different field");
  }
  const Matrix id = Matrix::identity(alg->field, d);
  if (!alg->relations.empty()) {
    if (auto bad = violated_relation(alg->relations, mats, id)) fail(errc::relation_violated, *bad);
    return Rep(alg, d, std::move(mats));
  }
  Rep r(alg, d, std::move(mats));
  if (!(r.basis_action(0) == id)) fail(errc::relation_violated, "unit does not act as the identity");
  for (std::size_t i = 0; i < alg->dim; ++i)
    for (std::size_t j = 0; j < alg->dim; ++j) {
      Matrix rhs(alg->field, d, d);
      for (const auto& e : alg->table[i * alg->dim + j]) rhs.add_scaled(r.basis_action(e.index), e.value);
      if (!(r.basis_action(i) * r.basis_action(j) == rhs))
        fail(errc::relation_violated, "product " + alg->labels[i] + "*" + alg->labels[j]);
    }
  return r;
}

inline Rep rep_from_generators(const AlgebraPtr& alg, const std::vector<std::pair<std::string, Matrix>>& named) {
  std::vector<Matrix> mats(alg->gen_names.size());
  std::vector<bool> seen(mats.size(), false);
  for (const auto& [name, m] : named) {
    std::size_t i = alg->gen_index(name);
    mats[i] = m;
    seen[i] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) fail(errc::dimension_mismatch, "missing matrix for generator " + alg->gen_names[i]);
  return rep_from_generators(alg, std::move(mats));
}

/// Module on the span of `basis` (columns, an invariant subspace of M).
inline Rep submodule(const Rep& m, const Matrix& basis) {
  Solver s(basis);
  if (s.rank() != basis.cols()) fail(errc::dimension_mismatch, "submodule basis is not independent");
  std::vector<Matrix> gens;
  for (const auto& g : m.gens()) {
    auto c = s.solve(g * basis);
    if (!c) fail(errc::internal, "subspace is not a submodule");
    gens.push_back(std::move(*c));
  }
  return Rep(m.algebra(), basis.cols(), std::move(gens));
}

struct Quotient {
  Rep module;
  Matrix projection;  // quotient.dim x M.dim
  Matrix section;     // M.dim x quotient.dim
};

/// M / W for W spanned by the columns of `sub` (a submodule).
inline Quotient quotient(const Rep& m, const Matrix& sub) {
  QuotientSpace qs(m.field(), m.dim(), sub.columns());
  std::vector<Matrix> gens;
  for (const auto& g : m.gens()) gens.push_back(qs.projection() * g * qs.section());
  return {Rep(m.algebra(), qs.dim(), std::move(gens)), qs.projection(), qs.section()};
}

inline Rep direct_sum(const std::vector<Rep>& parts) {
  if (parts.empty()) fail(errc::dimension_mismatch, "empty direct sum");
  std::size_t d = 0;
  for (const auto& p : parts) {
    require_same_algebra(parts[0], p);
    d += p.dim();
  }
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < parts[0].gens().size(); ++i) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.gen(i));
    gens.push_back(block_diagonal(blocks, parts[0].field()));
  }
  return Rep(parts[0].algebra(), d, std::move(gens));
}

inline Rep direct_sum(const Rep& a, const Rep& b) { return direct_sum(std::vector<Rep>{a, b}); }

/// The zero module.
inline Rep zero_module(const AlgebraPtr& alg) {
  return Rep(alg, 0, std::vector<Matrix>(alg->gen_names.size(), Matrix(alg->field, 0, 0)));
}

/// Left ideal (or any left-stable subspace) of the algebra, as a module.
inline Rep left_ideal_module(const AlgebraPtr& alg, const std::vector<Vector>& basis) {
  Matrix b = Matrix::from_columns(alg->field, alg->dim, basis);
  Solver s(b);
  std::vector<Matrix> gens;
  for (const auto& g : alg->gen_vectors) {
    Matrix m(alg->field, basis.size(), basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) m.set_column(k, s.solve_or_throw(alg->mul(g, basis[k])));
    gens.push_back(std::move(m));
  }
  return Rep(alg, basis.size(), std::move(gens));
}

inline Rep regular_module(const AlgebraPtr& alg) {
  std::vector<Matrix> gens;
  for (const auto& g : alg->gen_vectors) gens.push_back(alg->left_mult(g));
  return Rep(alg, alg->dim, std::move(gens));
}

/// Smallest submodule containing the given vectors (columns of the result).
inline Matrix spin(const Rep& m, const std::vector<Vector>& seeds) {
  SubspaceBuilder sb(m.field(), m.dim());
  std::vector<Vector> queue;
  for (const auto& v : seeds)
    if (sb.add(v)) queue.push_back(v);
  while (!queue.empty()) {
    Vector v = std::move(queue.back());
    queue.pop_back();
    for (const auto& g : m.gens()) {
      Vector w = g * v;
      if (sb.add(w)) queue.push_back(std::move(w));
    }
  }
  return Matrix::from_columns(m.field(), m.dim(), sb.basis());
}

}  // namespace hopfrank
