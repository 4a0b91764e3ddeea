#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfrank/matrix.hpp"

namespace hopfrank {

/// c * (product of generators along word); the empty word is the unit.
struct Term {
  scalar coeff;
  std::vector<std::size_t> word;
};

/// A named defining relation, a noncommutative polynomial in the generators.
struct Relation {
  std::string name;
  std::vector<Term> terms;
};

struct SparseEntry {
  std::uint32_t index;
  scalar value;
};
using SparseVec = std::vector<SparseEntry>;

inline SparseVec to_sparse(const Vector& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) s.push_back({static_cast<std::uint32_t>(i), v[i]});
  return s;
}

/// Coproduct, counit and antipode as basis-indexed tables.
struct HopfData {
  Matrix coproduct;  // dim^2 x dim; column b is Delta(b_b), row i*dim + j is b_i (x) b_j
  Vector counit;
  Matrix antipode;   // dim x dim; column b is S(b_b)
};

struct SimpleInfo {
  std::string name;
  Vector idempotent;  // primitive; the PIM is A * idempotent
  std::size_t dim = 0;
  std::size_t pim_dim = 0;
  std::size_t block = 0;  // index into central_idempotents
};

/// Algebra-level structure data. Modules (PIMs, simples) are built from it
/// on demand by the representation layer.
struct StructureTables {
  std::vector<Vector> radical;
  std::vector<Vector> central_idempotents;
  std::vector<SimpleInfo> simples;
  /// Per simple: basis of A*e as algebra vectors b_j*e; entry 0 is e itself.
  std::vector<std::vector<Vector>> pim_basis;
};

/// A finite-dimensional associative algebra given by structure constants.
/// Basis index 0 is always the unit. Built once, then shared read-only.
struct Algebra {
  PrimeField field;
  std::size_t dim = 0;
  std::vector<std::string> labels;

  /// left[i] is the matrix of v -> b_i * v.
  std::vector<Matrix> left;
  /// table[i * dim + j] = b_i * b_j, sparse.
  std::vector<SparseVec> table;

  std::vector<std::string> gen_names;
  std::vector<Vector> gen_vectors;
  /// b_i equals the product of the generators along basis_words[i].
  std::vector<std::vector<std::size_t>> basis_words;
  /// Empty for algebras given only by a table; modules over those are
  /// checked against the table instead.
  std::vector<Relation> relations;

  std::optional<HopfData> hopf;
  std::string family = "generic";
  unsigned n = 0;
  scalar q = 0;
  std::shared_ptr<const StructureTables> tables;
  std::map<std::string, Vector> named;
  /// Candidate (y1, y2, g) triples tried first when identifying with A.
  std::vector<std::vector<Vector>> hints;

  Vector unit() const { return unit_vector(dim, 0); }
  Vector basis(std::size_t i) const { return unit_vector(dim, i); }

  Vector mul(const Vector& a, const Vector& b) const {
    Vector out(dim, 0);
    std::vector<std::uint64_t> acc(dim, 0);
    const std::uint32_t p = field.p();
    for (std::size_t i = 0; i < dim; ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (!b[j]) continue;
        const std::uint64_t c = std::uint64_t{a[i]} * b[j] % p;
        for (const auto& e : table[i * dim + j]) acc[e.index] = (acc[e.index] + c * e.value) % p;
      }
    }
    for (std::size_t k = 0; k < dim; ++k) out[k] = static_cast<scalar>(acc[k]);
    return out;
  }

  Vector power(const Vector& a, std::size_t k) const {
    Vector r = unit();
    for (std::size_t i = 0; i < k; ++i) r = mul(a, r);
    return r;
  }

  Matrix left_mult(const Vector& a) const {
    Matrix m(field, dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      if (a[i]) m.add_scaled(left[i], a[i]);
    return m;
  }

  /// Matrix of v -> v * a.
  Matrix right_mult(const Vector& a) const {
    Matrix m(field, dim, dim);
    for (std::size_t j = 0; j < dim; ++j) m.set_column(j, mul(basis(j), a));
    return m;
  }

  std::size_t gen_index(const std::string& name) const {
    for (std::size_t i = 0; i < gen_names.size(); ++i)
      if (gen_names[i] == name) return i;
    fail(errc::unknown_symbol, "no generator named '" + name + "'");
  }

  const Vector& element(const std::string& name) const {
    auto it = named.find(name);
    if (it == named.end()) fail(errc::unknown_symbol, "no distinguished element '" + name + "'");
    return it->second;
  }

  const StructureTables& require_tables() const {
    if (!tables) fail(errc::missing_tables, "algebra " + family + " has no structure tables");
    return *tables;
  }

  bool is_idempotent(const Vector& e) const { return mul(e, e) == e; }
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Fills `table` from `left`.
inline void fill_table(Algebra& a) {
  a.table.assign(a.dim * a.dim, {});
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) a.table[i * a.dim + j] = to_sparse(a.left[i].column(j));
}

/// Product of matrices along a word; `unit` for the empty word.
inline Matrix word_product(const std::vector<Matrix>& gens, const std::vector<std::size_t>& word, const Matrix& unit) {
  Matrix r = unit;
  for (std::size_t k = word.size(); k-- > 0;) r = gens[word[k]] * r;
  return r;
}

/// First relation violated by the given generator matrices, if any.
inline std::optional<std::string> violated_relation(const std::vector<Relation>& rels, const std::vector<Matrix>& gens,
                                                    const Matrix& unit) {
  for (const auto& rel : rels) {
    Matrix acc(unit.field(), unit.rows(), unit.cols());
    for (const auto& t : rel.terms) acc.add_scaled(word_product(gens, t.word, unit), t.coeff);
    if (!acc.is_zero()) return rel.name;
  }
  return std::nullopt;
}

/// Builds an algebra from the left-regular action of its generators on a
/// candidate basis. basis_words[0] must be empty (the unit). Verifies the
/// relations on the regular action and that the words act on the unit as the
/// coordinate basis, which pins the dimension.
inline Algebra algebra_from_regular_action(PrimeField f, std::vector<std::string> labels,
                                           std::vector<std::string> gen_names, const std::vector<Matrix>& gen_mats,
                                           std::vector<std::vector<std::size_t>> basis_words,
                                           std::vector<Relation> relations) {
  Algebra a;
  a.field = f;
  a.dim = labels.size();
  const Matrix id = Matrix::identity(f, a.dim);
  if (auto bad = violated_relation(relations, gen_mats, id))
    fail(errc::relation_check_failed, "regular action violates relation " + *bad);
  a.left.reserve(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    Matrix m = word_product(gen_mats, basis_words[i], id);
    if (m.column(0) != a.basis(i))
      fail(errc::relation_check_failed, "basis word for " + labels[i] + " does not act as a basis element");
    a.left.push_back(std::move(m));
  }
  a.labels = std::move(labels);
  a.gen_names = std::move(gen_names);
  for (const auto& g : gen_mats) a.gen_vectors.push_back(g.column(0));
  a.basis_words = std::move(basis_words);
  a.relations = std::move(relations);
  fill_table(a);
  return a;
}

/// Algebra on the span of `basis` (parent vectors, basis[0] = parent unit),
/// closed under multiplication. Structure constants are obtained by solving
/// in the span; throws RelationCheckFailed when the span is not closed.
inline Algebra algebra_on_span(const Algebra& parent, const std::vector<Vector>& basis) {
  const PrimeField& f = parent.field;
  Matrix emb = Matrix::from_columns(f, parent.dim, basis);
  Solver solver(emb);
  if (solver.rank() != basis.size()) fail(errc::relation_check_failed, "spanning set is not independent");
  Algebra a;
  a.field = f;
  a.dim = basis.size();
  a.left.assign(a.dim, Matrix(f, a.dim, a.dim));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      auto c = solver.solve(parent.mul(basis[i], basis[j]));
      if (!c) fail(errc::relation_check_failed, "span is not closed under multiplication");
      a.left[i].set_column(j, *c);
    }
  fill_table(a);
  return a;
}

/// Inclusion of a subalgebra; columns of `embed` are the images of the
/// subalgebra's basis in the parent.
struct SubalgebraEmbedding {
  AlgebraPtr sub;
  AlgebraPtr parent;
  Matrix embed;

  Vector image(const Vector& v) const { return embed * v; }
};

/// Evaluates a noncommutative polynomial on algebra elements.
inline Vector evaluate(const Algebra& a, const std::vector<Term>& terms, const std::vector<Vector>& gens) {
  Vector acc(a.dim, 0);
  for (const auto& t : terms) {
    Vector w = a.unit();
    for (std::size_t k = t.word.size(); k-- > 0;) w = a.mul(gens[t.word[k]], w);
    axpy(a.field, acc, t.coeff, w);
  }
  return acc;
}

/// Expansion of a word in the generators in the basis of the algebra. For
/// the PBW families this is the rewriting normal form.
inline Vector normal_form(const std::vector<std::string>& word, const Algebra& a) {
  Vector v = a.unit();
  for (std::size_t k = word.size(); k-- > 0;) v = a.mul(a.gen_vectors[a.gen_index(word[k])], v);
  return v;
}

inline bool is_associative(const Algebra& a) {
  const PrimeField& f = a.field;
  const std::size_t d = a.dim;
  Vector lhs(d), rhs(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (const auto& e : a.table[i * d + j])
          for (const auto& t : a.table[e.index * d + k]) lhs[t.index] = f.add(lhs[t.index], f.mul(e.value, t.value));
        for (const auto& e : a.table[j * d + k])
          for (const auto& t : a.table[i * d + e.index]) rhs[t.index] = f.add(rhs[t.index], f.mul(e.value, t.value));
        if (lhs != rhs) return false;
      }
  return true;
}

inline bool unit_is_two_sided(const Algebra& a) {
  for (std::size_t i = 0; i < a.dim; ++i) {
    const Vector bi = a.basis(i);
    if (a.mul(a.unit(), bi) != bi || a.mul(bi, a.unit()) != bi) return false;
  }
  return true;
}

/// Human-readable expansion, e.g. "1 + 16*xX + gG".
inline std::string format_element(const Algebra& a, const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (!v[i]) continue;
    if (!s.empty()) s += " + ";
    if (v[i] != 1) s += std::to_string(v[i]) + "*";
    s += a.labels[i];
  }
  return s.empty() ? "0" : s;
}

}  // namespace hopfrank
