#pragma once

#include <map>
#include <string>

#include "hopfrank/families.hpp"

namespace hopfrank {

struct HopfReport {
  bool pass = true;
  std::string failure;  // first counterexample, empty on pass
  std::size_t checks = 0;
};

namespace detail {

using SparseTensor = std::map<std::uint64_t, scalar>;

inline void accumulate(const PrimeField& f, SparseTensor& t, std::uint64_t key, scalar c) {
  if (!c) return;
  scalar& slot = t[key];
  slot = f.add(slot, c);
  if (!slot) t.erase(key);
}

}  // namespace detail

/// Coassociativity, counit, antipode on every basis element; Delta and
/// epsilon multiplicative on every pair of basis elements.
inline HopfReport verify_hopf_axioms(const Algebra& a) {
  if (!a.hopf) fail(errc::missing_hopf_data, "algebra " + a.family + " carries no Hopf data");
  const HopfData& h = *a.hopf;
  const PrimeField& f = a.field;
  const std::size_t d = a.dim;
  HopfReport rep;
  auto bad = [&](const std::string& what) {
    rep.pass = false;
    rep.failure = what;
    return rep;
  };
  std::vector<SparseVec> delta(d), anti(d);
  std::vector<Vector> dense(d);
  for (std::size_t b = 0; b < d; ++b) {
    dense[b] = h.coproduct.column(b);
    delta[b] = to_sparse(dense[b]);
    anti[b] = to_sparse(h.antipode.column(b));
  }
  if (h.coproduct.column(0) != detail::pure_tensor(a, a.unit(), a.unit())) return bad("Delta(1) != 1 (x) 1");
  if (h.counit[0] != 1) return bad("epsilon(1) != 1");

  for (std::size_t b = 0; b < d; ++b) {
    const std::string& name = a.labels[b];
    // (Delta (x) id) Delta = (id (x) Delta) Delta
    detail::SparseTensor lhs, rhs;
    for (const auto& e : delta[b]) {
      const std::size_t i = e.index / d, j = e.index % d;
      for (const auto& di : delta[i]) detail::accumulate(f, lhs, std::uint64_t{di.index} * d + j, f.mul(e.value, di.value));
      for (const auto& dj : delta[j]) detail::accumulate(f, rhs, std::uint64_t{i} * d * d + dj.index, f.mul(e.value, dj.value));
    }
    ++rep.checks;
    if (lhs != rhs) return bad("coassociativity fails on " + name);
    // (eps (x) id) Delta = id = (id (x) eps) Delta
    Vector l(d, 0), r(d, 0);
    for (const auto& e : delta[b]) {
      const std::size_t i = e.index / d, j = e.index % d;
      l[j] = f.add(l[j], f.mul(e.value, h.counit[i]));
      r[i] = f.add(r[i], f.mul(e.value, h.counit[j]));
    }
    ++rep.checks;
    if (l != a.basis(b) || r != a.basis(b)) return bad("counit law fails on " + name);
    // m (S (x) id) Delta = eps 1 = m (id (x) S) Delta
    Vector sl(d, 0), sr(d, 0);
    for (const auto& e : delta[b]) {
      const std::size_t i = e.index / d, j = e.index % d;
      for (const auto& s : anti[i])
        for (const auto& t : a.table[s.index * d + j]) sl[t.index] = f.add(sl[t.index], f.mul(e.value, f.mul(s.value, t.value)));
      for (const auto& s : anti[j])
        for (const auto& t : a.table[i * d + s.index]) sr[t.index] = f.add(sr[t.index], f.mul(e.value, f.mul(s.value, t.value)));
    }
    const Vector unit_eps = scaled(f, a.unit(), h.counit[b]);
    ++rep.checks;
    if (sl != unit_eps || sr != unit_eps) return bad("antipode law fails on " + name);
  }

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const std::string pair = a.labels[i] + "*" + a.labels[j];
      scalar eps = 0;
      Vector dprod(d * d, 0);
      for (const auto& e : a.table[i * d + j]) {
        eps = f.add(eps, f.mul(e.value, h.counit[e.index]));
        for (const auto& t : delta[e.index]) dprod[t.index] = f.add(dprod[t.index], f.mul(e.value, t.value));
      }
      ++rep.checks;
      if (eps != f.mul(h.counit[i], h.counit[j])) return bad("counit not multiplicative on " + pair);
      ++rep.checks;
      if (dprod != detail::tensor_mul(a, dense[i], dense[j]))
        return bad("coproduct not multiplicative on " + pair);
    }
  return rep;
}

}  // namespace hopfrank
