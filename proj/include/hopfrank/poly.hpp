#pragma once

#include <utility>
#include <vector>

#include "hopfrank/field.hpp"

namespace hopfrank {

/// Univariate polynomial over F_p, coefficients in ascending degree.
/// Always trimmed: no trailing zeros, the zero polynomial is empty.
using Poly = std::vector<scalar>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Poly poly_add(const PrimeField& f, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.add(a[i], b[i]);
  trim(a);
  return a;
}

inline Poly poly_sub(const PrimeField& f, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(a);
  return a;
}

inline Poly poly_mul(const PrimeField& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  trim(c);
  return c;
}

/// Quotient and remainder of a by a nonzero b.
inline std::pair<Poly, Poly> poly_divmod(const PrimeField& f, Poly a, const Poly& b) {
  if (b.empty()) fail(errc::internal, "polynomial division by zero");
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1, 0);
  const scalar lead_inv = f.inv(b.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    scalar c = f.mul(a[k + b.size() - 1], lead_inv);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = f.sub(a[k + j], f.mul(c, b[j]));
  }
  trim(a);
  trim(q);
  return {q, a};
}

/// Returns (g, s, t) with s a + t b = g, g monic.
struct ExtGcd {
  Poly g, s, t;
};

inline ExtGcd poly_ext_gcd(const PrimeField& f, const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(f, r0, r1);
    Poly s2 = poly_sub(f, s0, poly_mul(f, q, s1));
    Poly t2 = poly_sub(f, t0, poly_mul(f, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (!r0.empty()) {
    scalar c = f.inv(r0.back());
    for (auto* p : {&r0, &s0, &t0})
      for (auto& v : *p) v = f.mul(v, c);
  }
  return {r0, s0, t0};
}

inline scalar poly_eval(const PrimeField& f, const Poly& a, scalar x) {
  scalar r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = f.add(f.mul(r, x), a[i]);
  return r;
}

}  // namespace hopfrank
