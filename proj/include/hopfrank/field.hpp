#pragma once

#include <cstdint>
#include <string>

#include "hopfrank/error.hpp"

namespace hopfrank {

/// Field elements are canonical residues in [0, p).
using scalar = std::uint32_t;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// The prime field F_p. Cheap to copy; all operations are pure.
///
/// The modulus is capped at 2^16 so that a product of two residues fits in
/// 32 bits, which the elimination kernels rely on.
class PrimeField {
 public:
  PrimeField() = default;

  /// Checked constructor: p prime, p does not divide n, p = 1 (mod n).
  static PrimeField make(std::uint64_t p, std::uint64_t n = 1) {
    if (!is_prime(p)) fail(errc::not_prime, std::to_string(p) + " is not prime");
    if (p >= (1u << 16)) fail(errc::not_prime, "modulus " + std::to_string(p) + " exceeds 2^16");
    if (n == 0) fail(errc::no_root_of_unity, "root of unity order must be positive");
    if (n % p == 0 || (p - 1) % n != 0)
      fail(errc::no_root_of_unity,
           "F_" + std::to_string(p) + " has no primitive " + std::to_string(n) + "-th root of unity");
    return PrimeField(static_cast<std::uint32_t>(p));
  }

  std::uint32_t p() const noexcept { return p_; }

  scalar add(scalar a, scalar b) const noexcept {
    scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  scalar sub(scalar a, scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  scalar neg(scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  scalar mul(scalar a, scalar b) const noexcept { return static_cast<scalar>((std::uint64_t{a} * b) % p_); }

  scalar pow(scalar a, std::uint64_t e) const noexcept {
    std::uint64_t r = 1 % p_, b = a % p_;
    while (e) {
      if (e & 1) r = (r * b) % p_;
      b = (b * b) % p_;
      e >>= 1;
    }
    return static_cast<scalar>(r);
  }

  scalar inv(scalar a) const {
    if (a % p_ == 0) fail(errc::internal, "inverse of zero in F_" + std::to_string(p_));
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a % p_;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<scalar>(t);
  }

  scalar div(scalar a, scalar b) const { return mul(a, inv(b)); }

  /// Canonical residue of an arbitrary integer.
  scalar from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<scalar>(r);
  }

  /// Representative in (-p/2, p/2], handy for printing.
  std::int64_t to_signed(scalar a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

 private:
  explicit PrimeField(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 2;
};

inline PrimeField make_prime_field(std::uint64_t p, std::uint64_t n) { return PrimeField::make(p, n); }

/// Multiplicative order of a nonzero residue.
inline std::uint64_t multiplicative_order(const PrimeField& f, scalar a) {
  if (a == 0) return 0;
  std::uint64_t k = 1;
  scalar x = a;
  while (x != 1) {
    x = f.mul(x, a);
    ++k;
  }
  return k;
}

/// Smallest residue of exact multiplicative order n.
inline scalar primitive_root_of_unity(const PrimeField& f, std::uint64_t n) {
  if (n == 0 || (f.p() - 1) % n != 0)
    fail(errc::no_root_of_unity,
         "F_" + std::to_string(f.p()) + " has no primitive " + std::to_string(n) + "-th root of unity");
  for (scalar a = 1; a < f.p(); ++a)
    if (multiplicative_order(f, a) == n) return a;
  fail(errc::no_root_of_unity, "no element of order " + std::to_string(n));
}

/// Default characteristic per root-of-unity order: 17 for n = 2, 163 for
/// n = 3, otherwise the smallest prime p > n^4 with p = 1 (mod n).
inline std::uint32_t default_prime(std::uint32_t n) {
  if (n == 2) return 17;
  if (n == 3) return 163;
  std::uint64_t p = std::uint64_t{n} * n * n * n + 1;
  while (!(is_prime(p) && p % n == 1)) ++p;
  return static_cast<std::uint32_t>(p);
}

}  // namespace hopfrank
