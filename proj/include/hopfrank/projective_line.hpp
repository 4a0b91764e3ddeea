#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "hopfrank/field.hpp"

namespace hopfrank {

/// A point (alpha : beta) of P^1(F_p), stored in normal form (1, b) or (0, 1).
class ProjPoint {
 public:
  ProjPoint() = default;

  /// Normalizes a raw pair; throws ZeroPoint for (0, 0).
  static ProjPoint normalize(const PrimeField& f, scalar a, scalar b) {
    a %= f.p();
    b %= f.p();
    if (a == 0 && b == 0) fail(errc::zero_point, "(0, 0) is not a point of the projective line");
    if (a == 0) return ProjPoint(0, 1);
    return ProjPoint(1, f.div(b, a));
  }

  scalar alpha() const noexcept { return a_; }
  scalar beta() const noexcept { return b_; }

  /// Position in the canonical order (1,0), (1,1), ..., (1,p-1), (0,1).
  std::size_t index(const PrimeField& f) const noexcept { return a_ == 0 ? f.p() : b_; }

  std::string str() const { return std::to_string(a_) + ":" + std::to_string(b_); }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend auto operator<=>(const ProjPoint& x, const ProjPoint& y) {
    // (0,1) sorts last, matching the canonical order.
    auto key = [](const ProjPoint& q) { return q.a_ == 0 ? std::uint64_t{1} << 40 : q.b_; };
    return key(x) <=> key(y);
  }

 private:
  ProjPoint(scalar a, scalar b) : a_(a), b_(b) {}
  scalar a_ = 1, b_ = 0;
};

inline std::vector<ProjPoint> projective_line(const PrimeField& f) {
  std::vector<ProjPoint> pts;
  pts.reserve(f.p() + 1);
  for (scalar b = 0; b < f.p(); ++b) pts.push_back(ProjPoint::normalize(f, 1, b));
  pts.push_back(ProjPoint::normalize(f, 0, 1));
  return pts;
}

/// A finite subset of P^1(F_p), kept sorted in canonical order. The empty
/// set stands for the trivial variety.
class VarietySet {
 public:
  VarietySet() = default;
  explicit VarietySet(PrimeField f) : f_(f) {}
  VarietySet(PrimeField f, std::vector<ProjPoint> pts) : f_(f), pts_(std::move(pts)) {
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
  }

  static VarietySet all(const PrimeField& f) { return VarietySet(f, projective_line(f)); }

  const PrimeField& field() const noexcept { return f_; }
  const std::vector<ProjPoint>& points() const noexcept { return pts_; }
  std::size_t size() const noexcept { return pts_.size(); }
  bool empty() const noexcept { return pts_.empty(); }
  bool contains(const ProjPoint& q) const { return std::binary_search(pts_.begin(), pts_.end(), q); }

  void insert(const ProjPoint& q) {
    auto it = std::lower_bound(pts_.begin(), pts_.end(), q);
    if (it == pts_.end() || *it != q) pts_.insert(it, q);
  }

  friend VarietySet operator|(const VarietySet& a, const VarietySet& b) {
    std::vector<ProjPoint> out;
    std::set_union(a.pts_.begin(), a.pts_.end(), b.pts_.begin(), b.pts_.end(), std::back_inserter(out));
    return VarietySet(a.f_, std::move(out));
  }
  friend VarietySet operator&(const VarietySet& a, const VarietySet& b) {
    std::vector<ProjPoint> out;
    std::set_intersection(a.pts_.begin(), a.pts_.end(), b.pts_.begin(), b.pts_.end(), std::back_inserter(out));
    return VarietySet(a.f_, std::move(out));
  }
  friend bool operator==(const VarietySet& a, const VarietySet& b) { return a.pts_ == b.pts_; }

  /// One "alpha:beta" line per point, or "EMPTY".
  std::string report() const {
    if (pts_.empty()) return "EMPTY\n";
    std::string s;
    for (const auto& q : pts_) s += q.str() + "\n";
    return s;
  }

 private:
  PrimeField f_;
  std::vector<ProjPoint> pts_;
};

}  // namespace hopfrank
