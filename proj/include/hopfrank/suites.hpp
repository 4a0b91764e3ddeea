#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hopfrank/io.hpp"
#include "hopfrank/varieties.hpp"

namespace hopfrank {

struct SuiteFailure {
  std::uint64_t seed = 0;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<SuiteFailure> failures;
  std::vector<std::pair<std::string, std::string>> stats;  // extra stanza lines
  double seconds = 0;

  bool pass() const noexcept { return failures.empty(); }

  /// Failure lines, the key=value stanza, then PASS/FAIL. Timing only on
  /// request so that reports for a given seed are byte-identical.
  std::string render(bool timing = false) const {
    std::ostringstream out;
    for (const auto& f : failures) out << "failure seed=" << f.seed << " " << f.detail << "\n";
    out << "suite=" << name << "\n";
    out << "trials=" << trials << "\n";
    out << "seed=" << seed << "\n";
    out << "failures=" << failures.size() << "\n";
    for (const auto& [k, v] : stats) out << k << "=" << v << "\n";
    if (timing) out << "seconds=" << seconds << "\n";
    if (pass())
      out << "PASS trials=" << trials << "\n";
    else
      out << "FAIL seed=" << failures.front().seed << "\n";
    return out.str();
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"dade",   "tensor",  "c-axioms",   "reciprocity",
                                                 "heller", "compare", "generation", "block"};
  return names;
}

namespace detail {

/// A random module of dimension between 1 and max_dim, drawn from quotients
/// of A^r. Deterministic in the seed.
inline Rep bounded_random_module(const AlgebraPtr& alg, std::size_t max_dim, std::mt19937_64& rng) {
  const std::size_t max_r = std::max<std::size_t>(1, max_dim / alg->dim);
  for (;;) {
    const std::size_t r = 1 + rng() % max_r;
    const std::size_t s = 1 + rng() % 4;
    Rep m = random_module(alg, r, s, rng());
    if (m.dim() <= max_dim) return m;
  }
}

inline ProjPoint random_point(const PrimeField& f, std::mt19937_64& rng) {
  auto pts = projective_line(f);
  return pts[rng() % pts.size()];
}

inline ExtRingPoint random_class(const PrimeField& f, std::mt19937_64& rng) {
  for (;;) {
    ExtRingPoint c{static_cast<scalar>(rng() % f.p()), static_cast<scalar>(rng() % f.p()),
                   static_cast<scalar>(rng() % f.p())};
    if (c.u || c.v || c.w) return c;
  }
}

inline Matrix random_invertible(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<scalar>(rng() % f.p());
    if (rank(m) == n) return m;
  }
}

inline std::string variety_brief(const VarietySet& v) {
  if (v.empty()) return "EMPTY";
  std::string s;
  for (const auto& q : v.points()) s += (s.empty() ? "" : ",") + q.str();
  return s;
}

/// Odd degree n: images of a random basis of Ext^1(k, k-) under a random
/// basis of Ext^{n-1}(k-, k-) span Ext^n(k, k-).
inline bool generation_trial(const AlgebraPtr& D, std::size_t n, std::mt19937_64& rng, std::string& detail) {
  const PrimeField& f = D->field;
  auto rk = std::make_shared<const Resolution>(canonical_resolution_k(D, n + 1));
  auto rm = std::make_shared<const Resolution>(canonical_resolution_k_minus(D, n + 1));
  const Rep& km = rm->target;
  HomSpace h1(rk->terms[1], km), hm(rm->terms[n - 1], km), hn(rk->terms[n], km);
  Matrix c1 = random_invertible(f, h1.dim(), rng), cm = random_invertible(f, hm.dim(), rng);
  std::vector<Matrix> products;
  for (std::size_t b = 0; b < h1.dim(); ++b) {
    auto theta = lift_chain_map(h1.to_map(c1.column(b)), 1, *rk, *rm, n - 1);
    for (std::size_t a = 0; a < hm.dim(); ++a) products.push_back(hm.to_map(cm.column(a)) * theta[n - 1]);
  }
  const std::size_t r = rank(hn.coords_matrix(products)), dim = ext_dims(*rk, km, n)[n];
  detail = "degree=" + std::to_string(n) + " rank=" + std::to_string(r) + " dim=" + std::to_string(dim);
  return r == dim;
}

}  // namespace detail

/// Runs the named property over `trials` seeded instances; trial i uses seed
/// + i. Default field F_17, n = 2.
inline SuiteReport run_suite(const std::string& name, std::size_t trials, std::uint64_t seed) {
  bool known = false;
  for (const auto& s : suite_names()) known = known || s == name;
  if (!known) fail(errc::unknown_suite, "unknown suite '" + name + "'");
  if (trials == 0) fail(errc::dimension_mismatch, "trials must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  AlgebraPtr D = family_algebra("d-taft", 2, 17);
  const PrimeField& f = D->field;
  SuiteReport rep;
  rep.name = name;
  rep.trials = trials;
  rep.seed = seed;

  std::size_t counter = 0;   // suite-specific tally for the stanza
  std::size_t max_dim = 0;
  std::optional<SupportContext> ctx;
  std::optional<BasicIdentification> block_id;
  if (name == "compare") ctx.emplace(D);
  if (name == "block") block_id = identify_basic_algebra(principal_corner(D), seed);

  using Trial = std::function<bool(std::mt19937_64&, std::string&)>;
  Trial trial;
  if (name == "dade") {
    trial = [&](std::mt19937_64& rng, std::string& why) {
      Rep m = detail::bounded_random_module(D, 48, rng);
      max_dim = std::max(max_dim, m.dim());
      const bool proj = is_projective(m);
      const VarietySet v = rank_variety(m);
      counter += proj;
      why = "dim=" + std::to_string(m.dim()) + " projective=" + std::to_string(proj) + " variety=" + detail::variety_brief(v);
      return proj == v.empty();
    };
  } else if (name == "tensor") {
    trial = [&](std::mt19937_64& rng, std::string& why) {
      Rep m = detail::bounded_random_module(D, 12, rng), n = detail::bounded_random_module(D, 12, rng);
      max_dim = std::max({max_dim, m.dim(), n.dim()});
      const VarietySet vmn = rank_variety(tensor(m, n)), expect = rank_variety(m) & rank_variety(n);
      counter += !vmn.empty();
      why = "dims=" + std::to_string(m.dim()) + "," + std::to_string(n.dim()) + " got=" + detail::variety_brief(vmn) +
            " expected=" + detail::variety_brief(expect);
      return vmn == expect;
    };
  } else if (name == "c-axioms") {
    trial = [&](std::mt19937_64& rng, std::string& why) {
      Rep m = detail::bounded_random_module(D, 16, rng), n = detail::bounded_random_module(D, 16, rng);
      max_dim = std::max({max_dim, m.dim(), n.dim()});
      const VarietySet vm = rank_variety(m), vn = rank_variety(n);
      if (rank_variety(direct_sum(m, n)) != (vm | vn)) {
        why = "C1 fails";
        return false;
      }
      // 0 -> Omega M -> P -> M -> 0: each variety lies in the union of the other two
      ProjectiveCover cover = projective_cover(m);
      const VarietySet vp = rank_variety(cover.projective.module), vo = rank_variety(syzygy(m, 1));
      auto within = [](const VarietySet& a, const VarietySet& b, const VarietySet& c) { return (a & (b | c)) == a; };
      if (!within(vo, vp, vm) || !within(vp, vo, vm) || !within(vm, vo, vp)) {
        why = "C2 fails";
        return false;
      }
      for (std::size_t k = 1; k <= 3; ++k)
        if (rank_variety(syzygy(m, k)) != vm) {
          why = "C3 fails for n=" + std::to_string(k);
          return false;
        }
      counter += !vm.empty();
      return true;
    };
  } else if (name == "reciprocity") {
    trial = [&](std::mt19937_64& rng, std::string& why) {
      Rep m = detail::bounded_random_module(D, 12, rng);
      const ProjPoint pt = detail::random_point(f, rng);
      max_dim = std::max(max_dim, m.dim());
      why = "dim=" + std::to_string(m.dim()) + " point=" + pt.str();
      try {
        ModHom w = reciprocity_witness(m, subalgebra_H(D, pt));
        counter += w.matrix.cols();
        return true;
      } catch (const error& e) {
        if (e.code() != errc::witness_not_bijective) throw;
        return false;
      }
    };
  } else if (name == "heller") {
    auto canon = std::make_shared<const Resolution>(canonical_resolution_k(D, 3));
    trial = [&, canon](std::mt19937_64& rng, std::string& why) {
      Rep m = detail::bounded_random_module(D, 8, rng);
      const ExtRingPoint c = detail::random_class(f, rng);
      max_dim = std::max(max_dim, m.dim());
      why = "dim=" + std::to_string(m.dim()) + " class=(" + std::to_string(c.u) + "," + std::to_string(c.v) + "," +
            std::to_string(c.w) + ")";
      counter += !is_projective(m);
      return heller_stability_check(ext2_element(canon, c), m);
    };
  } else if (name == "compare") {
    trial = [&](std::mt19937_64& rng, std::string& why) {
      Rep m = detail::bounded_random_module(D, 10, rng);
      max_dim = std::max(max_dim, m.dim());
      const VarietySet s = support_variety(m, *ctx), r = rank_variety(m);
      counter += !r.empty();
      why = "dim=" + std::to_string(m.dim()) + " support=" + detail::variety_brief(s) + " rank=" + detail::variety_brief(r);
      return s == r;
    };
  } else if (name == "generation") {
    trial = [&](std::mt19937_64& rng, std::string& why) {
      const std::size_t n = 1 + 2 * (rng() % 4);
      max_dim = std::max(max_dim, n);
      return detail::generation_trial(D, n, rng, why);
    };
  } else {  // block
    trial = [&](std::mt19937_64& rng, std::string& why) {
      Rep m = block_submodule(detail::bounded_random_module(D, 32, rng), D->element("f+"));
      max_dim = std::max(max_dim, m.dim());
      const VarietySet b = rank_variety_block(m, *block_id), r = rank_variety(m);
      counter += !r.empty();
      why = "dim=" + std::to_string(m.dim()) + " block=" + detail::variety_brief(b) + " rank=" + detail::variety_brief(r);
      return b == r;
    };
  }

  for (std::size_t i = 0; i < trials; ++i) {
    const std::uint64_t s = seed + i;
    std::mt19937_64 rng(s);
    std::string why;
    bool ok = false;
    try {
      ok = trial(rng, why);
    } catch (const error& e) {
      if (e.code() == errc::internal) throw;
      why += std::string(why.empty() ? "" : " ") + e.what();
    }
    if (!ok) rep.failures.push_back({s, why});
  }

  static const std::map<std::string, std::string> tally_name = {
      {"dade", "projective"},        {"tensor", "nonempty"},        {"c-axioms", "nonempty"},
      {"reciprocity", "witness_dims"}, {"heller", "nonprojective"}, {"compare", "nonempty"},
      {"generation", "max_degree"},  {"block", "nonempty"}};
  if (name == "generation") {
    rep.stats.push_back({"max_degree", std::to_string(max_dim)});
  } else {
    rep.stats.push_back({tally_name.at(name), std::to_string(counter)});
    rep.stats.push_back({"max_dim", std::to_string(max_dim)});
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace hopfrank
