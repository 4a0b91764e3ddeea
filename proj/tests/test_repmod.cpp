#include "test_util.hpp"

using namespace hopfrank;
using testutil::A17;
using testutil::D2;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  return Matrix::from_rows(D2()->field, rows);
}

bool iso(const Rep& a, const Rep& b) { return is_isomorphic(a, b, 1).answer == IsoAnswer::yes; }

std::size_t idx(const std::string& name) { return simple_index(*D2(), name); }

Rep random_small(std::uint64_t seed, std::size_t cap = 12) {
  std::mt19937_64 rng(seed);
  return detail::bounded_random_module(D2(), cap, rng);
}

}  // namespace

TEST(RepTest, RelationCheck) {
  auto D = D2();
  Rep k = rep_from_generators(D, {mat({{0}}), mat({{0}}), mat({{1}}), mat({{1}})});
  EXPECT_EQ(k.dim(), 1u);
  Rep km = rep_from_generators(D, {mat({{0}}), mat({{0}}), mat({{16}}), mat({{16}})});
  EXPECT_EQ(km.dim(), 1u);
  EXPECT_ERRC(rep_from_generators(D, {mat({{0}}), mat({{0}}), mat({{2}}), mat({{1}})}), errc::relation_violated);
  EXPECT_ERRC(rep_from_generators(D, {mat({{0}}), mat({{0}}), mat({{1, 0}, {0, 1}}), mat({{1}})}),
              errc::dimension_mismatch);
  // action(a b) = action(a) action(b) on basis pairs
  Rep p = standard_modules(D).at("P+");
  for (std::size_t i = 0; i < D->dim; ++i)
    for (std::size_t j = 0; j < D->dim; ++j)
      EXPECT_EQ(p.act(D->mul(D->basis(i), D->basis(j))), p.basis_action(i) * p.basis_action(j));
  EXPECT_EQ(p.basis_action(0), p.identity());
}

TEST(RepTest, StandardModules) {
  auto mods = standard_modules(D2());
  EXPECT_EQ(mods.at("P+").dim(), 4u);
  EXPECT_EQ(mods.at("P-").dim(), 4u);
  EXPECT_EQ(mods.at("S+").dim(), 2u);
  EXPECT_EQ(mods.at("S-").dim(), 2u);
  const Rep& p = mods.at("P+");
  // Loewy layers k / (k- + k-) / k
  auto top = top_multiplicities(p);
  EXPECT_EQ(top[idx("k")], 1u);
  EXPECT_EQ(std::accumulate(top.begin(), top.end(), std::size_t{0}), 1u);
  Rep rad = submodule(p, radical_of_module(p));
  EXPECT_EQ(rad.dim(), 3u);
  auto mid = top_multiplicities(rad);
  EXPECT_EQ(mid[idx("k-")], 2u);
  EXPECT_EQ(std::accumulate(mid.begin(), mid.end(), std::size_t{0}), 2u);
  auto soc = socle_multiplicities(p);
  EXPECT_EQ(soc[idx("k")], 1u);
  EXPECT_EQ(std::accumulate(soc.begin(), soc.end(), std::size_t{0}), 1u);
  auto top2 = top_multiplicities(direct_sum(p, mods.at("P-")));
  EXPECT_EQ(top2[idx("k")], 1u);
  EXPECT_EQ(top2[idx("k-")], 1u);
  auto amods = standard_modules(A17());
  EXPECT_EQ(amods.at("P+").dim(), 4u);
  EXPECT_ERRC(standard_modules(make_drinfeld_double(3, make_prime_field(163, 3))), errc::unsupported_algebra);
}

TEST(RepTest, Restriction) {
  auto D = D2();
  auto mods = standard_modules(D);
  for (const auto& pt : projective_line(D->field)) {
    auto H = subalgebra_H(D, pt);
    Rep pr = restrict(mods.at("P+"), H);
    EXPECT_EQ(pr.dim(), 4u);
    EXPECT_TRUE(is_projective(pr));
    auto top = top_multiplicities(pr);
    EXPECT_EQ(std::accumulate(top.begin(), top.end(), std::size_t{0}), 2u);
    Rep kr = restrict(mods.at("k"), H);
    EXPECT_TRUE(kr.gen("t").is_zero());
  }
  EXPECT_ERRC(restrict(standard_modules(A17()).at("k+"), subalgebra_H(D, ProjPoint())), errc::algebra_mismatch);
}

TEST(RepTest, RestrictionIsAdditive) {
  auto D = D2();
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rep m = random_small(s), n = random_small(100 + s);
    auto H = subalgebra_H(D, projective_line(D->field)[s % 18]);
    Rep lhs = restrict(direct_sum(m, n), H), rhs = direct_sum(restrict(m, H), restrict(n, H));
    for (std::size_t g = 0; g < lhs.gens().size(); ++g) EXPECT_EQ(lhs.gen(g), rhs.gen(g));
  }
}

TEST(RepTest, TensorExamples) {
  auto D = D2();
  auto mods = standard_modules(D);
  const Rep &k = mods.at("k"), &km = mods.at("k-");
  EXPECT_TRUE(iso(tensor(km, km), k));
  EXPECT_FALSE(iso(km, k));
  EXPECT_EQ(is_isomorphic(k, km).answer, IsoAnswer::no);
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rep m = random_small(s);
    EXPECT_TRUE(iso(tensor(k, m), m));
    EXPECT_TRUE(iso(tensor(m, k), m));
    Rep n = random_small(50 + s, 6), l = random_small(70 + s, 4);
    EXPECT_TRUE(iso(tensor(direct_sum(n, l), m), direct_sum(tensor(n, m), tensor(l, m))));
  }
  for (const auto& pt : projective_line(D->field)) {
    auto H = subalgebra_H(D, pt);
    Rep t = tensor(induce(H, sub_trivial(H)), km);
    auto top = top_multiplicities(t), soc = socle_multiplicities(t);
    EXPECT_EQ(top[idx("k-")], 1u);
    EXPECT_EQ(soc[idx("k")], 1u);
  }
  EXPECT_ERRC(tensor(standard_modules(A17()).at("k+"), standard_modules(A17()).at("k+")), errc::missing_hopf_data);
}

TEST(RepTest, InducedModuleMatrices) {
  auto D = D2();
  auto H = subalgebra_H(D, ProjPoint::normalize(D->field, 1, 0));
  Rep ind = induce(H, sub_trivial(H));
  ASSERT_EQ(ind.dim(), 2u);
  // basis {1 (x) 1, X (x) 1}, column convention
  EXPECT_TRUE(ind.gen("x").is_zero());
  EXPECT_EQ(ind.gen("X"), mat({{0, 0}, {1, 0}}));
  EXPECT_EQ(ind.gen("g"), mat({{1, 0}, {0, 16}}));
  EXPECT_EQ(ind.gen("G"), mat({{1, 0}, {0, 16}}));
  auto top = top_multiplicities(ind), soc = socle_multiplicities(ind);
  EXPECT_EQ(top[idx("k")], 1u);
  EXPECT_EQ(soc[idx("k-")], 1u);
  for (const auto& pt : projective_line(D->field)) {
    auto Hp = subalgebra_H(D, pt);
    EXPECT_EQ(induce(Hp, sub_trivial(Hp)).dim(), 2u);
  }
  // additivity
  Rep k = sub_trivial(H);
  EXPECT_EQ(induce(H, direct_sum(k, k)).dim(), 4u);
  EXPECT_TRUE(iso(induce(H, direct_sum(k, k)), direct_sum(ind, ind)));
}

TEST(RepTest, HomDimensions) {
  auto mods = standard_modules(D2());
  EXPECT_EQ(hom_basis(mods.at("k"), mods.at("k")).size(), 1u);
  EXPECT_EQ(hom_basis(mods.at("k"), mods.at("k-")).size(), 0u);
  EXPECT_EQ(hom_basis(mods.at("P+"), mods.at("k")).size(), 1u);
  EXPECT_EQ(hom_basis(mods.at("P+"), mods.at("P+")).size(), 2u);
  for (const auto& h : hom_basis(mods.at("P+"), mods.at("P-")))
    EXPECT_TRUE(is_intertwiner(mods.at("P+"), mods.at("P-"), h));
  Rep m = random_small(3);
  auto r = is_isomorphic(m, m);
  ASSERT_EQ(r.answer, IsoAnswer::yes);
  EXPECT_TRUE(is_intertwiner(m, m, *r.witness));
}

TEST(RepTest, Reciprocity) {
  auto D = D2();
  auto mods = standard_modules(D);
  auto H11 = subalgebra_H(D, ProjPoint::normalize(D->field, 1, 1));
  ModHom wk = reciprocity_witness(mods.at("k"), H11);
  EXPECT_EQ(wk.matrix.rows(), 2u);
  EXPECT_EQ(wk.matrix.cols(), 2u);
  ModHom wp = reciprocity_witness(mods.at("P+"), H11);
  EXPECT_EQ(wp.matrix.rows(), 8u);
  EXPECT_EQ(rank(wp.matrix), 8u);
  EXPECT_TRUE(is_intertwiner(wp.source, wp.target, wp.matrix));
  Rep kind = induce(H11, sub_trivial(H11));
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rep m = random_small(200 + s, 8);
    auto H = subalgebra_H(D, projective_line(D->field)[(3 * s) % 18]);
    ModHom w = reciprocity_witness(m, H);
    EXPECT_TRUE(is_intertwiner(w.source, w.target, w.matrix));
    // the other tensor order is isomorphic as well
    Rep kH = induce(H, sub_trivial(H));
    EXPECT_TRUE(iso(induce(H, restrict(m, H)), tensor(kH, m)));
  }
}

TEST(RepTest, ProjectivityAndBlocks) {
  auto D = D2();
  auto mods = standard_modules(D);
  EXPECT_TRUE(is_projective(mods.at("P+")));
  EXPECT_TRUE(is_projective(mods.at("S-")));
  EXPECT_FALSE(is_projective(mods.at("k")));
  EXPECT_FALSE(is_projective(mods.at("k-")));
  const Vector fp = D->element("f+"), fm = D->element("f-");
  EXPECT_EQ(block_component(mods.at("k"), fp).dim(), 1u);
  EXPECT_EQ(block_component(mods.at("k"), fm).dim(), 0u);
  EXPECT_EQ(block_component(mods.at("S+"), fm).dim(), 2u);
  EXPECT_ERRC(block_component(mods.at("k"), D->gen_vectors[0]), errc::not_idempotent);
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rep m = block_submodule(random_module(D, 1 + s % 2, 1 + s % 3, s), fm);
    if (m.dim() == 0) continue;
    EXPECT_TRUE(is_projective(m)) << "seed " << s;
  }
}

TEST(RepTest, CoverAndSyzygy) {
  auto D = D2();
  auto mods = standard_modules(D);
  auto cover = projective_cover(mods.at("k"));
  EXPECT_TRUE(iso(cover.projective.module, mods.at("P+")));
  auto cp = projective_cover(mods.at("P+"));
  EXPECT_TRUE(inverse(cp.epi).has_value());
  EXPECT_EQ(syzygy(mods.at("k"), 1).dim(), 3u);
  EXPECT_EQ(syzygy(mods.at("k"), 2).dim(), 5u);
  EXPECT_EQ(syzygy(mods.at("P+"), 1).dim(), 0u);
  auto amods = standard_modules(A17());
  auto ca = projective_cover(direct_sum(amods.at("k+"), amods.at("k-")));
  EXPECT_TRUE(iso(ca.projective.module, direct_sum(amods.at("P+"), amods.at("P-"))));
}

TEST(RepTest, ProjectiveMatchesRankOnRestriction) {
  auto D = D2();
  for (std::uint64_t s = 0; s < 15; ++s) {
    Rep m = random_small(300 + s, 16);
    for (const auto& pt : projective_line(D->field)) {
      const bool by_rank = rank_point_test(m, pt);
      EXPECT_EQ(is_projective(restrict(m, subalgebra_H(D, pt))), by_rank) << "seed " << s << " point " << pt.str();
    }
  }
}

TEST(RepTest, RandomModules) {
  auto D = D2();
  EXPECT_EQ(random_module(D, 1, 0, 0).dim(), 16u);
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rep m = random_module(D, 1 + s % 3, 1 + s % 4, s);
    EXPECT_GT(m.dim(), 0u);
    EXPECT_NO_THROW(rep_from_generators(D, m.gens()));
    Rep again = random_module(D, 1 + s % 3, 1 + s % 4, s);
    EXPECT_EQ(again.gens(), m.gens());
  }
}

TEST(RepTest, TwoDimensionalTopKSocleKMinusAreInduced) {
  auto D = D2();
  auto mods = standard_modules(D);
  const Rep& p = mods.at("P+");
  Matrix rad = radical_of_module(p);
  std::mt19937_64 rng(17);
  std::size_t found = 0;
  for (int attempt = 0; attempt < 200 && found < 20; ++attempt) {
    Vector v = rad * testutil::random_vector(D->field, rad.cols(), rng);
    Matrix sub = spin(p, {v});
    if (sub.cols() != 2) continue;
    Rep q = quotient(p, sub).module;
    auto soc = socle_multiplicities(q);
    if (soc[idx("k-")] != 1 || q.dim() != 2) continue;
    ++found;
    std::size_t matches = 0;
    for (const auto& pt : projective_line(D->field)) {
      auto H = subalgebra_H(D, pt);
      matches += iso(q, induce(H, sub_trivial(H)));
    }
    EXPECT_EQ(matches, 1u);
  }
  EXPECT_GE(found, 5u);
}
