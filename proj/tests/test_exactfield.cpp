#include "test_util.hpp"

using namespace hopfrank;

TEST(PrimeFieldTest, ConstructionAndRoots) {
  PrimeField f17 = make_prime_field(17, 2);
  EXPECT_EQ(primitive_root_of_unity(f17, 2), 16u);
  EXPECT_NO_THROW(make_prime_field(163, 3));
  EXPECT_ERRC(make_prime_field(5, 3), errc::no_root_of_unity);
  EXPECT_ERRC(make_prime_field(15, 2), errc::not_prime);
  EXPECT_ERRC(primitive_root_of_unity(f17, 3), errc::no_root_of_unity);
  PrimeField f13 = make_prime_field(13, 3);
  // smallest residue of order 3 mod 13, by brute force
  scalar brute = 0;
  for (scalar a = 2; a < 13 && !brute; ++a)
    if ((a * a * a) % 13 == 1 && a != 1) brute = a;
  EXPECT_EQ(primitive_root_of_unity(f13, 3), brute);
  EXPECT_EQ(brute, 3u);
}

TEST(PrimeFieldTest, AxiomsOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {3u, 17u, 163u, 65521u}) {
    PrimeField f = PrimeField::make(p);
    for (int t = 0; t < 500; ++t) {
      const scalar a = rng() % p, b = rng() % p, c = rng() % p;
      EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
      EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      EXPECT_EQ(f.sub(a, b), f.add(a, f.neg(b)));
      EXPECT_EQ(f.mul(a, b), static_cast<scalar>((std::uint64_t{a} * b) % p));
      if (a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    }
  }
}

TEST(MatrixTest, RowReduceExamples) {
  PrimeField f = make_prime_field(17, 2);
  auto id = row_reduce(Matrix::identity(f, 3));
  EXPECT_EQ(id.rank, 3u);
  EXPECT_EQ(id.kernel_basis.cols(), 0u);
  auto z = row_reduce(Matrix(f, 2, 5));
  EXPECT_EQ(z.rank, 0u);
  EXPECT_EQ(z.kernel_basis.cols(), 5u);
  EXPECT_ERRC(id.solver.solve(Vector{1, 2}), errc::dimension_mismatch);
  EXPECT_FALSE(Solver(Matrix(f, 2, 2)).solve(Vector{1, 0}).has_value());
}

// On the induced module for (alpha:beta), gamma x + delta X acts as
// [[0, 0], [alpha delta - beta gamma, 0]] up to sign: rank 1 iff the determinant is nonzero.
TEST(MatrixTest, InducedTwoByTwoRank) {
  PrimeField f = make_prime_field(17, 2);
  for (scalar a = 0; a < 17; ++a)
    for (scalar b = 0; b < 17; ++b)
      for (scalar c = 0; c < 17; c += 3)
        for (scalar d = 0; d < 17; d += 5) {
          const scalar det = f.sub(f.mul(a, d), f.mul(b, c));
          Matrix m(f, 2, 2);
          m(1, 0) = det;
          EXPECT_EQ(rank(m), det ? 1u : 0u);
        }
}

TEST(MatrixTest, RankOfPlantedFactorization) {
  // L * diag(1,..,1,0,..) * U has rank exactly k for unit triangular L, U.
  PrimeField f = make_prime_field(17, 2);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + rng() % 14, k = rng() % (n + 1);
    Matrix L = Matrix::identity(f, n), U = Matrix::identity(f, n), D(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        L(i, j) = rng() % 17;
        U(j, i) = rng() % 17;
      }
    for (std::size_t i = 0; i < k; ++i) D(i, i) = 1;
    EXPECT_EQ(rank(L * D * U), k);
  }
}

TEST(MatrixTest, RankNullityAndSolveProperty) {
  PrimeField f = make_prime_field(17, 2);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
    Matrix m = testutil::random_matrix(f, r, c, rng, 10 + rng() % 90);
    auto rr = row_reduce(m);
    EXPECT_EQ(rr.rank + rr.kernel_basis.cols(), c);
    EXPECT_TRUE((m * rr.kernel_basis).is_zero());
    EXPECT_EQ(rank(rr.kernel_basis), rr.kernel_basis.cols());
    EXPECT_EQ(rank(rr.image_basis), rr.rank);
    const Vector v = testutil::random_vector(f, c, rng);
    auto s = rr.solver.solve(m * v);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(m * *s, m * v);
  }
}

TEST(MatrixTest, InverseAndKron) {
  PrimeField f = make_prime_field(17, 2);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 8;
    Matrix m = testutil::random_matrix(f, n, n, rng);
    auto inv = inverse(m);
    EXPECT_EQ(inv.has_value(), rank(m) == n);
    if (inv) EXPECT_EQ(m * *inv, Matrix::identity(f, n));
  }
  Matrix a = Matrix::from_rows(f, {{1, 2}, {3, 4}}), b = Matrix::from_rows(f, {{0, 1}, {1, 0}});
  Matrix k = kron(a, b);
  EXPECT_EQ(k, Matrix::from_rows(f, {{0, 1, 0, 2}, {1, 0, 2, 0}, {0, 3, 0, 4}, {3, 0, 4, 0}}));
}

TEST(MatrixTest, IntersectionDimension) {
  PrimeField f = make_prime_field(17, 2);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng() % 10;
    Matrix a = testutil::random_matrix(f, n, rng() % n + 1, rng), b = testutil::random_matrix(f, n, rng() % n + 1, rng);
    const std::size_t ra = rank(a), rb = rank(b), rab = rank(hstack({a, b}, f, n));
    EXPECT_EQ(intersect_column_spaces(a, b).cols(), ra + rb - rab);
  }
}

TEST(ProjectiveLineTest, OrderAndNormalization) {
  PrimeField f17 = make_prime_field(17, 2), f3 = PrimeField::make(3);
  EXPECT_EQ(projective_line(f17).size(), 18u);
  auto l3 = projective_line(f3);
  std::vector<std::string> names;
  for (const auto& q : l3) names.push_back(q.str());
  EXPECT_EQ(names, (std::vector<std::string>{"1:0", "1:1", "1:2", "0:1"}));
  EXPECT_EQ(ProjPoint::normalize(f17, 2, 6).str(), "1:3");
  EXPECT_ERRC(ProjPoint::normalize(f17, 0, 0), errc::zero_point);
}

TEST(ProjectiveLineTest, NormalizationProperties) {
  PrimeField f = make_prime_field(17, 2);
  for (scalar a = 0; a < 17; ++a)
    for (scalar b = 0; b < 17; ++b) {
      if (!a && !b) continue;
      ProjPoint q = ProjPoint::normalize(f, a, b);
      EXPECT_EQ(ProjPoint::normalize(f, q.alpha(), q.beta()), q);
      EXPECT_TRUE(q.alpha() == 1 || (q.alpha() == 0 && q.beta() == 1));
      for (scalar c = 1; c < 17; ++c) EXPECT_EQ(ProjPoint::normalize(f, f.mul(c, a), f.mul(c, b)), q);
      // equal iff proportional: a b' = a' b
      for (const auto& r : projective_line(f))
        EXPECT_EQ(q == r, f.mul(a, r.beta()) == f.mul(r.alpha(), b));
    }
}

TEST(PolyTest, DivModAndGcd) {
  PrimeField f = make_prime_field(17, 2);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    Poly a = testutil::random_vector(f, 1 + rng() % 7, rng), b = testutil::random_vector(f, 1 + rng() % 5, rng);
    trim(a);
    trim(b);
    if (b.empty()) continue;
    auto [q, r] = poly_divmod(f, a, b);
    EXPECT_LT(degree(r), degree(b));
    EXPECT_EQ(poly_add(f, poly_mul(f, q, b), r), a);
  }
}
