#include <doctest.h>

#include <cyclix/error.hpp>
#include <cyclix/linalg.hpp>
#include <cyclix/rational.hpp>
#include <cyclix/scalar_domain.hpp>
#include <cyclix/smith.hpp>
#include <limits>

#include "convert.hpp"
#include "oracle.hpp"

using namespace cyclix;

namespace {

const ScalarDomain Q = ScalarDomain::rationals();
const ScalarDomain F2 = ScalarDomain::prime_field(2);
const ScalarDomain Z = ScalarDomain::integers();

SparseVec vec(std::initializer_list<std::int64_t> xs) {
  std::vector<Entry> raw;
  std::size_t k = 0;
  for (auto x : xs) raw.push_back({k++, Rational(x)});
  return canonicalize(std::move(raw), Q);
}

}  // namespace

TEST_CASE("rational arithmetic stays exact past 64 bits") {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  const Rational sq = big * big;
  CHECK_FALSE(sq.is_small());
  CHECK((sq / big) == big);
  CHECK((sq / big).is_small());
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(std::numeric_limits<std::int64_t>::min()).str() == "-9223372036854775808");
}

TEST_CASE("scalar domains") {
  CHECK(ScalarDomain::parse("q") == Q);
  CHECK(ScalarDomain::parse("zp:7").characteristic() == 7);
  CHECK(ScalarDomain::parse("z") == Z);
  CHECK_THROWS_AS(ScalarDomain::prime_field(9), Error);
  CHECK_THROWS_AS(ScalarDomain::parse("zp:1"), Error);
  CHECK_THROWS_AS(ScalarDomain::parse("r"), Error);
  const ScalarDomain f5 = ScalarDomain::prime_field(5);
  CHECK(f5.reduce(Rational(-1)) == Rational(4));
  CHECK(f5.reduce(Rational(1, 2)) == Rational(3));
  CHECK(f5.mul(f5.inverse(Rational(3)), Rational(3)) == Rational(1));
  CHECK_THROWS_AS(f5.reduce(Rational(1, 5)), Error);
}

TEST_CASE("rank, kernel and image on small matrices") {
  SUBCASE("identity 3x3 over Q") {
    const auto r = rank_kernel_image(Matrix::identity(Q, 3));
    CHECK(r.rank == 3);
    CHECK(r.kernel.dim() == 0);
  }
  SUBCASE("zero 2x5 over F_2") {
    const auto r = rank_kernel_image(Matrix(F2, 2, 5));
    CHECK(r.rank == 0);
    CHECK(r.kernel.dim() == 5);
  }
  SUBCASE("[[1,2],[2,4]] over Q") {
    const Matrix m = Matrix::from_rows(Q, {{1, 2}, {2, 4}});
    const auto r = rank_kernel_image(m);
    CHECK(r.rank == 1);
    // hand reduction: x + 2y = 0
    CHECK(r.kernel == SubspaceBasis(Q, 2, {vec({-2, 1})}));
    CHECK(r.image == SubspaceBasis(Q, 2, {vec({1, 2})}));
  }
  SUBCASE("integers are refused") {
    CHECK_THROWS_AS(rank_kernel_image(Matrix::identity(Z, 2)), Error);
  }
  SUBCASE("kernel vectors are annihilated") {
    const Matrix m = Matrix::from_rows(Q, {{1, 1, 0, 2}, {0, 1, 1, 1}, {1, 2, 1, 3}});
    const auto r = rank_kernel_image(m);
    CHECK(r.rank == 2);
    for (const auto& v : r.kernel.basis()) CHECK(m.apply(v).empty());
    for (const auto& v : kernel_basis(m)) CHECK(m.apply(v).empty());
    CHECK(kernel_basis(m).size() == 2);
  }
}

TEST_CASE("subspace equality") {
  CHECK(subspace_equal(SubspaceBasis(Q, 2, {vec({1, 0})}), SubspaceBasis(Q, 2, {vec({2, 0})})));
  CHECK_FALSE(subspace_equal(SubspaceBasis(Q, 2, {vec({1, 0})}), SubspaceBasis(Q, 2, {vec({0, 1})})));
  // rank oracle: the two vectors are independent
  CHECK(oracle::rank({{1, 1}, {1, -1}}) == 2);
  CHECK(subspace_equal(SubspaceBasis(Q, 2, {vec({1, 1}), vec({1, -1})}), SubspaceBasis::full(Q, 2)));
  CHECK_THROWS_AS(subspace_equal(SubspaceBasis(Q, 2), SubspaceBasis(Q, 3)), Error);
  CHECK_THROWS_AS(subspace_equal(SubspaceBasis(Q, 2), SubspaceBasis(F2, 2)), Error);
}

TEST_CASE("span solver expresses vectors in generators") {
  SpanSolver s(Q, 3);
  CHECK(s.add_generator(vec({1, 1, 0})));
  CHECK(s.add_generator(vec({0, 1, 1})));
  CHECK_FALSE(s.add_generator(vec({1, 2, 1})));
  const auto c = s.express(vec({2, 3, 1}));
  REQUIRE(c.has_value());
  CHECK(get(*c, 0) == Rational(2));
  CHECK(get(*c, 1) == Rational(1));
  CHECK(get(*c, 2) == Rational(0));
  CHECK_FALSE(s.express(vec({1, 0, 0})).has_value());
}

TEST_CASE("Smith normal form") {
  SUBCASE("diag(1,1)") {
    const auto s = smith_normal_form(Matrix::identity(Z, 2));
    CHECK(s.diagonal == std::vector<mpz_class>{1, 1});
  }
  SUBCASE("[[2,4],[6,8]]") {
    const Matrix m = Matrix::from_rows(Z, {{2, 4}, {6, 8}});
    const auto s = smith_normal_form(m);
    // determinantal divisors: gcd of entries 2, |det| 8
    CHECK(oracle::determinantal_factors(testing::to_oracle(m)) == std::vector<mpz_class>{2, 4});
    CHECK(s.diagonal == std::vector<mpz_class>{2, 4});
    CHECK(s.rank == 2);
    const Matrix d = s.left * m * s.right;
    CHECK(d == Matrix::from_rows(Z, {{2, 0}, {0, 4}}));
  }
  SUBCASE("1x1 zero") { CHECK(smith_normal_form(Matrix(Z, 1, 1)).diagonal == std::vector<mpz_class>{0}); }
  SUBCASE("empty") { CHECK(smith_normal_form(Matrix(Z, 0, 3)).diagonal.empty()); }
  SUBCASE("transforms are unimodular") {
    const Matrix m = Matrix::from_rows(Z, {{4, 6, 2}, {2, 2, 8}, {6, 0, 4}});
    const auto s = smith_normal_form(m);
    CHECK(abs(oracle::determinant(testing::to_oracle(s.left))) == 1);
    CHECK(abs(oracle::determinant(testing::to_oracle(s.right))) == 1);
    CHECK(s.diagonal == oracle::smith_diagonal(testing::to_oracle(m)));
    CHECK(smith_invariants(m) == s.diagonal);
  }
}

TEST_CASE("matrix algebra") {
  const Matrix a = Matrix::from_rows(Q, {{1, 2}, {3, 4}});
  const Matrix b = Matrix::from_rows(Q, {{0, 1}, {1, 0}});
  CHECK(a * b == Matrix::from_rows(Q, {{2, 1}, {4, 3}}));
  CHECK(a + b - b == a);
  CHECK(a.transpose().transpose() == a);
  CHECK(Matrix::kron(Matrix::identity(Q, 2), b).rows() == 4);
  CHECK(Matrix::kron(b, b) * Matrix::kron(b, b) == Matrix::identity(Q, 4));
  CHECK(a.in_domain(F2) == Matrix::from_rows(F2, {{1, 0}, {1, 0}}));
  CHECK_THROWS_AS(a * Matrix(Q, 3, 1), Error);
}
