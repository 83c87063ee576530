#include <doctest.h>

#include <cyclix/algebra.hpp>
#include <cyclix/error.hpp>
#include <cyclix/group.hpp>
#include <cyclix/hochschild.hpp>
#include <cyclix/homology.hpp>

#include "convert.hpp"
#include "oracle.hpp"

using namespace cyclix;

namespace {

const ScalarDomain Q = ScalarDomain::rationals();
const ScalarDomain F2 = ScalarDomain::prime_field(2);

SparseVec e(std::size_t i) { return unit_vector(i); }

struct Pair {
  FiniteAlgebra library;
  oracle::Algebra reference;
};

std::vector<Pair> builtins() {
  return {{FiniteAlgebra::ground(Q), oracle::ground()},
          {FiniteAlgebra::truncated_polynomial(2, Q), oracle::truncpoly(2)},
          {FiniteAlgebra::truncated_polynomial(3, Q), oracle::truncpoly(3)},
          {FiniteAlgebra::product_field(2, Q), oracle::productfield(2)},
          {FiniteAlgebra::product_field(3, Q), oracle::productfield(3)},
          {FiniteAlgebra::group_algebra(FiniteGroup::cyclic(2), Q), oracle::group_algebra(oracle::cyclic_table(2))},
          {FiniteAlgebra::group_algebra(FiniteGroup::cyclic(3), Q), oracle::group_algebra(oracle::cyclic_table(3))}};
}

}  // namespace

TEST_CASE("building algebras") {
  const FiniteAlgebra g = FiniteAlgebra::group_algebra(FiniteGroup::cyclic(2), Q);
  CHECK(g.dim() == 2);
  CHECK(g.product(1, 1) == e(0));
  CHECK(g.unit() == e(0));
  const FiniteAlgebra t = FiniteAlgebra::truncated_polynomial(2, Q);
  CHECK(t.product(1, 1).empty());
  CHECK(t.is_commutative());
  CHECK_FALSE(FiniteAlgebra::group_algebra(FiniteGroup::symmetric(3), Q).is_commutative());
  CHECK(FiniteAlgebra::from_preset("productfield:3", Q).dim() == 3);
  CHECK(FiniteAlgebra::from_preset("group:cyclic:4", Q).dim() == 4);
  CHECK(FiniteAlgebra::from_preset("unit", Q).dim() == 1);
  CHECK_THROWS_AS(FiniteAlgebra::from_preset("truncpoly:0", Q), Error);
  // x x = 1 with x 1 = 0: no unit, and not associative
  const std::vector<std::vector<SparseVec>> broken{{e(0), {}}, {{}, e(0)}};
  CHECK_THROWS_AS(FiniteAlgebra(Q, {"1", "x"}, e(0), broken), Error);
  // a b = a on {x, y} with a unit adjoined is associative
  const std::vector<std::vector<SparseVec>> left_zero{{e(0), e(1), e(2)}, {e(1), e(1), e(1)}, {e(2), e(2), e(2)}};
  CHECK_NOTHROW(FiniteAlgebra(Q, {"1", "x", "y"}, e(0), left_zero));
  // x x = y, x y = 1, y x = x: (x x) y = 1 but x (x y) = x
  const std::vector<std::vector<SparseVec>> skew{{e(0), e(1), e(2)}, {e(1), e(2), e(0)}, {e(2), e(1), e(0)}};
  CHECK_THROWS_AS(FiniteAlgebra(Q, {"1", "x", "y"}, e(0), skew), Error);
}

TEST_CASE("Hochschild module operators") {
  const FiniteAlgebra a = FiniteAlgebra::truncated_polynomial(3, Q);
  const HochschildModule m(a, 3);
  SUBCASE("d_0 on A (x) A is the multiplication") {
    const Matrix d0 = m.face(1, 0);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) CHECK(d0.column(m.encode({i, j})) == a.product(i, j));
    }
  }
  SUBCASE("s_0 on A inserts the unit") {
    const Matrix s0 = m.degeneracy(0, 0);
    for (std::size_t i = 0; i < 3; ++i) CHECK(s0.column(i) == e(m.encode({i, 0})));
  }
  SUBCASE("signed t_1 has order 2") {
    const Matrix t = m.cyclic(1);
    CHECK(t * t == Matrix::identity(Q, 9));
    CHECK(t.column(m.encode({1, 2})) == SparseVec{{m.encode({2, 1}), Rational(-1)}});
  }
  SUBCASE("matrix identities") {
    CHECK(check_module_identities(m, IdentityMode::Cyclic).passed());
    CHECK(check_module_identities(HochschildModule(a, 3, false), IdentityMode::Cyclic).passed());
  }
  SUBCASE("budget") { CHECK_THROWS_AS(HochschildModule(a, 12, true, 1000), Error); }
}

TEST_CASE("Hochschild homology against the dense oracle") {
  for (const auto& [lib, ref] : builtins()) {
    const int top = lib.dim() <= 2 ? 4 : 3;
    const auto expected = oracle::hh_betti(ref, top);
    CHECK_MESSAGE(hh(lib, 0, top).betti() == expected, lib.name());
    HochschildOptions un;
    un.mode = Normalization::Unnormalized;
    CHECK_MESSAGE(hh(lib, 0, top, un).betti() == expected, lib.name());
    if (lib.is_commutative()) CHECK(expected[0] == lib.dim());
  }
  CHECK(hh(FiniteAlgebra::ground(Q), 0, 3).betti() == std::vector<std::size_t>{1, 0, 0, 0});
  CHECK(hh(FiniteAlgebra::truncated_polynomial(2, Q), 0, 4).betti() == std::vector<std::size_t>{2, 1, 1, 1, 1});
  CHECK(hh(FiniteAlgebra::product_field(2, Q), 0, 3).betti() == std::vector<std::size_t>{2, 0, 0, 0});
  // over F_2 the group algebra of Z/2 is not semisimple
  const auto f2 = hh(FiniteAlgebra::group_algebra(FiniteGroup::cyclic(2), F2), 0, 3).betti();
  CHECK(f2 == oracle::hh_betti(oracle::group_algebra(oracle::cyclic_table(2)), 3, 2));
  CHECK(f2 == std::vector<std::size_t>{2, 2, 2, 2});
}

TEST_CASE("group algebras and cyclic bar constructions") {
  SUBCASE("Z/2 over Q") {
    const auto c = hh_vs_cyclic_bar(FiniteGroup::cyclic(2), 5, Q);
    CHECK(c.entries_compared > 0);
    CHECK(c.betti_hochschild == c.betti_cyclic_bar);
  }
  SUBCASE("Z/3 over F_2") {
    const auto c = hh_vs_cyclic_bar(FiniteGroup::cyclic(3), 4, F2);
    CHECK(c.betti_hochschild == c.betti_cyclic_bar);
  }
  SUBCASE("trivial group") {
    const auto c = hh_vs_cyclic_bar(FiniteGroup::trivial(), 4, Q);
    CHECK(c.betti_hochschild == std::vector<std::size_t>{1, 0, 0, 0});
  }
  SUBCASE("degree range") { CHECK_THROWS_AS(hh_vs_cyclic_bar(FiniteGroup::cyclic(2), 0, Q), Error); }
}

TEST_CASE("b' is contractible") {
  CHECK(bprime_homotopy_check(HochschildModule(FiniteAlgebra::ground(Q), 7), 6).passed());
  CHECK(bprime_homotopy_check(HochschildModule(FiniteAlgebra::truncated_polynomial(2, Q), 6), 5).passed());
  CHECK(bprime_homotopy_check(HochschildModule(FiniteAlgebra::group_algebra(FiniteGroup::cyclic(3), Q), 5), 4).passed());
  // independent matrices: b' h + h b' = id with h (a..) = (1, a..)
  const oracle::Algebra a = oracle::truncpoly(2);
  auto h = [&](int n) {
    const std::size_t src = static_cast<std::size_t>(1) << (n + 1);
    oracle::Dense m = oracle::zeros(2 * src, src);
    for (std::size_t x = 0; x < src; ++x) m[x][x] = 1;  // unit is basis 0, the leading slot
    return m;
  };
  CHECK(oracle::multiply(oracle::hochschild_bprime(a, 1), h(0)) == oracle::identity(2));
  for (int n = 1; n <= 4; ++n) {
    const auto lhs = oracle::add(oracle::multiply(oracle::hochschild_bprime(a, n + 1), h(n)),
                                 oracle::multiply(h(n - 1), oracle::hochschild_bprime(a, n)));
    CHECK(lhs == oracle::identity(static_cast<std::size_t>(1) << (n + 1)));
    const auto lib = HochschildModule(FiniteAlgebra::truncated_polynomial(2, Q), 5).bprime(n);
    CHECK(testing::to_oracle(lib) == oracle::hochschild_bprime(a, n));
  }
}
