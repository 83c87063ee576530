#include <doctest.h>

#include <cyclix/bicomplex.hpp>
#include <cyclix/chain_complex.hpp>
#include <cyclix/chain_map.hpp>
#include <cyclix/error.hpp>
#include <cyclix/free_cyclic.hpp>
#include <cyclix/homology.hpp>
#include <cyclix/linalg.hpp>
#include <cyclix/simplicial_module.hpp>
#include <cyclix/simplicial_presets.hpp>
#include <cyclix/tensor_maps.hpp>

#include "convert.hpp"
#include "oracle.hpp"

using namespace cyclix;

namespace {

const ScalarDomain Q = ScalarDomain::rationals();
const ScalarDomain F2 = ScalarDomain::prime_field(2);
const ScalarDomain Z = ScalarDomain::integers();

ChainComplex chains(const SpecPtr& s, ScalarDomain dom, Normalization mode) {
  return chain_complex(LinearizedModule(s, dom), mode);
}

std::vector<std::size_t> top_betti(const SpecPtr& s, ScalarDomain dom, Normalization mode, int to) {
  return homology(chains(s, dom, mode), 0, to).betti();
}

std::vector<SpecPtr> builtin_specs(int n) {
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const FiniteGroup z3 = FiniteGroup::cyclic(3);
  return {circle(n),
          classifying_space(z2, n),
          classifying_space(z3, n, 1),
          cyclic_bar(z2, n),
          cyclic_bar(z3, n),
          free_cyclic(circle(n)),
          free_cyclic(classifying_space(z2, n))};
}

}  // namespace

TEST_CASE("linearized circle") {
  const ChainComplex c = chains(circle(4), Q, Normalization::Normalized);
  CHECK(c.rank(0) == 1);
  CHECK(c.rank(1) == 1);
  CHECK(c.rank(2) == 0);
  CHECK(c.boundary(1).is_zero());
  const HomologyResult h = homology(c, 0, 3);
  CHECK(h.betti() == std::vector<std::size_t>{1, 1, 0, 0});
  // independent model: Delta[1] / boundary
  const auto o = oracle::circle_chains(4);
  CHECK(oracle::betti(o.dims, o.d) == std::vector<std::size_t>{1, 1, 0, 0});
  CHECK(top_betti(circle(4), Q, Normalization::Unnormalized, 3) == std::vector<std::size_t>{1, 1, 0, 0});
}

TEST_CASE("B(Z/2) over the integers") {
  const SpecPtr b = classifying_space(FiniteGroup::cyclic(2), 6);
  const ChainComplex c = chains(b, Z, Normalization::Normalized);
  // nondegenerate (g,..,g): inner faces are degenerate, outer ones cancel or add
  for (int n = 1; n <= 5; ++n) {
    REQUIRE(c.rank(n) == 1);
    CHECK(abs(c.boundary(n).at(0, 0).to_mpq()) == (n % 2 == 0 ? 2 : 0));
  }
  const HomologyResult h = homology(c, 0, 4);
  const auto o = oracle::integral_homology(oracle::bar_chains(oracle::cyclic_table(2), 5).dims,
                                           oracle::bar_chains(oracle::cyclic_table(2), 5).d);
  for (int n = 0; n <= 4; ++n) {
    const auto& g = h.at(n);
    CHECK(g.betti == o[static_cast<std::size_t>(n)].free_rank);
    CHECK(g.torsion == o[static_cast<std::size_t>(n)].torsion);
  }
  CHECK(h.at(0).betti == 1);
  CHECK(h.at(1).torsion == std::vector<mpz_class>{2});
  CHECK(h.at(2).torsion.empty());
  CHECK(h.at(3).torsion == std::vector<mpz_class>{2});
  CHECK(h.at(4).betti == 0);
  CHECK(top_betti(b, F2, Normalization::Normalized, 5) == std::vector<std::size_t>{1, 1, 1, 1, 1, 1});
}

TEST_CASE("universal coefficients") {
  for (int order : {2, 3}) {
    const SpecPtr b = classifying_space(FiniteGroup::cyclic(order), 5);
    const HomologyResult hz = homology(chains(b, Z, Normalization::Normalized), 0, 4);
    const auto hq = top_betti(b, Q, Normalization::Normalized, 4);
    for (long p : {2L, 3L, 5L}) {
      const auto hp = top_betti(b, ScalarDomain::prime_field(p), Normalization::Normalized, 4);
      auto divisible = [&](int n) {
        std::size_t k = 0;
        if (n < 0) return k;
        for (const auto& t : hz.at(n).torsion) k += (t % p == 0) ? 1 : 0;
        return k;
      };
      for (int n = 0; n <= 4; ++n) {
        CHECK(hp[static_cast<std::size_t>(n)] == hq[static_cast<std::size_t>(n)] + divisible(n) + divisible(n - 1));
      }
    }
  }
}

TEST_CASE("normalized and unnormalized homology agree") {
  for (const auto& s : builtin_specs(5)) {
    for (const ScalarDomain& dom : {Q, F2}) {
      CHECK_MESSAGE(top_betti(s, dom, Normalization::Normalized, 4) == top_betti(s, dom, Normalization::Unnormalized, 4),
                    s->name);
    }
  }
}

TEST_CASE("cyclic bar homology against the oracle") {
  const auto o = oracle::cyclic_bar_chains(oracle::cyclic_table(2), 5);
  CHECK(top_betti(cyclic_bar(FiniteGroup::cyclic(2), 5), Q, Normalization::Unnormalized, 4) == oracle::betti(o.dims, o.d));
  CHECK(top_betti(cyclic_bar(FiniteGroup::cyclic(2), 5), F2, Normalization::Normalized, 4) ==
        oracle::betti(o.dims, o.d, 2));
}

TEST_CASE("chain complex validation") {
  const Matrix d1 = Matrix::from_rows(Q, {{1}});
  const Matrix d2 = Matrix::from_rows(Q, {{1}});
  CHECK_THROWS_AS(ChainComplex(Q, 0, {1, 1, 1}, {d1, d2}), Error);
  CHECK_THROWS_AS(ChainComplex(Q, 0, {1, 2}, {d1}), Error);
  const ChainComplex ok(Q, 0, {1, 1}, {d1});
  CHECK_THROWS_AS(homology(ok, 0, 1), Error);
  CHECK_THROWS_AS(ok.boundary(3), Error);
  CHECK(ok.boundary(0).cols() == 1);
  const ChainComplex exact(Q, 0, {1, 1}, {d1}, true);
  CHECK(homology(exact, 0, 1).betti() == std::vector<std::size_t>{0, 0});
}

TEST_CASE("total complexes") {
  SUBCASE("one column") {
    Bicomplex b(Q, Variance::Homological);
    b.set_cell(0, 0, 2);
    b.set_cell(0, 1, 1);
    b.set_vertical(0, 1, Matrix::from_rows(Q, {{1}, {0}}));
    const auto t = total_complex(b, 0, 1, true);
    CHECK(t.complex.boundary(1) == Matrix::from_rows(Q, {{1}, {0}}));
    CHECK(homology(t.complex, 0, 1).betti() == std::vector<std::size_t>{1, 0});
  }
  SUBCASE("cone of the identity") {
    Bicomplex b(Q, Variance::Homological);
    for (int p = 0; p <= 1; ++p) {
      b.set_cell(p, 0, 2);
      b.set_cell(p, 1, 2);
    }
    const Matrix v = Matrix::from_rows(Q, {{1, 0}, {0, 0}});
    b.set_vertical(0, 1, v);
    b.set_vertical(1, 1, -v);
    b.set_horizontal(1, 0, Matrix::identity(Q, 2));
    b.set_horizontal(1, 1, Matrix::identity(Q, 2));
    const auto t = total_complex(b, 0, 2, true);
    CHECK(homology(t.complex, 0, 2).betti() == std::vector<std::size_t>{0, 0, 0});
  }
  SUBCASE("commuting squares are rejected") {
    Bicomplex b(Q, Variance::Homological);
    for (int p = 0; p <= 1; ++p) {
      b.set_cell(p, 0, 1);
      b.set_cell(p, 1, 1);
    }
    for (int p = 0; p <= 1; ++p) {
      b.set_vertical(p, 1, Matrix::identity(Q, 1));
      b.set_horizontal(1, p, Matrix::identity(Q, 1));
    }
    CHECK_THROWS_AS(total_complex(b, 0, 2), Error);
    CHECK_NOTHROW(total_complex(b.with_column_signs(), 0, 2));
  }
  SUBCASE("mixed variance") {
    Bicomplex b(Q, Variance::Mixed);
    b.set_cell(1, 0, 1);
    b.set_cell(1, 1, 1);
    b.set_vertical(1, 0, Matrix::identity(Q, 1));
    const auto t = total_complex(b, 0, 1, true);
    CHECK(t.complex.rank(0) == 1);
    CHECK(t.complex.rank(1) == 1);
    CHECK(homology(t.complex, 0, 1).betti() == std::vector<std::size_t>{0, 0});
  }
}

TEST_CASE("induced maps") {
  const SpecPtr g = cyclic_bar(FiniteGroup::cyclic(2), 5);
  const LinearizedModule m(g, Q);
  const auto un = std::make_shared<ChainComplex>(chain_complex(m, Normalization::Unnormalized));
  const auto no = std::make_shared<ChainComplex>(chain_complex(m, Normalization::Normalized));
  HomologyOptions reps;
  reps.representatives = true;
  const HomologyResult hu = homology(*un, 0, 4, reps);
  const HomologyResult hn = homology(*no, 0, 4, reps);

  SUBCASE("identity") {
    const ChainMap id = ChainMap::identity(un);
    for (int n = 0; n <= 4; ++n) CHECK(induced_map(id, hu, hu, n) == Matrix::identity(Q, hu.at(n).betti));
  }
  SUBCASE("zero") {
    const ChainMap z = ChainMap::zero(un, no);
    for (int n = 0; n <= 4; ++n) CHECK(induced_map(z, hu, hn, n).is_zero());
  }
  SUBCASE("quotient onto normalized chains is a quasi-isomorphism") {
    std::map<int, Matrix> comps;
    for (int n = 0; n <= 5; ++n) comps.emplace(n, normalizer(m, n).projection);
    const ChainMap q(un, no, 0, comps, "quotient");
    for (int n = 0; n <= 4; ++n) {
      const Matrix f = induced_map(q, hu, hn, n);
      CHECK(f.rows() == f.cols());
      CHECK(rank(f) == hu.at(n).betti);
    }
  }
  SUBCASE("non-chain maps are rejected") {
    std::map<int, Matrix> comps;
    comps.emplace(1, Matrix::identity(Q, un->rank(1)));
    comps.emplace(0, Matrix(Q, un->rank(0), un->rank(0)));
    CHECK_THROWS_AS(ChainMap(un, un, 0, comps), Error);
  }
}

TEST_CASE("exactness") {
  const Matrix iso = Matrix::identity(Q, 2);
  CHECK(exactness_at(iso, Matrix(Q, 1, 2)));
  CHECK(exactness_at(Matrix(Q, 2, 1), iso));
  CHECK_FALSE(exactness_at(Matrix(Q, 2, 1), Matrix(Q, 1, 2)));
  const auto v = exactness(Matrix::from_rows(Q, {{1}, {1}}), Matrix::from_rows(Q, {{1, -1}}));
  CHECK(v.exact);
  CHECK(v.image_dim == 1);
  CHECK(v.kernel_dim == 1);
  CHECK_THROWS_AS(exactness(Matrix(Q, 2, 1), Matrix(Q, 1, 3)), Error);
}

TEST_CASE("Alexander-Whitney and Eilenberg-Zilber") {
  const ModulePtr s1 = std::make_shared<LinearizedModule>(circle(5), Q);
  const auto maps = comparison_maps(s1, s1, Normalization::Unnormalized);
  SUBCASE("degree 0 is the identity") {
    CHECK(maps.aw.at(0) == Matrix::identity(Q, 1));
    CHECK(maps.ez.at(0) == Matrix::identity(Q, 1));
  }
  SUBCASE("degree 1 on tau (x) tau") {
    // (d_1 tau) (x) tau in bidegree (0,1) plus tau (x) (d_0 tau) in (1,0)
    const std::size_t x = 1 * 2 + 1;
    const Matrix& aw1 = maps.aw.at(1);
    CHECK(aw1.at(maps.product_offset.at({0, 1}) + 0 * 2 + 1, x) == Rational(1));
    CHECK(aw1.at(maps.product_offset.at({1, 0}) + 1 * 1 + 0, x) == Rational(1));
    CHECK(aw1.column(x).size() == 2);
  }
  SUBCASE("shuffles") {
    const auto s = shuffles(1, 1);
    REQUIRE(s.size() == 2);
    CHECK(s[0].sign + s[1].sign == 0);
    CHECK(shuffles(2, 2).size() == 6);
    CHECK(shuffles(3, 1).size() == 4);
  }
  SUBCASE("identities through degree 4") {
    const ModulePtr s1n = std::make_shared<LinearizedModule>(circle(5), Q);
    const IdentityReport r = check_aw_ez(s1n, s1n, 4);
    CHECK(r.passed());
    CHECK(r.checked() > 0);
    CHECK_THROWS_AS(check_aw_ez(s1n, s1n, 5), Error);
  }
}
