#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "helpers.hpp"
#include "oracles.hpp"

#include "nilspec/chain_complex.hpp"
#include "nilspec/linalg.hpp"
#include "nilspec/lie.hpp"

using namespace nilspec;
using namespace nilspec::testing;

TEST_SUITE("cochain complexes") {
  TEST_CASE("construction rejects bad shapes and d^2 != 0") {
    CHECK_THROWS_AS(CochainComplex({1, 1}, {QMat(2, 1)}), ComplexError);
    CHECK_THROWS_AS(CochainComplex({1, 1}, {}), ComplexError);
    CHECK_THROWS_AS(CochainComplex({1, 1, 1}, {QMat{{1}}, QMat{{1}}}), ComplexError);
    CHECK_NOTHROW(CochainComplex({1, 1, 1}, {QMat{{1}}, QMat{{0}}}));
  }

  TEST_CASE("cohomology examples") {
    CHECK(betti_numbers(CochainComplex::with_zero_differentials({1, 3, 1})) == std::vector<std::size_t>{1, 3, 1});
    CHECK(betti_numbers(CochainComplex({1, 1}, {QMat{{1}}})) == std::vector<std::size_t>{0, 0});
    CHECK(betti_numbers(ce_complex(LieAlgebra::heisenberg(1))) == std::vector<std::size_t>{1, 2, 2, 1});
  }

  TEST_CASE("cohomology bases: cocycles, complement, projection") {
    Rng rng(41);
    for (int t = 0; t < 60; ++t) {
      const auto c = random_complex(rng, static_cast<std::size_t>(uniform(rng, 1, 4)));
      const auto h = cohomology(c.complex);
      CHECK(betti_numbers(c.complex) == c.betti());
      long chi_h = 0;
      for (std::size_t i = 0; i < h.size(); ++i) {
        const auto& hd = h[i];
        CHECK(hd.dimension == c.h[i]);
        CHECK((c.complex.differential(i) * hd.representatives).is_zero());
        // representatives together with coboundaries are independent and
        // span the cocycles
        const QMat joined = hconcat(hd.representatives, hd.coboundaries);
        CHECK(naive_rank(joined) == joined.cols());
        CHECK(joined.cols() == hd.cocycles.cols());
        CHECK(hd.projection * hd.representatives == QMat::identity(hd.dimension));
        CHECK((hd.projection * hd.coboundaries).is_zero());
        chi_h += (i % 2 ? -1 : 1) * static_cast<long>(hd.dimension);
      }
      CHECK(c.complex.euler_characteristic() == chi_h);
    }
  }
}

TEST_SUITE("chain maps") {
  TEST_CASE("non-commuting maps are rejected") {
    const CochainComplex c({1, 1}, {QMat{{1}}});
    CHECK_THROWS_AS(ChainEndomorphism(c, {QMat{{1}}, QMat{{2}}}), ComplexError);
    CHECK_NOTHROW(ChainEndomorphism(c, {QMat{{2}}, QMat{{2}}}));
  }

  TEST_CASE("induced map examples") {
    const auto c = CochainComplex::with_zero_differentials({1, 3, 2});
    const ChainEndomorphism id(c, {QMat::identity(1), QMat::identity(3), QMat::identity(2)});
    for (const auto& m : induced_on_cohomology(id)) CHECK(m == QMat::identity(m.rows()));
    const ChainEndomorphism twice(c, {QMat::identity(1) * Rat(2), QMat::identity(3) * Rat(2), QMat::identity(2) * Rat(2)});
    const auto ind = induced_on_cohomology(twice);
    CHECK(ind[1] == QMat::identity(3) * Rat(2));
    CHECK(ind[2] == QMat::identity(2) * Rat(2));
  }

  TEST_CASE("induced spectra match the known H-blocks") {
    Rng rng(42);
    for (int t = 0; t < 60; ++t) {
      const auto c = random_complex(rng, static_cast<std::size_t>(uniform(rng, 1, 3)));
      const auto f = random_chain_map(rng, c);
      const ChainEndomorphism fe(c.complex, f.maps);
      const auto ind = induced_on_cohomology(fe);
      for (std::size_t i = 0; i < ind.size(); ++i) CHECK(char_poly(ind[i]) == faddeev_leverrier(f.on_h[i]));
    }
  }

  TEST_CASE("functoriality: induced(f g) = induced(f) induced(g)") {
    Rng rng(43);
    for (int t = 0; t < 60; ++t) {
      const auto c = random_complex(rng, static_cast<std::size_t>(uniform(rng, 1, 3)));
      const ChainEndomorphism f(c.complex, random_chain_map(rng, c).maps);
      const ChainEndomorphism g(c.complex, random_chain_map(rng, c).maps);
      const auto h = cohomology(c.complex);
      const auto fg = induced_on_cohomology(f.compose(g), h);
      const auto fi = induced_on_cohomology(f, h), gi = induced_on_cohomology(g, h);
      for (std::size_t i = 0; i < fg.size(); ++i) CHECK(fg[i] == fi[i] * gi[i]);
    }
  }

  TEST_CASE("chain expansion check") {
    const auto c = CochainComplex::with_zero_differentials({1, 2, 1});
    const ChainEndomorphism id(c, {QMat::identity(1), QMat::identity(2), QMat::identity(1)});
    auto rep = chain_exp_check(id);
    CHECK_FALSE(rep.hypothesis_holds);
    CHECK_FALSE(rep.conclusion_holds);
    CHECK(rep.degrees.size() == 2);
    const ChainEndomorphism twice(c, {QMat{{2}}, diag({2, 2}), QMat{{2}}});
    rep = chain_exp_check(twice);
    CHECK(rep.hypothesis_holds);
    CHECK(rep.conclusion_holds);
    CHECK_FALSE(rep.contradiction());
  }

  TEST_CASE("expanding chain maps induce expanding cohomology maps on random complexes") {
    Rng rng(44);
    int hypotheses = 0;
    for (int t = 0; t < 120; ++t) {
      const auto c = random_complex(rng, static_cast<std::size_t>(uniform(rng, 1, 3)));
      const ChainEndomorphism f(c.complex, random_chain_map(rng, c, -4, 4).maps);
      const auto rep = chain_exp_check(f);
      CHECK_FALSE(rep.contradiction());
      if (rep.hypothesis_holds) ++hypotheses;
    }
    CHECK(hypotheses > 0);
  }
}

TEST_SUITE("exact triples") {
  TEST_CASE("short exact sequence example") {
    ExactTriple t{QMat{{1}}, QMat{{1}}, QMat{{1}}, QMat{{1}}};
    const auto rep = exact_triple_analyze(t);
    CHECK(rep.i1.injective);
    CHECK(rep.j2.surjective);
    CHECK(rep.phi.injective);
    CHECK(rep.psi.surjective);
    CHECK_FALSE(rep.any_violation());
    CHECK(rep.implications.size() == 8);
  }

  TEST_CASE("zero source example") {
    ExactTriple t{QMat(1, 0), QMat(1, 0), QMat{{1}}, QMat{{1}}};
    // psi = [1, -1] has kernel of dimension 1 but phi = 0: not exact
    CHECK_THROWS_AS(exact_triple_analyze(t), ComplexError);
    ExactTriple exact{QMat(1, 0), QMat(0, 0), QMat{{1}}, QMat(1, 0)};
    const auto rep = exact_triple_analyze(exact);
    CHECK(rep.i1.injective);
    CHECK(rep.j1.injective);
    CHECK_FALSE(rep.any_violation());
  }

  TEST_CASE("randomized exact triples against an independent rank oracle") {
    Rng rng(45);
    for (int t = 0; t < 200; ++t) {
      const ExactTriple tr = random_exact_triple(rng);
      const auto rep = exact_triple_analyze(tr);
      CHECK_FALSE(rep.any_violation());
      auto inj = [](const QMat& m) { return naive_rank(m) == m.cols(); };
      auto sur = [](const QMat& m) { return naive_rank(m) == m.rows(); };
      CHECK(rep.i1.injective == inj(tr.i1));
      CHECK(rep.j2.surjective == sur(tr.j2));
      const QMat phi = vconcat(tr.i1, tr.i2), psi = hconcat(tr.j1, -tr.j2);
      CHECK(rep.phi.injective == inj(phi));
      CHECK(rep.psi.surjective == sur(psi));
      // the injectivity and surjectivity implications, evaluated directly
      for (int swap = 0; swap < 2; ++swap) {
        const QMat& i = swap ? tr.i2 : tr.i1;
        const QMat& j = swap ? tr.j1 : tr.j2;
        if (inj(i)) CHECK(inj(j));
        if (inj(j) && inj(phi)) CHECK(inj(i));
        if (sur(i) && sur(psi)) CHECK(sur(j));
        if (sur(j)) CHECK(sur(i));
      }
    }
  }
}
