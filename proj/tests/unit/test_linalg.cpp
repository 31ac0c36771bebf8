#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "helpers.hpp"
#include "oracles.hpp"

#include <sstream>

#include "nilspec/intertwiner.hpp"
#include "nilspec/linalg.hpp"
#include "nilspec/matrix_io.hpp"
#include "nilspec/smith.hpp"

using namespace nilspec;
using namespace nilspec::testing;

TEST_SUITE("rationals and io") {
  TEST_CASE("rational parsing round-trips canonical forms") {
    CHECK(parse_rat("3") == 3);
    CHECK(parse_rat("-6/4") == Rat(-3, 2));
    CHECK(parse_rat("+2/1") == 2);
    CHECK(to_string(Rat(-3, 2)) == "-3/2");
    CHECK(to_string(Rat(0)) == "0");
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("2/-3"), std::invalid_argument);
  }

  TEST_CASE("matrix text format") {
    const QMat m = parse_matrix("# comment\n2 3\n1 -1/2 0\n  3 4 5\n");
    CHECK(m == QMat{{1, Rat(-1, 2), 0}, {3, 4, 5}});
    CHECK(parse_matrix(format_matrix(m)) == m);
  }

  TEST_CASE("matrix parse errors carry line and column") {
    try {
      parse_matrix("2 2\n1 2\n3 x\n", "bad.mat");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.source() == "bad.mat");
      CHECK(e.line() == 3);
      CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(parse_matrix("2 2\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("1 2\n1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("1 1\n1\n2\n"), ParseError);
  }
}

TEST_SUITE("rank kernel image") {
  TEST_CASE("rank examples") {
    CHECK(rank(QMat::identity(2)) == 2);
    CHECK(rank(QMat(2, 2)) == 0);
    CHECK(rank(QMat{{1, 2}, {2, 4}}) == 1);
  }

  TEST_CASE("kernel examples") {
    CHECK(kernel_basis(QMat::identity(3)).cols() == 0);
    CHECK(kernel_basis(QMat(2, 3)).cols() == 3);
    const QMat k = kernel_basis(QMat{{1, 1}});
    REQUIRE(k.cols() == 1);
    CHECK(k(0, 0) == -k(1, 0));
    CHECK(k(0, 0) != 0);
  }

  TEST_CASE("image examples") {
    CHECK(image_basis(QMat::identity(3)) == QMat::identity(3));
    CHECK(image_basis(QMat(2, 2)).cols() == 0);
    const QMat im = image_basis(QMat{{1}, {2}});
    REQUIRE(im.cols() == 1);
    CHECK(im(1, 0) == 2 * im(0, 0));
  }

  TEST_CASE("bases are in reduced column echelon form") {
    const QMat m{{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}};
    const QMat k = kernel_basis(m);
    CHECK(k.cols() == 2);
    CHECK((m * k).is_zero());
    // transpose of a reduced column echelon matrix is in RREF: it is its own RREF
    CHECK(rref(k.transpose()).reduced == k.transpose());
    const QMat im = image_basis(m);
    CHECK(rref(im.transpose()).reduced == im.transpose());
  }

  TEST_CASE("rank-nullity and rank against the naive oracle") {
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
      const auto r = static_cast<std::size_t>(uniform(rng, 0, 5));
      const auto c = static_cast<std::size_t>(uniform(rng, 0, 5));
      QMat m = random_matrix(rng, r, c, -2, 2);
      if (c > 1 && coin(rng)) {
        for (std::size_t i = 0; i < r; ++i) m(i, c - 1) = m(i, 0) + m(i, 1 % c);
      }
      const auto rk = rank(m);
      CHECK(rk == naive_rank(m));
      const QMat k = kernel_basis(m);
      CHECK(rk + k.cols() == c);
      CHECK((m * k).is_zero());
      CHECK(naive_rank(k) == k.cols());
      const QMat im = image_basis(m);
      CHECK(im.cols() == rk);
      CHECK(naive_rank(hconcat(im, m)) == rk);
    }
  }
}

TEST_SUITE("determinants and characteristic polynomials") {
  TEST_CASE("char_poly examples") {
    CHECK(char_poly(diag({2, 3})) == hp({1, -5, 6}));
    CHECK(char_poly(QMat{{0, 1}, {-1, 0}}) == hp({1, 0, 1}));
    CHECK(char_poly(QMat{{2, 1}, {1, 1}}) == hp({1, -3, 1}));
    CHECK_THROWS_AS(char_poly(QMat(2, 3)), ShapeError);
  }

  TEST_CASE("char_poly and determinant agree with independent oracles") {
    Rng rng(12);
    for (int t = 0; t < 150; ++t) {
      const auto n = static_cast<std::size_t>(uniform(rng, 1, 5));
      QMat m = random_matrix(rng, n, n, -4, 4);
      if (coin(rng, 0.3)) m(0, 0) = Rat(uniform(rng, -5, 5)) / 3;
      const Poly p = char_poly(m);
      CHECK(p == faddeev_leverrier(m));
      CHECK(determinant(m) == leibniz_det(m));
      // Cayley-Hamilton
      CHECK(poly_at(p, m).is_zero());
      // transpose invariance
      CHECK(char_poly(m.transpose()) == p);
    }
  }

  TEST_CASE("inverse, solve and companion") {
    const QMat a{{2, 1}, {1, 1}};
    CHECK(inverse(a) * a == QMat::identity(2));
    CHECK_THROWS_AS(inverse(QMat{{1, 2}, {2, 4}}), std::domain_error);
    const std::vector<Rat> b{3, 2};
    const auto x = solve(a, b);
    REQUIRE(x);
    CHECK(a.apply(*x) == b);
    const std::vector<Rat> inconsistent{1, 3};
    CHECK_FALSE(solve(QMat{{1, 2}, {2, 4}}, inconsistent));
    const Poly p = hp({1, -2, 0, 5});
    CHECK(char_poly(companion(p)) == p);
    CHECK(evaluate(p, companion(p)).is_zero());
  }
}

TEST_SUITE("smith normal form") {
  ZMat z(std::initializer_list<std::initializer_list<Integer>> rows) { return ZMat(rows); }

  void check_smith(const ZMat& m) {
    const SmithForm s = smith_normal_form(m);
    ZMat d(m.rows(), m.cols());
    for (std::size_t k = 0; k < s.diagonal.size(); ++k) d(k, k) = s.diagonal[k];
    CHECK(s.left * m * s.right == d);
    CHECK(abs(determinant(s.left)) == 1);
    CHECK(abs(determinant(s.right)) == 1);
    for (std::size_t k = 0; k + 1 < s.diagonal.size(); ++k) {
      CHECK(s.diagonal[k] >= 0);
      if (s.diagonal[k] == 0) {
        CHECK(s.diagonal[k + 1] == 0);
      } else {
        CHECK(s.diagonal[k + 1] % s.diagonal[k] == 0);
      }
    }
  }

  TEST_CASE("examples") {
    const auto id = smith_normal_form(ZMat::identity(3)).diagonal;
    CHECK(id == std::vector<Integer>{1, 1, 1});
    CHECK(smith_normal_form(z({{2, 0}, {0, 4}})).diagonal == std::vector<Integer>{2, 4});
    CHECK(smith_normal_form(z({{2, 4}, {6, 8}})).diagonal == std::vector<Integer>{2, 4});
    check_smith(z({{2, 4}, {6, 8}}));
    check_smith(z({{0, 0}, {0, 0}}));
    check_smith(z({{6, 10, 15}}));
  }

  TEST_CASE("randomized invariants") {
    Rng rng(13);
    for (int t = 0; t < 150; ++t) {
      const auto r = static_cast<std::size_t>(uniform(rng, 1, 4));
      const auto c = static_cast<std::size_t>(uniform(rng, 1, 4));
      check_smith(to_integer(random_matrix(rng, r, c, -9, 9)));
    }
  }

  TEST_CASE("integer determinant matches Leibniz") {
    Rng rng(14);
    for (int t = 0; t < 100; ++t) {
      const auto n = static_cast<std::size_t>(uniform(rng, 1, 5));
      const QMat m = random_matrix(rng, n, n, -6, 6);
      CHECK(Rat(determinant(to_integer(m))) == leibniz_det(m));
    }
    CHECK(abs(determinant(random_unimodular(rng, 5, 30))) == 1);
  }
}

TEST_SUITE("intertwiners") {
  TEST_CASE("examples") {
    const auto scalars = intertwiner_space(QMat{{2}}, QMat{{2}});
    REQUIRE(scalars.size() == 1);
    CHECK(scalars[0] == QMat{{1}});
    CHECK(intertwiner_space(diag({2, 2}), QMat{{1, 1}, {0, 1}}).empty());
    const auto e11 = intertwiner_space(diag({2, 3}), diag({2, 5}));
    REQUIRE(e11.size() == 1);
    CHECK(e11[0] == QMat{{1, 0}, {0, 0}});
  }

  TEST_CASE("rectangular shapes follow h f = g h") {
    const QMat f = diag({2, 3, 3});
    const QMat g = diag({3, 7});
    const auto space = intertwiner_space(f, g);
    CHECK(space.size() == 2);  // h_{1,2}, h_{1,3}
    for (const auto& h : space) {
      CHECK(h.rows() == 2);
      CHECK(h.cols() == 3);
      CHECK(h * f == g * h);
    }
  }

  TEST_CASE("randomized: basis elements intertwine and dimension matches the system rank") {
    Rng rng(15);
    for (int t = 0; t < 100; ++t) {
      const auto n = static_cast<std::size_t>(uniform(rng, 1, 3));
      const auto m = static_cast<std::size_t>(uniform(rng, 1, 3));
      QMat f = random_matrix(rng, n, n, -2, 2);
      QMat g = random_matrix(rng, m, m, -2, 2);
      if (coin(rng)) {  // force a shared eigenvalue now and then
        f(0, 0) = 1;
        for (std::size_t j = 1; j < n; ++j) f(0, j) = 0;
        g(0, 0) = 1;
        for (std::size_t i = 1; i < m; ++i) g(i, 0) = 0;
      }
      const auto space = intertwiner_space(f, g);
      for (const auto& h : space) CHECK(h * f == g * h);
      // system built independently: vec(h f - g h) = (f^T (x) I - I (x) g) vec(h)
      const QMat sys = naive_kronecker(f.transpose(), QMat::identity(m)) - naive_kronecker(QMat::identity(n), g);
      CHECK(space.size() == n * m - naive_rank(sys));
    }
  }

  TEST_CASE("no-intertwiner confirmation and precondition errors") {
    auto zmat = [](const QMat& q) { return to_integer(q); };
    auto check = verify_no_intertwiner(zmat(diag({2, 2})), zmat(QMat::identity(2)));
    CHECK(check.confirmed);
    CHECK_FALSE(check.witness);
    check = verify_no_intertwiner(zmat(QMat{{2}}), zmat(QMat{{1}}));
    CHECK(check.confirmed);
    CHECK_THROWS_AS(verify_no_intertwiner(zmat(QMat{{2}}), zmat(QMat{{2}})), NotUnimodularError);
    try {
      verify_no_intertwiner(zmat(QMat{{2}}), zmat(QMat{{2}}));
    } catch (const NotUnimodularError& e) {
      CHECK(e.det() == 2);
    }
    CHECK_THROWS_AS(verify_no_intertwiner(zmat(QMat{{1}}), zmat(QMat{{1}})), NotExpandingError);
    CHECK_THROWS_AS(verify_no_intertwiner(zmat(QMat{{2, 1}, {1, 1}}), zmat(QMat{{1}})), NotExpandingError);
  }
}
