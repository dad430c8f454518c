#include "lieops/lie_core.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace lieops;

namespace {

const char* const supported[] = {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "C4",
                                 "D4", "D5", "G2", "F4", "E6", "E7", "E8"};

Weight random_weight(std::mt19937& rng, int rank) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  RationalVector c;
  for (int i = 0; i < rank; ++i) c.push_back(make_rational(num(rng), den(rng)));
  return Weight(c);
}

}  // namespace

TEST_CASE("parse_dynkin builds standard Cartan matrices") {
  CHECK(parse_dynkin("A1").cartan_matrix == std::vector<std::vector<int>>{{2}});
  const auto g2 = parse_dynkin("G2");
  CHECK(g2.rank == 2);
  CHECK(std::multiset<int>{g2.entry(0, 1), g2.entry(1, 0)} == std::multiset<int>{-1, -3});
  const auto b2 = parse_dynkin("B2");
  CHECK(std::multiset<int>{b2.entry(0, 1), b2.entry(1, 0)} == std::multiset<int>{-1, -2});
  CHECK(parse_dynkin("e6").name() == "E6");
}

TEST_CASE("parse_dynkin rejects unknown series and ranks") {
  CHECK_THROWS_AS(parse_dynkin("Z9"), ParseError);
  CHECK_THROWS_AS(parse_dynkin("B1"), ParseError);
  CHECK_THROWS_AS(parse_dynkin("C2"), ParseError);
  CHECK_THROWS_AS(parse_dynkin("D3"), ParseError);
  CHECK_THROWS_AS(parse_dynkin("G3"), ParseError);
  CHECK_THROWS_AS(parse_dynkin("E9"), ParseError);
  CHECK_THROWS_AS(parse_dynkin("A"), ParseError);
  CHECK_THROWS_AS(parse_dynkin(""), ParseError);
}

TEST_CASE("Cartan determinants match the standard values") {
  CHECK(cartan_determinant(parse_dynkin("A4")) == 5);
  CHECK(cartan_determinant(parse_dynkin("B3")) == 2);
  CHECK(cartan_determinant(parse_dynkin("C4")) == 2);
  CHECK(cartan_determinant(parse_dynkin("D5")) == 4);
  CHECK(cartan_determinant(parse_dynkin("E6")) == 3);
  CHECK(cartan_determinant(parse_dynkin("E7")) == 2);
  CHECK(cartan_determinant(parse_dynkin("E8")) == 1);
  CHECK(cartan_determinant(parse_dynkin("F4")) == 1);
  CHECK(cartan_determinant(parse_dynkin("G2")) == 1);
}

TEST_CASE("positive roots agree with the Weyl-orbit oracle") {
  for (const std::string name : supported) {
    CAPTURE(name);
    const auto d = parse_dynkin(name);
    const auto roots = positive_roots(d);
    const auto expected = oracle::positive_roots(d);
    REQUIRE(roots.size() == expected.size());
    std::set<std::pair<std::vector<long>, bool>> a, b;
    for (const auto& r : roots) a.emplace(std::vector<long>(r.coords.begin(), r.coords.end()), r.is_long());
    for (const auto& r : expected) b.emplace(r.coords, r.is_long);
    CHECK(a == b);
  }
}

TEST_CASE("root counts follow the series formulas") {
  for (int r = 1; r <= 6; ++r) CHECK(positive_roots(make_cartan_datum(Series::A, r)).size() == r * (r + 1) / 2u);
  for (int r = 2; r <= 5; ++r) CHECK(positive_roots(make_cartan_datum(Series::B, r)).size() == r * r * 1u);
  for (int r = 3; r <= 5; ++r) CHECK(positive_roots(make_cartan_datum(Series::C, r)).size() == r * r * 1u);
  for (int r = 4; r <= 6; ++r) CHECK(positive_roots(make_cartan_datum(Series::D, r)).size() == r * (r - 1) * 1u);
  CHECK(positive_roots(parse_dynkin("G2")).size() == 6);
  CHECK(positive_roots(parse_dynkin("F4")).size() == 24);
  CHECK(positive_roots(parse_dynkin("E8")).size() == 120);
}

TEST_CASE("G2 positive roots in canonical order") {
  const auto roots = positive_roots(parse_dynkin("G2"));
  const std::vector<std::vector<int>> expected{{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}};
  REQUIRE(roots.size() == 6);
  for (int i = 0; i < 6; ++i) CHECK(roots[i].coords == expected[i]);
  CHECK(root_expression(roots[3]) == "α1 + 2α2");
  CHECK(root_expression(roots[5]) == "2α1 + 3α2");
  CHECK(root_label(roots[5], roots) == "α6");
  CHECK(root_label(-roots[2], roots) == "-α3");
  CHECK(roots[0].is_long());
  CHECK_FALSE(roots[1].is_long());
  CHECK(roots[4].is_long());
}

TEST_CASE("A2 positive roots") {
  const auto roots = positive_roots(parse_dynkin("A2"));
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].coords == std::vector<int>{1, 0});
  CHECK(roots[1].coords == std::vector<int>{0, 1});
  CHECK(roots[2].coords == std::vector<int>{1, 1});
}

TEST_CASE("invariant form normalization") {
  CHECK(invariant_form(parse_dynkin("A1")).norm2(positive_roots(parse_dynkin("A1"))[0]) == 2);
  const auto g2 = invariant_form(parse_dynkin("G2"));
  CHECK(g2.gram(0, 0) == 2);
  CHECK(g2.gram(1, 1) == make_rational(2, 3));
  for (const char* name : supported) {
    CAPTURE(name);
    const auto d = parse_dynkin(name);
    const auto form = invariant_form(d);
    for (const Root& r : form.positive_roots()) {
      if (r.is_long()) CHECK(form.norm2(r) == 2);
      else CHECK(form.norm2(r) < 2);
    }
    for (int i = 0; i < d.rank; ++i)
      for (int j = 0; j < d.rank; ++j) {
        CHECK(form.gram(i, j) == form.gram(j, i));
        CHECK(2 * form.gram(i, j) / form.gram(j, j) == d.entry(i, j));
      }
  }
  CHECK_THROWS_AS(invariant_form(parse_dynkin("A2"), 0), DomainError);
}

TEST_CASE("delta is half the sum of the positive roots") {
  for (const char* name : supported) {
    CAPTURE(name);
    const auto d = parse_dynkin(name);
    const auto form = invariant_form(d);
    Weight sum = Weight::zero(d.rank);
    for (const Root& r : form.positive_roots()) sum += root_to_weight(r, d);
    CHECK(make_rational(1, 2) * sum == delta(d));
    for (const Root& r : form.positive_roots())
      if (r.height() == 1) {
        CHECK(coroot_pairing(delta(d), r, form) == 1);
        CHECK(2 * form(delta(d), r) == form.norm2(r));
      }
  }
}

TEST_CASE("coroot pairing with fundamental weights is the Kronecker delta") {
  for (const char* name : {"B3", "C3", "G2", "F4"}) {
    const auto d = parse_dynkin(name);
    const auto form = invariant_form(d, make_rational(-7, 5));
    for (int i = 0; i < d.rank; ++i)
      for (int j = 0; j < d.rank; ++j) {
        Root a{std::vector<int>(d.rank, 0)};
        a.coords[i] = 1;
        CHECK(coroot_pairing(Weight::fundamental(d.rank, j), a, form) == (i == j ? 1 : 0));
      }
  }
}

TEST_CASE("pairing is scale independent while the form scales") {
  std::mt19937 rng(11);
  const auto d = parse_dynkin("B3");
  const auto f1 = invariant_form(d);
  const auto f2 = invariant_form(d, make_rational(-2));
  const auto f3 = invariant_form(d, make_rational(7, 3));
  for (int trial = 0; trial < 50; ++trial) {
    const Weight v = random_weight(rng, 3), w = random_weight(rng, 3);
    for (const Root& a : f1.positive_roots()) {
      CHECK(coroot_pairing(v, a, f1) == coroot_pairing(v, a, f2));
      CHECK(coroot_pairing(v, a, f1) == coroot_pairing(v, a, f3));
    }
    CHECK(f2(v, w) == -2 * f1(v, w));
    CHECK(f3(v, w) == make_rational(7, 3) * f1(v, w));
  }
}

TEST_CASE("reflections are isometric involutions") {
  std::mt19937 rng(7);
  int checked = 0;
  for (const char* name : {"A3", "B3", "C3", "G2", "D4", "F4"}) {
    const auto d = parse_dynkin(name);
    const auto form = invariant_form(d);
    for (int trial = 0; trial < 1000 / 6 + 1; ++trial) {
      const Weight v = random_weight(rng, d.rank);
      for (const Root& a : form.positive_roots()) {
        const Weight s = reflect(v, a, form);
        CHECK(reflect(s, a, form) == v);
        CHECK(reflect(v, -a, form) == s);
        CHECK(form.norm2(s) == form.norm2(v));
      }
      ++checked;
    }
  }
  CHECK(checked >= 1000);
}

TEST_CASE("reflection examples") {
  const auto a1 = parse_dynkin("A1");
  const auto f = invariant_form(a1);
  const Root alpha = f.positive_roots()[0];
  CHECK(reflect(Weight::from_ints({-2}), alpha, f) == Weight::from_ints({2}));
  // shifted action: sigma(-2w + delta) - delta = 0
  CHECK(reflect(Weight::from_ints({-2}) + delta(a1), alpha, f) - delta(a1) == Weight::zero(1));
  for (const char* name : {"A4", "B3", "G2", "E6"}) {
    const auto d = parse_dynkin(name);
    const auto form = invariant_form(d);
    for (const Root& a : form.positive_roots())
      if (a.height() == 1) CHECK(reflect(delta(d), a, form) == delta(d) - root_to_weight(a, d));
  }
  CHECK_THROWS_AS(reflect(Weight::zero(2), Root{{1, 4}}, invariant_form(parse_dynkin("G2"))), DomainError);
}

TEST_CASE("basis conversions round trip") {
  std::mt19937 rng(3);
  for (const char* name : {"A4", "B4", "C3", "D5", "G2", "F4", "E7"}) {
    const auto d = parse_dynkin(name);
    const auto form = invariant_form(d);
    for (int trial = 0; trial < 20; ++trial) {
      const Weight v = random_weight(rng, d.rank);
      CHECK(root_basis_to_weight(weight_to_root_basis(v, d), d) == v);
      CHECK(form.to_root_basis(v) == weight_to_root_basis(v, d));
    }
  }
}

TEST_CASE("Weyl orbits") {
  const auto a1 = invariant_form(parse_dynkin("A1"));
  CHECK(weyl_orbit(delta(a1.datum()), a1).size() == 2);
  CHECK(weyl_orbit(Weight::zero(1), a1).size() == 1);
  const auto g2 = invariant_form(parse_dynkin("G2"));
  CHECK(weyl_orbit(delta(g2.datum()), g2).size() == 12);
  CHECK(weyl_orbit(Weight::zero(2), g2) == std::vector<Weight>{Weight::zero(2)});
  for (const char* name : {"A3", "A4", "B3", "B4", "C3", "D4", "G2", "F4"}) {
    CAPTURE(name);
    const auto d = parse_dynkin(name);
    const auto form = invariant_form(d);
    const auto orbit = weyl_orbit(delta(d), form);
    CHECK(Integer(static_cast<unsigned long>(orbit.size())) == weyl_group_order(d));
    CHECK(orbit.size() == oracle::weyl_group(d).size());
    CHECK(std::is_sorted(orbit.begin(), orbit.end()));
  }
}

TEST_CASE("Weyl orbit caps") {
  const auto e8 = invariant_form(parse_dynkin("E8"));
  CHECK_THROWS_AS(weyl_orbit(delta(e8.datum()), e8), CapExceeded);
  const auto a3 = invariant_form(parse_dynkin("A3"));
  WeylCaps tight;
  tight.max_orbit = 10;
  CHECK_THROWS_AS(weyl_orbit(delta(a3.datum()), a3, tight), CapExceeded);
  CHECK(weyl_orbit(Weight::fundamental(3, 0), a3, tight).size() == 4);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("7/3") == make_rational(7, 3));
  CHECK(parse_rational("-2") == -2);
  CHECK(parse_rational("-4/6") == make_rational(-2, 3));
  CHECK_THROWS_AS(parse_rational("4/-6"), ParseError);
  CHECK(make_rational(3, -6) == make_rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK(parse_int_list("-3,1") == std::vector<long>{-3, 1});
  CHECK(parse_int_list("").empty());
  CHECK_THROWS_AS(parse_int_list("1,,2"), ParseError);
}
