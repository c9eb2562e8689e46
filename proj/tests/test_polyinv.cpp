/* Tests for exact polynomials and matrix-group invariant theory: the action
 * and its composition law, invariance of the named forms, the order-55 Klein
 * group, the Weyl group of E6 and its derived subgroup, direct versus
 * Molien invariant dimensions, and finite-field singular-point scans. */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "trefoil/chartab.hpp"
#include "trefoil/permgrp.hpp"
#include "trefoil/polyinv.hpp"

using namespace trefoil;

namespace {

Cyclotomic C(long a) { return Cyclotomic(a); }

MultiPoly klein_form() { return variety("klein_cubic").forms[0]; }

const MatrixGroup& weyl_cached() {
  static const MatrixGroup w = weyl_e6();
  return w;
}

const MatrixGroup& weyl_derived_cached() {
  static const MatrixGroup d = derived_subgroup(weyl_cached());
  return d;
}

const MatrixGroup& klein55_cached() {
  static const MatrixGroup g = [] {
    auto [sigma, tau] = klein_55_generators();
    return group_closure({sigma, tau});
  }();
  return g;
}

/* Permutation matrix acting as x_i -> x_{images[i]}. */
ExactMatrix perm_matrix(int n, const std::vector<int>& images) {
  return ExactMatrix::substitution(n, images);
}

/* The ten rational nodes of the Segre cubic: sign vectors with three +1 and
 * three -1, normalized to lead with +1. */
std::vector<std::vector<long>> segre_node_signs() {
  std::vector<std::vector<long>> nodes;
  for (int mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(mask) != 3) continue;
    std::vector<long> v(6);
    for (int i = 0; i < 6; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
    if (v[0] == 1) nodes.push_back(v);
  }
  return nodes;
}

std::vector<long> reduce_mod_p(const std::vector<long>& v, long p) {
  std::vector<long> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = ((v[i] % p) + p) % p;
  return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic and symmetric-function identities") {
  MultiPoly s1 = elementary_symmetric(6, 1);
  MultiPoly s2 = elementary_symmetric(6, 2);
  MultiPoly s3 = elementary_symmetric(6, 3);
  MultiPoly s4 = elementary_symmetric(6, 4);
  CHECK(s1.terms().size() == 6);
  CHECK(s2.terms().size() == 15);
  CHECK(s3.terms().size() == 20);
  CHECK(s4.terms().size() == 15);
  for (const MultiPoly* s : {&s1, &s2, &s3, &s4}) CHECK(s->is_homogeneous());

  // Newton's identity p3 = 3 sigma3 + sigma1^3 - 3 sigma1 sigma2 ties the
  // power-sum and elementary descriptions of the same cubic together.
  MultiPoly lhs = power_sum(6, 3);
  MultiPoly rhs = s3.scaled(C(3)) + s1 * s1 * s1 - (s1 * s2).scaled(C(3));
  CHECK(lhs == rhs);

  MultiPoly k = klein_form();
  CHECK(k.nvars() == 5);
  CHECK(k.terms().size() == 5);
  CHECK(k.degree() == 3);
  CHECK(k.is_homogeneous());

  // d/dx1 of the Klein cubic is 2 x1 x2 + x5^2.
  MultiPoly d1 = k.partial_derivative(1);
  MultiPoly expect = MultiPoly::monomial(5, {1, 1, 0, 0, 0}, C(2)) +
                     MultiPoly::monomial(5, {0, 0, 0, 0, 2}, C(1));
  CHECK(d1 == expect);

  std::vector<Cyclotomic> ones(5, C(1));
  CHECK(k.evaluate(ones) == C(5));

  MultiPoly zero = k - k;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(zero.is_homogeneous());

  MultiPoly mixed = k + MultiPoly::variable(5, 1);
  CHECK_FALSE(mixed.is_homogeneous());
  CHECK(mixed.degree() == 3);

  CHECK_THROWS_AS(elementary_symmetric(4, 5), DomainError);
  CHECK_THROWS_AS(k.partial_derivative(6), DomainError);
  CHECK_THROWS_AS(k.evaluate({C(1), C(2)}), DomainError);
}

TEST_CASE("polynomial text round-trips") {
  MultiPoly k = klein_form();
  CHECK(MultiPoly::from_string(5, k.to_string()) == k);

  MultiPoly s3 = elementary_symmetric(6, 3);
  CHECK(MultiPoly::from_string(6, s3.to_string()) == s3);

  // Implicit unit coefficient and repeated variables.
  CHECK(MultiPoly::from_string(3, "x1^2*x2") ==
        MultiPoly::monomial(3, {2, 1, 0}, C(1)));
  CHECK(MultiPoly::from_string(3, "x1*x1*x2") ==
        MultiPoly::monomial(3, {2, 1, 0}, C(1)));
  CHECK(MultiPoly::from_string(2, "-2/3*x2^4") ==
        MultiPoly::monomial(2, {0, 4}, Cyclotomic(Rat(-2, 3))));
  CHECK(MultiPoly::from_string(2, "5") ==
        MultiPoly::monomial(2, {0, 0}, C(5)));
  CHECK(MultiPoly::from_string(2, "0").is_zero());

  // A cyclotomic coefficient survives the round trip.
  MultiPoly cyc = MultiPoly::monomial(2, {1, 1}, Cyclotomic::zeta(3));
  CHECK(MultiPoly::from_string(2, cyc.to_string()) == cyc);

  // Cancellation happens during parsing.
  CHECK(MultiPoly::from_string(2, "1*x1 + -1*x1").is_zero());

  CHECK_THROWS_AS(MultiPoly::from_string(2, ""), ParseError);
  CHECK_THROWS_AS(MultiPoly::from_string(2, "x3"), ParseError);
  CHECK_THROWS_AS(MultiPoly::from_string(2, "x0"), ParseError);
  CHECK_THROWS_AS(MultiPoly::from_string(2, "x1^0"), ParseError);
  CHECK_THROWS_AS(MultiPoly::from_string(2, "x1 + + x2"), ParseError);
}

TEST_CASE("exact matrices: determinants, inverses, serialization") {
  auto [sigma, tau] = klein_55_generators();
  CHECK(sigma.dim() == 5);
  CHECK(tau.dim() == 5);
  // The 5-cycle is even and the diagonal exponents sum to 22 = 0 mod 11,
  // so both determinants are 1.
  CHECK(sigma.det() == C(1));
  CHECK(tau.det() == C(1));

  CHECK(sigma * sigma.inverse() == ExactMatrix::identity(5));
  CHECK(tau.inverse() * tau == ExactMatrix::identity(5));

  ExactMatrix singular(2);
  singular.at(0, 0) = C(1);
  singular.at(1, 0) = C(1);
  CHECK(singular.det().is_zero());
  CHECK_THROWS_AS(singular.inverse(), DomainError);

  ExactMatrix ext = extend_fixing_first(sigma);
  CHECK(ext.dim() == 6);
  CHECK(ext.at(0, 0) == C(1));
  CHECK(ext.at(1, 2) == sigma.at(0, 1));
  CHECK(ext.det() == sigma.det());

  CHECK(sigma.key() != tau.key());
  CHECK(sigma.is_small_integer());
  CHECK_FALSE(tau.is_small_integer());
}

TEST_CASE("action: identity, named symmetries, composition law") {
  MultiPoly k = klein_form();
  CHECK(act(ExactMatrix::identity(5), k) == k);

  // The cyclic substitution x_i -> x_{i+1} preserves the Klein cubic.
  ExactMatrix shift = perm_matrix(5, {1, 2, 3, 4, 0});
  CHECK(act(shift, k) == k);

  // Any permutation fixes sigma_4 (take a transposition and a 6-cycle).
  MultiPoly s4 = elementary_symmetric(6, 4);
  CHECK(act(perm_matrix(6, {1, 0, 2, 3, 4, 5}), s4) == s4);
  CHECK(act(perm_matrix(6, {1, 2, 3, 4, 5, 0}), s4) == s4);

  CHECK_THROWS_AS(act(ExactMatrix::identity(4), k), DomainError);

  // act(gh, F) = act(h, act(g, F)) on seeded random triples.
  std::mt19937 rng(20260822);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> expo(0, 2);
  for (int trial = 0; trial < 60; ++trial) {
    ExactMatrix g(3), h(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        g.at(i, j) = C(entry(rng));
        h.at(i, j) = C(entry(rng));
      }
    MultiPoly f(3);
    for (int t = 0; t < 3; ++t)
      f += MultiPoly::monomial(
          3, {expo(rng), expo(rng), expo(rng)}, C(entry(rng)));
    CHECK(act(g * h, f) == act(h, act(g, f)));
  }
}

TEST_CASE("invariance of the registry forms under their groups") {
  // Segre forms under the symmetric group on six letters.
  Variety segre = variety("segre_cubic");
  std::vector<ExactMatrix> s6 = {perm_matrix(6, {1, 0, 2, 3, 4, 5}),
                                 perm_matrix(6, {1, 2, 3, 4, 5, 0})};
  for (const MultiPoly& f : segre.forms) CHECK(is_invariant(f, s6));

  // Burkhardt forms under the same group.
  Variety burk = variety("burkhardt");
  for (const MultiPoly& f : burk.forms) CHECK(is_invariant(f, s6));

  // Seeded random permutations for good measure.
  std::mt19937 rng(7);
  std::vector<int> images = {0, 1, 2, 3, 4, 5};
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(images.begin(), images.end(), rng);
    ExactMatrix m = perm_matrix(6, images);
    for (const MultiPoly& f : segre.forms) CHECK(act(m, f) == f);
    for (const MultiPoly& f : burk.forms) CHECK(act(m, f) == f);
  }

  // X6' forms under the alternating group on seven letters.
  Variety x6 = variety("x6prime");
  std::vector<ExactMatrix> a7 = {perm_matrix(7, {1, 2, 0, 3, 4, 5, 6}),
                                 perm_matrix(7, {1, 2, 3, 4, 5, 6, 0})};
  for (const MultiPoly& f : x6.forms) CHECK(is_invariant(f, a7));

  // A generic non-symmetry: a transposition does not fix the Klein cubic.
  MultiPoly k = klein_form();
  CHECK_FALSE(is_invariant(k, {perm_matrix(5, {1, 0, 2, 3, 4})}));

  CHECK_THROWS_AS(
      is_invariant(k + MultiPoly::variable(5, 1), s6),
      DomainError);
}

TEST_CASE("the order-55 Klein group and its invariants") {
  auto [sigma, tau] = klein_55_generators();

  // tau is diag(z^1, z^9, z^4, z^3, z^5) with z = zeta_11.
  Cyclotomic z = Cyclotomic::zeta(11);
  std::vector<long> exps = {1, 9, 4, 3, 5};
  for (int i = 0; i < 5; ++i) {
    Cyclotomic p = C(1);
    for (long t = 0; t < exps[i]; ++t) p *= z;
    CHECK(tau.at(i, i) == p);
    CHECK((2 * exps[i] + exps[(i + 1) % 5]) % 11 == 0);
  }

  const MatrixGroup& g = klein55_cached();
  CHECK(g.size() == 55);
  CHECK(g.order() == Int(55));
  CHECK(g.contains(ExactMatrix::identity(5)));
  CHECK(g.contains(sigma * tau));
  CHECK(sigma * tau != tau * sigma);

  MultiPoly k = klein_form();
  CHECK(is_invariant(k, {sigma, tau}));

  // The Palatini quartic is fixed by the same group extended by a fixed
  // zeroth coordinate.
  Variety pal = variety("palatini");
  CHECK(is_invariant(pal.forms[0],
                     {extend_fixing_first(sigma), extend_fixing_first(tau)}));

  // Cubic invariants of the 55-group form a 1-dimensional space spanned by
  // the Klein cubic: diagonal invariance under tau forces the weight
  // condition 2a_i + a_{i+1} = 0 mod 11, which selects exactly the five
  // Klein monomials, and the cyclic shift then glues them into one line.
  // The generator-kernel computation, the averaging projector, and the
  // trace-based Molien count must all agree.
  CHECK(invariant_space_dim_generators(5, {sigma, tau}, 3) == 1);
  CHECK(invariant_space_dim_direct(g, 3) == 1);
  CHECK(molien_count_from_traces(g, 3) == Rat(1));
  CHECK(reynolds(k, g) == k);
}

TEST_CASE("Reynolds averaging") {
  MultiPoly x1cubed = MultiPoly::monomial(5, {3, 0, 0, 0, 0}, C(1));
  MatrixGroup trivial = group_closure({ExactMatrix::identity(5)});
  CHECK(trivial.size() == 1);
  CHECK(reynolds(x1cubed, trivial) == x1cubed);

  const MatrixGroup& g = klein55_cached();
  MultiPoly k = klein_form();

  // x1^3 has nonzero weight under the diagonal generator, so its average
  // over the group vanishes.
  CHECK(reynolds(x1cubed, g).is_zero());

  // The monomial x1^2 x2 has weight zero; averaging spreads its coefficient
  // over the five Klein monomials, so 5*x1^2*x2 plus weight-nonzero noise
  // averages to exactly the Klein cubic.  Idempotence follows.
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coeff(-3, 3);
  MultiPoly f = MultiPoly::monomial(5, {2, 1, 0, 0, 0}, C(5));
  std::vector<std::vector<int>> exps = {
      {3, 0, 0, 0, 0}, {1, 1, 1, 0, 0}, {0, 2, 0, 1, 0}, {0, 0, 1, 0, 2}};
  for (const auto& e : exps) f += MultiPoly::monomial(5, e, C(coeff(rng)));
  MultiPoly once = reynolds(f, g);
  CHECK(once == k);
  CHECK(reynolds(once, g) == once);

  CHECK_THROWS_AS(reynolds(x1cubed, MatrixGroup()), DomainError);
}

TEST_CASE("Weyl group of E6: orders, derived subgroup, closure guards") {
  const MatrixGroup& w = weyl_cached();
  CHECK(w.size() == 51840);
  CHECK(w.order() == Int(51840));
  CHECK(w.contains(ExactMatrix::identity(6)));

  // Simple reflections have determinant -1.
  for (const ExactMatrix& s : w.generators()) CHECK(s.det() == C(-1));

  const MatrixGroup& d = weyl_derived_cached();
  CHECK(d.size() == 25920);
  CHECK(w.size() % d.size() == 0);
  CHECK(w.size() / d.size() == 2);

  // Derived elements sit inside W and in the determinant kernel (sampled).
  std::mt19937 rng(424242);
  std::uniform_int_distribution<std::size_t> pick(0, d.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    ExactMatrix m = d.element(pick(rng));
    CHECK(w.contains(m));
    CHECK(m.det() == C(1));
  }
  // Closure under products, beyond the construction itself.
  for (int trial = 0; trial < 40; ++trial) {
    ExactMatrix a = d.element(pick(rng));
    ExactMatrix b = d.element(pick(rng));
    CHECK(d.contains(a * b));
  }

  // The derived subgroup is perfect: its own derived subgroup fills it.
  MatrixGroup dd = derived_subgroup(d);
  CHECK(dd.size() == 25920);

  CHECK(group_closure({ExactMatrix::identity(6)}).size() == 1);
  CHECK_THROWS_AS(group_closure(w.generators(), 1000), DomainError);
}

TEST_CASE("invariant dimensions of the E6 reflection representation") {
  const MatrixGroup& w = weyl_cached();
  const MatrixGroup& d = weyl_derived_cached();

  // The derived subgroup has a unique quadratic invariant, no cubic
  // invariant, and a unique quartic invariant; the averaging projector and
  // the trace-based Molien series must agree degree by degree.
  CHECK(invariant_space_dim_direct(d, 2) == 1);
  CHECK(invariant_space_dim_direct(d, 3) == 0);
  CHECK(invariant_space_dim_direct(d, 4) == 1);
  CHECK(molien_count_from_traces(d, 2) == Rat(1));
  CHECK(molien_count_from_traces(d, 3) == Rat(0));
  CHECK(molien_count_from_traces(d, 4) == Rat(1));

  // The full reflection group: first basic invariant in degree 2, none in
  // degree 3.
  CHECK(invariant_space_dim_direct(w, 2) == 1);
  CHECK(molien_count_from_traces(w, 2) == Rat(1));
  CHECK(molien_count_from_traces(w, 3) == Rat(0));

  // Cross-check against the permutation-group pipeline: the derived
  // subgroup is the simple group of order 25920, whose character table has
  // a unique degree-6 row; its Molien counts must match the matrix side.
  GroupRef psp = group_from_spec("PSp4(3):40");
  const CharacterTable& t = character_table(psp);
  const ConjClasses& cc = psp->classes();
  std::vector<int> deg6;
  for (int i = 0; i < t.num_rows(); ++i)
    if (t.degrees[i] == 6) deg6.push_back(i);
  REQUIRE(deg6.size() == 1);
  CHECK(molien_invariant_dim(cc, t.rows[deg6[0]], 2) == 1);
  CHECK(molien_invariant_dim(cc, t.rows[deg6[0]], 3) == 0);
  CHECK(molien_invariant_dim(cc, t.rows[deg6[0]], 4) == 1);
}

TEST_CASE("variety registry") {
  const std::vector<std::string>& names = variety_names();
  CHECK(names == std::vector<std::string>{"klein_cubic", "segre_cubic",
                                          "burkhardt", "x6prime",
                                          "palatini"});
  struct Expect {
    const char* name;
    int nvars;
    std::vector<long> degrees;
  };
  std::vector<Expect> expect = {{"klein_cubic", 5, {3}},
                                {"segre_cubic", 6, {1, 3}},
                                {"burkhardt", 6, {1, 4}},
                                {"x6prime", 7, {1, 2, 3}},
                                {"palatini", 6, {4}}};
  for (const Expect& e : expect) {
    Variety v = variety(e.name);
    CHECK(v.nvars == e.nvars);
    REQUIRE(v.forms.size() == e.degrees.size());
    for (std::size_t i = 0; i < v.forms.size(); ++i) {
      CHECK(v.forms[i].degree() == e.degrees[i]);
      CHECK(v.forms[i].is_homogeneous());
      CHECK(v.forms[i].nvars() == e.nvars);
    }
  }
  CHECK(variety("palatini").forms[0].terms().size() == 11);
  CHECK_THROWS_WITH_AS(variety("quintic"),
                       doctest::Contains("segre_cubic"), DomainError);
}

TEST_CASE("Segre cubic: ten nodes, stable across primes, rank one over Q") {
  Variety segre = variety("segre_cubic");
  std::vector<std::vector<long>> expected_signs = segre_node_signs();
  REQUIRE(expected_signs.size() == 10);

  for (long p : {31L, 41L, 61L}) {
    std::vector<std::vector<long>> pts = singular_points_mod_p(segre.forms, p);
    CHECK(pts.size() == 10);
    std::vector<std::vector<long>> expected;
    for (const auto& v : expected_signs) expected.push_back(reduce_mod_p(v, p));
    std::sort(expected.begin(), expected.end());
    CHECK(pts == expected);
  }

  // Exact checks at the rational nodes: they lie on the variety and the
  // Jacobian drops to rank one (proportional gradients).
  for (const auto& v : expected_signs) {
    std::vector<Cyclotomic> pt;
    for (long x : v) pt.push_back(C(x));
    for (const MultiPoly& f : segre.forms) CHECK(f.evaluate(pt).is_zero());
    CHECK(jacobian_rank_at(segre.forms, pt) == 1);
  }

  // A smooth point for contrast.
  std::vector<Cyclotomic> smooth = {C(1), C(-1), C(0), C(0), C(0), C(0)};
  for (const MultiPoly& f : segre.forms) CHECK(f.evaluate(smooth).is_zero());
  CHECK(jacobian_rank_at(segre.forms, smooth) == 2);
}

TEST_CASE("smoothness scans for the Klein cubic and X6'") {
  Variety klein = variety("klein_cubic");
  for (long p : {13L, 23L})
    CHECK(singular_points_mod_p(klein.forms, p).empty());

  Variety x6 = variety("x6prime");
  for (long p : {11L, 13L})
    CHECK(singular_points_mod_p(x6.forms, p).empty());
}

TEST_CASE("scan guard rails") {
  Variety klein = variety("klein_cubic");
  MultiPoly zero(5);
  CHECK_THROWS_AS(singular_points_mod_p({klein.forms[0], zero}, 13),
                  DomainError);
  CHECK_THROWS_AS(singular_points_mod_p(klein.forms, 15), DomainError);
  CHECK_THROWS_AS(singular_points_mod_p(klein.forms, 211), DomainError);

  MultiPoly frac = MultiPoly::monomial(2, {3, 0}, Cyclotomic(Rat(1, 31))) +
                   MultiPoly::monomial(2, {0, 3}, C(1));
  CHECK_THROWS_AS(singular_points_mod_p({frac}, 31), DomainError);
  CHECK(singular_points_mod_p({frac}, 13).empty());

  std::vector<Cyclotomic> origin(5, C(0));
  CHECK_THROWS_AS(jacobian_rank_at(klein.forms, origin), DomainError);
  CHECK_THROWS_AS(jacobian_rank_at({zero}, {C(1), C(0), C(0), C(0), C(0)}),
                  DomainError);
}
