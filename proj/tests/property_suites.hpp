/* Five seeded cross-oracle property suites, shared by the doctest property
 * runner and the acceptance binary.  Each suite runs a fixed number of
 * deterministic randomized cases and reports the failure count together with
 * a description of the first failure. */

#ifndef TREFOIL_TESTS_PROPERTY_SUITES_HPP_
#define TREFOIL_TESTS_PROPERTY_SUITES_HPP_

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "trefoil/chartab.hpp"
#include "trefoil/permgrp.hpp"
#include "trefoil/polyinv.hpp"

namespace trefoil_properties {

using namespace trefoil;

struct PropertyReport {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      if (first_failure.empty()) first_failure = what;
    }
  }
};

/* ---------------- suite 1: cyclotomic field axioms ---------------- */

inline Cyclotomic random_cyclotomic(std::mt19937& rng, long conductor) {
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 3);
  std::uniform_int_distribution<long> power(0, conductor - 1);
  Cyclotomic x;
  const Cyclotomic zeta = Cyclotomic::zeta(conductor);
  const int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    Cyclotomic term(Rat(num(rng), den(rng)));
    const long k = power(rng);
    for (long i = 0; i < k; ++i) term *= zeta;
    x += term;
  }
  return x;
}

inline PropertyReport run_cyclotomic_axioms(long cases = 1000) {
  PropertyReport rep;
  rep.name = "cyclotomic field axioms";
  std::mt19937 rng(101);
  const std::vector<long> conductors = {1, 3, 4, 5, 7, 8, 12};
  std::uniform_int_distribution<std::size_t> pick(0, conductors.size() - 1);
  const Cyclotomic one(Rat(1));
  for (long i = 0; i < cases; ++i) {
    ++rep.cases;
    const Cyclotomic a = random_cyclotomic(rng, conductors[pick(rng)]);
    const Cyclotomic b = random_cyclotomic(rng, conductors[pick(rng)]);
    const Cyclotomic c = random_cyclotomic(rng, conductors[pick(rng)]);
    rep.record(a + b == b + a, "addition commutes");
    rep.record(a * b == b * a, "multiplication commutes");
    rep.record((a + b) + c == a + (b + c), "addition associates");
    rep.record((a * b) * c == a * (b * c), "multiplication associates");
    rep.record(a * (b + c) == a * b + a * c, "distributivity");
    rep.record((a - a).is_zero(), "a - a = 0");
    rep.record((-a) + a == Cyclotomic(), "-a + a = 0");
    rep.record(Cyclotomic::from_string(a.to_string()) == a, "to_string round-trip");
    rep.record((a * b).conj() == a.conj() * b.conj(), "conjugation is multiplicative");
    if (!a.is_zero()) {
      rep.record(a * a.inverse() == one, "a * a^-1 = 1");
      if (!b.is_zero()) rep.record((a / b) * b == a, "(a/b) * b = a");
    }
  }
  return rep;
}

/* ---------------- suite 2: permutation algebra ---------------- */

inline Perm random_perm(std::mt19937& rng, int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Perm::from_images(images);
}

/* Order as the lcm of cycle lengths, found by walking the cycles. */
inline long perm_order_oracle(const Perm& a) {
  std::vector<bool> seen(a.degree(), false);
  long result = 1;
  for (int p = 0; p < a.degree(); ++p) {
    if (seen[p]) continue;
    long len = 0;
    for (int q = p; !seen[q]; q = a(q)) {
      seen[q] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

inline PropertyReport run_permutation_algebra(long cases = 1000) {
  PropertyReport rep;
  rep.name = "permutation algebra";
  std::mt19937 rng(202);
  std::uniform_int_distribution<int> deg(2, 10);
  for (long i = 0; i < cases; ++i) {
    ++rep.cases;
    const int n = deg(rng);
    const Perm a = random_perm(rng, n), b = random_perm(rng, n);
    const Perm c = random_perm(rng, n), g = random_perm(rng, n);
    rep.record((a * b) * c == a * (b * c), "composition associates");
    std::uniform_int_distribution<int> point(0, n - 1);
    for (int s = 0; s < 3; ++s) {
      const int p = point(rng);
      rep.record((a * b)(p) == a(b(p)), "(a*b)(p) = a(b(p))");
    }
    rep.record((a * a.inverse()).is_identity(), "a * a^-1 = id");
    rep.record(a.inverse().inverse() == a, "double inverse");
    rep.record(a.order() == perm_order_oracle(a), "order = lcm of cycle lengths");
    rep.record((a * b).conj_by(g) == a.conj_by(g) * b.conj_by(g),
               "conjugation is a homomorphism");
    rep.record(a.conj_by(g).order() == a.order(), "conjugation preserves order");
  }
  return rep;
}

/* ---------------- suite 3: matrix action functoriality ---------------- */

inline ExactMatrix random_int_matrix(std::mt19937& rng, int dim) {
  std::uniform_int_distribution<long> entry(-2, 2);
  ExactMatrix m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m.at(i, j) = Cyclotomic(entry(rng));
  return m;
}

inline MultiPoly random_poly(std::mt19937& rng, int nvars, int max_exp, int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> expo(0, max_exp);
  std::uniform_int_distribution<long> coeff(-3, 3);
  MultiPoly f(nvars);
  const int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> exps(nvars);
    for (int v = 0; v < nvars; ++v) exps[v] = expo(rng);
    f += MultiPoly::monomial(nvars, exps, Cyclotomic(coeff(rng)));
  }
  return f;
}

inline PropertyReport run_action_functoriality(long cases = 1000) {
  PropertyReport rep;
  rep.name = "matrix action functoriality";
  std::mt19937 rng(303);
  const ExactMatrix id = ExactMatrix::identity(3);
  for (long i = 0; i < cases; ++i) {
    ++rep.cases;
    const ExactMatrix g = random_int_matrix(rng, 3), h = random_int_matrix(rng, 3);
    const MultiPoly f1 = random_poly(rng, 3, 2, 3), f2 = random_poly(rng, 3, 2, 3);
    rep.record(act(g * h, f1) == act(h, act(g, f1)), "act(gh, f) = act(h, act(g, f))");
    rep.record(act(g, f1 + f2) == act(g, f1) + act(g, f2), "act is linear");
    rep.record(act(g, f1 * f2) == act(g, f1) * act(g, f2), "act is multiplicative");
    rep.record(act(id, f1) == f1, "identity acts trivially");
  }
  return rep;
}

/* ---------------- suite 4: Reynolds projection ---------------- */

inline PropertyReport run_reynolds_projection(long cases = 1000) {
  PropertyReport rep;
  rep.name = "Reynolds projection";
  auto [sigma, tau] = klein_55_generators();
  // Three averaging groups of different flavors: a rational permutation
  // group, a diagonal group over Q(zeta_11), and their 55-element product.
  static const MatrixGroup g_sigma = group_closure({sigma});
  static const MatrixGroup g_tau = group_closure({tau});
  static const MatrixGroup g_full = group_closure({sigma, tau});
  struct Setting {
    const MatrixGroup* group;
    std::vector<ExactMatrix> gens;
  };
  const Setting settings[3] = {
      {&g_sigma, {sigma}}, {&g_tau, {tau}}, {&g_full, {sigma, tau}}};
  std::mt19937 rng(404);
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<int> total_deg(0, 3);
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::uniform_int_distribution<int> var(0, 4);
  std::uniform_int_distribution<int> which(0, 9);
  for (long i = 0; i < cases; ++i) {
    ++rep.cases;
    const int pick = which(rng);
    const Setting& s = settings[pick < 5 ? 0 : pick < 9 ? 1 : 2];
    const MatrixGroup& g = *s.group;
    // f is homogeneous (the invariance check requires a form); f2 mixes
    // degrees to exercise linearity on general polynomials.
    MultiPoly f(5), f2(5);
    const int form_degree = total_deg(rng);
    for (int t = nterms(rng); t > 0; --t) {
      std::vector<int> exps(5, 0);
      for (int k = 0; k < form_degree; ++k) ++exps[var(rng)];
      f += MultiPoly::monomial(5, exps, Cyclotomic(coeff(rng)));
    }
    for (int t = nterms(rng); t > 0; --t) {
      std::vector<int> exps(5, 0);
      const int d = total_deg(rng);
      for (int k = 0; k < d; ++k) ++exps[var(rng)];
      f2 += MultiPoly::monomial(5, exps, Cyclotomic(coeff(rng)));
    }
    const MultiPoly r = reynolds(f, g);
    rep.record(r.is_zero() || is_invariant(r, s.gens), "reynolds lands in invariants");
    rep.record(reynolds(f + f2, g) == r + reynolds(f2, g), "reynolds is linear");
    // Idempotence follows from invariance plus averaging; spot-check it
    // directly on a sample of the cases.
    if (i % 10 == 0) rep.record(reynolds(r, g) == r, "reynolds is idempotent");
  }
  return rep;
}

/* ---------------- suite 5: Molien counts and orthogonality ---------------- */

inline PropertyReport run_molien_and_orthogonality(long cases = 1000) {
  PropertyReport rep;
  rep.name = "Molien counts and orthogonality";
  std::mt19937 rng(505);

  // Part one: on random signed-permutation groups in three variables, the
  // direct invariant dimension, the generator-kernel dimension, and the
  // Molien count agree.
  const long closure_cases = 600;
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> degree_pick(1, 3);
  for (long i = 0; i < closure_cases; ++i) {
    ++rep.cases;
    std::vector<ExactMatrix> gens;
    for (int k = 0; k < 2; ++k) {
      std::vector<int> images(3);
      std::iota(images.begin(), images.end(), 0);
      std::shuffle(images.begin(), images.end(), rng);
      ExactMatrix m = ExactMatrix::substitution(3, images);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
          if (coin(rng) && !m.at(r, c).is_zero()) m.at(r, c) = -m.at(r, c);
      gens.push_back(m);
    }
    const MatrixGroup g = group_closure(gens);
    const int d = degree_pick(rng);
    const long direct = invariant_space_dim_direct(g, d);
    const long from_gens = invariant_space_dim_generators(3, gens, d);
    const Rat molien = molien_count_from_traces(g, d);
    rep.record(direct == from_gens, "direct dim = generator-kernel dim");
    rep.record(Rat(direct) == molien, "direct dim = Molien count");
  }

  // Part two: row and column orthogonality of the cached character tables.
  const std::vector<const char*> specs = {"A5", "S5", "PSL2(7)"};
  std::uniform_int_distribution<std::size_t> spec_pick(0, specs.size() - 1);
  for (long i = rep.cases; i < cases; ++i) {
    ++rep.cases;
    GroupRef g = group_from_spec(specs[spec_pick(rng)]);
    const CharacterTable& t = character_table(g);
    const ConjClasses& cc = g->classes();
    std::uniform_int_distribution<int> row(0, t.num_rows() - 1);
    std::uniform_int_distribution<int> cls(0, cc.num_classes() - 1);
    const int r1 = row(rng), r2 = row(rng);
    const Cyclotomic rows_expect = Cyclotomic(r1 == r2 ? 1 : 0);
    rep.record(inner_product(cc, t.rows[r1], t.rows[r2]) == rows_expect,
               "row orthogonality");
    const int c1 = cls(rng), c2 = cls(rng);
    Cyclotomic col_sum;
    for (int r = 0; r < t.num_rows(); ++r)
      col_sum += t.rows[r][c1] * t.rows[r][cc.inverse_class[c2]];
    const long order = g->group().order().convert_to<long>();
    const Cyclotomic col_expect = Cyclotomic(c1 == c2 ? order / cc.sizes[c1] : 0);
    rep.record(col_sum == col_expect, "column orthogonality");
  }
  return rep;
}

inline std::vector<PropertyReport> run_all_property_suites(long cases = 1000) {
  return {run_cyclotomic_axioms(cases), run_permutation_algebra(cases),
          run_action_functoriality(cases), run_reynolds_projection(cases),
          run_molien_and_orthogonality(cases)};
}

}  // namespace trefoil_properties

#endif  // TREFOIL_TESTS_PROPERTY_SUITES_HPP_
