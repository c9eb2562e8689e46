/* fano.hpp -- exact arithmetic for the numerical facts about Fano
 * threefolds that the verification suites consume: genus-linked dimension
 * counts, the Namikawa singular-point bound, the basket inequality for
 * collections of terminal cyclic quotient points, anticanonical
 * Riemann-Roch with index-2 half points, Riemann-Hurwitz signature
 * enumeration, orbit-degree divisibility, and two bounded Diophantine
 * eliminations.
 *
 * Everything is integer or rational arithmetic.  Every returned list is an
 * exhaustive enumeration inside explicit bounds, so the lists themselves
 * serve as oracles: uniqueness claims are checked by re-running the full
 * search, never by spot-checking a known answer.
 */

#ifndef TREFOIL_FANO_HPP_
#define TREFOIL_FANO_HPP_

#include <compare>
#include <vector>

#include "trefoil/exactnum.hpp"

namespace trefoil {

/* ---------- genus-linked quantities of smooth Fano threefolds ---------- */

/* dim H^0(X, -K_X) = g + 2 for a Fano threefold of genus g >= 2. */
long h0_anticanonical(long g);

/* Number of independent quadrics through the anticanonical model:
 * (g-2)(g-3)/2. */
long quadric_count(long g);

/* Lefschetz defect 4 - dim H^3(X, C) = 2g - 20. */
long lefschetz(long g);

/* Hodge number h^{1,2} of the smooth Fano threefold of genus g with Picard
 * group Z(-K).  Defined exactly for g in {2,...,10,12}; genus 11 and
 * g > 12 have no such threefold and throw DomainError. */
long fano_h12(long g);

/* Namikawa's bound on the singular points of a terminal Gorenstein Fano
 * threefold whose smoothing has invariants (rho, h12):
 * |Sing(X)| <= 20 - rho + h12. */
long namikawa_bound(long rho, long h12);

struct FanoNumerics {
  long genus = 0;
  Rat anticanonical_cube;  // -K^3
  long rho = 0;
  long h12 = 0;

  bool operator==(const FanoNumerics&) const = default;
};

/* Numerics of the smooth rho = 1 Fano threefold of genus g:
 * -K^3 = 2g - 2 and the tabulated h^{1,2}. */
FanoNumerics smooth_fano_rho1(long g);

/* The rho > 1 cases.  A smoothing is a product (del Pezzo) x P^1, so
 * -K^3 = 6(11 - rho) determines the genus via -K^3 = 2g - 2, the product
 * has h^{1,2} = 0, and the singular-point bound is namikawa_bound(rho, 0).
 * rho = 10 would force genus 4, where the anticanonical model is a
 * (2,3)-intersection with cyclic Picard group, so only rho = 7, 8, 9
 * remain: cases (7,13,13), (8,10,12), (9,7,11). */
struct RhoCase {
  long rho = 0;
  long genus = 0;
  long sing_bound = 0;

  bool operator==(const RhoCase&) const = default;
};
std::vector<RhoCase> rho_gt1_cases();

/* ---------- the basket inequality ---------- */

/* One admissible configuration: orbit i consists of orbit_sizes[i] points,
 * each carrying the (nondecreasing, all >= 2) index list indices[i].  The
 * orbits are stored sorted by (size, index list).  weight() is the sum
 * over orbits of n_i * sum_j (r_ij - 1/r_ij). */
struct BasketProfile {
  std::vector<long> orbit_sizes;
  std::vector<std::vector<long>> indices;

  long orbits() const { return static_cast<long>(orbit_sizes.size()); }
  Rat weight() const;

  bool operator==(const BasketProfile&) const = default;
  bool operator<(const BasketProfile& o) const;
};

/* All configurations whose weight is < bound (<= bound when strict is
 * false), with every orbit of size >= min_orbit and every point carrying
 * at least min_indices_per_point indices.  The search is exhaustive: each
 * index satisfies r - 1/r >= 3/2, which bounds orbit counts, sizes and
 * index lists. */
std::vector<BasketProfile> basket_inequality_cases(
    long min_orbit, const Rat& bound = Rat(24), bool strict = true,
    long min_indices_per_point = 1);

/* ---------- anticanonical Riemann-Roch with index-2 points ---------- */

/* dim |-K_X| for a threefold with n half points (index-2 cyclic quotient
 * singularities): (1/2)(-K^3) + 2 - n/4.  The -K.c2 input 24 - 3n/2
 * contributes the 2 - n/8 part and each half point -1/8. */
Rat anticanonical_dim_halfpoints(const Rat& K3, long n);

/* The integrality ladder for n half points: solving dim |-K| = l for
 * -K^3 gives -K^3 = 2l - 4 + n/2.  Lists the pairs with l in [0, l_max]
 * and -K^3 > 0.  For n = 11 the ladder starts at -K^3 = 3/2. */
struct IntegralityCase {
  long l = 0;
  Rat K3;

  bool operator==(const IntegralityCase&) const = default;
};
std::vector<IntegralityCase> solve_integrality(long n, long l_max = 10);

/* ---------- Riemann-Hurwitz enumeration ---------- */

/* A solution of 2g - 2 = N(2g' - 2) + N * sum_i (1 - 1/a_i) with N the
 * group order, g' the quotient genus and a_i the branch orders.  An empty
 * signature is an unramified cover. */
struct HurwitzSolution {
  long group_order = 0;
  long quotient_genus = 0;
  std::vector<long> signature;  // nondecreasing, entries in [2, max_branch]

  bool operator==(const HurwitzSolution&) const = default;
  bool operator<(const HurwitzSolution& o) const;
};

/* All solutions with order in [min_order, 42 * two_g_minus_2], order
 * divisible by order_divisor, quotient genus >= 0 and every branch order
 * in [2, max_branch].  Sorted by (order, quotient genus, signature). */
std::vector<HurwitzSolution> hurwitz_enumerate(long two_g_minus_2,
                                               long min_order,
                                               long max_branch,
                                               long order_divisor = 1);

/* ---------- orbit-degree divisibility ---------- */

/* For surfaces of degree d whose orbit of length m satisfies
 * m*d = two_g_minus_2 * r with m dividing group_order and d, r positive
 * integers: every admissible d is a multiple of
 * two_g_minus_2 / gcd(two_g_minus_2, group_order), and that value is
 * itself admissible, so it is also the minimal degree. */
struct OrbitDegreeReport {
  long forced_divisor = 0;
  long min_degree = 0;

  bool operator==(const OrbitDegreeReport&) const = default;
};
OrbitDegreeReport orbit_degree_constraint(long group_order,
                                          long two_g_minus_2);

/* ---------- the final Diophantine eliminations ---------- */

struct DiophantineSolution {
  long k = 0;
  long alpha = 0;
  long beta = 0;
  long g = 0;

  bool operator==(const DiophantineSolution&) const = default;
};

/* Case g - 1 = 11k: the intersection numbers force beta = 2k*alpha - 1 and
 * 0 = -1 - k*alpha^2 + alpha*beta + beta^2, which factors as
 * alpha(4k+1)(k*alpha - 1).  The only positive solution has k*alpha = 1,
 * giving exactly {(k=1, alpha=1, beta=1, g=12)}.  The factorization is
 * verified internally by exact polynomial expansion and at 100 seeded
 * random integer points; search_bound caps the confirming scan. */
std::vector<DiophantineSolution> diophantine_case_A(long search_bound = 200);

/* Case alpha = 11k: here beta = 2(g-1)k - 1 and
 * 0 = -1 - 11(g-1)k^2 + 11k*beta + beta^2 = k(11 + 4(g-1))((g-1)k - 1),
 * so (g-1)k = 1, impossible for g > 2.  Returns the (empty) solution list
 * over 3 <= g <= g_max, with the same internal identity verification. */
std::vector<DiophantineSolution> diophantine_case_B(long g_max);

}  // namespace trefoil

#endif  // TREFOIL_FANO_HPP_
