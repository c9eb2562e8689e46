/* Exact multivariate polynomials, linear matrix-group actions on forms,
 * invariance checking and Reynolds averaging, enumerated exact matrix groups
 * (the Weyl group of E6 in its rational root representation, its derived
 * subgroup, the order-55 Klein group), the explicit projective varieties used
 * throughout the suite, and singular-point searches over small finite fields.
 *
 * Conventions.  A matrix g acts on polynomials by the substitution
 * x_i -> sum_j g[i][j] x_j, i.e. (act(g,F))(x) = F(g x).  This is a right
 * action composing contravariantly: act(gh, F) = act(h, act(g, F)).
 * Smoothness over Q is never decided here; exhaustive scans over at least two
 * primes plus exact Jacobian ranks at rational witness points are the stated
 * evidence level. */
#ifndef TREFOIL_POLYINV_HPP_
#define TREFOIL_POLYINV_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trefoil/exactnum.hpp"

namespace trefoil {

/* A sparse exact polynomial in variables x1..xn.  Terms map exponent vectors
 * (length nvars, entries >= 0) to nonzero Cyclotomic coefficients; zero
 * coefficients are never stored. */
class MultiPoly {
 public:
  explicit MultiPoly(int nvars);

  /* coeff * x^exps; a zero coeff yields the zero polynomial. */
  static MultiPoly monomial(int nvars, const std::vector<int>& exps,
                            const Cyclotomic& coeff);
  /* The variable x_i, 1-indexed. */
  static MultiPoly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  const std::map<std::vector<int>, Cyclotomic>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /* Maximal total degree; -1 for the zero polynomial. */
  long degree() const;
  /* All terms share one total degree (the zero polynomial qualifies). */
  bool is_homogeneous() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const Cyclotomic& c) const;
  bool operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  Cyclotomic evaluate(const std::vector<Cyclotomic>& point) const;
  /* d/dx_i, 1-indexed. */
  MultiPoly partial_derivative(int i) const;

  /* Sparse sum of `coef*x1^e1*...*xn^en` terms, e.g. "1*x1^2*x2 + -1*x3".
   * Exponent 1 is omitted, variables with exponent 0 are omitted, constants
   * print as a bare coefficient, zero prints as "0". */
  std::string to_string() const;
  /* Inverse of to_string; a leading coefficient may be omitted when a term
   * starts with a variable.  Throws ParseError on malformed input. */
  static MultiPoly from_string(int nvars, std::string_view text);

 private:
  void insert_term(const std::vector<int>& exps, const Cyclotomic& coeff);
  int nvars_;
  std::map<std::vector<int>, Cyclotomic> terms_;
};

/* Elementary symmetric polynomial sigma_k in nvars variables. */
MultiPoly elementary_symmetric(int nvars, int k);
/* Power sum p_k = x1^k + ... + xn^k. */
MultiPoly power_sum(int nvars, int k);

/* A square matrix of exact cyclotomic entries, 0-indexed. */
class ExactMatrix {
 public:
  ExactMatrix(int dim, Cyclotomic fill = Cyclotomic());
  static ExactMatrix identity(int dim);
  /* Matrix of the substitution x_i -> x_{images[i]} (0-indexed): the entry
   * at (i, images[i]) is 1. */
  static ExactMatrix substitution(int dim, const std::vector<int>& images);
  static ExactMatrix diagonal(const std::vector<Cyclotomic>& diag);

  int dim() const { return dim_; }
  const Cyclotomic& at(int i, int j) const { return a_[i * dim_ + j]; }
  Cyclotomic& at(int i, int j) { return a_[i * dim_ + j]; }

  friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y);
  bool operator==(const ExactMatrix& o) const {
    return dim_ == o.dim_ && a_ == o.a_;
  }
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

  Cyclotomic det() const;
  /* Exact inverse; throws DomainError when singular. */
  ExactMatrix inverse() const;
  Cyclotomic trace() const;
  /* Canonical serialization of the entry list (hash key for enumeration). */
  std::string key() const;
  /* True when every entry is a rational integer fitting a signed 64-bit. */
  bool is_small_integer() const;

 private:
  int dim_;
  std::vector<Cyclotomic> a_;
};

/* Block matrix diag(1, m): m shifted to rows/columns 1.., a new first
 * coordinate fixed with weight 0. */
ExactMatrix extend_fixing_first(const ExactMatrix& m);

/* A finite matrix group: generators plus an optional full enumeration.  The
 * enumeration is closed under product with every generator and contains the
 * identity; integer groups are stored compactly.  Membership tests hash the
 * canonical entry serialization and re-check exact equality on every hit. */
class MatrixGroup {
 public:
  MatrixGroup() : dim_(0) {}

  int dim() const { return dim_; }
  const std::vector<ExactMatrix>& generators() const { return gens_; }
  bool enumerated() const { return count_ > 0; }
  /* Number of elements; throws DomainError when not enumerated. */
  std::size_t size() const;
  Int order() const { return Int(static_cast<long long>(size())); }
  /* The idx-th enumerated element (enumeration order is deterministic). */
  ExactMatrix element(std::size_t idx) const;
  bool contains(const ExactMatrix& m) const;

 private:
  friend MatrixGroup group_closure(const std::vector<ExactMatrix>&,
                                   std::size_t);
  friend class SymSumBuilder;
  int dim_;
  std::vector<ExactMatrix> gens_;
  std::size_t count_ = 0;
  bool int_mode_ = false;
  std::vector<long long> flat_;  // int mode: count_*dim_*dim_ entries
  std::unordered_map<unsigned long long, std::vector<unsigned>> buckets_;
  std::vector<ExactMatrix> cyc_elems_;  // generic mode
  std::unordered_map<std::string, unsigned> keymap_;
};

/* Breadth-first closure of the generated group; throws DomainError when the
 * element count would exceed the budget or a generator is singular. */
MatrixGroup group_closure(const std::vector<ExactMatrix>& gens,
                          std::size_t budget = 60000);

/* The Weyl group W(E6) of order 51840 in its 6-dimensional rational root
 * representation: closure of the six simple-root reflections written in the
 * simple-root basis (integral Cartan data, Bourbaki numbering). */
MatrixGroup weyl_e6();

/* Closure of the commutators of the generators together with their normal
 * closure under conjugation by the group generators: the derived subgroup. */
MatrixGroup derived_subgroup(const MatrixGroup& g, std::size_t budget = 60000);

/* Generators of the order-55 group acting on the Klein cubic: sigma is the
 * cyclic substitution x_i -> x_{i+1 (mod 5)} and tau is
 * diag(z^1, z^9, z^4, z^3, z^5) with z = zeta_11; the exponents solve
 * 2 a_i + a_{i+1} = 0 (mod 11). */
std::pair<ExactMatrix, ExactMatrix> klein_55_generators();

/* The substitution action described in the header comment. */
MultiPoly act(const ExactMatrix& g, const MultiPoly& f);

/* Exact equality act(g, f) == f for every generator; f must be homogeneous. */
bool is_invariant(const MultiPoly& f, const std::vector<ExactMatrix>& gens);

/* Average of act(g, f) over the enumerated group (graded piece by graded
 * piece); throws DomainError when the enumeration is missing. */
MultiPoly reynolds(const MultiPoly& f, const MatrixGroup& g);

/* Rank of the averaging projector on the degree-d monomial space.  The trace
 * of the projector is checked against the rank before returning. */
long invariant_space_dim_direct(const MatrixGroup& g, int d);

/* Independent oracle: the dimension of the joint kernel of act(gen) - id on
 * the degree-d monomial space, computed from the generators alone. */
long invariant_space_dim_generators(int nvars,
                                    const std::vector<ExactMatrix>& gens,
                                    int d);

/* Molien count of degree-d invariants from the matrix traces of the
 * enumerated group (power-sum expansion of the complete homogeneous symmetric
 * function of the eigenvalues); always a non-negative integer for a genuine
 * representation. */
Rat molien_count_from_traces(const MatrixGroup& g, int d);

/* A named projective variety: defining forms in nvars homogeneous
 * coordinates. */
struct Variety {
  std::string name;
  int nvars;
  std::vector<MultiPoly> forms;
};

/* Registry names, in registry order. */
const std::vector<std::string>& variety_names();
/* Look up a registry entry; throws DomainError for unknown names. */
Variety variety(const std::string& name);

/* All points of P^{n-1}(F_p) where every form vanishes and the Jacobian of
 * the defining forms has rank below the number of forms.  Linear forms are
 * eliminated exactly first, so only their joint zero locus is scanned.
 * Points are normalized (first nonzero coordinate 1) and sorted
 * lexicographically.  Throws DomainError on degenerate input (a zero form),
 * composite p, coefficients with denominators divisible by p, or a scan too
 * large for the runtime budget. */
std::vector<std::vector<long>> singular_points_mod_p(
    const std::vector<MultiPoly>& forms, long p);

/* Exact rank of the Jacobian matrix of the forms at the given point; throws
 * DomainError on degenerate input (zero form or zero point). */
int jacobian_rank_at(const std::vector<MultiPoly>& forms,
                     const std::vector<Cyclotomic>& point);

}  // namespace trefoil

#endif  // TREFOIL_POLYINV_HPP_
