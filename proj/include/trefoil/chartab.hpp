/* chartab.hpp -- character tables over exact cyclotomics.
 *
 * Tables are computed with the Dixon-Schneider method: split the class-sum
 * matrices over a prime field F_p with p = 1 (mod exponent) and p > 2*sqrt(|G|),
 * recover degrees from the orthogonality relations mod p, then lift each value
 * to an exact sum of roots of unity via eigenvalue multiplicities.  Row and
 * column orthogonality are verified exactly before a table is returned.
 */

#ifndef TREFOIL_CHARTAB_HPP_
#define TREFOIL_CHARTAB_HPP_

#include <vector>

#include "trefoil/exactnum.hpp"
#include "trefoil/permgrp.hpp"

namespace trefoil {

/* A class function is a value per conjugacy class, in class order. */
using ClassFn = std::vector<Cyclotomic>;

struct CharacterTable {
  GroupRef group;
  std::vector<ClassFn> rows;   // sorted by (degree, lexicographic values)
  std::vector<long> degrees;   // degrees[i] = rows[i][0]
  long dixon_prime = 0;

  int num_rows() const { return static_cast<int>(rows.size()); }
  int num_classes() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
  /* Index of the unique row equal to f; throws if absent. */
  int row_index(const ClassFn& f) const;
};

/* Compute (and cache per group handle) the full irreducible table. */
const CharacterTable& character_table(const GroupRef& g);

/* (1/|G|) sum over classes of size * f1 * conj(f2). */
Cyclotomic inner_product(const ConjClasses& cc, const ClassFn& f1, const ClassFn& f2);

/* Character of Sym^d of a representation affording chi, via the
 * complete-homogeneous recursion h_d = (1/d) * sum p_k h_{d-k}. */
ClassFn sym_power_character(const ConjClasses& cc, const ClassFn& chi, int d);

/* Dimension of the degree-d invariants = <Sym^d chi, trivial>; must come out
 * a non-negative rational integer, anything else throws. */
long molien_invariant_dim(const ConjClasses& cc, const ClassFn& chi, int d);

/* Class fusion of a subgroup (same point set) into an ambient group, with a
 * conjugating witness per subgroup class. */
struct Fusion {
  std::vector<int> class_map;     // subgroup class -> ambient class
  std::vector<Perm> conjugators;  // x with x h x^{-1} = ambient representative
};
Fusion subgroup_fusion(const GroupRef& ambient, const GroupRef& sub);

/* Values of an ambient-class function pulled back along a fusion. */
ClassFn restrict_character(const ClassFn& ambient_row, const Fusion& fusion);

/* Multiplicities of f as a combination of the table's irreducibles; throws
 * DomainError (with the offending inner product) if any is non-integral, and
 * verifies the reconstruction exactly. */
std::vector<Int> decompose(const CharacterTable& t, const ClassFn& f);

/* Minimum total degree of a set of irreducibles with trivial joint kernel. */
long min_faithful_rep_degree(const CharacterTable& t);

/* Fixed points of class representatives in the natural action. */
ClassFn natural_permutation_character(const GroupRef& g);
/* Fixed cosets per class of g under a coset action of g. */
ClassFn coset_permutation_character(const GroupRef& g, const CosetAction& ca);

/* A table as printed in a reference: per-column element orders (the only class
 * data such tables carry) and some subset of the rows. */
struct PrintedTable {
  std::vector<long> column_orders;
  std::vector<ClassFn> rows;
};
/* Assignment of printed columns to classes and printed rows to computed rows.
 * Columns may only map to classes of the same element order; all printed rows
 * must match distinct computed rows exactly.  Throws if no assignment works. */
struct TableMatch {
  std::vector<int> column_to_class;
  std::vector<int> row_to_irreducible;
};
TableMatch match_printed_rows(const CharacterTable& t, const PrintedTable& printed);

}  // namespace trefoil

#endif  // TREFOIL_CHARTAB_HPP_
