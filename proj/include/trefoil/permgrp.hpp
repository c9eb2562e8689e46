/* permgrp.hpp -- permutation groups on {0, ..., degree-1}.
 *
 * The backbone is a deterministic Schreier-Sims stabilizer chain (base points
 * are always the smallest moved point available when a level is created), so
 * group orders, membership tests and point stabilizers are exact.  Conjugacy
 * data comes from full element enumeration, which is the intended regime for
 * every group constructed here (orders up to 25920).
 *
 * Composition convention: (a * b)(p) = a(b(p)), i.e. b acts first.  All
 * orbit/coset machinery and the conjugation c = g a g^{-1} use this reading.
 */

#ifndef TREFOIL_PERMGRP_HPP_
#define TREFOIL_PERMGRP_HPP_

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "trefoil/exactnum.hpp"

namespace trefoil {

class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree);  // identity
  static Perm from_images(std::vector<int> images);
  /* Cycles use 0-based points; points not mentioned are fixed. */
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int p) const { return img_[p]; }
  bool is_identity() const;

  Perm operator*(const Perm& o) const;  // apply o first, then *this
  Perm inverse() const;
  /* g * a * g^{-1} where g = *this. */
  Perm conj_by(const Perm& g) const;
  long order() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  /* Byte key for hashing; two perms of equal degree collide iff equal. */
  std::string key() const;
  /* Disjoint cycle form, e.g. "(0 1 2)(5 6)"; identity prints "()". */
  std::string to_cycle_string() const;

 private:
  std::vector<uint16_t> img_;
};

/* One level of a stabilizer chain. */
struct ChainLevel {
  int base = -1;
  std::vector<Perm> gens;          // generators fixing all earlier base points
  std::vector<int> orbit;          // discovery order, orbit[0] == base
  std::vector<Perm> transversal;   // transversal[i] maps base to orbit[i]
  std::vector<int> orbit_pos;      // point -> index in orbit, or -1
};

class PermGroup {
 public:
  PermGroup() : degree_(0), order_(1) {}
  /* Builds the stabilizer chain.  forced_base points are installed as the
   * leading base points in order (used by point stabilizers). */
  PermGroup(int degree, std::vector<Perm> gens, std::vector<int> forced_base = {});

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<ChainLevel>& chain() const { return chain_; }
  const Int& order() const { return order_; }
  bool contains(const Perm& g) const;
  bool is_subgroup_of(const PermGroup& other) const;

 private:
  void rebuild_orbit(std::size_t idx);
  void insert_generator(std::size_t level, const Perm& r);
  /* Returns (residue, level index where sifting stopped). */
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;

  int degree_;
  std::vector<Perm> gens_;
  std::vector<ChainLevel> chain_;
  Int order_;
};

/* ---------- orbit / block / transitivity machinery ---------- */

/* Orbit partition; each orbit ascending, orbits ordered by smallest point. */
std::vector<std::vector<int>> orbits(const PermGroup& g);
bool is_transitive(const PermGroup& g);

/* A block system is a partition of the points: blocks ascending internally,
 * blocks ordered by smallest point.  Only minimal nontrivial systems are
 * returned (empty for primitive groups).  Pre: transitive, degree >= 2. */
std::vector<std::vector<std::vector<int>>> minimal_block_systems(const PermGroup& g);
bool is_primitive(const PermGroup& g);

/* Largest k <= 3 such that the action is k-transitive (0 if intransitive). */
int transitivity_degree(const PermGroup& g);

/* Stabilizer of p as a group on the same points. */
PermGroup point_stabilizer(const PermGroup& g, int p);

/* Derived subgroup via commutators of generators plus normal closure. */
PermGroup derived_subgroup(const PermGroup& g);

/* ---------- enumeration-backed data ---------- */

struct ConjClasses {
  Int group_order;
  long exponent = 1;
  std::vector<Perm> reps;          // lex-minimal class representatives
  std::vector<long> sizes;
  std::vector<long> rep_order;
  std::vector<int> inverse_class;
  /* power_class[c][j] = class of reps[c]^j, j in [0, rep_order[c]). */
  std::vector<std::vector<int>> power_class;
  std::unordered_map<std::string, int> element_class;  // Perm::key -> class

  int num_classes() const { return static_cast<int>(reps.size()); }
  int class_of(const Perm& g) const;
  int class_of_power(int c, long k) const;
};

/* Immutable shared handle for a group plus its lazily built enumeration and
 * class data.  The registry deduplicates by spec string, so pointer equality
 * is "same group" for anything obtained through group_from_spec. */
class GroupData {
 public:
  GroupData(std::string spec, PermGroup g);
  const std::string& spec() const { return spec_; }
  const PermGroup& group() const { return group_; }
  const std::vector<Perm>& elements() const;   // sorted lexicographically
  const ConjClasses& classes() const;

 private:
  std::string spec_;
  PermGroup group_;
  mutable std::shared_ptr<const std::vector<Perm>> elements_;
  mutable std::shared_ptr<const ConjClasses> classes_;
  mutable std::mutex mutex_;
};

using GroupRef = std::shared_ptr<const GroupData>;

/* Full enumeration with a hard budget; throws DomainError beyond it. */
std::vector<Perm> enumerate_elements(const PermGroup& g, std::size_t budget = 2000000);
ConjClasses conjugacy_classes(const PermGroup& g);

/* ---------- coset actions ---------- */

class CosetAction {
 public:
  CosetAction(const PermGroup& g, const PermGroup& h);
  const PermGroup& action() const { return action_; }
  const PermGroup& subgroup() const { return subgroup_; }
  int index() const { return static_cast<int>(reps_.size()); }
  /* Index of the coset H x. */
  int coset_index(const Perm& x) const;
  /* The permutation of coset indices induced by g. */
  Perm image(const Perm& g) const;

 private:
  PermGroup subgroup_;
  std::vector<Perm> reps_;
  PermGroup action_;
};

/* ---------- named constructors ---------- */

PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);
/* PSL2(q) on the q+1 points of the projective line; q in {4,5,7,8,9,11,13}.
 * Finite points (z:1) take index of z, infinity (1:0) is point q. */
PermGroup psl2(int q);
PermGroup sl2_8();           // = psl2(8), order 504 on 9 points
PermGroup sl3_3_on_26();     // nonzero vectors of F_3^3, order 5616
PermGroup psp4_3_on_40();    // projective points of F_3^4 mod center, order 25920
/* The Fano-plane copy of PSL2(7) = GL3(2) inside A7 (degree 7). */
PermGroup psl2_7_in_a7();
/* S5 embedded in A7: odd permutations get the extra transposition (5 6). */
PermGroup s5_signed_in_a7();
/* An A5 subgroup of psl2(11) (degree 12) found by seeded random search over
 * (involution, order-5) pairs with a deterministic exhaustive fallback. */
PermGroup a5_in_psl2_11(std::uint64_t seed = 0);

/* Registry-cached construction from a spec string: "A7", "S6", "PSL2(11)",
 * "SL2(8)", "SL3(3):26", "PSp4(3):40", "coset:A7/PSL2(7)",
 * "coset:A7/S5", "coset:PSL2(11)/A5".  Throws DomainError on unknown. */
GroupRef group_from_spec(const std::string& spec);
/* Wrap an ad-hoc group (uncached). */
GroupRef make_group(std::string name, PermGroup g);

}  // namespace trefoil

#endif  // TREFOIL_PERMGRP_HPP_
