/* permgrp.cpp -- Schreier-Sims chains, orbit/block machinery, conjugacy
 * classes by enumeration, coset actions and the named group constructors. */

#include "trefoil/permgrp.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

namespace trefoil {

/* ---------------- Perm ---------------- */

Perm::Perm(int degree) {
  img_.resize(degree);
  for (int i = 0; i < degree; ++i) img_[i] = static_cast<uint16_t>(i);
}

Perm Perm::from_images(std::vector<int> images) {
  Perm p;
  const int n = static_cast<int>(images.size());
  if (n > 65535) throw DomainError("permutation degree too large");
  std::vector<char> seen(n, 0);
  p.img_.resize(n);
  for (int i = 0; i < n; ++i) {
    int v = images[i];
    if (v < 0 || v >= n || seen[v]) throw DomainError("invalid permutation image list");
    seen[v] = 1;
    p.img_[i] = static_cast<uint16_t>(v);
  }
  return p;
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      if (a < 0 || a >= degree) throw DomainError("cycle point out of range");
      if (images[a] != a) throw DomainError("overlapping cycles");
      images[a] = b;
    }
  }
  return from_images(images);
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::operator*(const Perm& o) const {
  if (degree() != o.degree()) throw DomainError("degree mismatch in permutation product");
  Perm r;
  r.img_.resize(img_.size());
  for (int i = 0; i < degree(); ++i) r.img_[i] = img_[o.img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = static_cast<uint16_t>(i);
  return r;
}

Perm Perm::conj_by(const Perm& g) const { return g * (*this * g.inverse()); }

long Perm::order() const {
  long result = 1;
  std::vector<char> seen(degree(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    long g = std::gcd(result, len);
    if (result / g > (1L << 62) / len) throw DomainError("element order overflow");
    result = result / g * len;
  }
  return result;
}

std::string Perm::key() const {
  std::string s;
  s.resize(img_.size() * 2);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    s[2 * i] = static_cast<char>(img_[i] & 0xff);
    s[2 * i + 1] = static_cast<char>(img_[i] >> 8);
  }
  return s;
}

std::string Perm::to_cycle_string() const {
  std::ostringstream out;
  std::vector<char> seen(degree(), 0);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    any = true;
    out << '(';
    bool first = true;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      if (!first) out << ' ';
      out << j;
      first = false;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

/* ---------------- stabilizer chain ---------------- */

namespace {

int smallest_moved_point(const Perm& g) {
  for (int i = 0; i < g.degree(); ++i)
    if (g(i) != i) return i;
  return -1;
}

}  // namespace

PermGroup::PermGroup(int degree, std::vector<Perm> gens, std::vector<int> forced_base)
    : degree_(degree), order_(1) {
  std::unordered_set<std::string> seen;
  for (const auto& g : gens) {
    if (g.degree() != degree) throw DomainError("generator degree mismatch");
    if (g.is_identity()) continue;
    if (seen.insert(g.key()).second) gens_.push_back(g);
  }
  for (int b : forced_base) {
    if (b < 0 || b >= degree) throw DomainError("forced base point out of range");
    ChainLevel level;
    level.base = b;
    chain_.push_back(level);
    rebuild_orbit(chain_.size() - 1);
  }
  for (const auto& g : gens_) {
    auto [r, j] = strip(g, 0);
    if (!r.is_identity()) insert_generator(j, r);
  }
  /* Close under Schreier generators until a full deepest-first pass is clean.
   * Every insertion strictly enlarges some orbit, so this terminates. */
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = chain_.size(); i-- > 0 && !changed;) {
      for (std::size_t pi = 0; pi < chain_[i].orbit.size() && !changed; ++pi) {
        for (std::size_t m = i; m < chain_.size() && !changed; ++m) {
          for (const auto& s : chain_[m].gens) {
            const int p = chain_[i].orbit[pi];
            const int q = s(p);
            Perm u = chain_[i].transversal[chain_[i].orbit_pos[q]].inverse() *
                     (s * chain_[i].transversal[pi]);
            if (u.is_identity()) continue;
            auto [r, j] = strip(std::move(u), i + 1);
            if (!r.is_identity()) {
              insert_generator(j, r);
              changed = true;
              break;
            }
          }
        }
      }
    }
  }
  order_ = 1;
  for (const auto& level : chain_) order_ *= static_cast<long>(level.orbit.size());
}

void PermGroup::rebuild_orbit(std::size_t idx) {
  ChainLevel& level = chain_[idx];
  level.orbit.assign(1, level.base);
  level.orbit_pos.assign(degree_, -1);
  level.orbit_pos[level.base] = 0;
  level.transversal.assign(1, Perm(degree_));
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    const int p = level.orbit[head];
    for (std::size_t m = idx; m < chain_.size(); ++m) {
      for (const auto& s : chain_[m].gens) {
        const int q = s(p);
        if (level.orbit_pos[q] == -1) {
          level.orbit_pos[q] = static_cast<int>(level.orbit.size());
          level.orbit.push_back(q);
          level.transversal.push_back(s * level.transversal[head]);
        }
      }
    }
  }
}

void PermGroup::insert_generator(std::size_t level, const Perm& r) {
  if (level == chain_.size()) {
    ChainLevel fresh;
    fresh.base = smallest_moved_point(r);
    chain_.push_back(fresh);
  }
  chain_[level].gens.push_back(r);
  /* A generator stored at this level can enlarge every orbit above it too. */
  for (std::size_t i = chain_.size(); i-- > 0;) rebuild_orbit(i);
}

std::pair<Perm, std::size_t> PermGroup::strip(Perm g, std::size_t from) const {
  for (std::size_t i = from; i < chain_.size(); ++i) {
    const int p = g(chain_[i].base);
    const int pos = chain_[i].orbit_pos.empty() ? -1 : chain_[i].orbit_pos[p];
    if (pos == -1) return {std::move(g), i};
    g = chain_[i].transversal[pos].inverse() * g;
  }
  return {std::move(g), chain_.size()};
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [r, j] = strip(g, 0);
  (void)j;
  return r.is_identity();
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  for (const auto& g : gens_)
    if (!other.contains(g)) return false;
  return true;
}

/* ---------------- orbits, blocks, transitivity ---------------- */

std::vector<std::vector<int>> orbits(const PermGroup& g) {
  const int n = g.degree();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> result;
  for (int start = 0; start < n; ++start) {
    if (comp[start] != -1) continue;
    std::vector<int> orb{start};
    comp[start] = static_cast<int>(result.size());
    for (std::size_t head = 0; head < orb.size(); ++head)
      for (const auto& s : g.generators()) {
        const int q = s(orb[head]);
        if (comp[q] == -1) {
          comp[q] = comp[start];
          orb.push_back(q);
        }
      }
    std::sort(orb.begin(), orb.end());
    result.push_back(std::move(orb));
  }
  return result;
}

bool is_transitive(const PermGroup& g) {
  return g.degree() > 0 && orbits(g).size() == 1;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;  // keep the smallest point as representative
    return true;
  }
};

/* Finest G-congruence identifying 0 and q (Atkinson-style fixpoint). */
std::vector<std::vector<int>> seeded_blocks(const PermGroup& g, int q) {
  const int n = g.degree();
  UnionFind uf(n);
  uf.unite(0, q);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& s : g.generators())
      for (int p = 0; p < n; ++p) {
        const int a = uf.find(p);
        if (a != p) {
          /* p ~ a must force s(p) ~ s(a). */
          if (uf.unite(s(p), s(a))) changed = true;
        }
      }
  }
  std::map<int, std::vector<int>> by_rep;
  for (int p = 0; p < n; ++p) by_rep[uf.find(p)].push_back(p);
  std::vector<std::vector<int>> blocks;
  for (auto& [rep, blk] : by_rep) blocks.push_back(std::move(blk));
  return blocks;
}

bool refines(const std::vector<std::vector<int>>& fine,
             const std::vector<std::vector<int>>& coarse) {
  std::vector<int> coarse_id;
  int n = 0;
  for (const auto& blk : fine) n += static_cast<int>(blk.size());
  coarse_id.assign(n, -1);
  for (std::size_t i = 0; i < coarse.size(); ++i)
    for (int p : coarse[i]) coarse_id[p] = static_cast<int>(i);
  for (const auto& blk : fine) {
    for (int p : blk)
      if (coarse_id[p] != coarse_id[blk[0]]) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<std::vector<int>>> minimal_block_systems(const PermGroup& g) {
  const int n = g.degree();
  if (n < 2 || !is_transitive(g)) throw DomainError("block systems need a transitive group");
  std::vector<std::vector<std::vector<int>>> found;
  for (int q = 1; q < n; ++q) {
    auto blocks = seeded_blocks(g, q);
    if (blocks.size() <= 1) continue;  // the trivial one-block partition
    if (std::find(found.begin(), found.end(), blocks) == found.end())
      found.push_back(std::move(blocks));
  }
  /* Keep only systems with no strictly finer system in the collection; every
   * minimal congruence arises as a seeded one, so this is exact. */
  std::vector<std::vector<std::vector<int>>> minimal;
  for (const auto& sys : found) {
    bool has_finer = false;
    for (const auto& other : found)
      if (other != sys && refines(other, sys)) {
        has_finer = true;
        break;
      }
    if (!has_finer) minimal.push_back(sys);
  }
  return minimal;
}

bool is_primitive(const PermGroup& g) {
  if (!is_transitive(g)) return false;
  if (g.degree() < 2) return true;
  return minimal_block_systems(g).empty();
}

int transitivity_degree(const PermGroup& g) {
  if (g.degree() == 0 || !is_transitive(g)) return 0;
  if (g.degree() == 1) return 1;
  /* k+1-transitive iff transitive and a point stabilizer is k-transitive on
   * the remaining points; we cap the answer at 3. */
  PermGroup stab1 = point_stabilizer(g, 0);
  auto rest_transitive = [](const PermGroup& h, const std::vector<int>& fixed) {
    auto orbs = orbits(h);
    std::vector<int> moved_orbit_sizes;
    int outside = h.degree() - static_cast<int>(fixed.size());
    for (const auto& orb : orbs) {
      bool is_fixed_point = orb.size() == 1 &&
                            std::find(fixed.begin(), fixed.end(), orb[0]) != fixed.end();
      if (!is_fixed_point) moved_orbit_sizes.push_back(static_cast<int>(orb.size()));
    }
    return moved_orbit_sizes.size() == 1 && moved_orbit_sizes[0] == outside;
  };
  if (!rest_transitive(stab1, {0})) return 1;
  if (g.degree() == 2) return 2;
  PermGroup stab2 = point_stabilizer(stab1, 1);
  if (!rest_transitive(stab2, {0, 1})) return 2;
  return 3;
}

PermGroup point_stabilizer(const PermGroup& g, int p) {
  if (p < 0 || p >= g.degree()) throw DomainError("stabilizer point out of range");
  PermGroup with_base(g.degree(), g.generators(), {p});
  std::vector<Perm> stab_gens;
  const auto& chain = with_base.chain();
  for (std::size_t i = 1; i < chain.size(); ++i)
    for (const auto& s : chain[i].gens) stab_gens.push_back(s);
  return PermGroup(g.degree(), std::move(stab_gens));
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Perm> dgens;
  auto current = [&]() { return PermGroup(g.degree(), dgens); };
  const auto& gens = g.generators();
  PermGroup d = current();
  auto add_if_new = [&](const Perm& x) {
    if (x.is_identity() || d.contains(x)) return false;
    dgens.push_back(x);
    d = current();
    return true;
  };
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const Perm& a = gens[i];
      const Perm& b = gens[j];
      add_if_new(a.inverse() * b.inverse() * a * b);
    }
  /* Normal closure under the generators of g. */
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Perm> snapshot = dgens;
    for (const auto& dgen : snapshot)
      for (const auto& s : gens)
        if (add_if_new(dgen.conj_by(s))) changed = true;
  }
  return d;
}

/* ---------------- enumeration and conjugacy classes ---------------- */

std::vector<Perm> enumerate_elements(const PermGroup& g, std::size_t budget) {
  if (g.order() > Int(static_cast<unsigned long>(budget)))
    throw DomainError("group too large to enumerate (order " + g.order().str() + ")");
  std::vector<Perm> elems{Perm(g.degree())};
  std::unordered_set<std::string> seen{elems[0].key()};
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (const auto& s : g.generators()) {
      Perm next = elems[head] * s;
      if (seen.insert(next.key()).second) elems.push_back(std::move(next));
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

int ConjClasses::class_of(const Perm& g) const {
  auto it = element_class.find(g.key());
  if (it == element_class.end()) throw DomainError("element not in group");
  return it->second;
}

int ConjClasses::class_of_power(int c, long k) const {
  const long m = rep_order[c];
  long j = ((k % m) + m) % m;
  return power_class[c][j];
}

ConjClasses conjugacy_classes(const PermGroup& g) {
  ConjClasses cc;
  cc.group_order = g.order();
  const auto elems = enumerate_elements(g);
  std::unordered_map<std::string, int> cls;
  cls.reserve(elems.size() * 2);
  std::vector<Perm> reps;
  std::vector<long> sizes;
  for (const auto& e : elems) {
    if (cls.count(e.key())) continue;
    const int idx = static_cast<int>(reps.size());
    std::vector<Perm> members{e};
    cls[e.key()] = idx;
    for (std::size_t head = 0; head < members.size(); ++head)
      for (const auto& s : g.generators()) {
        Perm c = members[head].conj_by(s);
        auto key = c.key();
        if (!cls.count(key)) {
          cls[key] = idx;
          members.push_back(std::move(c));
        }
      }
    reps.push_back(e);  // lexicographically least in its class by scan order
    sizes.push_back(static_cast<long>(members.size()));
  }
  /* Sort classes by (size, representative); identity lands first. */
  std::vector<int> perm_idx(reps.size());
  std::iota(perm_idx.begin(), perm_idx.end(), 0);
  std::stable_sort(perm_idx.begin(), perm_idx.end(), [&](int a, int b) {
    if (sizes[a] != sizes[b]) return sizes[a] < sizes[b];
    return reps[a] < reps[b];
  });
  std::vector<int> new_of_old(reps.size());
  for (std::size_t i = 0; i < perm_idx.size(); ++i) new_of_old[perm_idx[i]] = static_cast<int>(i);
  cc.reps.reserve(reps.size());
  cc.sizes.reserve(reps.size());
  for (int old : perm_idx) {
    cc.reps.push_back(reps[old]);
    cc.sizes.push_back(sizes[old]);
  }
  for (auto& [key, idx] : cls) idx = new_of_old[idx];
  cc.element_class = std::move(cls);
  const int k = cc.num_classes();
  cc.rep_order.resize(k);
  cc.inverse_class.resize(k);
  cc.power_class.resize(k);
  cc.exponent = 1;
  for (int c = 0; c < k; ++c) {
    cc.rep_order[c] = cc.reps[c].order();
    cc.exponent = std::lcm(cc.exponent, cc.rep_order[c]);
    cc.inverse_class[c] = cc.element_class.at(cc.reps[c].inverse().key());
    Perm p(g.degree());
    for (long j = 0; j < cc.rep_order[c]; ++j) {
      cc.power_class[c].push_back(cc.element_class.at(p.key()));
      p = cc.reps[c] * p;
    }
  }
  long total = 0;
  for (long s : cc.sizes) total += s;
  if (Int(total) != cc.group_order) throw DomainError("class sizes do not sum to group order");
  return cc;
}

/* ---------------- GroupData ---------------- */

GroupData::GroupData(std::string spec, PermGroup g)
    : spec_(std::move(spec)), group_(std::move(g)) {}

const std::vector<Perm>& GroupData::elements() const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (!elements_)
    elements_ = std::make_shared<const std::vector<Perm>>(enumerate_elements(group_));
  return *elements_;
}

const ConjClasses& GroupData::classes() const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (!classes_)
    classes_ = std::make_shared<const ConjClasses>(conjugacy_classes(group_));
  return *classes_;
}

/* ---------------- coset actions ---------------- */

CosetAction::CosetAction(const PermGroup& g, const PermGroup& h) : subgroup_(h) {
  if (h.degree() != g.degree()) throw DomainError("coset action: degree mismatch");
  if (!h.is_subgroup_of(g)) throw DomainError("coset action: not a subgroup");
  reps_.push_back(Perm(g.degree()));
  for (std::size_t head = 0; head < reps_.size(); ++head) {
    for (const auto& s : g.generators()) {
      Perm y = reps_[head] * s;
      bool known = false;
      for (const auto& r : reps_)
        if (subgroup_.contains(y * r.inverse())) {
          known = true;
          break;
        }
      if (!known) reps_.push_back(std::move(y));
    }
  }
  const Int expected = g.order() / h.order();
  if (Int(static_cast<long>(reps_.size())) != expected)
    throw DomainError("coset enumeration found wrong index");
  std::vector<Perm> action_gens;
  for (const auto& s : g.generators()) {
    std::vector<int> images(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i) images[i] = coset_index(reps_[i] * s);
    action_gens.push_back(Perm::from_images(images));
  }
  action_ = PermGroup(static_cast<int>(reps_.size()), std::move(action_gens));
}

int CosetAction::coset_index(const Perm& x) const {
  for (std::size_t j = 0; j < reps_.size(); ++j)
    if (subgroup_.contains(x * reps_[j].inverse())) return static_cast<int>(j);
  throw DomainError("element lies in no enumerated coset");
}

Perm CosetAction::image(const Perm& g) const {
  std::vector<int> images(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i) images[i] = coset_index(reps_[i] * g);
  return Perm::from_images(images);
}

/* ---------------- finite fields ---------------- */

namespace {

struct GF {
  int q = 0, p = 0, deg = 1;
  std::vector<int> add_t, mul_t, neg_t, inv_t;

  int add(int a, int b) const { return add_t[a * q + b]; }
  int mul(int a, int b) const { return mul_t[a * q + b]; }
  int neg(int a) const { return neg_t[a]; }
  int inv(int a) const {
    if (a == 0) throw DomainError("division by zero in GF");
    return inv_t[a];
  }

  static const GF& get(int q);
};

GF build_gf(int q) {
  GF f;
  f.q = q;
  /* reduction[i] = coefficients of x^deg expressed in lower powers */
  std::vector<int> red;
  switch (q) {
    case 2: case 3: case 5: case 7: case 11: case 13:
      f.p = q; f.deg = 1;
      break;
    case 4: f.p = 2; f.deg = 2; red = {1, 1}; break;        // x^2 = x + 1
    case 8: f.p = 2; f.deg = 3; red = {1, 1, 0}; break;     // x^3 = x + 1
    case 9: f.p = 3; f.deg = 2; red = {2, 0}; break;        // x^2 = -1
    default: throw DomainError("unsupported field size " + std::to_string(q));
  }
  auto digits = [&](int a) {
    std::vector<int> d(f.deg);
    for (int i = 0; i < f.deg; ++i) {
      d[i] = a % f.p;
      a /= f.p;
    }
    return d;
  };
  auto undigits = [&](const std::vector<int>& d) {
    int a = 0;
    for (int i = f.deg - 1; i >= 0; --i) a = a * f.p + d[i];
    return a;
  };
  f.add_t.resize(q * q);
  f.mul_t.resize(q * q);
  f.neg_t.resize(q);
  f.inv_t.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    auto da = digits(a);
    std::vector<int> dn(f.deg);
    for (int i = 0; i < f.deg; ++i) dn[i] = (f.p - da[i]) % f.p;
    f.neg_t[a] = undigits(dn);
    for (int b = 0; b < q; ++b) {
      auto db = digits(b);
      std::vector<int> ds(f.deg);
      for (int i = 0; i < f.deg; ++i) ds[i] = (da[i] + db[i]) % f.p;
      f.add_t[a * q + b] = undigits(ds);
      /* polynomial product, then reduce degree by the defining relation */
      std::vector<int> prod(2 * f.deg - 1, 0);
      for (int i = 0; i < f.deg; ++i)
        for (int j = 0; j < f.deg; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % f.p;
      for (int d = 2 * f.deg - 2; d >= f.deg; --d) {
        const int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < f.deg; ++i)
          prod[d - f.deg + i] = (prod[d - f.deg + i] + c * red[i]) % f.p;
      }
      prod.resize(f.deg);
      f.mul_t[a * q + b] = undigits(prod);
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (f.mul_t[a * q + b] == 1) f.inv_t[a] = b;
  return f;
}

const GF& GF::get(int q) {
  static std::mutex m;
  static std::map<int, GF> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, build_gf(q)).first;
  return it->second;
}

/* Permutation of the projective line induced by [[a,b],[c,d]] over GF(q):
 * finite points (z:1) at index z, infinity (1:0) at index q. */
Perm moebius_perm(const GF& f, int a, int b, int c, int d) {
  const int q = f.q;
  std::vector<int> images(q + 1);
  for (int i = 0; i <= q; ++i) {
    const int x = (i < q) ? i : 1;
    const int y = (i < q) ? 1 : 0;
    const int u = f.add(f.mul(a, x), f.mul(b, y));
    const int v = f.add(f.mul(c, x), f.mul(d, y));
    images[i] = (v == 0) ? q : f.mul(u, f.inv(v));
  }
  return Perm::from_images(images);
}

}  // namespace

/* ---------------- named constructors ---------------- */

namespace {

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

PermGroup symmetric_group(int n) {
  if (n < 0 || n > 16) throw DomainError("symmetric group degree out of range");
  std::vector<Perm> gens;
  if (n >= 2) gens.push_back(Perm::from_cycles(n, {{0, 1}}));
  if (n >= 3) {
    std::vector<int> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0);
    gens.push_back(Perm::from_cycles(n, {cyc}));
  }
  PermGroup g(std::max(n, 0), std::move(gens));
  if (g.order() != factorial(n)) throw DomainError("symmetric group has wrong order");
  return g;
}

PermGroup alternating_group(int n) {
  if (n < 0 || n > 16) throw DomainError("alternating group degree out of range");
  std::vector<Perm> gens;
  if (n >= 3) gens.push_back(Perm::from_cycles(n, {{0, 1, 2}}));
  if (n >= 4) {
    if (n % 2 == 1) {
      std::vector<int> cyc(n);
      std::iota(cyc.begin(), cyc.end(), 0);
      gens.push_back(Perm::from_cycles(n, {cyc}));
    } else {
      std::vector<int> cyc(n - 1);
      std::iota(cyc.begin(), cyc.end(), 1);
      gens.push_back(Perm::from_cycles(n, {cyc}));
    }
  }
  PermGroup g(std::max(n, 0), std::move(gens));
  if (n >= 2 && g.order() != factorial(n) / 2) throw DomainError("alternating group has wrong order");
  return g;
}

PermGroup psl2(int q) {
  static const std::set<int> supported{4, 5, 7, 8, 9, 11, 13};
  if (!supported.count(q)) throw DomainError("psl2: unsupported q " + std::to_string(q));
  const GF& f = GF::get(q);
  std::vector<Perm> gens;
  gens.push_back(moebius_perm(f, 0, f.neg(1), 1, 0));  // inversion S
  /* Translations by an F_p-basis of F_q. */
  for (int b = 1; b < q; b *= f.p) {
    gens.push_back(moebius_perm(f, 1, b, 0, 1));
    if (f.deg == 1) break;
  }
  PermGroup g(q + 1, std::move(gens));
  const long expected = static_cast<long>(q) * (q - 1) * (q + 1) / ((q % 2 == 0) ? 1 : 2);
  if (g.order() != Int(expected)) throw DomainError("psl2 construction has wrong order");
  return g;
}

PermGroup sl2_8() { return psl2(8); }

namespace {

/* Permutation of the nonzero vectors of F_p^dim (index = base-p digits - 1)
 * induced by an integer matrix acting as v -> M v. */
Perm linear_perm_on_nonzero(int p, int dim, const std::vector<std::vector<int>>& m) {
  int count = 1;
  for (int i = 0; i < dim; ++i) count *= p;
  std::vector<int> images(count - 1);
  for (int v = 1; v < count; ++v) {
    std::vector<int> d(dim);
    int t = v;
    for (int i = 0; i < dim; ++i) {
      d[i] = t % p;
      t /= p;
    }
    int w = 0;
    for (int i = dim - 1; i >= 0; --i) {
      int acc = 0;
      for (int j = 0; j < dim; ++j) acc += m[i][j] * d[j];
      w = w * p + acc % p;
    }
    images[v - 1] = w - 1;
  }
  return Perm::from_images(images);
}

}  // namespace

PermGroup sl3_3_on_26() {
  const std::vector<std::vector<int>> e12{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
  const std::vector<std::vector<int>> e21{{1, 0, 0}, {1, 1, 0}, {0, 0, 1}};
  const std::vector<std::vector<int>> cyc{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  std::vector<Perm> gens{linear_perm_on_nonzero(3, 3, e12), linear_perm_on_nonzero(3, 3, e21),
                         linear_perm_on_nonzero(3, 3, cyc)};
  PermGroup g(26, std::move(gens));
  if (g.order() != Int(5616)) throw DomainError("sl3(3) construction has wrong order");
  return g;
}

PermGroup psp4_3_on_40() {
  const int p = 3, dim = 4;
  /* Symplectic form <x,y> = x1 y3 - x3 y1 + x2 y4 - x4 y2 over F_3. */
  auto form = [&](const std::array<int, 4>& x, const std::array<int, 4>& y) {
    int v = x[0] * y[2] - x[2] * y[0] + x[1] * y[3] - x[3] * y[1];
    return ((v % p) + p) % p;
  };
  auto decode = [&](int v) {
    std::array<int, 4> d{};
    for (int i = 0; i < dim; ++i) {
      d[i] = v % p;
      v /= p;
    }
    return d;
  };
  auto encode = [&](const std::array<int, 4>& d) {
    int v = 0;
    for (int i = dim - 1; i >= 0; --i) v = v * p + d[i];
    return v;
  };
  /* Projective points: scale so the first nonzero coordinate is 1. */
  auto normalize = [&](std::array<int, 4> d) {
    int lead = 0;
    for (int i = 0; i < dim; ++i)
      if (d[i] != 0) {
        lead = d[i];
        break;
      }
    if (lead == 2)
      for (auto& c : d) c = (2 * c) % p;
    return d;
  };
  std::vector<int> point_of_vec(81, -1);
  std::vector<std::array<int, 4>> points;
  for (int v = 1; v < 81; ++v) {
    auto norm = normalize(decode(v));
    if (encode(norm) == v) {
      point_of_vec[v] = static_cast<int>(points.size());
      points.push_back(norm);
    }
  }
  for (int v = 1; v < 81; ++v)
    if (point_of_vec[v] == -1) point_of_vec[v] = point_of_vec[encode(normalize(decode(v)))];
  auto transvection_perm = [&](const std::array<int, 4>& vec) {
    std::vector<int> images(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto& x = points[i];
      const int lambda = form(x, vec);
      std::array<int, 4> y;
      for (int j = 0; j < dim; ++j) y[j] = (x[j] + lambda * vec[j]) % p;
      images[i] = point_of_vec[encode(normalize(y))];
    }
    return Perm::from_images(images);
  };
  std::vector<Perm> gens;
  for (const auto& pt : points) gens.push_back(transvection_perm(pt));
  PermGroup g(static_cast<int>(points.size()), std::move(gens));
  if (g.order() != Int(25920)) throw DomainError("psp4(3) construction has wrong order");
  return g;
}

PermGroup psl2_7_in_a7() {
  const std::vector<std::vector<int>> e12{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
  const std::vector<std::vector<int>> e21{{1, 0, 0}, {1, 1, 0}, {0, 0, 1}};
  const std::vector<std::vector<int>> cyc{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  std::vector<Perm> gens{linear_perm_on_nonzero(2, 3, e12), linear_perm_on_nonzero(2, 3, e21),
                         linear_perm_on_nonzero(2, 3, cyc)};
  PermGroup g(7, std::move(gens));
  if (g.order() != Int(168)) throw DomainError("gl3(2) construction has wrong order");
  PermGroup a7 = alternating_group(7);
  if (!g.is_subgroup_of(a7)) throw DomainError("gl3(2) copy is not inside A7");
  return g;
}

PermGroup s5_signed_in_a7() {
  std::vector<Perm> gens{Perm::from_cycles(7, {{0, 1}, {5, 6}}),
                         Perm::from_cycles(7, {{0, 1, 2, 3, 4}})};
  PermGroup g(7, std::move(gens));
  if (g.order() != Int(120)) throw DomainError("signed S5 construction has wrong order");
  return g;
}

PermGroup a5_in_psl2_11(std::uint64_t seed) {
  PermGroup g = psl2(11);
  const auto elems = enumerate_elements(g);
  std::vector<Perm> invs, fives;
  for (const auto& e : elems) {
    const long o = e.order();
    if (o == 2) invs.push_back(e);
    if (o == 5) fives.push_back(e);
  }
  auto try_pair = [&](const Perm& a, const Perm& b) -> bool {
    PermGroup h(g.degree(), {a, b});
    return h.order() == Int(60);
  };
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 2000; ++attempt) {
    const Perm& a = invs[rng() % invs.size()];
    const Perm& b = fives[rng() % fives.size()];
    if (try_pair(a, b)) return PermGroup(g.degree(), {a, b});
  }
  for (const auto& a : invs)
    for (const auto& b : fives)
      if (try_pair(a, b)) return PermGroup(g.degree(), {a, b});
  throw DomainError("no A5 subgroup found in psl2(11)");
}

/* ---------------- spec registry ---------------- */

namespace {

PermGroup build_from_spec(const std::string& spec) {
  auto starts = [&](const char* p) { return spec.rfind(p, 0) == 0; };
  if (spec.size() == 2 && (spec[0] == 'A' || spec[0] == 'S') && isdigit(spec[1])) {
    const int n = spec[1] - '0';
    return spec[0] == 'A' ? alternating_group(n) : symmetric_group(n);
  }
  if (starts("PSL2(") && spec.back() == ')') {
    const int q = std::stoi(spec.substr(5, spec.size() - 6));
    return psl2(q);
  }
  if (spec == "SL2(8)") return sl2_8();
  if (spec == "SL3(3):26") return sl3_3_on_26();
  if (spec == "PSp4(3):40") return psp4_3_on_40();
  if (spec == "PSL2(7):7") return psl2_7_in_a7();
  if (spec == "S5:7") return s5_signed_in_a7();
  if (spec == "A5:12") return a5_in_psl2_11();
  if (starts("coset:")) {
    const auto slash = spec.find('/');
    if (slash != std::string::npos) {
      const std::string big = spec.substr(6, slash - 6);
      const std::string small = spec.substr(slash + 1);
      PermGroup g, h;
      if (big == "A7" && small == "PSL2(7)") {
        g = alternating_group(7);
        h = psl2_7_in_a7();
      } else if (big == "A7" && small == "S5") {
        g = alternating_group(7);
        h = s5_signed_in_a7();
      } else if (big == "PSL2(11)" && small == "A5") {
        g = psl2(11);
        h = a5_in_psl2_11();
      } else {
        throw DomainError("unsupported coset spec " + spec);
      }
      return CosetAction(g, h).action();
    }
  }
  throw DomainError(
      "unknown group spec '" + spec +
      "' (supported: A<n>, S<n>, PSL2(q) for q in {4,5,7,8,9,11,13}, SL2(8), "
      "SL3(3):26, PSp4(3):40, PSL2(7):7, S5:7, A5:12, coset:A7/PSL2(7), "
      "coset:A7/S5, coset:PSL2(11)/A5)");
}

}  // namespace

GroupRef group_from_spec(const std::string& spec) {
  static std::mutex m;
  static std::map<std::string, GroupRef> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(spec);
  if (it == cache.end())
    it = cache.emplace(spec, std::make_shared<GroupData>(spec, build_from_spec(spec))).first;
  return it->second;
}

GroupRef make_group(std::string name, PermGroup g) {
  return std::make_shared<GroupData>(std::move(name), std::move(g));
}

}  // namespace trefoil
