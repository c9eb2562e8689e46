/* chartab.cpp -- Dixon-Schneider character tables and class-function tools. */

#include "trefoil/chartab.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace trefoil {

namespace {

/* ---------- arithmetic over F_p, p < 2^31 ---------- */

struct ModP {
  long p;
  long add(long a, long b) const { return (a + b) % p; }
  long sub(long a, long b) const { return ((a - b) % p + p) % p; }
  long mul(long a, long b) const {
    return static_cast<long>((static_cast<unsigned long long>(a) * b) % p);
  }
  long pow(long a, long e) const {
    long r = 1 % p;
    a %= p;
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  long inv(long a) const {
    a = ((a % p) + p) % p;
    if (a == 0) throw DomainError("division by zero mod p");
    return pow(a, p - 2);
  }
};

using Vec = std::vector<long>;
using Mat = std::vector<Vec>;

/* Reduced row echelon form in place; returns pivot columns. */
std::vector<int> rref(Mat& m, const ModP& f) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr == -1) continue;
    std::swap(m[r], m[pr]);
    const long scale = f.inv(m[r][c]);
    for (int j = 0; j < cols; ++j) m[r][j] = f.mul(m[r][j], scale);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const long factor = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/* Basis of the right kernel, deterministic (free columns ascending). */
std::vector<Vec> kernel_basis(Mat m, const ModP& f) {
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  auto pivots = rref(m, f);
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<Vec> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    Vec v(cols, 0);
    v[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.sub(0, m[r][c]);
    basis.push_back(std::move(v));
  }
  return basis;
}

/* Coordinates of t in the independent column set B (throws if inconsistent). */
Vec solve_coords(const std::vector<Vec>& basis, const Vec& t, const ModP& f) {
  const int k = static_cast<int>(t.size());
  const int m = static_cast<int>(basis.size());
  Mat aug(k, Vec(m + 1));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < m; ++j) aug[i][j] = basis[j][i];
    aug[i][m] = t[i];
  }
  auto pivots = rref(aug, f);
  Vec x(m, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == m) throw DomainError("inconsistent solve in eigenspace splitting");
    x[pivots[r]] = aug[r][m];
  }
  return x;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long choose_dixon_prime(long order, long exponent) {
  long lower = 1;
  while (lower * lower <= 4 * order) ++lower;  // smallest with lower^2 > 4n
  for (long t = 1; t <= 2000000; ++t) {
    const long p = exponent * t + 1;
    if (p > lower && is_prime(p)) return p;
  }
  throw DomainError("no Dixon prime found below bound");
}

long primitive_root(long p, const ModP& f) {
  std::vector<long> prime_factors;
  long m = p - 1;
  for (long d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) prime_factors.push_back(m);
  for (long g = 2; g < p; ++g) {
    bool ok = true;
    for (long q : prime_factors)
      if (f.pow(g, (p - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw DomainError("no primitive root found");
}

/* Class-sum matrix M[j][t] = #{(x,y) in C_i x C_j : x y = rep_t}. */
Mat class_matrix(const GroupRef& gref, const std::vector<std::vector<int>>& members, int i,
                 const ModP& f) {
  const ConjClasses& cc = gref->classes();
  const auto& elems = gref->elements();
  const int k = cc.num_classes();
  Mat m(k, Vec(k, 0));
  for (int x_idx : members[i]) {
    const Perm xi = elems[x_idx].inverse();
    for (int t = 0; t < k; ++t) {
      const int j = cc.class_of(xi * cc.reps[t]);
      m[j][t] = f.add(m[j][t], 1);
    }
  }
  return m;
}

CharacterTable compute_table(const GroupRef& gref) {
  const ConjClasses& cc = gref->classes();
  const auto& elems = gref->elements();
  const int k = cc.num_classes();
  const long n = cc.group_order.convert_to<long>();
  const long e = cc.exponent;
  const long p = choose_dixon_prime(n, e);
  const ModP f{p};

  std::vector<std::vector<int>> members(k);
  for (std::size_t i = 0; i < elems.size(); ++i)
    members[cc.class_of(elems[i])].push_back(static_cast<int>(i));
  for (int c = 0; c < k; ++c)
    if (static_cast<long>(members[c].size()) != cc.sizes[c])
      throw DomainError("class bucketing mismatch");

  /* Split the common eigenspaces of the class-sum matrices. */
  std::vector<std::vector<Vec>> spaces;
  {
    std::vector<Vec> full;
    for (int j = 0; j < k; ++j) {
      Vec ej(k, 0);
      ej[j] = 1;
      full.push_back(std::move(ej));
    }
    spaces.push_back(std::move(full));
  }
  for (int i = 1; i < k; ++i) {
    bool all_one = true;
    for (const auto& sp : spaces)
      if (sp.size() > 1) all_one = false;
    if (all_one) break;
    const Mat m = class_matrix(gref, members, i, f);
    std::vector<std::vector<Vec>> next;
    for (auto& sp : spaces) {
      const int dim = static_cast<int>(sp.size());
      if (dim == 1) {
        next.push_back(std::move(sp));
        continue;
      }
      /* Matrix of m restricted to the subspace. */
      Mat r(dim, Vec(dim));
      for (int b = 0; b < dim; ++b) {
        Vec img(k, 0);
        for (int row = 0; row < k; ++row) {
          long acc = 0;
          for (int col = 0; col < k; ++col)
            if (m[row][col] != 0 && sp[b][col] != 0) acc = f.add(acc, f.mul(m[row][col], sp[b][col]));
          img[row] = acc;
        }
        const Vec coords = solve_coords(sp, img, f);
        for (int row = 0; row < dim; ++row) r[row][b] = coords[row];
      }
      bool scalar = true;
      for (int a = 0; a < dim && scalar; ++a)
        for (int b = 0; b < dim && scalar; ++b)
          if (r[a][b] != ((a == b) ? r[0][0] : 0)) scalar = false;
      if (scalar) {
        next.push_back(std::move(sp));
        continue;
      }
      int found = 0;
      for (long lam = 0; lam < p && found < dim; ++lam) {
        Mat shifted = r;
        for (int a = 0; a < dim; ++a) shifted[a][a] = f.sub(shifted[a][a], lam);
        auto ker = kernel_basis(std::move(shifted), f);
        if (ker.empty()) continue;
        std::vector<Vec> sub;
        for (const auto& coef : ker) {
          Vec v(k, 0);
          for (int b = 0; b < dim; ++b)
            if (coef[b] != 0)
              for (int j = 0; j < k; ++j) v[j] = f.add(v[j], f.mul(coef[b], sp[b][j]));
          sub.push_back(std::move(v));
        }
        found += static_cast<int>(sub.size());
        next.push_back(std::move(sub));
      }
      if (found != dim) throw DomainError("eigenspace splitting failed");
    }
    spaces = std::move(next);
  }
  for (const auto& sp : spaces)
    if (sp.size() != 1) throw DomainError("eigenspace splitting failed");
  if (static_cast<int>(spaces.size()) != k) throw DomainError("wrong number of eigenvectors");

  /* Degrees and mod-p character values from the omega vectors. */
  const long g_root = primitive_root(p, f);
  const long z_e = f.pow(g_root, (p - 1) / e);
  std::vector<std::vector<long>> chi_p;
  std::vector<long> degs;
  for (const auto& sp : spaces) {
    Vec w = sp[0];
    if (w[0] == 0) throw DomainError("eigenvector has zero identity coordinate");
    const long scale = f.inv(w[0]);
    for (auto& x : w) x = f.mul(x, scale);
    long s = 0;
    for (int j = 0; j < k; ++j)
      s = f.add(s, f.mul(f.mul(w[j], w[cc.inverse_class[j]]), f.inv(cc.sizes[j] % p)));
    const long d2 = f.mul(n % p, f.inv(s));
    long d = -1;
    for (long x = 1; 2 * x < p; ++x)
      if (f.mul(x, x) == d2) {
        if (d != -1) throw DomainError("ambiguous degree root");
        d = x;
      }
    if (d == -1) throw DomainError("no degree root found");
    std::vector<long> row(k);
    for (int j = 0; j < k; ++j) row[j] = f.mul(f.mul(d, w[j]), f.inv(cc.sizes[j] % p));
    degs.push_back(d);
    chi_p.push_back(std::move(row));
  }

  /* Lift each value to a sum of roots of unity via eigenvalue multiplicities. */
  std::vector<ClassFn> rows;
  for (int r = 0; r < k; ++r) {
    ClassFn row(k);
    for (int j = 0; j < k; ++j) {
      const long m = cc.rep_order[j];
      const long zm = f.pow(z_e, e / m);
      const long m_inv = f.inv(m % p);
      long total = 0;
      Cyclotomic value;
      Cyclotomic zeta_pow(Rat(1));
      const Cyclotomic zeta = Cyclotomic::zeta(m);
      for (long t = 0; t < m; ++t) {
        long mu = 0;
        for (long s = 0; s < m; ++s) {
          const long expo = (t * s) % m;
          mu = f.add(mu, f.mul(chi_p[r][cc.class_of_power(j, s)],
                               f.pow(zm, (m - expo) % m)));
        }
        mu = f.mul(mu, m_inv);
        total += mu;
        if (mu != 0) value += Cyclotomic(mu) * zeta_pow;
        zeta_pow *= zeta;
      }
      if (total != degs[r])
        throw DomainError("eigenvalue multiplicities do not sum to the degree");
      row[j] = value;
    }
    rows.push_back(std::move(row));
  }

  /* Deterministic order: by degree, then lexicographic values. */
  std::vector<int> order_idx(k);
  std::iota(order_idx.begin(), order_idx.end(), 0);
  std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
    if (degs[a] != degs[b]) return degs[a] < degs[b];
    return std::lexicographical_compare(rows[a].begin(), rows[a].end(), rows[b].begin(),
                                        rows[b].end());
  });
  CharacterTable table;
  table.group = gref;
  table.dixon_prime = p;
  for (int idx : order_idx) {
    table.rows.push_back(rows[idx]);
    table.degrees.push_back(degs[idx]);
  }

  /* Exact verification before the table is released. */
  Int degree_square_sum = 0;
  for (long d : table.degrees) degree_square_sum += Int(d) * d;
  if (degree_square_sum != cc.group_order)
    throw DomainError("degree squares do not sum to the group order");
  const Cyclotomic one(Rat(1)), zero;
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) {
      const Cyclotomic ip = inner_product(cc, table.rows[a], table.rows[b]);
      if (ip != (a == b ? one : zero)) throw DomainError("row orthogonality failed");
    }
  for (int c1 = 0; c1 < k; ++c1)
    for (int c2 = c1; c2 < k; ++c2) {
      Cyclotomic acc;
      for (int r = 0; r < k; ++r) acc += table.rows[r][c1] * table.rows[r][c2].conj();
      const Cyclotomic expect =
          (c1 == c2) ? Cyclotomic(Rat(Int(n), Int(cc.sizes[c1]))) : Cyclotomic();
      if (acc != expect) throw DomainError("column orthogonality failed");
    }
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c)
      if (table.rows[r][cc.inverse_class[c]] != table.rows[r][c].conj())
        throw DomainError("inverse-class conjugation failed");
  return table;
}

}  // namespace

int CharacterTable::row_index(const ClassFn& f) const {
  for (int i = 0; i < num_rows(); ++i)
    if (rows[i] == f) return i;
  throw DomainError("class function is not a row of the table");
}

const CharacterTable& character_table(const GroupRef& g) {
  static std::mutex m;
  static std::map<const GroupData*, std::unique_ptr<CharacterTable>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(g.get());
  if (it == cache.end())
    it = cache.emplace(g.get(), std::make_unique<CharacterTable>(compute_table(g))).first;
  return *it->second;
}

Cyclotomic inner_product(const ConjClasses& cc, const ClassFn& f1, const ClassFn& f2) {
  const int k = cc.num_classes();
  if (static_cast<int>(f1.size()) != k || static_cast<int>(f2.size()) != k)
    throw DomainError("class function length mismatch");
  Cyclotomic acc;
  for (int c = 0; c < k; ++c) acc += Cyclotomic(cc.sizes[c]) * f1[c] * f2[c].conj();
  return acc * Cyclotomic(Rat(Int(1), cc.group_order));
}

ClassFn sym_power_character(const ConjClasses& cc, const ClassFn& chi, int d) {
  const int k = cc.num_classes();
  if (static_cast<int>(chi.size()) != k) throw DomainError("class function length mismatch");
  if (d < 0) throw DomainError("negative symmetric power");
  std::vector<ClassFn> h(d + 1, ClassFn(k));
  for (int c = 0; c < k; ++c) h[0][c] = Cyclotomic(Rat(1));
  for (int dd = 1; dd <= d; ++dd) {
    for (int c = 0; c < k; ++c) {
      Cyclotomic acc;
      for (int kk = 1; kk <= dd; ++kk) {
        const Cyclotomic pk = chi[cc.class_of_power(c, kk)];
        acc += pk * h[dd - kk][c];
      }
      h[dd][c] = acc * Cyclotomic(Rat(Int(1), Int(dd)));
    }
  }
  return h[d];
}

long molien_invariant_dim(const ConjClasses& cc, const ClassFn& chi, int d) {
  const ClassFn sym = sym_power_character(cc, chi, d);
  ClassFn trivial(cc.num_classes(), Cyclotomic(Rat(1)));
  const Cyclotomic ip = inner_product(cc, sym, trivial);
  if (!ip.is_rational()) throw DomainError("Molien count is irrational: " + ip.to_string());
  const Rat r = ip.to_rational();
  if (boost::multiprecision::denominator(r) != 1 || r < 0)
    throw DomainError("Molien count is not a non-negative integer: " + ip.to_string());
  return boost::multiprecision::numerator(r).convert_to<long>();
}

Fusion subgroup_fusion(const GroupRef& ambient, const GroupRef& sub) {
  const ConjClasses& amb_cc = ambient->classes();
  const ConjClasses& sub_cc = sub->classes();
  Fusion fus;
  for (int c = 0; c < sub_cc.num_classes(); ++c) {
    const Perm& h = sub_cc.reps[c];
    auto it = amb_cc.element_class.find(h.key());
    if (it == amb_cc.element_class.end())
      throw DomainError("subgroup element " + h.to_cycle_string() + " is not in the ambient group");
    const int amb = it->second;
    fus.class_map.push_back(amb);
    bool found = false;
    for (const auto& x : ambient->elements())
      if (h.conj_by(x) == amb_cc.reps[amb]) {
        fus.conjugators.push_back(x);
        found = true;
        break;
      }
    if (!found) throw DomainError("no conjugator found for a fused class");
  }
  return fus;
}

ClassFn restrict_character(const ClassFn& ambient_row, const Fusion& fusion) {
  ClassFn values;
  for (int amb : fusion.class_map) {
    if (amb < 0 || amb >= static_cast<int>(ambient_row.size()))
      throw DomainError("fusion index out of range");
    values.push_back(ambient_row[amb]);
  }
  return values;
}

std::vector<Int> decompose(const CharacterTable& t, const ClassFn& f) {
  const ConjClasses& cc = t.group->classes();
  std::vector<Int> mult;
  for (int i = 0; i < t.num_rows(); ++i) {
    const Cyclotomic ip = inner_product(cc, f, t.rows[i]);
    if (!ip.is_rational())
      throw DomainError("non-integral multiplicity: <f, chi_" + std::to_string(i + 1) +
                        "> = " + ip.to_string());
    const Rat r = ip.to_rational();
    if (boost::multiprecision::denominator(r) != 1)
      throw DomainError("non-integral multiplicity: <f, chi_" + std::to_string(i + 1) +
                        "> = " + ip.to_string());
    mult.push_back(boost::multiprecision::numerator(r));
  }
  /* The multiplicities must reconstruct f exactly. */
  ClassFn rebuilt(cc.num_classes());
  for (int i = 0; i < t.num_rows(); ++i) {
    if (mult[i] == 0) continue;
    const Cyclotomic m(Rat(mult[i]));
    for (int c = 0; c < cc.num_classes(); ++c) rebuilt[c] += m * t.rows[i][c];
  }
  for (int c = 0; c < cc.num_classes(); ++c)
    if (rebuilt[c] != f[c])
      throw DomainError("decomposition does not reconstruct the class function");
  return mult;
}

long min_faithful_rep_degree(const CharacterTable& t) {
  const ConjClasses& cc = t.group->classes();
  const int k = cc.num_classes();
  if (cc.group_order == 1) return 1;
  if (k > 31) throw DomainError("too many classes for kernel enumeration");
  std::vector<uint32_t> kernels;
  std::vector<long> degs;
  const uint32_t full = (k == 32) ? 0xffffffffu : ((1u << k) - 1);
  for (int i = 0; i < t.num_rows(); ++i) {
    uint32_t mask = 0;
    const Cyclotomic deg(Rat(t.degrees[i]));
    for (int c = 0; c < k; ++c)
      if (t.rows[i][c] == deg) mask |= (1u << c);
    if (mask == full) continue;  // trivial-kernel-free rows only
    kernels.push_back(mask);
    degs.push_back(t.degrees[i]);
  }
  const int r = static_cast<int>(kernels.size());
  long best = -1;
  for (uint32_t subset = 1; subset < (1u << r); ++subset) {
    uint32_t joint = full;
    long total = 0;
    for (int i = 0; i < r; ++i)
      if (subset & (1u << i)) {
        joint &= kernels[i];
        total += degs[i];
      }
    if (joint == 1u && (best == -1 || total < best)) best = total;
  }
  if (best == -1) throw DomainError("no faithful character set found");
  return best;
}

ClassFn natural_permutation_character(const GroupRef& g) {
  const ConjClasses& cc = g->classes();
  ClassFn values;
  for (const auto& rep : cc.reps) {
    long fixed = 0;
    for (int i = 0; i < rep.degree(); ++i)
      if (rep(i) == i) ++fixed;
    values.push_back(Cyclotomic(fixed));
  }
  return values;
}

ClassFn coset_permutation_character(const GroupRef& g, const CosetAction& ca) {
  const ConjClasses& cc = g->classes();
  ClassFn values;
  for (const auto& rep : cc.reps) {
    const Perm img = ca.image(rep);
    long fixed = 0;
    for (int i = 0; i < img.degree(); ++i)
      if (img(i) == i) ++fixed;
    values.push_back(Cyclotomic(fixed));
  }
  return values;
}

TableMatch match_printed_rows(const CharacterTable& t, const PrintedTable& printed) {
  const ConjClasses& cc = t.group->classes();
  const int k = cc.num_classes();
  if (static_cast<int>(printed.column_orders.size()) != k)
    throw DomainError("printed table must cover all classes");
  for (const auto& row : printed.rows)
    if (static_cast<int>(row.size()) != k) throw DomainError("printed row length mismatch");
  /* Group printed columns and computed classes by element order. */
  std::map<long, std::vector<int>> printed_by_order, classes_by_order;
  for (int c = 0; c < k; ++c) printed_by_order[printed.column_orders[c]].push_back(c);
  for (int c = 0; c < k; ++c) classes_by_order[cc.rep_order[c]].push_back(c);
  if (printed_by_order.size() != classes_by_order.size())
    throw DomainError("printed column orders do not match the group");
  std::vector<std::vector<int>> printed_groups, class_groups;
  for (auto& [ord, cols] : printed_by_order) {
    auto it = classes_by_order.find(ord);
    if (it == classes_by_order.end() || it->second.size() != cols.size())
      throw DomainError("printed column orders do not match the group");
    printed_groups.push_back(cols);
    class_groups.push_back(it->second);
  }
  /* Odometer over the permutations of each ambiguous group. */
  std::vector<std::vector<int>> perms(class_groups.size());
  for (std::size_t gi = 0; gi < class_groups.size(); ++gi) perms[gi] = class_groups[gi];
  auto try_assignment = [&]() -> TableMatch {
    TableMatch match;
    match.column_to_class.assign(k, -1);
    for (std::size_t gi = 0; gi < printed_groups.size(); ++gi)
      for (std::size_t j = 0; j < printed_groups[gi].size(); ++j)
        match.column_to_class[printed_groups[gi][j]] = perms[gi][j];
    for (const auto& prow : printed.rows) {
      int found = -1;
      for (int i = 0; i < t.num_rows(); ++i) {
        bool equal = true;
        for (int c = 0; c < k && equal; ++c)
          if (t.rows[i][match.column_to_class[c]] != prow[c]) equal = false;
        if (equal) {
          found = i;
          break;
        }
      }
      if (found == -1) return TableMatch{};  // empty row map signals failure
      match.row_to_irreducible.push_back(found);
    }
    return match;
  };
  while (true) {
    TableMatch match = try_assignment();
    if (match.row_to_irreducible.size() == printed.rows.size()) return match;
    /* Advance the odometer: next_permutation on the last group that has one. */
    std::size_t gi = perms.size();
    bool advanced = false;
    while (gi-- > 0) {
      if (std::next_permutation(perms[gi].begin(), perms[gi].end())) {
        advanced = true;
        break;
      }
      /* wrapped: perms[gi] is back to sorted order; carry to previous group */
    }
    if (!advanced) throw DomainError("no class assignment matches the printed rows");
  }
}

}  // namespace trefoil
