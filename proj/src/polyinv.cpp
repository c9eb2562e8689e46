#include "trefoil/polyinv.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

namespace trefoil {

namespace {

Cyclotomic cyc_one() { return Cyclotomic(1); }

}  // namespace

/* ---------------------------- MultiPoly ---------------------------------- */

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw DomainError("MultiPoly needs at least one variable");
}

void MultiPoly::insert_term(const std::vector<int>& exps,
                            const Cyclotomic& coeff) {
  if (static_cast<int>(exps.size()) != nvars_)
    throw DomainError("exponent vector length does not match variable count");
  for (int e : exps)
    if (e < 0) throw DomainError("negative exponent in monomial");
  if (coeff.is_zero()) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::monomial(int nvars, const std::vector<int>& exps,
                              const Cyclotomic& coeff) {
  MultiPoly f(nvars);
  f.insert_term(exps, coeff);
  return f;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw DomainError("variable index out of range");
  std::vector<int> e(nvars, 0);
  e[i - 1] = 1;
  return monomial(nvars, e, cyc_one());
}

long MultiPoly::degree() const {
  long best = -1;
  for (const auto& [e, c] : terms_) {
    long d = 0;
    for (int x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

bool MultiPoly::is_homogeneous() const {
  long seen = -1;
  for (const auto& [e, c] : terms_) {
    long d = 0;
    for (int x : e) d += x;
    if (seen == -1) {
      seen = d;
    } else if (d != seen) {
      return false;
    }
  }
  return true;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (nvars_ != o.nvars_) throw DomainError("variable counts differ");
  for (const auto& [e, c] : o.terms_) insert_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (nvars_ != o.nvars_) throw DomainError("variable counts differ");
  for (const auto& [e, c] : o.terms_) insert_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw DomainError("variable counts differ");
  MultiPoly out(a.nvars_);
  std::vector<int> e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.insert_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::scaled(const Cyclotomic& c) const {
  MultiPoly out(nvars_);
  if (c.is_zero()) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

Cyclotomic MultiPoly::evaluate(const std::vector<Cyclotomic>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw DomainError("evaluation point length does not match variable count");
  Cyclotomic total;
  for (const auto& [e, c] : terms_) {
    Cyclotomic prod = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) prod *= point[i];
    total += prod;
  }
  return total;
}

MultiPoly MultiPoly::partial_derivative(int i) const {
  if (i < 1 || i > nvars_) throw DomainError("variable index out of range");
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i - 1] == 0) continue;
    std::vector<int> d = e;
    d[i - 1] -= 1;
    out.insert_term(d, c * Cyclotomic(e[i - 1]));
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    std::string mon;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mon.empty()) mon += "*";
      mon += "x" + std::to_string(i + 1);
      if (e[i] > 1) mon += "^" + std::to_string(e[i]);
    }
    if (mon.empty()) {
      out += c.to_string();
    } else {
      out += c.to_string() + "*" + mon;
    }
  }
  return out;
}

namespace {

/* Splits text at the separator character, honouring [] and () nesting. */
std::vector<std::string> split_top_level(const std::string& text, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char ch : text) {
    if (ch == '[' || ch == '(') ++depth;
    if (ch == ']' || ch == ')') --depth;
    if (ch == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

MultiPoly MultiPoly::from_string(int nvars, std::string_view text) {
  std::string clean;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) clean += ch;
  if (clean.empty()) throw ParseError("empty polynomial text");
  MultiPoly out(nvars);
  for (const std::string& term : split_top_level(clean, '+')) {
    if (term.empty()) throw ParseError("empty term in polynomial text");
    Cyclotomic coeff = cyc_one();
    std::vector<int> exps(nvars, 0);
    for (const std::string& factor : split_top_level(term, '*')) {
      if (factor.empty()) throw ParseError("empty factor in polynomial term");
      if (factor[0] == 'x' && factor.size() > 1 &&
          std::isdigit(static_cast<unsigned char>(factor[1]))) {
        std::size_t caret = factor.find('^');
        std::string idx_text = factor.substr(1, caret == std::string::npos
                                                    ? std::string::npos
                                                    : caret - 1);
        long idx = 0;
        try {
          idx = std::stol(idx_text);
        } catch (const std::exception&) {
          throw ParseError("bad variable index in '" + factor + "'");
        }
        if (idx < 1 || idx > nvars)
          throw ParseError("variable index out of range in '" + factor + "'");
        long exp = 1;
        if (caret != std::string::npos) {
          try {
            exp = std::stol(factor.substr(caret + 1));
          } catch (const std::exception&) {
            throw ParseError("bad exponent in '" + factor + "'");
          }
          if (exp < 1) throw ParseError("exponent must be positive in '" +
                                        factor + "'");
        }
        exps[idx - 1] += static_cast<int>(exp);
      } else {
        coeff *= Cyclotomic::from_string(factor);
      }
    }
    out.insert_term(exps, coeff);
  }
  return out;
}

MultiPoly elementary_symmetric(int nvars, int k) {
  if (k < 0 || k > nvars)
    throw DomainError("elementary symmetric index out of range");
  MultiPoly out(nvars);
  std::vector<int> pick(k);
  std::vector<int> e(nvars);
  /* Enumerate k-subsets of {0..nvars-1}. */
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    std::fill(e.begin(), e.end(), 0);
    for (int i = 0; i < k; ++i) e[pick[i]] = 1;
    out += MultiPoly::monomial(nvars, e, cyc_one());
    if (k == 0) break;
    int pos = k - 1;
    while (pos >= 0 && pick[pos] == nvars - k + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int i = pos + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
  }
  return out;
}

MultiPoly power_sum(int nvars, int k) {
  if (k < 1) throw DomainError("power sum index must be positive");
  MultiPoly out(nvars);
  for (int i = 1; i <= nvars; ++i) {
    std::vector<int> e(nvars, 0);
    e[i - 1] = k;
    out += MultiPoly::monomial(nvars, e, cyc_one());
  }
  return out;
}

/* ---------------------------- ExactMatrix -------------------------------- */

ExactMatrix::ExactMatrix(int dim, Cyclotomic fill)
    : dim_(dim), a_(static_cast<std::size_t>(dim) * dim, fill) {
  if (dim < 1) throw DomainError("matrix dimension must be positive");
}

ExactMatrix ExactMatrix::identity(int dim) {
  ExactMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = cyc_one();
  return m;
}

ExactMatrix ExactMatrix::substitution(int dim, const std::vector<int>& images) {
  if (static_cast<int>(images.size()) != dim)
    throw DomainError("substitution image list length does not match dim");
  ExactMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    if (images[i] < 0 || images[i] >= dim)
      throw DomainError("substitution image out of range");
    m.at(i, images[i]) = cyc_one();
  }
  return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Cyclotomic>& diag) {
  ExactMatrix m(static_cast<int>(diag.size()));
  for (int i = 0; i < m.dim_; ++i) m.at(i, i) = diag[i];
  return m;
}

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.dim_ != y.dim_) throw DomainError("matrix dimensions differ");
  ExactMatrix out(x.dim_);
  for (int i = 0; i < x.dim_; ++i)
    for (int k = 0; k < x.dim_; ++k) {
      const Cyclotomic& v = x.at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < x.dim_; ++j) {
        if (y.at(k, j).is_zero()) continue;
        out.at(i, j) += v * y.at(k, j);
      }
    }
  return out;
}

Cyclotomic ExactMatrix::det() const {
  /* Gaussian elimination over the cyclotomic field. */
  ExactMatrix m = *this;
  Cyclotomic result = cyc_one();
  for (int col = 0; col < dim_; ++col) {
    int pivot = -1;
    for (int r = col; r < dim_; ++r)
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Cyclotomic();
    if (pivot != col) {
      for (int j = 0; j < dim_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      result = -result;
    }
    result *= m.at(col, col);
    Cyclotomic inv = m.at(col, col).inverse();
    for (int r = col + 1; r < dim_; ++r) {
      if (m.at(r, col).is_zero()) continue;
      Cyclotomic f = m.at(r, col) * inv;
      for (int j = col; j < dim_; ++j) m.at(r, j) -= f * m.at(col, j);
    }
  }
  return result;
}

ExactMatrix ExactMatrix::inverse() const {
  ExactMatrix m = *this;
  ExactMatrix inv = ExactMatrix::identity(dim_);
  for (int col = 0; col < dim_; ++col) {
    int pivot = -1;
    for (int r = col; r < dim_; ++r)
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw DomainError("matrix is singular");
    if (pivot != col) {
      for (int j = 0; j < dim_; ++j) {
        std::swap(m.at(pivot, j), m.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    Cyclotomic scale = m.at(col, col).inverse();
    for (int j = 0; j < dim_; ++j) {
      m.at(col, j) *= scale;
      inv.at(col, j) *= scale;
    }
    for (int r = 0; r < dim_; ++r) {
      if (r == col || m.at(r, col).is_zero()) continue;
      Cyclotomic f = m.at(r, col);
      for (int j = 0; j < dim_; ++j) {
        m.at(r, j) -= f * m.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

Cyclotomic ExactMatrix::trace() const {
  Cyclotomic t;
  for (int i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

std::string ExactMatrix::key() const {
  std::string out = std::to_string(dim_) + ":";
  for (const Cyclotomic& c : a_) {
    out += c.to_string();
    out += ";";
  }
  return out;
}

bool ExactMatrix::is_small_integer() const {
  static const Int kBound = Int(1) << 62;
  for (const Cyclotomic& c : a_) {
    if (!c.is_rational()) return false;
    Rat r = c.to_rational();
    if (boost::multiprecision::denominator(r) != 1) return false;
    Int num = boost::multiprecision::numerator(r);
    if (num > kBound || num < -kBound) return false;
  }
  return true;
}

ExactMatrix extend_fixing_first(const ExactMatrix& m) {
  ExactMatrix out(m.dim() + 1);
  out.at(0, 0) = cyc_one();
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) out.at(i + 1, j + 1) = m.at(i, j);
  return out;
}

/* ---------------------------- MatrixGroup -------------------------------- */

namespace {

unsigned long long int_matrix_hash(const long long* a, int n2) {
  unsigned long long h = 1469598103934665603ULL;
  for (int i = 0; i < n2; ++i) {
    unsigned long long x = static_cast<unsigned long long>(a[i]);
    x *= 0x9E3779B97F4A7C15ULL;
    x ^= x >> 29;
    h = (h ^ x) * 1099511628211ULL;
  }
  return h;
}

constexpr long long kEntryBound = 300000000LL;  // keeps products in int64

void int_matrix_mult(const long long* x, const long long* y, long long* out,
                     int n) {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out[i * n + j] = 0;
    for (int k = 0; k < n; ++k) {
      long long v = x[i * n + k];
      if (v == 0) continue;
      const long long* yr = y + k * n;
      long long* orow = out + i * n;
      for (int j = 0; j < n; ++j) orow[j] += v * yr[j];
    }
  }
  for (int i = 0; i < n * n; ++i)
    if (out[i] > kEntryBound || out[i] < -kEntryBound)
      throw DomainError("matrix entries grew beyond the integer fast path");
}

std::vector<long long> to_int_matrix(const ExactMatrix& m) {
  std::vector<long long> out;
  out.reserve(static_cast<std::size_t>(m.dim()) * m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) {
      Rat r = m.at(i, j).to_rational();
      out.push_back(
          boost::multiprecision::numerator(r).convert_to<long long>());
    }
  return out;
}

ExactMatrix from_int_matrix(const long long* a, int n) {
  ExactMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) = Cyclotomic(Rat(Int(a[i * n + j])));
  return m;
}

}  // namespace

std::size_t MatrixGroup::size() const {
  if (!enumerated()) throw DomainError("matrix group enumeration missing");
  return count_;
}

ExactMatrix MatrixGroup::element(std::size_t idx) const {
  if (idx >= size()) throw DomainError("element index out of range");
  if (int_mode_)
    return from_int_matrix(&flat_[idx * dim_ * dim_], dim_);
  return cyc_elems_[idx];
}

bool MatrixGroup::contains(const ExactMatrix& m) const {
  if (!enumerated()) throw DomainError("matrix group enumeration missing");
  if (m.dim() != dim_) return false;
  if (int_mode_) {
    if (!m.is_small_integer()) return false;
    std::vector<long long> im = to_int_matrix(m);
    int n2 = dim_ * dim_;
    auto it = buckets_.find(int_matrix_hash(im.data(), n2));
    if (it == buckets_.end()) return false;
    for (unsigned idx : it->second)
      if (std::equal(im.begin(), im.end(),
                     flat_.begin() + static_cast<std::size_t>(idx) * n2))
        return true;
    return false;
  }
  auto it = keymap_.find(m.key());
  return it != keymap_.end() && cyc_elems_[it->second] == m;
}

MatrixGroup group_closure(const std::vector<ExactMatrix>& gens,
                          std::size_t budget) {
  if (gens.empty()) throw DomainError("matrix group needs generators");
  int dim = gens[0].dim();
  for (const ExactMatrix& g : gens) {
    if (g.dim() != dim) throw DomainError("generator dimensions differ");
    if (g.det().is_zero()) throw DomainError("singular generator");
  }
  MatrixGroup grp;
  grp.dim_ = dim;
  grp.gens_ = gens;
  bool int_mode = true;
  for (const ExactMatrix& g : gens)
    if (!g.is_small_integer()) int_mode = false;
  grp.int_mode_ = int_mode;
  int n2 = dim * dim;

  if (int_mode) {
    std::vector<std::vector<long long>> igens;
    for (const ExactMatrix& g : gens) igens.push_back(to_int_matrix(g));
    auto push = [&](const std::vector<long long>& m) -> bool {
      unsigned long long h = int_matrix_hash(m.data(), n2);
      auto& bucket = grp.buckets_[h];
      for (unsigned idx : bucket)
        if (std::equal(m.begin(), m.end(),
                       grp.flat_.begin() + static_cast<std::size_t>(idx) * n2))
          return false;
      if (grp.count_ >= budget)
        throw DomainError("matrix group closure budget exceeded");
      bucket.push_back(static_cast<unsigned>(grp.count_));
      grp.flat_.insert(grp.flat_.end(), m.begin(), m.end());
      ++grp.count_;
      return true;
    };
    std::vector<long long> ident(n2, 0);
    for (int i = 0; i < dim; ++i) ident[i * dim + i] = 1;
    push(ident);
    std::vector<long long> prod(n2);
    for (std::size_t head = 0; head < grp.count_; ++head) {
      std::vector<long long> cur(
          grp.flat_.begin() + static_cast<std::size_t>(head) * n2,
          grp.flat_.begin() + static_cast<std::size_t>(head + 1) * n2);
      for (const auto& g : igens) {
        int_matrix_mult(cur.data(), g.data(), prod.data(), dim);
        push(prod);
      }
    }
  } else {
    auto push = [&](const ExactMatrix& m) -> bool {
      std::string k = m.key();
      auto it = grp.keymap_.find(k);
      if (it != grp.keymap_.end()) {
        if (grp.cyc_elems_[it->second] != m)
          throw Error("matrix serialization collision");
        return false;
      }
      if (grp.count_ >= budget)
        throw DomainError("matrix group closure budget exceeded");
      grp.keymap_.emplace(std::move(k), static_cast<unsigned>(grp.count_));
      grp.cyc_elems_.push_back(m);
      ++grp.count_;
      return true;
    };
    push(ExactMatrix::identity(dim));
    for (std::size_t head = 0; head < grp.count_; ++head) {
      ExactMatrix cur = grp.cyc_elems_[head];
      for (const ExactMatrix& g : gens) push(cur * g);
    }
  }
  return grp;
}

MatrixGroup weyl_e6() {
  /* Bourbaki numbering: chain 1-3-4-5-6 with node 2 attached to node 4. */
  static const int kEdges[5][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
  int cartan[6][6] = {};
  for (int i = 0; i < 6; ++i) cartan[i][i] = 2;
  for (const auto& e : kEdges) {
    cartan[e[0] - 1][e[1] - 1] = -1;
    cartan[e[1] - 1][e[0] - 1] = -1;
  }
  std::vector<ExactMatrix> gens;
  for (int i = 0; i < 6; ++i) {
    ExactMatrix s = ExactMatrix::identity(6);
    for (int j = 0; j < 6; ++j)
      s.at(i, j) = Cyclotomic(static_cast<long>((i == j ? 1 : 0) -
                                                cartan[i][j]));
    gens.push_back(s);
  }
  MatrixGroup w = group_closure(gens, 60000);
  if (w.size() != 51840)
    throw Error("Weyl group of E6 closure has wrong order");
  return w;
}

MatrixGroup derived_subgroup(const MatrixGroup& g, std::size_t budget) {
  const std::vector<ExactMatrix>& gens = g.generators();
  if (gens.empty()) throw DomainError("matrix group needs generators");
  ExactMatrix ident = ExactMatrix::identity(g.dim());
  std::vector<ExactMatrix> sub_gens;
  std::map<std::string, bool> seen;
  auto add = [&](const ExactMatrix& m) -> bool {
    if (m == ident) return false;
    std::string k = m.key();
    if (seen.count(k)) return false;
    seen[k] = true;
    sub_gens.push_back(m);
    return true;
  };
  std::vector<ExactMatrix> inverses;
  for (const ExactMatrix& a : gens) inverses.push_back(a.inverse());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      add(gens[i] * gens[j] * inverses[i] * inverses[j]);
    }
  if (sub_gens.empty()) return group_closure({ident}, budget);

  MatrixGroup h = group_closure(sub_gens, budget);
  while (true) {
    bool changed = false;
    std::size_t base = sub_gens.size();
    for (std::size_t s = 0; s < base; ++s)
      for (std::size_t a = 0; a < gens.size(); ++a) {
        ExactMatrix conj = gens[a] * sub_gens[s] * inverses[a];
        if (!h.contains(conj)) changed |= add(conj);
      }
    if (!changed) break;
    h = group_closure(sub_gens, budget);
  }
  if (g.enumerated() && g.size() % h.size() != 0)
    throw Error("derived subgroup order does not divide the group order");
  return h;
}

std::pair<ExactMatrix, ExactMatrix> klein_55_generators() {
  ExactMatrix sigma = ExactMatrix::substitution(5, {1, 2, 3, 4, 0});
  /* Exponents solve 2 a_i + a_{i+1} = 0 (mod 11), a_1 = 1. */
  static const long kExponents[5] = {1, 9, 4, 3, 5};
  for (int i = 0; i < 5; ++i) {
    long next = kExponents[(i + 1) % 5];
    if ((2 * kExponents[i] + next) % 11 != 0)
      throw Error("Klein diagonal exponents violate the defining recursion");
  }
  Cyclotomic z = Cyclotomic::zeta(11);
  std::vector<Cyclotomic> diag;
  for (long a : kExponents) {
    Cyclotomic p = cyc_one();
    for (long k = 0; k < a; ++k) p *= z;
    diag.push_back(p);
  }
  return {sigma, ExactMatrix::diagonal(diag)};
}

/* ------------------------- monomial bases -------------------------------- */

namespace {

struct MonTables {
  int nvars = 0;
  int max_degree = 0;
  /* mons[k]: exponent vectors of total degree k, lexicographically
   * ascending. */
  std::vector<std::vector<std::vector<int>>> mons;
  /* first_var[k][m]: first variable with positive exponent (k >= 1). */
  std::vector<std::vector<int>> first_var;
  /* prev_idx[k][m]: index in mons[k-1] of the monomial minus that
   * variable (k >= 1). */
  std::vector<std::vector<int>> prev_idx;
  /* mult[k][m*nvars + v]: index in mons[k+1] of the monomial times x_v
   * (k < max_degree). */
  std::vector<std::vector<int>> mult;
};

void gen_mons(int nvars, int degree, int pos, int left, std::vector<int>& cur,
              std::vector<std::vector<int>>& out) {
  if (pos == nvars - 1) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= left; ++e) {
    cur[pos] = e;
    gen_mons(nvars, degree, pos + 1, left - e, cur, out);
  }
}

const MonTables& mon_tables(int nvars, int degree) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, MonTables> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(nvars, degree);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  MonTables t;
  t.nvars = nvars;
  t.max_degree = degree;
  t.mons.resize(degree + 1);
  t.first_var.resize(degree + 1);
  t.prev_idx.resize(degree + 1);
  t.mult.resize(degree + 1);
  std::vector<std::map<std::vector<int>, int>> index(degree + 1);
  for (int k = 0; k <= degree; ++k) {
    std::vector<int> cur(nvars, 0);
    gen_mons(nvars, k, 0, k, cur, t.mons[k]);
    for (std::size_t m = 0; m < t.mons[k].size(); ++m)
      index[k][t.mons[k][m]] = static_cast<int>(m);
  }
  for (int k = 1; k <= degree; ++k) {
    std::size_t count = t.mons[k].size();
    t.first_var[k].resize(count);
    t.prev_idx[k].resize(count);
    for (std::size_t m = 0; m < count; ++m) {
      const std::vector<int>& e = t.mons[k][m];
      int v = 0;
      while (e[v] == 0) ++v;
      t.first_var[k][m] = v;
      std::vector<int> prev = e;
      prev[v] -= 1;
      t.prev_idx[k][m] = index[k - 1][prev];
    }
  }
  for (int k = 0; k < degree; ++k) {
    std::size_t count = t.mons[k].size();
    t.mult[k].resize(count * nvars);
    for (std::size_t m = 0; m < count; ++m)
      for (int v = 0; v < nvars; ++v) {
        std::vector<int> up = t.mons[k][m];
        up[v] += 1;
        t.mult[k][m * nvars + v] = index[k + 1][up];
      }
  }
  return cache.emplace(key, std::move(t)).first->second;
}

/* ----------------------- symmetric power sums ---------------------------- */

/* Sum over the enumerated group of the matrices of Sym^d in the monomial
 * basis: column m holds the coefficients of act(g, monomial m), summed. */
struct SymSum {
  int basis = 0;
  bool int_mode = false;
  std::vector<Int> ints;         // basis*basis, row-major, int mode
  std::vector<Cyclotomic> cycs;  // basis*basis, row-major, generic mode
};

}  // namespace

class SymSumBuilder {
 public:
  static SymSum build(const MatrixGroup& g, int d) {
    if (!g.enumerated()) throw DomainError("matrix group enumeration missing");
    if (d < 0) throw DomainError("degree must be non-negative");
    int n = g.dim_;
    const MonTables& t = mon_tables(n, d);
    std::size_t basis = t.mons[d].size();
    if (basis > 5000)
      throw DomainError("degree-d monomial space exceeds the memory budget");
    SymSum s;
    s.basis = static_cast<int>(basis);
    s.int_mode = g.int_mode_;
    if (d == 0) {
      if (s.int_mode)
        s.ints.assign(1, Int(static_cast<long long>(g.count_)));
      else
        s.cycs.assign(1, Cyclotomic(Rat(Int(static_cast<long long>(
                             g.count_)))));
      return s;
    }
    if (s.int_mode)
      build_int(g, d, t, s);
    else
      build_cyc(g, d, t, s);
    return s;
  }

 private:
  static void build_int(const MatrixGroup& g, int d, const MonTables& t,
                        SymSum& s) {
    int n = g.dim_;
    int n2 = n * n;
    std::size_t basis = t.mons[d].size();
    std::vector<long long> acc(basis * basis, 0);
    /* img[k] is a flat (#mons[k] x #mons[k]) coefficient table for the
     * images of the degree-k basis monomials under the current element. */
    std::vector<std::vector<long long>> img(d + 1);
    for (int k = 1; k <= d; ++k)
      img[k].resize(t.mons[k].size() * t.mons[k].size());
    for (std::size_t e = 0; e < g.count_; ++e) {
      const long long* m = &g.flat_[e * n2];
      std::size_t n1 = t.mons[1].size();
      for (std::size_t a = 0; a < n1; ++a)
        for (std::size_t b = 0; b < n1; ++b)
          img[1][a * n1 + b] = m[t.first_var[1][a] * n + t.first_var[1][b]];
      for (int k = 2; k <= d; ++k) {
        std::size_t ck = t.mons[k].size();
        std::size_t cp = t.mons[k - 1].size();
        std::fill(img[k].begin(), img[k].end(), 0LL);
        for (std::size_t mm = 0; mm < ck; ++mm) {
          int var = t.first_var[k][mm];
          const long long* src = &img[k - 1][static_cast<std::size_t>(
                                                 t.prev_idx[k][mm]) *
                                             cp];
          long long* dst = &img[k][mm * ck];
          const long long* mrow = m + var * n;
          const int* up = &t.mult[k - 1][0];
          for (std::size_t tt = 0; tt < cp; ++tt) {
            long long c = src[tt];
            if (c == 0) continue;
            const int* urow = up + tt * n;
            for (int j = 0; j < n; ++j) {
              long long mv = mrow[j];
              if (mv != 0) dst[urow[j]] += c * mv;
            }
          }
        }
      }
      for (std::size_t mm = 0; mm < basis; ++mm) {
        const long long* col = &img[d][mm * basis];
        for (std::size_t r = 0; r < basis; ++r) acc[r * basis + mm] += col[r];
      }
    }
    s.ints.reserve(acc.size());
    for (long long v : acc) s.ints.push_back(Int(v));
  }

  static void build_cyc(const MatrixGroup& g, int d, const MonTables& t,
                        SymSum& s) {
    int n = g.dim_;
    std::size_t basis = t.mons[d].size();
    s.cycs.assign(basis * basis, Cyclotomic());
    std::vector<std::vector<Cyclotomic>> img(d + 1);
    for (int k = 1; k <= d; ++k)
      img[k].resize(t.mons[k].size() * t.mons[k].size());
    for (std::size_t e = 0; e < g.count_; ++e) {
      const ExactMatrix& m = g.cyc_elems_[e];
      std::size_t n1 = t.mons[1].size();
      for (std::size_t a = 0; a < n1; ++a)
        for (std::size_t b = 0; b < n1; ++b)
          img[1][a * n1 + b] = m.at(t.first_var[1][a], t.first_var[1][b]);
      for (int k = 2; k <= d; ++k) {
        std::size_t ck = t.mons[k].size();
        std::size_t cp = t.mons[k - 1].size();
        std::fill(img[k].begin(), img[k].end(), Cyclotomic());
        for (std::size_t mm = 0; mm < ck; ++mm) {
          int var = t.first_var[k][mm];
          const Cyclotomic* src = &img[k - 1][static_cast<std::size_t>(
                                                  t.prev_idx[k][mm]) *
                                              cp];
          Cyclotomic* dst = &img[k][mm * ck];
          for (std::size_t tt = 0; tt < cp; ++tt) {
            if (src[tt].is_zero()) continue;
            for (int j = 0; j < n; ++j) {
              const Cyclotomic& mv = m.at(var, j);
              if (mv.is_zero()) continue;
              dst[t.mult[k - 1][tt * n + j]] += src[tt] * mv;
            }
          }
        }
      }
      for (std::size_t mm = 0; mm < basis; ++mm)
        for (std::size_t r = 0; r < basis; ++r)
          s.cycs[r * basis + mm] += img[d][mm * basis + r];
    }
  }

 public:
  /* Access to compact element storage for trace computations. */
  static bool int_mode(const MatrixGroup& g) { return g.int_mode_; }
  static const long long* int_element(const MatrixGroup& g, std::size_t idx) {
    return &g.flat_[idx * g.dim_ * g.dim_];
  }
  static const ExactMatrix& cyc_element(const MatrixGroup& g,
                                        std::size_t idx) {
    return g.cyc_elems_[idx];
  }
};

/* ----------------------- exact rank computations ------------------------- */

namespace {

/* Fraction-free Bareiss elimination; the matrix is consumed. */
long bareiss_rank(std::vector<Int>& a, long rows, long cols) {
  long rank = 0;
  Int prev = 1;
  while (true) {
    long pr = -1, pc = -1;
    for (long i = rank; i < rows && pr < 0; ++i)
      for (long j = rank; j < cols; ++j)
        if (a[i * cols + j] != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr < 0) return rank;
    if (pr != rank)
      for (long j = 0; j < cols; ++j)
        std::swap(a[pr * cols + j], a[rank * cols + j]);
    if (pc != rank)
      for (long i = 0; i < rows; ++i)
        std::swap(a[i * cols + pc], a[i * cols + rank]);
    const Int pivot = a[rank * cols + rank];
    for (long i = rank + 1; i < rows; ++i) {
      for (long j = rank + 1; j < cols; ++j)
        a[i * cols + j] = (pivot * a[i * cols + j] -
                           a[i * cols + rank] * a[rank * cols + j]) /
                          prev;
      a[i * cols + rank] = 0;
    }
    prev = pivot;
    ++rank;
  }
}

/* Row echelon rank over the cyclotomic field; the matrix is consumed. */
long gauss_rank_cyc(std::vector<std::vector<Cyclotomic>>& m) {
  long rows = static_cast<long>(m.size());
  if (rows == 0) return 0;
  long cols = static_cast<long>(m[0].size());
  long rank = 0;
  for (long col = 0; col < cols && rank < rows; ++col) {
    long pivot = -1;
    for (long r = rank; r < rows; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    Cyclotomic inv = m[rank][col].inverse();
    for (long j = col; j < cols; ++j) m[rank][j] *= inv;
    for (long r = rank + 1; r < rows; ++r) {
      if (m[r][col].is_zero()) continue;
      Cyclotomic f = m[r][col];
      for (long j = col; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

/* ----------------------- action and averaging ---------------------------- */

MultiPoly act(const ExactMatrix& g, const MultiPoly& f) {
  if (g.dim() != f.nvars())
    throw DomainError("matrix dimension does not match variable count");
  int n = f.nvars();
  std::vector<MultiPoly> rows;
  rows.reserve(n);
  for (int i = 0; i < n; ++i) {
    MultiPoly row(n);
    for (int j = 0; j < n; ++j) {
      if (g.at(i, j).is_zero()) continue;
      row += MultiPoly::variable(n, j + 1).scaled(g.at(i, j));
    }
    rows.push_back(row);
  }
  MultiPoly out(n);
  for (const auto& [e, c] : f.terms()) {
    MultiPoly prod = MultiPoly::monomial(n, std::vector<int>(n, 0), cyc_one());
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < e[i]; ++k) prod = prod * rows[i];
    out += prod.scaled(c);
  }
  return out;
}

bool is_invariant(const MultiPoly& f, const std::vector<ExactMatrix>& gens) {
  if (!f.is_homogeneous())
    throw DomainError("invariance checks require a homogeneous form");
  for (const ExactMatrix& g : gens)
    if (act(g, f) != f) return false;
  return true;
}

MultiPoly reynolds(const MultiPoly& f, const MatrixGroup& g) {
  if (!g.enumerated()) throw DomainError("matrix group enumeration missing");
  if (f.nvars() != g.dim())
    throw DomainError("matrix dimension does not match variable count");
  int n = f.nvars();
  /* Split into graded pieces and average each with the summed symmetric
   * power matrix. */
  std::map<int, std::map<std::vector<int>, Cyclotomic>> graded;
  for (const auto& [e, c] : f.terms()) {
    int d = 0;
    for (int x : e) d += x;
    graded[d][e] = c;
  }
  Cyclotomic inv_order =
      Cyclotomic(Rat(Int(1), Int(static_cast<long long>(g.size()))));
  MultiPoly out(n);
  for (const auto& [d, piece] : graded) {
    const MonTables& t = mon_tables(n, d);
    std::size_t basis = t.mons[d].size();
    std::vector<Cyclotomic> coeffs(basis);
    std::map<std::vector<int>, int> index;
    for (std::size_t m = 0; m < basis; ++m) index[t.mons[d][m]] = (int)m;
    for (const auto& [e, c] : piece) coeffs[index[e]] = c;
    SymSum s = SymSumBuilder::build(g, d);
    for (std::size_t r = 0; r < basis; ++r) {
      Cyclotomic total;
      for (std::size_t m = 0; m < basis; ++m) {
        if (coeffs[m].is_zero()) continue;
        Cyclotomic entry = s.int_mode
                               ? Cyclotomic(Rat(s.ints[r * basis + m]))
                               : s.cycs[r * basis + m];
        total += entry * coeffs[m];
      }
      total *= inv_order;
      if (!total.is_zero())
        out += MultiPoly::monomial(n, t.mons[d][r], total);
    }
  }
  return out;
}

long invariant_space_dim_direct(const MatrixGroup& g, int d) {
  if (!g.enumerated()) throw DomainError("matrix group enumeration missing");
  if (d < 0) throw DomainError("degree must be non-negative");
  if (d == 0) return 1;
  SymSum s = SymSumBuilder::build(g, d);
  long basis = s.basis;
  long rank = 0;
  Int order(static_cast<long long>(g.size()));
  if (s.int_mode) {
    Int trace = 0;
    for (long i = 0; i < basis; ++i) trace += s.ints[i * basis + i];
    std::vector<Int> work = s.ints;
    rank = bareiss_rank(work, basis, basis);
    if (trace != Int(rank) * order)
      throw Error("projector trace does not match its rank");
  } else {
    Cyclotomic trace;
    for (long i = 0; i < basis; ++i) trace += s.cycs[i * basis + i];
    std::vector<std::vector<Cyclotomic>> work(
        basis, std::vector<Cyclotomic>(basis));
    for (long i = 0; i < basis; ++i)
      for (long j = 0; j < basis; ++j) work[i][j] = s.cycs[i * basis + j];
    rank = gauss_rank_cyc(work);
    if (!trace.is_rational() ||
        trace.to_rational() != Rat(Int(rank) * order))
      throw Error("projector trace does not match its rank");
  }
  return rank;
}

long invariant_space_dim_generators(int nvars,
                                    const std::vector<ExactMatrix>& gens,
                                    int d) {
  if (gens.empty()) throw DomainError("matrix group needs generators");
  for (const ExactMatrix& g : gens)
    if (g.dim() != nvars) throw DomainError("generator dimensions differ");
  if (d < 0) throw DomainError("degree must be non-negative");
  if (d == 0) return 1;
  const MonTables& t = mon_tables(nvars, d);
  std::size_t basis = t.mons[d].size();
  if (basis > 5000)
    throw DomainError("degree-d monomial space exceeds the memory budget");
  std::map<std::vector<int>, int> index;
  for (std::size_t m = 0; m < basis; ++m) index[t.mons[d][m]] = (int)m;
  /* Stack act(g) - id for every generator; invariants form the kernel. */
  std::vector<std::vector<Cyclotomic>> rows;
  for (const ExactMatrix& g : gens) {
    std::vector<std::vector<Cyclotomic>> block(
        basis, std::vector<Cyclotomic>(basis));
    for (std::size_t m = 0; m < basis; ++m) {
      MultiPoly image =
          act(g, MultiPoly::monomial(nvars, t.mons[d][m], cyc_one()));
      for (const auto& [e, c] : image.terms()) block[index[e]][m] = c;
      block[m][m] -= cyc_one();
    }
    for (auto& row : block) rows.push_back(std::move(row));
  }
  long rank = gauss_rank_cyc(rows);
  return static_cast<long>(basis) - rank;
}

Rat molien_count_from_traces(const MatrixGroup& g, int d) {
  if (!g.enumerated()) throw DomainError("matrix group enumeration missing");
  if (d < 0) throw DomainError("degree must be non-negative");
  if (d == 0) return Rat(1);
  int n = g.dim();
  int n2 = n * n;
  Cyclotomic total;
  std::vector<Cyclotomic> p(d + 1);
  std::vector<Cyclotomic> h(d + 1);
  if (SymSumBuilder::int_mode(g)) {
    std::vector<long long> pw(n2), nxt(n2);
    for (std::size_t e = 0; e < g.size(); ++e) {
      const long long* m = SymSumBuilder::int_element(g, e);
      std::copy(m, m + n2, pw.begin());
      for (int k = 1; k <= d; ++k) {
        long long tr = 0;
        for (int i = 0; i < n; ++i) tr += pw[i * n + i];
        p[k] = Cyclotomic(static_cast<long>(tr));
        if (k < d) {
          int_matrix_mult(pw.data(), m, nxt.data(), n);
          pw.swap(nxt);
        }
      }
      h[0] = cyc_one();
      for (int k = 1; k <= d; ++k) {
        Cyclotomic sum;
        for (int j = 1; j <= k; ++j) sum += p[j] * h[k - j];
        h[k] = sum * Cyclotomic(Rat(Int(1), Int(k)));
      }
      total += h[d];
    }
  } else {
    for (std::size_t e = 0; e < g.size(); ++e) {
      const ExactMatrix& m = SymSumBuilder::cyc_element(g, e);
      ExactMatrix pw = m;
      for (int k = 1; k <= d; ++k) {
        p[k] = pw.trace();
        if (k < d) pw = pw * m;
      }
      h[0] = cyc_one();
      for (int k = 1; k <= d; ++k) {
        Cyclotomic sum;
        for (int j = 1; j <= k; ++j) sum += p[j] * h[k - j];
        h[k] = sum * Cyclotomic(Rat(Int(1), Int(k)));
      }
      total += h[d];
    }
  }
  if (!total.is_rational())
    throw Error("Molien sum over the group is not rational");
  Rat result = total.to_rational() / Rat(Int(static_cast<long long>(g.size())));
  if (boost::multiprecision::denominator(result) != 1 || result < 0)
    throw Error("Molien count failed the integrality check");
  return result;
}

/* --------------------------- variety registry ---------------------------- */

namespace {

MultiPoly klein_cubic_form() {
  /* x1^2 x2 + x2^2 x3 + x3^2 x4 + x4^2 x5 + x5^2 x1. */
  MultiPoly f(5);
  for (int i = 0; i < 5; ++i) {
    std::vector<int> e(5, 0);
    e[i] = 2;
    e[(i + 1) % 5] = 1;
    f += MultiPoly::monomial(5, e, Cyclotomic(1));
  }
  return f;
}

MultiPoly palatini_quartic_form() {
  /* In coordinates x1..x6, with x1 the distinguished extra coordinate:
   * x1^4 + x1 * (Klein cubic in x2..x6) + the five cyclic quartic terms
   * x_i^2 x_{i+2} x_{i+4} on the last five coordinates. */
  MultiPoly f(6);
  {
    std::vector<int> e(6, 0);
    e[0] = 4;
    f += MultiPoly::monomial(6, e, Cyclotomic(1));
  }
  for (int i = 0; i < 5; ++i) {
    std::vector<int> e(6, 0);
    e[0] = 1;
    e[1 + i] = 2;
    e[1 + (i + 1) % 5] += 1;
    f += MultiPoly::monomial(6, e, Cyclotomic(1));
  }
  for (int i = 0; i < 5; ++i) {
    std::vector<int> e(6, 0);
    e[1 + i] = 2;
    e[1 + (i + 2) % 5] += 1;
    e[1 + (i + 4) % 5] += 1;
    f += MultiPoly::monomial(6, e, Cyclotomic(1));
  }
  return f;
}

}  // namespace

const std::vector<std::string>& variety_names() {
  static const std::vector<std::string> kNames = {
      "klein_cubic", "segre_cubic", "burkhardt", "x6prime", "palatini"};
  return kNames;
}

Variety variety(const std::string& name) {
  if (name == "klein_cubic") return {name, 5, {klein_cubic_form()}};
  if (name == "segre_cubic")
    return {name, 6, {elementary_symmetric(6, 1), elementary_symmetric(6, 3)}};
  if (name == "burkhardt")
    return {name, 6, {elementary_symmetric(6, 1), elementary_symmetric(6, 4)}};
  if (name == "x6prime")
    return {name,
            7,
            {elementary_symmetric(7, 1), elementary_symmetric(7, 2),
             elementary_symmetric(7, 3)}};
  if (name == "palatini") return {name, 6, {palatini_quartic_form()}};
  std::string msg = "unknown variety '" + name + "'; known names:";
  for (const std::string& n : variety_names()) msg += " " + n;
  throw DomainError(msg);
}

/* ----------------------- finite-field point scans ------------------------ */

namespace {

bool is_prime_long(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long mod_pow(long b, long e, long p) {
  long r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

long mod_inv(long a, long p) { return mod_pow((a % p + p) % p, p - 2, p); }

struct CompiledTerm {
  long coef;
  std::vector<int> vars;  // variable indices, one per exponent unit
};

struct CompiledForm {
  std::vector<CompiledTerm> terms;
};

CompiledForm compile_form(const MultiPoly& f, long p) {
  CompiledForm out;
  for (const auto& [e, c] : f.terms()) {
    if (!c.is_rational())
      throw DomainError(
          "finite-field scans require rational coefficients");
    Rat r = c.to_rational();
    Int den = boost::multiprecision::denominator(r);
    if (den % p == 0)
      throw DomainError("prime divides a coefficient denominator");
    Int num_red = boost::multiprecision::numerator(r) % p;
    Int den_red = den % p;
    long num = num_red.convert_to<long>();
    long dn = den_red.convert_to<long>();
    long coef = ((num % p + p) % p) * mod_inv(dn, p) % p;
    if (coef == 0) continue;
    CompiledTerm t;
    t.coef = coef;
    for (int v = 0; v < f.nvars(); ++v)
      for (int k = 0; k < e[v]; ++k) t.vars.push_back(v);
    out.terms.push_back(std::move(t));
  }
  return out;
}

long eval_form(const CompiledForm& f, const std::vector<long>& x, long p) {
  long total = 0;
  for (const CompiledTerm& t : f.terms) {
    long v = t.coef;
    for (int var : t.vars) {
      v = v * x[var] % p;
      if (v == 0) break;
    }
    total += v;
  }
  return total % p;
}

long gauss_rank_mod_p(std::vector<std::vector<long>> m, long p) {
  long rows = static_cast<long>(m.size());
  if (rows == 0) return 0;
  long cols = static_cast<long>(m[0].size());
  long rank = 0;
  for (long col = 0; col < cols && rank < rows; ++col) {
    long pivot = -1;
    for (long r = rank; r < rows; ++r)
      if (m[r][col] % p != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    long inv = mod_inv(m[rank][col], p);
    for (long j = col; j < cols; ++j) m[rank][j] = m[rank][j] % p * inv % p;
    for (long r = rank + 1; r < rows; ++r) {
      long f = m[r][col] % p;
      if (f == 0) continue;
      for (long j = col; j < cols; ++j)
        m[r][j] = ((m[r][j] - f * m[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<std::vector<long>> singular_points_mod_p(
    const std::vector<MultiPoly>& forms, long p) {
  if (forms.empty()) throw DomainError("no defining forms given");
  if (!is_prime_long(p)) throw DomainError("modulus must be prime");
  int n = forms[0].nvars();
  for (const MultiPoly& f : forms) {
    if (f.nvars() != n) throw DomainError("variable counts differ");
    if (f.is_zero())
      throw DomainError("degenerate input: zero defining form");
    if (!f.is_homogeneous())
      throw DomainError("defining forms must be homogeneous");
  }
  long c = static_cast<long>(forms.size());

  /* Eliminate the linear forms exactly: the scan runs over their joint
   * projective zero locus. */
  std::vector<std::vector<long>> lin_rows;
  std::vector<const MultiPoly*> nonlinear;
  for (const MultiPoly& f : forms) {
    if (f.degree() == 1) {
      CompiledForm cf = compile_form(f, p);
      std::vector<long> row(n, 0);
      for (const CompiledTerm& t : cf.terms) row[t.vars[0]] = t.coef;
      lin_rows.push_back(row);
    } else {
      nonlinear.push_back(&f);
    }
  }

  /* Reduced echelon basis of the solution space of the linear system. */
  std::vector<int> pivots;
  {
    long rank = 0;
    long rows = static_cast<long>(lin_rows.size());
    for (int col = 0; col < n && rank < rows; ++col) {
      long pivot = -1;
      for (long r = rank; r < rows; ++r)
        if (lin_rows[r][col] % p != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      std::swap(lin_rows[pivot], lin_rows[rank]);
      long inv = mod_inv(lin_rows[rank][col], p);
      for (int j = 0; j < n; ++j)
        lin_rows[rank][j] = lin_rows[rank][j] % p * inv % p;
      for (long r = 0; r < rows; ++r) {
        if (r == rank) continue;
        long f = lin_rows[r][col] % p;
        if (f == 0) continue;
        for (int j = 0; j < n; ++j)
          lin_rows[r][j] =
              ((lin_rows[r][j] - f * lin_rows[rank][j]) % p + p) % p;
      }
      pivots.push_back(col);
      ++rank;
    }
    lin_rows.resize(rank);
  }
  std::vector<int> free_cols;
  for (int j = 0; j < n; ++j)
    if (std::find(pivots.begin(), pivots.end(), j) == pivots.end())
      free_cols.push_back(j);
  int k = static_cast<int>(free_cols.size());
  if (k == 0) return {};
  /* basis[j] is the solution with free coordinate j set to 1. */
  std::vector<std::vector<long>> basis(k, std::vector<long>(n, 0));
  for (int j = 0; j < k; ++j) {
    basis[j][free_cols[j]] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis[j][pivots[r]] = (p - lin_rows[r][free_cols[j]] % p) % p;
  }

  {
    Int npoints = 0;
    Int pk = 1;
    for (int i = 0; i < k; ++i) {
      npoints += pk;
      pk *= p;
    }
    if (npoints > 20000000)
      throw DomainError("finite-field scan exceeds the runtime budget");
  }

  std::vector<CompiledForm> cf;
  for (const MultiPoly* f : nonlinear) cf.push_back(compile_form(*f, p));
  /* Jacobian rows for all forms, in the original order. */
  std::vector<std::vector<CompiledForm>> jac;
  for (const MultiPoly& f : forms) {
    std::vector<CompiledForm> row;
    for (int v = 1; v <= n; ++v)
      row.push_back(compile_form(f.partial_derivative(v), p));
    jac.push_back(std::move(row));
  }

  /* Scaled-column tables: contribution of digit value v at position j. */
  std::vector<std::vector<long>> scaled(
      static_cast<std::size_t>(k) * p, std::vector<long>(n, 0));
  for (int j = 0; j < k; ++j)
    for (long v = 0; v < p; ++v)
      for (int i = 0; i < n; ++i)
        scaled[static_cast<std::size_t>(j) * p + v][i] =
            basis[j][i] * v % p;

  std::vector<std::vector<long>> found;
  std::vector<long> digits(k, 0);
  std::vector<long> x(n, 0);
  for (int lead = 0; lead < k; ++lead) {
    /* Points with first nonzero parameter at position `lead`, set to 1. */
    std::fill(digits.begin(), digits.end(), 0);
    digits[lead] = 1;
    for (int i = 0; i < n; ++i) x[i] = basis[lead][i];
    while (true) {
      bool on_variety = true;
      for (const CompiledForm& f : cf)
        if (eval_form(f, x, p) % p != 0) {
          on_variety = false;
          break;
        }
      if (on_variety) {
        std::vector<std::vector<long>> jmat;
        for (long fi = 0; fi < static_cast<long>(forms.size()); ++fi) {
          std::vector<long> row(n);
          for (int v = 0; v < n; ++v)
            row[v] = ((eval_form(jac[fi][v], x, p) % p) + p) % p;
          jmat.push_back(std::move(row));
        }
        if (gauss_rank_mod_p(std::move(jmat), p) < c) {
          std::vector<long> pt = x;
          int fn = 0;
          while (fn < n && pt[fn] == 0) ++fn;
          long inv = mod_inv(pt[fn], p);
          for (int i = 0; i < n; ++i) pt[i] = pt[i] % p * inv % p;
          found.push_back(std::move(pt));
        }
      }
      /* Odometer over the digits after `lead`. */
      int pos = k - 1;
      while (pos > lead && digits[pos] == p - 1) --pos;
      if (pos == lead) break;
      {
        const std::vector<long>& oldc =
            scaled[static_cast<std::size_t>(pos) * p + digits[pos]];
        const std::vector<long>& newc =
            scaled[static_cast<std::size_t>(pos) * p + digits[pos] + 1];
        for (int i = 0; i < n; ++i)
          x[i] = ((x[i] - oldc[i] + newc[i]) % p + p) % p;
        digits[pos] += 1;
      }
      for (int q = pos + 1; q < k; ++q) {
        if (digits[q] != 0) {
          const std::vector<long>& oldc =
              scaled[static_cast<std::size_t>(q) * p + digits[q]];
          for (int i = 0; i < n; ++i) x[i] = ((x[i] - oldc[i]) % p + p) % p;
          digits[q] = 0;
        }
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

int jacobian_rank_at(const std::vector<MultiPoly>& forms,
                     const std::vector<Cyclotomic>& point) {
  if (forms.empty()) throw DomainError("no defining forms given");
  int n = forms[0].nvars();
  if (static_cast<int>(point.size()) != n)
    throw DomainError("point length does not match variable count");
  bool nonzero = false;
  for (const Cyclotomic& c : point) nonzero |= !c.is_zero();
  if (!nonzero) throw DomainError("degenerate input: zero point");
  std::vector<std::vector<Cyclotomic>> jac;
  for (const MultiPoly& f : forms) {
    if (f.nvars() != n) throw DomainError("variable counts differ");
    if (f.is_zero())
      throw DomainError("degenerate input: zero defining form");
    std::vector<Cyclotomic> row;
    for (int v = 1; v <= n; ++v)
      row.push_back(f.partial_derivative(v).evaluate(point));
    jac.push_back(std::move(row));
  }
  return static_cast<int>(gauss_rank_cyc(jac));
}

}  // namespace trefoil
