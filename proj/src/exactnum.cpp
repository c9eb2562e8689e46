/* exactnum.cpp -- rational helpers and cyclotomic field arithmetic.
 *
 * The cyclotomic representation is the dense coefficient vector modulo the
 * n-th cyclotomic polynomial.  Conductor minimization runs eagerly: after
 * every operation the value is rewritten over Q(zeta_d) for the smallest
 * divisor d of the current conductor that contains it.  Membership in the
 * subfield is decided by solving the linear system expressing the value in
 * the embedded power basis of Q(zeta_d); the solution, when it exists, is the
 * rewritten coefficient vector itself.
 */

#include "trefoil/exactnum.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace trefoil {

long gcd_long(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long euler_phi(long n) {
  if (n <= 0) throw DomainError("euler_phi: argument must be positive");
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

/* ---------- polynomial helpers over Int (monic divisors only) ---------- */

namespace {

/* Quotient of a by monic b, both dense ascending-degree Int vectors; the
 * remainder must come out zero (used only for x^n - 1 over cyclotomic
 * factors). */
std::vector<Int> exact_monic_div(std::vector<Int> a, const std::vector<Int>& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw DomainError("exact_monic_div: degree underflow");
  std::vector<Int> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    Int c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (const Int& c : a)
    if (c != 0) throw DomainError("exact_monic_div: nonzero remainder");
  return q;
}

std::map<long, std::vector<Int>> g_cyclo_cache;
std::mutex g_cyclo_mutex;

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long n) {
  if (n <= 0) throw DomainError("cyclotomic_polynomial: n must be positive");
  std::lock_guard<std::mutex> lock(g_cyclo_mutex);
  auto it = g_cyclo_cache.find(n);
  if (it != g_cyclo_cache.end()) return it->second;
  /* Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively
   * without re-locking: fill ancestors first. */
  std::vector<long> need;
  need.push_back(n);
  for (std::size_t k = 0; k < need.size(); ++k) {
    long m = need[k];
    for (long d = 1; d < m; ++d)
      if (m % d == 0 && !g_cyclo_cache.count(d) &&
          std::find(need.begin(), need.end(), d) == need.end())
        need.push_back(d);
  }
  std::sort(need.begin(), need.end());
  for (long m : need) {
    if (g_cyclo_cache.count(m)) continue;
    std::vector<Int> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (long d = 1; d < m; ++d)
      if (m % d == 0) num = exact_monic_div(std::move(num), g_cyclo_cache.at(d));
    g_cyclo_cache.emplace(m, std::move(num));
  }
  return g_cyclo_cache.at(n);
}

std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos, const std::string& what) {
  throw ParseError("parse error at position " + std::to_string(pos) + ": " + what +
                   " in \"" + std::string(text) + "\"");
}

/* Parse an integer starting at pos; advances pos past it. */
Int parse_int(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  bool neg = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    neg = text[pos] == '-';
    ++pos;
  }
  if (pos >= text.size() || !isdigit(static_cast<unsigned char>(text[pos])))
    parse_fail(text, start, "expected integer");
  Int v = 0;
  while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) {
    v = v * 10 + (text[pos] - '0');
    ++pos;
  }
  return neg ? Int(-v) : v;
}

Rat parse_rat(std::string_view text, std::size_t& pos) {
  Int num = parse_int(text, pos);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::size_t dpos = pos;
    Int den = parse_int(text, pos);
    if (den == 0) parse_fail(text, dpos, "zero denominator");
    return Rat(num, den);
  }
  return Rat(num);
}

}  // namespace

Rat rat_from_string(std::string_view text) {
  std::size_t pos = 0;
  Rat r = parse_rat(text, pos);
  if (pos != text.size()) parse_fail(text, pos, "trailing characters");
  return r;
}

/* ---------- Cyclotomic ---------- */

namespace {

/* Reduce a raw coefficient vector (powers of zeta_n, any length) modulo
 * Phi_n; returns a vector of length phi(n). */
std::vector<Rat> reduce_mod_phi(long n, std::vector<Rat> c) {
  const std::vector<Int>& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  if (c.size() < deg) c.resize(deg, Rat(0));
  for (std::size_t i = c.size(); i-- > deg;) {
    Rat lead = c[i];
    if (lead == 0) continue;
    c[i] = 0;
    for (std::size_t j = 0; j < deg; ++j) c[i - deg + j] -= lead * Rat(phi[j]);
  }
  c.resize(deg);
  return c;
}

/* Power table: column j (j < phi(d)) is zeta_n^{j * (n/d)} reduced mod
 * Phi_n.  Used both for subfield membership tests and for lifting. */
std::vector<std::vector<Rat>> embedded_basis(long n, long d) {
  long phid = euler_phi(d);
  std::vector<std::vector<Rat>> cols(phid);
  for (long j = 0; j < phid; ++j) {
    std::vector<Rat> v(static_cast<std::size_t>(j) * (n / d) + 1, Rat(0));
    v.back() = 1;
    cols[j] = reduce_mod_phi(n, std::move(v));
  }
  return cols;
}

/* Solve sum_j y_j * cols[j] = target over Q; returns true and fills y when
 * solvable.  Columns are linearly independent by construction. */
bool solve_in_basis(const std::vector<std::vector<Rat>>& cols,
                    const std::vector<Rat>& target, std::vector<Rat>& y) {
  const std::size_t rows = target.size();
  const std::size_t ncols = cols.size();
  /* Augmented matrix, columns-major elimination. */
  std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(ncols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) m[i][j] = cols[j][i];
    m[i][ncols] = target[i];
  }
  std::vector<std::size_t> pivot_row(ncols, SIZE_MAX);
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rat inv = Rat(1) / m[r][c];
    for (std::size_t j = c; j <= ncols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j <= ncols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_row[c] = r;
    ++r;
  }
  /* Any leftover nonzero row in the augmented column means inconsistent. */
  for (std::size_t i = r; i < rows; ++i)
    if (m[i][ncols] != 0) return false;
  y.assign(ncols, Rat(0));
  for (std::size_t c = 0; c < ncols; ++c)
    if (pivot_row[c] != SIZE_MAX) y[c] = m[pivot_row[c]][ncols];
  /* Columns are independent, so every column has a pivot; but guard. */
  for (std::size_t c = 0; c < ncols; ++c)
    if (pivot_row[c] == SIZE_MAX && y[c] != 0) return false;
  return true;
}

}  // namespace

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_{Rat(0)} {}
Cyclotomic::Cyclotomic(const Rat& r) : conductor_(1), coeffs_{r} {}
Cyclotomic::Cyclotomic(long n) : conductor_(1), coeffs_{Rat(n)} {}
Cyclotomic::Cyclotomic(long conductor, std::vector<Rat> coeffs, bool)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::zeta(long n) {
  if (n <= 0) throw DomainError("zeta: n must be positive");
  std::vector<Rat> v(2, Rat(0));
  v[1] = 1;
  return from_coeffs(n, std::move(v));
}

Cyclotomic Cyclotomic::from_coeffs(long n, std::vector<Rat> coeffs) {
  if (n <= 0) throw DomainError("from_coeffs: conductor must be positive");
  std::vector<Rat> red = reduce_mod_phi(n, std::move(coeffs));
  /* Minimal conductor: smallest divisor d of n whose embedded power basis
   * spans the value.  Divisors congruent to 2 mod 4 are skipped; their field
   * equals the one for d/2, which is tested earlier. */
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    if (d % 4 == 2) continue;
    if (d == n) break;
    std::vector<Rat> y;
    if (solve_in_basis(embedded_basis(n, d), red, y))
      return Cyclotomic(d, std::move(y), true);
  }
  if (n % 4 == 2) {
    /* phi(n) = phi(n/2); rewrite over Q(zeta_{n/2}) via zeta_n = -zeta^{(m+1)/2}
     * ... handled by the generic solve against the full basis of d = n/2.
     * That solve happened above (n/2 is a divisor not 2 mod 4 when n/2 odd),
     * so reaching here with n % 4 == 2 is impossible. */
    throw DomainError("from_coeffs: conductor 2 mod 4 escaped minimization");
  }
  return Cyclotomic(n, std::move(red), true);
}

bool Cyclotomic::is_zero() const { return conductor_ == 1 && coeffs_[0] == 0; }

Rat Cyclotomic::to_rational() const {
  if (conductor_ != 1)
    throw DomainError("to_rational: value has conductor " + std::to_string(conductor_));
  return coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rat> c = coeffs_;
  for (Rat& x : c) x = -x;
  return Cyclotomic(conductor_, std::move(c), true);
}

namespace {

/* Lift coefficients from Q(zeta_a) to raw powers of zeta_l (a | l). */
std::vector<Rat> lift_raw(const std::vector<Rat>& c, long a, long l) {
  std::vector<Rat> out(static_cast<std::size_t>(l), Rat(0));
  const long step = l / a;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    out[(j * step) % l] += c[j];
  }
  return out;
}

long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (conductor_ == 1 && o.conductor_ == 1) {
    coeffs_[0] += o.coeffs_[0];
    return *this;
  }
  long l = lcm_long(conductor_, o.conductor_);
  std::vector<Rat> a = lift_raw(coeffs_, conductor_, l);
  std::vector<Rat> b = lift_raw(o.coeffs_, o.conductor_, l);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  *this = from_coeffs(l, std::move(a));
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (conductor_ == 1 && o.conductor_ == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  if (is_zero() || o.is_zero()) {
    *this = Cyclotomic();
    return *this;
  }
  /* Rational scalar fast path keeps the conductor untouched. */
  if (o.conductor_ == 1) {
    for (Rat& x : coeffs_) x *= o.coeffs_[0];
    if (o.coeffs_[0] == 0) *this = Cyclotomic();
    return *this;
  }
  if (conductor_ == 1) {
    Rat s = coeffs_[0];
    std::vector<Rat> c = o.coeffs_;
    for (Rat& x : c) x *= s;
    *this = Cyclotomic(o.conductor_, std::move(c), true);
    return *this;
  }
  long l = lcm_long(conductor_, o.conductor_);
  std::vector<Rat> a = lift_raw(coeffs_, conductor_, l);
  std::vector<Rat> b = lift_raw(o.coeffs_, o.conductor_, l);
  std::vector<Rat> prod(2 * static_cast<std::size_t>(l), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      prod[i + j] += a[i] * b[j];
    }
  }
  /* Fold exponents >= l using zeta_l^l = 1 before the Phi reduction. */
  std::vector<Rat> folded(static_cast<std::size_t>(l), Rat(0));
  for (std::size_t i = 0; i < prod.size(); ++i)
    if (prod[i] != 0) folded[i % l] += prod[i];
  *this = from_coeffs(l, std::move(folded));
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DomainError("inverse: division by zero");
  if (conductor_ == 1) return Cyclotomic(Rat(1) / coeffs_[0]);
  /* Solve (this) * x = 1 via the multiplication matrix in the power basis. */
  const long n = conductor_;
  const long deg = static_cast<long>(coeffs_.size());
  std::vector<std::vector<Rat>> cols(deg);
  for (long j = 0; j < deg; ++j) {
    /* Column j = reduction of this * zeta^j. */
    std::vector<Rat> shifted(coeffs_.size() + j, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) shifted[i + j] = coeffs_[i];
    cols[j] = reduce_mod_phi(n, std::move(shifted));
  }
  std::vector<Rat> one(deg, Rat(0));
  one[0] = 1;
  std::vector<Rat> y;
  if (!solve_in_basis(cols, one, y))
    throw DomainError("inverse: multiplication matrix is singular");
  return from_coeffs(n, std::move(y));
}

Cyclotomic Cyclotomic::galois(long k) const {
  long n = conductor_;
  long r = ((k % n) + n) % n;
  if (gcd_long(r == 0 ? n : r, n) != 1)
    throw DomainError("galois: index " + std::to_string(k) +
                      " is not coprime to conductor " + std::to_string(n));
  if (n == 1) return *this;
  std::vector<Rat> raw(static_cast<std::size_t>(n), Rat(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    raw[(j * r) % n] += coeffs_[j];
  }
  return from_coeffs(n, std::move(raw));
}

bool Cyclotomic::operator<(const Cyclotomic& o) const {
  if (conductor_ != o.conductor_) return conductor_ < o.conductor_;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i];
  return false;
}

std::string Cyclotomic::to_string() const {
  if (conductor_ == 1) return rat_to_string(coeffs_[0]);
  std::string s = "cyc(" + std::to_string(conductor_) + ")[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ",";
    s += rat_to_string(coeffs_[i]);
  }
  s += "]";
  return s;
}

Cyclotomic Cyclotomic::from_string(std::string_view text) {
  if (text.rfind("cyc(", 0) != 0) return Cyclotomic(rat_from_string(text));
  std::size_t pos = 4;
  Int n_big = parse_int(text, pos);
  if (n_big <= 0 || n_big > 1000000) parse_fail(text, 4, "conductor out of range");
  long n = static_cast<long>(n_big);
  if (pos >= text.size() || text[pos] != ')') parse_fail(text, pos, "expected ')'");
  ++pos;
  if (pos >= text.size() || text[pos] != '[') parse_fail(text, pos, "expected '['");
  ++pos;
  std::vector<Rat> coeffs;
  if (pos < text.size() && text[pos] != ']') {
    for (;;) {
      coeffs.push_back(parse_rat(text, pos));
      if (pos >= text.size()) parse_fail(text, pos, "unterminated coefficient list");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
  }
  if (pos >= text.size() || text[pos] != ']') parse_fail(text, pos, "expected ']'");
  ++pos;
  if (pos != text.size()) parse_fail(text, pos, "trailing characters");
  if (coeffs.size() != static_cast<std::size_t>(euler_phi(n)))
    parse_fail(text, 0, "expected phi(n) = " + std::to_string(euler_phi(n)) +
                            " coefficients, got " + std::to_string(coeffs.size()));
  return from_coeffs(n, std::move(coeffs));
}

std::size_t Cyclotomic::hash() const {
  std::size_t h = static_cast<std::size_t>(conductor_) * 0x9e3779b97f4a7c15ULL;
  for (const Rat& c : coeffs_) {
    /* Small-value fast path; fall back to the decimal string. */
    const Int num = numerator(c), den = denominator(c);
    std::size_t hn;
    if (num >= INT64_MIN && num <= INT64_MAX && den <= INT64_MAX) {
      hn = std::hash<long long>()(static_cast<long long>(num)) ^
           (std::hash<long long>()(static_cast<long long>(den)) << 1);
    } else {
      hn = std::hash<std::string>()(rat_to_string(c));
    }
    h ^= hn + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace trefoil
