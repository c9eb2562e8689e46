/* Check catalog, suite runner, and report rendering. */

#include "trefoil/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <functional>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

#include "trefoil/chartab.hpp"
#include "trefoil/fano.hpp"
#include "trefoil/permgrp.hpp"
#include "trefoil/polyinv.hpp"

namespace trefoil {
namespace {

using nlohmann::json;

Cyclotomic C(long a) { return Cyclotomic(a); }

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

long long rat_ll(const Rat& r) {
  if (denominator(r) != 1) throw DomainError("expected an integer, got " + rat_to_string(r));
  const Int num = numerator(r);
  return num.convert_to<long long>();
}

/* ---------------- shared heavy objects ----------------
 * Function-local statics keep each expensive construction to one run per
 * process and keep the GroupRef for the uncached stabilizer alive so the
 * character-table cache key stays valid. */

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

const GroupRef& sl2_8_stabilizer_cached() {
  static const GroupRef g = make_group("SL2(8)-stabilizer", point_stabilizer(sl2_8(), 8));
  return g;
}

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

/* ---------------- catalog ---------------- */

struct CheckDef {
  std::string id;
  std::string suite;
  std::string anchor;
  double cost_hint;  // single-core seconds, used for budget skipping
  std::function<bool(json&)> run;
};

CheckDef order_check(const char* slug, const char* spec, long long expected,
                     const char* anchor) {
  CheckDef d;
  d.id = std::string("orders.") + slug;
  d.suite = "orders";
  d.anchor = anchor;
  d.cost_hint = 5.0;
  d.run = [spec, expected](json& w) {
    GroupRef g = group_from_spec(spec);
    const long long computed = to_ll(g->group().order());
    w["group"] = spec;
    w["expected"] = expected;
    w["computed"] = computed;
    return computed == expected;
  };
  return d;
}

bool check_sl2_8_stabilizer(json& w) {
  const GroupRef& stab = sl2_8_stabilizer_cached();
  const long long stab_order = to_ll(stab->group().order());
  PermGroup der = derived_subgroup(stab->group());
  const long long derived_order = to_ll(der.order());
  bool exponent_two = true;
  for (const Perm& x : enumerate_elements(der))
    if (x.order() > 2) exponent_two = false;
  w["stabilizer_order"] = stab_order;
  w["derived_order"] = derived_order;
  w["derived_exponent_divides_2"] = exponent_two;
  // Exponent 2 forces commutativity, so order 8 makes the derived subgroup
  // elementary abelian of rank 3.
  return stab_order == 56 && derived_order == 8 && exponent_two;
}

bool check_sl3_3_blocks(json& w) {
  GroupRef g = group_from_spec("SL3(3):26");
  const bool primitive = is_primitive(g->group());
  auto systems = minimal_block_systems(g->group());
  json sys_json = json::array();
  bool found = false;
  for (const auto& sys : systems) {
    bool uniform_pairs = sys.size() == 13;
    for (const auto& block : sys) uniform_pairs = uniform_pairs && block.size() == 2;
    if (uniform_pairs) found = true;
    sys_json.push_back(json{{"blocks", sys.size()},
                            {"block_size", sys.empty() ? 0 : sys[0].size()}});
  }
  w["degree"] = g->group().degree();
  w["primitive"] = primitive;
  w["minimal_block_systems"] = sys_json;
  return !primitive && found && g->group().degree() == 26;
}

bool check_psl2_11_double_transitivity(json& w) {
  GroupRef on11 = group_from_spec("coset:PSL2(11)/A5");
  GroupRef on12 = group_from_spec("PSL2(11)");
  const int t11 = transitivity_degree(on11->group());
  const int t12 = transitivity_degree(on12->group());
  w["degree_11_action"] = json{{"degree", on11->group().degree()}, {"transitivity", t11}};
  w["degree_12_action"] = json{{"degree", on12->group().degree()}, {"transitivity", t12}};
  return on11->group().degree() == 11 && on12->group().degree() == 12 && t11 >= 2 && t12 >= 2;
}

bool check_a7_coset_15(json& w) {
  GroupRef g = group_from_spec("coset:A7/PSL2(7)");
  const long long order = to_ll(g->group().order());
  const bool transitive = is_transitive(g->group());
  PermGroup stab = point_stabilizer(g->group(), 0);
  const long long stab_order = to_ll(stab.order());
  w["degree"] = g->group().degree();
  w["order"] = order;
  w["transitive"] = transitive;
  w["point_stabilizer_order"] = stab_order;
  return g->group().degree() == 15 && order == 2520 && transitive && stab_order == 168;
}

bool check_a7_degrees(json& w) {
  const CharacterTable& t = character_table(group_from_spec("A7"));
  std::vector<long> degrees = t.degrees;
  std::sort(degrees.begin(), degrees.end());
  std::set<long> window;
  for (long d : degrees)
    if (2 <= d && d <= 14) window.insert(d);
  w["degrees"] = degrees;
  w["degrees_between_2_and_14"] = std::vector<long>(window.begin(), window.end());
  return degrees == std::vector<long>{1, 6, 10, 10, 14, 14, 15, 21, 35} &&
         window == std::set<long>{6, 10, 14};
}

bool check_a7_restriction_s5(json& w) {
  GroupRef a7 = group_from_spec("A7");
  GroupRef s5 = group_from_spec("S5:7");
  const CharacterTable& ta = character_table(a7);
  const CharacterTable& ts = character_table(s5);
  Fusion fus = subgroup_fusion(a7, s5);
  const ConjClasses& sub_cc = s5->classes();

  std::vector<int> deg10;
  for (int i = 0; i < ta.num_rows(); ++i)
    if (ta.degrees[i] == 10) deg10.push_back(i);
  w["ambient_degree_10_rows"] = deg10.size();
  if (deg10.size() != 2) return false;

  bool ok = true;
  json rows = json::array();
  for (int i : deg10) {
    ClassFn res = restrict_character(ta.rows[i], fus);
    // Restricted values keyed by the subgroup class signature (order, size):
    // (10, -2, -2, 1, 1, 0, 0) on classes 1, 2a, 2b, 3, 6, 4, 5.
    bool values_ok = true;
    json values = json::array();
    for (int c = 0; c < sub_cc.num_classes(); ++c) {
      const long ord = sub_cc.rep_order[c];
      Cyclotomic expect;
      if (ord == 1) expect = C(10);
      else if (ord == 2) expect = C(-2);
      else if (ord == 3 || ord == 6) expect = C(1);
      else expect = C(0);
      values_ok = values_ok && res[c] == expect;
      values.push_back(json{{"class_order", ord},
                            {"class_size", sub_cc.sizes[c]},
                            {"value", res[c].to_string()}});
    }
    const bool norm_two = inner_product(sub_cc, res, res) == C(2);
    // Exactly one degree-4 and one degree-6 constituent, multiplicity one.
    std::vector<Int> mult = decompose(ts, res);
    long deg4 = 0, deg6 = 0, other = 0;
    for (int r = 0; r < ts.num_rows(); ++r) {
      if (mult[r] == 0) continue;
      if (mult[r] == 1 && ts.degrees[r] == 4) ++deg4;
      else if (mult[r] == 1 && ts.degrees[r] == 6) ++deg6;
      else ++other;
    }
    const bool split_ok = deg4 == 1 && deg6 == 1 && other == 0;
    rows.push_back(json{{"values", values},
                        {"norm", norm_two ? 2 : -1},
                        {"degree_4_constituents", deg4},
                        {"degree_6_constituents", deg6}});
    ok = ok && values_ok && norm_two && split_ok;
  }
  w["restrictions"] = rows;
  return ok;
}

bool check_psl2_11_restriction_a5(json& w) {
  GroupRef g = group_from_spec("PSL2(11)");
  GroupRef a5 = group_from_spec("A5:12");
  const CharacterTable& tg = character_table(g);
  const CharacterTable& ta = character_table(a5);
  Fusion fus = subgroup_fusion(g, a5);
  const ConjClasses& sub_cc = a5->classes();

  int chi5 = -1;
  for (int i = 0; i < ta.num_rows(); ++i)
    if (ta.degrees[i] == 5) chi5 = i;
  if (chi5 < 0) return false;

  bool irreducible = true, matches = true;
  long checked = 0;
  for (int i = 0; i < tg.num_rows(); ++i) {
    if (tg.degrees[i] != 5) continue;
    ++checked;
    ClassFn res = restrict_character(tg.rows[i], fus);
    irreducible = irreducible && inner_product(sub_cc, res, res) == C(1);
    matches = matches && res == ta.rows[chi5];
  }
  w["degree_5_rows_checked"] = checked;
  w["each_restriction_irreducible"] = irreducible;
  w["equals_unique_degree_5_character_of_a5"] = matches;
  return irreducible && matches && checked == 2;
}

bool check_psl2_11_molien(json& w) {
  GroupRef g = group_from_spec("PSL2(11)");
  const CharacterTable& t = character_table(g);
  const ConjClasses& cc = g->classes();
  bool ok = true;
  long checked = 0;
  json rows = json::array();
  for (int i = 0; i < t.num_rows(); ++i) {
    if (t.degrees[i] != 5) continue;
    ++checked;
    const long d3 = molien_invariant_dim(cc, t.rows[i], 3);
    const long d4 = molien_invariant_dim(cc, t.rows[i], 4);
    rows.push_back(json{{"degree", 5}, {"invariants_deg3", d3}, {"invariants_deg4", d4}});
    ok = ok && d3 == 1 && d4 == 0;
  }
  w["rows"] = rows;
  return ok && checked == 2;
}

bool check_psp4_3_molien(json& w) {
  GroupRef g = group_from_spec("PSp4(3):40");
  const CharacterTable& t = character_table(g);
  const ConjClasses& cc = g->classes();
  long deg5 = 0, deg6 = 0;
  bool ok = true;
  json rows = json::array();
  for (int i = 0; i < t.num_rows(); ++i) {
    if (t.degrees[i] == 5) {
      ++deg5;
      const long d3 = molien_invariant_dim(cc, t.rows[i], 3);
      const long d4 = molien_invariant_dim(cc, t.rows[i], 4);
      rows.push_back(json{{"degree", 5}, {"invariants_deg3", d3}, {"invariants_deg4", d4}});
      ok = ok && d3 == 0 && d4 == 1;
    } else if (t.degrees[i] == 6) {
      ++deg6;
      const long d2 = molien_invariant_dim(cc, t.rows[i], 2);
      const long d3 = molien_invariant_dim(cc, t.rows[i], 3);
      const long d4 = molien_invariant_dim(cc, t.rows[i], 4);
      rows.push_back(json{{"degree", 6},
                          {"invariants_deg2", d2},
                          {"invariants_deg3", d3},
                          {"invariants_deg4", d4}});
      ok = ok && d2 == 1 && d3 == 0 && d4 == 1;
    }
  }
  w["rows"] = rows;
  return ok && deg5 == 2 && deg6 == 1;
}

bool check_min_faithful_degrees(json& w) {
  struct Case {
    const char* label;
    long expected;
    const CharacterTable& table;
  };
  const std::vector<Case> cases = {
      {"A5", 3, character_table(group_from_spec("A5"))},
      {"S5", 4, character_table(group_from_spec("S5"))},
      {"A6", 5, character_table(group_from_spec("A6"))},
      {"SL2(8) point stabilizer", 7, character_table(sl2_8_stabilizer_cached())},
  };
  bool ok = true;
  json rows = json::array();
  for (const Case& c : cases) {
    const long computed = min_faithful_rep_degree(c.table);
    rows.push_back(json{{"group", c.label}, {"expected", c.expected}, {"computed", computed}});
    ok = ok && computed == c.expected;
  }
  w["groups"] = rows;
  return ok;
}

bool check_weyl_e6_orders(json& w) {
  const MatrixGroup& w6 = weyl_cached();
  const MatrixGroup& d6 = weyl_derived_cached();
  w["weyl_order"] = w6.size();
  w["expected_weyl_order"] = 51840;
  w["derived_order"] = d6.size();
  w["expected_derived_order"] = 25920;
  return w6.size() == 51840 && d6.size() == 25920;
}

bool check_weyl_e6_derived_invariants(json& w) {
  const MatrixGroup& d6 = weyl_derived_cached();
  const std::vector<long> expected = {1, 0, 1};
  bool ok = true;
  json rows = json::array();
  for (int k = 0; k < 3; ++k) {
    const int d = k + 2;
    const long direct = invariant_space_dim_direct(d6, d);
    const long from_gens = invariant_space_dim_generators(6, d6.generators(), d);
    const Rat molien = molien_count_from_traces(d6, d);
    rows.push_back(json{{"degree", d},
                        {"direct", direct},
                        {"from_generators", from_gens},
                        {"molien", rat_ll(molien)},
                        {"expected", expected[k]}});
    ok = ok && direct == expected[k] && from_gens == expected[k] && rat_ll(molien) == expected[k];
  }
  w["dimensions"] = rows;
  return ok;
}

bool check_klein_55_invariants(json& w) {
  auto [sigma, tau] = klein_55_generators();
  const MatrixGroup& g = klein55_cached();
  const MultiPoly klein = variety("klein_cubic").forms[0];
  const bool invariant = is_invariant(klein, {sigma, tau});
  const long direct = invariant_space_dim_direct(g, 3);
  const long from_gens = invariant_space_dim_generators(5, {sigma, tau}, 3);
  const Rat molien = molien_count_from_traces(g, 3);
  const bool reynolds_fixes = reynolds(klein, g) == klein;
  w["group_order"] = g.size();
  w["klein_cubic_invariant"] = invariant;
  w["cubic_invariant_dim_direct"] = direct;
  w["cubic_invariant_dim_from_generators"] = from_gens;
  w["cubic_invariant_dim_molien"] = rat_ll(molien);
  w["reynolds_fixes_klein_cubic"] = reynolds_fixes;
  return g.size() == 55 && invariant && direct == 1 && from_gens == 1 &&
         rat_ll(molien) == 1 && reynolds_fixes;
}

bool check_forms_invariance(json& w) {
  auto [sigma, tau] = klein_55_generators();
  struct Entry {
    const char* variety_name;
    const char* symmetry;
    std::vector<ExactMatrix> gens;
  };
  const std::vector<ExactMatrix> s6 = {perm_matrix(6, {1, 0, 2, 3, 4, 5}),
                                       perm_matrix(6, {1, 2, 3, 4, 5, 0})};
  const std::vector<ExactMatrix> a7 = {perm_matrix(7, {1, 2, 0, 3, 4, 5, 6}),
                                       perm_matrix(7, {1, 2, 3, 4, 5, 6, 0})};
  const std::vector<Entry> entries = {
      {"klein_cubic", "order-55 subgroup of PSL(2,11)", {sigma, tau}},
      {"palatini", "order-55 group extended to fix a sixth coordinate",
       {extend_fixing_first(sigma), extend_fixing_first(tau)}},
      {"segre_cubic", "symmetric group on six coordinates", s6},
      {"burkhardt", "symmetric group on six coordinates", s6},
      {"x6prime", "alternating group on seven coordinates", a7},
  };
  bool ok = true;
  json rows = json::array();
  for (const Entry& e : entries) {
    Variety v = variety(e.variety_name);
    bool inv = true;
    for (const MultiPoly& f : v.forms) inv = inv && is_invariant(f, e.gens);
    rows.push_back(json{{"variety", e.variety_name},
                        {"symmetry", e.symmetry},
                        {"forms", v.forms.size()},
                        {"invariant", inv}});
    ok = ok && inv;
  }
  w["varieties"] = rows;
  return ok;
}

bool check_segre_nodes(json& w) {
  Variety segre = variety("segre_cubic");
  const std::vector<std::vector<long>> signs = segre_node_signs();
  bool ok = signs.size() == 10;

  json primes = json::array();
  for (long p : {31L, 41L, 61L}) {
    std::vector<std::vector<long>> pts = singular_points_mod_p(segre.forms, p);
    std::vector<std::vector<long>> expected;
    for (const auto& v : signs) expected.push_back(reduce_mod_p(v, p));
    std::sort(expected.begin(), expected.end());
    const bool match = pts == expected;
    primes.push_back(json{{"p", p},
                          {"singular_points", pts.size()},
                          {"equals_sign_vector_orbit", match}});
    ok = ok && match;
  }

  bool ranks_ok = true;
  for (const auto& v : signs) {
    std::vector<Cyclotomic> pt;
    for (long x : v) pt.push_back(C(x));
    for (const MultiPoly& f : segre.forms) ranks_ok = ranks_ok && f.evaluate(pt).is_zero();
    ranks_ok = ranks_ok && jacobian_rank_at(segre.forms, pt) == 1;
  }
  const std::vector<Cyclotomic> smooth = {C(1), C(-1), C(0), C(0), C(0), C(0)};
  const int smooth_rank = jacobian_rank_at(segre.forms, smooth);

  w["primes"] = primes;
  w["rational_nodes"] = signs.size();
  w["jacobian_rank_at_each_node"] = ranks_ok ? 1 : -1;
  w["jacobian_rank_at_smooth_point"] = smooth_rank;
  return ok && ranks_ok && smooth_rank == 2;
}

bool smoothness_scan(const char* name, const std::vector<long>& primes, json& w) {
  Variety v = variety(name);
  bool ok = true;
  json rows = json::array();
  for (long p : primes) {
    const std::size_t count = singular_points_mod_p(v.forms, p).size();
    rows.push_back(json{{"p", p}, {"singular_points", count}});
    ok = ok && count == 0;
  }
  w["variety"] = name;
  w["primes"] = rows;
  return ok;
}

bool check_fano_genus_formulas(json& w) {
  const bool ok = h0_anticanonical(12) == 14 && quadric_count(5) == 3 &&
                  quadric_count(7) == 10 && quadric_count(12) == 45 &&
                  lefschetz(10) == 0 && lefschetz(12) == 4;
  w["h0_anticanonical_g12"] = h0_anticanonical(12);
  w["quadrics_through_model_g5"] = quadric_count(5);
  w["quadrics_through_model_g7"] = quadric_count(7);
  w["quadrics_through_model_g12"] = quadric_count(12);
  w["lefschetz_g10"] = lefschetz(10);
  w["lefschetz_g12"] = lefschetz(12);
  return ok;
}

bool check_fano_h12_table(json& w) {
  const std::vector<std::pair<long, long>> table = {
      {2, 52}, {3, 30}, {4, 20}, {5, 14}, {6, 10},
      {7, 7},  {8, 5},  {9, 3},  {10, 2}, {12, 0}};
  bool ok = true;
  json rows = json::array();
  for (auto [g, h] : table) {
    const long computed = fano_h12(g);
    rows.push_back(json{{"genus", g}, {"h12", computed}, {"expected", h}});
    ok = ok && computed == h;
  }
  const long bound_a = namikawa_bound(1, fano_h12(8));
  const long bound_b = namikawa_bound(9, fano_h12(7));
  w["table"] = rows;
  w["singular_point_bound_rho1_g8"] = bound_a;
  w["singular_point_bound_rho9_g7"] = bound_b;
  return ok && bound_a == 24 && bound_b == 18;
}

bool check_fano_rho_gt1(json& w) {
  const std::vector<RhoCase> cases = rho_gt1_cases();
  const std::vector<RhoCase> expected = {{7, 13, 13}, {8, 10, 12}, {9, 7, 11}};
  long max_bound = 0;
  json rows = json::array();
  for (const RhoCase& c : cases) {
    max_bound = std::max(max_bound, c.sing_bound);
    rows.push_back(json{{"rho", c.rho}, {"genus", c.genus}, {"sing_bound", c.sing_bound}});
  }
  w["cases"] = rows;
  w["max_singular_point_bound"] = max_bound;
  return cases == expected && max_bound == 13;
}

bool check_fano_baskets(json& w) {
  // Two or more indices per point, orbits of size >= 7, strict inequality.
  const std::vector<BasketProfile> multi = basket_inequality_cases(7, Rat(24), true, 2);
  const bool multi_ok = multi.size() == 1 && multi[0].orbit_sizes == std::vector<long>{7} &&
                        multi[0].indices == std::vector<std::vector<long>>{{2, 2}} &&
                        multi[0].weight() == Rat(21);
  // Single index per point, orbits of size >= 9: one orbit of size 9..15.
  const std::vector<BasketProfile> single = basket_inequality_cases(9, Rat(24), true, 1);
  std::vector<long> sizes;
  bool single_shape = true;
  for (const BasketProfile& b : single) {
    if (b.orbit_sizes.size() != 1 || b.indices != std::vector<std::vector<long>>{{2}})
      single_shape = false;
    else
      sizes.push_back(b.orbit_sizes[0]);
  }
  std::sort(sizes.begin(), sizes.end());
  const bool single_ok = single_shape && sizes == std::vector<long>{9, 10, 11, 12, 13, 14, 15};
  json multi_rows = json::array();
  for (const BasketProfile& b : multi)
    multi_rows.push_back(json{{"orbit_sizes", b.orbit_sizes},
                              {"indices", b.indices},
                              {"weight", rat_to_string(b.weight())}});
  w["two_index_profiles"] = multi_rows;
  w["single_index_orbit_sizes"] = sizes;
  return multi_ok && single_ok;
}

bool check_fano_halfpoints(json& w) {
  const Rat a = anticanonical_dim_halfpoints(Rat(3, 2), 11);
  const Rat b = anticanonical_dim_halfpoints(Rat(7, 2), 11);
  bool ladder_ok = true;
  json ladder = json::array();
  for (long l = 0; l <= 3; ++l) {
    const Rat k3 = Rat(2 * l - 4) + Rat(11, 2);  // degree ladder at n = 11
    ladder.push_back(json{{"l", l}, {"anticanonical_cube", rat_to_string(k3)}});
    ladder_ok = ladder_ok && anticanonical_dim_halfpoints(k3, 11) == Rat(l);
  }
  w["dim_at_k3_3_2"] = rat_to_string(a);
  w["dim_at_k3_7_2"] = rat_to_string(b);
  w["ladder_n11"] = ladder;
  return a == Rat(0) && b == Rat(1) && ladder_ok;
}

bool check_fano_hurwitz(json& w) {
  const std::vector<HurwitzSolution> sols = hurwitz_enumerate(12, 234, 18, 9);
  const std::vector<HurwitzSolution> expected = {{288, 0, {2, 3, 8}}, {504, 0, {2, 3, 7}}};
  json rows = json::array();
  for (const HurwitzSolution& s : sols)
    rows.push_back(json{{"group_order", s.group_order},
                        {"quotient_genus", s.quotient_genus},
                        {"signature", s.signature}});
  w["solutions"] = rows;
  w["expected_count"] = 2;
  return sols == expected;
}

bool check_fano_orbit_degree(json& w) {
  const OrbitDegreeReport r = orbit_degree_constraint(660, 14);
  w["group_order"] = 660;
  w["two_g_minus_2"] = 14;
  w["forced_divisor"] = r.forced_divisor;
  w["min_degree"] = r.min_degree;
  return r.forced_divisor == 7 && r.min_degree == 7;
}

bool check_fano_diophantine(json& w) {
  const std::vector<DiophantineSolution> a = diophantine_case_A(200);
  const std::vector<DiophantineSolution> b = diophantine_case_B(100);
  json rows = json::array();
  for (const DiophantineSolution& s : a)
    rows.push_back(json{{"k", s.k}, {"alpha", s.alpha}, {"beta", s.beta}, {"g", s.g}});
  w["case_a_solutions"] = rows;
  w["case_b_solutions"] = b.size();
  const bool a_ok = a.size() == 1 && a[0].k == 1 && a[0].alpha == 1 && a[0].beta == 1 && a[0].g == 12;
  return a_ok && b.empty();
}

std::vector<CheckDef> build_catalog() {
  std::vector<CheckDef> defs;
  auto add = [&](const char* id, const char* suite, const char* anchor,
                 double cost, std::function<bool(json&)> fn) {
    defs.push_back(CheckDef{id, suite, anchor, cost, std::move(fn)});
  };

  defs.push_back(order_check("a5", "A5", 60,
      "The alternating group on five letters has order 60"));
  defs.push_back(order_check("a6", "A6", 360,
      "The alternating group on six letters has order 360"));
  defs.push_back(order_check("a7", "A7", 2520,
      "The alternating group on seven letters has order 2520"));
  defs.push_back(order_check("psl2-7", "PSL2(7)", 168,
      "PSL(2,7) acting on the projective line over F7 has order 168"));
  defs.push_back(order_check("sl2-8", "SL2(8)", 504,
      "SL(2,8) acting on the projective line over F8 has order 504"));
  defs.push_back(order_check("psp4-3", "PSp4(3):40", 25920,
      "PSp(4,3) in its degree-40 permutation representation has order 25920"));
  defs.push_back(order_check("psl2-11", "PSL2(11)", 660,
      "PSL(2,11) acting on the projective line over F11 has order 660"));

  add("permgrp.sl2-8-stabilizer", "permutation",
      "A point stabilizer in SL(2,8) on nine points has order 56 and its derived "
      "subgroup is elementary abelian of order 8",
      15, check_sl2_8_stabilizer);
  add("permgrp.sl3-3-blocks", "permutation",
      "SL(3,3) on 26 points is imprimitive with a minimal system of 13 blocks of size 2",
      15, check_sl3_3_blocks);
  add("permgrp.psl2-11-double-transitivity", "permutation",
      "PSL(2,11) is doubly transitive in both its degree-11 and degree-12 actions",
      15, check_psl2_11_double_transitivity);
  add("permgrp.a7-coset-15", "permutation",
      "The coset action of A7 on the cosets of PSL(2,7) has degree 15 with point "
      "stabilizer of order 168",
      15, check_a7_coset_15);

  add("chartab.a7-degrees", "characters",
      "The irreducible character degrees of A7 are 1, 6, 10, 10, 14, 14, 15, 21, 35; "
      "those between 2 and 14 are exactly 6, 10, 14",
      20, check_a7_degrees);
  add("chartab.a7-restriction-s5", "characters",
      "Each degree-10 character of A7 restricts to the embedded S5 with values "
      "(10, -2, -2, 1, 1, 0, 0) and splits as the sum of a degree-4 and a degree-6 "
      "irreducible",
      30, check_a7_restriction_s5);
  add("chartab.psl2-11-restriction-a5", "characters",
      "Each degree-5 character of PSL(2,11) restricts irreducibly to A5 as its "
      "degree-5 character",
      20, check_psl2_11_restriction_a5);
  add("chartab.psl2-11-molien", "characters",
      "Each degree-5 character of PSL(2,11) has a one-dimensional space of cubic "
      "invariants and no quartic invariants",
      20, check_psl2_11_molien);
  add("chartab.psp4-3-molien", "characters",
      "The degree-6 character of PSp(4,3) has no cubic invariants; both degree-5 "
      "characters have no cubic and one quartic invariant",
      60, check_psp4_3_molien);
  add("chartab.min-faithful-degrees", "characters",
      "The minimal faithful character degrees are 3 for A5, 4 for S5, 5 for A6, and "
      "7 for the order-56 stabilizer in SL(2,8)",
      30, check_min_faithful_degrees);

  add("polyinv.weyl-e6-orders", "invariants",
      "The reflection group generated by the six simple reflections of E6 has order "
      "51840 and derived subgroup of order 25920",
      60, check_weyl_e6_orders);
  add("polyinv.weyl-e6-derived-invariants", "invariants",
      "The derived subgroup of the E6 reflection group has invariant dimensions "
      "1, 0, 1 in degrees 2, 3, 4, by three independent computations",
      60, check_weyl_e6_derived_invariants);
  add("polyinv.klein-55-invariants", "invariants",
      "The order-55 group fixes the Klein cubic and its space of cubic invariants "
      "is exactly one-dimensional",
      20, check_klein_55_invariants);

  add("polyinv.forms-invariance", "varieties",
      "Every catalogued variety is fixed by its symmetry generators",
      10, check_forms_invariance);
  add("polyinv.segre-nodes", "varieties",
      "Over F31, F41 and F61 the Segre cubic has exactly ten singular points, the "
      "reductions of the sign-change orbit of (1:1:1:-1:-1:-1), each with Jacobian "
      "rank 1",
      60, check_segre_nodes);
  add("polyinv.klein-smooth-scan", "varieties",
      "The Klein cubic threefold has no singular points over F13 or F23",
      30, [](json& w) { return smoothness_scan("klein_cubic", {13, 23}, w); });
  add("polyinv.x6prime-smooth-scan", "varieties",
      "The seven-coordinate sextic model has no singular points over F11 or F13",
      60, [](json& w) { return smoothness_scan("x6prime", {11, 13}, w); });

  add("fano.genus-formulas", "fano",
      "Anticanonical bookkeeping: h0 = g + 2, the model of genus 5 lies on 3 "
      "quadrics, and the Lefschetz count is 2g - 20",
      5, check_fano_genus_formulas);
  add("fano.h12-table", "fano",
      "The Hodge numbers h^{1,2} for genus 2..10, 12 are 52, 30, 20, 14, 10, 7, 5, "
      "3, 2, 0, giving singular-point bounds 24 and 18 in the two boundary cases",
      5, check_fano_h12_table);
  add("fano.rho-gt1-bound", "fano",
      "In Picard rank above one the only cases are (rho, g) = (7,13), (8,10), "
      "(9,7), with singular-point bounds 13, 12, 11",
      5, check_fano_rho_gt1);
  add("fano.basket-profiles", "fano",
      "The basket inequality forces the unique two-index profile of seven (2,2) "
      "points, and single-index orbits of sizes 9 through 15",
      5, check_fano_baskets);
  add("fano.halfpoints", "fano",
      "The half-point dimension formula vanishes at anticanonical cube 3/2 with 11 "
      "half-points and climbs the integral ladder",
      5, check_fano_halfpoints);
  add("fano.hurwitz-genus7", "fano",
      "The Riemann-Hurwitz enumeration with order divisible by 9 over 2g - 2 = 12 "
      "yields exactly the (2,3,8) solution of order 288 and the (2,3,7) solution "
      "of order 504",
      5, check_fano_hurwitz);
  add("fano.orbit-degree", "fano",
      "With group order 660 and 2g - 2 = 14 every orbit degree is a multiple of 7, "
      "and 7 occurs",
      5, check_fano_orbit_degree);
  add("fano.diophantine", "fano",
      "The two elimination systems have exactly the solutions (k, alpha, beta, g) "
      "= (1, 1, 1, 12) in case A and none in case B",
      5, check_fano_diophantine);

  return defs;
}

const std::vector<CheckDef>& catalog() {
  static const std::vector<CheckDef> defs = build_catalog();
  return defs;
}

std::vector<const CheckDef*> defs_for(const std::string& name) {
  if (!is_suite(name)) {
    std::string msg = "unknown suite '" + name + "'; available:";
    for (const std::string& s : suite_names()) msg += " " + s;
    throw DomainError(msg);
  }
  std::vector<const CheckDef*> out;
  for (const CheckDef& d : catalog())
    if (name == "all" || d.suite == name) out.push_back(&d);
  return out;
}

void run_one(const CheckDef& def, const RunOptions& opts, CheckResult& slot) {
  slot.id = def.id;
  slot.suite = def.suite;
  slot.anchor = def.anchor;
  if (def.cost_hint > opts.budget_seconds) {
    slot.status = "skipped";
    slot.witness["reason"] = "estimated cost exceeds the per-check budget";
    slot.witness["estimated_seconds"] = static_cast<long>(def.cost_hint);
    return;
  }
  const auto start = std::chrono::steady_clock::now();
  try {
    slot.status = def.run(slot.witness) ? "pass" : "fail";
  } catch (const std::exception& e) {
    slot.status = "fail";
    slot.witness["error"] = e.what();
  }
  slot.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc;
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "orders", "permutation", "characters", "invariants", "varieties", "fano", "all"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CheckResult> run_suite(const std::string& name, const RunOptions& opts) {
  const std::vector<const CheckDef*> defs = defs_for(name);
  std::vector<CheckResult> results(defs.size());
  const int workers = std::max(1, std::min<int>(opts.workers, static_cast<int>(defs.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < defs.size(); ++i) run_one(*defs[i], opts, results[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < defs.size(); i = next.fetch_add(1))
      run_one(*defs[i], opts, results[i]);
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return results;
}

json report_body(const std::string& suite, const std::vector<CheckResult>& results) {
  json checks = json::array();
  long passed = 0, failed = 0, skipped = 0;
  for (const CheckResult& r : results) {
    if (r.status == "pass") ++passed;
    else if (r.status == "fail") ++failed;
    else ++skipped;
    checks.push_back(json{{"anchor", r.anchor},
                          {"id", r.id},
                          {"status", r.status},
                          {"suite", r.suite},
                          {"witness", r.witness}});
  }
  json body;
  body["checks"] = checks;
  body["suite"] = suite;
  body["summary"] = json{{"failed", failed},
                         {"passed", passed},
                         {"skipped", skipped},
                         {"total", static_cast<long>(results.size())}};
  return body;
}

json report_document(const std::string& suite, const std::vector<CheckResult>& results,
                     const RunOptions& opts) {
  json elapsed = json::object();
  for (const CheckResult& r : results)
    if (r.status != "skipped") elapsed[r.id] = r.elapsed_seconds;
  json meta;
  meta["budget_seconds"] = opts.budget_seconds;
  meta["elapsed_seconds"] = elapsed;
  meta["generated_at_utc"] = utc_timestamp();
  meta["seed"] = opts.seed;
  meta["workers"] = opts.workers;
  json doc;
  doc["body"] = report_body(suite, results);
  doc["meta"] = meta;
  return doc;
}

std::string report_markdown(const std::string& suite,
                            const std::vector<CheckResult>& results) {
  long passed = 0, failed = 0, skipped = 0;
  for (const CheckResult& r : results) {
    if (r.status == "pass") ++passed;
    else if (r.status == "fail") ++failed;
    else ++skipped;
  }
  std::ostringstream out;
  out << "# Verification report\n\n";
  out << "Suite `" << suite << "`: " << results.size() << " checks — " << passed
      << " passed, " << failed << " failed, " << skipped << " skipped.\n\n";
  out << "| check | status | claim |\n";
  out << "|---|---|---|\n";
  for (const CheckResult& r : results)
    out << "| `" << r.id << "` | " << r.status << " | " << r.anchor << " |\n";
  out << "\n## Witnesses\n";
  for (const CheckResult& r : results) {
    out << "\n### `" << r.id << "` — " << r.status << "\n\n";
    out << r.anchor << ".\n\n";
    out << "```json\n" << r.witness.dump(2) << "\n```\n";
  }
  return out.str();
}

}  // namespace trefoil
