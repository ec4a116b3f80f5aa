// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is exact; runtime budgets are asserted.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>

#include "hilbalg/chern.hpp"
#include "hilbalg/cli.hpp"
#include "hilbalg/gl2.hpp"
#include "hilbalg/json_io.hpp"
#include "hilbalg/surjection.hpp"
#include "hilbalg/tangent.hpp"
#include "test_support.hpp"

using corealg::Domain;
using corealg::Scalar;
using finalg::Algebra;
using finalg::BaseRing;
using nlohmann::json;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, long budget_ms,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (ms >= budget_ms) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("runtime ") + std::to_string(ms) +
                  " ms exceeds " + std::to_string(budget_ms) + " ms";
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << name << "  [" << ms
              << " ms]";
    if (!ok && !detail.empty()) std::cout << "  -- " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
}

bool require(bool cond, const std::string& why, std::string& detail) {
    if (!cond && detail.empty()) detail = why;
    return cond;
}

}  // namespace

int main() {
    // 1. the degree-3 Chow presentation generator
    criterion(1, "Chow presentation generator 9*c2^2 - 2*c1^2*c2, content 1, mod p != 0", 1000,
              [](std::string& why) {
                  auto r = hilbcli::run({"verify", "thm7-1"});
                  bool ok = require(r.ok && r.exit_code == 0, "verify thm7-1 failed", why);
                  ok &= require(r.payload["generator"] == "9*c2^2 - 2*c1^2*c2",
                                "generator mismatch: " + r.payload.dump(), why);
                  ok &= require(r.payload["content"] == "1", "content != 1", why);
                  ok &= require(r.payload["mod_p_nonzero"] == json::array({"2", "3", "5", "7"}),
                                "mod-p nonvanishing not verified", why);
                  return ok;
              });

    // 2. tangent space of (x^2, xy, y^2) over Q, F2, F5
    criterion(2, "tangent_space_dim((x^2,xy,y^2)) = 6 over Q, F2, F5", 1000, [](std::string& why) {
        bool ok = true;
        for (const Domain& dom :
             {Domain::rationals(), Domain::prime_field(2), Domain::prime_field(5)}) {
            hilbpts::IdealPoint p;
            p.vars = {"x", "y"};
            for (const char* g : {"x^2", "x*y", "y^2"})
                p.gens.push_back(corealg::MultiPoly::parse(g, p.vars, dom));
            size_t dim = hilbpts::tangent_space_dim(p);
            ok &= require(dim == 6, "dimension " + std::to_string(dim) + " over " + dom.name(), why);
        }
        return ok;
    });

    // 3. Clebsch-Gordan decomposition of Hom(S^2(V*), V*)
    criterion(3, "gl2 decomposition of Hom(S^2(V*),V*) is {(1,0),(2,-1)}", 1000,
              [](std::string& why) {
                  charclass::ChernRing ring({{"V", 2}});
                  auto V = charclass::make_generator("V");
                  auto hom = charclass::make_tensor(
                      charclass::make_dual(charclass::make_sym(2, charclass::make_dual(V))),
                      charclass::make_dual(V));
                  corealg::MultiPoly chi = ring.character(hom);
                  auto w = charclass::gl2_decompose(chi);
                  bool ok = require(w == std::vector<std::pair<int, int>>{{1, 0}, {2, -1}},
                                    "weights mismatch", why);
                  ok &= require(charclass::gl2_reconstruct(w) == chi, "reconstruction failed", why);
                  return ok;
              });

    // 4. Rees degeneration battery
    criterion(4, "rees battery: axioms in t, fiber(1) = input up to base change, fiber(0) square-zero",
              5000, [](std::string& why) {
                  bool ok = true;
                  Scalar one = Scalar::of_int(Domain::integers(), 1);
                  Scalar zero = Scalar::of_int(Domain::integers(), 0);
                  auto battery = support::rees_battery();
                  ok &= require(battery.size() >= 12, "battery too small", why);
                  for (const Algebra& a : battery) {
                      finalg::ReesFamily rf = finalg::rees_family(a);
                      ok &= require(finalg::check_algebra_axioms(rf.family).ok,
                                    "family fails axioms over " + a.base.name(), why);
                      ok &= require(finalg::specialize_family(rf.family, one) ==
                                        finalg::conjugate(a, rf.basis),
                                    "t=1 fiber mismatch over " + a.base.name(), why);
                      Algebra f0 = finalg::specialize_family(rf.family, zero);
                      bool sqz = true;
                      for (size_t i = 1; i < f0.rank; ++i)
                          for (size_t j = 1; j < f0.rank; ++j)
                              for (size_t k = 0; k < f0.rank; ++k)
                                  if (!f0.c(i, j, k).is_zero()) sqz = false;
                      ok &= require(sqz, "t=0 fiber not square-zero over " + a.base.name(), why);
                  }
                  return ok;
              });

    // 5. the explicit degeneration witnesses
    criterion(5, "three-lines and robber witnesses pass all fiber checks", 1000,
              [](std::string& why) {
                  auto r = hilbcli::run({"verify", "witnesses"});
                  bool ok = require(r.ok && r.exit_code == 0, "verify witnesses failed: " + r.human_text,
                                    why);
                  if (ok) {
                      ok &= require(r.payload["three_lines"]["t1_cyclic_permutation"] == true,
                                    "branch permutation not cyclic", why);
                      ok &= require(r.payload["robber"]["t1_split_idempotent"] == true,
                                    "robber t=1 fiber not split", why);
                  }
                  return ok;
              });

    // 6. the degree-3 classification
    criterion(6, "classify_degree3 separates isotypes over F2, F3; conjugation invariant", 10000,
              [](std::string& why) {
                  bool ok = true;
                  std::mt19937 rng(20250810);
                  for (long p : {2L, 3L}) {
                      auto iso = support::degree3_isotypes(p);
                      std::vector<finalg::IsotypeReport> reports;
                      for (const auto& a : iso) reports.push_back(finalg::classify_degree3(a));
                      for (size_t i = 0; i < reports.size(); ++i)
                          for (size_t j = i + 1; j < reports.size(); ++j)
                              ok &= require(!(reports[i] == reports[j]),
                                            "isotypes " + std::to_string(i) + "," +
                                                std::to_string(j) + " collide over F" +
                                                std::to_string(p),
                                            why);
                      for (size_t i = 0; i < reports.size(); ++i)
                          ok &= require(reports[i].lci == (i != 5), "lci flag wrong", why);
                      Domain dom = Domain::prime_field(p);
                      for (size_t i = 0; i < iso.size(); ++i)
                          for (int trial = 0; trial < 20; ++trial) {
                              auto g = support::random_invertible(dom, 3,
                                                                  static_cast<unsigned long>(p), rng);
                              Algebra conj =
                                  finalg::conjugate(iso[i], finalg::base_change_of_field(g, iso[i].base));
                              ok &= require(finalg::classify_degree3(conj) == reports[i],
                                            "conjugation changed the report", why);
                          }
                  }
                  return ok;
              });

    // 7. codimension counts against the closed formula
    criterion(7, "non-surjective counts match the closed formula (p^{nr} <= 10^6, p = 2, 3)", 30000,
              [](std::string& why) {
                  bool ok = true;
                  for (long p : {2L, 3L})
                      for (long n = 1; n * static_cast<long>(1) <= 20; ++n) {
                          bool any = false;
                          for (long r = 1; r <= 20; ++r) {
                              double size = std::pow(static_cast<double>(p),
                                                     static_cast<double>(n * r));
                              if (size > 1e6) break;
                              any = true;
                              bounds::CountReport rep = bounds::count_nonsurjective_linear(n, r, p);
                              ok &= require(rep.non_surjective == rep.formula_value,
                                            "formula mismatch", why);
                          }
                          if (!any) break;
                      }
                  ok &= require(bounds::count_nonsurjective_linear(2, 2, 2).non_surjective == 10,
                                "(2,2,2) != 10", why);
                  ok &= require(bounds::count_nonsurjective_linear(3, 2, 2).non_surjective == 22,
                                "(3,2,2) != 22", why);
                  bounds::CountReport homs = bounds::count_nonsurjective_algebra_homs(3, 2);
                  ok &= require(homs.non_surjective == 176, "algebra homs (3,2) != 176", why);
                  ok &= require(homs.non_surjective ==
                                    8 * bounds::count_nonsurjective_linear(3, 2, 2).non_surjective,
                                "factorization 176 = 2^3 * 22 fails", why);
                  return ok;
              });

    // 8. connectivity formulas
    criterion(8, "connectivity_report (5,3) = (6,2,3,4,3) and grid identities", 1000,
              [](std::string& why) {
                  bounds::ConnectivityReport r = bounds::connectivity_report(5, 3);
                  bool ok = require(r.complex_connectivity == 6 && r.real_connectivity == 2 &&
                                        r.suspension_a1_connectivity == 3 &&
                                        r.very_effective_index == 4 &&
                                        r.motivic_weight_iso_bound == 3,
                                    "(5,3) values wrong", why);
                  for (long n = 1; n <= 20; ++n)
                      for (long d = 1; d <= n; ++d) {
                          bounds::ConnectivityReport g = bounds::connectivity_report(n, d);
                          ok &= require(g.complex_connectivity == 2 * g.real_connectivity + 2 &&
                                            g.very_effective_index ==
                                                g.suspension_a1_connectivity + 1,
                                        "grid identity fails", why);
                      }
                  return ok;
              });

    // 9. path to basepoint on random surjections
    criterion(9, "straighten + rees path reaches the canonical basepoint on 10 random surjections",
              10000, [](std::string& why) {
                  std::mt19937 rng(424242);
                  BaseRing f3 = BaseRing::Fp(3);
                  Domain dom = f3.scalar_domain();
                  std::vector<Algebra> pool{
                      finalg::base_algebra(f3),
                      finalg::truncated_polynomial_algebra(f3, 2),
                      finalg::truncated_polynomial_algebra(f3, 3),
                      finalg::truncated_polynomial_algebra(f3, 4),
                      finalg::square_zero_extension(2, f3),
                      finalg::square_zero_extension(3, f3),
                      finalg::product_algebra(finalg::base_algebra(f3), finalg::base_algebra(f3)),
                      finalg::product_algebra(finalg::base_algebra(f3),
                                              finalg::truncated_polynomial_algebra(f3, 3)),
                      finalg::field_extension_algebra(3, {1, 0}),
                  };
                  Scalar one = Scalar::of_int(Domain::integers(), 1);
                  Scalar zero = Scalar::of_int(Domain::integers(), 0);
                  bool ok = true;
                  int produced = 0;
                  while (produced < 10) {
                      const Algebra& a = pool[rng() % pool.size()];
                      size_t d = a.rank;
                      if (d > 4) continue;
                      size_t n = std::max<size_t>(d > 0 ? d - 1 : 1, 1) + rng() % 3;
                      if (n > 5) n = 5;
                      hilbpts::SurjectionData s;
                      s.target = a;
                      for (size_t i = 0; i < n; ++i) {
                          std::vector<Scalar> v;
                          for (size_t k = 0; k < d; ++k)
                              v.push_back(Scalar::of_int(dom, static_cast<long>(rng() % 3)));
                          s.images.push_back(std::move(v));
                      }
                      if (!hilbpts::is_surjective(s)) continue;
                      ++produced;
                      hilbpts::SurjectionData cur = s;
                      for (const auto& st : hilbpts::straighten_coordinates(s))
                          cur = hilbpts::step_at(a, st, one);
                      hilbpts::ReesPath path = hilbpts::rees_path_to_basepoint(cur);
                      Algebra fiber0 = finalg::specialize_family(path.family, zero);
                      ok &= require(fiber0 == finalg::square_zero_extension(d - 1, f3),
                                    "endpoint tensor is not the square-zero basepoint", why);
                      auto expect = hilbpts::canonical_basepoint_markings(f3, d, n);
                      for (size_t i = 0; i < path.markings.size(); ++i)
                          ok &= require(finalg::scalars_of_vec(finalg::specialize_vec(
                                            path.markings[i], zero)) == expect[i],
                                        "endpoint markings are not canonical", why);
                  }
                  return ok;
              });

    // 10. tangent-space oracle equivalence
    criterion(10, "Taylor syzygies agree with the direct I/I^2 oracle (colength <= 4, <= 3 vars)",
              60000, [](std::string& why) {
                  bool ok = true;
                  Domain Q = Domain::rationals();
                  size_t checked = 0;
                  for (size_t nvars = 1; nvars <= 3; ++nvars)
                      for (size_t d = 1; d <= 4; ++d)
                          for (const auto& mi : support::monomial_ideals(nvars, d)) {
                              auto p = support::as_ideal_point(mi, Q,
                                                               hilbpts::MonomialOrder::Degrevlex);
                              size_t via_taylor = hilbpts::tangent_space_dim(p);
                              size_t via_module = support::tangent_dim_module_oracle(mi, Q);
                              ok &= require(via_taylor == via_module,
                                            "disagreement at a colength-" + std::to_string(d) +
                                                " ideal in " + std::to_string(nvars) + " variables",
                                            why);
                              ++checked;
                          }
                  ok &= require(checked >= 38, "enumeration too small: " + std::to_string(checked),
                                why);
                  return ok;
              });

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED")
              << "\n";
    return failures == 0 ? 0 : 1;
}
