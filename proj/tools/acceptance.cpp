// One PASS/FAIL line per acceptance criterion, with the individual checks indented below.

#include "qgrass/checks.hpp"

#include <chrono>
#include <functional>
#include <algorithm>
#include <cstdlib>
#include <set>
#include <iomanip>
#include <iostream>

using namespace qgrass;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<std::vector<CheckResult>()> run;
};


} // namespace

int main(int argc, char** argv) {
  // Optional arguments restrict the run to the listed criterion numbers.
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  const Ambient g24{2, 4}, g25{2, 5}, g35{3, 5}, g36{3, 6};
  std::string limitation;

  std::vector<Criterion> criteria{
      {1, "standard monomial bases",
       [&] {
         return std::vector<CheckResult>{checks::basis(g24, 3), checks::basis(g25, 2), checks::basis(g36, 2)};
       }},
      {2, "commutation relations",
       [&] {
         return std::vector<CheckResult>{checks::uw_commutation(g24),       checks::uw_commutation(g25),
                                         checks::uw_commutation(g36),       checks::commutation_mod_u(g24),
                                         checks::commutation_mod_u(g25),    checks::commutation_mod_u(g36),
                                         checks::minor_commutation({2, 3}), checks::minor_commutation({2, 4}),
                                         checks::minor_commutation({3, 4})};
       }},
      {3, "dehomogenisation",
       [&] {
         std::vector<CheckResult> rs;
         for (Ambient a : {g24, g25, g36}) {
           rs.push_back(checks::dehomogenisation(a));
           rs.push_back(checks::weight_gradings(a, 7));
         }
         return rs;
       }},
      {4, "derivation identities",
       [&] {
         std::vector<CheckResult> rs;
         for (Ambient a : {g24, g25, g36}) {
           rs.push_back(checks::column_derivations(a));
           rs.push_back(checks::extended_row_column(a));
           rs.push_back(checks::extension_identities(a));
           rs.push_back(checks::extended_column_sum(a));
           rs.push_back(checks::restriction_to_R(a, 11));
         }
         for (MatShape s : {MatShape{2, 2}, MatShape{2, 3}, MatShape{3, 3}}) rs.push_back(checks::row_column_sum(s));
         return rs;
       }},
      {5, "normalization to a column combination",
       [&] { return std::vector<CheckResult>{checks::normalization(g24, 50, 1)}; }},
      {6, "HH^1 dimension",
       [&] {
         std::vector<CheckResult> rs{checks::hh1_dimension(g24, {-1, 0, 1, 2}, 3), checks::hh1_dimension(g25, {0}, 3)};
         limitation = hh1_window(g24, {-1}, 3).limitation;
         return rs;
       }},
      {7, "non-square decomposition", [&] { return std::vector<CheckResult>{checks::nonsquare_decomposition({2, 3})}; }},
      {8, "properties",
       [&] {
         return std::vector<CheckResult>{checks::confluence({3, 4}, 6, 200, 3),
                                         checks::associativity({3, 3}, 50, 5),
                                         checks::determinant_centrality(3),
                                         checks::leibniz(g24, 20, 9),
                                         checks::leibniz(g25, 10, 9),
                                         checks::leibniz(g36, 5, 9),
                                         checks::psi_agreement(g25, 2),
                                         checks::specialisation(g24, {-1, 0, 1}, 2, mpq_class(2, 3)),
                                         checks::specialisation(g25, {0}, 2, mpq_class(2, 3))};
       }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    auto start = std::chrono::steady_clock::now();
    std::vector<CheckResult> rs;
    try {
      rs = c.run();
    } catch (const std::exception& e) {
      rs.push_back({c.title, false, false, std::string("threw: ") + e.what()});
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = !rs.empty() && std::all_of(rs.begin(), rs.end(), [](const CheckResult& r) { return r.pass; });
    all = all && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << std::fixed
              << std::setprecision(1) << secs << "s)\n";
    for (const auto& r : rs) std::cout << "    " << (r.pass ? "ok   " : "FAIL ") << r.name << ": " << r.detail << "\n";
    if (c.id == 6 && !limitation.empty()) std::cout << "    limitation: " << limitation << "\n";
    std::cout.flush();
  }
  return all ? 0 : 1;
}
