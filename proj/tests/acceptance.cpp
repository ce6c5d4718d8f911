// One line per acceptance criterion. Each criterion runs its registered
// checks at the default precision and must pass every point inside the
// time limit. Exits 1 if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "mzv/verifier.hpp"

namespace {

struct Criterion {
  int number;
  std::vector<std::string> ids;
  double limit_s;
};

const std::vector<Criterion> kCriteria = {
    {1, {"EULER_D2"}, 30},
    {2, {"Z31"}, 60},
    {3, {"THM1"}, 60},
    {4, {"THM2"}, 90},
    {5, {"COR3"}, 90},
    {6, {"CREAM"}, 30},
    {7, {"CHEESE"}, 30},
    {8, {"HALF_DUALS"}, 10},
    {9, {"PROP1"}, 120},
    {10, {"PROP2"}, 60},
    {11, {"BBB14", "TMILK"}, 5},
    {12, {"SPRIME_GF"}, 5},
    {13, {"JACOBI"}, 10},
    {14, {"ODE_ANNIHILATION"}, 10},
    {15, {"WRONSKIAN"}, 5},
    {16, {"MACLAURIN_OPENING"}, 5},
    {17, {"GAUSS_SUM", "REMOVABLE_SING"}, 30},
};

constexpr double kSuiteLimit_s = 600;

}  // namespace

int main() {
  int failed = 0;
  double total = 0;
  for (const auto& c : kCriteria) {
    std::string names;
    bool ok = true;
    double elapsed = 0, worst = 0, tol = 0;
    std::string detail;
    for (const auto& id : c.ids) {
      if (!names.empty()) names += " / ";
      names += id;
      try {
        auto r = mzv::run(id);
        elapsed += r.elapsed_s;
        worst = std::max(worst, r.max_residual);
        tol = std::max(tol, r.tolerance);
        if (!r.pass) {
          ok = false;
          for (const auto& p : r.points)
            if (!p.pass()) {
              detail += " [" + id + " " + p.label + "]";
              break;
            }
        }
      } catch (const std::exception& e) {
        ok = false;
        detail += " [" + id + " threw: " + e.what() + "]";
      }
    }
    if (elapsed >= c.limit_s) {
      ok = false;
      detail += " [over time]";
    }
    total += elapsed;
    if (!ok) ++failed;
    std::printf("%s  %2d  %-32s max_residual %.2e  tol %.0e  time %.2fs / %.0fs%s\n", ok ? "PASS" : "FAIL",
                c.number, names.c_str(), worst, tol, elapsed, c.limit_s, detail.c_str());
  }
  std::printf("%d/%zu criteria passed, total %.2fs (limit %.0fs)\n", static_cast<int>(kCriteria.size()) - failed,
              kCriteria.size(), total, kSuiteLimit_s);
  if (total >= kSuiteLimit_s) ++failed;
  return failed == 0 ? 0 : 1;
}
