// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "ramsum/asymptotics.hpp"
#include "ramsum/errors.hpp"
#include "suites.hpp"

using namespace ramsum;

namespace {

struct Verdict {
  bool ok = false;
  std::string detail;
};

Verdict from_suite(const suites::SuiteResult& r) {
  std::string detail = std::to_string(r.cases) + " cases, " + std::to_string(r.failures) + " failures";
  if (!r.passed()) detail += "; first: " + r.first_failure;
  return {r.passed(), detail};
}

int failed = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    v.ok = false;
    v.detail += "; exceeded " + std::to_string(static_cast<int>(limit_seconds)) + " s";
  }
  if (!v.ok) ++failed;
  std::printf("%s %2d %-34s %8.2fs  %s\n", v.ok ? "PASS" : "FAIL", id, title, secs, v.detail.c_str());
  std::fflush(stdout);
}

Verdict asymptotic_ratios() {
  std::string detail;
  bool ok = true;
  const struct {
    unsigned r;
    Int x;
  } cases[] = {{2, 5000}, {3, 2000}};
  for (const auto& c : cases) {
    const auto start = std::chrono::steady_clock::now();
    const auto rep = asymptotic_report(c.r, c.x, 100'000);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_band = rep.ratio >= 0.98 && rep.ratio <= 1.02 && std::isfinite(rep.ratio);
    const bool fast = secs < 30.0;
    ok = ok && in_band && fast;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%sr=%u x=%lld ratio=%.6f (%.2fs)%s", detail.empty() ? "" : "; ", c.r,
                  static_cast<long long>(c.x), rep.ratio, secs, fast ? "" : " too slow");
    detail += buf;
  }
  return {ok, detail};
}

}  // namespace

int main() {
  criterion(1, "orthogonality of c_n", 5, [] { return from_suite(suites::orthogonality()); });
  criterion(2, "unit-shift sums of c_n", 10, [] { return from_suite(suites::cohen()); });
  criterion(3, "E_G and R_G fast vs definition", 60, [] { return from_suite(suites::theorems()); });
  criterion(4, "closed forms", 0, [] { return from_suite(suites::corollaries()); });
  criterion(5, "R at prime powers", 0, [] { return from_suite(suites::prime_power()); });
  criterion(6, "T_a strategies", 0, [] { return from_suite(suites::t_a()); });
  criterion(7, "multiplicativity", 0, [] { return from_suite(suites::multiplicativity()); });
  criterion(8, "g_r = F_r * id_{r-1}", 0, [] { return from_suite(suites::dirichlet()); });
  criterion(9, "average order of g_r", 0, asymptotic_ratios);
  criterion(10, "CRT, coprime counts, shift sums", 0, [] { return from_suite(suites::lemmas()); });
  std::printf("%s: %d of 10 criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}
