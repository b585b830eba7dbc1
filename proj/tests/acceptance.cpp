// Acceptance suite: one line per criterion, exit status 1 if any fails.
// Every check is exact; the only thresholds are the wall-clock limits.

#include "eulercong/cli.hpp"
#include "eulercong/congruence.hpp"
#include "eulercong/eulerian.hpp"
#include "eulercong/prooftrace.hpp"
#include "eulercong/report_json.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace eulercong;

namespace {

struct Criterion {
  std::string id;
  std::string title;
  double time_limit_s;  // 0 = no limit
  std::function<std::string()> body;  // empty string on success, else a failure description
};

int g_failures = 0;

void run_criterion(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  std::string why;
  try {
    why = c.body();
  } catch (const std::exception& e) {
    why = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (why.empty() && c.time_limit_s > 0 && secs >= c.time_limit_s)
    why = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.time_limit_s) + " s";
  const bool ok = why.empty();
  if (!ok) ++g_failures;
  std::printf("[%s] %s %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(), secs,
              ok ? "" : " -- ", why.c_str());
  std::fflush(stdout);
}

std::string nm(unsigned n, unsigned m) { return "(n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")"; }

std::string congruence_grid() {
  unsigned count = 0;
  for (unsigned n = 0; n <= 10; ++n)
    for (unsigned m = 1; m <= 8; ++m, ++count)
      if (!verify_congruence(n, m).holds) return "congruence fails at " + nm(n, m);
  return count == 88 ? "" : "expected 88 cases";
}

std::string eulerian_cross_methods() {
  for (unsigned n = 0; n <= 8; ++n) {
    const Poly rec = eulerian_recurrence(n).poly;
    if (rec != eulerian_bruteforce(n).poly) return "recurrence != bruteforce at n=" + std::to_string(n);
    if (rec != eulerian_from_gf(n).poly) return "recurrence != gf at n=" + std::to_string(n);
  }
  for (unsigned n = 0; n <= 10; ++n) {
    const Poly a = eulerian_recurrence(n).poly;
    if (a(1) != Rational(factorial(n))) return "A_n(1) != n! at n=" + std::to_string(n);
    if (n >= 1)
      for (unsigned k = 0; k <= n + 1; ++k)
        if (a.coeff(k) != a.coeff(n + 1 - k)) return "not palindromic at n=" + std::to_string(n);
  }
  return "";
}

std::string proof_step_equality() {
  for (unsigned n = 0; n <= 8; ++n)
    for (unsigned m = 1; m <= 6; ++m)
      if (diff_rational(n, m) != series_difference_coeff(n, m)) return "mismatch at " + nm(n, m);
  return "";
}

std::string denominator_claims() {
  for (unsigned n = 0; n <= 8; ++n) {
    for (unsigned m = 1; m <= 6; ++m) {
      if (rf_den_value_at(diff_rational(n, m), 1) == 0) return "t-1 divides the denominator at " + nm(n, m);
      const Poly bound = pow(geometric_poly(m), n + 1);
      for (unsigned j = 0; j < m; ++j) {
        const auto rc = ratio_coeff(j, m, n);
        if (!divides(rc.value.den(), bound))
          return "denominator of ratio j=" + std::to_string(j) + " does not divide G^(n+1) at " + nm(n, m);
        if (!rc.divisor_exponent) return "no divisor exponent for j=" + std::to_string(j) + " at " + nm(n, m);
        if (!rc.forms_agree) return "quotient forms disagree for j=" + std::to_string(j) + " at " + nm(n, m);
      }
    }
  }
  return "";
}

std::string telescoping() {
  for (unsigned n = 0; n <= 8; ++n) {
    for (unsigned m = 1; m <= 6; ++m) {
      RatFunc sum;
      for (unsigned j = 0; j < m; ++j) sum += ratio_coeff(j, m, n).value;
      if (sum != series_difference_coeff(n, m)) return "sum of ratio coefficients differs at " + nm(n, m);
    }
  }
  return "";
}

std::string xp_decomposition() {
  for (unsigned m = 1; m <= 16; ++m) {
    if (ts_geometric_exp_sum(m, 8)[0] != geometric_poly(m)) return "constant term wrong at m=" + std::to_string(m);
    if (xp_decompose(m, 8).constant != geometric_poly(m)) return "xp_decompose constant wrong at m=" + std::to_string(m);
  }
  return "";
}

std::string worpitzky() {
  for (unsigned n = 0; n <= 6; ++n) {
    const auto c = worpitzky_partial_check(n, 12);
    for (unsigned k = 0; k <= 12; ++k) {
      Integer expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), k, n);
      if (c.at(k) != Rational(expected))
        return "coefficient " + std::to_string(k) + " != k^n at n=" + std::to_string(n);
    }
  }
  return "";
}

std::string negative_control() {
  const auto r = verify_congruence(1, 2, RhsScaling::unscaled);
  if (r.holds) return "unscaled right-hand side passed";
  if (r.remainder != Poly{-3} + Poly{-6} * Poly{-1, 1}) return "unexpected remainder " + to_string(r.remainder);
  return "";
}

int binary_exit_code(const std::string& args) {
  std::string cmd = std::string(EULERCONG_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string cli_contract() {
  std::ostringstream out, err;
  int code = cli::run({"verify", "--n-max", "10", "--m-max", "8", "--format", "json"}, out, err);
  if (code != 0) return "grid verify exited " + std::to_string(code);
  const auto arr = json::parse(out.str());
  if (!arr.is_array() || arr.size() != 88) return "expected 88 reports";
  for (const auto& r : arr) {
    if (!is_valid_congruence_json(r)) return "schema-invalid report";
    if (r["holds"] != true) return "report with holds=false";
  }
  if (arr.dump(2) + "\n" != out.str()) return "JSON round-trip not byte-identical";

  std::ostringstream o2, e2;
  if (int c = cli::run({"verify", "--n", "1", "--m", "0"}, o2, e2); c != 2)
    return "verify --n 1 --m 0 exited " + std::to_string(c);

  if (int c = binary_exit_code("verify --n-max 10 --m-max 8 --format json"); c != 0)
    return "binary grid verify exited " + std::to_string(c);
  if (int c = binary_exit_code("verify --n 1 --m 0"); c != 2)
    return "binary verify --n 1 --m 0 exited " + std::to_string(c);
  return "";
}

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"AC1", "congruence holds for 0<=n<=10, 1<=m<=8", 10.0, congruence_grid},
      {"AC2", "recurrence = bruteforce = gf (n<=8); A_n(1)=n! and palindromic (n<=10)", 5.0,
       eulerian_cross_methods},
      {"AC3", "kernel difference = series coefficient, n<=8, m<=6", 20.0, proof_step_equality},
      {"AC4", "denominator free of t-1; ratio denominators divide G_m^(n+1)", 0.0, denominator_claims},
      {"AC5", "telescoping sum over j equals series coefficient", 0.0, telescoping},
      {"AC6", "x^0 coefficient of sum t^j e^{jx} is 1+...+t^(m-1), m<=16", 0.0, xp_decomposition},
      {"AC7", "A_n(t)/(1-t)^(n+1) has coefficients k^n through k=12, n<=6", 0.0, worpitzky},
      {"AC8", "negative control: unscaled rhs at (1,2) leaves a remainder", 0.0, negative_control},
      {"AC9", "CLI contract: grid JSON, exit codes, byte-identical round trip", 0.0, cli_contract},
  };
  for (const auto& c : criteria) run_criterion(c);
  std::printf("%d of %zu criteria failed\n", g_failures, std::size(criteria));
  return g_failures == 0 ? 0 : 1;
}
