#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end: `eulerian`, `verify` and `trace`.
 *
 * Exit codes: 0 when every mathematical check passes, 1 when one fails,
 * 2 for usage or validation errors (message and usage on the error stream).
 */

#include "eulercong/congruence.hpp"
#include "eulercong/eulerian.hpp"
#include "eulercong/prooftrace.hpp"
#include "eulercong/report_json.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace eulercong::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr unsigned kMaxN = 64;
inline constexpr unsigned kMaxM = 64;

enum class Format { plain, latex, json };

struct CliConfig {
  std::string command;
  unsigned n = 0;
  unsigned m = 1;
  unsigned n_max = 0;
  unsigned m_max = 0;
  bool grid = false;
  std::string method = "recurrence";
  Format format = Format::plain;
  unsigned parallel = 1;
  bool integer_form = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Evaluates f on every item with up to `workers` threads; results keep input order.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, unsigned workers, F f) {
  using Out = decltype(f(items.front()));
  std::vector<Out> out(items.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) out[i] = f(items[i]);
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(items.size())));
  if (workers == 1) {
    work();
    return out;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  pool.clear();
  return out;
}

namespace detail {

inline std::string render(const Poly& p, Format f) { return f == Format::latex ? to_latex(p) : to_string(p); }
inline std::string render(const RatFunc& p, Format f) { return f == Format::latex ? to_latex(p) : to_string(p); }

inline void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

inline void print_congruence(std::ostream& out, const CongruenceReport& r, const CliConfig& cfg) {
  auto side = [&](const Poly& p) { return render(cfg.integer_form ? integer_form(p, r.n, r.m) : p, cfg.format); };
  out << "n=" << r.n << " m=" << r.m << (r.holds ? " holds" : " FAILS") << '\n';
  if (cfg.integer_form) out << "  (sides scaled by m^(n+1))\n";
  out << "  lhs:       " << side(r.lhs) << '\n'
      << "  rhs:       " << side(r.rhs) << '\n'
      << "  remainder: " << side(r.remainder) << '\n'
      << "  cofactor:  " << side(r.cofactor) << '\n';
}

inline int run_eulerian(const CliConfig& cfg, std::ostream& out) {
  EulerianPoly a;
  if (cfg.method == "recurrence")
    a = eulerian_recurrence(cfg.n);
  else if (cfg.method == "bruteforce")
    a = eulerian_bruteforce(cfg.n);
  else
    a = eulerian_from_gf(cfg.n);

  if (cfg.format == Format::json)
    print_json(out, to_json(a, cfg.method));
  else
    out << render(a.poly, cfg.format) << '\n';
  return a.poly(1) == Rational(factorial(cfg.n)) ? kExitOk : kExitCheckFailed;
}

inline int run_verify(const CliConfig& cfg, std::ostream& out) {
  std::vector<std::pair<unsigned, unsigned>> cases;
  if (cfg.grid) {
    for (unsigned n = 0; n <= cfg.n_max; ++n)
      for (unsigned m = 1; m <= cfg.m_max; ++m) cases.emplace_back(n, m);
  } else {
    cases.emplace_back(cfg.n, cfg.m);
  }
  const auto reports =
      parallel_map(cases, cfg.parallel, [](const auto& nm) { return verify_congruence(nm.first, nm.second); });

  bool all = true;
  for (const auto& r : reports) all = all && r.holds;

  if (cfg.format == Format::json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    print_json(out, arr);
  } else {
    for (const auto& r : reports) print_congruence(out, r, cfg);
    out << reports.size() << " case(s), " << (all ? "all hold" : "FAILURES present") << '\n';
  }
  return all ? kExitOk : kExitCheckFailed;
}

inline int run_trace(const CliConfig& cfg, std::ostream& out) {
  const TraceReport t = full_trace(cfg.n, cfg.m);
  const CongruenceReport c = verify_congruence(cfg.n, cfg.m);
  const bool ok = t.all_checks && c.holds;

  if (cfg.format == Format::json) {
    print_json(out, to_json(t, c));
    return ok ? kExitOk : kExitCheckFailed;
  }
  const auto f = cfg.format;
  auto yes = [](bool b) { return b ? "yes" : "NO"; };
  out << "trace n=" << t.n << " m=" << t.m << '\n'
      << "  difference of kernels:  " << render(t.diff_value, f) << '\n'
      << "  series coefficient:     " << render(t.series_value, f) << '\n'
      << "  equal:                  " << yes(t.diff_matches_series) << '\n';
  for (const auto& rc : t.per_j) {
    out << "  j=" << rc.j << ": " << render(rc.value, f) << "  exponent=";
    if (rc.divisor_exponent)
      out << *rc.divisor_exponent;
    else
      out << "none";
    out << "  forms agree=" << yes(rc.forms_agree) << '\n';
  }
  out << "  telescopes:             " << yes(t.telescopes) << '\n'
      << "  denominator at t=1:     " << to_string(t.den_at_one) << '\n'
      << "  congruence holds:       " << yes(c.holds) << '\n'
      << (ok ? "all checks pass" : "CHECK FAILED") << '\n';
  return ok ? kExitOk : kExitCheckFailed;
}

inline void validate(const CliConfig& cfg) {
  auto check_n = [](unsigned n, const char* name) {
    if (n > kMaxN) throw UsageError(std::string(name) + " must be <= " + std::to_string(kMaxN));
  };
  auto check_m = [](unsigned m, const char* name) {
    if (m < 1 || m > kMaxM)
      throw UsageError(std::string(name) + " must be in [1, " + std::to_string(kMaxM) + "]");
  };
  if (cfg.command == "verify" && cfg.grid) {
    check_n(cfg.n_max, "--n-max");
    check_m(cfg.m_max, "--m-max");
  } else {
    check_n(cfg.n, "--n");
    if (cfg.command != "eulerian") check_m(cfg.m, "--m");
  }
  if (cfg.command == "eulerian" && cfg.method == "bruteforce" && cfg.n > kBruteforceCap)
    throw UsageError("--method bruteforce supports n <= " + std::to_string(kBruteforceCap));
  if (cfg.parallel < 1) throw UsageError("--parallel must be >= 1");
}

inline void add_format(CLI::App* sub, std::string& format) {
  sub->add_option("--format", format, "Output format: plain, latex or json")
      ->check(CLI::IsMember({"plain", "latex", "json"}));
}

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "latex") return Format::latex;
  return Format::plain;
}

}  // namespace detail

/// args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  std::string format = "plain";
  CLI::App app{"Eulerian polynomial congruence toolkit", "eulercong"};
  app.require_subcommand(1);

  auto* eul = app.add_subcommand("eulerian", "Print A_n(t)");
  eul->add_option("--n", cfg.n, "Index n")->required();
  eul->add_option("--method", cfg.method, "Construction")
      ->check(CLI::IsMember({"recurrence", "bruteforce", "gf"}));
  detail::add_format(eul, format);

  auto* ver = app.add_subcommand("verify", "Check the congruence for one (n, m) or a grid");
  auto* opt_n = ver->add_option("--n", cfg.n, "Index n");
  auto* opt_m = ver->add_option("--m", cfg.m, "Substitution power m");
  auto* opt_nmax = ver->add_option("--n-max", cfg.n_max, "Grid: 0 <= n <= n-max");
  auto* opt_mmax = ver->add_option("--m-max", cfg.m_max, "Grid: 1 <= m <= m-max");
  opt_n->needs(opt_m)->excludes(opt_nmax)->excludes(opt_mmax);
  opt_m->needs(opt_n);
  opt_nmax->needs(opt_mmax);
  opt_mmax->needs(opt_nmax);
  ver->add_option("--parallel", cfg.parallel, "Worker threads");
  ver->add_flag("--integer", cfg.integer_form, "Plain/LaTeX: print sides multiplied by m^(n+1)");
  detail::add_format(ver, format);

  auto* tr = app.add_subcommand("trace", "Replay the generating-function argument for one (n, m)");
  tr->add_option("--n", cfg.n, "Index n")->required();
  tr->add_option("--m", cfg.m, "Substitution power m")->required();
  detail::add_format(tr, format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (ver->parsed() && opt_n->count() == 0 && opt_nmax->count() == 0)
      throw UsageError("verify needs --n/--m or --n-max/--m-max");
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.grid = opt_nmax->count() > 0;
    cfg.format = detail::parse_format(format);
    detail::validate(cfg);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  if (cfg.command == "eulerian") return detail::run_eulerian(cfg, out);
  if (cfg.command == "verify") return detail::run_verify(cfg, out);
  return detail::run_trace(cfg, out);
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace eulercong::cli
