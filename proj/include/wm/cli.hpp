#pragma once

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wm/checks.hpp"
#include "wm/coxeter.hpp"
#include "wm/flags.hpp"
#include "wm/poly_io.hpp"
#include "wm/rothe.hpp"
#include "wm/statistics.hpp"

namespace wm::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string render(const MultiPoly& p, const std::string& format) {
  if (format == "json") return wm::to_json(p).dump() + "\n";
  if (format == "latex") return to_latex(p);
  return to_text(p) + "\n";
}

inline SignedPerm parse_perm(const std::string& text) {
  try {
    return SignedPerm::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--perm: ") + e.what());
  }
}

inline std::vector<std::uint32_t> parse_primes(const std::string& list) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw UsageError("--primes: bad entry '" + item + "'");
    }
    if (used != item.size() || !is_prime(static_cast<std::uint32_t>(v))) throw UsageError("--primes: '" + item + "' is not a prime");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  if (out.empty()) throw UsageError("--primes: empty list");
  return out;
}

inline std::string status_of(const CheckReport& r) {
  if (r.report_only) return r.passed ? "INFO" : "DIFF";
  return r.passed ? "PASS" : "FAIL";
}

}  // namespace detail

inline std::string check_list_help() {
  std::string s = "Checks:\n";
  for (const auto& c : check_registry()) s += "  " + c.name + ": " + c.description + "\n";
  return s;
}

/// Runs one command line (without the program name). Returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weyl-Mahonian polynomials: enumeration, recursions and finite-field flag checks", "wm"};
  app.require_subcommand(1);

  std::string family;
  unsigned d = 0;
  std::string method = "enum";
  bool euler = false;
  std::string format = "text";
  auto* mahonian = app.add_subcommand("mahonian", "print the (s-marked) Weyl-Mahonian polynomial");
  mahonian->add_option("--family", family, "A, BC or D")->required()->check(CLI::IsMember({"A", "BC", "D"}));
  mahonian->add_option("--d", d, "rank")->required()->check(CLI::Range(0U, 16U));
  mahonian->add_option("--method", method, "enum or recur")->check(CLI::IsMember({"enum", "recur"}));
  mahonian->add_flag("--euler", euler, "include s^beta");
  mahonian->add_option("--format", format, "json, latex or text")->check(CLI::IsMember({"json", "latex", "text"}));

  std::string check_name;
  bool all = false;
  unsigned max_d = 0;
  std::string primes;
  std::uint32_t trunc = kDefaultTruncation;
  bool json_out = false;
  auto* verify = app.add_subcommand("verify", "run identity checks and print a pass/fail table");
  verify->footer(check_list_help());
  auto* check_opt = verify->add_option("--check", check_name, "run only this check");
  verify->add_flag("--all", all, "run the full grid");
  auto* max_d_opt = verify->add_option("--max-d", max_d, "largest rank in the grid")->check(CLI::Range(0U, 8U));
  auto* primes_opt = verify->add_option("--primes", primes, "comma-separated primes for the typed-space checks (default 3,5)");
  verify->add_option("--trunc", trunc, "series truncation bound")->check(CLI::Range(0U, 40U));
  verify->add_flag("--json", json_out, "print reports as JSON");
  check_opt->excludes(verify->get_option("--all"));

  std::uint32_t prime = 0;
  bool alpha = false;
  std::string space_family;
  auto* flags = app.add_subcommand("flags", "print the weighted-flag series of a finite space");
  flags->add_option("--prime", prime, "field size")->required();
  flags->add_option("--family", space_family, "A, C, B or D")->required()->check(CLI::IsMember({"A", "C", "B", "D", "BC"}));
  flags->add_option("--d", d, "rank")->required()->check(CLI::Range(1U, 6U));
  flags->add_option("--trunc", trunc, "series truncation bound")->check(CLI::Range(0U, 40U));
  flags->add_flag("--alpha", alpha, "mark each weight by s");
  flags->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::string perm;
  std::string rothe_type;
  auto* rothe = app.add_subcommand("rothe", "print the Rothe diagram of a length-permutation");
  rothe->add_option("--perm", perm, "one-line notation, e.g. -5,3,-1,6,4,-2")->required();
  rothe->add_option("--type", rothe_type, "A, C, B or D")->required()->check(CLI::IsMember({"A", "C", "B", "D"}));
  rothe->add_option("--format", format, "text or latex")->check(CLI::IsMember({"text", "latex"}));

  auto* word = app.add_subcommand("word", "print the length and a greedy reduced word");
  word->add_option("--perm", perm, "one-line notation, e.g. -2,-3,1")->required();
  word->add_option("--family", family, "A, BC or D")->required()->check(CLI::IsMember({"A", "BC", "D"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (mahonian->parsed()) {
      const StatisticSpec spec{parse_family(family), euler};
      const auto m = method == "enum" ? mahonian_direct(spec, d) : mahonian_recursive(spec, d);
      out << detail::render(m, format);
      return kOk;
    }

    if (verify->parsed()) {
      VerifyOptions opts;
      opts.trunc = trunc;
      if (max_d_opt->count()) opts.max_d = max_d;
      if (primes_opt->count()) opts.typed_primes = detail::parse_primes(primes);
      auto grid = default_grid(opts);
      if (check_opt->count()) {
        find_check(check_name);  // rejects unknown names
        grid.erase(std::remove_if(grid.begin(), grid.end(), [&](const auto& e) { return e.first != check_name; }), grid.end());
      } else if (!all) {
        throw UsageError("verify: pass --check NAME or --all");
      }
      bool failed = false;
      nlohmann::json reports = nlohmann::json::array();
      std::size_t n_fail = 0;
      for (const auto& [name, params] : grid) {
        const auto r = run_identity_check(name, params);
        if (!r.passed && !r.report_only) {
          failed = true;
          ++n_fail;
        }
        if (json_out) {
          reports.push_back(r.to_json());
          continue;
        }
        out << detail::status_of(r) << "  " << std::left << std::setw(22) << name << " " << params.dump();
        if (!r.passed && r.discrepancy) out << "  [" << *r.discrepancy << "]";
        if (!r.note.empty() && (r.report_only || !r.passed)) out << "  (" << r.note << ")";
        out << "\n";
      }
      if (json_out) {
        out << reports.dump(2) << "\n";
      } else {
        out << grid.size() << " checks, " << n_fail << " failed\n";
      }
      return failed ? kCheckFailed : kOk;
    }

    if (flags->parsed()) {
      if (!is_prime(prime)) throw UsageError("--prime: " + std::to_string(prime) + " is not a prime");
      if ((space_family == "B" || space_family == "D") && prime == 2) throw UsageError("--prime: types B and D need an odd prime");
      const auto space = wm::detail::space_for(space_family, prime, d);
      out << detail::render(flag_series(space, trunc, alpha).to_poly(), format);
      return kOk;
    }

    if (rothe->parsed()) {
      const auto sigma = detail::parse_perm(perm);
      const RotheDiagram diagram(sigma, parse_rothe_type(rothe_type));
      out << (format == "latex" ? diagram.to_latex() : diagram.to_text());
      return kOk;
    }

    if (word->parsed()) {
      const auto sigma = detail::parse_perm(perm);
      const GroupFamily fam(parse_family(family), sigma.rank());
      if (!sigma.belongs_to(fam.tag)) throw UsageError("--perm: " + sigma.to_string() + " is not in family " + family);
      const auto w = greedy_reduced_word(sigma, fam);
      out << "length " << length(sigma, fam) << "\nword";
      for (unsigned g : w) out << " s" << g;
      out << "\n";
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace wm::cli
