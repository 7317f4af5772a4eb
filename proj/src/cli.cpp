#include "supercong/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "supercong/errors.hpp"
#include "supercong/report.hpp"
#include "supercong/runner.hpp"

namespace supercong {

namespace {

struct Options {
  RunConfig config;
  std::string lambda = "all";
  std::string format = "json";
  std::string out;
};

std::vector<std::uint64_t> parse_lambdas(const std::string& text) {
  std::vector<std::uint64_t> out;
  if (text == "all") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v == 0) {
      throw ConfigError("--lambda expects 'all' or a comma-separated list of positive integers");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("--lambda list is empty");
  return out;
}

void add_options(CLI::App* sub, Options& o) {
  RunConfig& c = o.config;
  sub->add_option("--max-prime", c.max_prime, "Largest prime scanned");
  sub->add_option("--mod-power", c.mod_power, "Single exponent k for the corollary scan (1..5)");
  sub->add_option("--n", c.n_list, "Comma-separated n values")->delimiter(',');
  sub->add_option("--lambda", o.lambda, "'all' or comma-separated lambda values");
  sub->add_option("--max-n", c.max_n, "Upper n for identities, recurrences and certificates");
  sub->add_option("--ids", c.ids, "Identity, recurrence, SOLUTIONS, COMBINATIONS ids or 'all'")
      ->delimiter(',');
  sub->add_option("--certs", c.certs, "Certificate ids or 'all'")->delimiter(',');
  sub->add_option("--jobs", c.jobs, "Worker threads");
  sub->add_option("--format", o.format, "json, csv or human");
  sub->add_flag("--force", c.force, "Lift the default prime guards");
  sub->add_flag("--no-timestamp", c.no_timestamp, "Omit timestamp and wall time");
  sub->add_flag("--nasty", c.nasty, "lemmas: run only the exact Gamma expansion");
  sub->add_option("--k", c.k, "lemmas: precision of the exact Gamma expansion");
  sub->add_option("--out", o.out, "Write the report to FILE instead of stdout");
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of binomial-harmonic supercongruences", "supercong"};
  app.set_version_flag("--version", SUPERCONG_VERSION);
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<std::string, std::string>> subs = {
      {"corollary", "Central-binomial corollary over all odd primes"},
      {"theorem", "Main congruence against the character-sum oracle"},
      {"lemmas", "p-adic Gamma lemmas, kernel forms and the exact expansion"},
      {"identities", "Harmonic sum identities, recurrences and certificates"},
      {"report", "Every family with its defaults"},
  };
  for (const auto& [name, help] : subs) add_options(app.add_subcommand(name, help), o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    o.config.subcommand = app.get_subcommands().front()->get_name();
    o.config.lambdas = parse_lambdas(o.lambda);
    const Format format = format_from_string(o.format);
    o.config.validate();
    const RunReport report = run(o.config);
    const std::string text = emit_report(report, format);
    if (o.out.empty()) {
      out << text;
      out.flush();
    } else {
      std::ofstream file(o.out, std::ios::binary);
      if (!file) throw ConfigError("cannot open '" + o.out + "' for writing");
      file << text;
    }
    return report.exit_code();
  } catch (const ConfigError& e) {
    err << "supercong: " << e.what() << "\n";
    return 2;
  } catch (const GuardExceeded& e) {
    err << "supercong: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "supercong: error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace supercong
