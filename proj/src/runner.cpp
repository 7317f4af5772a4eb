#include "supercong/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <exception>
#include <memory>
#include <thread>

#include "supercong/congruences.hpp"
#include "supercong/cyclotomic.hpp"
#include "supercong/errors.hpp"
#include "supercong/identities.hpp"
#include "supercong/modarith.hpp"
#include "supercong/padic.hpp"

namespace supercong {

void RunConfig::validate() const {
  if (max_prime && *max_prime < 3) throw ConfigError("--max-prime must be at least 3");
  if (mod_power && (*mod_power < 1 || *mod_power > 5)) {
    throw ConfigError("--mod-power must lie in 1..5");
  }
  if (k && (*k < 1 || *k > kMaxGammaPrecision)) throw ConfigError("--k must lie in 1..5");
  if (jobs < 1) throw ConfigError("--jobs must be at least 1");
  for (unsigned n : n_list) {
    if (n == 0) throw ConfigError("--n entries must be positive");
  }
  for (std::uint64_t lam : lambdas) {
    if (lam == 0) throw ConfigError("--lambda entries must be positive");
  }
  if (max_n && *max_n == 0) throw ConfigError("--max-n must be positive");
}

std::vector<CheckReport> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<std::vector<CheckReport>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(std::max(jobs, 1u), tasks.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::vector<CheckReport> out;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    for (auto& row : results[i]) out.push_back(std::move(row));
  }
  return out;
}

namespace {

std::vector<std::uint64_t> odd_primes(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 3) return out;
  for (std::uint64_t p : primes_up_to(hi)) {
    if (p >= std::max<std::uint64_t>(lo, 3)) out.push_back(p);
  }
  return out;
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (const auto& x : v) {
    if (!out.empty()) out += ",";
    if constexpr (std::is_same_v<T, std::string>) {
      out += x;
    } else {
      out += std::to_string(x);
    }
  }
  return out;
}

std::vector<std::uint64_t> lambdas_for(const RunConfig& c, std::uint64_t p) {
  std::vector<std::uint64_t> out;
  if (c.lambdas.empty()) {
    for (std::uint64_t lam = 1; lam < p; ++lam) out.push_back(lam);
  } else {
    for (std::uint64_t lam : c.lambdas) {
      if (lam < p) out.push_back(lam);
    }
  }
  return out;
}

std::vector<unsigned> odd_only(const std::vector<unsigned>& ns) {
  std::vector<unsigned> out;
  for (unsigned n : ns) {
    if (n % 2 == 1) out.push_back(n);
  }
  return out;
}

void check_oracle_guard(const RunConfig& c, std::uint64_t max_prime) {
  if (max_prime > kOraclePrimeGuard && !c.force) {
    throw ConfigError("--max-prime " + std::to_string(max_prime) + " exceeds the oracle guard " +
                      std::to_string(kOraclePrimeGuard) + "; pass --force to override");
  }
}

std::uint64_t oracle_guard(const RunConfig& c, std::uint64_t max_prime) {
  return c.force ? std::max(max_prime, kOraclePrimeGuard) : kOraclePrimeGuard;
}

RunReport make_report(const std::string& sub, std::vector<std::pair<std::string, std::string>> cfg,
                      std::vector<CheckReport> checks) {
  RunReport r;
  r.subcommand = sub;
  r.config = std::move(cfg);
  r.checks = std::move(checks);
  return r;
}

}  // namespace

RunReport cmd_corollary(const RunConfig& c) {
  c.validate();
  const std::uint64_t max_prime = c.max_prime.value_or(kCorollaryDefaultMax);
  const std::vector<unsigned> ks =
      c.mod_power ? std::vector<unsigned>{*c.mod_power} : std::vector<unsigned>{3, 4};
  std::vector<Task> tasks;
  for (unsigned k : ks) {
    const auto primes = odd_primes(3, max_prime);
    // Chunks keep the task count modest for large scans.
    constexpr std::size_t kChunk = 32;
    for (std::size_t start = 0; start < primes.size(); start += kChunk) {
      const std::vector<std::uint64_t> chunk(
          primes.begin() + static_cast<std::ptrdiff_t>(start),
          primes.begin() + static_cast<std::ptrdiff_t>(std::min(primes.size(), start + kChunk)));
      tasks.push_back([chunk, k] {
        std::vector<CheckReport> rows;
        for (std::uint64_t p : chunk) rows.push_back(corollary_check(p, k));
        return rows;
      });
    }
  }
  return make_report("corollary", {{"max_prime", std::to_string(max_prime)}, {"mod_power", join(ks)}},
                     run_tasks(tasks, c.jobs));
}

RunReport cmd_theorem(const RunConfig& c) {
  c.validate();
  const std::uint64_t max_prime = c.max_prime.value_or(kTheoremDefaultMax);
  check_oracle_guard(c, max_prime);
  const std::vector<unsigned> ns = c.n_list.empty() ? std::vector<unsigned>{1, 2, 3, 4, 5} : c.n_list;
  const std::uint64_t guard = oracle_guard(c, max_prime);
  std::vector<Task> tasks;
  for (std::uint64_t p : odd_primes(3, max_prime)) {
    for (unsigned n : ns) {
      tasks.push_back([&c, p, n, guard] {
        std::vector<CheckReport> rows;
        const GreeneOracle oracle(p, guard);
        const std::vector<BigInt> values = oracle.values(n);
        std::unique_ptr<KernelTerms> kernels;
        if (n % 2 == 0) kernels = std::make_unique<KernelTerms>(GammaTable::build(RingDesc(p, 3)), n);
        for (std::uint64_t lam : lambdas_for(c, p)) {
          rows.push_back(theorem_check({p, n, lam}, values[lam - 1], kernels.get()));
        }
        return rows;
      });
    }
  }
  return make_report("theorem",
                     {{"max_prime", std::to_string(max_prime)},
                      {"n", join(ns)},
                      {"lambda", c.lambdas.empty() ? "all" : join(c.lambdas)},
                      {"force", c.force ? "true" : "false"}},
                     run_tasks(tasks, c.jobs));
}

namespace {

std::vector<CheckReport> nasty_rows(std::uint64_t p, const std::vector<unsigned>& ns,
                                    const std::vector<unsigned>& ks, const RunConfig& c,
                                    std::uint64_t guard) {
  std::vector<CheckReport> rows;
  const GreeneOracle oracle(p, guard);
  for (unsigned n : ns) {
    const std::vector<BigInt> values = oracle.values(n);
    for (unsigned k : ks) {
      const auto table = GammaTable::build(RingDesc(p, k));
      Sweep sweep("nasty");
      for (std::uint64_t lam : lambdas_for(c, p)) {
        CheckReport row = compare("nasty", Residue::from_big(-values[lam - 1], table->ring()),
                                  nasty_rhs(n, lam, *table));
        row.p = p;
        row.n = n;
        row.note = "lambda=" + std::to_string(lam);
        sweep.add(std::move(row));
      }
      rows.push_back(sweep.result(c.lambdas.empty() ? "all lambda in [1, p-1]" : "selected lambda"));
    }
  }
  return rows;
}

}  // namespace

RunReport cmd_lemmas(const RunConfig& c) {
  c.validate();
  const std::uint64_t max_prime = c.max_prime.value_or(kLemmasDefaultMax);
  const std::vector<unsigned> ns = c.n_list.empty() ? std::vector<unsigned>{1, 2, 3, 4} : c.n_list;
  const std::vector<unsigned> odd_ns = odd_only(c.n_list.empty() ? std::vector<unsigned>{1, 3} : c.n_list);
  const std::vector<unsigned> nasty_ks =
      c.k ? std::vector<unsigned>{*c.k} : std::vector<unsigned>{3, 4};
  const std::uint64_t har_cap = c.force ? max_prime : std::min(max_prime, kHarmonicLemmaCap);
  const std::uint64_t kernel_cap = c.force ? max_prime : std::min(max_prime, kKernelCap);
  const std::uint64_t special_cap = c.force ? max_prime : std::min(max_prime, kSpecialValueCap);
  const std::uint64_t guard = oracle_guard(c, max_prime);

  std::vector<Task> tasks;
  for (std::uint64_t p : odd_primes(3, max_prime)) {
    if (c.nasty) {
      if (p > kernel_cap) continue;
      tasks.push_back([p, odd_ns, nasty_ks, &c, guard] { return nasty_rows(p, odd_ns, nasty_ks, c, guard); });
      continue;
    }
    tasks.push_back([=, &c] {
      std::vector<CheckReport> rows;
      rows.push_back(verify_lemma_bc(p));
      rows.push_back(half_gamma_check(p));
      rows.push_back(xd_check(p));
      rows.push_back(yp_check(p));
      rows.push_back(d_forms_check(p));
      if (p <= har_cap) {
        std::shared_ptr<const GammaTable> table;
        if (p >= 7) table = GammaTable::build(RingDesc(p, 3));
        for (unsigned n : ns) {
          CheckReport har = table ? verify_lemma_har(*table, n) : verify_lemma_har(p, n);
          har.p = p;
          har.n = n;
          rows.push_back(std::move(har));
        }
        if (p >= 7) {
          for (unsigned n : ns) rows.push_back(yeah_check(p, n));
          for (unsigned n : odd_ns) rows.push_back(mandy_check(*table, n));
          if (p <= kernel_cap) {
            for (unsigned n : ns) {
              const KernelTerms kernels(table, n);
              rows.push_back(equal_check(kernels));
              if (n % 2 == 1) rows.push_back(assembly_check(kernels));
            }
          }
        }
      }
      if (p <= special_cap) rows.push_back(special_value_check(GreeneOracle(p, guard)));
      if (p <= kernel_cap) {
        for (auto& row : nasty_rows(p, odd_ns, nasty_ks, c, guard)) rows.push_back(std::move(row));
      }
      return rows;
    });
  }
  return make_report("lemmas",
                     {{"max_prime", std::to_string(max_prime)},
                      {"n", join(ns)},
                      {"k", join(nasty_ks)},
                      {"lambda", c.lambdas.empty() ? "all" : join(c.lambdas)},
                      {"nasty_only", c.nasty ? "true" : "false"},
                      {"force", c.force ? "true" : "false"}},
                     run_tasks(tasks, c.jobs));
}

RunReport cmd_identities(const RunConfig& c) {
  c.validate();
  const bool any_selection = !c.ids.empty() || !c.certs.empty();
  auto has_all = [](const std::vector<std::string>& v) {
    return std::find(v.begin(), v.end(), "all") != v.end();
  };
  const bool all_ids = !any_selection || has_all(c.ids);
  const bool all_certs = !any_selection || has_all(c.certs);

  std::vector<IdentityId> ids;
  std::vector<RecurrenceId> recs;
  bool solutions = false, combinations = false;
  if (all_ids) {
    ids = all_identities();
    recs = all_recurrences();
    solutions = combinations = true;
  } else {
    for (const auto& name : c.ids) {
      if (name == "SOLUTIONS") {
        solutions = true;
      } else if (name == "COMBINATIONS") {
        combinations = true;
      } else if (name.rfind("REC_", 0) == 0) {
        recs.push_back(recurrence_from_string(name));
      } else {
        ids.push_back(identity_from_string(name));
      }
    }
  }
  std::vector<CertificateId> certs;
  if (all_certs) {
    certs = all_certificates();
  } else {
    for (const auto& name : c.certs) certs.push_back(certificate_from_string(name));
  }

  auto bound = [&c](unsigned fallback) { return c.max_n.value_or(fallback); };
  std::vector<Task> tasks;
  std::vector<std::string> selected;
  for (IdentityId id : ids) {
    const bool half = id == IdentityId::SHALF_EVEN || id == IdentityId::SHALF_ODD;
    const unsigned n_max = bound(half ? kHalfSumDefaultMaxN : kIdentityDefaultMaxN);
    selected.push_back(to_string(id));
    tasks.push_back([id, n_max] { return std::vector<CheckReport>{verify_identity(id, n_max)}; });
  }
  if (combinations) {
    selected.push_back("COMBINATIONS");
    const unsigned n_max = bound(kIdentityDefaultMaxN);
    tasks.push_back([n_max] { return verify_combinations(n_max); });
  }
  for (RecurrenceId id : recs) {
    selected.push_back(to_string(id));
    const unsigned n_max = bound(kRecurrenceDefaultMaxN);
    tasks.push_back([id, n_max] { return verify_recurrence(id, n_max); });
  }
  if (solutions) {
    selected.push_back("SOLUTIONS");
    const unsigned n_max = bound(kSolutionDefaultMaxN);
    tasks.push_back([n_max] { return verify_solutions(n_max); });
  }
  std::vector<std::string> cert_names;
  for (CertificateId id : certs) {
    cert_names.push_back(to_string(id));
    const unsigned n_max = bound(kCertificateDefaultMaxN);
    tasks.push_back([id, n_max] { return verify_certificate(id, n_max); });
  }
  return make_report("identities",
                     {{"ids", selected.empty() ? "none" : join(selected)},
                      {"certs", cert_names.empty() ? "none" : join(cert_names)},
                      {"max_n", c.max_n ? std::to_string(*c.max_n) : "default"}},
                     run_tasks(tasks, c.jobs));
}

RunReport cmd_report(const RunConfig& c) {
  c.validate();
  RunReport out;
  out.subcommand = "report";
  for (auto* cmd : {&cmd_corollary, &cmd_theorem, &cmd_lemmas, &cmd_identities}) {
    RunReport part = cmd(c);
    for (auto& [key, value] : part.config) out.config.emplace_back(part.subcommand + "." + key, value);
    for (auto& row : part.checks) out.checks.push_back(std::move(row));
  }
  return out;
}

namespace {

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

RunReport run(const RunConfig& c) {
  const auto start = std::chrono::steady_clock::now();
  const std::string stamp = utc_now();
  RunReport r;
  if (c.subcommand == "corollary") {
    r = cmd_corollary(c);
  } else if (c.subcommand == "theorem") {
    r = cmd_theorem(c);
  } else if (c.subcommand == "lemmas") {
    r = cmd_lemmas(c);
  } else if (c.subcommand == "identities") {
    r = cmd_identities(c);
  } else if (c.subcommand == "report") {
    r = cmd_report(c);
  } else {
    throw ConfigError("unknown subcommand '" + c.subcommand + "'");
  }
  if (!c.no_timestamp) {
    r.timestamp = stamp;
    r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                    .count();
  }
  return r;
}

}  // namespace supercong
