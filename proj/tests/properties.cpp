#include "properties.hpp"

#include "supercong/congruences.hpp"
#include "supercong/cyclotomic.hpp"
#include "supercong/modarith.hpp"
#include "supercong/padic.hpp"
#include "supercong/runner.hpp"

namespace supercong::props {

namespace {

std::vector<std::uint64_t> odd_primes(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : primes_up_to(hi)) {
    if (p >= lo && p > 2) out.push_back(p);
  }
  return out;
}

std::string at(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
  return "p=" + std::to_string(p) + " (" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

Outcome oracle_integrality(std::uint64_t max_p, unsigned max_n) {
  Outcome o;
  for (std::uint64_t p : odd_primes(3, max_p)) {
    const CharacterGroup g(p);
    std::vector<CycInt> jac;
    for (std::uint64_t t = 0; t + 1 < p; ++t) jac.push_back(g.jacobi_sum(g.quadratic(), g.character(t)));
    for (unsigned n = 1; n <= max_n; ++n) {
      for (std::uint64_t lam = 1; lam < p; ++lam) {
        CycInt sum = g.ring()->zero();
        for (std::uint64_t t = 0; t + 1 < p; ++t) {
          sum += jac[t].pow(n + 1) * g.value(g.conjugate(g.character(t)), static_cast<std::int64_t>(lam));
        }
        const bool integral = sum.is_rational() && sum.constant() % static_cast<long>(p - 1) == 0;
        o.expect(integral, at(p, n, lam));
      }
    }
  }
  return o;
}

Outcome oracle_agreement(std::uint64_t max_p, unsigned max_n) {
  Outcome o;
  for (std::uint64_t p : odd_primes(3, max_p)) {
    const GreeneOracle oracle(p);
    for (unsigned n = 1; n <= max_n; ++n) {
      const auto values = oracle.values(n);
      for (std::uint64_t lam = 1; lam < p; ++lam) {
        const BigRational def2 = hypergeometric_phi(oracle.group(), n, static_cast<std::int64_t>(lam));
        o.expect(def2 * BigRational(ipow(big_from_u64(p), n)) == BigRational(values[lam - 1]),
                 at(p, n, lam));
      }
    }
  }
  return o;
}

Outcome jacobi_magnitude(std::uint64_t max_p) {
  Outcome o;
  for (std::uint64_t p : odd_primes(3, max_p)) {
    const CharacterGroup g(p);
    for (std::uint64_t a = 1; a + 1 < p; ++a) {
      for (std::uint64_t b = 1; b + 1 < p; ++b) {
        if ((a + b) % (p - 1) == 0) continue;
        const CycInt j = g.jacobi_sum(g.character(a), g.character(b));
        o.expect(j * j.conjugate() == g.ring()->from_integer(big_from_u64(p)), at(p, a, b));
      }
    }
  }
  return o;
}

Outcome gamma_table_laws(std::uint64_t max_p, unsigned max_k) {
  Outcome o;
  for (std::uint64_t p : odd_primes(3, max_p)) {
    for (unsigned k = 1; k <= max_k; ++k) {
      const RingDesc r(p, k);
      const auto t = GammaTable::build(r);
      o.expect(t->at(0).value() == 1, at(p, k, 0));
      for (std::uint64_t x = 0; x < r.modulus(); ++x) {
        const Residue cur = t->at(x);
        const Residue next = t->at((x + 1) % r.modulus());
        const Residue ratio = x % p == 0 ? Residue(-1, r) : -Residue::from_u64(x, r);
        if (x + 1 < r.modulus()) o.expect(next == cur * ratio, at(p, k, x));
        o.expect(cur.is_unit(), at(p, k, x));
        o.expect(reflection_check(PadicPoint(Residue::from_u64(x, r)), *t), at(p, k, x));
      }
    }
  }
  return o;
}

Outcome half_gamma(std::uint64_t max_p) {
  Outcome o;
  for (std::uint64_t p : odd_primes(3, max_p)) {
    o.expect(half_gamma_check(p).status == Status::Pass, "p=" + std::to_string(p));
  }
  return o;
}

Outcome kernel_assembly(std::uint64_t max_p, const std::vector<unsigned>& odd_ns) {
  Outcome o;
  for (std::uint64_t p : odd_primes(7, max_p)) {
    const auto table = GammaTable::build(RingDesc(p, 3));
    for (unsigned n : odd_ns) {
      const CheckReport row = assembly_check(KernelTerms(table, n));
      o.expect(row.status == Status::Pass, "p=" + std::to_string(p) + " n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome report_determinism() {
  Outcome o;
  std::vector<RunConfig> configs;
  RunConfig lem;
  lem.subcommand = "lemmas";
  lem.max_prime = 31;
  configs.push_back(lem);
  RunConfig thm;
  thm.subcommand = "theorem";
  thm.max_prime = 13;
  configs.push_back(thm);
  RunConfig ids;
  ids.subcommand = "identities";
  ids.max_n = 12;
  configs.push_back(ids);
  for (RunConfig c : configs) {
    c.no_timestamp = true;
    for (Format f : {Format::Json, Format::Csv, Format::Human}) {
      c.jobs = 1;
      const std::string serial = emit_report(run(c), f);
      const std::string again = emit_report(run(c), f);
      c.jobs = 4;
      const std::string parallel = emit_report(run(c), f);
      o.expect(serial == again, c.subcommand + " repeat");
      o.expect(serial == parallel, c.subcommand + " jobs=4");
    }
  }
  return o;
}

}  // namespace supercong::props
