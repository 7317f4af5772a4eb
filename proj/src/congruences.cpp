#include "supercong/congruences.hpp"

#include <string>

#include "supercong/cyclotomic.hpp"
#include "supercong/errors.hpp"
#include "supercong/harmonic.hpp"

namespace supercong {

void CongruenceInput::validate() const {
  if (p == 2 || !is_prime(p)) {
    throw PreconditionError("p = " + std::to_string(p) + " must be an odd prime");
  }
  if (n == 0) throw PreconditionError("n must be positive");
  if (lam == 0 || lam >= p) {
    throw PreconditionError("lambda = " + std::to_string(lam) + " must lie in [1, p-1]");
  }
}

namespace {

std::int64_t as_signed(std::uint64_t v) { return static_cast<std::int64_t>(v); }

Residue lift(const Residue& r, const RingDesc& to) { return Residue::from_u64(r.value(), to); }

void require_odd(const CongruenceInput& in, const char* who) {
  if (!in.n_odd()) {
    throw EvenNUnsupported(std::string(who) +
                           ": the binomial form has a half-integer exponent for even n");
  }
}

// The shared weight C((p-1)/2+j, j)^l C((p-1)/2, j)^l (-1)^(jl).
Residue binomial_weight(const FactorialTable& f, std::uint64_t h, std::uint64_t j, unsigned l) {
  Residue w = f.binomial(h + j, j) * f.binomial(h, j);
  w = w.pow(l);
  if ((j * l) % 2 == 1) w = -w;
  return w;
}

}  // namespace

Residue X_eval(const CongruenceInput& in) {
  in.validate();
  require_odd(in, "X_eval");
  const RingDesc ring(in.p, 1);
  const std::uint64_t h = (in.p - 1) / 2;
  const unsigned l = (in.n + 1) / 2;
  const FactorialTable fact(in.p - 1, ring);
  const ModHarmonicTable h1(1, in.p - 1, ring);
  const ModHarmonicTable h2(2, in.p - 1, ring);
  const auto n1 = static_cast<std::int64_t>(in.n) + 1;
  const Residue lam_inv = Residue::from_u64(in.lam, ring).inverse();
  Residue sum(0, ring);
  Residue lam_pow(1, ring);
  for (std::uint64_t j = 0; j <= h; ++j) {
    const auto jj = as_signed(j);
    const Residue d1 = h1[h + j] - h1[j];
    const Residue d2 = h2[h + j] - h2[j];
    const Residue inner = Residue(1, ring) + d1 * (2 * n1 * jj) +
                          Residue(jj * jj, ring) * (d1 * d1 * as_signed(l) * n1 - d2 * as_signed(l));
    sum += binomial_weight(fact, h, j, l) * lam_pow * inner;
    lam_pow *= lam_inv;
  }
  return sum * legendre(as_signed(in.lam), in.p);
}

Residue Y_eval(const CongruenceInput& in) {
  in.validate();
  require_odd(in, "Y_eval");
  const RingDesc ring(in.p, 2);
  const std::uint64_t h = (in.p - 1) / 2;
  const unsigned l = (in.n + 1) / 2;
  const FactorialTable fact(in.p - 1, ring);
  const ModHarmonicTable h1(1, in.p - 1, ring);
  const auto n1 = static_cast<std::int64_t>(in.n) + 1;
  const Residue step = Residue::from_u64(in.lam, ring).pow(as_signed(in.p)).inverse();
  Residue sum(0, ring);
  Residue lam_pow(1, ring);
  for (std::uint64_t j = 0; j <= h; ++j) {
    const auto jj = as_signed(j);
    const Residue inner = Residue(1, ring) + (h1[h + j] - h1[j]) * (n1 * jj) -
                          (h1[h + j] - h1[h - j]) * (as_signed(l) * jj);
    sum += binomial_weight(fact, h, j, l) * lam_pow * inner;
    lam_pow *= step;
  }
  return sum * legendre(as_signed(in.lam), in.p);
}

Residue Z_eval(const CongruenceInput& in, unsigned k) {
  in.validate();
  const RingDesc ring(in.p, k);
  const std::uint64_t h = (in.p - 1) / 2;
  const FactorialTable fact(in.p - 1, ring);
  const auto e = static_cast<std::int64_t>(in.n) + 1;
  const Residue step = Residue(4, ring).pow(e).inverse() *
                       Residue::from_u64(in.lam, ring).pow(as_signed(in.p * in.p)).inverse();
  Residue sum(0, ring);
  Residue weight(1, ring);
  for (std::uint64_t j = 0; j <= h; ++j) {
    sum += fact.binomial(2 * j, j).pow(e) * weight;
    weight *= step;
  }
  return sum * legendre(as_signed(in.lam), in.p);
}

Residue D_eval(std::uint64_t p, std::uint64_t lam) {
  CongruenceInput{p, 1, lam}.validate();
  const RingDesc ring(p, 1);
  const Residue lam_inv = Residue::from_u64(lam, ring).inverse();
  const Residue half = Residue(2, ring).inverse();
  Residue sum(0, ring);
  Residue fact(1, ring);  // j!
  Residue prod(1, ring);  // prod_{i<=j} (i + 1/2)^2
  Residue lam_pow = lam_inv;
  // upper limit (p-5)/2; empty for p = 3
  for (std::int64_t j = 0; 2 * j + 5 <= as_signed(p); ++j) {
    if (j > 0) fact *= Residue(j, ring);
    const Residue term = Residue(2 * j + 1, ring) * half;
    prod *= term * term;
    sum += fact * fact * prod.inverse() * Residue((j + 1) * (j + 1), ring) * lam_pow;
    lam_pow *= lam_inv;
  }
  return sum;
}

Residue D_alt(std::uint64_t p) {
  CongruenceInput{p, 1, 1}.validate();
  const RingDesc ring(p, 1);
  const std::uint64_t h = (p - 1) / 2;
  const FactorialTable fact(p - 1, ring);
  Residue sum(0, ring);
  for (std::uint64_t j = 1; 2 * j + 3 <= p; ++j) {
    Residue term = (fact.binomial(h + j, j) * fact.binomial(h, j)).inverse();
    sum += (j % 2 == 1) ? -term : term;
  }
  return sum;
}

KernelTerms::KernelTerms(std::shared_ptr<const GammaTable> table, unsigned n)
    : table_(std::move(table)), n_(n), sign_(1), kappa_(0, RingDesc(table_->ring().p(), 3)) {
  const RingDesc& tring = table_->ring();
  if (tring.k() < 3) throw PrecisionError("KernelTerms: needs a Gamma table modulo p^3");
  if (n == 0) throw PreconditionError("KernelTerms: n must be positive");
  const std::uint64_t p = tring.p();
  const std::uint64_t h = (p - 1) / 2;
  const auto e = static_cast<std::int64_t>(n) + 1;
  const GammaTable& g = *table_;
  sign_ = (e % 2 == 0) ? 1 : -legendre(-1, p);

  const PadicPoint half = PadicPoint::from_fraction(1, 2, tring);
  kappa_ = (-g(half)).reduce_to(3).pow(-e);
  const Residue q = (Residue(1, tring) - as_signed(p)).inverse();
  for (std::uint64_t j = 1; j <= h; ++j) {
    const auto jj = as_signed(j);
    const Residue num = g(half + jj).reduce_to(3);
    const Residue den = g.at(j + 1).reduce_to(3);
    quotient_.push_back((num * den.inverse()).pow(e));
    const PadicPoint jq(q * jj);
    const Residue cnum = g(half + jq).reduce_to(3);
    const Residue cden = g(jq + 1).reduce_to(3);
    combined_.push_back((cnum * cden.inverse()).pow(e));
  }
  if (p >= 7) {
    for (std::uint64_t j = 1; j <= h; ++j) {
      const KernelAB ab = kernel_ab(n, j, g);
      a_.push_back(ab.a);
      b_.push_back(ab.b);
    }
  }
}

Residue KernelTerms::eval(KernelForm form, std::uint64_t lam) const {
  const std::uint64_t p = this->p();
  if (lam == 0 || lam >= p) throw PreconditionError("kernel: lambda must lie in [1, p-1]");
  const std::uint64_t h = (p - 1) / 2;
  const auto n1 = static_cast<std::int64_t>(n_) + 1;
  const RingDesc r3(p, 3);
  const Residue w_inv = teichmuller(as_signed(lam), p, 3).inverse();
  const int phi_lam = legendre(as_signed(lam), p);
  // omega^(h-j) = phi(lam) omega^-j
  std::vector<Residue> omega;
  omega.reserve(h);
  Residue wj = Residue(phi_lam, r3) * w_inv;
  for (std::uint64_t j = 1; j <= h; ++j) {
    omega.push_back(wj);
    wj *= w_inv;
  }
  switch (form) {
    case KernelForm::Coe1: {
      Residue sum(0, r3);
      for (std::uint64_t j = 1; j <= h; ++j) sum += quotient_[j - 1] * omega[j - 1];
      return Residue(phi_lam, r3) + kappa_ * sum;
    }
    case KernelForm::Combined: {
      Residue sum(0, r3);
      for (std::uint64_t j = 1; j <= h; ++j) sum += combined_[j - 1] * omega[j - 1];
      const Residue inv = (Residue(1, r3) - as_signed(p)).inverse();
      return (Residue(phi_lam, r3) + kappa_ * sum) * inv;
    }
    case KernelForm::Coep: {
      if (!has_ab()) throw PreconditionError("Coep kernel: G1/G2 extraction requires p >= 7");
      const RingDesc r2(p, 2);
      Residue sum(0, r2);
      for (std::uint64_t j = 1; j <= h; ++j) {
        const Residue factor = Residue(1, r2) + a_[j - 1] * (n1 * as_signed(j));
        sum += quotient_[j - 1].reduce_to(2) * factor * omega[j - 1].reduce_to(2);
      }
      return Residue(phi_lam, r2) + kappa_.reduce_to(2) * sum;
    }
    case KernelForm::Coep2: {
      if (!has_ab()) throw PreconditionError("Coep2 kernel: G1/G2 extraction requires p >= 7");
      const RingDesc r1(p, 1);
      Residue sum(0, r1);
      for (std::uint64_t j = 1; j <= h; ++j) {
        const auto jj = as_signed(j);
        const Residue factor = Residue(1, r1) + a_[j - 1].reduce_to(1) * (2 * n1 * jj) +
                               b_[j - 1] * (jj * jj);
        sum += quotient_[j - 1].reduce_to(1) * factor * omega[j - 1].reduce_to(1);
      }
      return Residue(phi_lam, r1) + kappa_.reduce_to(1) * sum;
    }
  }
  throw std::logic_error("unknown kernel form");
}

Residue kernel_eval(const CongruenceInput& in, KernelForm form) {
  in.validate();
  KernelTerms kt(GammaTable::build(RingDesc(in.p, 3)), in.n);
  return kt.eval(form, in.lam);
}

namespace {

Residue assemble(const Residue& c2, const Residue& c1, const Residue& c0) {
  const RingDesc& r3 = c0.ring();
  const auto p = as_signed(r3.p());
  return lift(c2, r3) * (p * p) + lift(c1, r3) * p + c0;
}

}  // namespace

Residue theorem_rhs(const CongruenceInput& in, const KernelTerms* kernels) {
  in.validate();
  if (in.n_odd()) {
    Residue x = X_eval(in);
    if (in.n == 1) x += D_eval(in.p, in.lam);
    return assemble(x, Y_eval(in), Z_eval(in, 3));
  }
  std::unique_ptr<KernelTerms> owned;
  if (kernels == nullptr) {
    owned = std::make_unique<KernelTerms>(GammaTable::build(RingDesc(in.p, 3)), in.n);
    kernels = owned.get();
  }
  if (kernels->p() != in.p || kernels->n() != in.n) {
    throw PreconditionError("theorem_rhs: kernel terms built for a different (p, n)");
  }
  Residue rhs = kernels->has_ab()
                    ? assemble(kernels->eval(KernelForm::Coep2, in.lam),
                               kernels->eval(KernelForm::Coep, in.lam),
                               kernels->eval(KernelForm::Coe1, in.lam))
                    : kernels->eval(KernelForm::Combined, in.lam);
  return rhs * kernels->sign();
}

CheckReport theorem_check(const CongruenceInput& in, const BigInt& oracle_value,
                          const KernelTerms* kernels) {
  const RingDesc r3(in.p, 3);
  const Residue lhs = Residue::from_big(-oracle_value, r3);
  CheckReport row = compare("theorem", lhs, theorem_rhs(in, kernels));
  row.p = in.p;
  row.n = in.n;
  row.lambda = std::to_string(in.lam);
  if (in.n_odd()) {
    row.note = in.n == 1 ? "binomial forms with D" : "binomial forms";
  } else {
    row.note = in.p >= 7 ? "kernel forms" : "undivided Gamma-quotient form";
  }
  return row;
}

CheckReport theorem_check(const CongruenceInput& in) {
  in.validate();
  return theorem_check(in, hypergeometric_int(in.n, in.lam, in.p), nullptr);
}

CheckReport special_value_check(const GreeneOracle& oracle) {
  const std::uint64_t p = oracle.p();
  CheckReport row = compare("special_value", BigRational(oracle.value(1, 1)),
                            BigRational(big_from_i64(-legendre(-1, p))));
  row.p = p;
  row.n = 1;
  row.lambda = "1";
  return row;
}

CheckReport yeah_check(std::uint64_t p, unsigned n) {
  const RingDesc ring(p, 2);
  const std::uint64_t h = (p - 1) / 2;
  const ModHarmonicTable h1(1, p - 1, ring);
  const auto n1 = static_cast<std::int64_t>(n) + 1;
  const Residue half_n1 = Residue(n1, ring) * Residue(2, ring).inverse();
  Sweep sweep("yeah");
  for (std::uint64_t j = 0; j <= h; ++j) {
    const auto jj = as_signed(j);
    const Residue lhs = half_n1 * jj * (h1[h + j] - h1[h - j]);
    const Residue rhs = odd_square_sum(j, ring) * (-2 * n1 * jj * as_signed(p));
    CheckReport row = compare("yeah", lhs, rhs);
    row.p = p;
    row.n = n;
    row.note = "j=" + std::to_string(j);
    sweep.add(std::move(row));
  }
  return sweep.result("all 0<=j<=" + std::to_string(h));
}

Residue corollary_lhs(std::uint64_t p, unsigned k) {
  const RingDesc ring(p, k);
  const std::uint64_t m = ring.modulus();
  const std::uint64_t h = (p - 1) / 2;
  const std::uint64_t inv16 = detail::inv_mod(16, m);
  std::uint64_t central = 1;  // C(2i, i)
  std::uint64_t weight = 1;   // 16^-i
  std::uint64_t first = 1;    // i = 0 term
  std::uint64_t second = 0;
  for (std::uint64_t i = 1; i <= h; ++i) {
    const std::uint64_t inv_i = detail::inv_mod(i, m);
    central = detail::mul_mod(detail::mul_mod(central, 2 * (2 * i - 1) % m, m), inv_i, m);
    weight = detail::mul_mod(weight, inv16, m);
    first = (first + detail::mul_mod(detail::mul_mod(central, central, m), weight, m)) % m;
    second = (second + detail::mul_mod(central, inv_i, m)) % m;
  }
  const Residue tail = Residue(3, ring) * Residue(8, ring).inverse() * as_signed(p) *
                       Residue::from_u64(second, ring) * sign_pow(as_signed(h));
  return Residue::from_u64(first, ring) + tail;
}

CheckReport corollary_check(std::uint64_t p, unsigned k) {
  const RingDesc ring(p, k);
  CheckReport row = compare("corollary", corollary_lhs(p, k), Residue(legendre(-1, p), ring));
  row.p = p;
  row.informational = k > 3;
  if (row.informational) row.note = "conjectured modulus";
  return row;
}

CheckReport xd_check(std::uint64_t p) {
  const RingDesc ring(p, 1);
  const Residue lhs = X_eval({p, 1, 1}) + D_eval(p, 1) + 1;
  CheckReport row = compare("xd", lhs, Residue(0, ring));
  row.p = p;
  return row;
}

CheckReport yp_check(std::uint64_t p) {
  const RingDesc ring(p, 2);
  const std::uint64_t h = (p - 1) / 2;
  const FactorialTable fact(p - 1, ring);
  Residue s(0, ring);
  for (std::uint64_t i = 1; i <= h; ++i) {
    s += fact.binomial(2 * i, i) * Residue::from_u64(i, ring).inverse();
  }
  const Residue rhs = Residue(as_signed(p), ring) +
                      Residue(3, ring) * Residue(8, ring).inverse() * s * sign_pow(as_signed(h));
  CheckReport row = compare("yp", Y_eval({p, 1, 1}), rhs);
  row.p = p;
  return row;
}

CheckReport d_forms_check(std::uint64_t p) {
  CheckReport row = compare("d_forms", D_eval(p, 1), D_alt(p));
  row.p = p;
  return row;
}

CheckReport assembly_check(const KernelTerms& kernels) {
  const std::uint64_t p = kernels.p();
  const unsigned n = kernels.n();
  if (n % 2 == 0) throw EvenNUnsupported("assembly_check: n must be odd");
  if (!kernels.has_ab()) {
    CheckReport row = skipped("assembly", "G1/G2 extraction requires p >= 7");
    row.p = p;
    row.n = n;
    return row;
  }
  Sweep sweep("assembly");
  for (std::uint64_t lam = 1; lam < p; ++lam) {
    const Residue lhs = assemble(kernels.eval(KernelForm::Coep2, lam),
                                 kernels.eval(KernelForm::Coep, lam),
                                 kernels.eval(KernelForm::Coe1, lam));
    const CongruenceInput in{p, n, lam};
    const Residue rhs = assemble(X_eval(in), Y_eval(in), Z_eval(in, 3)) * kernels.sign();
    CheckReport row = compare("assembly", lhs, rhs);
    row.p = p;
    row.n = n;
    row.note = "lambda=" + std::to_string(lam);
    sweep.add(std::move(row));
  }
  return sweep.result("all lambda in [1, p-1]");
}

CheckReport equal_check(const KernelTerms& kernels) {
  const std::uint64_t p = kernels.p();
  const unsigned n = kernels.n();
  Sweep sweep("equal");
  for (std::uint64_t lam = 1; lam < p; ++lam) {
    CheckReport row = compare("equal", kernels.eval(KernelForm::Coe1, lam), Z_eval({p, n, lam}, 3));
    row.p = p;
    row.n = n;
    row.note = "lambda=" + std::to_string(lam);
    sweep.add(std::move(row));
  }
  return sweep.result("all lambda in [1, p-1]");
}

}  // namespace supercong
