#include "supercong/padic.hpp"

#include <string>

#include "supercong/errors.hpp"
#include "supercong/harmonic.hpp"

namespace supercong {

PadicPoint PadicPoint::from_fraction(std::int64_t num, std::int64_t den, const RingDesc& ring) {
  Residue d(den, ring);
  if (!d.is_unit()) {
    throw NotInvertible("PadicPoint: denominator " + std::to_string(den) + " is divisible by p");
  }
  return PadicPoint(Residue(num, ring) * d.inverse());
}

std::uint64_t PadicPoint::x0() const noexcept {
  const std::uint64_t p = value_.ring().p();
  const std::uint64_t r = value_.value() % p;
  return r == 0 ? p : r;
}

GammaTable::GammaTable(const RingDesc& ring) : ring_(ring) {
  const std::uint64_t m = ring.modulus();
  const std::uint64_t p = ring.p();
  values_.resize(m);
  values_[0] = 1;
  for (std::uint64_t r = 0; r + 1 < m; ++r) {
    const std::uint64_t factor = (r % p != 0) ? r : 1;
    const std::uint64_t prod = detail::mul_mod(values_[r], factor, m);
    values_[r + 1] = prod == 0 ? 0 : m - prod;
  }
}

std::shared_ptr<const GammaTable> GammaTable::build(const RingDesc& ring, bool allow_above_ceiling) {
  if (ring.k() > kMaxGammaPrecision && !allow_above_ceiling) {
    throw PrecisionError("GammaTable: precision " + std::to_string(ring.k()) +
                         " exceeds the ceiling " + std::to_string(kMaxGammaPrecision));
  }
  return std::shared_ptr<const GammaTable>(new GammaTable(ring));
}

Residue GammaTable::at(std::uint64_t r) const {
  return Residue::from_u64(values_[r % ring_.modulus()], ring_);
}

Residue GammaTable::operator()(const PadicPoint& x) const {
  if (!(x.residue().ring() == ring_)) {
    throw PreconditionError("GammaTable: argument ring " + x.residue().ring().to_string() +
                            " differs from table ring " + ring_.to_string());
  }
  return at(x.residue().value());
}

Residue gamma_p(const PadicPoint& x, const GammaTable& table) { return table(x); }

bool reflection_check(const PadicPoint& x, const GammaTable& table) {
  const Residue lhs = table(x) * table(x.complement());
  return lhs == Residue(sign_pow(static_cast<long long>(x.x0())), table.ring());
}

namespace {

void require_precision(const GammaTable& table, unsigned k, const char* who) {
  if (table.ring().k() < k) {
    throw PrecisionError(std::string(who) + ": needs a Gamma table modulo p^" + std::to_string(k));
  }
}

void require_p7(std::uint64_t p, const char* who) {
  if (p < 7) throw PreconditionError(std::string(who) + ": G1/G2 extraction requires p >= 7");
}

// u/p^e as a residue modulo p^(3-e), provided p^e | u.
Residue divide_out(const Residue& u, unsigned e, const char* what) {
  const std::uint64_t p = u.ring().p();
  std::uint64_t pe = 1;
  for (unsigned i = 0; i < e; ++i) pe *= p;
  if (u.value() % pe != 0) {
    throw SingularSystem(std::string("g1_g2: ") + what + " is not divisible by p^" +
                         std::to_string(e));
  }
  return Residue::from_u64(u.value() / pe, u.ring().with_exponent(u.ring().k() - e));
}

}  // namespace

LogDerivatives g1_g2(const PadicPoint& x, const GammaTable& table) {
  require_precision(table, 3, "g1_g2");
  const std::uint64_t p = table.ring().p();
  require_p7(p, "g1_g2");
  const auto p_signed = static_cast<std::int64_t>(p);
  const Residue g0 = table(x).reduce_to(3);
  const Residue inv0 = g0.inverse();
  const Residue u = table(x + p_signed).reduce_to(3) * inv0 - 1;
  const Residue v = table(x + 2 * p_signed).reduce_to(3) * inv0 - 1;
  // u = p G1 + p^2/2 G2, v = 2p G1 + 2p^2 G2 (mod p^3)
  const Residue two_g1 = divide_out(u * 4 - v, 1, "4u - v");
  const Residue g2 = divide_out(v - u * 2, 2, "v - 2u");
  const Residue g1 = two_g1 * Residue(2, two_g1.ring()).inverse();
  return LogDerivatives{g1, g2};
}

KernelAB kernel_ab(unsigned n, std::uint64_t j, const GammaTable& table) {
  const RingDesc& ring = table.ring();
  const auto jj = static_cast<std::int64_t>(j);
  const LogDerivatives da = g1_g2(PadicPoint::from_fraction(1, 2, ring) + jj, table);
  const LogDerivatives db = g1_g2(PadicPoint::from_integer(1 + jj, ring), table);
  const RingDesc mod_p = ring.with_exponent(1);
  const Residue a = da.g1 - db.g1;
  const Residue g1a = da.g1.reduce_to(1);
  const Residue g1b = db.g1.reduce_to(1);
  const Residue half = Residue(2, mod_p).inverse();
  const auto n1 = static_cast<std::int64_t>(n) + 1;
  const auto nn = static_cast<std::int64_t>(n);
  Residue b = half * n1 * (da.g2 - db.g2);
  b += half * (n1 * nn) * g1a * g1a;
  b += half * (n1 * (nn + 2)) * g1b * g1b;
  b -= Residue(n1 * n1, mod_p) * g1a * g1b;
  return KernelAB{a, b};
}

CheckReport verify_lemma_bc(std::uint64_t p) {
  return verify_lemma_bc(*GammaTable::build(RingDesc(p, 2)));
}

CheckReport verify_lemma_bc(const GammaTable& table) {
  require_precision(table, 2, "verify_lemma_bc");
  const std::uint64_t p = table.ring().p();
  const RingDesc ring = table.ring().with_exponent(2);
  const std::uint64_t h = (p - 1) / 2;
  const int minus_phi = -legendre(-1, p);
  Sweep sweep("lemma_bc");
  for (std::uint64_t j = 1; j <= h; ++j) {
    const auto jj = static_cast<std::int64_t>(j);
    Residue lhs = binomial_mod(h + j, j, ring) * binomial_mod(h, j, ring) *
                  static_cast<std::int64_t>(minus_phi * sign_pow(jj));
    const Residue num = table(PadicPoint::from_fraction(1 + 2 * jj, 2, table.ring())).reduce_to(2);
    const Residue den = table.at(j + 1).reduce_to(2);
    const Residue rhs = (num * den.inverse()).pow(2);
    CheckReport row = compare("lemma_bc", lhs, rhs);
    row.p = p;
    row.note = "j=" + std::to_string(j);
    sweep.add(std::move(row));
  }
  return sweep.result("all 1<=j<=" + std::to_string(h));
}

CheckReport verify_lemma_har(std::uint64_t p, unsigned n) {
  if (p < 7) {
    CheckReport row = skipped("lemma_har", "G1/G2 extraction requires p >= 7");
    row.p = p;
    row.n = n;
    return row;
  }
  return verify_lemma_har(*GammaTable::build(RingDesc(p, 3)), n);
}

CheckReport verify_lemma_har(const GammaTable& table, unsigned n) {
  const std::uint64_t p = table.ring().p();
  if (p < 7) {
    CheckReport row = skipped("lemma_har", "G1/G2 extraction requires p >= 7");
    row.p = p;
    row.n = n;
    return row;
  }
  require_precision(table, 3, "verify_lemma_har");
  const RingDesc r2(p, 2);
  const RingDesc r1(p, 1);
  const std::uint64_t h = (p - 1) / 2;
  const ModHarmonicTable h1(1, p - 1, r2);
  const ModHarmonicTable h2(2, p - 1, r1);
  const auto n1 = static_cast<std::int64_t>(n) + 1;
  const Residue half = Residue(2, r1).inverse();
  Sweep sweep("lemma_har");
  for (std::uint64_t j = 0; j <= h; ++j) {
    const KernelAB ab = kernel_ab(n, j, table);
    const Residue d1 = h1[h + j] - h1[j];
    const Residue rhs_a = d1 + odd_square_sum(j, r2) * static_cast<std::int64_t>(2 * p);
    CheckReport row_a = compare("lemma_har", ab.a, rhs_a);
    row_a.p = p;
    row_a.n = n;
    row_a.note = "A(j), j=" + std::to_string(j);
    sweep.add(std::move(row_a));

    const Residue d1p = d1.reduce_to(1);
    const Residue rhs_b =
        half * (n1 * n1) * d1p * d1p - half * n1 * (h2[h + j] - h2[j]);
    CheckReport row_b = compare("lemma_har", ab.b, rhs_b);
    row_b.p = p;
    row_b.n = n;
    row_b.note = "B(n,j), j=" + std::to_string(j);
    sweep.add(std::move(row_b));
  }
  return sweep.result("A mod p^2 and B mod p for all 0<=j<=" + std::to_string(h));
}

CheckReport mandy_check(const GammaTable& table, unsigned n) {
  if (n % 2 == 0) throw EvenNUnsupported("mandy_check: n must be odd");
  require_precision(table, 2, "mandy_check");
  const std::uint64_t p = table.ring().p();
  const RingDesc ring(p, 2);
  const std::uint64_t h = (p - 1) / 2;
  const int minus_phi = -legendre(-1, p);
  const auto l = static_cast<std::int64_t>((n + 1) / 2);
  Sweep sweep("mandy");
  for (std::uint64_t j = 0; j <= h; ++j) {
    const auto jj = static_cast<std::int64_t>(j);
    const Residue bracket = binomial_mod(h + j, j, ring) * binomial_mod(h, j, ring) *
                            static_cast<std::int64_t>(minus_phi * sign_pow(jj));
    const Residue num = table(PadicPoint::from_fraction(1 + 2 * jj, 2, table.ring())).reduce_to(2);
    const Residue den = table.at(j + 1).reduce_to(2);
    const Residue rhs = (num * den.inverse()).pow(2 * l);
    CheckReport row = compare("mandy", bracket.pow(l), rhs);
    row.p = p;
    row.n = n;
    row.note = "j=" + std::to_string(j);
    sweep.add(std::move(row));
  }
  return sweep.result("all 0<=j<=" + std::to_string(h));
}

CheckReport half_gamma_check(std::uint64_t p) {
  const RingDesc ring(p, 2);
  const auto table = GammaTable::build(ring);
  const Residue g = (*table)(PadicPoint::from_fraction(1, 2, ring));
  CheckReport row = compare("half_gamma", g * g, Residue(-legendre(-1, p), ring));
  row.p = p;
  return row;
}

Residue nasty_rhs(unsigned n, std::uint64_t lam, std::uint64_t p, unsigned k) {
  if (k > kMaxGammaPrecision) {
    throw PrecisionError("nasty_rhs: precision " + std::to_string(k) + " exceeds the ceiling " +
                         std::to_string(kMaxGammaPrecision));
  }
  return nasty_rhs(n, lam, *GammaTable::build(RingDesc(p, k)));
}

Residue nasty_rhs(unsigned n, std::uint64_t lam, const GammaTable& table) {
  if (n == 0 || n % 2 == 0) {
    throw EvenNUnsupported("nasty_rhs: the expansion is only available for odd n");
  }
  const RingDesc& ring = table.ring();
  const std::uint64_t p = ring.p();
  if (lam == 0 || lam >= p) throw PreconditionError("nasty_rhs: lambda must lie in [1, p-1]");
  const auto pm1 = static_cast<std::int64_t>(p - 1);
  const auto e = static_cast<std::int64_t>(n + 1);
  // (-phi(-1))^((n+1)/2)
  const int minus_phi = -legendre(-1, p);
  const int prefactor = ((n + 1) / 2) % 2 == 0 ? 1 : minus_phi;

  const Residue w = teichmuller(static_cast<std::int64_t>(lam), p, ring.k());
  const PadicPoint half = PadicPoint::from_fraction(1, 2, ring);
  Residue first(0, ring), second(0, ring);
  Residue wj(1, ring);
  for (std::int64_t j = 0; j <= pm1 - 1; ++j) {
    const PadicPoint x = PadicPoint::from_fraction(j, pm1, ring);
    if (j <= (pm1 - 2) / 2) {
      first += (table(x) * table(x + half).inverse()).pow(e) * wj;
    } else if (j >= (pm1 + 2) / 2) {
      second += (table(x) * table(x - half).inverse()).pow(e) * wj;
    }
    wj *= w;
  }
  const Residue pp = Residue::from_u64(p, ring).pow(e);
  Residue inner = first + pp * second;
  Residue total = Residue(legendre(static_cast<std::int64_t>(lam), p), ring) + inner * prefactor;
  return total * (Residue(1, ring) - static_cast<std::int64_t>(p)).inverse();
}

}  // namespace supercong
