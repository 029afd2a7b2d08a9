// Copyright 2026 The netbin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netbin/modular.hpp"

#include <stdexcept>
#include <string>

#include "netbin/claims.hpp"
#include "netbin/fibmat.hpp"
#include "netbin/sequences.hpp"

namespace netbin {
namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

ModInt u_mod(const Integer& m, long e, std::uint64_t p) { return seq_u(ModInt(m, p), e); }

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= v; ++q) {
    if (v % q != 0) continue;
    out.push_back(q);
    while (v % q == 0) v /= q;
  }
  if (v > 1) out.push_back(v);
  return out;
}

ModMatrix t_power(long n, const Integer& m, std::uint64_t e, std::uint64_t p) {
  return mat_pow_mod(build_T(FibSpec<Integer>(n, m)), e, p);
}

bool is_identity(const ModMatrix& a) {
  const auto s = scalar_value(a);
  return s && s->value() == 1 % a(0, 0).modulus();
}

std::string scalar_text(const std::optional<ModInt>& s) { return s ? to_string(*s) + "*I" : "not scalar"; }

Report base_report(std::string_view id, long n, const ModularContext& ctx) {
  Report rep(id);
  rep.with("n", std::to_string(n)).with("m", to_string(ctx.m)).with("p", std::to_string(ctx.p));
  rep.with("entry", std::to_string(ctx.entry));
  rep.with("p_divides_D", ctx.p_divides_discriminant() ? "yes" : "no");
  return rep;
}

// Compares T^k against c I.
void check_scalar(Report& rep, const ModMatrix& power, const ModInt& want, const std::string& what) {
  const auto got = scalar_value(power);
  rep.check(got && *got == want, what, to_string(want) + "*I", scalar_text(got));
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

std::uint64_t entry_point(const Integer& m, std::uint64_t p) {
  require_prime(p);
  ModInt prev(0, p);
  ModInt cur(1, p);
  const ModInt mm(m, p);
  for (std::uint64_t e = 1;; ++e) {
    ModInt next = mm * cur + prev;
    prev = cur;
    cur = next;
    if (prev.is_zero()) return e;
  }
}

std::uint64_t pair_period(const Integer& m, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("pair_period: modulus must be at least 2");
  const ModInt mm(m, p);
  ModInt a(0, p);
  ModInt b(1, p);
  for (std::uint64_t t = 1;; ++t) {
    ModInt next = mm * b + a;
    a = b;
    b = next;
    if (a.is_zero() && b.value() == 1 % p) return t;
  }
}

bool ModularContext::p_divides_discriminant() const {
  return mpz_divisible_ui_p(discriminant.get_mpz_t(), p) != 0;
}

ModularContext make_context(const Integer& m, std::uint64_t p) {
  ModularContext ctx;
  ctx.m = m;
  ctx.p = p;
  ctx.entry = entry_point(m, p);
  ctx.discriminant = m * m + 4;
  if (p != 2 && ctx.entry % 2 == 1) {
    const long half = static_cast<long>(ctx.entry / 2);
    ctx.r = u_mod(m, half + 1, p) * u_mod(m, half, p).inverse();
  }
  return ctx;
}

ModMatrix mat_pow_mod(const IntMatrix& a, std::uint64_t e, std::uint64_t p) {
  return mat_pow(reduce_mod(a, p), e);
}

std::optional<ModInt> scalar_value(const ModMatrix& a) {
  if (!a.is_square()) return std::nullopt;
  const ModInt c = a(0, 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == (i == j ? c : ModInt(0, c.modulus())))) return std::nullopt;
  return c;
}

std::vector<Report> verify_entry_point_theorem(long n, const Integer& m, std::uint64_t p) {
  if (n < 1) throw std::invalid_argument("verify_entry_point_theorem: n must be at least 1");
  const auto ctx = make_context(m, p);
  const auto e = ctx.entry;
  const long le = static_cast<long>(e);
  const ModInt u_prev = u_mod(m, le - 1, p);
  const ModInt one(1, p);
  const ModMatrix te = t_power(n, m, e, p);
  const ModMatrix t2e = mat_mul(te, te);
  const ModMatrix t4e = mat_mul(t2e, t2e);

  Report scalar = base_report(claims::kModEntryScalar, n, ctx);
  check_scalar(scalar, te, u_prev.pow(static_cast<std::uint64_t>(n - 1)), "T^e");

  Report parity = base_report(claims::kModEntryParity, n, ctx);
  {
    const long k = n / 2;
    ModInt want = n % 2 == 0 ? ModInt(Integer(sign_power((k + 1) * le)), p) * u_prev : ModInt(Integer(sign_power(k * le)), p);
    check_scalar(parity, te, want, n % 2 == 0 ? "T^e, n=2k" : "T^e, n=2k+1");
  }

  Report fourfold = base_report(claims::kModFourfold, n, ctx);
  check_scalar(fourfold, t4e, one, "T^(4e)");

  Report even = base_report(claims::kModDoubleEven, n, ctx);
  if (e % 2 == 0) check_scalar(even, t2e, one, "T^(2e)");
  else even.mark_hypothesis_not_satisfied("e even", "e=" + std::to_string(e));

  Report printed = base_report(claims::kModDoubleOddPrinted, n, ctx);
  Report derived = base_report(claims::kModDoubleOddDerived, n, ctx);
  if (e % 2 == 0) {
    printed.mark_hypothesis_not_satisfied("e odd", "e=" + std::to_string(e));
    derived.mark_hypothesis_not_satisfied("e odd", "e=" + std::to_string(e));
  } else if (!ctx.r) {
    printed.mark_hypothesis_not_satisfied("p odd", "p=" + std::to_string(p));
    derived.mark_hypothesis_not_satisfied("p odd", "p=" + std::to_string(p));
  } else {
    const ModInt r = *ctx.r;
    printed.with("r", to_string(r));
    derived.with("r", to_string(r));
    const ModInt base = e % 4 == 3 ? r : -r;
    check_scalar(printed, t2e, base.pow(static_cast<std::uint64_t>(n - 1)),
                 e % 4 == 3 ? "T^(2e), e=3 mod 4" : "T^(2e), e=1 mod 4");
    printed.mark_discrepancy_documented();
    check_scalar(derived, t2e, ModInt(Integer(sign_power(le * (n - 1))), p), "T^(2e)");
    const ModInt r2 = r * r;
    derived.check(r2 == -one, "r^2", to_string(-one), to_string(r2));
  }
  return {std::move(scalar), std::move(parity), std::move(fourfold), std::move(even), std::move(printed),
          std::move(derived)};
}

std::vector<Report> verify_up_theorems(long n, const Integer& m, std::uint64_t p) {
  const auto ctx = make_context(m, p);
  const ModInt one(1, p);
  const long lp = static_cast<long>(p);

  Report minus = base_report(claims::kModUpMinus, n, ctx);
  const ModInt u_minus = u_mod(m, lp - 1, p);
  if (u_minus.is_zero()) check_scalar(minus, t_power(n, m, p - 1, p), one, "T^(p-1)");
  else minus.mark_hypothesis_not_satisfied("p | U_{p-1}", "U_{p-1} mod p = " + to_string(u_minus));

  Report plus = base_report(claims::kModUpPlus, n, ctx);
  const ModInt u_plus = u_mod(m, lp + 1, p);
  if (u_plus.is_zero()) check_scalar(plus, t_power(n, m, p + 1, p), n % 2 == 1 ? one : -one, "T^(p+1)");
  else plus.mark_hypothesis_not_satisfied("p | U_{p+1}", "U_{p+1} mod p = " + to_string(u_plus));

  return {std::move(minus), std::move(plus)};
}

std::vector<Report> verify_root_theorem(long n, const Integer& m, std::uint64_t p) {
  const auto ctx = make_context(m, p);
  Report period = base_report(claims::kModPeriod, n, ctx);
  Report root = base_report(claims::kModRoot, n, ctx);

  std::optional<std::uint64_t> x;
  const ModInt mm(m, p);
  for (std::uint64_t c = 0; c < p && !x; ++c) {
    const ModInt v(c, p);
    if ((v * v - mm * v - ModInt(1, p)).is_zero()) x = c;
  }
  if (!x || ctx.p_divides_discriminant()) {
    const std::string observed = !x ? "no root of x^2-m*x-1 mod p" : "p divides m^2+4";
    for (auto* r : {&period, &root}) r->mark_hypothesis_not_satisfied("root of x^2-m*x-1 and gcd(p, m^2+4) = 1", observed);
    return {std::move(period), std::move(root)};
  }
  period.with("root", std::to_string(*x));
  root.with("root", std::to_string(*x));

  const std::uint64_t t = pair_period(m, p);
  period.with("period", std::to_string(t));
  period.check((p - 1) % t == 0, "period | p-1", std::to_string(p - 1), std::to_string(t));
  period.check(t % ctx.entry == 0, "entry | period", std::to_string(ctx.entry), std::to_string(t));

  check_scalar(root, t_power(n, m, p - 1, p), ModInt(1, p), "T^(p-1)");
  return {std::move(period), std::move(root)};
}

std::uint64_t order_mod_p(long n, const Integer& m, std::uint64_t p) {
  const std::uint64_t bound = 4 * entry_point(m, p);
  const IntMatrix t = build_T(FibSpec<Integer>(n, m));
  std::uint64_t order = bound;
  for (std::uint64_t q : prime_factors(bound))
    while (order % q == 0 && is_identity(mat_pow_mod(t, order / q, p))) order /= q;
  return order;
}

Report verify_order(long n, const Integer& m, std::uint64_t p) {
  const auto ctx = make_context(m, p);
  Report rep = base_report(claims::kModOrder, n, ctx);
  const std::uint64_t order = order_mod_p(n, m, p);
  rep.with("order", std::to_string(order));
  const IntMatrix t = build_T(FibSpec<Integer>(n, m));
  rep.check(is_identity(mat_pow_mod(t, order, p)), "T^order", "I", "not I");
  rep.check((4 * ctx.entry) % order == 0, "order | 4e", std::to_string(4 * ctx.entry), std::to_string(order));
  for (std::uint64_t q : prime_factors(order))
    rep.check(!is_identity(mat_pow_mod(t, order / q, p)), "T^(order/" + std::to_string(q) + ")", "not I", "I");
  return rep;
}

}  // namespace netbin
