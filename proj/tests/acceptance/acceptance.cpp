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

// Acceptance runner. Prints one PASS/FAIL line per criterion. Criteria listed
// with --expect-red are known to fail; the exit status is zero only when the
// failing set is exactly that list.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "netbin/conjecture.hpp"
#include "netbin/fibmat.hpp"
#include "netbin/genfunc.hpp"
#include "netbin/modular.hpp"
#include "netbin/netted.hpp"

namespace {

using namespace netbin;

struct Outcome {
  bool ok = true;
  std::size_t checks = 0;
  std::string note;
  std::vector<std::string> problems;

  void absorb(const Report& r, bool allow_documented = false) {
    checks += r.checks;
    const bool fine = r.status == Status::pass || r.status == Status::hypothesis_not_satisfied ||
                      (allow_documented && r.status == Status::discrepancy_documented);
    if (fine) return;
    ok = false;
    std::ostringstream s;
    s << to_string(r.status) << ' ' << r.claim_id;
    for (const auto& [k, v] : r.params) s << ' ' << k << '=' << v;
    if (!r.witnesses.empty()) {
      const auto& w = r.witnesses.front();
      s << " at " << w.location << ": expected " << w.expected << ", got " << w.actual;
    }
    problems.push_back(s.str());
  }
  void require(bool cond, std::string what) {
    ++checks;
    if (!cond) {
      ok = false;
      problems.push_back(std::move(what));
    }
  }
};

const ZPoly kM = ZPoly::variable();

ZPoly zp(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return ZPoly(std::move(v));
}

Outcome printed_powers() {
  Outcome o;
  const ZPoly one = zp({1}), m = kM, m2 = zp({0, 0, 1});
  const ZPolyMatrix t1{{zp({}), zp({}), one}, {zp({}), one, m}, {one, zp({0, 2}), m2}};
  const ZPolyMatrix t2{{one, zp({0, 2}), m2},
                       {m, zp({1, 0, 2}), zp({0, 1, 0, 1})},
                       {m2, zp({0, 2, 0, 2}), zp({1, 0, 2, 0, 1})}};
  const ZPolyMatrix t3{{m2, zp({0, 2, 0, 2}), zp({1, 0, 2, 0, 1})},
                       {zp({0, 1, 0, 1}), zp({1, 0, 4, 0, 2}), zp({0, 2, 0, 3, 0, 1})},
                       {zp({1, 0, 2, 0, 1}), zp({0, 4, 0, 6, 0, 2}), zp({0, 0, 4, 0, 4, 0, 1})}};
  const auto t = build_T(FibSpec<ZPoly>(3, kM));
  o.require(t == t1, "T_3(m) differs from the printed matrix");
  o.require(mat_pow(t, 2) == t2, "T_3(m)^2 differs from the printed matrix");
  o.require(mat_pow(t, 3) == t3, "T_3(m)^3 differs from the printed matrix");
  return o;
}

Outcome netted_powers() {
  Outcome o;
  for (long n = 2; n <= 8; ++n) {
    for (const auto& kind : binomial_families()) {
      auto [a, params] = build_family(kind, n);
      o.absorb(verify_power_netted(a, params, 6).with("family", to_string(kind)));
    }
    for (long m = 1; m <= 3; ++m) {
      auto [a, params] = build_family({FamilyBase::fib, SignTwist::none}, n, Integer(m));
      o.absorb(verify_power_netted(a, params, 6).with("family", "T").with("m", std::to_string(m)));
    }
  }
  for (long m = 1; m <= 3; ++m) {
    const NettedParams<Integer> params(Integer(1), Integer(m), Integer(-1), Integer(0));
    o.absorb(check_coeff_recurrence(params, 50, ScalarForm::statement));
    const auto quads = coeff_sequences(params, 50);
    for (long e = 1; e <= 50; ++e) {
      const auto& q = quads[static_cast<std::size_t>(e - 1)];
      const Integer u = seq_u(Integer(m), e);
      o.require(q.alpha == u && q.beta == seq_u(Integer(m), e + 1) && q.gamma == -u && q.delta == seq_u(Integer(m), e - 1),
                "Fibonacci coefficient quad at m=" + std::to_string(m) + ", e=" + std::to_string(e));
    }
  }
  o.require(o.checks >= 5000, "fewer than 5000 cell checks");
  return o;
}

Outcome power_vector() {
  Outcome o;
  for (long n = 2; n <= 8; ++n)
    for (long m = 1; m <= 5; ++m) o.absorb(verify_power_vector(FibSpec<Integer>(n, Integer(m)), 6));
  for (long n = 2; n <= 5; ++n) o.absorb(verify_power_vector(FibSpec<ZPoly>(n, kM), 3));
  return o;
}

Outcome corollary_identities() {
  Outcome o;
  std::map<std::string, std::size_t> per_claim;
  // Identities 1 and 2 range over i only, so their grid runs to n = 8.
  for (long n = 2; n <= 8; ++n)
    for (long m = 1; m <= 3; ++m)
      for (const auto& r : verify_corollary_identities(FibSpec<Integer>(n, Integer(m)), 4, 4)) {
        if (n > 6 && r.claim_id != claims::kFibIdentity1 && r.claim_id != claims::kFibIdentity2) continue;
        o.absorb(r);
        per_claim[r.claim_id] += r.checks;
      }
  std::ostringstream note;
  for (const auto& [id, count] : per_claim) {
    o.require(count >= 100, id + " has fewer than 100 tuples");
    note << id << '=' << count << ' ';
  }
  o.note = note.str();
  if (!o.note.empty()) o.note.pop_back();
  return o;
}

Outcome closed_forms() {
  Outcome o;
  for (long n = 2; n <= 8; ++n)
    for (long m = 1; m <= 3; ++m) o.absorb(verify_closed_forms(FibSpec<Integer>(n, Integer(m)), 5));
  return o;
}

Outcome inverse() {
  Outcome o;
  for (long n = 1; n <= 8; ++n) o.absorb(verify_inverse(FibSpec<ZPoly>(n, kM)));
  for (long n = 1; n <= 12; ++n)
    for (long m = 1; m <= 5; ++m) o.absorb(verify_inverse(FibSpec<Integer>(n, Integer(m))));
  return o;
}

Outcome generating_function() {
  Outcome o;
  std::size_t inversions = 0;
  for (long n = 2; n <= 6; ++n)
    for (long m = 1; m <= 3; ++m)
      for (long e = 1; e <= 4; ++e) {
        const FibSpec<Integer> s(n, Integer(m));
        o.absorb(verify_genfunc(s, e));
        if (e >= 2) {
          const auto inv = verify_genfunc_inversion(s, e);
          o.require(inv.status == Status::pass, "inversion not exact at n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                                                    ", e=" + std::to_string(e));
          o.absorb(inv);
          ++inversions;
        }
      }
  for (long n = 2; n <= 3; ++n)
    for (long e = 1; e <= 4; ++e) {
      o.absorb(verify_genfunc(FibSpec<ZPoly>(n, kM), e));
      if (e >= 2) {
        o.absorb(verify_genfunc_inversion(FibSpec<ZPoly>(n, kM), e));
        ++inversions;
      }
    }
  o.note = "inversions=" + std::to_string(inversions);
  return o;
}

Outcome congruences() {
  Outcome o;
  const std::uint64_t primes[] = {3, 5, 7, 11, 13, 29};
  std::size_t documented = 0, root_checked = 0;
  for (auto p : primes)
    for (long m = 1; m <= 3; ++m)
      for (long n = 2; n <= 8; ++n) {
        for (const auto& r : verify_entry_point_theorem(n, Integer(m), p)) {
          o.absorb(r, r.claim_id == claims::kModDoubleOddPrinted);
          if (r.status == Status::discrepancy_documented) ++documented;
        }
        for (const auto& r : verify_up_theorems(n, Integer(m), p)) o.absorb(r);
        for (const auto& r : verify_root_theorem(n, Integer(m), p)) {
          o.absorb(r);
          if (r.claim_id == claims::kModRoot && r.status == Status::pass) ++root_checked;
        }
      }

  // Worked values.
  const auto scalar = [](long n, long m, std::uint64_t e, std::uint64_t p) {
    return scalar_value(mat_pow_mod(build_T(FibSpec<Integer>(n, Integer(m))), e, p));
  };
  const auto s10 = scalar(2, 1, 10, 11);
  o.require(s10 && s10->value() == 1, "m=1, p=11: T^10 is not I");
  const auto s8even = scalar(2, 1, 8, 7);
  o.require(s8even && s8even->value() == 6, "m=1, p=7: T_2^8 is not -I");
  const auto s8odd = scalar(3, 1, 8, 7);
  o.require(s8odd && s8odd->value() == 1, "m=1, p=7: T_3^8 is not I");

  bool witness_seen = false;
  for (const auto& r : verify_entry_point_theorem(2, Integer(1), 5)) {
    if (r.claim_id == claims::kModDoubleOddPrinted) {
      witness_seen = r.status == Status::discrepancy_documented && !r.witnesses.empty() &&
                     r.witnesses.front().expected == "3*I" && r.witnesses.front().actual == "4*I";
    }
    if (r.claim_id == claims::kModDoubleOddDerived) o.require(r.passed(), "derived T^(2e) form fails at n=2, m=1, p=5");
  }
  o.require(witness_seen, "documented witness at n=2, m=1, p=5 missing");
  o.note = "documented=" + std::to_string(documented) + " root_cases=" + std::to_string(root_checked);
  return o;
}

Outcome conjecture() {
  Outcome o;
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  for (long n = 1; n <= 20; ++n) {
    const auto r = verify_conjecture(FibSpec<ZPoly>(n, kM));
    o.absorb(r.to_report());
  }
  double upto60 = 0;
  for (long n = 1; n <= 100; ++n) {
    for (long m = 1; m <= 3; ++m) o.absorb(verify_conjecture(FibSpec<Integer>(n, Integer(m))).to_report());
    if (n == 60) upto60 = std::chrono::duration<double>(clock::now() - start).count();
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "through_n60=%.1fs", upto60);
  o.note = buf;
  o.require(upto60 < 120.0, "n <= 60 took longer than 2 minutes");
  return o;
}

Outcome tableaux() {
  Outcome o;
  const std::vector<NettedParams<Integer>> sets = {
      {Integer(1), Integer(1), Integer(0), Integer(1)},  {Integer(1), Integer(1), Integer(-1), Integer(0)},
      {Integer(0), Integer(1), Integer(-1), Integer(1)}, {Integer(1), Integer(2), Integer(-1), Integer(0)},
      {Integer(2), Integer(3), Integer(-1), Integer(5)}};
  std::size_t sampled = 0, nontrivial = 0;
  for (const auto& params : sets)
    for (std::uint64_t s = 0; s < 10; ++s) {
      const long n = 2 + static_cast<long>(s % 5);
      ++sampled;
      const auto r = verify_sampled_tableau(params, n, 1000 + s, 3);
      if (r.status != Status::hypothesis_not_satisfied) ++nontrivial;
      o.absorb(r);
    }
  o.note = "sampled=" + std::to_string(sampled) + " nontrivial=" + std::to_string(nontrivial);
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expect_red, only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if ((arg == "--expect-red" || arg == "--only") && i + 1 < argc) {
      std::stringstream list(argv[++i]);
      std::string item;
      while (std::getline(list, item, ',')) (arg == "--only" ? only : expect_red).insert(std::stoi(item));
    } else {
      std::cerr << "usage: netbin_acceptance [--expect-red N,...] [--only N,...]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "printed powers of T_3(m)", 1, printed_powers},
      {2, "netted powers of binomial families and T_n(m)", 30, netted_powers},
      {3, "power times index vector", 30, power_vector},
      {4, "summation identities", 30, corollary_identities},
      {5, "closed-form entries", 30, closed_forms},
      {6, "inverse of T_n(m)", 10, inverse},
      {7, "generating function of powers", 30, generating_function},
      {8, "congruences modulo primes", 60, congruences},
      {9, "characteristic polynomial conjecture", 900, conjecture},
      {10, "sampled tableaux", 30, tableaux},
  };

  std::set<int> red;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o.ok = false;
      o.problems.push_back(std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) o.problems.push_back("over time budget of " + std::to_string(c.budget_seconds) + "s");
    const bool pass = o.ok && secs <= c.budget_seconds;
    if (!pass) red.insert(c.id);
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (pass ? "PASS" : "FAIL") << ' ' << c.id << ' ' << c.name << " checks=" << o.checks << " time=" << timing;
    if (!o.note.empty()) std::cout << ' ' << o.note;
    if (!pass && expect_red.count(c.id)) std::cout << " (expected)";
    std::cout << '\n';
    const std::size_t shown = std::min<std::size_t>(o.problems.size(), 8);
    for (std::size_t k = 0; k < shown; ++k) std::cout << "    " << o.problems[k] << '\n';
    if (o.problems.size() > shown) std::cout << "    ... " << o.problems.size() - shown << " more\n";
    std::cout.flush();
  }

  std::set<int> expected = expect_red;
  if (!only.empty())
    for (auto it = expected.begin(); it != expected.end();) it = only.count(*it) ? std::next(it) : expected.erase(it);
  const bool as_expected = red == expected;
  std::cout << (as_expected ? "acceptance: failing set matches expectation" : "acceptance: unexpected result") << '\n';
  return as_expected ? EXIT_SUCCESS : EXIT_FAILURE;
}
