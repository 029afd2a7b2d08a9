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

#include "netbin/netted.hpp"

#include <random>
#include <stdexcept>

#include "netbin/nullspace.hpp"

namespace netbin {
namespace {

Integer twist_sign(SignTwist twist, long i, long j) {
  switch (twist) {
    case SignTwist::none: return 1;
    case SignTwist::row_col: return sign_power(i + j);
    case SignTwist::row: return sign_power(i - 1);
    case SignTwist::col: return sign_power(j - 1);
  }
  throw std::logic_error("twist_sign: unknown twist");
}

// Multiplying a(i,j) by s(i,j) rescales each term of the cell recurrence by
// the sign ratio between its cell and (i,j).
NettedParams<Integer> twist_params(const NettedParams<Integer>& p, SignTwist twist) {
  const Integer& a = p.alpha();
  const Integer& b = p.beta();
  const Integer& g = p.gamma();
  const Integer& d = p.delta();
  switch (twist) {
    case SignTwist::none: return p;
    case SignTwist::row_col: return {Integer(-a), b, Integer(-g), d};
    case SignTwist::row: return {Integer(-a), Integer(-b), g, d};
    case SignTwist::col: return {a, Integer(-b), Integer(-g), d};
  }
  throw std::logic_error("twist_params: unknown twist");
}

NettedParams<Integer> base_params(FamilyBase base, const Integer& m) {
  switch (base) {
    case FamilyBase::a1: return {1, 1, 0, 1};
    case FamilyBase::a2: return {1, 1, -1, 0};
    case FamilyBase::a3: return {0, 1, -1, 1};
    case FamilyBase::fib: return {1, m, -1, 0};
  }
  throw std::logic_error("base_params: unknown family");
}

std::string params_text(const NettedParams<Integer>& p) {
  return to_string(p.alpha()) + "," + to_string(p.beta()) + "," + to_string(p.gamma()) + "," + to_string(p.delta());
}

std::string cell(long i, long j) { return "i=" + std::to_string(i) + ",j=" + std::to_string(j); }

}  // namespace

FamilyKind parse_family(std::string_view name) {
  FamilyKind kind;
  const auto plus = name.find('+');
  const std::string_view base = name.substr(0, plus);
  if (base == "a1") kind.base = FamilyBase::a1;
  else if (base == "a2") kind.base = FamilyBase::a2;
  else if (base == "a3") kind.base = FamilyBase::a3;
  else if (base == "T") kind.base = FamilyBase::fib;
  else throw std::invalid_argument("unknown family: " + std::string(name));
  if (plus != std::string_view::npos) {
    const std::string_view twist = name.substr(plus + 1);
    if (twist == "ij") kind.twist = SignTwist::row_col;
    else if (twist == "i") kind.twist = SignTwist::row;
    else if (twist == "j") kind.twist = SignTwist::col;
    else throw std::invalid_argument("unknown sign twist: " + std::string(name));
  }
  return kind;
}

std::string to_string(const FamilyKind& kind) {
  std::string out;
  switch (kind.base) {
    case FamilyBase::a1: out = "a1"; break;
    case FamilyBase::a2: out = "a2"; break;
    case FamilyBase::a3: out = "a3"; break;
    case FamilyBase::fib: out = "T"; break;
  }
  switch (kind.twist) {
    case SignTwist::none: break;
    case SignTwist::row_col: out += "+ij"; break;
    case SignTwist::row: out += "+i"; break;
    case SignTwist::col: out += "+j"; break;
  }
  return out;
}

std::vector<FamilyKind> binomial_families() {
  std::vector<FamilyKind> out;
  for (auto base : {FamilyBase::a1, FamilyBase::a2, FamilyBase::a3})
    for (auto twist : {SignTwist::none, SignTwist::row_col, SignTwist::row, SignTwist::col})
      out.push_back({base, twist});
  return out;
}

std::pair<IntMatrix, NettedParams<Integer>> build_family(const FamilyKind& kind, long n, const Integer& m) {
  if (n < 1) throw std::invalid_argument("build_family: dimension must be at least 1");
  const auto sn = static_cast<std::size_t>(n);
  IntMatrix a(sn, sn, Integer(0));
  for (long i = 1; i <= n; ++i) {
    for (long j = 1; j <= n; ++j) {
      Integer v;
      switch (kind.base) {
        case FamilyBase::a1: v = binomial(i - 1, j - 1); break;
        case FamilyBase::a2: v = binomial(i - 1, n - j); break;
        case FamilyBase::a3: v = binomial(n - i, n - j); break;
        case FamilyBase::fib: {
          v = binomial(i - 1, n - j);
          if (sgn(v) != 0) v *= ipow(m, static_cast<unsigned long>(i + j - n - 1));
          break;
        }
      }
      a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = v * twist_sign(kind.twist, i, j);
    }
  }
  return {std::move(a), twist_params(base_params(kind.base, m), kind.twist)};
}

NettedParams<Integer> quoted_params(FamilyBase base) {
  switch (base) {
    case FamilyBase::a1: return {1, 1, 0, 1};
    case FamilyBase::a2: return {1, 1, -1, 0};
    case FamilyBase::a3: return {0, -1, 1, 1};
    case FamilyBase::fib: return {1, 1, -1, 0};
  }
  throw std::logic_error("quoted_params: unknown family");
}

Report check_quoted_params(FamilyBase base, long n_max) {
  Report rep(claims::kNettedFamilyParams);
  const FamilyKind kind{base, SignTwist::none};
  const auto quoted = quoted_params(base);
  rep.with("family", to_string(kind)).with("params", params_text(quoted)).with("n_max", std::to_string(n_max));
  for (long n = 2; n <= n_max; ++n) {
    const auto a = build_family(kind, n).first;
    for (std::size_t i = 1; i < a.rows(); ++i)
      for (std::size_t j = 1; j < a.cols(); ++j) {
        Integer lhs = quoted.delta() * a(i, j);
        Integer rhs = quoted.alpha() * a(i - 1, j) + quoted.beta() * a(i - 1, j - 1) + quoted.gamma() * a(i, j - 1);
        rep.check_lazy(lhs == rhs, [&] {
          return std::tuple{"n=" + std::to_string(n) + "," + cell(static_cast<long>(i) + 1, static_cast<long>(j) + 1),
                            to_string(lhs), to_string(rhs)};
        });
      }
  }
  rep.mark_discrepancy_documented();
  return rep;
}

IntMatrix Tableau::window() const {
  const auto sn = static_cast<std::size_t>(n);
  IntMatrix w(sn, sn, Integer(0));
  for (std::size_t i = 0; i < sn; ++i)
    for (std::size_t j = 0; j < sn; ++j) w(i, j) = entries(i + 1, j + 1);
  return w;
}

Tableau zero_bordered(const IntMatrix& a, const NettedParams<Integer>& params) {
  if (!a.is_square()) throw ShapeError("zero_bordered: matrix is not square");
  const std::size_t n = a.rows();
  Tableau t{static_cast<long>(n), IntMatrix(n + 2, n + 2, Integer(0)), params};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.entries(i + 1, j + 1) = a(i, j);
  return t;
}

IntMatrix tableau_system(const NettedParams<Integer>& p, long n) {
  if (n < 2) throw std::invalid_argument("tableau_system: dimension must be at least 2");
  const auto w = static_cast<std::size_t>(n + 2);
  const auto sn = static_cast<std::size_t>(n);
  const std::size_t equations = (sn + 1) * (sn + 1) + 2 * (sn - 1);
  IntMatrix sys(equations, w * w, Integer(0));
  auto var = [w](std::size_t i, std::size_t j) { return i * w + j; };
  std::size_t row = 0;
  for (std::size_t i = 1; i <= sn + 1; ++i)
    for (std::size_t j = 1; j <= sn + 1; ++j, ++row) {
      sys(row, var(i, j)) += p.delta();
      sys(row, var(i - 1, j)) -= p.alpha();
      sys(row, var(i - 1, j - 1)) -= p.beta();
      sys(row, var(i, j - 1)) -= p.gamma();
    }
  for (std::size_t i = 1; i + 1 <= sn; ++i, ++row) {
    sys(row, var(i, 0)) += p.beta();
    sys(row, var(i + 1, 0)) += p.gamma();
  }
  for (std::size_t i = 1; i + 1 <= sn; ++i, ++row) {
    sys(row, var(i + 1, sn + 1)) += p.delta();
    sys(row, var(i, sn + 1)) -= p.alpha();
  }
  return sys;
}

std::optional<Tableau> sample_tableau(const NettedParams<Integer>& params, long n, std::uint64_t seed) {
  const auto basis = nullspace_integer(tableau_system(params, n));
  if (basis.empty()) return std::nullopt;
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> coef(-10, 10);
  const auto w = static_cast<std::size_t>(n + 2);
  std::vector<Integer> v(w * w, Integer(0));
  bool any = false;
  while (!any) {
    std::fill(v.begin(), v.end(), Integer(0));
    for (const auto& b : basis) {
      const int c = coef(gen);
      if (c == 0) continue;
      any = true;
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += c * b[k];
    }
  }
  return Tableau{n, IntMatrix(w, w, std::move(v)), params};
}

Report boundary_check(const Tableau& t) {
  Report rep(claims::kNettedBoundary);
  rep.with("n", std::to_string(t.n)).with("params", params_text(t.params));
  const auto& p = t.params;
  const auto& a = t.entries;
  const auto last = static_cast<std::size_t>(t.n + 1);
  for (std::size_t i = 1; i + 1 <= static_cast<std::size_t>(t.n); ++i) {
    Integer left = p.beta() * a(i, 0) + p.gamma() * a(i + 1, 0);
    rep.check(sgn(left) == 0, "column 0:i=" + std::to_string(i), "0", to_string(left));
    Integer right = p.delta() * a(i + 1, last) - p.alpha() * a(i, last);
    rep.check(sgn(right) == 0, "column n+1:i=" + std::to_string(i), "0", to_string(right));
  }
  return rep;
}

Report recurrence_check(const Tableau& t) {
  Report rep(claims::kNettedTableau);
  rep.with("n", std::to_string(t.n)).with("params", params_text(t.params));
  const auto& p = t.params;
  const auto& a = t.entries;
  for (std::size_t i = 1; i < a.rows(); ++i)
    for (std::size_t j = 1; j < a.cols(); ++j) {
      Integer lhs = p.delta() * a(i, j);
      Integer rhs = p.alpha() * a(i - 1, j) + p.beta() * a(i - 1, j - 1) + p.gamma() * a(i, j - 1);
      rep.check_lazy(lhs == rhs, [&] {
        return std::tuple{cell(static_cast<long>(i), static_cast<long>(j)), to_string(lhs), to_string(rhs)};
      });
    }
  return rep;
}

Report verify_sampled_tableau(const NettedParams<Integer>& params, long n, std::uint64_t seed, long e_max) {
  Report rep(claims::kNettedTableau);
  rep.with("n", std::to_string(n)).with("params", params_text(params)).with("seed", std::to_string(seed));
  rep.with("e_max", std::to_string(e_max));
  const auto t = sample_tableau(params, n, seed);
  if (!t) {
    rep.mark_hypothesis_not_satisfied("nontrivial kernel", "kernel is {0}");
    return rep;
  }
  for (auto part : {boundary_check(*t), recurrence_check(*t), verify_power_netted(t->window(), params, e_max)}) {
    rep.checks += part.checks;
    rep.violations += part.violations;
    for (auto& w : part.witnesses) {
      if (rep.status == Status::pass) rep.status = Status::fail;
      if (rep.witnesses.size() < Report::kMaxWitnesses)
        rep.witnesses.push_back({part.claim_id + ":" + w.location, w.expected, w.actual});
    }
  }
  return rep;
}

}  // namespace netbin
