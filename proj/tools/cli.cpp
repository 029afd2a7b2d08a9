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

#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "netbin/claims.hpp"
#include "netbin/conjecture.hpp"
#include "netbin/fibmat.hpp"
#include "netbin/genfunc.hpp"
#include "netbin/modular.hpp"
#include "netbin/netted.hpp"

namespace netbin::cli {
namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Flags {
  std::vector<long> n;
  long n_max = 0;
  std::vector<std::string> m;
  long e_max = -1;
  std::vector<std::uint64_t> p;
  long l_max = -1;
  std::uint64_t seed = 1;
  long samples = 10;
  unsigned jobs = 1;
  bool symbolic = false;
  std::string format = "text";
  std::string out;
  // build
  long power = 1;
  bool inverse = false;
  // mod
  bool entry_point = false;
  bool order = false;
  // all
  bool quick = false;
};

std::vector<long> range(long lo, long hi) {
  std::vector<long> v;
  for (long k = lo; k <= hi; ++k) v.push_back(k);
  return v;
}

// Dimensions from --n, else lo..--n-max, else lo..hi.
std::vector<long> dims(const Flags& f, long lo, long hi) {
  std::vector<long> out = !f.n.empty() ? f.n : range(lo, f.n_max > 0 ? f.n_max : hi);
  for (long n : out)
    if (n < 1) throw UsageError("--n must be at least 1");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Integer parse_integer(const std::string& text) {
  Integer v;
  if (text.empty() || v.set_str(text, 10) != 0) throw UsageError("not an integer: " + text);
  return v;
}

std::vector<Integer> params_m(const Flags& f, std::vector<long> fallback) {
  std::vector<Integer> out;
  if (f.m.empty())
    for (long v : fallback) out.emplace_back(v);
  else
    for (const auto& s : f.m) out.push_back(parse_integer(s));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint64_t> primes(const Flags& f, std::vector<std::uint64_t> fallback) {
  std::vector<std::uint64_t> out = f.p.empty() ? std::move(fallback) : f.p;
  for (auto p : out)
    if (!is_prime(p)) throw UsageError("--p " + std::to_string(p) + " is not prime");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long e_max_or(const Flags& f, long fallback) { return f.e_max >= 0 ? f.e_max : fallback; }
long l_max_or(const Flags& f, long fallback) { return f.l_max >= 0 ? f.l_max : fallback; }

template <class F>
Task single(F f) {
  return [f] { return std::vector<Report>{f()}; };
}

// ---------------------------------------------------------------------------
// Task builders, one per subcommand. Each pushes tasks in sorted parameter
// order so the concatenated output is deterministic.

struct NettedGrid {
  std::vector<long> n;
  std::vector<Integer> m;
  long e_max;
  long recurrence_e_max;
  long samples;
  std::uint64_t seed;
};

std::vector<NettedParams<Integer>> tableau_param_sets() {
  return {{1, 1, 0, 1}, {1, 1, -1, 0}, {0, 1, -1, 1}, {1, 2, -1, 0}, {2, 3, -1, 5}};
}

void netted_tasks(const NettedGrid& g, std::vector<Task>& tasks) {
  const long n_max = g.n.back();
  for (auto base : {FamilyBase::a1, FamilyBase::a2, FamilyBase::a3})
    tasks.push_back(single([base, n_max] { return check_quoted_params(base, std::max(n_max, 2L)); }));
  for (const auto& kind : binomial_families()) {
    const auto params = build_family(kind, 2).second;
    tasks.push_back([kind, params, g] {
      std::vector<Report> out;
      for (auto form : {ScalarForm::statement, ScalarForm::alternate})
        out.push_back(check_coeff_recurrence(params, g.recurrence_e_max, form).with("family", to_string(kind)));
      return out;
    });
  }
  for (const auto& m : g.m) {
    const auto params = build_family({FamilyBase::fib, SignTwist::none}, 2, m).second;
    tasks.push_back([params, m, g] {
      std::vector<Report> out;
      for (auto form : {ScalarForm::statement, ScalarForm::alternate})
        out.push_back(check_coeff_recurrence(params, g.recurrence_e_max, form).with("family", "T").with("m", to_string(m)));
      return out;
    });
  }
  for (const auto& kind : binomial_families())
    for (long n : g.n) {
      if (n < 2) continue;
      tasks.push_back(single([kind, n, g] {
        auto [a, params] = build_family(kind, n);
        return verify_power_netted(a, params, g.e_max).with("family", to_string(kind));
      }));
    }
  for (const auto& m : g.m)
    for (long n : g.n) {
      if (n < 2) continue;
      tasks.push_back(single([m, n, g] {
        auto [a, params] = build_family({FamilyBase::fib, SignTwist::none}, n, m);
        return verify_power_netted(a, params, g.e_max).with("family", "T").with("m", to_string(m));
      }));
    }
  const auto sets = tableau_param_sets();
  std::vector<long> tab_n;
  for (long n : g.n)
    if (n >= 2) tab_n.push_back(n);
  if (tab_n.empty()) return;
  for (const auto& params : sets)
    for (long s = 0; s < g.samples; ++s) {
      const long n = tab_n[static_cast<std::size_t>(s) % tab_n.size()];
      const std::uint64_t seed = g.seed + static_cast<std::uint64_t>(s);
      tasks.push_back([params, n, seed] {
        Report boundary(claims::kNettedBoundary);
        if (const auto t = sample_tableau(params, n, seed)) boundary = boundary_check(*t);
        else boundary.mark_hypothesis_not_satisfied("nontrivial kernel", "kernel is {0}");
        boundary.with("n", std::to_string(n)).with("seed", std::to_string(seed));
        return std::vector<Report>{std::move(boundary), verify_sampled_tableau(params, n, seed, 3)};
      });
    }
}

struct FibGrid {
  std::vector<long> n;
  std::vector<Integer> m;
  long e_max;
  long l_max;
  std::vector<long> symbolic_n;
  long symbolic_e_max;
};

void fib_tasks(const FibGrid& g, std::vector<Task>& tasks) {
  for (const auto& m : g.m)
    for (long n : g.n) {
      tasks.push_back([m, n, g] {
        const FibSpec<Integer> spec(n, m);
        std::vector<Report> out;
        if (n >= 2) out.push_back(verify_power_vector(spec, g.e_max));
        out.push_back(verify_uniqueness(spec));
        out.push_back(verify_inverse(spec));
        if (n >= 2 && g.e_max >= 1) {
          out.push_back(verify_closed_forms(spec, g.e_max));
          out.push_back(check_quoted_second_column(spec, g.e_max));
        }
        if (n >= 2)
          for (auto& r : verify_corollary_identities(spec, g.l_max, g.l_max)) out.push_back(std::move(r));
        return out;
      });
    }
  for (long n : g.symbolic_n) {
    tasks.push_back([n, g] {
      const FibSpec<ZPoly> spec(n, ZPoly::variable());
      std::vector<Report> out;
      if (n >= 2) out.push_back(verify_power_vector(spec, g.symbolic_e_max));
      out.push_back(verify_uniqueness(spec));
      out.push_back(verify_inverse(spec));
      if (n >= 2 && g.symbolic_e_max >= 1) out.push_back(verify_closed_forms(spec, g.symbolic_e_max));
      return out;
    });
  }
}

struct GenfuncGrid {
  std::vector<long> n;
  std::vector<Integer> m;
  long e_max;
  std::vector<long> symbolic_n;
  long symbolic_e_max;
};

template <class R>
std::vector<Report> genfunc_point(const FibSpec<R>& spec, long e) {
  return {verify_genfunc(spec, e), verify_genfunc_inversion(spec, e)};
}

void genfunc_tasks(const GenfuncGrid& g, std::vector<Task>& tasks) {
  for (const auto& m : g.m)
    for (long n : g.n)
      for (long e = 1; e <= g.e_max; ++e)
        if (n >= 2) tasks.push_back([m, n, e] { return genfunc_point(FibSpec<Integer>(n, m), e); });
  for (long n : g.symbolic_n)
    for (long e = 1; e <= g.symbolic_e_max; ++e)
      if (n >= 2) tasks.push_back([n, e] { return genfunc_point(FibSpec<ZPoly>(n, ZPoly::variable()), e); });
}

struct ModGrid {
  std::vector<long> n;
  std::vector<Integer> m;
  std::vector<std::uint64_t> p;
};

void mod_tasks(const ModGrid& g, std::vector<Task>& tasks) {
  for (const auto& m : g.m)
    for (auto p : g.p)
      for (long n : g.n)
        tasks.push_back([m, p, n] {
          std::vector<Report> out = verify_entry_point_theorem(n, m, p);
          for (auto& r : verify_up_theorems(n, m, p)) out.push_back(std::move(r));
          for (auto& r : verify_root_theorem(n, m, p)) out.push_back(std::move(r));
          out.push_back(verify_order(n, m, p));
          return out;
        });
}

struct CharpolyGrid {
  std::vector<long> symbolic_n;
  std::vector<Integer> m;
  std::vector<long> n;
};

void charpoly_tasks(const CharpolyGrid& g, std::vector<Task>& tasks) {
  for (long n : g.symbolic_n)
    tasks.push_back(single([n] { return verify_conjecture(FibSpec<ZPoly>(n, ZPoly::variable())).to_report(); }));
  for (const auto& m : g.m)
    for (long n : g.n)
      tasks.push_back(single([n, m] { return verify_conjecture(FibSpec<Integer>(n, m)).to_report(); }));
}

// ---------------------------------------------------------------------------
// Output

std::string quoted(const std::string& v) {
  return v.find_first_of(" \t\"") == std::string::npos ? v : nlohmann::json(v).dump();
}

struct Sink {
  std::ostream* out;
  std::ofstream file;
};

std::ostream& open_sink(const Flags& f, std::ostream& out, Sink& sink) {
  if (f.out.empty()) return out;
  sink.file.open(f.out);
  if (!sink.file) throw UsageError("cannot open --out file " + f.out);
  return sink.file;
}

int emit(const Flags& f, const std::vector<Report>& reports, std::ostream& out, std::ostream& err) {
  Sink sink;
  std::ostream& os = open_sink(f, out, sink);
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& r : reports) {
    os << (f.format == "json" ? format_json(r) : format_text(r));
    ++counts[static_cast<int>(r.status)];
  }
  os.flush();
  err << reports.size() << " reports: " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2]
      << " hypothesis-not-satisfied, " << counts[3] << " discrepancy-documented\n";
  return all_ok(reports) ? kExitOk : kExitFail;
}

template <class R>
void print_matrix(std::ostream& os, const Matrix<R>& a, bool json) {
  if (json) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(ring_to_string(a(i, j)));
      rows.push_back(row);
    }
    os << rows.dump();
    return;
  }
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < a.cols(); ++j) {
      std::string s = ring_to_string(a(i, j));
      s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
      os << (j ? "," : "") << s;
    }
    os << ']';
  }
  os << ']';
}

// ---------------------------------------------------------------------------
// Subcommands

template <class R>
Matrix<R> build_matrix(const FibSpec<R>& spec, const Flags& f) {
  if (f.power < 0) throw UsageError("--power must be nonnegative");
  Matrix<R> base = f.inverse ? build_T_inverse(spec) : build_T(spec);
  return mat_pow(base, static_cast<unsigned long>(f.power));
}

int cmd_build(const Flags& f, std::ostream& out) {
  if (f.n.size() != 1) throw UsageError("build needs exactly one --n");
  if (f.n.front() < 1) throw UsageError("--n must be at least 1");
  if (f.symbolic && !f.m.empty()) throw UsageError("--symbolic and --m are exclusive");
  if (!f.symbolic && f.m.size() > 1) throw UsageError("build takes at most one --m");
  Sink sink;
  std::ostream& os = open_sink(f, out, sink);
  const bool json = f.format == "json";
  const long n = f.n.front();
  if (json) os << "{\"n\":" << n << ",";
  if (f.symbolic) {
    if (json) os << "\"m\":\"symbolic\",\"power\":" << f.power << ",\"inverse\":" << (f.inverse ? "true" : "false") << ",\"matrix\":";
    print_matrix(os, build_matrix(FibSpec<ZPoly>(n, ZPoly::variable()), f), json);
  } else {
    const Integer m = f.m.empty() ? Integer(1) : parse_integer(f.m.front());
    if (json) os << "\"m\":\"" << to_string(m) << "\",\"power\":" << f.power << ",\"inverse\":" << (f.inverse ? "true" : "false") << ",\"matrix\":";
    print_matrix(os, build_matrix(FibSpec<Integer>(n, m), f), json);
  }
  if (json) os << "}";
  os << '\n';
  return kExitOk;
}

int cmd_mod_values(const Flags& f, std::ostream& out) {
  Sink sink;
  std::ostream& os = open_sink(f, out, sink);
  const bool json = f.format == "json";
  const auto ms = params_m(f, {1});
  const auto ps = primes(f, {5});
  for (const auto& m : ms)
    for (auto p : ps) {
      if (f.entry_point) {
        const auto e = entry_point(m, p);
        if (json)
          os << nlohmann::json{{"m", to_string(m)}, {"p", std::to_string(p)}, {"entry_point", std::to_string(e)}}.dump()
             << '\n';
        else
          os << e << '\n';
      }
      if (f.order)
        for (long n : dims(f, 2, 2)) {
          const auto t = order_mod_p(n, m, p);
          if (json)
            os << nlohmann::json{{"n", std::to_string(n)}, {"m", to_string(m)}, {"p", std::to_string(p)}, {"order", std::to_string(t)}}
                      .dump()
               << '\n';
          else
            os << t << '\n';
        }
    }
  return kExitOk;
}

NettedGrid netted_grid(const Flags& f) {
  return {dims(f, 2, 8), params_m(f, {1, 2, 3}), e_max_or(f, 6), 50, f.samples, f.seed};
}

FibGrid fib_grid(const Flags& f) {
  FibGrid g{dims(f, 2, 8), params_m(f, {1, 2, 3, 4, 5}), e_max_or(f, 6), l_max_or(f, 4), {}, e_max_or(f, 3)};
  if (f.symbolic) {
    g.symbolic_n = dims(f, 2, 5);
    g.m.clear();
    g.n.clear();
  }
  return g;
}

GenfuncGrid genfunc_grid(const Flags& f) {
  GenfuncGrid g{dims(f, 2, 6), params_m(f, {1, 2, 3}), e_max_or(f, 4), {}, e_max_or(f, 3)};
  if (f.symbolic) {
    g.symbolic_n = dims(f, 2, 3);
    g.m.clear();
    g.n.clear();
  }
  return g;
}

ModGrid mod_grid(const Flags& f) { return {dims(f, 2, 8), params_m(f, {1, 2, 3}), primes(f, {3, 5, 7, 11, 13, 29})}; }

CharpolyGrid charpoly_grid(const Flags& f) {
  if (f.symbolic) return {dims(f, 1, 20), {}, {}};
  return {{}, params_m(f, {1, 2, 3}), dims(f, 1, 40)};
}

std::vector<Task> all_tasks(const Flags& f) {
  const bool q = f.quick;
  std::vector<Task> tasks;
  const auto up_to = [](long hi) { return range(2, hi); };
  netted_tasks({up_to(q ? 4 : 8), {1, 2, 3}, q ? 3 : 6, q ? 12 : 50, q ? 2 : 10, f.seed}, tasks);
  fib_tasks({up_to(q ? 4 : 8), {1, 2, 3, 4, 5}, q ? 3 : 6, 4, up_to(q ? 3 : 5), 3}, tasks);
  if (!q)
    for (long n : range(9, 12))
      for (long m = 1; m <= 5; ++m)
        tasks.push_back([n, m] {
          const FibSpec<Integer> spec(n, Integer(m));
          return std::vector<Report>{verify_uniqueness(spec), verify_inverse(spec)};
        });
  genfunc_tasks({up_to(q ? 4 : 6), {1, 2, 3}, 4, {2, 3}, 3}, tasks);
  mod_tasks({up_to(q ? 4 : 8), {1, 2, 3}, q ? std::vector<std::uint64_t>{5, 7, 11} : std::vector<std::uint64_t>{3, 5, 7, 11, 13, 29}},
            tasks);
  charpoly_tasks({range(1, q ? 8 : 20), {1, 2, 3}, range(1, q ? 16 : 100)}, tasks);
  return tasks;
}

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--n", f.n, "Dimension (repeatable)");
  sub->add_option("--n-max", f.n_max, "Largest dimension of the sweep")->check(CLI::PositiveNumber);
  sub->add_option("--m", f.m, "Parameter m (repeatable)");
  sub->add_option("--e-max", f.e_max, "Largest power")->check(CLI::NonNegativeNumber);
  sub->add_option("--p", f.p, "Prime modulus (repeatable)");
  sub->add_option("--l-max", f.l_max, "Largest l and p in the summation identities")->check(CLI::NonNegativeNumber);
  sub->add_option("--seed", f.seed, "Base seed for tableau sampling");
  sub->add_option("--samples", f.samples, "Tableaux sampled per parameter set")->check(CLI::NonNegativeNumber);
  sub->add_option("--jobs", f.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_flag("--symbolic", f.symbolic, "Work over Z[m] instead of integer m");
  sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--out", f.out, "Write reports to this file");
}

}  // namespace

std::string format_text(const Report& r) {
  std::ostringstream os;
  os << to_string(r.status) << ' ' << r.claim_id;
  for (const auto& [k, v] : r.params) os << ' ' << k << '=' << quoted(v);
  os << '\n';
  for (const auto& w : r.witnesses)
    os << "    at " << w.location << ": expected " << w.expected << ", got " << w.actual << '\n';
  if (r.violations > r.witnesses.size() && r.status != Status::hypothesis_not_satisfied)
    os << "    ... " << (r.violations - r.witnesses.size()) << " more\n";
  return os.str();
}

std::string format_json(const Report& r) {
  nlohmann::ordered_json j;
  j["claim_id"] = r.claim_id;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  j["status"] = std::string(to_string(r.status));
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses)
    j["witnesses"].push_back({{"location", w.location}, {"expected", w.expected}, {"actual", w.actual}});
  return j.dump() + "\n";
}

std::vector<Report> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<std::vector<Report>> results(tasks.size());
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
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Report> out;
  for (auto& r : results)
    for (auto& rep : r) out.push_back(std::move(rep));
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of netted binomial and generalized Fibonacci matrix identities", "netbin"};
  app.require_subcommand(1);
  Flags f;

  auto* build = app.add_subcommand("build", "Print T_n(m), its inverse, or a power");
  add_common(build, f);
  build->add_option("--power", f.power, "Exponent")->check(CLI::NonNegativeNumber);
  build->add_flag("--inverse", f.inverse, "Use the inverse matrix");

  auto* netted = app.add_subcommand("netted", "Recurrences of netted matrix powers and sampled tableaux");
  auto* fib = app.add_subcommand("fib", "Generalized Fibonacci matrix identities");
  auto* genfunc = app.add_subcommand("genfunc", "Generating function of matrix powers");
  auto* mod = app.add_subcommand("mod", "Congruences, entry points and orders modulo primes");
  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial conjecture");
  auto* all = app.add_subcommand("all", "Every verifier over the full grids");
  for (auto* sub : {netted, fib, genfunc, mod, charpoly, all}) add_common(sub, f);
  mod->add_flag("--entry-point", f.entry_point, "Print entry points instead of reports");
  mod->add_flag("--order", f.order, "Print multiplicative orders instead of reports");
  all->add_flag("--quick", f.quick, "Small grids");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(f, out);
    if (mod->parsed() && (f.entry_point || f.order)) return cmd_mod_values(f, out);

    std::vector<Task> tasks;
    if (netted->parsed()) netted_tasks(netted_grid(f), tasks);
    if (fib->parsed()) fib_tasks(fib_grid(f), tasks);
    if (genfunc->parsed()) genfunc_tasks(genfunc_grid(f), tasks);
    if (mod->parsed()) mod_tasks(mod_grid(f), tasks);
    if (charpoly->parsed()) charpoly_tasks(charpoly_grid(f), tasks);
    if (all->parsed()) tasks = all_tasks(f);
    return emit(f, run_tasks(tasks, f.jobs), out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFail;
  }
}

}  // namespace netbin::cli
