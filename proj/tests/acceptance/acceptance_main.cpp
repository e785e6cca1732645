// Acceptance suite: end-to-end checks of the solver stack at pinned
// tolerances, one pass/fail line per criterion. Exits nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "th/commands.hpp"
#include "th/model.hpp"
#include "th/oracle.hpp"
#include "th/specfun.hpp"
#include "th/spectrum.hpp"

using namespace th;
using model::MoleculeParams;
using spectrum::SolveOptions;

namespace {

int g_failures = 0;

struct Criterion {
  const char* label;
  double budget_s;
  std::function<bool(std::string&)> body;
};

void run(const Criterion& c) {
  std::string detail;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = c.body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > c.budget_s) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  std::printf("[%s] %s (%.2f s%s%s)\n", ok ? "PASS" : "FAIL", c.label, secs,
              detail.empty() ? "" : ": ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

// --- synthetic molecules used throughout --------------------------------

const MoleculeParams kShallowI{"shallow-I", 1500.0, 1.2, 2.2, 0.35, 0.8};
const MoleculeParams kMediumI{"medium-I", 12000.0, 1.1, 1.8, 0.25, 1.2};
const MoleculeParams kDeepI{"deep-I", 40000.0, 1.0, 2.0, 0.3, 1.0};
const MoleculeParams kIIIa{"III-a", 20000.0, 1.0, 2.0, 0.05, 1.0};
const MoleculeParams kIIIb{"III-b", 12000.0, 1.1, 1.8, 0.1, 1.2};
const MoleculeParams kIVa{"IV-a", 20000.0, 1.0, 2.0, -0.4, 1.0};
const MoleculeParams kIVb{"IV-b", 12000.0, 1.1, 1.8, -0.25, 1.2};
const MoleculeParams kMorse{"morse", 40000.0, 1.0, 2.0, 0.0, 1.0};

std::string fmt(double v) { return cli::format_sci(v); }

struct NodeRecord {
  std::string molecule;
  std::vector<int> index, nodes;
};
std::vector<NodeRecord> g_node_records;

void record_nodes(const char* who, const spectrum::SpectrumReport& rep) {
  NodeRecord rec;
  rec.molecule = who;
  for (const auto& d : rep.diagnostics) {
    rec.index.push_back(d.index);
    rec.nodes.push_back(d.wf_nodes);
  }
  g_node_records.push_back(std::move(rec));
}

bool oracle_agreement(const spectrum::SpectrumReport& rep, double tol,
                      std::string& detail, const char* who) {
  if (!rep.oracle) {
    detail += std::string(who) + ": no oracle attached; ";
    return false;
  }
  if (!rep.oracle->counts_match) {
    detail += std::string(who) + ": count " + std::to_string(rep.states.size()) +
              " vs oracle " + std::to_string(rep.oracle->count) + "; ";
    return false;
  }
  if (rep.oracle->max_rel_dev > tol) {
    detail += std::string(who) + ": max rel dev " + fmt(rep.oracle->max_rel_dev) + "; ";
    return false;
  }
  detail += std::string(who) + " " + std::to_string(rep.states.size()) +
            " levels, max dev " + fmt(rep.oracle->max_rel_dev) + "; ";
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({"1. threshold table reproduces the reference column to 1e-8", 1.0,
                      [](std::string& detail) {
                        auto res = cli::cmd_table1();
                        double worst = 0.0;
                        for (const auto& row : res.rows)
                          worst = std::max(worst,
                                           std::fabs(row.threshold - row.reference));
                        detail = "worst |diff| " + fmt(worst);
                        return res.ok && res.rows.size() == 6;
                      }});

  criteria.push_back({"2. Euler transformation identity and confluent limit", 10.0,
                      [](std::string& detail) {
                        std::mt19937 rng(20240817);
                        std::uniform_real_distribution<double> uab(-5.0, 40.0),
                            uc(0.5, 80.0), uz(0.0, 0.95);
                        double worst = 0.0;
                        int checked = 0;
                        while (checked < 500) {
                          double a = uab(rng), b = uab(rng), cc = uc(rng), z = uz(rng);
                          if (a <= 0.0 && a == std::floor(a)) continue;
                          if (b <= 0.0 && b == std::floor(b)) continue;
                          auto lhs = specfun::gauss_2f1(a, b, cc, z);
                          auto rhs = specfun::gauss_2f1(cc - a, cc - b, cc, z);
                          double pref = std::pow(1.0 - z, cc - a - b);
                          worst = std::max(worst,
                                           std::fabs(lhs.value - pref * rhs.value) /
                                               std::max(1.0, std::fabs(lhs.value)));
                          ++checked;
                        }
                        bool ok = worst <= 1e-10;
                        // confluent limit: error decreasing across B
                        double alpha = 1.7, gamma = 3.4, z = 2.0;
                        double want = specfun::kummer_1f1(alpha, gamma, z).value;
                        double prev = 1e300;
                        bool decreasing = true;
                        for (double B : {1e3, 1e5, 1e7}) {
                          double got = specfun::gauss_2f1(alpha, B, gamma, z / B).value;
                          double err = std::fabs(got - want) / std::fabs(want);
                          if (err >= prev) decreasing = false;
                          prev = err;
                        }
                        detail = "identity worst " + fmt(worst) +
                                 ", confluent errors decreasing, final " + fmt(prev);
                        return ok && decreasing;
                      }});

  criteria.push_back(
      {"3. closed-form case I vs Numerov for shallow/medium/deep wells", 60.0,
       [](std::string& detail) {
         bool ok = true;
         SolveOptions opts;
         opts.validate_with_oracle = true;
         opts.check_nodes = true;
         struct Want {
           const MoleculeParams* p;
           int min_states;
         };
         for (auto [p, min_states] : {Want{&kShallowI, 1}, Want{&kMediumI, 4},
                                      Want{&kDeepI, 21}}) {
           auto rep = spectrum::energy_closed_case_i(*p, opts);
           ok = oracle_agreement(rep, 1e-6, detail, p->name.c_str()) && ok;
           if ((int)rep.states.size() < min_states) ok = false;
           if (rep.n_r_max != spectrum::count_case_i(*p)) ok = false;
           if ((int)rep.states.size() != rep.n_r_max + 1) ok = false;
           record_nodes(p->name.c_str(), rep);
         }
         // depth span: shallow <= 3 states, deep >= 20
         if (spectrum::count_case_i(kShallowI) + 1 > 3) {
           ok = false;
           detail += "shallow well too deep; ";
         }
         if (spectrum::count_case_i(kDeepI) + 1 < 20) {
           ok = false;
           detail += "deep well too shallow; ";
         }
         return ok;
       }});

  criteria.push_back(
      {"4. transcendental cases III and IV vs Numerov", 120.0,
       [](std::string& detail) {
         bool ok = true;
         SolveOptions opts;
         opts.validate_with_oracle = true;
         opts.check_nodes = true;
         for (const auto* p : {&kIIIa, &kIIIb, &kIVa, &kIVb}) {
           auto rep = spectrum::solve(*p, opts);
           ok = oracle_agreement(rep, 1e-6, detail, p->name.c_str()) && ok;
           for (const auto& d : rep.diagnostics)
             if (!d.converged) {
               ok = false;
               detail += p->name + ": root " + std::to_string(d.index) +
                         " did not converge; ";
             }
           record_nodes(p->name.c_str(), rep);
         }
         return ok;
       }});

  criteria.push_back(
      {"5. Morse ladder vs Numerov; small-c_h limits recover it", 60.0,
       [](std::string& detail) {
         SolveOptions opts;
         opts.validate_with_oracle = true;
         opts.check_nodes = true;
         auto morse = spectrum::energy_morse(kMorse, opts);
         bool ok = oracle_agreement(morse, 1e-6, detail, "morse");
         record_nodes("morse", morse);

         MoleculeParams limit_base{"limit", 20000.0, 1.0, 2.0, 0.0, 1.0};
         auto ladder = spectrum::energy_morse(limit_base);
         for (double ch : {1e-5, -1e-5}) {
           auto p = limit_base;
           p.c_h = ch;
           p.name = ch > 0 ? "limit-III" : "limit-IV";
           auto rep = spectrum::solve(p);
           size_t m = std::min(rep.states.size(), ladder.states.size());
           if (m == 0) {
             ok = false;
             detail += p.name + ": empty spectrum; ";
             continue;
           }
           double worst = 0.0;
           for (size_t i = 0; i < m; ++i)
             worst = std::max(worst,
                              std::fabs(rep.states[i].E - ladder.states[i].E) /
                                  ladder.states[i].E);
           if (std::llabs((long long)rep.states.size() -
                          (long long)ladder.states.size()) > 1) {
             ok = false;
             detail += p.name + ": count " + std::to_string(rep.states.size()) +
                       " vs ladder " + std::to_string(ladder.states.size()) + "; ";
           }
           detail += p.name + " worst dev " + fmt(worst) + "; ";
           if (worst > 1e-4) ok = false;
         }
         return ok;
       }});

  criteria.push_back(
      {"6. case III spectrum is continuous across the case I boundary", 120.0,
       [](std::string& detail) {
         MoleculeParams base{"continuity", 8000.0, 0.2, 0.5, 0.0, 0.8};
         double thr = model::threshold_ch(base);
         auto pI = base;
         pI.c_h = thr;
         auto repI = spectrum::energy_closed_case_i(pI);
         auto pIII = base;
         pIII.c_h = thr * (1.0 - 1e-6);
         auto repIII = spectrum::energy_roots_case_iii(pIII);
         if (repI.states.empty() || repIII.states.size() != repI.states.size()) {
           detail = "state counts " + std::to_string(repI.states.size()) + " vs " +
                    std::to_string(repIII.states.size());
           return false;
         }
         double worst = 0.0;
         for (size_t i = 0; i < repI.states.size(); ++i)
           worst = std::max(worst, std::fabs(repI.states[i].E - repIII.states[i].E) /
                                       repI.states[i].E);
         detail = std::to_string(repI.states.size()) + " levels, worst dev " + fmt(worst);
         return worst <= 1e-4;
       }});

  criteria.push_back(
      {"7. case I analytic normalization integrates to 1 within 1e-8", 60.0,
       [](std::string& detail) {
         auto regime = model::classify_regime(kDeepI);
         double r0 = *regime.r0;
         double worst = 0.0;
         for (int n : {0, 1, 2}) {
           auto f = [&](double r) {
             return spectrum::wavefunction_case_i(kDeepI, n, r);
           };
           double norm = oracle::quad_norm(f, r0 + 1e-9, kDeepI.r_e + 25.0);
           worst = std::max(worst, std::fabs(norm - 1.0));
         }
         detail = "worst |norm - 1| " + fmt(worst);
         return worst <= 1e-8;
       }});

  criteria.push_back(
      {"8. node counts equal n_r for every computed wavefunction", 1e9,
       [](std::string& detail) {
         bool ok = true;
         int total = 0;
         for (const auto& rec : g_node_records) {
           for (size_t i = 0; i < rec.index.size(); ++i) {
             ++total;
             if (rec.nodes[i] != rec.index[i]) {
               ok = false;
               detail += rec.molecule + ": state " + std::to_string(rec.index[i]) +
                         " counted " + std::to_string(rec.nodes[i]) + " nodes; ";
             }
           }
         }
         detail += std::to_string(total) + " wavefunctions checked";
         return ok && total > 80;
       }});

  for (const auto& c : criteria) run(c);

  if (g_failures == 0)
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
