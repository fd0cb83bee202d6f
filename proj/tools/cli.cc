// Copyright 2026 The rpr2 Authors
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


#include "cli.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "rpr2/errors.h"
#include "rpr2/fredholm.h"
#include "rpr2/gapgen.h"
#include "rpr2/hardness.h"
#include "rpr2/hermite.h"
#include "rpr2/moments.h"
#include "rpr2/parallel.h"
#include "rpr2/pipeline.h"
#include "rpr2/stepopt.h"

namespace rpr2::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";
constexpr double kZ99 = 2.3263478740408408;  // one-sided 99% normal quantile

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  if (!out) throw UsageError("write failed for " + path);
}

json FJson(const StepFunction& f) {
  json a = json::array();
  json b = json::array();
  for (double x : f.breakpoints()) a.push_back(Round9(x));
  for (double x : f.values()) b.push_back(Round9(x));
  return {{"a", a}, {"b", b}};
}

// Writes the result and returns the manifest's output list.
struct Result {
  std::string text;
  json body;  // set for JSON results
  bool is_json = false;
  std::vector<std::string> files;
  json notes = json::array();
};

std::string Csv(const std::vector<std::string>& header,
                const std::vector<std::vector<double>>& rows) {
  std::string s;
  for (size_t i = 0; i < header.size(); ++i) s += (i ? "," : "") + header[i];
  s += '\n';
  for (const auto& r : rows) {
    for (size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + FormatNumber(r[i]);
    s += '\n';
  }
  return s;
}

std::vector<int> ParseK(const std::string& s) {
  std::vector<int> k;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      k.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("bad clause size list '" + s + "'");
    }
  }
  if (k.empty()) throw UsageError("empty clause size list");
  return k;
}

Problem ParseProblem(const std::string& s) {
  if (s == "maxcut") return Problem::kMaxCut;
  if (s == "nae3") return Problem::kNae3;
  throw UsageError("unknown problem '" + s + "'");
}

StepFunction FSpecOrUsage(const std::string& spec) {
  try {
    return ParseFSpec(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// ---- subcommands --------------------------------------------------------

struct RatioArgs {
  std::string problem;
  int n = 600;
  int grid = 500;
  int coarse_n = 100;
  int rounds = 3;
  bool no_rho0_one = false;
  std::string f_out;
};

Result DoRatio(const RatioArgs& a) {
  const Problem p = ParseProblem(a.problem);
  if (a.n < 2 || a.n % 2 || a.coarse_n < 2 || a.coarse_n % 2) {
    throw UsageError("--N and --coarse-N must be even");
  }
  RatioOptions o;
  o.coarse_alpha = o.coarse_rho = a.grid;
  o.coarse_n = a.coarse_n;
  o.fine_n = a.n;
  o.refine_rounds = a.rounds;
  o.include_rho0_one = !a.no_rho0_one;
  const RatioResult r = ApproxRatio(p, o);
  const FredholmSolution s = OptimalStepFunction(r.dist, a.n);
  Result res;
  res.is_json = true;
  res.body = {{"problem", a.problem},
              {"ratio", Round9(r.ratio)},
              {"coarse_ratio", Round9(r.coarse_ratio)},
              {"alpha", Round9(r.dist.alpha)},
              {"rho", Round9(r.dist.rho)},
              {"rho0", Round9(r.dist.rho0())},
              {"variant", VariantName(r.dist.variant)},
              {"soundness", Round9(r.soundness)},
              {"completeness", Round9(r.completeness)},
              {"clamped_cells_per_side", r.clamp},
              {"N", a.n},
              {"grid", a.grid},
              {"coarse_N", a.coarse_n},
              {"evaluations", r.evaluations}};
  const SLinearFit fit = FitSLinear(s.f());
  if (!fit.degenerate) {
    res.body["slinear"] = {{"slope", Round9(fit.slope)},
                           {"max_deviation", Round9(fit.max_deviation)},
                           {"interior_cells", fit.interior_cells}};
  }
  if (!a.f_out.empty()) {
    const std::vector<double> mid = s.f().Midpoints();
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < a.n; ++i) rows.push_back({double(i), mid[i], s.values[i]});
    WriteFile(a.f_out, Csv({"cell[index]", "median[sd]", "f[value]"}, rows));
    res.files.push_back(a.f_out);
  }
  return res;
}

struct CurveArgs {
  std::string problem = "nae3";
  int n = 100;
  int alphas = 101;
  int rhos = 101;
  int buckets = 200;
  bool raw = false;
};

Result DoCurve(const CurveArgs& a) {
  const Problem p = ParseProblem(a.problem);
  if (a.n < 2 || a.n % 2) throw UsageError("--N must be even");
  if (a.alphas < 2 || a.rhos < 2) throw UsageError("grids need at least 2 points");
  std::vector<double> al(a.alphas);
  std::vector<double> rh(a.rhos);
  for (int i = 0; i < a.alphas; ++i) al[i] = double(i) / (a.alphas - 1);
  for (int i = 0; i < a.rhos; ++i) rh[i] = -1.0 + double(i) / (a.rhos - 1);
  const std::vector<CurvePoint> samples = CurveSamples(p, al, rh, a.n);
  const std::vector<CurvePoint> pts = a.raw ? samples : LowerEnvelope(samples, a.buckets);
  std::string s = "completeness[weight],soundness[weight],ratio[1],alpha[weight],rho[bias],variant[clamped=0;one=1]\n";
  for (const auto& c : pts) {
    s += FormatNumber(c.completeness) + "," + FormatNumber(c.soundness) + "," +
         FormatNumber(c.soundness / c.completeness) + "," + FormatNumber(c.alpha) +
         "," + FormatNumber(c.rho) + "," +
         (c.variant == Rho0Variant::kClamped ? "0" : "1") + "\n";
  }
  Result res;
  res.text = s;
  return res;
}

Result DoBound(const std::string& which) {
  if (which != "nae35") throw UsageError("unknown bound '" + which + "'");
  const MixtureBound b = Nae35Bound();
  const InnerMaxResult im = InnerMax(b.p_star);
  Result res;
  res.is_json = true;
  res.body = {{"bound", Round9(b.bound)},
              {"p_star", Round9(b.p_star)},
              {"f2_star", Round9(b.f2_star)},
              {"residual", b.residual},
              {"inner_max_at_p_star", {{"f2", Round9(im.f2)}, {"value", Round9(im.value)}}}};
  return res;
}

struct GapArgs {
  int n = 48;
  int64_t m3 = 100000;
  int64_t m5 = 100000;
  uint64_t seed = 1;
  std::string out_prefix;
  double p1 = -1.0;
  double p2 = 0.0;
  int trials = 20;
  int64_t moment_samples = 200000;
};

json BiasCheck(const GapInstance& g) {
  bool c3 = true;
  bool c5 = true;
  for (const auto& c : g.c3) {
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) c3 = c3 && c.vecs[i].Dot3(c.vecs[j]) == -1;
    }
  }
  for (const auto& c : g.c5) {
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) {
        c5 = c5 && c.vecs[i].Dot3(c.vecs[j]) == (j == 4 ? 0 : 1);
      }
    }
  }
  return {{"three_clauses_exact", c3}, {"five_clauses_exact", c5}};
}

Result DoGapGen(const GapArgs& a) {
  if (a.out_prefix.empty()) throw UsageError("--out-prefix is required");
  const GapInstance g = GenGapInstance(a.n, a.m3, a.m5, a.seed);
  const NaeInstance inst = g.ToNaeInstance();
  Result res;
  const std::string inst_path = a.out_prefix + ".nae";
  const std::string vec_path = a.out_prefix + ".vec";
  WriteFile(inst_path, "c MAX NAE-{3,5} gap instance n=" + std::to_string(a.n) +
                           " seed=" + std::to_string(a.seed) + "\n" +
                           FormatInstance(inst));
  WriteFile(vec_path, g.VectorText());
  res.files = {inst_path, vec_path};
  res.is_json = true;
  res.body = {{"n", a.n},
              {"num_vars", g.num_vars()},
              {"m3", a.m3},
              {"m5", a.m5},
              {"total_weight", Round9(inst.TotalWeight())},
              {"five_clause_weight", Round9(g.FiveWeight())},
              {"bias_patterns", BiasCheck(g)},
              {"instance", inst_path},
              {"vectors", vec_path}};
  return res;
}

Result DoGapEval(const GapArgs& a) {
  RoundingRule rule = TunedRule();
  if (a.p1 >= 0.0) rule = {a.p1, a.p2};
  if (a.trials < 1) throw UsageError("--trials must be positive");
  const GapInstance g = GenGapInstance(a.n, a.m3, a.m5, a.seed);
  const GapEvaluation ev = EvaluateGap(g, rule, a.trials, a.seed, a.moment_samples);
  const MixtureBound b = Nae35Bound();
  Result res;
  res.is_json = true;
  res.body = {{"n", a.n},
              {"m3", a.m3},
              {"m5", a.m5},
              {"p1", Round9(rule.p1)},
              {"p2", Round9(rule.p2)},
              {"trials", a.trials},
              {"fraction", Round9(ev.fraction)},
              {"std_error", Round9(ev.std_error)},
              {"predicted", Round9(ev.predicted)},
              {"f2", Round9(ev.moments.f2.value)},
              {"f2_std_error", Round9(ev.moments.f2.std_error)},
              {"f4", Round9(ev.moments.f4.value)},
              {"f4_std_error", Round9(ev.moments.f4.std_error)},
              {"bound", Round9(b.bound)},
              {"random_baseline", Round9(RandomBaseline(g.ToNaeInstance()))},
              {"bias_patterns", BiasCheck(g)}};
  return res;
}

struct StepoptArgs {
  std::string k = "3,5";
  int steps = 2;
  bool pm1 = false;
  int restarts = 64;
  uint64_t seed = 1;
  int max_evals = 4000;
  std::string f_out;
};

Result DoStepopt(const StepoptArgs& a) {
  StepSearchConfig c;
  c.K = ParseK(a.k);
  c.steps = a.steps;
  c.pm1 = a.pm1;
  c.restarts = a.restarts;
  c.seed = a.seed;
  c.max_evals = a.max_evals;
  try {
    c.Validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const StepSearchResult r = OptimizeStep(c);
  std::vector<std::string> header{"objective[prob]"};
  std::vector<double> row{r.objective};
  for (int i = 0; i < c.steps - 1; ++i) {
    header.push_back("a_" + std::to_string(i + 1) + "[sd]");
    row.push_back(i < r.f.num_breakpoints() ? r.f.breakpoints()[i] : NAN);
  }
  for (int i = 0; i < c.steps; ++i) {
    header.push_back("b_" + std::to_string(i) + "[value]");
    row.push_back(r.f.values()[i]);
  }
  for (size_t i = 0; i < c.K.size(); ++i) {
    header.push_back("p_" + std::to_string(c.K[i]) + "[prob]");
    row.push_back(r.per_k[i]);
  }
  Result res;
  res.text = Csv(header, {row});
  res.notes.push_back("ratio is conjectured; hardest configuration assumed symmetric");
  if (!r.converged) res.notes.push_back("polishing run stopped before reaching x_tol");
  if (!a.f_out.empty()) {
    WriteFile(a.f_out, FJson(r.f).dump(2) + "\n");
    res.files.push_back(a.f_out);
  }
  return res;
}

struct SweepArgs {
  std::string base;
  std::string k = "3,5";
  std::string range = "3:10:0.01";
};

Result DoSweep(const SweepArgs& a) {
  const StepFunction f = FSpecOrUsage(a.base);
  const std::vector<int> K = ParseK(a.k);
  double lo, hi, step;
  char c1, c2;
  std::istringstream in(a.range);
  if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || !in.eof()) {
    throw UsageError("--range must be lo:hi:step");
  }
  std::vector<SweepRow> rows;
  try {
    rows = BreakpointSweep(f, lo, hi, step, K);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  std::vector<std::string> header{"a_new[sd]"};
  for (int k : K) header.push_back("p_" + std::to_string(k) + "[prob]");
  std::vector<std::vector<double>> out;
  for (const auto& r : rows) {
    std::vector<double> v{r.a};
    v.insert(v.end(), r.probs.begin(), r.probs.end());
    out.push_back(v);
  }
  Result res;
  res.text = Csv(header, out);
  res.notes.push_back("ratio is conjectured; hardest configuration assumed symmetric");
  return res;
}

Result DoHermiteBoundary(int k, int angles) {
  if (k != 2) throw UsageError("only --k 2 (the c1, c3 plane) is supported");
  if (angles < 1) throw UsageError("--angles must be positive");
  std::vector<std::vector<double>> rows;
  for (const auto& p : P2Boundary(angles)) rows.push_back({p.angle, p.c1, p.c3});
  Result res;
  res.text = Csv({"angle[rad]", "c1[coef]", "c3[coef]"}, rows);
  return res;
}

struct RoundArgs {
  std::string instance;
  std::string vectors;
  std::string f = "sign";
  int rounds = 100;
  uint64_t seed = 1;
  std::string assignment_out;
};

Result DoRound(const RoundArgs& a) {
  const NaeInstance inst = ParseInstance(ReadFile(a.instance));
  const VectorAssignment vec = ParseVectors(ReadFile(a.vectors));
  const StepFunction f = FSpecOrUsage(a.f);
  if (a.rounds < 1) throw UsageError("--rounds must be positive");
  const RoundsResult r = BestOfRounds(inst, vec, f, a.rounds, a.seed);
  Result res;
  res.is_json = true;
  res.body = {{"fraction", Round9(r.fraction)},
              {"mean", Round9(r.mean)},
              {"std_error", Round9(r.std_error)},
              {"baseline", Round9(RandomBaseline(inst))},
              {"rounds", a.rounds},
              {"seed", a.seed},
              {"f", FJson(f)}};
  if (!a.assignment_out.empty()) {
    std::string s;
    for (size_t i = 0; i < r.best.size(); ++i) {
      s += std::to_string(i + 1) + " " + std::to_string(int(r.best[i])) + "\n";
    }
    WriteFile(a.assignment_out, s);
    res.files.push_back(a.assignment_out);
  }
  return res;
}

struct WitnessArgs {
  double delta = 0.1;
  double eps = 0.05;
  int64_t samples = 100000000;
  uint64_t seed = 1;
};

Result DoWitness(const WitnessArgs& a) {
  const F4Witness w = F4NegativeWitness(a.delta, a.eps, a.samples, a.seed);
  Result res;
  res.is_json = true;
  res.body = {{"delta", Round9(a.delta)},
              {"eps", Round9(a.eps)},
              {"samples", a.samples},
              {"seed", a.seed},
              {"estimate", w.estimate.value},
              {"std_error", w.estimate.std_error},
              {"upper99", w.estimate.value + kZ99 * w.estimate.std_error},
              {"hits", w.hits},
              {"bias_first", Round9(w.bias_first)},
              {"bias_rest", Round9(w.bias_rest)},
              {"biases_positive", w.bias_first > 0.0 && w.bias_rest > 0.0}};
  return res;
}

json Params(const CLI::App* sub) {
  json p = json::object();
  for (const CLI::Option* o : sub->get_options()) {
    if (o->get_name() == "--help" || o->get_name().empty()) continue;
    std::string name = o->get_name();
    while (!name.empty() && name[0] == '-') name.erase(0, 1);
    if (o->count() > 0) {
      const auto& r = o->results();
      p[name] = r.size() == 1 ? json(r[0]) : json(r);
    } else if (!o->get_default_str().empty()) {
      p[name] = o->get_default_str();
    }
  }
  return p;
}

}  // namespace

std::string FormatNumber(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

double Round9(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(FormatNumber(v).c_str(), nullptr);
}

StepFunction ParseFSpec(const std::string& spec) {
  if (spec == "sign") return StepFunction::Sign();
  if (spec == "zero") return StepFunction::Zero();
  if (spec.rfind("slin:", 0) == 0) {
    std::istringstream in(spec.substr(5));
    double s = 0.0;
    int steps = 200;
    char colon;
    if (!(in >> s) || (!in.eof() && !(in >> colon >> steps))) {
      throw std::invalid_argument("bad s-linear spec '" + spec + "'");
    }
    if (!(s > 0.0) || steps < 1) throw std::invalid_argument("bad s-linear spec '" + spec + "'");
    return StepFunction::SLinear(s, steps);
  }
  std::string text = spec;
  if (spec.empty() || spec[0] != '{') {
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("f spec '" + spec + "' is neither a known form nor a readable file");
    std::ostringstream s;
    s << in.rdbuf();
    text = s.str();
  }
  try {
    const json j = json::parse(text);
    std::vector<double> a = j.value("a", std::vector<double>{});
    std::vector<double> b = j.at("b").get<std::vector<double>>();
    return StepFunction(a, b);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad f JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw std::invalid_argument(std::string("invalid step function: ") + e.what());
  }
}

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"rpr2: RPR2 rounding analysis for MAX CUT and MAX NAE-SAT"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  int threads = 0;
  std::string out_path;
  std::string manifest_path;
  app.add_option("--threads", threads, "worker threads (default: RPR2_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--out", out_path, "write the result here instead of stdout");
  app.add_option("--manifest", manifest_path, "manifest path (default: <out>.manifest.json)");

  std::function<Result()> action;

  RatioArgs ratio;
  auto* c_ratio = app.add_subcommand("ratio", "optimal rounding ratio against the hard distributions");
  c_ratio->add_option("--problem", ratio.problem, "maxcut or nae3")->required()
      ->check(CLI::IsMember({"maxcut", "nae3"}));
  c_ratio->add_option("--N", ratio.n, "cells in the refinement phase (even)");
  c_ratio->add_option("--grid", ratio.grid, "coarse grid points per axis")->check(CLI::PositiveNumber);
  c_ratio->add_option("--coarse-N", ratio.coarse_n, "cells in the coarse phase (even)");
  c_ratio->add_option("--refine-rounds", ratio.rounds, "golden-section rounds")->check(CLI::NonNegativeNumber);
  c_ratio->add_flag("--no-rho0-one", ratio.no_rho0_one, "skip the rho0 = 1 family (NAE-3)");
  c_ratio->add_option("--f-out", ratio.f_out, "CSV of the optimal f at the hardest point");
  c_ratio->callback([&] { action = [&] { return DoRatio(ratio); }; });

  CurveArgs curve;
  auto* c_curve = app.add_subcommand("curve", "soundness against completeness");
  c_curve->add_option("--problem", curve.problem)->check(CLI::IsMember({"maxcut", "nae3"}));
  c_curve->add_option("--N", curve.n, "cells (even)");
  c_curve->add_option("--alphas", curve.alphas, "alpha grid points");
  c_curve->add_option("--rhos", curve.rhos, "rho grid points");
  c_curve->add_option("--buckets", curve.buckets, "completeness buckets")->check(CLI::PositiveNumber);
  c_curve->add_flag("--raw", curve.raw, "every grid point instead of the lower envelope");
  c_curve->callback([&] { action = [&] { return DoCurve(curve); }; });

  std::string which;
  auto* c_bound = app.add_subcommand("bound", "hardness bounds");
  c_bound->add_option("which", which, "nae35")->required()->check(CLI::IsMember({"nae35"}));
  c_bound->callback([&] { action = [&] { return DoBound(which); }; });

  GapArgs gap;
  auto* c_gap = app.add_subcommand("gap", "explicit MAX NAE-{3,5} gap instances");
  c_gap->require_subcommand(1);
  auto add_gap_common = [&](CLI::App* s) {
    s->add_option("--n", gap.n, "dimension (>= 12)");
    s->add_option("--m3", gap.m3, "sampled 3-clauses");
    s->add_option("--m5", gap.m5, "sampled 5-clauses");
    s->add_option("--seed", gap.seed);
  };
  auto* c_gen = c_gap->add_subcommand("gen", "write instance and vector files");
  add_gap_common(c_gen);
  c_gen->add_option("--out-prefix", gap.out_prefix, "writes <prefix>.nae and <prefix>.vec")->required();
  c_gen->callback([&] { action = [&] { return DoGapGen(gap); }; });
  auto* c_eval = c_gap->add_subcommand("eval", "evaluate a p1/p2 rounding rule");
  add_gap_common(c_eval);
  c_eval->add_option("--p1", gap.p1, "P[x = 1] with 3 positive coordinates (default: tuned)");
  c_eval->add_option("--p2", gap.p2, "P[x = 1] with 2 positive coordinates");
  c_eval->add_option("--trials", gap.trials);
  c_eval->add_option("--moment-samples", gap.moment_samples, "sunflower samples per trial");
  c_eval->callback([&] { action = [&] { return DoGapEval(gap); }; });

  StepoptArgs so;
  auto* c_so = app.add_subcommand("stepopt", "optimize step rounding functions (conjectured ratios)");
  c_so->add_option("--K", so.k, "clause sizes, comma separated");
  c_so->add_option("--steps", so.steps, "number of values b_0..b_l");
  c_so->add_flag("--pm1", so.pm1, "values fixed to alternating -1, +1");
  c_so->add_option("--restarts", so.restarts);
  c_so->add_option("--seed", so.seed);
  c_so->add_option("--max-evals", so.max_evals, "objective evaluations per restart");
  c_so->add_option("--f-out", so.f_out, "write the best f as JSON");
  c_so->callback([&] { action = [&] { return DoStepopt(so); }; });

  SweepArgs sw;
  auto* c_sw = app.add_subcommand("sweep", "effect of one extra breakpoint");
  c_sw->add_option("--base", sw.base, "f spec")->required();
  c_sw->add_option("--K", sw.k, "clause sizes, comma separated");
  c_sw->add_option("--range", sw.range, "lo:hi:step for the new breakpoint");
  c_sw->callback([&] { action = [&] { return DoSweep(sw); }; });

  int hk = 2;
  int angles = 720;
  auto* c_h = app.add_subcommand("hermite", "Hermite coefficient regions");
  c_h->require_subcommand(1);
  auto* c_hb = c_h->add_subcommand("boundary", "extreme points of the (c1, c3) region");
  c_hb->add_option("--k", hk, "number of odd coefficients");
  c_hb->add_option("--angles", angles, "directions");
  c_hb->callback([&] { action = [&] { return DoHermiteBoundary(hk, angles); }; });

  RoundArgs rd;
  auto* c_rd = app.add_subcommand("round", "RPR2 rounding of an instance");
  c_rd->add_option("--instance", rd.instance)->required();
  c_rd->add_option("--vectors", rd.vectors)->required();
  c_rd->add_option("--f", rd.f, "f spec");
  c_rd->add_option("--rounds", rd.rounds);
  c_rd->add_option("--seed", rd.seed);
  c_rd->add_option("--assignment-out", rd.assignment_out, "write the best assignment");
  c_rd->callback([&] { action = [&] { return DoRound(rd); }; });

  WitnessArgs wa;
  auto* c_w = app.add_subcommand("witness", "moment counterexamples");
  c_w->require_subcommand(1);
  auto* c_wf = c_w->add_subcommand("f4neg", "positive biases with negative F4");
  c_wf->add_option("--delta", wa.delta);
  c_wf->add_option("--eps", wa.eps);
  c_wf->add_option("--samples", wa.samples);
  c_wf->add_option("--seed", wa.seed);
  c_wf->callback([&] { action = [&] { return DoWitness(wa); }; });

  std::string replay_path;
  auto* c_replay = app.add_subcommand("replay", "re-run the command recorded in a manifest");
  c_replay->add_option("manifest", replay_path)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  if (c_replay->parsed()) {
    try {
      const json m = json::parse(ReadFile(replay_path));
      return Run(m.at("argv").get<std::vector<std::string>>(), out, err);
    } catch (const json::exception& e) {
      err << "rpr2 replay: bad manifest: " << e.what() << '\n';
      return kUsage;
    } catch (const UsageError& e) {
      err << "rpr2 replay: " << e.what() << '\n';
      return kUsage;
    }
  }

  CLI::App* sub = app.get_subcommands().front();
  std::string name = sub->get_name();
  while (!sub->get_subcommands().empty()) {
    sub = sub->get_subcommands().front();
    name += " " + sub->get_name();
  }
  if (threads > 0) SetThreadCount(threads);

  Result res;
  try {
    res = action();
  } catch (const UsageError& e) {
    err << "rpr2 " << name << ": " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "rpr2 " << name << ": input error at " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "rpr2 " << name << ": " << e.what() << '\n';
    return kNumeric;
  }

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  json manifest = {{"tool", "rpr2"},
                   {"version", kVersion},
                   {"subcommand", name},
                   {"argv", args},
                   {"params", Params(sub)},
                   {"threads", ThreadCount()},
                   {"outputs", res.files},
                   {"wall_clock_seconds", wall}};
  if (!res.notes.empty()) manifest["notes"] = res.notes;

  try {
    std::string text = res.is_json ? res.body.dump(2) + "\n" : res.text;
    if (!out_path.empty()) {
      WriteFile(out_path, text);
      manifest["outputs"].push_back(out_path);
      const std::string mp = manifest_path.empty() ? out_path + ".manifest.json" : manifest_path;
      WriteFile(mp, manifest.dump(2) + "\n");
    } else if (!manifest_path.empty()) {
      out << text;
      WriteFile(manifest_path, manifest.dump(2) + "\n");
    } else if (res.is_json) {
      res.body["manifest"] = manifest;
      out << res.body.dump(2) << '\n';
    } else {
      out << text;
      err << "manifest: " << manifest.dump() << '\n';
    }
  } catch (const UsageError& e) {
    err << "rpr2 " << name << ": " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace rpr2::cli
