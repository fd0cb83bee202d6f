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

#include "rpr2/pipeline.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string_view>

#include "rpr2/errors.h"
#include "rpr2/parallel.h"
#include "rpr2/random.h"

namespace rpr2 {
namespace {

constexpr uint64_t kProjectionStream = 1;
constexpr uint64_t kCoinStream = 2;
constexpr uint64_t kNoiseStream = 3;

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

// Splits on '\n' and strips a trailing '\r'.
std::vector<std::string_view> Lines(const std::string& text) {
  std::vector<std::string_view> out;
  std::string_view rest(text);
  while (!rest.empty()) {
    const size_t nl = rest.find('\n');
    std::string_view line = rest.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    if (nl == std::string_view::npos) break;
    rest.remove_prefix(nl + 1);
  }
  return out;
}

bool IsSkippable(const std::vector<std::string_view>& tok) {
  return tok.empty() || tok[0][0] == 'c' || tok[0][0] == '#';
}

long long ToInt(std::string_view s, int line, const char* what) {
  long long v = 0;
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

double ToDouble(std::string_view s, int line, const char* what) {
  // std::from_chars for double is missing from older libstdc++.
  const std::string str(s);
  char* end = nullptr;
  const double v = std::strtod(str.c_str(), &end);
  if (str.empty() || end != str.c_str() + str.size() || !std::isfinite(v)) {
    throw ParseError(line, std::string("bad ") + what + " '" + str + "'");
  }
  return v;
}

}  // namespace

NaeInstance ParseInstance(const std::string& text) {
  const auto lines = Lines(text);
  int num_vars = -1;
  long long declared = -1;
  int header_line = 0;
  std::vector<NaeClause> clauses;
  for (size_t ln = 0; ln < lines.size(); ++ln) {
    const int line = static_cast<int>(ln) + 1;
    const auto tok = Tokens(lines[ln]);
    if (IsSkippable(tok)) continue;
    if (tok[0] == "p") {
      if (num_vars >= 0) throw ParseError(line, "second header");
      if (tok.size() != 4 || tok[1] != "nae") {
        throw ParseError(line, "expected 'p nae <num_vars> <num_clauses>'");
      }
      const long long nv = ToInt(tok[2], line, "variable count");
      declared = ToInt(tok[3], line, "clause count");
      if (nv < 0 || declared < 0 || nv > INT32_MAX) {
        throw ParseError(line, "negative or oversized count");
      }
      num_vars = static_cast<int>(nv);
      header_line = line;
      continue;
    }
    if (num_vars < 0) throw ParseError(line, "clause before the header");
    if (tok.size() < 2) throw ParseError(line, "clause needs a weight and a size");
    NaeClause c;
    c.weight = ToDouble(tok[0], line, "weight");
    const long long k = ToInt(tok[1], line, "clause size");
    if (k < 0 || static_cast<size_t>(k) + 2 != tok.size()) {
      throw ParseError(line, "clause size does not match the literal count");
    }
    for (long long i = 0; i < k; ++i) {
      const long long lit = ToInt(tok[2 + i], line, "literal");
      if (lit == 0 || std::llabs(lit) > num_vars) {
        throw ParseError(line, "literal " + std::to_string(lit) + " out of range");
      }
      c.literals.push_back(static_cast<int>(lit));
    }
    try {
      NaeInstance single(num_vars, {c});
    } catch (const DomainError& e) {
      throw ParseError(line, e.what());
    }
    clauses.push_back(std::move(c));
  }
  if (num_vars < 0) throw ParseError(static_cast<int>(lines.size()), "missing header");
  if (static_cast<long long>(clauses.size()) != declared) {
    throw ParseError(header_line, "header declares " + std::to_string(declared) +
                                      " clauses, found " +
                                      std::to_string(clauses.size()));
  }
  return NaeInstance(num_vars, std::move(clauses));
}

std::string FormatInstance(const NaeInstance& instance) {
  std::ostringstream out;
  out.precision(17);
  out << "p nae " << instance.num_vars() << ' ' << instance.clauses().size() << '\n';
  for (const auto& c : instance.clauses()) {
    out << c.weight << ' ' << c.literals.size();
    for (int lit : c.literals) out << ' ' << lit;
    out << '\n';
  }
  return out.str();
}

VectorAssignment ParseVectors(const std::string& text) {
  const auto lines = Lines(text);
  int num_vars = -1;
  int dim = -1;
  int header_line = 0;
  std::vector<std::vector<VectorAssignment::Entry>> vecs;
  std::vector<int> defined_at;
  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  for (size_t ln = 0; ln < lines.size(); ++ln) {
    const int line = static_cast<int>(ln) + 1;
    const auto tok = Tokens(lines[ln]);
    if (IsSkippable(tok)) continue;
    if (tok[0] == "v") {
      if (num_vars >= 0) throw ParseError(line, "second header");
      if (tok.size() != 3) throw ParseError(line, "expected 'v <num_vars> <dim>'");
      const long long nv = ToInt(tok[1], line, "variable count");
      const long long d = ToInt(tok[2], line, "dimension");
      if (nv < 0 || d < 1 || nv > INT32_MAX || d > INT32_MAX) {
        throw ParseError(line, "bad header counts");
      }
      num_vars = static_cast<int>(nv);
      dim = static_cast<int>(d);
      vecs.assign(num_vars, {});
      defined_at.assign(num_vars, 0);
      header_line = line;
      continue;
    }
    if (num_vars < 0) throw ParseError(line, "vector before the header");
    const long long id = ToInt(tok[0], line, "variable id");
    if (id < 1 || id > num_vars) throw ParseError(line, "variable id out of range");
    if (defined_at[id - 1] != 0) {
      throw ParseError(line, "variable " + std::to_string(id) +
                                 " already defined on line " +
                                 std::to_string(defined_at[id - 1]));
    }
    defined_at[id - 1] = line;
    auto& v = vecs[id - 1];
    if (tok.size() >= 2 && (tok[1] == "s" || tok[1] == "s3")) {
      const bool signs = tok[1] == "s3";
      for (size_t t = 2; t < tok.size(); ++t) {
        const size_t colon = tok[t].find(':');
        if (colon == std::string_view::npos) {
          throw ParseError(line, "sparse entry needs 'idx:value'");
        }
        const long long idx = ToInt(tok[t].substr(0, colon), line, "coordinate");
        if (idx < 1 || idx > dim) throw ParseError(line, "coordinate out of range");
        double val;
        if (signs) {
          const long long s = ToInt(tok[t].substr(colon + 1), line, "sign");
          if (s != 1 && s != -1) throw ParseError(line, "sign must be +-1");
          val = s * inv_sqrt3;
        } else {
          val = ToDouble(tok[t].substr(colon + 1), line, "value");
        }
        for (const auto& e : v) {
          if (e.first == idx - 1) throw ParseError(line, "coordinate repeated");
        }
        v.emplace_back(static_cast<int>(idx - 1), val);
      }
    } else {
      if (tok.size() != static_cast<size_t>(dim) + 1) {
        throw ParseError(line, "dense vector needs " + std::to_string(dim) +
                                   " entries");
      }
      for (int j = 0; j < dim; ++j) {
        const double val = ToDouble(tok[1 + j], line, "value");
        if (val != 0.0) v.emplace_back(j, val);
      }
    }
    double norm2 = 0.0;
    for (const auto& e : v) norm2 += e.second * e.second;
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-9) {
      throw ParseError(line, "vector is not unit length");
    }
  }
  if (num_vars < 0) throw ParseError(static_cast<int>(lines.size()), "missing header");
  for (int i = 0; i < num_vars; ++i) {
    if (defined_at[i] == 0) {
      throw ParseError(header_line, "variable " + std::to_string(i + 1) +
                                        " has no vector");
    }
  }
  return VectorAssignment(dim, std::move(vecs), 1e-9);
}

std::string FormatVectors(const VectorAssignment& vectors) {
  std::ostringstream out;
  out.precision(17);
  out << "v " << vectors.num_vars() << ' ' << vectors.dim() << '\n';
  for (int v = 1; v <= vectors.num_vars(); ++v) {
    out << v << " s";
    for (const auto& [idx, val] : vectors.vector(v)) out << ' ' << idx + 1 << ':' << val;
    out << '\n';
  }
  return out.str();
}

Assignment Rpr2Round(const VectorAssignment& vectors, const StepFunction& f,
                     uint64_t seed, uint64_t round) {
  const CounterRng rng(seed);
  const uint64_t proj = HashKey(round, kProjectionStream, 0);
  const uint64_t coin = HashKey(round, kCoinStream, 0);
  std::vector<double> r(vectors.dim());
  for (int j = 0; j < vectors.dim(); ++j) r[j] = rng.Normal(proj, j);
  Assignment x(vectors.num_vars());
  for (int v = 1; v <= vectors.num_vars(); ++v) {
    const double pr = (1.0 + f(vectors.Dot(v, r))) / 2.0;
    x[v - 1] = rng.Uniform(coin, v) < pr ? 1 : -1;
  }
  return x;
}

double Evaluate(const NaeInstance& instance, const Assignment& x) {
  if (static_cast<int>(x.size()) < instance.num_vars()) {
    throw StructuralError("assignment covers " + std::to_string(x.size()) +
                          " of " + std::to_string(instance.num_vars()) +
                          " variables");
  }
  double sat = 0.0;
  double total = 0.0;
  for (const auto& c : instance.clauses()) {
    bool pos = false;
    bool neg = false;
    for (int lit : c.literals) {
      const int v = std::abs(lit);
      if (v > static_cast<int>(x.size())) {
        throw StructuralError("variable " + std::to_string(v) + " out of range");
      }
      const int xv = x[v - 1];
      if (xv != 1 && xv != -1) {
        throw StructuralError("assignment value of variable " +
                              std::to_string(v) + " is not +-1");
      }
      ((lit > 0 ? xv : -xv) > 0 ? pos : neg) = true;
    }
    total += c.weight;
    if (pos && neg) sat += c.weight;
  }
  return total > 0.0 ? sat / total : 1.0;
}

double RandomBaseline(const NaeInstance& instance) {
  double sat = 0.0;
  double total = 0.0;
  for (const auto& c : instance.clauses()) {
    const int k = static_cast<int>(c.literals.size());
    sat += c.weight * (1.0 - std::ldexp(1.0, 1 - k));
    total += c.weight;
  }
  return total > 0.0 ? sat / total : 1.0;
}

RoundsResult BestOfRounds(const NaeInstance& instance,
                          const VectorAssignment& vectors,
                          const StepFunction& f, int rounds, uint64_t seed) {
  if (rounds < 1) throw DomainError("rounds must be at least 1");
  if (vectors.num_vars() != instance.num_vars()) {
    throw StructuralError("instance has " + std::to_string(instance.num_vars()) +
                          " variables but " + std::to_string(vectors.num_vars()) +
                          " vectors were given");
  }
  RoundsResult res;
  res.fractions.assign(rounds, 0.0);
  ParallelFor(rounds, [&](size_t r) {
    res.fractions[r] = Evaluate(instance, Rpr2Round(vectors, f, seed, r));
  });
  int best = 0;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int r = 0; r < rounds; ++r) {
    if (res.fractions[r] > res.fractions[best]) best = r;
    sum += res.fractions[r];
    sum_sq += res.fractions[r] * res.fractions[r];
  }
  res.fraction = res.fractions[best];
  res.best = Rpr2Round(vectors, f, seed, best);
  res.mean = sum / rounds;
  if (rounds > 1) {
    const double var =
        std::max(0.0, (sum_sq - rounds * res.mean * res.mean) / (rounds - 1));
    res.std_error = std::sqrt(var / rounds);
  }
  return res;
}

Assignment NoiseAssignment(const Assignment& x, double delta, uint64_t seed) {
  if (!(delta >= 0.0 && delta <= 0.5)) {
    throw DomainError("delta must lie in [0, 1/2]");
  }
  const CounterRng rng(seed);
  Assignment y(x);
  for (size_t i = 0; i < y.size(); ++i) {
    const double u = rng.Uniform(kNoiseStream, i);
    if (u < delta) {
      y[i] = 1;
    } else if (u < 2.0 * delta) {
      y[i] = -1;
    }
  }
  return y;
}

PqValues PqValuesAt(int k, double delta) {
  if (k < 1) throw DomainError("k must be at least 1");
  if (!(delta >= 0.0 && delta <= 0.5)) {
    throw DomainError("delta must lie in [0, 1/2]");
  }
  PqValues v;
  v.q = std::pow(1.0 - 2.0 * delta, k);
  v.p = 1.0 - 2.0 * std::pow(1.0 - delta, k) + v.q;
  return v;
}

double DeltaForEps(int k, double eps) {
  if (k < 1) throw DomainError("k must be at least 1");
  if (!(eps >= 0.0 && eps <= 2.0)) throw DomainError("eps must lie in [0, 2]");
  return (1.0 - std::pow(1.0 - eps / 2.0, 1.0 / k)) / 2.0;
}

}  // namespace rpr2
