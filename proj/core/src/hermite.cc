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


#include "rpr2/hermite.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rpr2/errors.h"
#include "rpr2/normal.h"

namespace rpr2 {
namespace {

double Horner(const std::vector<double>& c, double x) {
  double s = 0.0;
  for (size_t j = c.size(); j-- > 0;) s = s * x + c[j];
  return s;
}

void Trim(std::vector<double>* p) {
  double big = 0.0;
  for (double v : *p) big = std::max(big, std::abs(v));
  while (!p->empty() && std::abs(p->back()) <= 1e-13 * big) p->pop_back();
}

// Remainder of a / b for polynomials with lowest degree first.
std::vector<double> Remainder(std::vector<double> a, const std::vector<double>& b) {
  const size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const double q = a.back() / b.back();
    const size_t shift = a.size() - 1 - db;
    for (size_t j = 0; j <= db; ++j) a[shift + j] -= q * b[j];
    a.pop_back();
  }
  Trim(&a);
  return a;
}

class Sturm {
 public:
  explicit Sturm(const std::vector<double>& p) {
    seq_.push_back(p);
    std::vector<double> d(p.size() - 1);
    for (size_t j = 1; j < p.size(); ++j) d[j - 1] = j * p[j];
    Trim(&d);
    if (d.empty()) return;
    seq_.push_back(d);
    while (seq_.back().size() > 1) {
      std::vector<double> r = Remainder(seq_[seq_.size() - 2], seq_.back());
      if (r.empty()) break;
      for (double& v : r) v = -v;
      seq_.push_back(r);
    }
  }

  int SignChanges(double x) const {
    int changes = 0;
    int prev = 0;
    for (const auto& p : seq_) {
      const double v = Horner(p, x);
      const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
    return changes;
  }

  // Distinct roots in (lo, hi].
  int Count(double lo, double hi) const { return SignChanges(lo) - SignChanges(hi); }

 private:
  std::vector<std::vector<double>> seq_;
};

std::string Echo(const std::vector<double>& q) {
  std::ostringstream out;
  out.precision(17);
  for (size_t j = 0; j < q.size(); ++j) out << (j ? " + " : "") << q[j] << " y^" << j;
  return out.str();
}

// Odd-multiplicity roots of q in (lo, hi].
void Isolate(const Sturm& s, const std::vector<double>& q, double lo, double hi,
             int depth, std::vector<double>* roots) {
  const int n = s.Count(lo, hi);
  if (n == 0) return;
  if (n == 1 || hi - lo < 1e-13 * std::max(1.0, hi)) {
    double flo = Horner(q, lo);
    const double fhi = Horner(q, hi);
    if (fhi == 0.0) {
      roots->push_back(hi);
      return;
    }
    if ((flo > 0) == (fhi > 0)) return;  // even multiplicity
    double a = lo;
    double b = hi;
    while (b - a > 1e-14 * std::max(1.0, b)) {
      const double m = 0.5 * (a + b);
      const double fm = Horner(q, m);
      if (fm == 0.0) {
        a = b = m;
        break;
      }
      if ((fm > 0) == (flo > 0)) {
        a = m;
        flo = fm;
      } else {
        b = m;
      }
    }
    roots->push_back(0.5 * (a + b));
    return;
  }
  if (depth > 200) throw NumericError("root isolation failed for " + Echo(q));
  const double mid = 0.5 * (lo + hi);
  Isolate(s, q, lo, mid, depth + 1, roots);
  Isolate(s, q, mid, hi, depth + 1, roots);
}

}  // namespace

double MatchingsCount(int l, int n) {
  if (l < 0 || n < 0 || 2 * l > n) return 0.0;
  double m = 1.0;
  for (int i = 1; i <= l; ++i) {
    m = m * ((n - 2.0 * i + 2.0) * (n - 2.0 * i + 1.0)) / (2.0 * i);
  }
  return m;
}

HermitePoly::HermitePoly(int n) : n_(n) {
  if (n < 0) throw DomainError("Hermite degree must be non-negative");
  ic_.assign(n + 1, 0.0);
  for (int l = 0; 2 * l <= n; ++l) {
    ic_[n - 2 * l] = (l % 2 == 0 ? 1.0 : -1.0) * MatchingsCount(l, n);
  }
  scale_ = std::exp(-0.5 * std::lgamma(n + 1.0));
}

std::vector<double> HermitePoly::coeffs() const {
  std::vector<double> c(ic_);
  for (double& v : c) v *= scale_;
  return c;
}

double HermitePoly::operator()(double x) const { return scale_ * Horner(ic_, x); }

std::vector<double> HermiteValues(int max_degree, double x) {
  if (max_degree < 0) throw DomainError("Hermite degree must be non-negative");
  std::vector<double> h(max_degree + 1);
  h[0] = 1.0;
  if (max_degree >= 1) h[1] = x;
  for (int n = 1; n < max_degree; ++n) {
    h[n + 1] = (x * h[n] - std::sqrt(static_cast<double>(n)) * h[n - 1]) /
               std::sqrt(n + 1.0);
  }
  return h;
}

std::vector<double> HermiteCoeffs(const StepFunction& f, int max_degree) {
  if (max_degree < 0) throw DomainError("Hermite degree must be non-negative");
  const std::vector<double> e = f.LineEdges();
  const std::vector<double> v = f.LineValues();
  const size_t m = v.size();
  // g[p][n] = H_n(e_p) phi(e_p), zero at the infinite ends.
  std::vector<std::vector<double>> g(m + 1, std::vector<double>(max_degree + 1, 0.0));
  for (size_t p = 1; p < m; ++p) {
    g[p] = HermiteValues(max_degree, e[p]);
    const double ph = NormalPdf(e[p]);
    for (double& x : g[p]) x *= ph;
  }
  std::vector<double> c(max_degree + 1, 0.0);
  for (size_t p = 0; p < m; ++p) {
    const double lo = NormalCdf(e[p]);
    const double hi = p + 1 == m ? 1.0 : NormalCdf(e[p + 1]);
    c[0] += v[p] * (hi - lo);
    for (int n = 1; n <= max_degree; ++n) {
      c[n] += v[p] * (g[p][n - 1] - g[p + 1][n - 1]) / std::sqrt(static_cast<double>(n));
    }
  }
  for (int n = 0; n <= max_degree; n += 2) {
    if (std::abs(c[n]) > 1e-12) {
      throw NumericError("even Hermite coefficient of an odd function is " +
                         std::to_string(c[n]));
    }
    c[n] = 0.0;
  }
  return c;
}

double HermiteSeries(const std::vector<double>& c, double x) {
  if (c.empty()) return 0.0;
  const std::vector<double> h = HermiteValues(static_cast<int>(c.size()) - 1, x);
  double s = 0.0;
  for (size_t i = 0; i < c.size(); ++i) s += c[i] * h[i];
  return s;
}

std::vector<double> DampedCoeffs(const std::vector<double>& c, double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError("eta must lie in [0,1]");
  std::vector<double> d(c.size());
  double w = 1.0;
  for (size_t i = 0; i < c.size(); ++i) {
    d[i] = c[i] * w;
    w *= eta;
  }
  return d;
}

ExtremePoint MaxCoeffExtremePoint(const std::vector<double>& alpha) {
  const int k = static_cast<int>(alpha.size());
  if (std::none_of(alpha.begin(), alpha.end(), [](double a) { return a != 0.0; })) {
    throw DomainError("direction must be nonzero");
  }
  // P(x) = x Q(x^2); the positive roots of P are the square roots of the
  // positive roots of Q.
  std::vector<double> q(k, 0.0);
  for (int i = 0; i < k; ++i) {
    if (alpha[i] == 0.0) continue;
    const HermitePoly h(2 * i + 1);
    for (int j = 0; j <= i; ++j) {
      q[j] += alpha[i] * h.scale() * h.integer_coeffs()[2 * j + 1];
    }
  }
  Trim(&q);
  while (!q.empty() && q.front() == 0.0) q.erase(q.begin());
  std::vector<double> yroots;
  if (q.size() > 1) {
    double bound = 0.0;
    for (size_t j = 0; j + 1 < q.size(); ++j) bound = std::max(bound, std::abs(q[j] / q.back()));
    const Sturm s(q);
    Isolate(s, q, 0.0, 1.0 + bound, 0, &yroots);
    std::sort(yroots.begin(), yroots.end());
  }
  auto poly = [&](double x) {
    double s = 0.0;
    const std::vector<double> h = HermiteValues(2 * k - 1, x);
    for (int i = 0; i < k; ++i) s += alpha[i] * h[2 * i + 1];
    return s;
  };
  ExtremePoint out;
  std::vector<double> values;
  double prev = 0.0;
  for (double y : yroots) {
    const double x = std::sqrt(y);
    if (x <= prev) continue;
    out.roots.push_back(x);
    prev = x;
  }
  for (size_t i = 0; i <= out.roots.size(); ++i) {
    const double lo = i == 0 ? 0.0 : out.roots[i - 1];
    const double x = i < out.roots.size() ? 0.5 * (lo + out.roots[i]) : lo + 1.0;
    values.push_back(poly(x) >= 0.0 ? 1.0 : -1.0);
  }
  out.f = StepFunction(out.roots, values);
  const std::vector<double> c = HermiteCoeffs(out.f, 2 * k - 1);
  for (int i = 0; i < k; ++i) out.coeffs.push_back(c[2 * i + 1]);
  return out;
}

std::vector<BoundaryPoint> P2Boundary(int angles) {
  if (angles < 1) throw DomainError("need at least one angle");
  std::vector<BoundaryPoint> pts;
  pts.reserve(angles);
  for (int j = 0; j < angles; ++j) {
    const double t = 2.0 * std::numbers::pi * j / angles;
    const ExtremePoint e = MaxCoeffExtremePoint({std::cos(t), std::sin(t)});
    pts.push_back({t, e.coeffs[0], e.coeffs[1]});
  }
  return pts;
}

}  // namespace rpr2
