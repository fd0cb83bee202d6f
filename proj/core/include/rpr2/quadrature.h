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

#ifndef RPR2_QUADRATURE_H_
#define RPR2_QUADRATURE_H_

#include <functional>
#include <vector>

namespace rpr2 {

// Adaptive Gauss-Kronrod (61 point) integration of f over [lo, hi], split at
// every point of `breaks` that falls strictly inside. `tol` is the relative
// tolerance handed to each panel.
double Integrate(const std::function<double(double)>& f, double lo, double hi,
                 const std::vector<double>& breaks = {}, double tol = 1e-13);

}  // namespace rpr2

#endif  // RPR2_QUADRATURE_H_
