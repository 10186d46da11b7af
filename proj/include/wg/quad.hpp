// Copyright 2026 The wilsonlab Authors
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

#pragma once

#include <functional>

namespace wg::quad {

/// Adaptive Gauss-Kronrod (G7, K15) integration of f over [a, b] to the
/// requested absolute tolerance; splits the worst interval until the summed
/// error estimate is below tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-12, int max_intervals = 4096);

}  // namespace wg::quad
