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

#include "wg/quad.hpp"

#include <cmath>
#include <queue>
#include <vector>

namespace wg::quad {

namespace {

// Kronrod-15 abscissae on [-1, 1] (QUADPACK dqk15 constants) and weights;
// the even-indexed points carry the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel evaluate(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double fc = f(c);
  double kron = kWgk[7] * fc;
  double gauss = kWg[3] * fc;  // the center node belongs to both rules
  for (int i = 0; i < 7; ++i) {
    const double x = h * kXgk[i];
    const double pair = f(c - x) + f(c + x);
    kron += kWgk[i] * pair;
    if (i % 2 == 1) gauss += kWg[i / 2] * pair;  // odd indices carry Gauss-7
  }
  return Panel{a, b, kron * h, std::abs(kron - gauss) * h};
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol, int max_intervals) {
  if (a == b) return 0.0;
  std::priority_queue<Panel> q;
  q.push(evaluate(f, a, b));
  double total_err = q.top().error;
  int n = 1;
  while (total_err > tol && n < max_intervals) {
    Panel worst = q.top();
    q.pop();
    total_err -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = evaluate(f, worst.a, mid);
    Panel right = evaluate(f, mid, worst.b);
    total_err += left.error + right.error;
    q.push(left);
    q.push(right);
    ++n;
  }
  double acc = 0.0;
  while (!q.empty()) {
    acc += q.top().value;
    q.pop();
  }
  return acc;
}

}  // namespace wg::quad
