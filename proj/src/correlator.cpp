// Copyright 2026 The rindler_spin Authors
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

#include "rindler_spin/correlator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "rindler_spin/errors.hpp"
#include "rindler_spin/quadrature.hpp"
#include "rindler_spin/simd/kernels.hpp"

namespace rindler_spin {

namespace {

using std::numbers::pi;
using cplx = std::complex<double>;

// Adaptive integral of exp(i * phase_sign * s / alpha) / sinh^4((s - i eps)/2)
// over [-window, window]. phase_sign is -1, 0 or +1.
quad::Result<cplx> regulated_integral(double alpha, double eps, int phase_sign, double window) {
  const simd::KernelTable& kernels = simd::active_kernels();
  const double ce = std::cos(0.5 * eps);
  const double se = std::sin(0.5 * eps);
  const double freq = phase_sign / alpha;

  auto panel = [&](double lo, double hi) {
    const quad::PanelNodes nodes = quad::panel_nodes(lo, hi);
    // 15 nodes padded to 16 lanes; the pad carries zero weight.
    std::array<double, 16> sh{}, ch{}, cp{}, sp{}, wk{}, wg{};
    for (std::size_t i = 0; i < 16; ++i) {
      const double s = i < 15 ? nodes.x[i] : nodes.x[7];
      sh[i] = std::sinh(0.5 * s);
      ch[i] = std::cosh(0.5 * s);
      cp[i] = phase_sign == 0 ? 1.0 : std::cos(freq * s);
      sp[i] = phase_sign == 0 ? 0.0 : std::sin(freq * s);
      wk[i] = i < 15 ? nodes.kronrod_w[i] : 0.0;
      wg[i] = i < 15 ? nodes.gauss_w[i] : 0.0;
    }
    const simd::RatePanelSums sums = kernels.rate_panel({sh, ch, cp, sp, wk, wg, ce, se});
    quad::PanelEstimate<cplx> est;
    est.kronrod = {sums.kronrod_re, sums.kronrod_im};
    est.gauss = {sums.gauss_re, sums.gauss_im};
    est.abs_integral = sums.kronrod_abs;
    return est;
  };

  quad::Options opt;
  opt.rel_tol = 1e-11;
  opt.max_panels = 8000;
  return quad::integrate(panel, -window, window, opt);
}

struct Extrapolated {
  cplx value;
  double residual;  // relative
};

// Neville extrapolation to eps = 0 of the polynomial through (eps_k, v_k).
// The residual compares the full extrapolant with the one that drops the
// largest epsilon.
Extrapolated extrapolate_to_zero(const std::vector<double>& eps, const std::vector<cplx>& v) {
  auto neville = [&](std::size_t first) {
    std::vector<cplx> p(v.begin() + first, v.end());
    const std::size_t len = p.size();
    for (std::size_t level = 1; level < len; ++level) {
      for (std::size_t i = 0; i + level < len; ++i) {
        const double xi = eps[first + i];
        const double xj = eps[first + i + level];
        // Evaluate at 0.
        p[i] = (xi * p[i + 1] - xj * p[i]) / (xi - xj);
      }
    }
    return p[0];
  };
  const cplx full = neville(0);
  const cplx reduced = neville(1);
  const double scale = std::abs(full);
  const double residual = scale > 0.0 ? std::abs(full - reduced) / scale : std::abs(full - reduced);
  return {full, residual};
}

}  // namespace

void EpsilonSchedule::validate() const {
  if (epsilons.size() < 2) throw ArgumentError("epsilon schedule needs at least two regulators");
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (!(epsilons[i] > 0.0)) throw ArgumentError("epsilon schedule: regulators must be > 0");
    if (i > 0 && !(epsilons[i] < epsilons[i - 1])) {
      throw ArgumentError("epsilon schedule: regulators must be strictly decreasing");
    }
  }
  if (!(window > 0.0)) throw ArgumentError("epsilon schedule: window must be > 0");
  if (!(residual_tol > 0.0)) throw ArgumentError("epsilon schedule: residual_tol must be > 0");
}

std::complex<double> wightman_flat(std::complex<double> interval_sq, const PhysicalConstants& k) {
  if (interval_sq == 0.0) throw DomainError("wightman_flat: unregulated coincident points");
  return (4.0 * k.hbar * k.c / pi) / (interval_sq * interval_sq);
}

std::complex<double> wightman_rindler(double accel, double s, double eps,
                                      const PhysicalConstants& k) {
  if (!(accel > 0.0)) throw DomainError("wightman_rindler: acceleration must be > 0");
  if (s == 0.0 && eps == 0.0) throw DomainError("wightman_rindler: unregulated coincident points");
  const double c = k.c;
  const double prefactor = k.hbar * std::pow(accel, 4) / (4.0 * pi * std::pow(c, 7));
  const cplx sh = std::sinh(cplx(s, -eps) * (accel / (2.0 * c)));
  const cplx sh2 = sh * sh;
  return prefactor / (sh2 * sh2);
}

double bose_occupation(double alpha) {
  if (!(alpha > 0.0)) return 0.0;
  return 1.0 / std::expm1(2.0 * pi / alpha);
}

RateSet rates_closed(double alpha) {
  if (!(alpha >= 0.0)) throw DomainError("rates_closed: alpha must be >= 0");
  const double n = bose_occupation(alpha);
  const double weight = 1.0 + alpha * alpha;
  return {alpha, n, weight * n, weight * (n + 1.0), alpha * alpha * alpha / (4.0 * pi)};
}

NumericRates rates_numeric(double alpha, const EpsilonSchedule& schedule) {
  if (!(alpha > 0.0)) throw DomainError("rates_numeric: alpha must be > 0");
  if (alpha < kMinOracleAlpha) {
    throw NumericError("rates_numeric: alpha below the oscillation limit " +
                           std::to_string(kMinOracleAlpha) + "; use rates_closed",
                       alpha);
  }
  schedule.validate();

  std::vector<cplx> plus, minus, dephase;
  double quad_err = 0.0;
  for (double eps : schedule.epsilons) {
    const auto ip = regulated_integral(alpha, eps, -1, schedule.window);
    const auto im = regulated_integral(alpha, eps, +1, schedule.window);
    const auto iz = regulated_integral(alpha, eps, 0, schedule.window);
    for (const auto* r : {&ip, &im, &iz}) {
      quad_err = std::max(quad_err, r->error / std::abs(r->value));
    }
    plus.push_back(ip.value);
    minus.push_back(im.value);
    dephase.push_back(iz.value);
  }

  const Extrapolated xp = extrapolate_to_zero(schedule.epsilons, plus);
  const Extrapolated xm = extrapolate_to_zero(schedule.epsilons, minus);
  const Extrapolated xz = extrapolate_to_zero(schedule.epsilons, dephase);

  const double worst = std::max({xp.residual, xm.residual, xz.residual});
  if (worst > schedule.residual_tol) {
    throw NumericError("rates_numeric: epsilon extrapolation did not settle at alpha = " +
                           std::to_string(alpha),
                       worst);
  }

  const double scale = 3.0 * alpha * alpha * alpha / (16.0 * pi);
  NumericRates out;
  out.rates.alpha = alpha;
  out.rates.g_plus = scale * xp.value.real();
  out.rates.g_minus = scale * xm.value.real();
  out.rates.g_z = 0.5 * scale * xz.value.real();
  const double gap = out.rates.g_minus - out.rates.g_plus;
  out.rates.n = gap > 0.0 ? out.rates.g_plus / gap : 0.0;
  out.residual_plus = xp.residual;
  out.residual_minus = xm.residual;
  out.residual_z = xz.residual;
  out.quadrature_error = quad_err;
  out.imaginary_ratio = std::max({std::abs(xp.value.imag() / xp.value.real()),
                                  std::abs(xm.value.imag() / xm.value.real()),
                                  std::abs(xz.value.imag() / xz.value.real())});
  return out;
}

}  // namespace rindler_spin
