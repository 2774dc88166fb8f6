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

#include "rindler_spin/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rindler_spin/errors.hpp"
#include "rindler_spin/simd/kernels.hpp"

namespace rindler_spin {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};
constexpr double kPositivityFloor = -1e-8;
constexpr std::size_t kDim = 32;

Matrix4c kron(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Matrix2c make_pauli(int i) {
  Matrix2c m;
  switch (i) {
    case 0:
      m << 1.0, 0.0, 0.0, 1.0;
      break;
    case 1:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case 2:
      m << 0.0, -kI, kI, 0.0;
      break;
    default:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
  }
  return m;
}

struct JumpOperators {
  Matrix4c lower;    // sigma_- (x) 1
  Matrix4c raise;    // sigma_+ (x) 1
  Matrix4c dephase;  // sigma_3 (x) 1
};

const JumpOperators& jumps() {
  static const JumpOperators ops = [] {
    const Matrix2c id = Matrix2c::Identity();
    const Matrix2c sm = 0.5 * (pauli(1) + kI * pauli(2));
    const Matrix2c sp = 0.5 * (pauli(1) - kI * pauli(2));
    return JumpOperators{kron(sm, id), kron(sp, id), kron(pauli(3), id)};
  }();
  return ops;
}

// (rate/2) [2 L rho L^dag - L^dag L rho - rho L^dag L]
Matrix4c dissipator(const Matrix4c& l, double rate, const Matrix4c& rho) {
  const Matrix4c ld = l.adjoint();
  const Matrix4c ldl = ld * l;
  return (0.5 * rate) * (2.0 * l * rho * ld - ldl * rho - rho * ldl);
}

std::array<double, kDim> to_vec(const Matrix4c& m) {
  std::array<double, kDim> v{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      v[4 * a + b] = m(a, b).real();
      v[16 + 4 * a + b] = m(a, b).imag();
    }
  return v;
}

Matrix4c from_vec(const std::array<double, kDim>& v) {
  Matrix4c m;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) m(a, b) = cplx(v[4 * a + b], v[16 + 4 * a + b]);
  return m;
}

void check_positive(const Matrix4c& m, double tau) {
  const Matrix4c herm = 0.5 * (m + m.adjoint());
  const double lo = Eigen::SelfAdjointEigenSolver<Matrix4c>(herm, Eigen::EigenvaluesOnly)
                        .eigenvalues()
                        .minCoeff();
  if (lo < kPositivityFloor) {
    throw NumericError("evolve_numeric: state lost positivity at tau = " + std::to_string(tau) +
                           "; reduce dt",
                       lo);
  }
}

// Fixed-step RK4 on the realified generator.
class Integrator {
 public:
  explicit Integrator(const LindbladSpec& spec)
      : spec_(spec), generator_(lindblad_generator(spec.rates)), kernels_(simd::active_kernels()) {}

  // Advances y by `span` using ceil(span / dt) equal steps.
  void advance(std::array<double, kDim>& y, double span, double tau_end) const {
    if (span <= 0.0) return;
    const auto steps = static_cast<std::size_t>(std::ceil(span / spec_.dt - 1e-12));
    const std::size_t n = std::max<std::size_t>(steps, 1);
    const double h = span / static_cast<double>(n);
    const std::size_t check_every = std::max<std::size_t>(n / 16, 1);

    std::array<double, kDim> k1, k2, k3, k4, tmp;
    const auto mv = [&](const std::array<double, kDim>& x, std::array<double, kDim>& out) {
      kernels_.matvec(generator_, x, out);
    };
    for (std::size_t step = 1; step <= n; ++step) {
      mv(y, k1);
      kernels_.axpy_to(0.5 * h, k1, y, tmp);
      mv(tmp, k2);
      kernels_.axpy_to(0.5 * h, k2, y, tmp);
      mv(tmp, k3);
      kernels_.axpy_to(h, k3, y, tmp);
      mv(tmp, k4);
      kernels_.axpy(h / 6.0, k1, y);
      kernels_.axpy(h / 3.0, k2, y);
      kernels_.axpy(h / 3.0, k3, y);
      kernels_.axpy(h / 6.0, k4, y);
      if (step % check_every == 0 || step == n) {
        check_positive(from_vec(y), tau_end - span + h * static_cast<double>(step));
      }
    }
  }

 private:
  const LindbladSpec& spec_;
  std::vector<double> generator_;
  const simd::KernelTable& kernels_;
};

}  // namespace

const Matrix2c& pauli(int i) {
  static const std::array<Matrix2c, 4> table = {make_pauli(0), make_pauli(1), make_pauli(2),
                                                make_pauli(3)};
  return table.at(static_cast<std::size_t>(i));
}

Matrix4c pauli_product(int i, int j) { return kron(pauli(i), pauli(j)); }

DensityMatrix DensityMatrix::checked(const Matrix4c& m) {
  const DensityMatrix rho(m);
  const double herm = rho.hermiticity_defect();
  if (herm > kHermitianTol) {
    throw ValidationError("density matrix is not Hermitian (defect " + std::to_string(herm) + ")");
  }
  if (std::abs(m.trace() - 1.0) > kTraceTol) {
    throw ValidationError("density matrix trace is not 1");
  }
  if (rho.min_eigenvalue() < -kEigenTol) {
    throw ValidationError("density matrix has a negative eigenvalue");
  }
  return rho;
}

double DensityMatrix::min_eigenvalue() const {
  const Matrix4c herm = 0.5 * (m_ + m_.adjoint());
  return Eigen::SelfAdjointEigenSolver<Matrix4c>(herm, Eigen::EigenvaluesOnly)
      .eigenvalues()
      .minCoeff();
}

double DensityMatrix::hermiticity_defect() const {
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
}

PauliCoefficients coeffs_from_density(const DensityMatrix& rho) {
  const double herm = rho.hermiticity_defect();
  if (herm > DensityMatrix::kHermitianTol) {
    throw ValidationError("coeffs_from_density: input is not Hermitian (defect " +
                          std::to_string(herm) + ")");
  }
  PauliCoefficients c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      c(i, j) = 0.25 * (rho.matrix() * pauli_product(i, j)).trace().real();
    }
  return c;
}

DecodedDensity density_from_coefficients(const PauliCoefficients& c) {
  if (std::abs(c(0, 0) - 0.25) > DensityMatrix::kTraceTol) {
    throw ValidationError("density_from_coefficients: r00 must be 1/4 (unit trace)");
  }
  Matrix4c m = Matrix4c::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (c(i, j) != 0.0) m += c(i, j) * pauli_product(i, j);
    }
  return {DensityMatrix::unchecked(m), bloch_norm(c) > 1.0 + 1e-12};
}

PauliCoefficients bell_state() {
  PauliCoefficients c;
  c(0, 0) = 0.25;
  c(1, 1) = 0.25;
  c(2, 2) = -0.25;
  c(3, 3) = 0.25;
  return c;
}

double bloch_norm(const PauliCoefficients& c) {
  double sum = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == 0 && j == 0) continue;
      sum += c(i, j) * c(i, j);
    }
  return sum * 16.0 / 3.0;
}

PauliCoefficients evolve_analytic(const PauliCoefficients& c0, const RateSet& rates, double tau) {
  if (!(tau >= 0.0)) throw DomainError("evolve_analytic: tau must be >= 0");
  const double flip = rates.g_minus + rates.g_plus;
  const double coherence = 0.5 * (flip + 4.0 * rates.g_z);
  const double decay_t = std::exp(-coherence * tau);
  const double decay_l = std::exp(-flip * tau);
  const double relaxed = -std::expm1(-flip * tau);  // 1 - exp(-flip tau)
  const double target = flip > 0.0 ? (rates.g_minus - rates.g_plus) / flip : 0.0;

  PauliCoefficients c = c0;
  for (int j = 0; j < 4; ++j) {
    c(1, j) = c0(1, j) * decay_t;
    c(2, j) = c0(2, j) * decay_t;
    c(3, j) = c0(3, j) * decay_l + target * c0(0, j) * relaxed;
  }
  return c;
}

PauliCoefficients steady_state(const PauliCoefficients& c0, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("steady_state: alpha must be > 0");
  const double polarization = std::tanh(std::numbers::pi / alpha);
  PauliCoefficients c;
  for (int j = 0; j < 4; ++j) {
    c(0, j) = c0(0, j);
    c(3, j) = polarization * c0(0, j);
  }
  return c;
}

void LindbladSpec::validate() const {
  if (!(dt > 0.0)) throw ArgumentError("LindbladSpec: dt must be > 0");
  const double fastest = std::max({rates.g_minus, rates.g_plus, 4.0 * rates.g_z});
  if (!(dt * fastest < 0.1)) {
    throw ArgumentError("LindbladSpec: dt * max rate must be < 0.1 (dt = " + std::to_string(dt) +
                        ", max rate = " + std::to_string(fastest) + ")");
  }
}

Matrix4c lindblad_rhs(const Matrix4c& rho, const RateSet& rates) {
  const JumpOperators& ops = jumps();
  return dissipator(ops.lower, rates.g_minus, rho) + dissipator(ops.raise, rates.g_plus, rho) +
         dissipator(ops.dephase, rates.g_z, rho);
}

std::vector<double> lindblad_generator(const RateSet& rates) {
  // Column (c,d) of the complex superoperator is the image of E_cd.
  std::vector<double> a(kDim * kDim, 0.0);
  for (int c = 0; c < 4; ++c)
    for (int d = 0; d < 4; ++d) {
      Matrix4c unit = Matrix4c::Zero();
      unit(c, d) = 1.0;
      const Matrix4c image = lindblad_rhs(unit, rates);
      const std::size_t col = 4 * c + d;
      for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) {
          const std::size_t row = 4 * p + q;
          const double re = image(p, q).real();
          const double im = image(p, q).imag();
          a[row * kDim + col] = re;
          a[row * kDim + col + 16] = -im;
          a[(row + 16) * kDim + col] = im;
          a[(row + 16) * kDim + col + 16] = re;
        }
    }
  return a;
}

DensityMatrix evolve_numeric(const DensityMatrix& rho0, const LindbladSpec& spec, double tau) {
  const double grid[2] = {0.0, tau};
  return evolve_numeric_path(rho0, spec, grid).back();
}

std::vector<DensityMatrix> evolve_numeric_path(const DensityMatrix& rho0, const LindbladSpec& spec,
                                               std::span<const double> tau_grid) {
  spec.validate();
  if (tau_grid.empty()) throw ArgumentError("evolve_numeric: empty tau grid");
  if (!(tau_grid.front() >= 0.0)) throw DomainError("evolve_numeric: tau must be >= 0");
  if (!std::is_sorted(tau_grid.begin(), tau_grid.end())) {
    throw ArgumentError("evolve_numeric: tau grid must be ascending");
  }
  (void)DensityMatrix::checked(rho0.matrix());

  const Integrator integrator(spec);
  std::array<double, kDim> y = to_vec(rho0.matrix());
  std::vector<DensityMatrix> out;
  out.reserve(tau_grid.size());
  double now = 0.0;
  for (double tau : tau_grid) {
    integrator.advance(y, tau - now, tau);
    now = tau;
    out.push_back(DensityMatrix::unchecked(from_vec(y)));
  }
  return out;
}

Matrix2c reduced_second(const DensityMatrix& rho) {
  const Matrix4c& m = rho.matrix();
  Matrix2c r;
  for (int b = 0; b < 2; ++b)
    for (int d = 0; d < 2; ++d) r(b, d) = m(b, d) + m(2 + b, 2 + d);
  return r;
}

Matrix2c reduced_first(const DensityMatrix& rho) {
  const Matrix4c& m = rho.matrix();
  Matrix2c r;
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c) r(a, c) = m(2 * a, 2 * c) + m(2 * a + 1, 2 * c + 1);
  return r;
}

}  // namespace rindler_spin
