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

#pragma once

// Two-qubit density operators in the Pauli tensor basis and their Lindblad
// evolution when only the first qubit couples to the bath.
//
// All states live in the renormalized (interaction) picture, i.e. the local
// rotation exp(i H' tau) generated by the first qubit's Zeeman term is never
// applied. Concurrence and sigma_3 populations are invariant under it.
//
// Time is in units of 1/gamma0 and rates in units of gamma0 (see RateSet).
// Spin-up |0> = (1, 0) is the sigma_3 = +1 state, which is the lower-energy
// level; sigma_- = (sigma_1 + i sigma_2)/2 = |up><down| lowers the energy.

#include <Eigen/Dense>
#include <array>
#include <span>
#include <vector>

#include "rindler_spin/correlator.hpp"

namespace rindler_spin {

using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;

// sigma_0 = identity, sigma_1..3 = Pauli x, y, z.
const Matrix2c& pauli(int i);

// sigma_i (x) sigma_j, first factor acting on the accelerated qubit.
Matrix4c pauli_product(int i, int j);

// rho = sum_ij r[i][j] sigma_i (x) sigma_j.
struct PauliCoefficients {
  std::array<std::array<double, 4>, 4> r{};

  double& operator()(int i, int j) { return r[i][j]; }
  double operator()(int i, int j) const { return r[i][j]; }
};

class DensityMatrix {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kEigenTol = 1e-10;

  // Checks Hermiticity, unit trace and positivity; throws ValidationError.
  static DensityMatrix checked(const Matrix4c& m);
  // No checks; for intermediate or deliberately unphysical states.
  static DensityMatrix unchecked(const Matrix4c& m) { return DensityMatrix(m); }

  const Matrix4c& matrix() const noexcept { return m_; }
  std::complex<double> operator()(int i, int j) const { return m_(i, j); }

  double trace() const { return m_.trace().real(); }
  double min_eigenvalue() const;
  // max |m - m^dagger|
  double hermiticity_defect() const;

 private:
  explicit DensityMatrix(const Matrix4c& m) : m_(m) {}
  Matrix4c m_;
};

// r_ij = Tr(rho sigma_i (x) sigma_j) / 4. Throws ValidationError if rho is
// not Hermitian to DensityMatrix::kHermitianTol.
PauliCoefficients coeffs_from_density(const DensityMatrix& rho);

struct DecodedDensity {
  DensityMatrix rho;
  // sum y_ij^2 > 1: the coefficients lie outside the generalized Bloch ball
  // and the matrix may have negative eigenvalues.
  bool bloch_bound_violated = false;
};

// Inverse of coeffs_from_density. Throws ValidationError unless r00 = 1/4.
DecodedDensity density_from_coefficients(const PauliCoefficients& c);

// (|up up> + |down down>) / sqrt(2).
PauliCoefficients bell_state();

// sum over (i,j) != (0,0) of y_ij^2 with y_ij = 4 r_ij / sqrt(3). Equals 1
// for pure states and 0 for the maximally mixed state.
double bloch_norm(const PauliCoefficients& c);

// Closed-form solution of the coefficient equations:
//   r_0j constant,
//   r_1j, r_2j decay at (g_minus + g_plus + 4 g_z) / 2,
//   r_3j relaxes to (g_minus - g_plus)/(g_minus + g_plus) r_0j at rate
//   g_minus + g_plus.
// Throws DomainError for tau < 0.
PauliCoefficients evolve_analytic(const PauliCoefficients& c0, const RateSet& rates, double tau);

// tau -> infinity limit: [(1 + tanh(pi/alpha) sigma_3)/2] (x) (2 sum_j r_0j sigma_j).
// Throws DomainError for alpha <= 0.
PauliCoefficients steady_state(const PauliCoefficients& c0, double alpha);

struct LindbladSpec {
  RateSet rates;
  double dt = 1e-3;  // largest step, in 1/gamma0

  // Throws ArgumentError unless dt > 0 and dt * max(g_minus, g_plus, 4 g_z) < 0.1.
  void validate() const;
};

// Generator of the master equation acting on vec(rho) = [Re rho, Im rho]
// (row-major 4x4 blocks), as a row-major 32 x 32 real matrix.
std::vector<double> lindblad_generator(const RateSet& rates);

// Direct evaluation of the master-equation right-hand side.
Matrix4c lindblad_rhs(const Matrix4c& rho, const RateSet& rates);

// Classical fourth-order Runge-Kutta integration of the full 4x4 density
// matrix to time tau, using ceil(tau / dt) equal steps. Throws NumericError
// if an eigenvalue drops below -1e-8 (the step is too large).
DensityMatrix evolve_numeric(const DensityMatrix& rho0, const LindbladSpec& spec, double tau);

// Same integration, reporting the state at every point of an ascending grid
// that starts at or after 0.
std::vector<DensityMatrix> evolve_numeric_path(const DensityMatrix& rho0, const LindbladSpec& spec,
                                               std::span<const double> tau_grid);

// Reduced state of the second (spectator) qubit.
Matrix2c reduced_second(const DensityMatrix& rho);
// Reduced state of the first (accelerated) qubit.
Matrix2c reduced_first(const DensityMatrix& rho);

}  // namespace rindler_spin
