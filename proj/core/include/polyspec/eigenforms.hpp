#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "polyspec/spectrum.hpp"

namespace polyspec {

/// A point of the closed polydisc, z_k = r_k e^{i theta_k}.
class FormPoint {
 public:
  FormPoint(const Polydisc& P, std::vector<std::complex<double>> z);
  static FormPoint from_polar(const Polydisc& P, const std::vector<double>& r,
                              const std::vector<double>& theta);

  std::size_t dimension() const { return z_.size(); }
  const std::complex<double>& z(std::size_t k) const { return z_[k]; }
  double r(std::size_t k) const { return r_[k]; }
  double theta(std::size_t k) const { return theta_[k]; }
  const std::vector<std::complex<double>>& coordinates() const { return z_; }

 private:
  std::vector<std::complex<double>> z_;
  std::vector<double> r_;
  std::vector<double> theta_;
};

/// R(r) e^{i m theta} for one factor. Holomorphic factors are evaluated as z^p.
std::complex<double> factor_value(const ModeFactor& f, std::complex<double> z,
                                  const EvalConfig& cfg = {});

/// Polar Laplacian of one factor: (R'' + R'/r - m^2 R / r^2) e^{i m theta}.
/// Exactly zero for holomorphic factors. Requires r > 0 otherwise.
std::complex<double> factor_laplacian(const ModeFactor& f, std::complex<double> z,
                                      const EvalConfig& cfg = {});

/// d/d(z-bar) = (e^{i theta}/2)(d/dr + (i/r) d/dtheta) of one factor.
std::complex<double> factor_dbar(const ModeFactor& f, std::complex<double> z,
                                 const EvalConfig& cfg = {});

/// Coefficient of dz-bar_J of the eigenform at p.
std::complex<double> eval_coefficient(const EigenMode& mode, const FormPoint& p,
                                      const EvalConfig& cfg = {});

/// (-1/4) Laplacian of the coefficient, analytic. Requires r_k > 0 for
/// every non-holomorphic factor.
std::complex<double> box_coefficient(const EigenMode& mode, const FormPoint& p,
                                     const EvalConfig& cfg = {});

/// |(-1/4) Lap u - lambda u| / max(1e-30, |lambda u|) at an interior point.
double laplacian_residual(const EigenMode& mode, const FormPoint& p,
                          const EvalConfig& cfg = {});

/// Same, with lambda replaced by `lambda` (for perturbation checks).
double laplacian_residual(const EigenMode& mode, const FormPoint& p, double lambda,
                          const EvalConfig& cfg = {});

/// |d(u_k)/d(z-bar_k)| at z_k = a_k e^{i theta} for variable k outside J.
double dbar_boundary_residual(const EigenMode& mode, std::size_t k, double theta,
                              const EvalConfig& cfg = {});

/// Same for a bare factor, any kind.
double dbar_boundary_residual(const ModeFactor& f, double theta,
                              const EvalConfig& cfg = {});

}  // namespace polyspec
