#include "polyspec/eigenforms.hpp"

#include <cmath>
#include <string>

#include "polyspec/errors.hpp"

namespace polyspec {

namespace {

using cplx = std::complex<double>;

cplx angular(int m, double theta) { return std::polar(1.0, m * theta); }

void check_mode(const EigenMode& mode, const FormPoint& p) {
  if (mode.factors.size() != p.dimension()) {
    throw InvalidArgument("eigenform: point dimension does not match the mode");
  }
}

}  // namespace

FormPoint::FormPoint(const Polydisc& P, std::vector<cplx> z) : z_(std::move(z)) {
  if (z_.size() != P.dimension()) {
    throw InvalidArgument("FormPoint: expected " + std::to_string(P.dimension()) +
                          " coordinates, got " + std::to_string(z_.size()));
  }
  r_.resize(z_.size());
  theta_.resize(z_.size());
  for (std::size_t k = 0; k < z_.size(); ++k) {
    if (!std::isfinite(z_[k].real()) || !std::isfinite(z_[k].imag())) {
      throw InvalidArgument("FormPoint: non-finite coordinate");
    }
    r_[k] = std::abs(z_[k]);
    theta_[k] = std::arg(z_[k]);
    // Points built from polar data with r = a may round a hair outside.
    if (r_[k] > P.radius(k) * (1.0 + 1e-15)) {
      throw InvalidArgument("FormPoint: |z_" + std::to_string(k + 1) +
                            "| exceeds the radius");
    }
    r_[k] = std::min(r_[k], P.radius(k));
  }
}

FormPoint FormPoint::from_polar(const Polydisc& P, const std::vector<double>& r,
                                const std::vector<double>& theta) {
  if (r.size() != theta.size()) {
    throw InvalidArgument("FormPoint: r and theta lengths differ");
  }
  std::vector<cplx> z(r.size());
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (r[k] < 0.0) {
      throw InvalidArgument("FormPoint: negative radius");
    }
    z[k] = std::polar(r[k], theta[k]);
  }
  FormPoint p(P, std::move(z));
  for (std::size_t k = 0; k < r.size(); ++k) {
    p.r_[k] = std::min(r[k], P.radius(k));
    p.theta_[k] = theta[k];
  }
  return p;
}

cplx factor_value(const ModeFactor& f, cplx z, const EvalConfig& cfg) {
  if (f.kind == FactorKind::Holomorphic) {
    return f.angular_order == 0 ? cplx(1.0, 0.0) : std::pow(z, f.angular_order);
  }
  const double r = std::min(std::abs(z), f.radius);
  return radial_profile(f, r, cfg) * angular(f.angular_order, std::arg(z));
}

cplx factor_laplacian(const ModeFactor& f, cplx z, const EvalConfig& cfg) {
  if (f.kind == FactorKind::Holomorphic) {
    // 4 d^2/(dz dz-bar) of z^p vanishes identically.
    return {0.0, 0.0};
  }
  const double r = std::min(std::abs(z), f.radius);
  if (!(r > 0.0)) {
    throw InvalidArgument("laplacian: polar chart is singular at r = 0");
  }
  const int m = f.angular_order;
  const double R = radial_profile(f, r, cfg);
  const double dR = radial_derivative(f, r, cfg);
  const double d2R = radial_second_derivative(f, r, cfg);
  const double radial = d2R + dR / r - (static_cast<double>(m) * m) * R / (r * r);
  return radial * angular(m, std::arg(z));
}

cplx factor_dbar(const ModeFactor& f, cplx z, const EvalConfig& cfg) {
  if (f.kind == FactorKind::Holomorphic) {
    return {0.0, 0.0};
  }
  const double r = std::min(std::abs(z), f.radius);
  if (!(r > 0.0)) {
    throw InvalidArgument("dbar: polar chart is singular at r = 0");
  }
  const int m = f.angular_order;
  const double theta = std::arg(z);
  // (e^{i theta}/2)(R' + (i/r)(i m) R) e^{i m theta}
  const double radial = radial_derivative(f, r, cfg) - (m / r) * radial_profile(f, r, cfg);
  return 0.5 * radial * angular(m + 1, theta);
}

cplx eval_coefficient(const EigenMode& mode, const FormPoint& p, const EvalConfig& cfg) {
  check_mode(mode, p);
  cplx value(1.0, 0.0);
  for (std::size_t k = 0; k < mode.factors.size(); ++k) {
    value *= factor_value(mode.factors[k], p.z(k), cfg);
  }
  return value;
}

cplx box_coefficient(const EigenMode& mode, const FormPoint& p, const EvalConfig& cfg) {
  check_mode(mode, p);
  const std::size_t n = mode.factors.size();
  std::vector<cplx> values(n);
  for (std::size_t k = 0; k < n; ++k) {
    values[k] = factor_value(mode.factors[k], p.z(k), cfg);
  }
  cplx laplacian(0.0, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    cplx term = factor_laplacian(mode.factors[k], p.z(k), cfg);
    for (std::size_t l = 0; l < n; ++l) {
      if (l != k) term *= values[l];
    }
    laplacian += term;
  }
  return -0.25 * laplacian;
}

double laplacian_residual(const EigenMode& mode, const FormPoint& p, double lambda,
                          const EvalConfig& cfg) {
  const cplx u = eval_coefficient(mode, p, cfg);
  const cplx box = box_coefficient(mode, p, cfg);
  return std::abs(box - lambda * u) / std::max(1e-30, std::abs(lambda * u));
}

double laplacian_residual(const EigenMode& mode, const FormPoint& p, const EvalConfig& cfg) {
  return laplacian_residual(mode, p, mode.value, cfg);
}

double dbar_boundary_residual(const ModeFactor& f, double theta, const EvalConfig& cfg) {
  return std::abs(factor_dbar(f, std::polar(f.radius, theta), cfg));
}

double dbar_boundary_residual(const EigenMode& mode, std::size_t k, double theta,
                              const EvalConfig& cfg) {
  if (k >= mode.factors.size()) {
    throw InvalidArgument("dbar_boundary_residual: no variable " + std::to_string(k + 1));
  }
  if (mode.in_form_index(k)) {
    throw InvalidArgument("dbar_boundary_residual: variable " + std::to_string(k + 1) +
                          " belongs to J");
  }
  return dbar_boundary_residual(mode.factors[k], theta, cfg);
}

}  // namespace polyspec
