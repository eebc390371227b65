#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace aircomp {

template <typename Real>
using Complex = std::complex<Real>;

/// Column vector of complex entries (channels, beamformers, coefficients).
template <typename Real>
using ComplexVector = Eigen::Vector<Complex<Real>, Eigen::Dynamic>;

/// Channels are stored as an N_r x K matrix, one column per device.
template <typename Real>
using ComplexMatrix = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using RealVector = Eigen::Vector<Real, Eigen::Dynamic>;

using Index = Eigen::Index;

/// Invalid scenario/configuration input; the message names the offending field.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A solver cannot proceed (degenerate beamformer or channel, numeric failure).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scenario parameters for a K-device, N_r-antenna aggregation link.
/// Per-device arrays all have length K; variances are linear power units.
template <typename Real>
struct SystemConfigT {
  Index num_wds = 0;         // K
  Index num_rx_antennas = 0; // N_r
  RealVector<Real> power_budget;  // P_k >= 0
  RealVector<Real> est_error_var; // sigma_{e,k}^2 >= 0
  RealVector<Real> channel_var;   // sigma_{h,k}^2 >= 0
  Real noise_var = Real(0);       // sigma_z^2 > 0
};

/// One realization of true channels h_k, estimated channels and estimation
/// errors, with est_channels = true_channels + errors column by column.
template <typename Real>
struct ChannelInstanceT {
  ComplexMatrix<Real> true_channels; // N_r x K
  ComplexMatrix<Real> est_channels;  // N_r x K
  ComplexMatrix<Real> errors;        // N_r x K
};

/// Transmit coefficients b_k and receive beamformer w.
template <typename Real>
struct TransceiverDesignT {
  ComplexVector<Real> tx_coeff;      // length K
  ComplexVector<Real> rx_beamformer; // length N_r
};

/// The three error terms of the computation MSE plus their normalized sum.
/// total = (misalignment + csi_related + noise) / K^2.
template <typename Real>
struct MseBreakdownT {
  Real misalignment = Real(0);
  Real csi_related = Real(0);
  Real noise = Real(0);
  Real total = Real(0);
};

using SystemConfig = SystemConfigT<double>;
using ChannelInstance = ChannelInstanceT<double>;
using TransceiverDesign = TransceiverDesignT<double>;
using MseBreakdown = MseBreakdownT<double>;

namespace detail {

template <typename Real>
void check_per_wd_array(const RealVector<Real>& values, Index num_wds,
                        const char* field, bool allow_zero_only = false) {
  (void)allow_zero_only;
  if (values.size() != num_wds) {
    throw ConfigError(std::string(field) + ": expected length " +
                      std::to_string(num_wds) + ", got " +
                      std::to_string(values.size()));
  }
  for (Index k = 0; k < values.size(); ++k) {
    if (!std::isfinite(static_cast<double>(values[k]))) {
      throw ConfigError(std::string(field) + ": entry " + std::to_string(k) +
                        " is not finite");
    }
    if (values[k] < Real(0)) {
      throw ConfigError(std::string(field) + ": entry " + std::to_string(k) +
                        " is negative");
    }
  }
}

} // namespace detail

/// Accepts iff every SystemConfig invariant holds; throws ConfigError naming
/// the violated field otherwise.
template <typename Real>
void validate_config(const SystemConfigT<Real>& config) {
  if (config.num_wds < 1) {
    throw ConfigError("num_wds: must be >= 1");
  }
  if (config.num_rx_antennas < 1) {
    throw ConfigError("num_rx_antennas: must be >= 1");
  }
  detail::check_per_wd_array(config.power_budget, config.num_wds, "power_budget");
  detail::check_per_wd_array(config.est_error_var, config.num_wds, "est_error_var");
  detail::check_per_wd_array(config.channel_var, config.num_wds, "channel_var");
  if (!std::isfinite(static_cast<double>(config.noise_var))) {
    throw ConfigError("noise_var: not finite");
  }
  if (config.noise_var <= Real(0)) {
    throw ConfigError("noise_var: must be positive");
  }
}

/// Largest relative transmit-power overshoot max_k (|b_k|^2 - P_k) / max(P_k, 1).
/// Feasible designs stay below ~1e-9; negative means strictly inside the budget.
template <typename Real>
Real power_feasibility_margin(const TransceiverDesignT<Real>& design,
                              const SystemConfigT<Real>& config) {
  Real worst = -std::numeric_limits<Real>::infinity();
  for (Index k = 0; k < config.num_wds; ++k) {
    const Real used = std::norm(design.tx_coeff[k]);
    const Real budget = config.power_budget[k];
    const Real scale = std::max(budget, Real(1));
    worst = std::max(worst, (used - budget) / scale);
  }
  return worst;
}

} // namespace aircomp
