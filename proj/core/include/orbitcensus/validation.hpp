#pragma once

#include <string>
#include <utility>
#include <vector>

namespace orbitcensus::validation {

struct Entry {
  std::string check;
  std::vector<std::pair<std::string, double>> params;
  double residual = 0;
  double tolerance = 0;
  bool pass = false;
};

struct Report {
  std::vector<Entry> entries;

  void add(std::string check, std::vector<std::pair<std::string, double>> params, double residual, double tolerance);
  [[nodiscard]] auto all_pass() const -> bool;
  [[nodiscard]] auto find(const std::string& check) const -> const Entry*;
  /// JSON array of {check, params, residual, tolerance, pass}.
  [[nodiscard]] auto to_json() const -> std::string;
};

constexpr double kMatrixTolerance = 1e-10;
constexpr double kGradientTolerance = 1e-8;

/// Every matrix identity of the transfer-matrix construction at order p (2 <= p <= 6): exact
/// relations, trace reduction, gauge invariance, det F = det G = 1, the determinant
/// proposition at five alphas, det B, the spectra of M_{p+1} and Mtilde_p and their product
/// identity, and (p <= 4) the saddle gradient and Hessian.
[[nodiscard]] auto validate_spectral(int p) -> Report;

}  // namespace orbitcensus::validation
