#pragma once

// Common result carrier for every volume computation, whichever engine
// produced it (closed form, Monte Carlo, or deterministic cubature).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace homvol {

enum class Method {
  Closed,      // exact closed-form expression
  MonteCarlo,  // hit-or-miss sampling; carries a standard error and a seed
  Cubature,    // deterministic quadrature; no standard error
};

inline const char* method_token(Method m) {
  switch (m) {
    case Method::Closed: return "closed";
    case Method::MonteCarlo: return "mc";
    case Method::Cubature: return "quad";
  }
  throw std::invalid_argument("method_token: unknown method");
}

inline Method parse_method(const std::string& token) {
  if (token == "closed") return Method::Closed;
  if (token == "mc") return Method::MonteCarlo;
  if (token == "quad") return Method::Cubature;
  throw std::invalid_argument("parse_method: expected closed, mc, or quad, got \"" + token + "\"");
}

struct VolumeEstimate {
  double value = 0.0;
  std::optional<double> std_error;      // present exactly for Monte Carlo results
  Method method = Method::Closed;
  std::uint64_t samples_or_nodes = 1;   // draws (MC) or integrand evaluations (cubature)
  std::optional<std::uint64_t> seed;    // present exactly for Monte Carlo results
};

inline VolumeEstimate closed_estimate(double value) {
  return {value, std::nullopt, Method::Closed, 1, std::nullopt};
}

inline VolumeEstimate cubature_estimate(double value, std::uint64_t nodes) {
  if (nodes == 0) throw std::invalid_argument("cubature_estimate: node count must be positive");
  return {value, std::nullopt, Method::Cubature, nodes, std::nullopt};
}

inline VolumeEstimate monte_carlo_estimate(double value, double std_error,
                                           std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("monte_carlo_estimate: sample count must be positive");
  if (!(std_error >= 0.0)) throw std::invalid_argument("monte_carlo_estimate: standard error must be non-negative");
  return {value, std_error, Method::MonteCarlo, samples, seed};
}

}  // namespace homvol
