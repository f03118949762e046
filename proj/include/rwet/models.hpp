#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rwet/geometry.hpp"

namespace rwet {

// Physical models: InH-office pathloss, sector beams, sensitivity-based
// logistic harvesting, and the robot motion-time model.

struct ChannelParams {
  double fc_ghz = 0.915;    // carrier frequency
  double tx_power_w = 3.0;  // transmit power, antenna gain included
  double rx_gain_db = 6.0;  // receiver antenna gain
};

struct HarvestParams {
  double p0_w = 6.4e-5;     // sensitivity threshold: zero output below this input
  double pmax_w = 4.927e-3; // saturation ceiling of the rectifier
  double tau_per_w = 274.0; // logistic slope
  double nu = 1.0;          // logistic offset
};

// Angular sector [start, start + width] in degrees, world frame,
// both boundaries inclusive.
struct BeamSector {
  double start_deg = 0.0;   // normalized to [0, 360)
  double width_deg = 360.0; // in (0, 360]

  bool covers_angle(double angle_deg) const {
    double rel = angle_deg - start_deg;
    rel -= 360.0 * std::floor(rel / 360.0);
    return rel <= width_deg;
  }

  double mid_deg() const { return normalize_deg(start_deg + 0.5 * width_deg); }
};

struct Codebook {
  std::vector<BeamSector> sectors;

  int size() const { return static_cast<int>(sectors.size()); }
  double max_width_deg() const {
    double w = 0.0;
    for (const auto& s : sectors) w = std::max(w, s.width_deg);
    return w;
  }
};

struct RobotParams {
  double linear_speed_mps = 0.2;  // alpha
  double angular_speed_dps = 90.0;
  double body_radius_m = 0.17;
};

struct EnergyHarvester {
  Position2D position;
  double requirement_j = 0.02;  // gamma_k
};

// M x M nonnegative edge lengths in meters, zero diagonal. Row m, column j
// is the length of the directed edge from anchor m to anchor j.
struct DistanceMatrix {
  int size = 0;
  std::vector<double> d;  // row-major, size*size

  DistanceMatrix() = default;
  explicit DistanceMatrix(int m) : size(m), d(static_cast<size_t>(m) * m, 0.0) {}

  double at(int m, int j) const { return d[static_cast<size_t>(m) * size + j]; }
  double& at(int m, int j) { return d[static_cast<size_t>(m) * size + j]; }
};

inline DistanceMatrix euclidean_distance_matrix(const std::vector<Position2D>& pts) {
  DistanceMatrix d(static_cast<int>(pts.size()));
  for (int m = 0; m < d.size; ++m)
    for (int j = 0; j < d.size; ++j)
      if (m != j) d.at(m, j) = distance(pts[m], pts[j]);
  return d;
}

// M x M binary route variable: w(m, j) = 1 means the robot travels the
// directed edge from anchor m to anchor j.
struct RouteMatrix {
  int size = 0;
  std::vector<std::uint8_t> w;

  RouteMatrix() = default;
  explicit RouteMatrix(int m) : size(m), w(static_cast<size_t>(m) * m, 0) {}

  std::uint8_t at(int m, int j) const { return w[static_cast<size_t>(m) * size + j]; }
  std::uint8_t& at(int m, int j) { return w[static_cast<size_t>(m) * size + j]; }
};

// The InH-office pathloss model breaks down at zero range; distances are
// clamped to this floor instead of erroring.
inline constexpr double kMinPathlossDistanceM = 0.1;

// Pathloss in dB between an energy harvester and an anchor at carrier
// frequency fc (GHz). Channel gain in dB is the negation.
inline double pathloss_db(const Position2D& eh, const Position2D& anchor, double fc_ghz) {
  double dist = std::max(distance(eh, anchor), kMinPathlossDistanceM);
  return 32.4 + 17.3 * std::log10(dist) + 20.0 * std::log10(fc_ghz);
}

// True iff the EH lies inside the sector anchored at `anchor`. A coincident
// EH counts as covered (the transmitter sits on top of it).
inline bool beam_covers(const BeamSector& sector, const Position2D& anchor,
                        const Position2D& eh) {
  Vec2 diff = eh - anchor;
  if (diff.x == 0.0 && diff.y == 0.0) return true;
  return sector.covers_angle(angle_of_deg(diff));
}

// Received RF power at the EH in watts; zero when outside the beam.
inline double received_power_w(const ChannelParams& params, const BeamSector& sector,
                               const Position2D& anchor, const Position2D& eh) {
  if (!beam_covers(sector, anchor, eh)) return 0.0;
  double gain_db = -pathloss_db(eh, anchor, params.fc_ghz) + params.rx_gain_db;
  return params.tx_power_w * std::pow(10.0, gain_db / 10.0);
}

// Sensitivity-based logistic harvesting curve: zero below the sensitivity
// threshold, saturating at pmax for large inputs.
inline double harvested_power_w(double p_in_w, const HarvestParams& hp) {
  double x = std::exp(-hp.tau_per_w * hp.p0_w + hp.nu);
  double denom = 1.0 + std::exp(-hp.tau_per_w * p_in_w + hp.nu);
  double y = hp.pmax_w / x * ((1.0 + x) / denom - 1.0);
  return std::max(0.0, y);
}

// Moving time of a route: sum of traversed edge lengths over the robot
// speed, i.e. (1/alpha) * Tr(D^T W).
inline double motion_time_s(const DistanceMatrix& d, const RouteMatrix& route, double alpha) {
  if (d.size != route.size) throw std::invalid_argument("motion_time_s: dimension mismatch");
  double total = 0.0;
  for (int m = 0; m < d.size; ++m)
    for (int j = 0; j < d.size; ++j)
      if (route.at(m, j)) total += d.at(m, j);
  return total / alpha;
}

}  // namespace rwet
