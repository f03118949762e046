#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "rwet/errors.hpp"
#include "rwet/geometry.hpp"
#include "rwet/models.hpp"

namespace rwet {

struct Circle {
  Position2D center;
  double radius = 0.0;
};

namespace detail {

inline bool circle_contains(const Circle& c, const Position2D& p) {
  double r2 = c.radius * c.radius;
  return (p - c.center).norm2() <= r2 * (1.0 + 1e-12) + 1e-24;
}

inline Circle circle_from_2(const Position2D& a, const Position2D& b) {
  Position2D center = (a + b) * 0.5;
  return {center, 0.5 * distance(a, b)};
}

inline Circle circle_from_3(const Position2D& a, const Position2D& b, const Position2D& c) {
  double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
  if (std::fabs(d) < 1e-14) {
    // Collinear: the widest pair's circle contains the third point.
    Circle best = circle_from_2(a, b);
    Circle cand = circle_from_2(a, c);
    if (cand.radius > best.radius) best = cand;
    cand = circle_from_2(b, c);
    if (cand.radius > best.radius) best = cand;
    return best;
  }
  double a2 = a.norm2(), b2 = b.norm2(), c2 = c.norm2();
  double ux = (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d;
  double uy = (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d;
  Position2D center{ux, uy};
  return {center, distance(center, a)};
}

inline Circle trivial_circle(const std::vector<Position2D>& support) {
  switch (support.size()) {
    case 0: return {{0.0, 0.0}, -1.0};  // contains nothing
    case 1: return {support[0], 0.0};
    case 2: return circle_from_2(support[0], support[1]);
    default: return circle_from_3(support[0], support[1], support[2]);
  }
}

// Welzl's recursion without shuffling: worst case quadratic-ish but the
// cluster sizes here are tiny, and the fixed order keeps results
// deterministic.
inline Circle welzl(const std::vector<Position2D>& pts, std::vector<Position2D>& support,
                    size_t n) {
  if (n == 0 || support.size() == 3) return trivial_circle(support);
  const Position2D& p = pts[n - 1];
  Circle c = welzl(pts, support, n - 1);
  if (c.radius >= 0.0 && circle_contains(c, p)) return c;
  support.push_back(p);
  c = welzl(pts, support, n - 1);
  support.pop_back();
  return c;
}

}  // namespace detail

// Chebyshev center of a point set: the center of the minimum enclosing
// circle, i.e. the point minimizing the maximum distance to any member.
inline Circle chebyshev_center(const std::vector<Position2D>& points) {
  if (points.empty()) throw std::invalid_argument("chebyshev_center: empty point set");
  std::vector<Position2D> support;
  Circle c = detail::welzl(points, support, points.size());
  // Report the exactly achieved min-max distance.
  double r = 0.0;
  for (const auto& p : points) r = std::max(r, distance(c.center, p));
  c.radius = r;
  return c;
}

struct BeamConstrainedCenter {
  Position2D center;
  int beam = -1;  // codebook index
  double radius = 0.0;
};

namespace detail {

inline double max_dist(const Position2D& c, const std::vector<Position2D>& pts) {
  double r = 0.0;
  for (const auto& p : pts) r = std::max(r, distance(c, p));
  return r;
}

inline bool all_in_beam(const BeamSector& sector, const Position2D& c,
                        const std::vector<Position2D>& pts) {
  for (const auto& p : pts)
    if (!beam_covers(sector, c, p)) return false;
  return true;
}

// Pattern-search descent of the min-max radius restricted to centers that
// keep every point inside the sector. The feasible set is an intersection
// of translated cones (convex for widths up to 180 degrees), so a compass
// search with shrinking steps converges to the constrained optimum.
inline Position2D pattern_descend(const BeamSector& sector, Position2D c,
                                  const std::vector<Position2D>& pts, double step) {
  constexpr int kDirections = 16;
  Vec2 dirs[kDirections];
  for (int i = 0; i < kDirections; ++i) dirs[i] = unit_from_deg(i * 360.0 / kDirections);

  double f = max_dist(c, pts);
  int guard = 0;
  while (step > 1e-9 && ++guard < 20000) {
    bool improved = false;
    for (int i = 0; i < kDirections; ++i) {
      Position2D cand = c + dirs[i] * step;
      if (!all_in_beam(sector, cand, pts)) continue;
      double fc = max_dist(cand, pts);
      if (fc < f - 1e-15) {
        c = cand;
        f = fc;
        improved = true;
      }
    }
    if (!improved) step *= 0.5;
  }
  return c;
}

// Constrained solve for one sector; returns false when no feasible center
// was found.
inline bool solve_for_sector(const BeamSector& sector, const std::vector<Position2D>& pts,
                             const Circle& unconstrained, Position2D& out_center,
                             double& out_radius) {
  // The unconstrained optimum, when feasible, is the constrained optimum.
  if (all_in_beam(sector, unconstrained.center, pts)) {
    out_center = unconstrained.center;
    out_radius = unconstrained.radius;
    return true;
  }

  // Feasible start: back away from the cluster against the sector's mid
  // direction until the whole cluster fits in the beam.
  Position2D centroid{0.0, 0.0};
  for (const auto& p : pts) centroid += p;
  centroid = centroid / static_cast<double>(pts.size());
  Vec2 u = unit_from_deg(sector.mid_deg());

  Position2D start;
  bool found = false;
  double scale = std::max(unconstrained.radius, 1e-3);
  for (double t = scale; t <= 1e7 * scale; t *= 2.0) {
    Position2D cand = centroid - u * t;
    if (all_in_beam(sector, cand, pts)) {
      start = cand;
      found = true;
      break;
    }
  }
  if (!found) return false;

  Position2D c = pattern_descend(sector, start, pts, max_dist(start, pts));

  // Coarse grid sweep around the incumbent, then re-polish. Guards against
  // the pattern search stalling on a constraint kink.
  constexpr double kGridStep = 0.05;
  double span = std::max(2.0 * unconstrained.radius, 10.0 * kGridStep);
  Position2D best = c;
  double fbest = max_dist(c, pts);
  for (double gx = -span; gx <= span; gx += kGridStep) {
    for (double gy = -span; gy <= span; gy += kGridStep) {
      Position2D cand{c.x + gx, c.y + gy};
      if (!all_in_beam(sector, cand, pts)) continue;
      double fc = max_dist(cand, pts);
      if (fc < fbest - 1e-12) {
        fbest = fc;
        best = cand;
      }
    }
  }
  if (!(best == c)) best = pattern_descend(sector, best, pts, 2.0 * kGridStep);

  out_center = best;
  out_radius = max_dist(best, pts);
  return true;
}

}  // namespace detail

// Min-max center constrained to keep every member inside a single codebook
// beam; returns the best (center, beam) pair over the codebook.
inline BeamConstrainedCenter beam_constrained_center(const std::vector<Position2D>& points,
                                                     const Codebook& codebook) {
  if (points.empty())
    throw std::invalid_argument("beam_constrained_center: empty point set");
  if (codebook.sectors.empty())
    throw std::invalid_argument("beam_constrained_center: empty codebook");

  Circle unconstrained = chebyshev_center(points);

  BeamConstrainedCenter best;
  bool any = false;
  for (int b = 0; b < codebook.size(); ++b) {
    Position2D c;
    double r;
    if (!detail::solve_for_sector(codebook.sectors[b], points, unconstrained, c, r)) continue;
    if (!any || r < best.radius - 1e-12) {
      best = {c, b, r};
      any = true;
    }
  }
  if (!any) throw FeasibleBeamNotFound("no codebook beam can cover the cluster");
  return best;
}

}  // namespace rwet
