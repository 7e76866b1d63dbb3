#pragma once

#include <vector>

#include "fran/rational.hpp"

namespace fran {

struct Breakpoint {
  Rational mu;
  Rational ndt;
};

/// Piecewise-linear NDT curve over mu, stored by its breakpoints (strictly
/// increasing mu) and evaluated by exact linear interpolation.
class PiecewiseLinearNdt {
 public:
  PiecewiseLinearNdt() = default;

  /// Throws std::invalid_argument unless mu is strictly increasing.
  explicit PiecewiseLinearNdt(std::vector<Breakpoint> breakpoints);

  /// Lower convex envelope of a point cloud (duplicate mu keep the lowest ndt).
  static PiecewiseLinearNdt lower_convex_envelope(std::vector<Breakpoint> points);

  /// Throws DomainError outside [min_mu, max_mu].
  Rational evaluate(const Rational& mu) const;

  const std::vector<Breakpoint>& breakpoints() const { return points_; }
  bool empty() const { return points_.empty(); }
  const Rational& min_mu() const;
  const Rational& max_mu() const;

  bool is_convex() const;
  bool is_non_increasing() const;

 private:
  std::vector<Breakpoint> points_;
};

}  // namespace fran
