#include "fran/envelope.hpp"

#include <algorithm>
#include <stdexcept>

#include "fran/model.hpp"

namespace fran {

namespace {

// Cross product sign of (b - a) x (c - a); >= 0 means b is not strictly below segment ac.
Rational turn(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
  return (b.mu - a.mu) * (c.ndt - a.ndt) - (b.ndt - a.ndt) * (c.mu - a.mu);
}

}  // namespace

PiecewiseLinearNdt::PiecewiseLinearNdt(std::vector<Breakpoint> breakpoints)
    : points_(std::move(breakpoints)) {
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i - 1].mu < points_[i].mu)) {
      throw std::invalid_argument("breakpoints must be strictly increasing in mu");
    }
  }
}

PiecewiseLinearNdt PiecewiseLinearNdt::lower_convex_envelope(std::vector<Breakpoint> points) {
  std::sort(points.begin(), points.end(), [](const Breakpoint& a, const Breakpoint& b) {
    return a.mu < b.mu || (a.mu == b.mu && a.ndt < b.ndt);
  });
  points.erase(std::unique(points.begin(), points.end(),
                           [](const Breakpoint& a, const Breakpoint& b) { return a.mu == b.mu; }),
               points.end());

  std::vector<Breakpoint> hull;
  for (auto& p : points) {
    while (hull.size() >= 2 && turn(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(std::move(p));
  }
  return PiecewiseLinearNdt(std::move(hull));
}

const Rational& PiecewiseLinearNdt::min_mu() const {
  if (points_.empty()) throw DomainError("empty NDT curve");
  return points_.front().mu;
}

const Rational& PiecewiseLinearNdt::max_mu() const {
  if (points_.empty()) throw DomainError("empty NDT curve");
  return points_.back().mu;
}

Rational PiecewiseLinearNdt::evaluate(const Rational& mu) const {
  if (points_.empty() || mu < min_mu() || mu > max_mu()) {
    throw DomainError("mu = " + to_fraction_string(mu) + " outside the curve's domain");
  }
  auto upper = std::lower_bound(points_.begin(), points_.end(), mu,
                                [](const Breakpoint& p, const Rational& x) { return p.mu < x; });
  if (upper->mu == mu) return upper->ndt;
  const auto& hi = *upper;
  const auto& lo = *(upper - 1);
  return lo.ndt + (hi.ndt - lo.ndt) * (mu - lo.mu) / (hi.mu - lo.mu);
}

bool PiecewiseLinearNdt::is_convex() const {
  for (std::size_t i = 2; i < points_.size(); ++i) {
    if (turn(points_[i - 2], points_[i - 1], points_[i]) < 0) return false;
  }
  return true;
}

bool PiecewiseLinearNdt::is_non_increasing() const {
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (points_[i].ndt > points_[i - 1].ndt) return false;
  }
  return true;
}

}  // namespace fran
