#include "intertwine/path.hpp"

#include <algorithm>

#include "intertwine/error.hpp"

namespace intertwine {

SampledPath SampledPath::constant(const MetricPoint& p, const Rational& start, const Rational& end) {
  return SampledPath{{start, end}, {p, p}};
}

void SampledPath::check(const MetricSpace& space) const {
  if (times.size() < 2 || times.size() != points.size()) throw DomainError("path needs at least two samples");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (times[i] <= times[i - 1]) throw DomainError("path sample times must increase strictly");
  }
  for (const MetricPoint& p : points) space.check(p);
}

MetricPoint SampledPath::at(const MetricSpace& space, const Rational& t) const {
  if (t < times.front() || t > times.back()) {
    throw DomainError("time " + to_string(t) + " outside the path domain [" + to_string(times.front()) + ", " +
                      to_string(times.back()) + "]");
  }
  auto it = std::lower_bound(times.begin(), times.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - times.begin());
  if (times[i] == t) return space.canonical(points[i]);
  Rational s = (t - times[i - 1]) / (times[i] - times[i - 1]);
  return space.canonical(space.interpolate(points[i - 1], points[i], s));
}

SampledPath SampledPath::affine_time(const Rational& scale, const Rational& shift) const {
  if (scale <= 0) throw DomainError("time reparametrization must preserve orientation");
  SampledPath out = *this;
  for (Rational& t : out.times) t = scale * t + shift;
  return out;
}

bool SampledPath::same_trajectory(const MetricSpace& space, const SampledPath& other) const {
  if (start() != other.start() || end() != other.end()) return false;
  Vector all = times;
  all.insert(all.end(), other.times.begin(), other.times.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (const Rational& t : all) {
    if (!(at(space, t) == other.at(space, t))) return false;
  }
  if (space.kind() == MetricSpace::Kind::circle) {
    // Equal canonical samples can still wind differently in between.
    for (std::size_t i = 1; i < all.size(); ++i) {
      Rational mid = (all[i - 1] + all[i]) / 2;
      if (!(at(space, mid) == other.at(space, mid))) return false;
    }
  }
  return true;
}

}  // namespace intertwine
