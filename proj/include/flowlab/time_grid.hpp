#pragma once

#include <cstdint>
#include <stdexcept>

namespace flowlab {

// Dyadic time grid on [origin, horizon]: 2^level cells of equal width.
// Refining by one level splits every cell into exactly two.
struct TimeGrid {
  double origin = 0.0;
  double horizon = 1.0;
  int level = 0;

  TimeGrid() = default;
  TimeGrid(double origin_, double horizon_, int level_)
      : origin(origin_), horizon(horizon_), level(level_) {
    if (!(horizon > origin)) throw std::invalid_argument("TimeGrid: horizon <= origin");
    if (level < 0 || level > 62) throw std::invalid_argument("TimeGrid: bad level");
  }

  std::int64_t cells() const { return std::int64_t(1) << level; }
  double length() const { return horizon - origin; }
  double step() const { return length() / static_cast<double>(cells()); }
  double node(std::int64_t k) const {
    return origin + length() * static_cast<double>(k) / static_cast<double>(cells());
  }

  TimeGrid refined() const { return TimeGrid(origin, horizon, level + 1); }

  bool abuts(const TimeGrid& right) const { return horizon == right.origin; }

  bool operator==(const TimeGrid& o) const = default;
};

}  // namespace flowlab
