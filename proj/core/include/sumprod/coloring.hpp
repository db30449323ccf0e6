#ifndef SUMPROD_COLORING_HPP
#define SUMPROD_COLORING_HPP

#include <cstdint>
#include <vector>

#include "sumprod/errors.hpp"

namespace sumprod {

/// Largest supported number of elements in a domain interval.
inline constexpr std::uint64_t kMaxDomainWidth = 0xFFFFFFFFull;

/// Closed integer interval [lo, hi] with 1 <= lo <= hi.
struct Interval {
  std::uint64_t lo;
  std::uint64_t hi;

  Interval(std::uint64_t lo_, std::uint64_t hi_);

  std::uint64_t width() const noexcept { return hi - lo + 1; }
  bool contains(std::uint64_t n) const noexcept { return n >= lo && n <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A color assignment on an integer interval. Immutable after construction.
class Coloring {
public:
  Coloring(Interval domain, std::uint32_t num_colors, std::vector<std::uint32_t> assignment);

  const Interval& domain() const noexcept { return domain_; }
  std::uint32_t num_colors() const noexcept { return num_colors_; }
  std::uint64_t width() const noexcept { return domain_.width(); }

  /// Color of element n; n must lie in the domain.
  std::uint32_t color_at(std::uint64_t n) const { return assignment_.at(n - domain_.lo); }

  bool contains(std::uint64_t n) const noexcept { return domain_.contains(n); }

  const std::vector<std::uint32_t>& assignment() const noexcept { return assignment_; }

  /// Restriction to a sub-interval of the domain.
  Coloring restrict(Interval sub) const;

  /// Single-color coloring, convenient for tests and small constructions.
  static Coloring uniform(Interval domain, std::uint32_t num_colors = 1,
                          std::uint32_t color = 0);

  friend bool operator==(const Coloring&, const Coloring&) = default;

private:
  Interval domain_;
  std::uint32_t num_colors_;
  std::vector<std::uint32_t> assignment_;
};

}  // namespace sumprod

#endif
