#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cyclesplit {

using Point = std::uint32_t;

/// A bijection of {0, ..., n-1}, stored as its image array.
///
/// Products act from the right: `(a * b)(x) = b(a(x))`, i.e. apply `a`
/// first. This matches right cosets H*t acted on by right multiplication.
class Permutation {
public:
  Permutation() = default;

  /// Throws Error(InvalidPermutation) unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Parses cycle notation such as "(0 1)(2 3 4)"; "()" is the identity.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(std::uint64_t k) const;

  /// lcm of the cycle lengths.
  std::uint64_t order() const;

  /// Sorted multiset of cycle lengths, fixed points included.
  std::vector<std::uint64_t> cycle_lengths() const;

  /// Disjoint cycle notation without fixed points, "()" for the identity.
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation &a, const Permutation &b);
  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<Point> images_;
};

/// `a` then `b`; degrees must agree.
Permutation compose(const Permutation &a, const Permutation &b);

/// h^-1 * g * h
Permutation conjugate(const Permutation &g, const Permutation &h);

} // namespace cyclesplit

template <> struct std::hash<cyclesplit::Permutation> {
  std::size_t operator()(const cyclesplit::Permutation &p) const noexcept;
};
