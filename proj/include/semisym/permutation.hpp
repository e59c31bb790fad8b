#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace semisym {

using Point = std::uint32_t;

// A bijection of {0,...,n-1}. Points act on the right: i^p = p[i], and
// (p*q)[i] = q[p[i]], so p*q means "first p, then q".
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);

  // Skips the bijection check; callers guarantee validity.
  static Permutation unchecked(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  // Cycles use 0-based points; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }
  const std::vector<Point>& image_vector() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(std::int64_t e) const;
  std::uint64_t order() const;
  // degree() when the permutation is the identity.
  Point smallest_moved_point() const noexcept;
  std::vector<std::vector<Point>> cycles() const;
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

// by^-1 * a * by
Permutation conjugate(const Permutation& a, const Permutation& by);
// a^-1 b^-1 a b
Permutation commutator(const Permutation& a, const Permutation& b);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

std::size_t hash_points(std::span<const Point> pts) noexcept;

}  // namespace semisym
