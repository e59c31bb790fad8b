#include "semisym/permutation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace semisym {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw std::invalid_argument("permutation images are not a bijection");
    }
    seen[x] = 1;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<char> used(degree, 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      Point a = c[i];
      if (a >= degree || used[a]) throw std::invalid_argument("bad cycle notation");
      used[a] = 1;
      img[a] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::pow(std::int64_t e) const {
  Permutation base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  Permutation acc(degree());
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  for (const auto& c : cycles()) ord = std::lcm(ord, static_cast<std::uint64_t>(c.size()));
  return ord;
}

Point Permutation::smallest_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<Point> c;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = 1;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in product");
  Permutation r;
  r.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) r.images_[i] = b.images_[a.images_[i]];
  return r;
}

Permutation conjugate(const Permutation& a, const Permutation& by) {
  // x^(by^-1 a by): map by[i] -> by[a[i]]
  std::vector<Point> img(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) img[by[i]] = by[a[i]];
  return Permutation::unchecked(std::move(img));
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

std::size_t hash_points(std::span<const Point> pts) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Point x : pts) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  return hash_points(p.images());
}

}  // namespace semisym
