#include "cyclesplit/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "cyclesplit/error.hpp"

namespace cyclesplit {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw Error(ErrorKind::InvalidPermutation, "image array is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto fail = [&](const std::string &msg) {
    throw Error(ErrorKind::Parse, "cycle notation '" + std::string(text) + "': " + msg);
  };

  skip_space();
  if (i == text.size())
    fail("empty string");
  while (i < text.size()) {
    if (text[i] != '(')
      fail("expected '('");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        fail("expected a point index");
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v >= degree)
          fail("point out of range");
        ++i;
      }
      if (used[v])
        fail("point repeated");
      used[v] = true;
      cycle.push_back(static_cast<Point>(v));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_space();
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    p.images_[images_[x]] = static_cast<Point>(x);
  return p;
}

Permutation Permutation::pow(std::uint64_t k) const {
  Permutation result = identity(degree());
  Permutation base = *this;
  while (k) {
    if (k & 1)
      result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> Permutation::cycle_lengths() const {
  std::vector<std::uint64_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x])
      continue;
    std::uint64_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (std::uint64_t len : cycle_lengths())
    result = std::lcm(result, len);
  return result;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x)
      continue;
    out << '(';
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (y != x)
        out << ' ';
      out << y;
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation &a, const Permutation &b) {
  if (a.degree() != b.degree())
    throw Error(ErrorKind::DegreeMismatch, "cannot compose permutations of different degree");
  Permutation p;
  p.images_.resize(a.degree());
  for (std::size_t x = 0; x < a.degree(); ++x)
    p.images_[x] = b.images_[a.images_[x]];
  return p;
}

Permutation compose(const Permutation &a, const Permutation &b) { return a * b; }

Permutation conjugate(const Permutation &g, const Permutation &h) {
  return h.inverse() * g * h;
}

} // namespace cyclesplit

std::size_t std::hash<cyclesplit::Permutation>::operator()(
    const cyclesplit::Permutation &p) const noexcept {
  // FNV-1a over the image array
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}
