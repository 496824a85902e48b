#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "realdet/sign.hpp"

namespace realdet {

/// A bijection of {0, ..., n-1}, stored in one-line notation: `image(i)` is
/// where i is sent. Public interfaces that talk about components use 1-based
/// labels; conversion happens at the serialization boundary only.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t n);
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);
  /// Throws Error{InvalidArgument} unless `images` is a bijection of 0..n-1.
  static Permutation from_images(std::vector<std::size_t> images);
  /// Consecutive cycles (0 1 .. l0-1)(l0 .. l0+l1-1)... with the given lengths.
  static Permutation from_cycle_lengths(std::span<const std::size_t> lengths);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }

  /// (*this) after `first`: x -> (*this)(first(x)).
  Permutation after(const Permutation& first) const;
  Permutation inverse() const;

  /// Disjoint cycles including fixed points, each starting at its smallest
  /// element, ordered by that element. This is the canonical cycle order used
  /// for every per-cycle datum in the library.
  std::vector<std::vector<std::size_t>> cycles() const;
  std::size_t cycle_count() const;

  std::size_t inversions() const;
  /// (-1)^inversions.
  Sign signature() const;

  /// True when `subset` (a membership mask of length size()) is a union of cycles.
  bool stabilizes(const std::vector<bool>& subset) const;
  /// The permutation induced on a stable subset, relabelled 0..|S|-1 in
  /// increasing order of the original labels.
  Permutation restricted_to(const std::vector<bool>& subset) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {}
  std::vector<std::size_t> images_;
};

}  // namespace realdet
