#include "realdet/permutation.hpp"

#include <numeric>
#include <string>

#include "realdet/error.hpp"

namespace realdet {

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) {
    throw Error(ErrorCode::InvalidArgument, "transposition index out of range");
  }
  auto p = identity(n);
  std::swap(p.images_[i], p.images_[j]);
  return p;
}

Permutation Permutation::from_images(std::vector<std::size_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const std::size_t x = images[i];
    if (x >= images.size() || seen[x]) {
      throw Error(ErrorCode::InvalidArgument,
                  "not a permutation: image " + std::to_string(x) + " at position " +
                      std::to_string(i));
    }
    seen[x] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycle_lengths(std::span<const std::size_t> lengths) {
  std::vector<std::size_t> images;
  std::size_t start = 0;
  for (std::size_t len : lengths) {
    if (len == 0) throw Error(ErrorCode::InvalidArgument, "cycle of length zero");
    for (std::size_t j = 0; j < len; ++j) {
      images.push_back(start + (j + 1) % len);
    }
    start += len;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::after(const Permutation& first) const {
  if (first.size() != size()) {
    throw Error(ErrorCode::InvalidArgument, "composing permutations of different sizes");
  }
  std::vector<std::size_t> images(size());
  for (std::size_t i = 0; i < size(); ++i) images[i] = images_[first.images_[i]];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> images(size());
  for (std::size_t i = 0; i < size(); ++i) images[images_[i]] = i;
  return Permutation(std::move(images));
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> visited(size(), false);
  for (std::size_t start = 0; start < size(); ++start) {
    if (visited[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t x = start; !visited[x]; x = images_[x]) {
      visited[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::size_t Permutation::cycle_count() const { return cycles().size(); }

std::size_t Permutation::inversions() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (images_[i] > images_[j]) ++count;
    }
  }
  return count;
}

Sign Permutation::signature() const { return Sign::negative_if(inversions() % 2 == 1); }

bool Permutation::stabilizes(const std::vector<bool>& subset) const {
  if (subset.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (subset[i] != subset[images_[i]]) return false;
  }
  return true;
}

Permutation Permutation::restricted_to(const std::vector<bool>& subset) const {
  if (!stabilizes(subset)) {
    throw Error(ErrorCode::PreconditionViolated, "subset is not stable under the permutation");
  }
  std::vector<std::size_t> relabel(size(), 0);
  std::size_t next = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (subset[i]) relabel[i] = next++;
  }
  std::vector<std::size_t> images;
  images.reserve(next);
  for (std::size_t i = 0; i < size(); ++i) {
    if (subset[i]) images.push_back(relabel[images_[i]]);
  }
  return Permutation(std::move(images));
}

}  // namespace realdet
