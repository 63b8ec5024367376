#include "braidcl/permutation.hpp"

#include "braidcl/errors.hpp"

#include <algorithm>
#include <numeric>

namespace braidcl {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)]) {
      throw Error("one-line notation is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::one_based(std::initializer_list<int> images) {
  std::vector<int> v;
  v.reserve(images.size());
  for (int i : images) v.push_back(i - 1);
  return Permutation(std::move(v));
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::adjacent(int n, int i) {
  auto v = identity(n).images_;
  std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i) + 1]);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) v[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(v));
}

int Permutation::inversions() const {
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    for (std::size_t j = i + 1; j < images_.size(); ++j) {
      if (images_[i] > images_[j]) ++count;
    }
  }
  return count;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw DimensionMismatch("composing permutations of different size");
  std::vector<int> v(q.images_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = p(q.images_[i]);
  return Permutation(std::move(v));
}

int sign(const Permutation& p) { return p.inversions() % 2 == 0 ? 1 : -1; }

std::vector<int> reduced_word(const Permutation& p) {
  // Right-multiplying by s_i swaps one-line entries i, i+1. Sorting p down to the
  // identity records p s_{i1} ... s_{ik} = e, hence p = s_{ik} ... s_{i1}.
  std::vector<int> line = p.images();
  std::vector<int> steps;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < line.size(); ++i) {
      if (line[i] > line[i + 1]) {
        std::swap(line[i], line[i + 1]);
        steps.push_back(static_cast<int>(i));
        swapped = true;
      }
    }
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

Permutation compose_word(int n, const std::vector<int>& word) {
  Permutation p = Permutation::identity(n);
  for (int i : word) p = p * Permutation::adjacent(n, i);
  return p;
}

std::vector<Permutation> shuffles(int n, int k) {
  // Choose which output positions receive the first block; both blocks keep their order.
  std::vector<Permutation> out;
  const int total = n + k;
  std::vector<bool> mask(static_cast<std::size_t>(total), false);
  std::fill(mask.begin(), mask.begin() + n, true);
  std::sort(mask.begin(), mask.end());
  do {
    std::vector<int> images(static_cast<std::size_t>(total));
    int first = 0;
    int second = n;
    for (int pos = 0; pos < total; ++pos) {
      if (mask[static_cast<std::size_t>(pos)]) {
        images[static_cast<std::size_t>(first++)] = pos;
      } else {
        images[static_cast<std::size_t>(second++)] = pos;
      }
    }
    out.emplace_back(std::move(images));
  } while (std::next_permutation(mask.begin(), mask.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace braidcl
