#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace braidcl {

/// Permutation of {0..n-1} in one-line notation: position i is sent to images()[i].
///
/// Composition is (p * q)(i) = p(q(i)). The lift of p to tensor powers moves the
/// factor at position i to position p(i).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  /// One-based one-line notation, e.g. {2, 3, 1}.
  static Permutation one_based(std::initializer_list<int> images);
  static Permutation identity(int n);
  /// The adjacent transposition swapping positions i and i+1 (zero-based).
  static Permutation adjacent(int n, int i);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  int inversions() const;
  bool is_identity() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<int> images_;
};

/// +1 or -1 according to the parity of the inversion count.
int sign(const Permutation& p);

/// Zero-based adjacent-transposition indices w with p = s_{w[0]} s_{w[1]} ... s_{w[k-1]}.
/// Length equals the inversion count. Obtained by bubble sorting the one-line notation.
std::vector<int> reduced_word(const Permutation& p);

/// Product of adjacent transpositions along a word, leftmost outermost.
Permutation compose_word(int n, const std::vector<int>& word);

/// Permutations of n+k letters increasing on {0..n-1} and on {n..n+k-1}.
std::vector<Permutation> shuffles(int n, int k);

/// All of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

}  // namespace braidcl
