#pragma once

#include <vector>

#include "foulkes/partition.hpp"

namespace foulkes {

// A permutation of {1, ..., n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  // The canonical class representative for a cycle type: consecutive
  // cycles (1 2 ... r1)(r1+1 ...)..., so representatives are stable
  // across runs.
  static Permutation from_cycle_type(const CycleType& rho);

  // Representative of a class of the Young subgroup S_k x S_{n-k}:
  // rho acts on {1..k}, sigma on {k+1..n}.
  static Permutation cut_representative(const CycleType& rho, const CycleType& sigma);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int x) const { return images_[static_cast<size_t>(x - 1)]; }

  // (f.compose(g))(x) = f(g(x)), so compose matches left group action.
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  int sign() const;
  CycleType cycle_type() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// Parity of the permutation sorting `seq` ascending: +1 or -1 by
// inversion count. Entries must be distinct.
int sequence_sign(const std::vector<int>& seq);

// All permutations of {1..n} in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

}  // namespace foulkes
