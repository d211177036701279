#include "foulkes/perm.hpp"

#include <algorithm>
#include <numeric>

#include "foulkes/errors.hpp"

namespace foulkes {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > degree() || seen[static_cast<size_t>(v - 1)])
      throw UsageError("not a permutation in one-line notation");
    seen[static_cast<size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycle_type(const CycleType& rho) {
  int n = rho.weight();
  std::vector<int> img(static_cast<size_t>(n));
  int start = 1;
  for (int i = 0; i < rho.length(); ++i) {
    int len = rho.part(i);
    for (int j = 0; j < len; ++j)
      img[static_cast<size_t>(start + j - 1)] = start + (j + 1) % len;
    start += len;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::cut_representative(const CycleType& rho, const CycleType& sigma) {
  int k = rho.weight(), m = sigma.weight();
  Permutation top = from_cycle_type(rho);
  Permutation bottom = from_cycle_type(sigma);
  std::vector<int> img(static_cast<size_t>(k + m));
  for (int x = 1; x <= k; ++x) img[static_cast<size_t>(x - 1)] = top.apply(x);
  for (int x = 1; x <= m; ++x) img[static_cast<size_t>(k + x - 1)] = k + bottom.apply(x);
  return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (degree() != other.degree()) throw UsageError("composing permutations of different degrees");
  std::vector<int> img(images_.size());
  for (int x = 1; x <= degree(); ++x)
    img[static_cast<size_t>(x - 1)] = apply(other.apply(x));
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int x = 1; x <= degree(); ++x) img[static_cast<size_t>(apply(x) - 1)] = x;
  return Permutation(std::move(img));
}

int Permutation::sign() const { return sequence_sign(images_); }

CycleType Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> lens;
  for (int x = 1; x <= degree(); ++x) {
    if (seen[static_cast<size_t>(x - 1)]) continue;
    int len = 0, y = x;
    do {
      seen[static_cast<size_t>(y - 1)] = true;
      y = apply(y);
      ++len;
    } while (y != x);
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<int>());
  return CycleType(std::move(lens));
}

int sequence_sign(const std::vector<int>& seq) {
  int inversions = 0;
  for (size_t i = 0; i < seq.size(); ++i)
    for (size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace foulkes
