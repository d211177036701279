#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "foulkes/numeric.hpp"

namespace foulkes {

// An integer partition: weakly decreasing positive parts, no trailing
// zeros. The default-constructed value is the empty partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  static Partition rectangle(int a, int b);    // (a^b)
  static Partition single_row(int n);          // (n), empty for n = 0
  static Partition single_column(int n);       // (1^n)

  // Text form "[3,1]"; the empty partition is "[]".
  static Partition parse(std::string_view text);
  std::string to_string() const;

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // 0-based; rows past the end have size 0, so part(i) is total.
  int part(int i) const {
    return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
  }

  Partition conjugate() const;

  bool operator==(const Partition&) const = default;
  // Plain lexicographic order on the part vectors, for use as a map key
  // where canonical order does not matter.
  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

using CycleType = Partition;

// Canonical order: reverse lexicographic, so [n] comes first and [1^n]
// last. Every partition-keyed map and every emitted sequence uses this.
bool canonical_less(const Partition& x, const Partition& y);

struct CanonicalLess {
  bool operator()(const Partition& x, const Partition& y) const {
    return canonical_less(x, y);
  }
};

struct PairCanonicalLess {
  bool operator()(const std::pair<Partition, Partition>& x,
                  const std::pair<Partition, Partition>& y) const {
    if (x.first != y.first) return canonical_less(x.first, y.first);
    return canonical_less(x.second, y.second);
  }
};

// All partitions of n in canonical order. Cached; the reference stays
// valid for the life of the process.
const std::vector<Partition>& partitions_of(int n);

// Position of rho within partitions_of(n).
int partition_index(int n, const Partition& rho);

// Whether mu dominates lambda (prefix sums of mu all >= those of
// lambda). Throws UsageError if the weights differ.
bool dominates(const Partition& mu, const Partition& lambda);

// Partitions of k that fit inside the rectangle (a^b): at most b parts,
// each at most a. Requires 1 <= k < a*b.
std::vector<Partition> omega_k(int a, int b, int k);

// Componentwise sum, shorter argument padded with zeros.
Partition add_partitions(const Partition& x, const Partition& y);

// Whether mu's diagram is contained in nu's.
bool contains(const Partition& nu, const Partition& mu);

// Order of the centralizer of a permutation of cycle type rho in
// S_{|rho|}: prod_i i^{m_i} m_i! over multiplicities m_i.
Int centralizer_order(const CycleType& rho);

// Size of the conjugacy class: n! / centralizer_order.
Int class_size(const CycleType& rho);

}  // namespace foulkes
