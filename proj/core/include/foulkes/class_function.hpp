#pragma once

#include <vector>

#include "foulkes/numeric.hpp"
#include "foulkes/partition.hpp"

namespace foulkes {

// A class function on S_n, stored dense: values[i] is the value on the
// class partitions_of(n)[i]. Dense because p(16) = 231 keeps tables tiny
// and indexing trivial.
struct ClassFunction {
  int n = 0;
  std::vector<Int> values;

  ClassFunction() = default;
  explicit ClassFunction(int weight)
      : n(weight), values(partitions_of(weight).size(), Int(0)) {}

  Int& at(const CycleType& rho) {
    return values[static_cast<size_t>(partition_index(n, rho))];
  }
  const Int& at(const CycleType& rho) const {
    return values[static_cast<size_t>(partition_index(n, rho))];
  }

  bool operator==(const ClassFunction&) const = default;
};

// A class function on S_k x S_m, dense over pairs of classes.
struct PairClassFunction {
  int k = 0, m = 0;
  std::vector<std::vector<Int>> values;  // [class of S_k][class of S_m]

  PairClassFunction() = default;
  PairClassFunction(int k_, int m_)
      : k(k_),
        m(m_),
        values(partitions_of(k_).size(),
               std::vector<Int>(partitions_of(m_).size(), Int(0))) {}

  Int& at(const CycleType& rho, const CycleType& sigma) {
    return values[static_cast<size_t>(partition_index(k, rho))]
                 [static_cast<size_t>(partition_index(m, sigma))];
  }
  const Int& at(const CycleType& rho, const CycleType& sigma) const {
    return values[static_cast<size_t>(partition_index(k, rho))]
                 [static_cast<size_t>(partition_index(m, sigma))];
  }

  bool operator==(const PairClassFunction&) const = default;
};

}  // namespace foulkes
