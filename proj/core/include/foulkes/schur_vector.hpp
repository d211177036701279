#pragma once

#include <map>
#include <utility>

#include "foulkes/numeric.hpp"
#include "foulkes/partition.hpp"

namespace foulkes {

// An integer combination of irreducibles (equivalently of Schur
// functions) of one weight. Coefficients may be negative for virtual
// characters; zero coefficients are never stored.
struct SchurVector {
  int n = 0;
  std::map<Partition, Int, CanonicalLess> coeffs;

  SchurVector() = default;
  explicit SchurVector(int weight) : n(weight) {}

  void add(const Partition& la, const Int& c) {
    if (c == 0) return;
    auto it = coeffs.find(la);
    if (it == coeffs.end()) {
      coeffs.emplace(la, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs.erase(it);
    }
  }

  Int coeff(const Partition& la) const {
    auto it = coeffs.find(la);
    return it == coeffs.end() ? Int(0) : it->second;
  }

  bool is_nonnegative() const {
    for (const auto& [la, c] : coeffs)
      if (c < 0) return false;
    return true;
  }

  bool operator==(const SchurVector&) const = default;
};

// An integer combination of outer tensor products S^mu x S^lambda with
// mu of weight k and lambda of weight m.
struct BipartiteDecomposition {
  int k = 0, m = 0;
  std::map<std::pair<Partition, Partition>, Int, PairCanonicalLess> coeffs;

  BipartiteDecomposition() = default;
  BipartiteDecomposition(int k_, int m_) : k(k_), m(m_) {}

  void add(const Partition& mu, const Partition& lambda, const Int& c) {
    if (c == 0) return;
    auto key = std::make_pair(mu, lambda);
    auto it = coeffs.find(key);
    if (it == coeffs.end()) {
      coeffs.emplace(std::move(key), c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs.erase(it);
    }
  }

  Int coeff(const Partition& mu, const Partition& lambda) const {
    auto it = coeffs.find(std::make_pair(mu, lambda));
    return it == coeffs.end() ? Int(0) : it->second;
  }

  // All (lambda, c) with first component mu, in canonical order.
  std::map<Partition, Int, CanonicalLess> row(const Partition& mu) const {
    std::map<Partition, Int, CanonicalLess> out;
    for (const auto& [key, c] : coeffs)
      if (key.first == mu) out.emplace(key.second, c);
    return out;
  }

  bool is_nonnegative() const {
    for (const auto& [key, c] : coeffs)
      if (c < 0) return false;
    return true;
  }

  bool operator==(const BipartiteDecomposition&) const = default;
};

}  // namespace foulkes
