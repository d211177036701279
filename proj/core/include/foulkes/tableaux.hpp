#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "foulkes/bounds.hpp"
#include "foulkes/class_function.hpp"
#include "foulkes/numeric.hpp"
#include "foulkes/partition.hpp"
#include "foulkes/perm.hpp"

namespace foulkes {

// A bijective filling of the Young diagram of `shape` by {1..b}, stored
// row-major. Text form "[1,2/3,4]" lists rows separated by '/'.
class Tableau {
 public:
  Tableau(Partition shape, std::vector<int> entries);

  const Partition& shape() const { return shape_; }
  int size() const { return shape_.weight(); }
  int rows() const { return shape_.length(); }
  int row_length(int r) const { return shape_.part(r); }
  int column_length(int c) const;

  int at(int r, int c) const {
    return entries_[static_cast<size_t>(offsets_[static_cast<size_t>(r)] + c)];
  }
  int& at(int r, int c) {
    return entries_[static_cast<size_t>(offsets_[static_cast<size_t>(r)] + c)];
  }
  const std::vector<int>& entries() const { return entries_; }

  // Rows increase left to right, columns increase top to bottom.
  bool is_standard() const;

  // Entries replaced by their images under g (a permutation of {1..b}).
  Tableau relabeled(const Permutation& g) const;

  std::string to_string() const;

  bool operator==(const Tableau&) const = default;
  auto operator<=>(const Tableau& o) const {
    if (auto c = shape_ <=> o.shape_; c != 0) return c;
    return entries_ <=> o.entries_;
  }

 private:
  Partition shape_;
  std::vector<int> entries_;
  std::vector<int> offsets_;  // start of each row in entries_
};

// A row-equivalence class of tableaux: only the set of entries in each
// row matters. Canonical form keeps each row sorted.
class Tabloid {
 public:
  explicit Tabloid(const Tableau& t);

  const std::vector<std::vector<int>>& rows() const { return rows_; }

  bool operator==(const Tabloid&) const = default;
  auto operator<=>(const Tabloid& o) const { return rows_ <=> o.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
};

// An integer combination of standard polytabloids of one shape.
struct PolytabloidVector {
  Partition shape;
  std::map<Tableau, Int> terms;

  PolytabloidVector() = default;
  explicit PolytabloidVector(Partition s) : shape(std::move(s)) {}

  void add(const Tableau& t, const Int& c) {
    if (c == 0) return;
    auto it = terms.find(t);
    if (it == terms.end()) {
      terms.emplace(t, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  bool operator==(const PolytabloidVector&) const = default;
};

// All standard Young tableaux of the given shape, in a fixed
// deterministic order (by row index of each successive placement).
std::vector<Tableau> standard_tableaux(const Partition& nu);

// Number of standard tableaux, by the hook length formula.
Int syt_count(const Partition& nu);

// The signed tabloid expansion of the polytabloid e_t: sum over the
// column group of t with signs.
std::map<Tabloid, Int> expand_to_tabloids(const Tableau& t);
std::map<Tabloid, Int> expand_to_tabloids(const PolytabloidVector& v);

// Rewrites e_t as an integer combination of standard polytabloids using
// column sorting and Garnir relations. Results are memoized.
PolytabloidVector straighten(const Tableau& t);

// The Specht module action of g, expressed in the standard basis.
PolytabloidVector specht_action(const Permutation& g, const Tableau& t);
PolytabloidVector specht_action(const Permutation& g, const PolytabloidVector& v);

// The irreducible character of shape nu computed by brute-force traces
// of the straightened action. Only sensible for small b; checks the
// configured bound.
ClassFunction specht_character(const Partition& nu,
                               const Bounds& bounds = kDefaultBounds);

namespace detail {
// Uncached straightening, for benchmarks.
PolytabloidVector straighten_impl(const Tableau& t);
}  // namespace detail

}  // namespace foulkes
