#pragma once

#include <vector>

#include "foulkes/bounds.hpp"
#include "foulkes/class_function.hpp"
#include "foulkes/numeric.hpp"
#include "foulkes/partition.hpp"
#include "foulkes/schur_vector.hpp"

namespace foulkes {

struct CharacterTable {
  int n = 0;
  std::vector<Partition> classes;           // canonical order
  std::vector<std::vector<Int>> rows;       // rows[lambda index][class index]

  const std::vector<Int>& row(const Partition& lambda) const {
    return rows[static_cast<size_t>(partition_index(n, lambda))];
  }
  const Int& value(const Partition& lambda, const CycleType& rho) const {
    return row(lambda)[static_cast<size_t>(partition_index(n, rho))];
  }
};

// chi^lambda(rho) by the Murnaghan-Nakayama border strip recursion on
// beta numbers. Memoized across calls.
Int mn_character(const Partition& lambda, const CycleType& rho);

// The full table for S_n, built once per n and cached. `parallelism`
// only affects construction speed, never values.
const CharacterTable& character_table(int n, const Bounds& bounds = kDefaultBounds,
                                      int parallelism = 1);

// <f, g> = (1/n!) sum_rho |class rho| f(rho) g(rho), exact.
Rat inner_product(const ClassFunction& f, const ClassFunction& g);

// Multiplicity map lambda -> <f, chi^lambda>. Throws IntegralityError if
// any inner product is fractional; negative entries are kept (virtual
// characters), callers check is_nonnegative().
SchurVector decompose_class_function(const ClassFunction& f,
                                     const Bounds& bounds = kDefaultBounds);

// Same for a class function on S_k x S_m against chi^mu x chi^lambda.
BipartiteDecomposition decompose_bipartite(const PairClassFunction& f,
                                           const Bounds& bounds = kDefaultBounds);

// The row of the character table as a ClassFunction.
ClassFunction irreducible_character(const Partition& lambda,
                                    const Bounds& bounds = kDefaultBounds);

namespace detail {
// Uncached table construction, for benchmarks.
CharacterTable build_character_table(int n, int parallelism);
}  // namespace detail

}  // namespace foulkes
