#pragma once

#include <compare>
#include <map>
#include <vector>

#include "foulkes/bounds.hpp"
#include "foulkes/class_function.hpp"
#include "foulkes/numeric.hpp"
#include "foulkes/partition.hpp"
#include "foulkes/perm.hpp"
#include "foulkes/schur_vector.hpp"
#include "foulkes/tableaux.hpp"

namespace foulkes {

// Partition of {1..ab} into b unordered blocks of size a.  Canonical form:
// every block sorted ascending, blocks ordered by their least element.
class BlockSystem {
 public:
  BlockSystem(int a, int b, std::vector<std::vector<int>> blocks);

  int a() const { return a_; }
  int b() const { return b_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  // Block sizes after cutting to {1..k}: the nonzero values |X_i ∩ {1..k}|
  // in weakly decreasing order.  Lies in Omega_k.
  Partition intersection_type(int k) const;

  // Image system {g(X_1), ..., g(X_b)}, recanonicalized.
  BlockSystem apply(const Permutation& g) const;

  friend bool operator==(const BlockSystem& x, const BlockSystem& y) {
    return x.blocks_ == y.blocks_;
  }
  friend std::strong_ordering operator<=>(const BlockSystem& x, const BlockSystem& y) {
    return x.blocks_ <=> y.blocks_;
  }

 private:
  int a_;
  int b_;
  std::vector<std::vector<int>> blocks_;
};

// All block systems on {1..ab} in increasing canonical order.  There are
// (ab)! / ((a!)^b b!) of them; refuses ab past bounds.oracle.
std::vector<BlockSystem> enumerate_block_systems(int a, int b,
                                                 const Bounds& bounds = kDefaultBounds);

// Histogram of intersection types with {1..k} over the given systems.
std::map<Partition, Int, CanonicalLess> intersection_type_counts(
    const std::vector<BlockSystem>& systems, int k);

// Result of acting by g on a basis vector (t, X): the image lives over the
// canonical form Y of gX, with block_perm sending the letter l of t to the
// position of g(X_l) in Y, and terms the straightened tableau part.
struct WreathImage {
  BlockSystem system;
  Permutation block_perm;
  PolytabloidVector terms;
};

WreathImage act_and_straighten(const Permutation& g, const Tableau& t,
                               const BlockSystem& x);

// Concrete realization of the module F_nu^a on {1..ab}: basis vectors are
// pairs (standard tableau of shape nu, block system), with S_ab permuting
// the ground set.  Dimension is f^nu * (ab)! / ((a!)^b b!).
class OracleModule {
 public:
  OracleModule(int a, int b, Partition nu, const Bounds& bounds = kDefaultBounds);

  int a() const { return a_; }
  int b() const { return b_; }
  const Partition& nu() const { return nu_; }
  const std::vector<Tableau>& tableaux() const { return tableaux_; }
  const std::vector<BlockSystem>& systems() const { return systems_; }
  int dimension() const;

  // Basis index of (tableaux()[ti], systems()[si]).
  int basis_index(int ti, int si) const;

  // Column j holds the image of basis vector j: out[i][j] is the
  // coefficient of basis i in g * basis j.  Refuses dimensions past 10^4.
  std::vector<std::vector<Int>> action_matrix(const Permutation& g) const;

  // Trace of g, summing straightening coefficients over the basis vectors
  // whose block system is fixed by g.
  Int trace(const Permutation& g) const;

 private:
  int a_;
  int b_;
  Partition nu_;
  std::vector<Tableau> tableaux_;
  std::vector<BlockSystem> systems_;
};

// Character of the submodule V_lambda spanned by the basis vectors whose
// block system meets {1..k} with type lambda, as a function on conjugacy
// class pairs of S_k x S_{ab-k}.  Refuses ab past bounds.trace.
PairClassFunction oracle_character(int a, int b, const Partition& nu, int k,
                                   const Partition& lambda,
                                   const Bounds& bounds = kDefaultBounds);

// Decomposition of V_lambda into S^mu x S^kappa, straight from the traced
// character.  Everything here is computed by explicit straightening, so it
// is an independent check on the symmetric function route.
BipartiteDecomposition oracle_decompose(int a, int b, const Partition& nu, int k,
                                        const Partition& lambda,
                                        const Bounds& bounds = kDefaultBounds);

}  // namespace foulkes
