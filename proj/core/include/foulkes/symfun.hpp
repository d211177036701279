#pragma once

#include "foulkes/bounds.hpp"
#include "foulkes/numeric.hpp"
#include "foulkes/partition.hpp"
#include "foulkes/schur_vector.hpp"

namespace foulkes {

// Littlewood-Richardson coefficient c^nu_{mu,lambda}, counted by the
// skew tableau rule (semistandard, content lambda, lattice reading
// word). Memoized. Requires |nu| = |mu| + |lambda|.
Int lr_coefficient(const Partition& nu, const Partition& mu, const Partition& lambda);

// The same coefficient through characters of the Young subgroup, kept
// as an independent cross-check of the tableau rule.
Int lr_coefficient_via_characters(const Partition& nu, const Partition& mu,
                                  const Partition& lambda,
                                  const Bounds& bounds = kDefaultBounds);

// Induction product: S^mu x S^lambda from S_k x S_m up to S_{k+m},
// extended bilinearly.
SchurVector induce_product(const SchurVector& x, const SchurVector& y);

// Restriction of an S_n decomposition to S_k x S_{n-k}.
BipartiteDecomposition restrict_module(const SchurVector& x, int k);

// Kostka number K_{lambda,mu}: semistandard tableaux of shape lambda and
// content mu, counted directly. Memoized.
Int kostka_number(const Partition& lambda, const Partition& mu);

// The Young permutation module M^mu = h_mu, decomposed by iterated
// Pieri products.
SchurVector young_module(const Partition& mu);

// Multiplication by a full homogeneous row: Pieri's rule.
SchurVector multiply_by_h(const SchurVector& x, int r);

// s_nu[h_a] through the power-sum basis: exact rationals internally,
// integrality and nonnegativity asserted on the way out. Results are
// memoized. Requires |nu|*a within bounds.plethysm.
SchurVector plethysm_h(const Partition& nu, int a,
                       const Bounds& bounds = kDefaultBounds);

// The same plethysm by brute monomial expansion in ab variables,
// Schur-expanded with Kostka numbers only: no character theory in this
// path, so it is an independent oracle. Requires |nu|*a within
// bounds.monomial unless `bound_override` lifts it.
SchurVector plethysm_h_monomial(const Partition& nu, int a,
                                const Bounds& bounds = kDefaultBounds,
                                int bound_override = 0);

// Total dimension sum of coeff * f^lambda.
Int dimension(const SchurVector& x);
Int dimension(const BipartiteDecomposition& x);

namespace detail {
// Uncached plethysm, for benchmarks.
SchurVector plethysm_h_impl(const Partition& nu, int a, const Bounds& bounds);
}  // namespace detail

}  // namespace foulkes
