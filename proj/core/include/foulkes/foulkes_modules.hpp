#pragma once

#include "foulkes/bounds.hpp"
#include "foulkes/class_function.hpp"
#include "foulkes/numeric.hpp"
#include "foulkes/partition.hpp"
#include "foulkes/report.hpp"
#include "foulkes/schur_vector.hpp"

namespace foulkes {

// Knobs shared by the verification routines.
struct VerifyOptions {
  Bounds bounds{};
  int threads = 1;
};

// Schur expansion of the generalized Foulkes module F_nu^a, the
// S_ab-module induced from S_a wr S_b by inflating the Specht module of
// the outer shape nu. Equals the plethysm s_nu[h_a].
SchurVector foulkes_decomposition(const Partition& nu, int a,
                                  const Bounds& bounds = kDefaultBounds);

// Kronecker coefficient g(mu, lambda, nu): multiplicity of S^nu in the
// inner tensor product S^mu (x) S^lambda, all three shapes of one weight.
Int kronecker(const Partition& mu, const Partition& lambda, const Partition& nu,
              const Bounds& bounds = kDefaultBounds, int threads = 1);

// Character of the cut module U_{nu,a} on class pairs of S_b x S_b:
// supported on the diagonal, where it takes z_rho * chi^nu(rho).
PairClassFunction u_character(const Partition& nu,
                              const Bounds& bounds = kDefaultBounds,
                              int threads = 1);

// Decomposition of U_{nu,a} as an S_b x S_{(a-1)b} module: the coefficient
// of S^mu x S^kappa is sum over lambda of g(mu, lambda, nu) times the
// coefficient of s_kappa in s_lambda[h_{a-1}]. Needs a >= 2.
BipartiteDecomposition u_decomposition(const Partition& nu, int a,
                                       const Bounds& bounds = kDefaultBounds,
                                       int threads = 1);

// Total number of block systems on {1..ab}: (ab)! / ((a!)^b b!).
Int count_block_systems(int a, int b);

// Number of block systems whose intersection type with {1..k} is lambda,
// by the closed multinomial formula.
Int count_systems_with_type(int a, int b, int k, const Partition& lambda);

// Dimension of the span V_lambda of basis vectors with intersection type
// lambda: the system count above times f^nu.
Int submodule_dimension(int a, int b, int k, const Partition& lambda,
                        const Partition& nu);

// Each verifier recomputes one claim along independent routes and reports
// per-check entries; Report::verified() is the overall outcome. The claim
// strings match the CLI's verify subcommand.

// U_{nu,a} against the transversal part of the wreath realization: the
// closed form, the diagonal character route, and (within trace bounds)
// the explicit straightening oracle must all agree. Needs a >= 2.
Report verify_theorem1(int a, const Partition& nu, const VerifyOptions& opts = {});

// The sign-isotypic rows match: restricting F_nu^a to S_b x S_{(a-1)b}
// and cutting to mu = (1^b) gives exactly the (1^b) row of U_{nu,a}.
Report verify_sign_lemma(int a, const Partition& nu, const VerifyOptions& opts = {});

// Summing f^nu copies of F_nu^a over all nu of weight b gives the full
// tabloid permutation module of shape (a^b).
Report verify_tabloid_lemma(int a, int b, const VerifyOptions& opts = {});

// Multiplicity transfer under conjugating the outer shape: the
// coefficient of S^mu in F_nu^a equals the coefficient of S^{mu+(1^b)} in
// F_{nu'}^{a+1}, where mu+(1^b) adds one box to each of the first b rows.
Report verify_corollary6(int a, const Partition& nu, const VerifyOptions& opts = {});

// Thrall: F_(b)^2 = sum of S^{2*lambda} over lambda of weight b, each
// part doubled, multiplicity free.
Report verify_thrall_fb2(int b, const VerifyOptions& opts = {});

// Thrall: F_(2)^a = sum of two-row S^{(2a-j, j)} with j even, checked
// against the character-free monomial expansion.
Report verify_thrall_f2a(int a, const VerifyOptions& opts = {});

// U_{(b),2} is the diagonal sum of S^lambda x S^lambda and U_{(1^b),2}
// its conjugate twist, both of dimension b!.
Report verify_corollaries(int b, const VerifyOptions& opts = {});

// The block system counts: closed formula sums to the total over each cut
// point, matches brute enumeration within bounds, and the f^nu scaling
// recovers the dimension of F_nu^a.
Report verify_eq1(int a, const Partition& nu, const VerifyOptions& opts = {});

// Coefficientwise containment of F_(a)^b inside F_(b)^a for a <= b.
Report verify_conjecture(int a, int b, const VerifyOptions& opts = {});

}  // namespace foulkes
