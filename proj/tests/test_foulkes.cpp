#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <utility>
#include <vector>

#include "foulkes/characters.hpp"
#include "foulkes/errors.hpp"
#include "foulkes/foulkes_modules.hpp"
#include "foulkes/partition.hpp"
#include "foulkes/symfun.hpp"
#include "foulkes/tableaux.hpp"

using namespace foulkes;

TEST_CASE("the square-block module of weight six") {
  const SchurVector f = foulkes_decomposition(Partition({3}), 2);
  CHECK(f.coeffs.size() == 3);
  CHECK(f.coeff(Partition({6})) == 1);
  CHECK(f.coeff(Partition({4, 2})) == 1);
  CHECK(f.coeff(Partition({2, 2, 2})) == 1);
  CHECK(dimension(f) == 15);
}

TEST_CASE("Kronecker coefficients against the trivial and sign shapes") {
  for (int b = 2; b <= 7; ++b) {
    const Partition row = Partition::single_row(b);
    const Partition col = Partition::single_column(b);
    for (const auto& mu : partitions_of(b)) {
      for (const auto& lambda : partitions_of(b)) {
        CHECK(kronecker(mu, lambda, row) == (mu == lambda ? 1 : 0));
        CHECK(kronecker(mu, lambda, col) == (mu == lambda.conjugate() ? 1 : 0));
      }
    }
  }
}

TEST_CASE("Kronecker coefficients are symmetric in all three arguments") {
  for (int b = 2; b <= 5; ++b) {
    for (const auto& mu : partitions_of(b)) {
      for (const auto& lambda : partitions_of(b)) {
        for (const auto& nu : partitions_of(b)) {
          const Int g = kronecker(mu, lambda, nu);
          CHECK(g == kronecker(lambda, mu, nu));
          CHECK(g == kronecker(nu, lambda, mu));
          CHECK(g == kronecker(mu, nu, lambda));
        }
      }
    }
  }
}

TEST_CASE("Kronecker coefficients survive conjugating two arguments") {
  for (int b = 2; b <= 6; ++b)
    for (const auto& mu : partitions_of(b))
      for (const auto& lambda : partitions_of(b))
        for (const auto& nu : partitions_of(b))
          CHECK(kronecker(mu, lambda, nu) ==
                kronecker(mu.conjugate(), lambda.conjugate(), nu));
}

TEST_CASE("a known mixed Kronecker value") {
  const Partition hook({2, 1});
  CHECK(kronecker(hook, hook, hook) == 1);
  CHECK(kronecker(hook, hook, Partition({3})) == 1);
  CHECK(kronecker(hook, hook, Partition({1, 1, 1})) == 1);
}

TEST_CASE("the diagonal cut character") {
  const PairClassFunction psi = u_character(Partition({2}));
  CHECK(psi.at(Partition({2}), Partition({2})) == 2);
  CHECK(psi.at(Partition({1, 1}), Partition({1, 1})) == 2);
  CHECK(psi.at(Partition({2}), Partition({1, 1})) == 0);
  CHECK(psi.at(Partition({1, 1}), Partition({2})) == 0);
}

TEST_CASE("cut module decompositions at inner degree two") {
  const auto u_row = u_decomposition(Partition({2}), 2);
  CHECK(u_row.coeffs.size() == 2);
  CHECK(u_row.coeff(Partition({2}), Partition({2})) == 1);
  CHECK(u_row.coeff(Partition({1, 1}), Partition({1, 1})) == 1);

  const auto u_col = u_decomposition(Partition({1, 1}), 2);
  CHECK(u_col.coeffs.size() == 2);
  CHECK(u_col.coeff(Partition({2}), Partition({1, 1})) == 1);
  CHECK(u_col.coeff(Partition({1, 1}), Partition({2})) == 1);
}

TEST_CASE("a cut module decomposition at inner degree three") {
  const auto u = u_decomposition(Partition({2}), 3);
  CHECK(u.coeffs.size() == 3);
  CHECK(u.coeff(Partition({2}), Partition({4})) == 1);
  CHECK(u.coeff(Partition({2}), Partition({2, 2})) == 1);
  CHECK(u.coeff(Partition({1, 1}), Partition({3, 1})) == 1);
}

TEST_CASE("cut module dimension is b! times the hook count") {
  for (int b = 2; b <= 5; ++b) {
    for (const auto& nu : partitions_of(b)) {
      const auto u = u_decomposition(nu, 2);
      CHECK(dimension(u) == factorial(b) * syt_count(nu));
      CHECK(u.is_nonnegative());
      // The same number sits at the identity of the diagonal character.
      const Partition id = Partition::single_column(b);
      CHECK(u_character(nu).at(id, id) == factorial(b) * syt_count(nu));
    }
  }
}

TEST_CASE("decomposing the diagonal character gives the Kronecker table") {
  for (int b = 2; b <= 5; ++b) {
    for (const auto& nu : partitions_of(b)) {
      const auto pairs = decompose_bipartite(u_character(nu));
      for (const auto& mu : partitions_of(b))
        for (const auto& lambda : partitions_of(b))
          CHECK(pairs.coeff(mu, lambda) == kronecker(mu, lambda, nu));
    }
  }
}

TEST_CASE("block system counting") {
  CHECK(count_block_systems(2, 2) == 3);
  CHECK(count_block_systems(2, 3) == 15);
  CHECK(count_block_systems(3, 2) == 10);
  CHECK(count_block_systems(2, 4) == 105);
  CHECK(count_block_systems(3, 3) == 280);
  CHECK(count_block_systems(1, 5) == 1);
  CHECK(count_block_systems(5, 1) == 1);
}

TEST_CASE("typed system counts at the smallest square") {
  CHECK(count_systems_with_type(2, 2, 1, Partition({1})) == 3);
  CHECK(count_systems_with_type(2, 2, 2, Partition({2})) == 1);
  CHECK(count_systems_with_type(2, 2, 2, Partition({1, 1})) == 2);
  CHECK(count_systems_with_type(2, 2, 3, Partition({2, 1})) == 3);
}

TEST_CASE("transversal system counts") {
  for (int b = 2; b <= 4; ++b)
    CHECK(count_systems_with_type(2, b, b, Partition::single_column(b)) ==
          factorial(b));
}

TEST_CASE("typed counts reject shapes outside the rectangle") {
  CHECK_THROWS_AS(count_systems_with_type(2, 2, 3, Partition({3})), UsageError);
  CHECK_THROWS_AS(count_systems_with_type(2, 2, 2, Partition({1})), UsageError);
  CHECK_THROWS_AS(count_systems_with_type(2, 2, 3, Partition({1, 1, 1})), UsageError);
}

TEST_CASE("submodule dimensions sum to the whole module") {
  for (auto [a, b] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    for (const auto& nu : partitions_of(b)) {
      const Int whole = dimension(foulkes_decomposition(nu, a));
      for (int k = 1; k < a * b; ++k) {
        Int sum = 0;
        for (const auto& lambda : omega_k(a, b, k))
          sum += submodule_dimension(a, b, k, lambda, nu);
        CHECK(sum == whole);
      }
    }
  }
}

TEST_CASE("verifier sweeps at desk scale") {
  for (const auto& nu : partitions_of(2)) {
    CHECK(verify_theorem1(2, nu).verified());
    CHECK(verify_theorem1(3, nu).verified());
    CHECK(verify_sign_lemma(2, nu).verified());
    CHECK(verify_eq1(2, nu).verified());
  }
  for (const auto& nu : partitions_of(3)) {
    CHECK(verify_theorem1(2, nu).verified());
    CHECK(verify_sign_lemma(2, nu).verified());
    CHECK(verify_corollary6(1, nu).verified());
    CHECK(verify_corollary6(2, nu).verified());
    CHECK(verify_eq1(2, nu).verified());
  }
  CHECK(verify_tabloid_lemma(2, 2).verified());
  CHECK(verify_tabloid_lemma(2, 3).verified());
  CHECK(verify_tabloid_lemma(3, 2).verified());
  CHECK(verify_thrall_fb2(3).verified());
  CHECK(verify_thrall_fb2(4).verified());
  CHECK(verify_thrall_f2a(3).verified());
  CHECK(verify_thrall_f2a(4).verified());
  CHECK(verify_corollaries(3).verified());
  CHECK(verify_corollaries(4).verified());
  CHECK(verify_conjecture(2, 2).verified());
  CHECK(verify_conjecture(2, 3).verified());
  CHECK(verify_conjecture(2, 4).verified());
}

TEST_CASE("reports carry claim, params, and entry statuses") {
  const Report r = verify_theorem1(2, Partition({2}));
  const Json j = r.to_json();
  CHECK(j.at("claim") == "theorem1");
  CHECK(j.at("params").at("a") == 2);
  CHECK(j.at("status") == "verified");
  REQUIRE(j.at("details").is_array());
  CHECK(j.at("details").size() >= 3);
  for (const auto& entry : j.at("details")) {
    CHECK(entry.contains("status"));
    CHECK(entry.contains("what"));
  }
}

TEST_CASE("oversized instances are skipped with a note, not silently dropped") {
  // ab = 9 exceeds the default trace bound, so the straightening route
  // reports itself as skipped while the rest still verifies.
  const Report r = verify_theorem1(3, Partition({3}));
  CHECK(r.verified());
  bool skipped = false;
  for (const auto& e : r.entries) skipped |= (e.status == "skipped");
  CHECK(skipped);
}

TEST_CASE("merged sweep reports nest instances") {
  std::vector<Report> instances;
  instances.push_back(verify_thrall_fb2(2));
  instances.push_back(verify_thrall_fb2(3));
  const Report merged = merge_reports("thrall", Json{{"b", "2..3"}}, instances);
  CHECK(merged.verified());
  CHECK(merged.entries.size() == 2);
  const Json j = merged.to_json();
  CHECK(j.at("details").size() == 2);
}

TEST_CASE("usage preconditions") {
  CHECK_THROWS_AS(u_decomposition(Partition({2}), 1), UsageError);
  CHECK_THROWS_AS(verify_theorem1(1, Partition({2})), UsageError);
  CHECK_THROWS_AS(verify_conjecture(3, 2), UsageError);
  CHECK_THROWS_AS(kronecker(Partition({2}), Partition({3}), Partition({2})),
                  UsageError);
  CHECK_THROWS_AS(submodule_dimension(2, 2, 2, Partition({2}), Partition({3})),
                  UsageError);
}
