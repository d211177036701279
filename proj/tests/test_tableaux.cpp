#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "foulkes/errors.hpp"
#include "foulkes/partition.hpp"
#include "foulkes/perm.hpp"
#include "foulkes/tableaux.hpp"

using namespace foulkes;

namespace {

unsigned test_seed() {
  static const unsigned seed = [] {
    unsigned s = 20260816u;
    if (const char* env = std::getenv("FOULKES_TEST_SEED")) s = std::stoul(env);
    std::cout << "random fillings seeded with " << s
              << " (override via FOULKES_TEST_SEED)\n";
    return s;
  }();
  return seed;
}

Tableau random_filling(const Partition& shape, std::mt19937& rng) {
  std::vector<int> entries(static_cast<size_t>(shape.weight()));
  std::iota(entries.begin(), entries.end(), 1);
  std::shuffle(entries.begin(), entries.end(), rng);
  return Tableau(shape, std::move(entries));
}

}  // namespace

TEST_CASE("standard tableaux are enumerated and counted consistently") {
  for (int b = 1; b <= 6; ++b) {
    for (const auto& shape : partitions_of(b)) {
      const auto tabs = standard_tableaux(shape);
      CHECK(Int(tabs.size()) == syt_count(shape));
      for (const auto& t : tabs) CHECK(t.is_standard());
    }
  }
  CHECK(syt_count(Partition({2, 2})) == 2);
  CHECK(syt_count(Partition({3, 2})) == 5);
  CHECK(syt_count(Partition({2, 2, 1})) == 5);
  CHECK(syt_count(Partition({4, 3, 2, 1})) == 768);
  CHECK(syt_count(Partition::single_row(9)) == 1);
}

TEST_CASE("tableau accessors and text form") {
  const Tableau t(Partition({2, 2}), {1, 2, 3, 4});
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(1, 1) == 4);
  CHECK(t.column_length(0) == 2);
  CHECK(t.to_string() == "[1,2/3,4]");
  CHECK(t.is_standard());
  CHECK_FALSE(Tableau(Partition({2, 2}), {2, 1, 3, 4}).is_standard());
  CHECK_THROWS_AS(Tableau(Partition({2, 2}), {1, 2, 3, 3}), UsageError);
  CHECK_THROWS_AS(Tableau(Partition({2, 2}), {1, 2, 3}), UsageError);
}

TEST_CASE("polytabloid expansion of the smallest two-row square") {
  const Tableau t(Partition({2, 2}), {1, 2, 3, 4});
  const auto expansion = expand_to_tabloids(t);
  REQUIRE(expansion.size() == 4);

  auto tabloid = [](std::vector<int> top, std::vector<int> bottom) {
    std::vector<int> entries = top;
    entries.insert(entries.end(), bottom.begin(), bottom.end());
    return Tabloid(Tableau(Partition({2, 2}), entries));
  };
  CHECK(expansion.at(tabloid({1, 2}, {3, 4})) == 1);
  CHECK(expansion.at(tabloid({3, 4}, {1, 2})) == 1);
  CHECK(expansion.at(tabloid({2, 3}, {1, 4})) == -1);
  CHECK(expansion.at(tabloid({1, 4}, {2, 3})) == -1);
}

TEST_CASE("straightening fixes standard tableaux") {
  for (int b = 1; b <= 5; ++b) {
    for (const auto& shape : partitions_of(b)) {
      for (const auto& t : standard_tableaux(shape)) {
        const auto v = straighten(t);
        REQUIRE(v.terms.size() == 1);
        CHECK(v.terms.begin()->first == t);
        CHECK(v.terms.begin()->second == 1);
      }
    }
  }
}

TEST_CASE("straightening a column-descending square filling") {
  // Rows (2,1) / (3,4): columns are already sorted, one Garnir move
  // across the top-row descent resolves the filling.
  const Tableau t(Partition({2, 2}), {2, 1, 3, 4});
  const auto v = straighten(t);
  REQUIRE(v.terms.size() == 2);
  CHECK(v.terms.at(Tableau(Partition({2, 2}), {1, 2, 3, 4})) == 1);
  CHECK(v.terms.at(Tableau(Partition({2, 2}), {1, 3, 2, 4})) == -1);
}

TEST_CASE("straightening preserves the tabloid expansion exhaustively") {
  for (int b = 2; b <= 4; ++b) {
    for (const auto& shape : partitions_of(b)) {
      std::vector<int> entries(static_cast<size_t>(b));
      std::iota(entries.begin(), entries.end(), 1);
      do {
        const Tableau t(shape, entries);
        CHECK(expand_to_tabloids(straighten(t)) == expand_to_tabloids(t));
      } while (std::next_permutation(entries.begin(), entries.end()));
    }
  }
}

TEST_CASE("straightening preserves the tabloid expansion on random fillings") {
  std::mt19937 rng(test_seed());
  for (int b = 5; b <= 6; ++b) {
    const auto& shapes = partitions_of(b);
    for (int trial = 0; trial < 500; ++trial) {
      const auto& shape = shapes[trial % shapes.size()];
      const Tableau t = random_filling(shape, rng);
      CHECK(expand_to_tabloids(straighten(t)) == expand_to_tabloids(t));
    }
  }
}

TEST_CASE("straightened coefficients stay within the basis") {
  std::mt19937 rng(test_seed() + 1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& shapes = partitions_of(6);
    const auto& shape = shapes[trial % shapes.size()];
    const auto v = straighten(random_filling(shape, rng));
    for (const auto& [s, c] : v.terms) {
      CHECK(s.is_standard());
      CHECK(c != 0);
    }
  }
}

TEST_CASE("the module action composes") {
  const Partition shape({2, 2});
  const auto tabs = standard_tableaux(shape);
  const auto group = all_permutations(4);
  for (const auto& g : group) {
    for (const auto& h : group) {
      const Permutation gh = g.compose(h);
      for (const auto& t : tabs) {
        const auto two_steps = specht_action(g, specht_action(h, t));
        const auto one_step = specht_action(gh, t);
        CHECK(two_steps == one_step);
      }
    }
  }
}

TEST_CASE("relabeling by a permutation maps entries") {
  const Tableau t(Partition({2, 1}), {1, 2, 3});
  const Permutation g({2, 3, 1});
  CHECK(t.relabeled(g) == Tableau(Partition({2, 1}), {2, 3, 1}));
}

TEST_CASE("brute traced characters of the square shape") {
  const auto chi = specht_character(Partition({2, 2}));
  CHECK(chi.at(Partition({4})) == 0);
  CHECK(chi.at(Partition({3, 1})) == -1);
  CHECK(chi.at(Partition({2, 2})) == 2);
  CHECK(chi.at(Partition({2, 1, 1})) == 0);
  CHECK(chi.at(Partition({1, 1, 1, 1})) == 2);
}

TEST_CASE("brute traced characters of row shapes are constant one") {
  for (int b = 1; b <= 5; ++b) {
    const auto chi = specht_character(Partition::single_row(b));
    for (const auto& rho : partitions_of(b)) CHECK(chi.at(rho) == 1);
  }
}

TEST_CASE("brute character tracing refuses large symmetric groups") {
  CHECK_THROWS_AS(specht_character(Partition({4, 4})), BoundError);
}
