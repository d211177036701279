#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "foulkes/errors.hpp"
#include "foulkes/partition.hpp"
#include "foulkes/symfun.hpp"
#include "foulkes/tableaux.hpp"

using namespace foulkes;

namespace {

SchurVector make(int n, std::vector<std::pair<Partition, Int>> entries) {
  SchurVector v(n);
  for (auto& [la, c] : entries) v.add(la, c);
  return v;
}

}  // namespace

TEST_CASE("classic Littlewood-Richardson values") {
  CHECK(lr_coefficient(Partition({3, 2, 1}), Partition({2, 1}), Partition({2, 1})) == 2);
  CHECK(lr_coefficient(Partition({4, 2}), Partition({2, 1}), Partition({2, 1})) == 1);
  CHECK(lr_coefficient(Partition({2, 1}), Partition({1}), Partition({1, 1})) == 1);
  CHECK(lr_coefficient(Partition({2, 2}), Partition({2}), Partition({1, 1})) == 0);
  CHECK(lr_coefficient(Partition({4, 2}), Partition({1, 1}), Partition({2, 2})) == 0);
  CHECK_THROWS_AS(lr_coefficient(Partition({3}), Partition({1}), Partition({1})),
                  UsageError);
}

TEST_CASE("tableau counting agrees with the character route") {
  for (int k = 1; k <= 3; ++k) {
    const int m = 6 - k;
    for (const auto& mu : partitions_of(k))
      for (const auto& lambda : partitions_of(m))
        for (const auto& nu : partitions_of(6))
          CHECK(lr_coefficient(nu, mu, lambda) ==
                lr_coefficient_via_characters(nu, mu, lambda));
  }
}

TEST_CASE("Kostka numbers") {
  CHECK(kostka_number(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(kostka_number(Partition({3, 1}), Partition({2, 1, 1})) == 2);
  CHECK(kostka_number(Partition({2, 2}), Partition({2, 1, 1})) == 1);
  CHECK(kostka_number(Partition({2, 2}), Partition({1, 1, 1, 1})) == 2);
  for (const auto& la : partitions_of(6)) {
    CHECK(kostka_number(la, la) == 1);
    for (const auto& mu : partitions_of(6))
      if (!dominates(la, mu)) CHECK(kostka_number(la, mu) == 0);
  }
}

TEST_CASE("tabloid modules expand with Kostka multiplicities") {
  CHECK(young_module(Partition({2, 2})) ==
        make(4, {{Partition({4}), 1}, {Partition({3, 1}), 1}, {Partition({2, 2}), 1}}));

  const SchurVector regular = young_module(Partition::single_column(4));
  for (const auto& la : partitions_of(4))
    CHECK(regular.coeff(la) == syt_count(la));

  for (const auto& mu : partitions_of(6)) {
    const SchurVector m = young_module(mu);
    CHECK(m.coeff(mu) == 1);
    for (const auto& la : partitions_of(6))
      CHECK(m.coeff(la) == kostka_number(la, mu));
  }
}

TEST_CASE("multiplying by a one-row shape follows the interlacing rule") {
  SchurVector base(3);
  base.add(Partition({2, 1}), 1);
  CHECK(multiply_by_h(base, 2) ==
        make(5, {{Partition({4, 1}), 1},
                 {Partition({3, 2}), 1},
                 {Partition({3, 1, 1}), 1},
                 {Partition({2, 2, 1}), 1}}));
}

TEST_CASE("induction products") {
  SchurVector left(2), right(1);
  left.add(Partition({2}), 1);
  right.add(Partition({1}), 1);
  CHECK(induce_product(left, right) ==
        make(3, {{Partition({3}), 1}, {Partition({2, 1}), 1}}));
}

TEST_CASE("restriction of small modules") {
  SchurVector top(4);
  top.add(Partition({4}), 1);
  const auto res_row = restrict_module(top, 2);
  CHECK(res_row.coeffs.size() == 1);
  CHECK(res_row.coeff(Partition({2}), Partition({2})) == 1);

  SchurVector square(4);
  square.add(Partition({2, 2}), 1);
  const auto res_square = restrict_module(square, 2);
  CHECK(res_square.coeffs.size() == 2);
  CHECK(res_square.coeff(Partition({2}), Partition({2})) == 1);
  CHECK(res_square.coeff(Partition({1, 1}), Partition({1, 1})) == 1);
}

TEST_CASE("restriction preserves dimension") {
  for (int k = 1; k <= 5; ++k) {
    SchurVector x(6);
    x.add(Partition({3, 2, 1}), 1);
    x.add(Partition({4, 2}), 2);
    const Int before = dimension(x);
    CHECK(dimension(restrict_module(x, k)) == before);
  }
}

TEST_CASE("plethysms with inner degree two") {
  CHECK(plethysm_h(Partition({2}), 2) ==
        make(4, {{Partition({4}), 1}, {Partition({2, 2}), 1}}));
  CHECK(plethysm_h(Partition({1, 1}), 2) == make(4, {{Partition({3, 1}), 1}}));
  CHECK(plethysm_h(Partition({3}), 2) ==
        make(6, {{Partition({6}), 1}, {Partition({4, 2}), 1}, {Partition({2, 2, 2}), 1}}));
  CHECK(plethysm_h(Partition({2, 1}), 2) ==
        make(6, {{Partition({5, 1}), 1}, {Partition({4, 2}), 1}, {Partition({3, 2, 1}), 1}}));
  CHECK(plethysm_h(Partition({1, 1, 1}), 2) ==
        make(6, {{Partition({4, 1, 1}), 1}, {Partition({3, 3}), 1}}));
}

TEST_CASE("plethysms with inner degree three") {
  CHECK(plethysm_h(Partition({2}), 3) ==
        make(6, {{Partition({6}), 1}, {Partition({4, 2}), 1}}));
  CHECK(plethysm_h(Partition({1, 1}), 3) ==
        make(6, {{Partition({5, 1}), 1}, {Partition({3, 3}), 1}}));
}

TEST_CASE("inner degree one is the identity") {
  for (int b = 1; b <= 6; ++b)
    for (const auto& nu : partitions_of(b))
      CHECK(plethysm_h(nu, 1) == make(b, {{nu, 1}}));
}

TEST_CASE("the monomial route agrees with the power sum route") {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; a * b <= 8; ++b) {
      for (const auto& nu : partitions_of(b))
        CHECK(plethysm_h_monomial(nu, a) == plethysm_h(nu, a));
    }
  }
}

TEST_CASE("plethysm coefficients are nonnegative and count dimensions") {
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; a * b <= 10; ++b) {
      Int systems = factorial(a * b);
      for (int i = 0; i < b; ++i) systems /= factorial(a);
      systems /= factorial(b);
      for (const auto& nu : partitions_of(b)) {
        const SchurVector p = plethysm_h(nu, a);
        CHECK(p.is_nonnegative());
        CHECK(dimension(p) == systems * syt_count(nu));
      }
    }
  }
}

TEST_CASE("summing plethysms with hook count weights fills the tabloid module") {
  for (auto [a, b] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{2, 4}}) {
    SchurVector weighted(a * b);
    for (const auto& nu : partitions_of(b)) {
      const SchurVector p = plethysm_h(nu, a);
      const Int f = syt_count(nu);
      for (const auto& [la, c] : p.coeffs) weighted.add(la, f * c);
    }
    CHECK(weighted == young_module(Partition::rectangle(a, b)));
  }
}

TEST_CASE("plethysm bounds are enforced") {
  Bounds tight;
  tight.plethysm = 8;
  CHECK_THROWS_AS(plethysm_h(Partition({3}), 3, tight), BoundError);
  CHECK_THROWS_AS(plethysm_h_monomial(Partition({3}), 3), BoundError);
  CHECK(plethysm_h_monomial(Partition({3}), 3, kDefaultBounds, 9) ==
        plethysm_h(Partition({3}), 3));
  CHECK_THROWS_AS(plethysm_h(Partition({2}), 0), UsageError);
}
