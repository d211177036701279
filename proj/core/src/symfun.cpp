#include "foulkes/symfun.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "foulkes/characters.hpp"
#include "foulkes/errors.hpp"
#include "foulkes/tableaux.hpp"

namespace foulkes {

namespace {

// Counts semistandard skew fillings of nu/mu with content lambda whose
// reverse reading word is a lattice word. Cells are filled in reading
// order (rows top to bottom, right to left within a row) so the lattice
// property can be checked as each letter is placed.
struct LrCounter {
  const Partition& nu;
  const Partition& mu;
  const Partition& lambda;
  std::vector<std::vector<int>> grid;  // 0 = unfilled
  std::vector<int> counts;             // letters placed so far
  std::vector<std::pair<int, int>> order;
  Int total = 0;

  LrCounter(const Partition& nu_, const Partition& mu_, const Partition& lambda_)
      : nu(nu_), mu(mu_), lambda(lambda_), counts(static_cast<size_t>(lambda_.length()) + 1, 0) {
    grid.resize(static_cast<size_t>(nu.length()));
    for (int r = 0; r < nu.length(); ++r)
      grid[static_cast<size_t>(r)].assign(static_cast<size_t>(nu.part(r)), 0);
    for (int r = 0; r < nu.length(); ++r)
      for (int c = nu.part(r) - 1; c >= mu.part(r); --c) order.emplace_back(r, c);
  }

  void fill(size_t pos) {
    if (pos == order.size()) {
      ++total;
      return;
    }
    auto [r, c] = order[pos];
    for (int v = 1; v <= lambda.length(); ++v) {
      if (counts[static_cast<size_t>(v)] >= lambda.part(v - 1)) continue;
      // lattice: after placing v there must be at least as many v-1's
      if (v > 1 && counts[static_cast<size_t>(v - 1)] < counts[static_cast<size_t>(v)] + 1)
        continue;
      // row weakly increasing: right neighbour already filled
      if (c + 1 < nu.part(r) && grid[static_cast<size_t>(r)][static_cast<size_t>(c + 1)] != 0 &&
          v > grid[static_cast<size_t>(r)][static_cast<size_t>(c + 1)])
        continue;
      // column strictly increasing: cell above filled earlier if present
      if (r > 0 && c < nu.part(r - 1) && c >= mu.part(r - 1) &&
          v <= grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c)])
        continue;
      grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
      counts[static_cast<size_t>(v)] += 1;
      fill(pos + 1);
      counts[static_cast<size_t>(v)] -= 1;
      grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
    }
  }
};

}  // namespace

Int lr_coefficient(const Partition& nu, const Partition& mu, const Partition& lambda) {
  if (nu.weight() != mu.weight() + lambda.weight())
    throw UsageError("Littlewood-Richardson needs |nu| = |mu| + |lambda|");
  if (!contains(nu, mu)) return 0;
  static std::mutex cache_mu;
  static std::map<std::tuple<Partition, Partition, Partition>, Int> cache;
  auto key = std::make_tuple(nu, mu, lambda);
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  LrCounter counter(nu, mu, lambda);
  counter.fill(0);
  std::lock_guard<std::mutex> lock(cache_mu);
  return cache.emplace(std::move(key), counter.total).first->second;
}

Int lr_coefficient_via_characters(const Partition& nu, const Partition& mu,
                                  const Partition& lambda, const Bounds& bounds) {
  if (nu.weight() != mu.weight() + lambda.weight())
    throw UsageError("Littlewood-Richardson needs |nu| = |mu| + |lambda|");
  int k = mu.weight(), m = lambda.weight();
  const CharacterTable& top = character_table(k, bounds);
  const CharacterTable& bottom = character_table(m, bounds);
  // <s_mu s_lambda, s_nu> expanded over pairs of classes: power sums of
  // the two factors concatenate.
  Rat acc = 0;
  for (const CycleType& rho : partitions_of(k)) {
    for (const CycleType& sigma : partitions_of(m)) {
      std::vector<int> merged(rho.parts());
      merged.insert(merged.end(), sigma.parts().begin(), sigma.parts().end());
      std::sort(merged.begin(), merged.end(), std::greater<int>());
      Int chi_nu = mn_character(nu, CycleType(std::move(merged)));
      if (chi_nu == 0) continue;
      Int num = top.value(mu, rho) * bottom.value(lambda, sigma) * chi_nu;
      acc += Rat(num, centralizer_order(rho) * centralizer_order(sigma));
    }
  }
  if (!is_integral(acc)) throw IntegralityError("fractional LR coefficient");
  return numerator(acc);
}

SchurVector induce_product(const SchurVector& x, const SchurVector& y) {
  SchurVector out(x.n + y.n);
  for (const Partition& nu : partitions_of(x.n + y.n)) {
    Int acc = 0;
    for (const auto& [mu, cx] : x.coeffs)
      for (const auto& [la, cy] : y.coeffs)
        acc += cx * cy * lr_coefficient(nu, mu, la);
    out.add(nu, acc);
  }
  return out;
}

BipartiteDecomposition restrict_module(const SchurVector& x, int k) {
  if (k < 0 || k > x.n)
    throw UsageError("restriction cut must satisfy 0 <= k <= n, got k=" +
                     std::to_string(k));
  int m = x.n - k;
  BipartiteDecomposition out(k, m);
  for (const auto& [nu, c] : x.coeffs) {
    for (const Partition& mu : partitions_of(k)) {
      if (!contains(nu, mu)) continue;
      for (const Partition& la : partitions_of(m)) {
        Int lr = lr_coefficient(nu, mu, la);
        if (lr != 0) out.add(mu, la, c * lr);
      }
    }
  }
  return out;
}

namespace {

// Counts semistandard tableaux of shape lambda, content mu, by the same
// reading-order backtracking as the LR counter minus the lattice rule.
struct KostkaCounter {
  const Partition& lambda;
  const Partition& mu;
  std::vector<std::vector<int>> grid;
  std::vector<int> counts;
  std::vector<std::pair<int, int>> order;
  Int total = 0;

  KostkaCounter(const Partition& lambda_, const Partition& mu_)
      : lambda(lambda_), mu(mu_), counts(static_cast<size_t>(mu_.length()) + 1, 0) {
    grid.resize(static_cast<size_t>(lambda.length()));
    for (int r = 0; r < lambda.length(); ++r)
      grid[static_cast<size_t>(r)].assign(static_cast<size_t>(lambda.part(r)), 0);
    for (int r = 0; r < lambda.length(); ++r)
      for (int c = lambda.part(r) - 1; c >= 0; --c) order.emplace_back(r, c);
  }

  void fill(size_t pos) {
    if (pos == order.size()) {
      ++total;
      return;
    }
    auto [r, c] = order[pos];
    for (int v = 1; v <= mu.length(); ++v) {
      if (counts[static_cast<size_t>(v)] >= mu.part(v - 1)) continue;
      if (c + 1 < lambda.part(r) &&
          v > grid[static_cast<size_t>(r)][static_cast<size_t>(c + 1)])
        continue;
      if (r > 0 && v <= grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c)])
        continue;
      grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
      counts[static_cast<size_t>(v)] += 1;
      fill(pos + 1);
      counts[static_cast<size_t>(v)] -= 1;
      grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
    }
  }
};

}  // namespace

Int kostka_number(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw UsageError("Kostka number needs equal weights");
  if (!dominates(lambda, mu)) return 0;
  static std::mutex cache_mu;
  static std::map<std::pair<Partition, Partition>, Int> cache;
  auto key = std::make_pair(lambda, mu);
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  KostkaCounter counter(lambda, mu);
  counter.fill(0);
  std::lock_guard<std::mutex> lock(cache_mu);
  return cache.emplace(std::move(key), counter.total).first->second;
}

SchurVector multiply_by_h(const SchurVector& x, int r) {
  if (r < 0) throw UsageError("negative row weight");
  SchurVector out(x.n + r);
  for (const auto& [la, c] : x.coeffs) {
    // All mu obtained from la by a horizontal strip of size r:
    // interlacing mu_1 >= la_1 >= mu_2 >= la_2 >= ...
    std::vector<int> mu(static_cast<size_t>(la.length()) + 1, 0);
    std::function<void(int, int)> place = [&](int row, int remaining) {
      if (row > la.length()) {
        if (remaining == 0) {
          std::vector<int> parts;
          for (int p : mu)
            if (p > 0) parts.push_back(p);
          out.add(Partition(std::move(parts)), c);
        }
        return;
      }
      int lo = la.part(row);          // mu_row >= la_row
      int hi = row == 0 ? la.part(0) + remaining
                        : std::min(la.part(row - 1), la.part(row) + remaining);
      for (int v = lo; v <= hi; ++v) {
        mu[static_cast<size_t>(row)] = v;
        place(row + 1, remaining - (v - la.part(row)));
      }
      mu[static_cast<size_t>(row)] = 0;
    };
    place(0, r);
  }
  return out;
}

SchurVector young_module(const Partition& mu) {
  SchurVector acc(0);
  acc.add(Partition(), 1);
  for (int i = 0; i < mu.length(); ++i) acc = multiply_by_h(acc, mu.part(i));
  return acc;
}

namespace {

// A rational combination of power sums of one weight.
using PowerVector = std::map<Partition, Rat, CanonicalLess>;

void pv_add(PowerVector& acc, const Partition& key, const Rat& c) {
  if (c == 0) return;
  auto it = acc.find(key);
  if (it == acc.end()) {
    acc.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

Partition merge_parts(const Partition& x, const Partition& y) {
  std::vector<int> parts(x.parts());
  parts.insert(parts.end(), y.parts().begin(), y.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

PowerVector pv_multiply(const PowerVector& x, const PowerVector& y) {
  PowerVector out;
  for (const auto& [px, cx] : x)
    for (const auto& [py, cy] : y) pv_add(out, merge_parts(px, py), cx * cy);
  return out;
}

// p_r[h_a] in the power-sum basis: substituting p_m -> p_{rm} into
// h_a = sum_{sigma |- a} p_sigma / z_sigma.
PowerVector p_r_of_h(int r, int a) {
  PowerVector out;
  for (const CycleType& sigma : partitions_of(a)) {
    std::vector<int> scaled;
    scaled.reserve(static_cast<size_t>(sigma.length()));
    for (int p : sigma.parts()) scaled.push_back(p * r);
    pv_add(out, Partition(std::move(scaled)), Rat(1, centralizer_order(sigma)));
  }
  return out;
}

}  // namespace

namespace detail {

SchurVector plethysm_h_impl(const Partition& nu, int a, const Bounds& bounds) {
  int b = nu.weight();
  int n = a * b;
  // s_nu = sum_rho chi^nu(rho) p_rho / z_rho, and plethysm by h_a sends
  // p_rho to the product of the p_{rho_i}[h_a].
  const CharacterTable& outer = character_table(b, bounds);
  PowerVector total;
  for (const CycleType& rho : partitions_of(b)) {
    const Int& chi = outer.value(nu, rho);
    if (chi == 0) continue;
    PowerVector term;
    term.emplace(Partition(), Rat(1));
    for (int i = 0; i < rho.length(); ++i)
      term = pv_multiply(term, p_r_of_h(rho.part(i), a));
    Rat scale(chi, centralizer_order(rho));
    for (const auto& [key, c] : term) pv_add(total, key, scale * c);
  }

  // Back to the Schur basis: coefficient of s_lambda is
  // sum_rho c_rho chi^lambda(rho), since <p_rho, p_sigma> = z delta.
  const CharacterTable& inner = character_table(n, bounds);
  SchurVector out(n);
  for (const Partition& lambda : partitions_of(n)) {
    Rat acc = 0;
    for (const auto& [rho, c] : total) acc += c * inner.value(lambda, rho);
    if (acc == 0) continue;
    if (!is_integral(acc))
      throw IntegralityError("fractional plethysm coefficient at " + lambda.to_string());
    Int coeff = numerator(acc);
    if (coeff < 0)
      throw IntegralityError("negative plethysm coefficient at " + lambda.to_string());
    out.add(lambda, coeff);
  }
  return out;
}

}  // namespace detail

SchurVector plethysm_h(const Partition& nu, int a, const Bounds& bounds) {
  if (a < 1) throw UsageError("inner row weight a must be >= 1");
  int n = a * nu.weight();
  if (n > bounds.plethysm)
    throw BoundError("plethysm bound ab <= " + std::to_string(bounds.plethysm) +
                     " exceeded (got ab=" + std::to_string(n) + ")");
  static std::mutex cache_mu;
  static std::map<std::pair<Partition, int>, SchurVector> cache;
  auto key = std::make_pair(nu, a);
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  SchurVector result = detail::plethysm_h_impl(nu, a, bounds);
  std::lock_guard<std::mutex> lock(cache_mu);
  return cache.emplace(std::move(key), std::move(result)).first->second;
}

namespace {

// Exponent vectors of all degree-a monomials in m variables, i.e. the
// inputs fed to the outer Schur function in the brute monomial route.
std::vector<std::vector<int>> monomials_of_degree(int m, int a) {
  std::vector<std::vector<int>> out;
  std::vector<int> expo(static_cast<size_t>(m), 0);
  std::function<void(int, int)> place = [&](int var, int remaining) {
    if (var == m - 1) {
      expo[static_cast<size_t>(var)] = remaining;
      out.push_back(expo);
      expo[static_cast<size_t>(var)] = 0;
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      expo[static_cast<size_t>(var)] = v;
      place(var + 1, remaining - v);
      expo[static_cast<size_t>(var)] = 0;
    }
  };
  place(0, a);
  return out;
}

// Accumulates, over all semistandard tableaux of shape nu with entries
// in 1..N, the product of the chosen monomials; only exponent vectors
// that are already weakly decreasing are kept (the coefficient of x^mu
// for mu a partition is exactly the monomial coefficient).
struct MonomialExpander {
  const Partition& nu;
  const std::vector<std::vector<int>>& monos;
  std::vector<std::vector<int>> grid;
  std::vector<int> expo;
  std::map<Partition, Int, CanonicalLess>& out;

  MonomialExpander(const Partition& nu_, const std::vector<std::vector<int>>& monos_,
                   int m, std::map<Partition, Int, CanonicalLess>& out_)
      : nu(nu_), monos(monos_), expo(static_cast<size_t>(m), 0), out(out_) {
    grid.resize(static_cast<size_t>(nu.length()));
    for (int r = 0; r < nu.length(); ++r)
      grid[static_cast<size_t>(r)].assign(static_cast<size_t>(nu.part(r)), 0);
  }

  void fill(int r, int c) {
    if (r == nu.length()) {
      bool sorted = true;
      for (size_t i = 0; i + 1 < expo.size() && sorted; ++i)
        if (expo[i] < expo[i + 1]) sorted = false;
      if (sorted) {
        std::vector<int> parts;
        for (int e : expo)
          if (e > 0) parts.push_back(e);
        Partition key(std::move(parts));
        auto it = out.find(key);
        if (it == out.end())
          out.emplace(std::move(key), Int(1));
        else
          it->second += 1;
      }
      return;
    }
    int next_r = (c + 1 < nu.part(r)) ? r : r + 1;
    int next_c = (c + 1 < nu.part(r)) ? c + 1 : 0;
    int lo = 1;
    if (c > 0) lo = grid[static_cast<size_t>(r)][static_cast<size_t>(c - 1)];
    if (r > 0) lo = std::max(lo, grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
    for (int v = lo; v <= static_cast<int>(monos.size()); ++v) {
      grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
      const auto& mono = monos[static_cast<size_t>(v - 1)];
      for (size_t i = 0; i < expo.size(); ++i) expo[i] += mono[i];
      fill(next_r, next_c);
      for (size_t i = 0; i < expo.size(); ++i) expo[i] -= mono[i];
      grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
    }
  }
};

}  // namespace

SchurVector plethysm_h_monomial(const Partition& nu, int a, const Bounds& bounds,
                                int bound_override) {
  if (a < 1) throw UsageError("inner row weight a must be >= 1");
  int b = nu.weight();
  int n = a * b;
  int limit = bound_override > 0 ? bound_override : bounds.monomial;
  if (n > limit)
    throw BoundError("monomial plethysm bound ab <= " + std::to_string(limit) +
                     " exceeded (got ab=" + std::to_string(n) + ")");
  if (n == 0) {
    SchurVector unit(0);
    unit.add(Partition(), 1);
    return unit;
  }

  std::vector<std::vector<int>> monos = monomials_of_degree(n, a);
  std::map<Partition, Int, CanonicalLess> mono_coeffs;
  MonomialExpander expander(nu, monos, n, mono_coeffs);
  expander.fill(0, 0);

  // Peel off Schur functions from the lex-top down; the Kostka matrix is
  // unitriangular against dominance, which canonical order refines.
  SchurVector out(n);
  for (const Partition& lambda : partitions_of(n)) {
    auto it = mono_coeffs.find(lambda);
    if (it == mono_coeffs.end() || it->second == 0) continue;
    Int c = it->second;
    if (c < 0) throw IntegralityError("negative monomial coefficient at " + lambda.to_string());
    out.add(lambda, c);
    for (const Partition& mu : partitions_of(n)) {
      if (!dominates(lambda, mu)) continue;
      Int k = kostka_number(lambda, mu);
      if (k == 0) continue;
      auto jt = mono_coeffs.find(mu);
      if (jt == mono_coeffs.end())
        mono_coeffs.emplace(mu, -c * k);
      else
        jt->second -= c * k;
    }
  }
  for (const auto& [mu, rem] : mono_coeffs)
    if (rem != 0)
      throw IntegralityError("monomial expansion did not resolve at " + mu.to_string());
  return out;
}

Int dimension(const SchurVector& x) {
  Int acc = 0;
  for (const auto& [la, c] : x.coeffs) acc += c * syt_count(la);
  return acc;
}

Int dimension(const BipartiteDecomposition& x) {
  Int acc = 0;
  for (const auto& [key, c] : x.coeffs)
    acc += c * syt_count(key.first) * syt_count(key.second);
  return acc;
}

}  // namespace foulkes
