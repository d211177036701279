#include "foulkes/characters.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "foulkes/errors.hpp"
#include "foulkes/parallel.hpp"

namespace foulkes {

namespace {

// Beta numbers with exactly length(lambda) beads: beta_i = lambda_i +
// (l - i), strictly decreasing. Removing a border strip of length r is
// moving one bead down by r onto a free slot; the strip height is the
// number of beads jumped over.
std::vector<int> beta_numbers(const Partition& lambda) {
  int l = lambda.length();
  std::vector<int> beta(static_cast<size_t>(l));
  for (int i = 0; i < l; ++i)
    beta[static_cast<size_t>(i)] = lambda.part(i) + (l - 1 - i);
  return beta;
}

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<int>());
  int l = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < l; ++i) {
    int p = beta[static_cast<size_t>(i)] - (l - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

Partition drop_first_part(const Partition& rho) {
  std::vector<int> parts(rho.parts().begin() + 1, rho.parts().end());
  return Partition(std::move(parts));
}

Int mn_recursive(const Partition& lambda, const Partition& rho);

Int mn_uncached(const Partition& lambda, const Partition& rho) {
  if (lambda.weight() == 0) return 1;
  int r = rho.part(0);
  Partition rest = drop_first_part(rho);
  std::vector<int> beta = beta_numbers(lambda);
  Int total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - r;
    if (target < 0) continue;
    bool occupied = false;
    int height = 0;
    for (size_t j = 0; j < beta.size(); ++j) {
      if (j == i) continue;
      if (beta[j] == target) occupied = true;
      if (beta[j] > target && beta[j] < beta[i]) ++height;
    }
    if (occupied) continue;
    std::vector<int> moved = beta;
    moved[i] = target;
    Int sub = mn_recursive(from_beta(std::move(moved)), rest);
    if (height % 2 == 0)
      total += sub;
    else
      total -= sub;
  }
  return total;
}

Int mn_recursive(const Partition& lambda, const Partition& rho) {
  static std::mutex mu;
  static std::map<std::pair<Partition, Partition>, Int> cache;
  auto key = std::make_pair(lambda, rho);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Int value = mn_uncached(lambda, rho);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::move(key), std::move(value)).first->second;
}

}  // namespace

Int mn_character(const Partition& lambda, const CycleType& rho) {
  if (lambda.weight() != rho.weight())
    throw UsageError("character argument weight mismatch: " + lambda.to_string() +
                     " vs " + rho.to_string());
  return mn_recursive(lambda, rho);
}

namespace detail {

CharacterTable build_character_table(int n, int parallelism) {
  CharacterTable table;
  table.n = n;
  table.classes = partitions_of(n);
  size_t count = table.classes.size();
  table.rows.assign(count, {});
  parallel_for(static_cast<int>(count), parallelism, [&](int i) {
    const Partition& lambda = table.classes[static_cast<size_t>(i)];
    std::vector<Int> row;
    row.reserve(count);
    for (const Partition& rho : table.classes)
      row.push_back(mn_recursive(lambda, rho));
    table.rows[static_cast<size_t>(i)] = std::move(row);
  });
  return table;
}

}  // namespace detail

const CharacterTable& character_table(int n, const Bounds& bounds, int parallelism) {
  if (n < 0) throw UsageError("negative symmetric group weight");
  if (n > bounds.char_table)
    throw BoundError("character table bound n <= " + std::to_string(bounds.char_table) +
                     " exceeded (got n=" + std::to_string(n) + ")");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CharacterTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    auto built = std::make_unique<CharacterTable>(detail::build_character_table(n, parallelism));
    it = cache.emplace(n, std::move(built)).first;
  }
  return *it->second;
}

Rat inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.n != g.n)
    throw UsageError("inner product needs class functions of one weight");
  const auto& classes = partitions_of(f.n);
  Int acc = 0;
  for (size_t i = 0; i < classes.size(); ++i)
    acc += class_size(classes[i]) * f.values[i] * g.values[i];
  return Rat(acc, factorial(f.n));
}

SchurVector decompose_class_function(const ClassFunction& f, const Bounds& bounds) {
  const CharacterTable& table = character_table(f.n, bounds);
  SchurVector out(f.n);
  const auto& classes = table.classes;
  std::vector<Int> weights;
  weights.reserve(classes.size());
  for (const auto& rho : classes) weights.push_back(class_size(rho));
  Int order = factorial(f.n);
  for (size_t li = 0; li < classes.size(); ++li) {
    Int acc = 0;
    for (size_t ci = 0; ci < classes.size(); ++ci)
      acc += weights[ci] * f.values[ci] * table.rows[li][ci];
    Rat m(acc, order);
    if (!is_integral(m))
      throw IntegralityError("non-integral multiplicity of " +
                             classes[li].to_string() + ": corrupted class function");
    out.add(classes[li], numerator(m));
  }
  return out;
}

BipartiteDecomposition decompose_bipartite(const PairClassFunction& f, const Bounds& bounds) {
  const CharacterTable& top = character_table(f.k, bounds);
  const CharacterTable& bottom = character_table(f.m, bounds);
  const auto& k_classes = top.classes;
  const auto& m_classes = bottom.classes;
  std::vector<Int> k_weights, m_weights;
  for (const auto& rho : k_classes) k_weights.push_back(class_size(rho));
  for (const auto& sigma : m_classes) m_weights.push_back(class_size(sigma));
  Int order = factorial(f.k) * factorial(f.m);

  BipartiteDecomposition out(f.k, f.m);
  for (size_t mi = 0; mi < k_classes.size(); ++mi) {
    for (size_t lj = 0; lj < m_classes.size(); ++lj) {
      Int acc = 0;
      for (size_t ri = 0; ri < k_classes.size(); ++ri) {
        if (top.rows[mi][ri] == 0) continue;
        Int partial = 0;
        for (size_t sj = 0; sj < m_classes.size(); ++sj)
          partial += m_weights[sj] * f.values[ri][sj] * bottom.rows[lj][sj];
        acc += k_weights[ri] * top.rows[mi][ri] * partial;
      }
      Rat c(acc, order);
      if (!is_integral(c))
        throw IntegralityError("non-integral bipartite multiplicity at (" +
                               k_classes[mi].to_string() + "," +
                               m_classes[lj].to_string() + ")");
      out.add(k_classes[mi], m_classes[lj], numerator(c));
    }
  }
  return out;
}

ClassFunction irreducible_character(const Partition& lambda, const Bounds& bounds) {
  const CharacterTable& table = character_table(lambda.weight(), bounds);
  ClassFunction chi(lambda.weight());
  chi.values = table.row(lambda);
  return chi;
}

}  // namespace foulkes
