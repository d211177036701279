#include "foulkes/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "foulkes/characters.hpp"
#include "foulkes/errors.hpp"

namespace foulkes {

namespace {

int checked_image(const Permutation& g, int x) {
  return x <= g.degree() ? g.apply(x) : x;
}

}  // namespace

BlockSystem::BlockSystem(int a, int b, std::vector<std::vector<int>> blocks)
    : a_(a), b_(b), blocks_(std::move(blocks)) {
  if (a_ < 1 || b_ < 1) throw UsageError("block sizes must be positive");
  if (static_cast<int>(blocks_.size()) != b_)
    throw UsageError("block system needs exactly b blocks");
  std::vector<char> seen(static_cast<size_t>(a_ * b_) + 1, 0);
  for (auto& block : blocks_) {
    if (static_cast<int>(block.size()) != a_)
      throw UsageError("every block must have exactly a elements");
    std::sort(block.begin(), block.end());
    for (int x : block) {
      if (x < 1 || x > a_ * b_ || seen[static_cast<size_t>(x)])
        throw UsageError("blocks must partition {1..ab}");
      seen[static_cast<size_t>(x)] = 1;
    }
  }
  std::sort(blocks_.begin(), blocks_.end());
}

Partition BlockSystem::intersection_type(int k) const {
  if (k < 0 || k > a_ * b_) throw UsageError("cut point out of range");
  std::vector<int> sizes;
  for (const auto& block : blocks_) {
    int c = static_cast<int>(std::count_if(block.begin(), block.end(),
                                           [k](int x) { return x <= k; }));
    if (c > 0) sizes.push_back(c);
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return Partition(std::move(sizes));
}

BlockSystem BlockSystem::apply(const Permutation& g) const {
  std::vector<std::vector<int>> image(blocks_.size());
  for (size_t i = 0; i < blocks_.size(); ++i) {
    image[i].reserve(blocks_[i].size());
    for (int x : blocks_[i]) image[i].push_back(checked_image(g, x));
  }
  return BlockSystem(a_, b_, std::move(image));
}

namespace {

void grow_systems(int a, int b, std::vector<char>& used,
                  std::vector<std::vector<int>>& partial,
                  std::vector<BlockSystem>& out) {
  const int n = a * b;
  int first = 0;
  for (int x = 1; x <= n; ++x) {
    if (!used[static_cast<size_t>(x)]) {
      first = x;
      break;
    }
  }
  if (first == 0) {
    out.emplace_back(a, b, partial);
    return;
  }

  // The least unused element anchors the next block; choose its a-1
  // partners among the larger unused elements.
  std::vector<int> pool;
  for (int x = first + 1; x <= n; ++x)
    if (!used[static_cast<size_t>(x)]) pool.push_back(x);
  const int need = a - 1;
  if (static_cast<int>(pool.size()) < need) return;

  std::vector<int> pick(static_cast<size_t>(need));
  for (int i = 0; i < need; ++i) pick[static_cast<size_t>(i)] = i;
  while (true) {
    std::vector<int> block{first};
    for (int i : pick) block.push_back(pool[static_cast<size_t>(i)]);
    used[static_cast<size_t>(first)] = 1;
    for (int x : block) used[static_cast<size_t>(x)] = 1;
    partial.push_back(block);
    grow_systems(a, b, used, partial, out);
    partial.pop_back();
    for (int x : block) used[static_cast<size_t>(x)] = 0;

    int i = need - 1;
    while (i >= 0 &&
           pick[static_cast<size_t>(i)] == static_cast<int>(pool.size()) - need + i)
      --i;
    if (i < 0) break;
    ++pick[static_cast<size_t>(i)];
    for (int j = i + 1; j < need; ++j)
      pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
  }
}

}  // namespace

std::vector<BlockSystem> enumerate_block_systems(int a, int b, const Bounds& bounds) {
  if (a < 1 || b < 1) throw UsageError("block sizes must be positive");
  if (a * b > bounds.oracle) {
    std::ostringstream msg;
    msg << "refusing to enumerate block systems at ab = " << a * b
        << " (limit " << bounds.oracle << ")";
    throw BoundError(msg.str());
  }
  std::vector<BlockSystem> out;
  std::vector<char> used(static_cast<size_t>(a * b) + 1, 0);
  std::vector<std::vector<int>> partial;
  grow_systems(a, b, used, partial, out);
  return out;
}

std::map<Partition, Int, CanonicalLess> intersection_type_counts(
    const std::vector<BlockSystem>& systems, int k) {
  std::map<Partition, Int, CanonicalLess> counts;
  for (const auto& x : systems) counts[x.intersection_type(k)] += 1;
  return counts;
}

WreathImage act_and_straighten(const Permutation& g, const Tableau& t,
                               const BlockSystem& x) {
  if (t.size() != x.b()) throw UsageError("tableau letters must index the blocks");
  BlockSystem y = x.apply(g);

  // block_perm(l) locates g(X_l) inside the canonical order of Y.
  std::vector<int> images(static_cast<size_t>(x.b()));
  for (int l = 1; l <= x.b(); ++l) {
    std::vector<int> block;
    for (int e : x.blocks()[static_cast<size_t>(l - 1)])
      block.push_back(checked_image(g, e));
    std::sort(block.begin(), block.end());
    auto it = std::lower_bound(y.blocks().begin(), y.blocks().end(), block);
    images[static_cast<size_t>(l - 1)] =
        static_cast<int>(it - y.blocks().begin()) + 1;
  }
  Permutation block_perm(std::move(images));

  return WreathImage{std::move(y), block_perm, straighten(t.relabeled(block_perm))};
}

OracleModule::OracleModule(int a, int b, Partition nu, const Bounds& bounds)
    : a_(a), b_(b), nu_(std::move(nu)) {
  if (nu_.weight() != b_) throw UsageError("outer shape must be a partition of b");
  systems_ = enumerate_block_systems(a_, b_, bounds);
  tableaux_ = standard_tableaux(nu_);
}

int OracleModule::dimension() const {
  return static_cast<int>(tableaux_.size() * systems_.size());
}

int OracleModule::basis_index(int ti, int si) const {
  return si * static_cast<int>(tableaux_.size()) + ti;
}

std::vector<std::vector<Int>> OracleModule::action_matrix(const Permutation& g) const {
  const int dim = dimension();
  if (dim > 10000) {
    std::ostringstream msg;
    msg << "refusing to materialize a " << dim << "-dimensional action matrix";
    throw BoundError(msg.str());
  }
  std::map<Tableau, int> tab_index;
  for (size_t ti = 0; ti < tableaux_.size(); ++ti)
    tab_index.emplace(tableaux_[ti], static_cast<int>(ti));

  std::vector<std::vector<Int>> out(static_cast<size_t>(dim),
                                    std::vector<Int>(static_cast<size_t>(dim), 0));
  for (size_t si = 0; si < systems_.size(); ++si) {
    for (size_t ti = 0; ti < tableaux_.size(); ++ti) {
      WreathImage image = act_and_straighten(g, tableaux_[ti], systems_[si]);
      auto yit = std::lower_bound(systems_.begin(), systems_.end(), image.system);
      const int yi = static_cast<int>(yit - systems_.begin());
      const int col = basis_index(static_cast<int>(ti), static_cast<int>(si));
      for (const auto& [s, c] : image.terms.terms)
        out[static_cast<size_t>(basis_index(tab_index.at(s), yi))]
           [static_cast<size_t>(col)] += c;
    }
  }
  return out;
}

Int OracleModule::trace(const Permutation& g) const {
  Int total = 0;
  for (const auto& x : systems_) {
    if (!(x.apply(g) == x)) continue;
    for (const auto& t : tableaux_) {
      WreathImage image = act_and_straighten(g, t, x);
      auto it = image.terms.terms.find(t);
      if (it != image.terms.terms.end()) total += it->second;
    }
  }
  return total;
}

PairClassFunction oracle_character(int a, int b, const Partition& nu, int k,
                                   const Partition& lambda, const Bounds& bounds) {
  const int n = a * b;
  if (nu.weight() != b) throw UsageError("outer shape must be a partition of b");
  if (k < 1 || k >= n) throw UsageError("cut point must satisfy 1 <= k < ab");
  if (lambda.weight() != k || lambda.part(0) > a || lambda.length() > b)
    throw UsageError("intersection type must lie in Omega_k");
  if (n > bounds.trace) {
    std::ostringstream msg;
    msg << "refusing wreath trace computation at ab = " << n << " (limit "
        << bounds.trace << ")";
    throw BoundError(msg.str());
  }

  std::vector<BlockSystem> all = enumerate_block_systems(a, b, bounds);
  std::vector<BlockSystem> systems;
  for (auto& x : all)
    if (x.intersection_type(k) == lambda) systems.push_back(std::move(x));
  const std::vector<Tableau> tableaux = standard_tableaux(nu);

  // The fixed-system trace only depends on the cycle type of the induced
  // block permutation, so straightening sums are cached per type.
  std::map<Partition, Int, CanonicalLess> specht_trace;
  auto trace_of = [&](const Permutation& block_perm) -> Int {
    const CycleType type = block_perm.cycle_type();
    auto it = specht_trace.find(type);
    if (it != specht_trace.end()) return it->second;
    Int sum = 0;
    for (const auto& t : tableaux) {
      PolytabloidVector image = straighten(t.relabeled(block_perm));
      auto term = image.terms.find(t);
      if (term != image.terms.end()) sum += term->second;
    }
    specht_trace.emplace(type, sum);
    return sum;
  };

  const auto& rows = partitions_of(k);
  const auto& cols = partitions_of(n - k);
  PairClassFunction out(k, n - k);
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < cols.size(); ++j) {
      Permutation g = Permutation::cut_representative(rows[i], cols[j]);
      Int value = 0;
      for (const auto& x : systems) {
        BlockSystem y = x.apply(g);
        if (!(y == x)) continue;
        std::vector<int> images(static_cast<size_t>(b));
        for (int l = 1; l <= b; ++l) {
          std::vector<int> block;
          for (int e : x.blocks()[static_cast<size_t>(l - 1)])
            block.push_back(checked_image(g, e));
          std::sort(block.begin(), block.end());
          auto it = std::lower_bound(x.blocks().begin(), x.blocks().end(), block);
          images[static_cast<size_t>(l - 1)] =
              static_cast<int>(it - x.blocks().begin()) + 1;
        }
        value += trace_of(Permutation{std::move(images)});
      }
      out.values[i][j] = value;
    }
  }
  return out;
}

BipartiteDecomposition oracle_decompose(int a, int b, const Partition& nu, int k,
                                        const Partition& lambda, const Bounds& bounds) {
  return decompose_bipartite(oracle_character(a, b, nu, k, lambda, bounds), bounds);
}

}  // namespace foulkes
