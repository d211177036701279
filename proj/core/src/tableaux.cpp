#include "foulkes/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

#include "foulkes/errors.hpp"

namespace foulkes {

Tableau::Tableau(Partition shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != shape_.weight())
    throw UsageError("tableau entry count does not match shape weight");
  std::vector<bool> seen(entries_.size(), false);
  for (int v : entries_) {
    if (v < 1 || v > shape_.weight() || seen[static_cast<size_t>(v - 1)])
      throw UsageError("tableau entries must be a bijective filling by 1..b");
    seen[static_cast<size_t>(v - 1)] = true;
  }
  offsets_.reserve(static_cast<size_t>(shape_.length()));
  int off = 0;
  for (int r = 0; r < shape_.length(); ++r) {
    offsets_.push_back(off);
    off += shape_.part(r);
  }
}

int Tableau::column_length(int c) const {
  int len = 0;
  while (len < rows() && shape_.part(len) > c) ++len;
  return len;
}

bool Tableau::is_standard() const {
  for (int r = 0; r < rows(); ++r) {
    for (int c = 0; c < row_length(r); ++c) {
      if (c + 1 < row_length(r) && at(r, c) >= at(r, c + 1)) return false;
      if (r + 1 < rows() && row_length(r + 1) > c && at(r, c) >= at(r + 1, c))
        return false;
    }
  }
  return true;
}

Tableau Tableau::relabeled(const Permutation& g) const {
  std::vector<int> entries = entries_;
  for (int& v : entries) v = g.apply(v);
  return Tableau(shape_, std::move(entries));
}

std::string Tableau::to_string() const {
  std::string s = "[";
  for (int r = 0; r < rows(); ++r) {
    if (r) s += '/';
    for (int c = 0; c < row_length(r); ++c) {
      if (c) s += ',';
      s += std::to_string(at(r, c));
    }
  }
  s += ']';
  return s;
}

Tabloid::Tabloid(const Tableau& t) {
  rows_.reserve(static_cast<size_t>(t.rows()));
  for (int r = 0; r < t.rows(); ++r) {
    std::vector<int> row;
    row.reserve(static_cast<size_t>(t.row_length(r)));
    for (int c = 0; c < t.row_length(r); ++c) row.push_back(t.at(r, c));
    std::sort(row.begin(), row.end());
    rows_.push_back(std::move(row));
  }
}

namespace {

void grow_standard(const Partition& nu, int next, std::vector<int>& fill,
                   std::vector<int>& cells, std::vector<Tableau>& out) {
  if (next > nu.weight()) {
    // cells[i] is the row that received value i+1; rebuild row-major.
    std::vector<int> row_pos(static_cast<size_t>(nu.length()), 0);
    std::vector<int> entries(static_cast<size_t>(nu.weight()), 0);
    std::vector<int> offsets(static_cast<size_t>(nu.length()), 0);
    for (int r = 1; r < nu.length(); ++r)
      offsets[static_cast<size_t>(r)] =
          offsets[static_cast<size_t>(r - 1)] + nu.part(r - 1);
    for (int v = 1; v <= nu.weight(); ++v) {
      int r = cells[static_cast<size_t>(v - 1)];
      entries[static_cast<size_t>(offsets[static_cast<size_t>(r)] +
                                  row_pos[static_cast<size_t>(r)]++)] = v;
    }
    out.push_back(Tableau(nu, std::move(entries)));
    return;
  }
  for (int r = 0; r < nu.length(); ++r) {
    if (fill[static_cast<size_t>(r)] >= nu.part(r)) continue;
    if (r > 0 && fill[static_cast<size_t>(r - 1)] <= fill[static_cast<size_t>(r)])
      continue;  // cell above not yet filled
    fill[static_cast<size_t>(r)] += 1;
    cells[static_cast<size_t>(next - 1)] = r;
    grow_standard(nu, next + 1, fill, cells, out);
    fill[static_cast<size_t>(r)] -= 1;
  }
}

}  // namespace

std::vector<Tableau> standard_tableaux(const Partition& nu) {
  std::vector<Tableau> out;
  if (nu.weight() == 0) {
    out.push_back(Tableau(nu, {}));
    return out;
  }
  std::vector<int> fill(static_cast<size_t>(nu.length()), 0);
  std::vector<int> cells(static_cast<size_t>(nu.weight()), 0);
  grow_standard(nu, 1, fill, cells, out);
  return out;
}

Int syt_count(const Partition& nu) {
  Int hooks = 1;
  Partition conj = nu.conjugate();
  for (int r = 0; r < nu.length(); ++r)
    for (int c = 0; c < nu.part(r); ++c)
      hooks *= (nu.part(r) - c) + (conj.part(c) - r) - 1;
  Int total = factorial(nu.weight());
  return total / hooks;
}

namespace {

// Iterates over the column group of t: every combination of per-column
// permutations, with the product of their signs.
void for_each_column_permutation(
    const Tableau& t,
    const std::function<void(const Tableau&, int)>& visit) {
  int ncols = t.shape().part(0);
  // base_sign relates t's own column arrangement to the sorted one, so
  // the identity group element gets sign +1 even when t is unsorted.
  int base_sign = 1;
  std::vector<std::vector<int>> columns;
  for (int c = 0; c < ncols; ++c) {
    std::vector<int> col;
    for (int r = 0; r < t.column_length(c); ++r) col.push_back(t.at(r, c));
    base_sign *= sequence_sign(col);
    std::sort(col.begin(), col.end());
    columns.push_back(std::move(col));
  }
  // Odometer over per-column arrangements via next_permutation.
  std::vector<std::vector<int>> arrangement = columns;
  Tableau scratch = t;
  while (true) {
    int sign = base_sign;
    for (const auto& col : arrangement) sign *= sequence_sign(col);
    for (int c = 0; c < ncols; ++c)
      for (size_t r = 0; r < arrangement[static_cast<size_t>(c)].size(); ++r)
        scratch.at(static_cast<int>(r), c) = arrangement[static_cast<size_t>(c)][r];
    visit(scratch, sign);
    int c = 0;
    while (c < ncols &&
           !std::next_permutation(arrangement[static_cast<size_t>(c)].begin(),
                                  arrangement[static_cast<size_t>(c)].end()))
      ++c;  // column c wrapped to sorted order, carry to the next
    if (c == ncols) break;
  }
}

}  // namespace

std::map<Tabloid, Int> expand_to_tabloids(const Tableau& t) {
  std::map<Tabloid, Int> out;
  for_each_column_permutation(t, [&out](const Tableau& u, int sign) {
    Tabloid key(u);
    auto it = out.find(key);
    if (it == out.end()) {
      out.emplace(std::move(key), Int(sign));
    } else {
      it->second += sign;
      if (it->second == 0) out.erase(it);
    }
  });
  return out;
}

std::map<Tabloid, Int> expand_to_tabloids(const PolytabloidVector& v) {
  std::map<Tabloid, Int> out;
  for (const auto& [t, c] : v.terms) {
    for (auto& [key, s] : expand_to_tabloids(t)) {
      auto it = out.find(key);
      if (it == out.end()) {
        out.emplace(key, c * s);
      } else {
        it->second += c * s;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

namespace {

// Sorts every column ascending; returns the sign of the rearrangement.
int column_sort(Tableau& t) {
  int sign = 1;
  for (int c = 0; c < t.shape().part(0); ++c) {
    std::vector<int> col;
    int len = t.column_length(c);
    for (int r = 0; r < len; ++r) col.push_back(t.at(r, c));
    sign *= sequence_sign(col);
    std::sort(col.begin(), col.end());
    for (int r = 0; r < len; ++r) t.at(r, c) = col[static_cast<size_t>(r)];
  }
  return sign;
}

// First row descent in a column-sorted tableau, scanning rows top to
// bottom and left to right. Returns {-1,-1} if standard.
std::pair<int, int> first_descent(const Tableau& t) {
  for (int r = 0; r < t.rows(); ++r)
    for (int c = 0; c + 1 < t.row_length(r); ++c)
      if (t.at(r, c) > t.at(r, c + 1)) return {r, c};
  return {-1, -1};
}

}  // namespace

namespace detail {

PolytabloidVector straighten_impl(const Tableau& t0) {
  PolytabloidVector out(t0.shape());
  std::map<Tableau, Int> pending;
  pending.emplace(t0, Int(1));

  while (!pending.empty()) {
    auto node = pending.begin();
    Tableau t = node->first;
    Int coeff = node->second;
    pending.erase(node);

    coeff *= column_sort(t);
    auto [r, c] = first_descent(t);
    if (r < 0) {
      out.add(t, coeff);
      continue;
    }

    // Garnir relation between columns c and c+1 at row r. A is the tail
    // of column c from row r down, B the head of column c+1 through row
    // r; every element of B is smaller than every element of A, so the
    // identity split below is the offending arrangement itself.
    std::vector<std::pair<int, int>> positions;
    std::vector<int> old_values;
    for (int i = r; i < t.column_length(c); ++i) {
      positions.emplace_back(i, c);
      old_values.push_back(t.at(i, c));
    }
    size_t a_size = positions.size();
    for (int i = 0; i <= r; ++i) {
      positions.emplace_back(i, c + 1);
      old_values.push_back(t.at(i, c + 1));
    }

    std::vector<int> pool = old_values;
    std::sort(pool.begin(), pool.end());
    int old_sign = sequence_sign(old_values);

    // Every way to deal the pooled entries back as (sorted tail of
    // column c, sorted head of column c+1), except the original one.
    std::vector<int> pick(pool.size(), 0);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(a_size), 1);
    std::sort(pick.begin(), pick.end());
    do {
      std::vector<int> new_values;
      new_values.reserve(pool.size());
      for (size_t i = 0; i < pool.size(); ++i)
        if (pick[i]) new_values.push_back(pool[i]);
      for (size_t i = 0; i < pool.size(); ++i)
        if (!pick[i]) new_values.push_back(pool[i]);
      if (new_values == old_values) continue;

      Tableau u = t;
      for (size_t i = 0; i < positions.size(); ++i)
        u.at(positions[i].first, positions[i].second) = new_values[i];
      // sign of the permutation carrying the old arrangement to the new
      int rel_sign = old_sign * sequence_sign(new_values);

      Int add = -coeff * rel_sign;
      auto it = pending.find(u);
      if (it == pending.end()) {
        pending.emplace(std::move(u), std::move(add));
      } else {
        it->second += add;
        if (it->second == 0) pending.erase(it);
      }
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return out;
}

}  // namespace detail

PolytabloidVector straighten(const Tableau& t) {
  static std::mutex mu;
  static std::map<Tableau, PolytabloidVector> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;
  }
  PolytabloidVector result = detail::straighten_impl(t);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(t, std::move(result)).first->second;
}

PolytabloidVector specht_action(const Permutation& g, const Tableau& t) {
  return straighten(t.relabeled(g));
}

PolytabloidVector specht_action(const Permutation& g, const PolytabloidVector& v) {
  PolytabloidVector out(v.shape);
  for (const auto& [t, c] : v.terms) {
    PolytabloidVector image = specht_action(g, t);
    for (const auto& [s, d] : image.terms) out.add(s, c * d);
  }
  return out;
}

ClassFunction specht_character(const Partition& nu, const Bounds& bounds) {
  int b = nu.weight();
  if (b > bounds.brute_char)
    throw BoundError("brute-force character bound b <= " +
                     std::to_string(bounds.brute_char) + " exceeded (got b=" +
                     std::to_string(b) + ")");
  std::vector<Tableau> basis = standard_tableaux(nu);
  ClassFunction chi(b);
  for (const CycleType& rho : partitions_of(b)) {
    Permutation g = Permutation::from_cycle_type(rho);
    Int trace = 0;
    for (const Tableau& t : basis) {
      PolytabloidVector image = specht_action(g, t);
      auto it = image.terms.find(t);
      if (it != image.terms.end()) trace += it->second;
    }
    chi.at(rho) = trace;
  }
  return chi;
}

}  // namespace foulkes
