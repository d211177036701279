#include "foulkes/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "foulkes/errors.hpp"

namespace foulkes {

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw UsageError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw UsageError("partition parts must be weakly decreasing");
    weight_ += parts_[i];
  }
}

Partition Partition::rectangle(int a, int b) {
  if (a < 0 || b < 0) throw UsageError("rectangle sides must be nonnegative");
  if (a == 0) return Partition();
  return Partition(std::vector<int>(static_cast<size_t>(b), a));
}

Partition Partition::single_row(int n) {
  if (n < 0) throw UsageError("negative partition weight");
  if (n == 0) return Partition();
  return Partition({n});
}

Partition Partition::single_column(int n) { return rectangle(1, n); }

Partition Partition::parse(std::string_view text) {
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '[')
    throw UsageError("partition must look like [3,1], got '" + std::string(text) + "'");
  ++i;
  std::vector<int> parts;
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip_ws();
      int value = 0;
      auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc() || p == text.data() + i)
        throw UsageError("bad partition part in '" + std::string(text) + "'");
      i = static_cast<size_t>(p - text.data());
      parts.push_back(value);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      throw UsageError("unterminated partition '" + std::string(text) + "'");
    }
  }
  skip_ws();
  if (i != text.size())
    throw UsageError("trailing characters after partition '" + std::string(text) + "'");
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  s += ']';
  return s;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> cols(static_cast<size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) cols[static_cast<size_t>(j)] += 1;
  return Partition(std::move(cols));
}

bool canonical_less(const Partition& x, const Partition& y) {
  // Reverse lexicographic: compare part by part, larger part first;
  // a longer tail of extra parts means lexicographically greater.
  int n = std::max(x.length(), y.length());
  for (int i = 0; i < n; ++i) {
    if (x.part(i) != y.part(i)) return x.part(i) > y.part(i);
  }
  return false;
}

namespace {

void generate_descending(int n, int max_part, std::vector<int>& acc,
                         std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    acc.push_back(p);
    generate_descending(n - p, p, acc, out);
    acc.pop_back();
  }
}

struct PartitionTable {
  std::vector<Partition> list;
  std::map<Partition, int> index;
};

const PartitionTable& table_for(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<PartitionTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    auto t = std::make_unique<PartitionTable>();
    std::vector<int> acc;
    generate_descending(n, n == 0 ? 1 : n, acc, t->list);
    for (size_t i = 0; i < t->list.size(); ++i)
      t->index.emplace(t->list[i], static_cast<int>(i));
    it = cache.emplace(n, std::move(t)).first;
  }
  return *it->second;
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  if (n < 0) throw UsageError("negative partition weight");
  return table_for(n).list;
}

int partition_index(int n, const Partition& rho) {
  if (rho.weight() != n)
    throw UsageError("partition " + rho.to_string() + " does not have weight " +
                     std::to_string(n));
  return table_for(n).index.at(rho);
}

bool dominates(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight())
    throw UsageError("dominance needs equal weights: " + mu.to_string() + " vs " +
                     lambda.to_string());
  long sum_mu = 0, sum_la = 0;
  int n = std::max(mu.length(), lambda.length());
  for (int i = 0; i < n; ++i) {
    sum_mu += mu.part(i);
    sum_la += lambda.part(i);
    if (sum_mu < sum_la) return false;
  }
  return true;
}

std::vector<Partition> omega_k(int a, int b, int k) {
  if (a < 1 || b < 1) throw UsageError("block shape needs a, b >= 1");
  if (k < 1 || k >= a * b)
    throw UsageError("cut position k must satisfy 1 <= k < a*b, got k=" +
                     std::to_string(k));
  std::vector<Partition> out;
  for (const Partition& la : partitions_of(k)) {
    if (la.length() <= b && la.part(0) <= a) out.push_back(la);
  }
  return out;
}

Partition add_partitions(const Partition& x, const Partition& y) {
  int n = std::max(x.length(), y.length());
  std::vector<int> parts;
  parts.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) parts.push_back(x.part(i) + y.part(i));
  return Partition(std::move(parts));
}

bool contains(const Partition& nu, const Partition& mu) {
  for (int i = 0; i < mu.length(); ++i)
    if (mu.part(i) > nu.part(i)) return false;
  return true;
}

Int centralizer_order(const CycleType& rho) {
  Int z = 1;
  int i = 0;
  while (i < rho.length()) {
    int part = rho.part(i);
    int mult = 0;
    while (i < rho.length() && rho.part(i) == part) {
      ++mult;
      ++i;
    }
    for (int j = 0; j < mult; ++j) z *= part;
    z *= factorial(mult);
  }
  return z;
}

Int class_size(const CycleType& rho) {
  Int num = factorial(rho.weight());
  Int z = centralizer_order(rho);
  Int q = num / z;
  return q;
}

}  // namespace foulkes
