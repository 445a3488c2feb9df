#pragma once

// Partitions, multipartitions, compositions and the integer-tuple views of
// multipartitions used by the weight dictionaries.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "fockkit/error.hpp"

namespace fockkit {

using IntTuple = std::vector<std::int64_t>;

class Partition {
public:
  Partition() = default;

  // Trailing zeros are dropped; anything else that is not weakly decreasing
  // and positive is rejected.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      require(parts_[i] > 0, "partition parts must be positive");
      require(i == 0 || parts_[i - 1] >= parts_[i], "partition must be weakly decreasing");
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  // n(lambda) = sum_i lambda_i (i - 1)
  std::int64_t n_statistic() const {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i)
      acc += static_cast<std::int64_t>(parts_[i]) * static_cast<std::int64_t>(i);
    return acc;
  }

  Partition transpose() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
      cols.assign(parts_.front(), 0);
      for (int p : parts_)
        for (int j = 0; j < p; ++j) ++cols[j];
    }
    return Partition(std::move(cols));
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
};

class MultiPartition {
public:
  MultiPartition() = default;
  explicit MultiPartition(std::vector<Partition> components)
      : components_(std::move(components)) {}
  MultiPartition(std::initializer_list<Partition> components)
      : components_(components) {}

  static MultiPartition empty_of_level(int level) {
    return MultiPartition(std::vector<Partition>(static_cast<std::size_t>(level)));
  }

  const std::vector<Partition>& components() const { return components_; }
  const Partition& operator[](std::size_t p) const { return components_.at(p); }
  int level() const { return static_cast<int>(components_.size()); }

  int weight() const {
    int acc = 0;
    for (const auto& c : components_) acc += c.weight();
    return acc;
  }

  // lambda° = (lambda_l, ..., lambda_1)
  MultiPartition reversed() const {
    return MultiPartition(std::vector<Partition>(components_.rbegin(), components_.rend()));
  }

  // ^t lambda = (^t lambda_l, ..., ^t lambda_1)
  MultiPartition transpose() const {
    std::vector<Partition> out;
    out.reserve(components_.size());
    for (auto it = components_.rbegin(); it != components_.rend(); ++it)
      out.push_back(it->transpose());
    return MultiPartition(std::move(out));
  }

  friend bool operator==(const MultiPartition&, const MultiPartition&) = default;
  friend auto operator<=>(const MultiPartition&, const MultiPartition&) = default;

private:
  std::vector<Partition> components_;
};

inline MultiPartition transpose_mp(const MultiPartition& lambda) { return lambda.transpose(); }

// One closed interval [first, last] of 1-based positions.
struct Block {
  int first;
  int last;
  int size() const { return last - first + 1; }
  friend bool operator==(const Block&, const Block&) = default;
};

class Composition {
public:
  Composition() = default;
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    require(!parts_.empty(), "composition needs at least one part");
    for (int p : parts_) require(p >= 0, "composition parts must be nonnegative");
  }
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t p) const { return parts_.at(p); }
  int level() const { return static_cast<int>(parts_.size()); }
  int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  // J_{nu,p} = [i_p, j_p] with i_p = 1 + nu_1 + ... + nu_{p-1}.
  std::vector<Block> blocks() const {
    std::vector<Block> out;
    int start = 1;
    for (int p : parts_) {
      out.push_back({start, start + p - 1});
      start += p;
    }
    return out;
  }

  // 0-based index of the block containing 1-based position j.
  int block_of(int j) const {
    int start = 1;
    for (int p = 0; p < level(); ++p) {
      if (j < start + parts_[p]) return p;
      start += parts_[p];
    }
    fail(errc::invalid_argument, "position outside composition");
  }

  Composition reversed() const { return Composition(std::vector<int>(parts_.rbegin(), parts_.rend())); }

  // nu• = (nu_{l-1}, ..., nu_1, nu_l)
  Composition bullet() const {
    std::vector<int> out(parts_.rbegin() + 1, parts_.rend());
    out.push_back(parts_.back());
    return Composition(std::move(out));
  }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

private:
  std::vector<int> parts_;
};

inline std::vector<Block> blocks(const Composition& nu) { return nu.blocks(); }

// Membership in Z^nu_{>=0}: weakly decreasing inside every block.
inline bool is_nu_dominant(const IntTuple& x, const Composition& nu) {
  if (static_cast<int>(x.size()) != nu.total()) return false;
  for (const auto& b : nu.blocks())
    for (int j = b.first; j < b.last; ++j)
      if (x[j - 1] < x[j]) return false;
  return true;
}

// Membership in Z^nu_{>0}: strictly decreasing inside every block.
inline bool is_nu_strict(const IntTuple& x, const Composition& nu) {
  if (static_cast<int>(x.size()) != nu.total()) return false;
  for (const auto& b : nu.blocks())
    for (int j = b.first; j < b.last; ++j)
      if (x[j - 1] <= x[j]) return false;
  return true;
}

// Membership in N^nu_{>=0}.
inline bool is_nu_dominant_natural(const IntTuple& x, const Composition& nu) {
  return is_nu_dominant(x, nu) &&
         std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v >= 0; });
}

// rho = (m, ..., 2, 1)
inline IntTuple rho(int m) {
  IntTuple r(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) r[i] = m - i;
  return r;
}

inline bool fits(const MultiPartition& lambda, const Composition& nu) {
  if (lambda.level() != nu.level()) return false;
  for (int p = 0; p < nu.level(); ++p)
    if (lambda[p].length() > nu[p]) return false;
  return true;
}

// Bijection N^nu_{>=0} = ⊔_n P^l_{n,nu}: pad each component with zeros to
// its block size and concatenate.
inline IntTuple embed_weight(const MultiPartition& lambda, const Composition& nu) {
  require(lambda.level() == nu.level(), "multipartition level differs from composition level");
  IntTuple out;
  out.reserve(static_cast<std::size_t>(nu.total()));
  for (int p = 0; p < nu.level(); ++p) {
    require(lambda[p].length() <= nu[p],
            "component " + std::to_string(p + 1) + " is longer than its block");
    for (int i = 0; i < nu[p]; ++i) out.push_back(lambda[p][static_cast<std::size_t>(i)]);
  }
  return out;
}

inline MultiPartition unembed_weight(const IntTuple& x, const Composition& nu) {
  require(is_nu_dominant_natural(x, nu), "tuple is not in N^nu_{>=0}");
  std::vector<Partition> comps;
  for (const auto& b : nu.blocks()) {
    std::vector<int> parts;
    for (int j = b.first; j <= b.last; ++j) parts.push_back(static_cast<int>(x[j - 1]));
    comps.emplace_back(std::move(parts));
  }
  return MultiPartition(std::move(comps));
}

// Partitions of n in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(left, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// All l-partitions of n, optionally restricted to P^l_{n,nu}.
inline std::vector<MultiPartition> multipartitions_of(int n, int level) {
  std::vector<MultiPartition> out;
  std::vector<Partition> cur;
  std::function<void(int, int)> rec = [&](int p, int left) {
    if (p == level - 1) {
      for (auto& mu : partitions_of(left)) {
        cur.push_back(mu);
        out.emplace_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (int k = left; k >= 0; --k)
      for (auto& mu : partitions_of(k)) {
        cur.push_back(mu);
        rec(p + 1, left - k);
        cur.pop_back();
      }
  };
  if (level >= 1) rec(0, n);
  return out;
}

inline std::vector<MultiPartition> multipartitions_fitting(int n, const Composition& nu) {
  std::vector<MultiPartition> out;
  for (auto& lam : multipartitions_of(n, nu.level()))
    if (fits(lam, nu)) out.push_back(std::move(lam));
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
  os << '(';
  for (std::size_t i = 0; i < p.parts().size(); ++i) os << (i ? "," : "") << p.parts()[i];
  return os << ')';
}

inline std::ostream& operator<<(std::ostream& os, const MultiPartition& mp) {
  os << '(';
  for (int p = 0; p < mp.level(); ++p) os << (p ? "," : "") << mp[p];
  return os << ')';
}

inline std::ostream& operator<<(std::ostream& os, const Composition& nu) {
  os << '(';
  for (int p = 0; p < nu.level(); ++p) os << (p ? "," : "") << nu[p];
  return os << ')';
}

}  // namespace fockkit
