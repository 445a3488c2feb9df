#pragma once

// Persistent memo for KL-type polynomials.
//
//   fockkit-klcache v1
//   klv1 <kind> <m> <v-word> <w-word> <c0,c1,...>
//
// Words are dot-separated simple-reflection indices of the lexicographically
// first reduced word ("e" for the identity). Lines that do not parse, are not
// reduced, or follow a foreign header are ignored.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "fockkit/affine_weyl.hpp"
#include "fockkit/int_poly.hpp"

namespace fockkit {

inline constexpr const char* kl_cache_header = "fockkit-klcache v1";

inline std::string word_token(const AffinePermutation& w) {
  auto word = length_and_reduce(w).word;
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) out += (i ? "." : "") + std::to_string(word[i]);
  return out;
}

inline std::optional<AffinePermutation> parse_word_token(const std::string& tok, int m) {
  if (tok == "e") return AffinePermutation::identity(m);
  std::vector<int> word;
  std::stringstream ss(tok);
  std::string part;
  while (std::getline(ss, part, '.')) {
    if (part.empty() || part.size() > 4) return std::nullopt;
    for (char c : part)
      if (c < '0' || c > '9') return std::nullopt;
    int i = std::stoi(part);
    if (i >= m) return std::nullopt;
    word.push_back(i);
  }
  auto w = AffinePermutation::from_word(word, m);
  if (w.length() != static_cast<int>(word.size())) return std::nullopt;
  return w;
}

inline std::string coeff_token(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    out += (i ? "," : "") + std::to_string(p.coeffs()[i]);
  return out;
}

inline std::optional<IntPoly> parse_coeff_token(const std::string& tok) {
  std::vector<std::int64_t> c;
  std::stringstream ss(tok);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      c.push_back(std::stoll(part, &used));
      if (used != part.size()) return std::nullopt;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (c.empty()) return std::nullopt;
  return IntPoly(std::move(c));
}

class KLCache {
public:
  explicit KLCache(std::filesystem::path path) : path_(std::move(path)) { load(); }

  const std::filesystem::path& path() const { return path_; }

  std::optional<IntPoly> lookup(const std::string& kind, const AffinePermutation& v,
                                const AffinePermutation& w) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(Key{kind, v.rank(), v.window(), w.window()});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void store(const std::string& kind, const AffinePermutation& v, const AffinePermutation& w,
             const IntPoly& p) {
    std::lock_guard lock(mutex_);
    Key key{kind, v.rank(), v.window(), w.window()};
    if (!entries_.emplace(key, p).second || !writable_) return;
    std::ofstream out(path_, std::ios::app);
    if (!out) {
      writable_ = false;
      return;
    }
    if (needs_header_) {
      out << kl_cache_header << '\n';
      needs_header_ = false;
    }
    out << "klv1 " << kind << ' ' << v.rank() << ' ' << word_token(v) << ' ' << word_token(w) << ' '
        << coeff_token(p) << '\n';
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
  }

private:
  using Key = std::tuple<std::string, int, std::vector<std::int64_t>, std::vector<std::int64_t>>;

  void load() {
    std::ifstream in(path_);
    if (!in) {
      needs_header_ = true;
      return;
    }
    std::string line;
    if (!std::getline(in, line)) {
      needs_header_ = true;
      return;
    }
    if (line != kl_cache_header) {
      // not ours: never read from or append to it
      writable_ = false;
      return;
    }
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string tag, kind, mtok, vtok, wtok, ctok, extra;
      if (!(ls >> tag >> kind >> mtok >> vtok >> wtok >> ctok) || (ls >> extra) || tag != "klv1") continue;
      int m = 0;
      try {
        m = std::stoi(mtok);
      } catch (const std::exception&) {
        continue;
      }
      if (m < 1 || m > 64) continue;
      auto v = parse_word_token(vtok, m);
      auto w = parse_word_token(wtok, m);
      auto p = parse_coeff_token(ctok);
      if (!v || !w || !p) continue;
      entries_.emplace(Key{kind, m, v->window(), w->window()}, *p);
    }
  }

  std::filesystem::path path_;
  mutable std::mutex mutex_;
  std::map<Key, IntPoly> entries_;
  bool writable_ = true;
  bool needs_header_ = false;
};

}  // namespace fockkit
