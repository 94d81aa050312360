#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library's metric code.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Tokens = std::vector<std::string>;

// Counts every contiguous window of n tokens, keyed by the space-joined window.
inline std::map<std::string, std::int64_t> window_counts(const Tokens& toks, std::size_t n) {
  std::map<std::string, std::int64_t> out;
  for (std::size_t i = 0; i + n <= toks.size(); ++i) {
    std::string key;
    for (std::size_t k = i; k < i + n; ++k) {
      key += toks[k];
      key += '\x1f';
    }
    ++out[key];
  }
  return out;
}

struct ClippedCounts {
  std::int64_t matches = 0;
  std::int64_t total = 0;
};

inline ClippedCounts clipped(const Tokens& hyp, const Tokens& ref, std::size_t n) {
  ClippedCounts c;
  const auto h = window_counts(hyp, n);
  const auto r = window_counts(ref, n);
  for (const auto& [key, count] : h) {
    c.total += count;
    auto it = r.find(key);
    if (it != r.end()) c.matches += std::min(count, it->second);
  }
  return c;
}

inline bool is_subsequence(const Tokens& needle, const Tokens& hay) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < hay.size() && j < needle.size(); ++i) {
    if (hay[i] == needle[j]) ++j;
  }
  return j == needle.size();
}

// Tries every subsequence of `a` (2^|a| of them).
inline std::size_t lcs_by_enumeration(const Tokens& a, const Tokens& b) {
  std::size_t best = 0;
  const std::size_t subsets = std::size_t{1} << a.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    Tokens sub;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (mask & (std::size_t{1} << i)) sub.push_back(a[i]);
    }
    if (sub.size() > best && is_subsequence(sub, b)) best = sub.size();
  }
  return best;
}

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

struct BestMatching {
  std::size_t cardinality = 0;
  std::int64_t scaled_cost = 0;  // sum of |(i+1)*|ref| - (j+1)*|hyp||
  Pairs pairs;                   // lexicographically smallest optimum
};

// Enumerates every injective matching between equal tokens.
inline BestMatching best_matching_by_enumeration(const Tokens& hyp, const Tokens& ref) {
  const auto lh = static_cast<std::int64_t>(hyp.size());
  const auto lr = static_cast<std::int64_t>(ref.size());
  BestMatching best;
  bool have = false;
  std::vector<bool> used(ref.size(), false);
  Pairs current;
  std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t i, std::int64_t cost) {
    if (i == hyp.size()) {
      const bool better =
          !have || current.size() > best.cardinality ||
          (current.size() == best.cardinality &&
           (cost < best.scaled_cost || (cost == best.scaled_cost && current < best.pairs)));
      if (better) {
        have = true;
        best = {current.size(), cost, current};
      }
      return;
    }
    walk(i + 1, cost);
    for (std::size_t j = 0; j < ref.size(); ++j) {
      if (used[j] || hyp[i] != ref[j]) continue;
      used[j] = true;
      current.emplace_back(i, j);
      const std::int64_t d = std::llabs(static_cast<std::int64_t>(i + 1) * lr -
                                        static_cast<std::int64_t>(j + 1) * lh);
      walk(i + 1, cost + d);
      current.pop_back();
      used[j] = false;
    }
  };
  walk(0, 0);
  return best;
}

// Random token sequence over a small vocabulary so that repeats are common.
inline Tokens random_tokens(std::mt19937_64& rng, std::size_t max_len, std::size_t vocab,
                            std::size_t min_len = 0) {
  std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
  std::uniform_int_distribution<std::size_t> word(0, vocab - 1);
  Tokens out(len_dist(rng));
  for (auto& t : out) t = "w" + std::to_string(word(rng));
  return out;
}

inline std::string join(const Tokens& toks) {
  std::string out;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (i) out += ' ';
    out += toks[i];
  }
  return out;
}

}  // namespace oracle
