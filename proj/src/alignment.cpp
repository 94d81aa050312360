#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string_view>
#include <unordered_map>

#include "mtmetrics/hlepor.hpp"

namespace mtmetrics {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

struct Occurrences {
  std::vector<std::size_t> hyp;
  std::vector<std::size_t> ref;
};

// Order-preserving assignment of every `small` position to a distinct
// `large` position. Costs on a line are uncrossable, so the best
// order-preserving choice is optimal over all injective assignments.
// Reconstruction picks the earliest feasible partner at each step, which
// yields the lexicographically smallest optimal assignment.
template <typename Cost>
std::vector<std::size_t> assign_in_order(std::size_t p, std::size_t q, Cost cost) {
  // best[i][j]: min cost of matching small[i..p) into large[j..q).
  const std::size_t width = q + 1;
  std::vector<std::int64_t> best((p + 1) * width, kInf);
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return best[i * width + j]; };
  for (std::size_t j = 0; j <= q; ++j) at(p, j) = 0;
  for (std::size_t i = p; i-- > 0;) {
    for (std::size_t j = q - (p - i) + 1; j-- > 0;) {
      const std::int64_t take = cost(i, j) + at(i + 1, j + 1);
      const std::int64_t skip = (q - j > p - i) ? at(i, j + 1) : kInf;
      at(i, j) = std::min(take, skip);
    }
  }

  std::vector<std::size_t> chosen(p);
  std::size_t j = 0;
  for (std::size_t i = 0; i < p; ++i) {
    const std::int64_t target = at(i, j);
    while (cost(i, j) + at(i + 1, j + 1) != target) ++j;
    chosen[i] = j++;
  }
  return chosen;
}

}  // namespace

std::int64_t scaled_position_difference(std::size_t hyp_index, std::size_t ref_index,
                                        std::size_t hyp_len, std::size_t ref_len) {
  const auto h = static_cast<std::int64_t>(hyp_index + 1) * static_cast<std::int64_t>(ref_len);
  const auto r = static_cast<std::int64_t>(ref_index + 1) * static_cast<std::int64_t>(hyp_len);
  return std::llabs(h - r);
}

std::int64_t scaled_position_difference(const AlignmentMap& alignment, std::size_t hyp_len,
                                        std::size_t ref_len) {
  std::int64_t sum = 0;
  for (const auto& [h, r] : alignment.pairs) {
    sum += scaled_position_difference(h, r, hyp_len, ref_len);
  }
  return sum;
}

AlignmentMap align(std::span<const std::string> hyp, std::span<const std::string> ref) {
  std::unordered_map<std::string_view, Occurrences> by_form;
  for (std::size_t i = 0; i < hyp.size(); ++i) by_form[hyp[i]].hyp.push_back(i);
  for (std::size_t j = 0; j < ref.size(); ++j) {
    auto it = by_form.find(ref[j]);
    if (it != by_form.end()) it->second.ref.push_back(j);
  }

  const std::size_t lh = hyp.size();
  const std::size_t lr = ref.size();
  AlignmentMap out;
  for (const auto& [form, occ] : by_form) {
    const auto& hs = occ.hyp;
    const auto& rs = occ.ref;
    if (rs.empty()) continue;
    if (hs.size() <= rs.size()) {
      auto chosen = assign_in_order(hs.size(), rs.size(), [&](std::size_t i, std::size_t j) {
        return scaled_position_difference(hs[i], rs[j], lh, lr);
      });
      for (std::size_t i = 0; i < hs.size(); ++i) out.pairs.emplace_back(hs[i], rs[chosen[i]]);
    } else {
      auto chosen = assign_in_order(rs.size(), hs.size(), [&](std::size_t i, std::size_t j) {
        return scaled_position_difference(hs[j], rs[i], lh, lr);
      });
      for (std::size_t i = 0; i < rs.size(); ++i) out.pairs.emplace_back(hs[chosen[i]], rs[i]);
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

AlignmentMap align(const TokenSequence& hyp, const TokenSequence& ref) {
  return align(std::span<const std::string>(hyp.tokens()),
               std::span<const std::string>(ref.tokens()));
}

}  // namespace mtmetrics
