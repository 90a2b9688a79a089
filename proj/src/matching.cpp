#include "dyckatlas/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace dyck {

PerfectMatching::PerfectMatching(std::vector<std::pair<int, int>> pairs)
    : pairs_(std::move(pairs)) {
  const int n = size();
  std::vector<bool> seen(static_cast<size_t>(2 * n) + 1, false);
  for (auto& [a, b] : pairs_) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > 2 * n || seen[static_cast<size_t>(a)] || seen[static_cast<size_t>(b)])
      throw std::invalid_argument("pairs must partition 1..2n");
    seen[static_cast<size_t>(a)] = seen[static_cast<size_t>(b)] = true;
  }
  std::sort(pairs_.begin(), pairs_.end(),
            [](const auto& x, const auto& y) { return x.second < y.second; });
}

PerfectMatching match_of(const GrowthSequence& p) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= p.size(); ++i) {
    const int v = p.at(i);
    for (auto& [a, b] : pairs) {
      if (a > v) ++a;
      if (b > v) ++b;
    }
    pairs.emplace_back(v + 1, 2 * i);
  }
  return PerfectMatching(std::move(pairs));
}

Word min_word(const PerfectMatching& m) {
  Word w;
  w.reserve(static_cast<size_t>(m.size()));
  for (const auto& [a, b] : m.pairs()) w.push_back(a);
  return w;
}

long long nestings(const PerfectMatching& m) {
  long long count = 0;
  for (const auto& [a, b] : m.pairs())
    for (const auto& [c, d] : m.pairs())
      if (c < a && b < d) ++count;
  return count;
}

DyckPath matching_shape(const PerfectMatching& m) {
  std::vector<bool> is_min(static_cast<size_t>(2 * m.size()) + 1, false);
  for (const auto& [a, b] : m.pairs()) is_min[static_cast<size_t>(a)] = true;
  std::vector<Step> steps;
  steps.reserve(static_cast<size_t>(2 * m.size()));
  for (int i = 1; i <= 2 * m.size(); ++i)
    steps.push_back(is_min[static_cast<size_t>(i)] ? Step::Up : Step::Down);
  return DyckPath(std::move(steps));
}

std::vector<int> nesting_numbers(const PerfectMatching& m) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(m.size()));
  for (const auto& [a, b] : m.pairs()) {
    int k = 0;
    for (const auto& [c, d] : m.pairs())
      if (c < a && b < d) ++k;
    out.push_back(k);
  }
  return out;
}

PerfectMatching matching_from_nesting_numbers(const DyckPath& shape,
                                              const std::vector<int>& labels_by_up_step) {
  const int n = shape.order();
  if (static_cast<int>(labels_by_up_step.size()) != n)
    throw std::invalid_argument("need one nesting number per up step");
  std::vector<int> label_at(static_cast<size_t>(2 * n) + 1, -1);
  int next_up = 0;
  for (int i = 1; i <= 2 * n; ++i)
    if (shape.step(i) == Step::Up) label_at[static_cast<size_t>(i)] = labels_by_up_step[static_cast<size_t>(next_up++)];
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> open;  // open minima, ascending
  for (int i = 1; i <= 2 * n; ++i) {
    if (shape.step(i) == Step::Up) {
      open.push_back(i);
      continue;
    }
    // A pair closing here nests below exactly the still-open minima to the
    // left of its own minimum, so the label picks the position in `open`;
    // the largest consistent choice is the only one that can survive later
    // closings (smaller open minima only become fewer over time).
    int choice = -1;
    for (int j = static_cast<int>(open.size()) - 1; j >= 0; --j) {
      if (label_at[static_cast<size_t>(open[static_cast<size_t>(j)])] == j) {
        choice = j;
        break;
      }
    }
    if (choice < 0)
      throw std::invalid_argument("nesting numbers do not describe a matching");
    pairs.emplace_back(open[static_cast<size_t>(choice)], i);
    open.erase(open.begin() + choice);
  }
  PerfectMatching m{std::move(pairs)};
  // nesting_numbers() reports in sorted-by-maxima pair order; re-derive the
  // labels in up-step (minimum) order before comparing.
  const auto nums = nesting_numbers(m);
  std::vector<std::pair<int, int>> mins;  // (minimum, pair index)
  for (int k = 0; k < n; ++k) mins.emplace_back(m.pairs()[static_cast<size_t>(k)].first, k);
  std::sort(mins.begin(), mins.end());
  std::vector<int> check(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k)
    check[static_cast<size_t>(k)] = nums[static_cast<size_t>(mins[static_cast<size_t>(k)].second)];
  if (check != labels_by_up_step)
    throw std::invalid_argument("nesting numbers do not describe a matching");
  return m;
}

}  // namespace dyck
