#include "dyckatlas/path.hpp"

#include <algorithm>
#include <stdexcept>

namespace dyck {

namespace {

std::vector<int> heights_of(const std::vector<Step>& steps) {
  std::vector<int> h;
  h.reserve(steps.size() + 1);
  int y = 0;
  h.push_back(0);
  for (Step s : steps) {
    y += s == Step::Up ? 1 : -1;
    if (y < 0) throw std::invalid_argument("Dyck path dips below height 0");
    h.push_back(y);
  }
  if (y != 0) throw std::invalid_argument("Dyck path is unbalanced");
  return h;
}

}  // namespace

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  heights_ = heights_of(steps_);
}

DyckPath DyckPath::parse(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  bool saw_ud = false, saw_paren = false;
  for (char ch : text) {
    switch (ch) {
      case 'U': steps.push_back(Step::Up); saw_ud = true; break;
      case 'D': steps.push_back(Step::Down); saw_ud = true; break;
      case '(': steps.push_back(Step::Up); saw_paren = true; break;
      case ')': steps.push_back(Step::Down); saw_paren = true; break;
      default:
        throw std::invalid_argument(std::string("invalid path character '") + ch + "'");
    }
  }
  if (saw_ud && saw_paren)
    throw std::invalid_argument("mixed U/D and parenthesis alphabets in path");
  return DyckPath(std::move(steps));
}

DyckPath DyckPath::zigzag(int n) {
  if (n < 0) throw std::invalid_argument("negative path order");
  std::vector<Step> steps;
  steps.reserve(static_cast<size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    steps.push_back(Step::Up);
    steps.push_back(Step::Down);
  }
  return DyckPath(std::move(steps));
}

std::string DyckPath::word() const {
  std::string w;
  w.reserve(steps_.size());
  for (Step s : steps_) w.push_back(s == Step::Up ? 'U' : 'D');
  return w;
}

std::vector<Chord> chords(const DyckPath& path) {
  const int n = path.order();
  std::vector<Chord> out;
  out.reserve(static_cast<size_t>(n));
  std::vector<int> open;  // stack of pending up-step indices
  for (int i = 1; i <= 2 * n; ++i) {
    if (path.step(i) == Step::Up) {
      open.push_back(i);
    } else {
      int u = open.back();
      open.pop_back();
      out.push_back(Chord{u, i, u - 1 - n, i - n});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Chord& a, const Chord& b) { return a.up_step < b.up_step; });
  return out;
}

int chord_length(const DyckPath& path, const Chord& c) {
  int len = 0;
  for (int i = c.up_step; i <= c.down_step; ++i)
    if (path.step(i) == Step::Up) ++len;
  return len;
}

bool weakly_above(const DyckPath& upper, const DyckPath& lower) {
  if (upper.order() != lower.order()) return false;
  for (int x = -lower.order(); x <= lower.order(); ++x)
    if (upper.height(x) < lower.height(x)) return false;
  return true;
}

int discrepancy(const DyckPath& lower, const DyckPath& upper) {
  if (lower.order() != upper.order())
    throw std::invalid_argument("discrepancy needs paths of equal order");
  if (!weakly_above(upper, lower))
    throw std::invalid_argument("discrepancy needs upper weakly above lower");
  int d = 0;
  for (int i = 1; i <= 2 * lower.order(); ++i)
    if (lower.step(i) == Step::Down && upper.step(i) == Step::Up) ++d;
  return d;
}

DyckPath spread(const DyckPath& path, int s) {
  const int n = path.order();
  if (s < -n || s > n) throw std::invalid_argument("spread column out of range");
  // New heights: h'(x) = h(x+1) for x < s, h(s)+1 at s, h(x-1) for x > s.
  std::vector<Step> steps;
  steps.reserve(static_cast<size_t>(2 * (n + 1)));
  auto h = [&](int x) {
    if (x < s) return path.height(x + 1);
    if (x == s) return path.height(s) + 1;
    return path.height(x - 1);
  };
  for (int x = -(n + 1); x < n + 1; ++x)
    steps.push_back(h(x + 1) > h(x) ? Step::Up : Step::Down);
  return DyckPath(std::move(steps));
}

DyckPath contract(const DyckPath& path, int s) {
  const int n = path.order();
  if (n == 0) throw std::invalid_argument("cannot contract the empty path");
  if (s < -(n - 1) || s > n - 1) throw std::invalid_argument("contract column out of range");
  if (path.height(s - 1) != path.height(s + 1) ||
      path.height(s) != path.height(s - 1) + 1)
    throw std::invalid_argument("no contraction: path has no peak at the column");
  std::vector<Step> steps;
  steps.reserve(static_cast<size_t>(2 * (n - 1)));
  auto h = [&](int x) { return x <= s ? path.height(x - 1) : path.height(x + 1); };
  for (int x = -(n - 1); x < n - 1; ++x)
    steps.push_back(h(x + 1) > h(x) ? Step::Up : Step::Down);
  return DyckPath(std::move(steps));
}

DyckPath mirror(const DyckPath& path) {
  std::vector<Step> steps(path.steps().rbegin(), path.steps().rend());
  for (Step& s : steps) s = s == Step::Up ? Step::Down : Step::Up;
  return DyckPath(std::move(steps));
}

SkewShape::SkewShape(DyckPath lower, DyckPath upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.order() != upper_.order())
    throw std::invalid_argument("skew shape paths must have equal order");
  if (!weakly_above(upper_, lower_))
    throw std::invalid_argument("skew shape upper path must stay weakly above lower");
}

long long SkewShape::box_count() const {
  long long total = 0;
  for (int x = -order(); x <= order(); ++x) total += boxes_in_column(x);
  return total;
}

}  // namespace dyck
