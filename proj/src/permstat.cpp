#include "dyckatlas/permstat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dyck {

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
  const int n = size();
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(values_.size());
  for (int i = 1; i <= size(); ++i) v[static_cast<size_t>((*this)(i)-1)] = i;
  return Permutation(std::move(v));
}

Permutation Permutation::reversed() const {
  std::vector<int> v(values_.rbegin(), values_.rend());
  return Permutation(std::move(v));
}

void require_distinct(const Word& w) {
  Word sorted = w;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("word has repeated entries");
}

long long inv(const Word& w) {
  long long count = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++count;
  return count;
}

int des(const Word& w) {
  int count = 0;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) ++count;
  return count;
}

std::set<std::pair<int, int>> inversion_set(const Word& w) {
  std::set<std::pair<int, int>> out;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) out.emplace(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
  return out;
}

std::set<int> descent_set(const Word& w) {
  std::set<int> out;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) out.insert(static_cast<int>(i) + 1);
  return out;
}

Permutation standardize(const Word& w) {
  require_distinct(w);
  std::vector<int> ranks(w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    int rank = 1;
    for (size_t j = 0; j < w.size(); ++j)
      if (w[j] < w[i]) ++rank;
    ranks[i] = rank;
  }
  return Permutation(std::move(ranks));
}

long long desdif(const Word& w) {
  long long total = 0;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) total += w[i] - w[i + 1];
  return total;
}

long long res(const Word& w) {
  long long total = 0;
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] <= w[i + 1]) continue;
    for (size_t k = 0; k < i; ++k)
      if (w[i] > w[k] && w[k] > w[i + 1]) ++total;
  }
  return total;
}

long long mad(const Word& w) { return desdif(w) + res(w); }

std::set<int> rem_set(const Word& w, int i) {
  if (i < 1 || i >= static_cast<int>(w.size()))
    throw std::invalid_argument("rem_set position out of range");
  std::set<int> out;
  const int a = w[static_cast<size_t>(i - 1)], b = w[static_cast<size_t>(i)];
  for (int k = i + 1; k <= static_cast<int>(w.size()); ++k) {
    int v = w[static_cast<size_t>(k - 1)];
    if (a > v && v > b) out.insert(k);
  }
  return out;
}

long long desdif2(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw std::invalid_argument("desdif2 size mismatch");
  const auto inv_sigma = inversion_set(sigma.values());
  const auto inv_tau = inversion_set(tau.values());
  if (!std::includes(inv_tau.begin(), inv_tau.end(), inv_sigma.begin(), inv_sigma.end()))
    throw std::invalid_argument("desdif2 needs the inversions of sigma contained in tau's");
  long long total = 0;
  for (int i = 1; i < sigma.size(); ++i)
    if (sigma(i) > sigma(i + 1)) total += sigma(i) - sigma(i + 1) + tau(i) - tau(i + 1);
  return total;
}

AreaTiles closed_area_tiles(const Word& left_ends, const Word& right_ends) {
  if (left_ends.size() != right_ends.size())
    throw std::invalid_argument("endpoint words must have equal length");
  require_distinct(left_ends);
  require_distinct(right_ends);
  AreaTiles out;
  const int n = static_cast<int>(left_ends.size());
  for (int i = 1; i < n; ++i) {
    const int li = left_ends[static_cast<size_t>(i - 1)];
    if (li <= left_ends[static_cast<size_t>(i)]) continue;
    const int r_next = right_ends[static_cast<size_t>(i)];
    out.area += li - r_next;
    long long sandwiched = 0;
    for (int j = i + 2; j <= n; ++j) {
      int lj = left_ends[static_cast<size_t>(j - 1)];
      if (r_next < lj && lj < li) ++sandwiched;
    }
    out.tiles += li - r_next - 2 * sandwiched;
  }
  return out;
}

AreaTiles rem_formulas(const Permutation& sigma, const Permutation& tau) {
  const long long dd = desdif2(sigma, tau);
  const long long d = des(sigma.values());
  long long sym_diff = 0, size_sum = 0;
  for (int i = 1; i < sigma.size(); ++i) {
    if (sigma(i) <= sigma(i + 1)) continue;
    const auto rs = rem_set(sigma.values(), i);
    const auto rt = rem_set(tau.values(), i);
    std::vector<int> sd;
    std::set_symmetric_difference(rs.begin(), rs.end(), rt.begin(), rt.end(),
                                  std::back_inserter(sd));
    sym_diff += static_cast<long long>(sd.size());
    size_sum += static_cast<long long>(rs.size() + rt.size());
  }
  return AreaTiles{dd - d - sym_diff, dd - d - size_sum};
}

bool avoids_231(const Word& w) {
  const size_t n = w.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k)
        if (w[k] < w[i] && w[i] < w[j]) return false;
  return true;
}

bool avoids_132(const Word& w) {
  const size_t n = w.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k)
        if (w[i] < w[k] && w[k] < w[j]) return false;
  return true;
}

}  // namespace dyck
