#include "dyckatlas/poset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dyck {

ChordPoset::ChordPoset(const DyckPath& path) : path_(path), chords_(chords(path)) {
  const int n = size();
  parent_.assign(static_cast<size_t>(n), -1);
  children_.assign(static_cast<size_t>(n), {});
  // Chords are in left-endpoint order, so a scan with a stack of currently
  // open chords finds each chord's tightest enclosure.
  std::vector<int> open;
  for (int i = 0; i < n; ++i) {
    while (!open.empty() && chords_[static_cast<size_t>(open.back())].down_step <
                                chords_[static_cast<size_t>(i)].up_step)
      open.pop_back();
    if (open.empty()) {
      top_level_.push_back(i);
    } else {
      parent_[static_cast<size_t>(i)] = open.back();
      children_[static_cast<size_t>(open.back())].push_back(i);
    }
    open.push_back(i);
  }
}

bool ChordPoset::above(int j, int i) const {
  const Chord& inner = chord(j);
  const Chord& outer = chord(i);
  return outer.up_step < inner.up_step && inner.down_step < outer.down_step;
}

NaturalLabeling::NaturalLabeling(const ChordPoset& poset, std::vector<int> label_of_chord)
    : labels_(std::move(label_of_chord)) {
  const int n = poset.size();
  if (static_cast<int>(labels_.size()) != n)
    throw std::invalid_argument("labeling size mismatch");
  chord_of_label_.assign(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int lab = labels_[static_cast<size_t>(i)];
    if (lab < 1 || lab > n || chord_of_label_[static_cast<size_t>(lab - 1)] != -1)
      throw std::invalid_argument("labels must be a bijection with 1..n");
    chord_of_label_[static_cast<size_t>(lab - 1)] = i;
  }
  for (int i = 0; i < n; ++i) {
    int par = poset.parent(i);
    if (par >= 0 && labels_[static_cast<size_t>(par)] >= labels_[static_cast<size_t>(i)]) {
      const Chord& p = poset.chord(par);
      const Chord& c = poset.chord(i);
      std::ostringstream msg;
      msg << "not a natural labeling: chord (" << p.up_step << "," << p.down_step
          << ") must take a smaller label than nested chord (" << c.up_step << ","
          << c.down_step << ")";
      throw std::invalid_argument(msg.str());
    }
  }
}

NaturalLabeling reference_labeling(const ChordPoset& poset) {
  std::vector<int> labels(static_cast<size_t>(poset.size()));
  for (int i = 0; i < poset.size(); ++i) labels[static_cast<size_t>(i)] = i + 1;
  return NaturalLabeling(poset, std::move(labels));
}

Permutation sigma_of_labeling(const ChordPoset& poset, const NaturalLabeling& L) {
  std::vector<int> sigma(static_cast<size_t>(poset.size()));
  for (int lab = 1; lab <= poset.size(); ++lab)
    sigma[static_cast<size_t>(lab - 1)] = L.chord_with_label(lab) + 1;
  return Permutation(std::move(sigma));
}

NaturalLabeling labeling_of_sigma(const ChordPoset& poset, const Permutation& sigma) {
  if (sigma.size() != poset.size())
    throw std::invalid_argument("permutation size does not match chord count");
  std::vector<int> labels(static_cast<size_t>(poset.size()));
  const Permutation inv_sigma = sigma.inverse();
  for (int i = 0; i < poset.size(); ++i)
    labels[static_cast<size_t>(i)] = inv_sigma(i + 1);
  return NaturalLabeling(poset, std::move(labels));
}

GrowthSequence::GrowthSequence(std::vector<int> p) : p_(std::move(p)) {
  for (int i = 1; i <= size(); ++i) {
    int v = at(i);
    if (v < 0 || v > 2 * (i - 1))
      throw std::invalid_argument("growth value out of range 0..2(i-1)");
  }
}

GrowthSequence growth_sequence(const ChordPoset& poset, const NaturalLabeling& L) {
  const int n = poset.size();
  std::vector<int> p(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const Chord& ci = poset.chord(L.chord_with_label(i));
    int count = 0;
    for (int j = 1; j < i; ++j) {
      const Chord& cj = poset.chord(L.chord_with_label(j));
      if (cj.up_step < ci.up_step) ++count;
      if (cj.down_step < ci.up_step) ++count;
    }
    p[static_cast<size_t>(i - 1)] = count;
  }
  return GrowthSequence(std::move(p));
}

LabeledTree tree_from_growth(const GrowthSequence& p) {
  const int n = p.size();
  // Build the chord diagram as a word over +/- chord ids, inserting the
  // unit chord of label i after p_i existing symbols.
  std::vector<int> symbols;  // +id for an up step, -id for a down step
  symbols.reserve(static_cast<size_t>(2 * n));
  for (int i = 1; i <= n; ++i) {
    auto pos = symbols.begin() + p.at(i);
    pos = symbols.insert(pos, i);
    symbols.insert(pos + 1, -i);
  }
  std::vector<Step> steps;
  steps.reserve(symbols.size());
  std::vector<int> up_step_of(static_cast<size_t>(n) + 1, 0);
  for (size_t k = 0; k < symbols.size(); ++k) {
    steps.push_back(symbols[k] > 0 ? Step::Up : Step::Down);
    if (symbols[k] > 0) up_step_of[static_cast<size_t>(symbols[k])] = static_cast<int>(k) + 1;
  }
  DyckPath path{std::move(steps)};
  const auto chord_list = chords(path);
  std::vector<int> label_of_chord(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    // Chord i in reference order starts at chord_list[i].up_step; find the
    // growth label whose up step landed there.
    int lab = 0;
    for (int j = 1; j <= n; ++j)
      if (up_step_of[static_cast<size_t>(j)] == chord_list[static_cast<size_t>(i)].up_step) lab = j;
    label_of_chord[static_cast<size_t>(i)] = lab;
  }
  return LabeledTree{std::move(path), std::move(label_of_chord)};
}

namespace {

void extend_extensions(const ChordPoset& poset, std::vector<int>& labels,
                       std::vector<int>& sigma, std::vector<Permutation>& out) {
  const int n = poset.size();
  const int next = static_cast<int>(sigma.size()) + 1;
  if (next > n) {
    out.emplace_back(sigma);
    return;
  }
  for (int i = 0; i < n; ++i) {
    if (labels[static_cast<size_t>(i)] != 0) continue;
    int par = poset.parent(i);
    if (par >= 0 && labels[static_cast<size_t>(par)] == 0) continue;
    labels[static_cast<size_t>(i)] = next;
    sigma.push_back(i + 1);
    extend_extensions(poset, labels, sigma, out);
    sigma.pop_back();
    labels[static_cast<size_t>(i)] = 0;
  }
}

}  // namespace

std::vector<Permutation> enumerate_extensions(const ChordPoset& poset) {
  if (poset.size() > exhaustive_limit())
    throw std::invalid_argument("enumerate_extensions: order exceeds the exhaustive limit");
  std::vector<Permutation> out;
  std::vector<int> labels(static_cast<size_t>(poset.size()), 0);
  std::vector<int> sigma;
  extend_extensions(poset, labels, sigma, out);
  return out;  // chords tried in ascending reference index => lexicographic
}

Int hook_count(const ChordPoset& poset) {
  Int num = factorial(poset.size());
  Int den = 1;
  for (const Chord& c : poset.all_chords()) den *= chord_length(poset.path(), c);
  if (num % den != 0) throw std::logic_error("hook product does not divide n!");
  return num / den;
}

IntPolynomial q_hook_polynomial(const ChordPoset& poset) {
  IntPolynomial result = IntPolynomial::q_factorial(poset.size());
  for (const Chord& c : poset.all_chords())
    result = result.divide_exact(IntPolynomial::q_integer(chord_length(poset.path(), c)));
  return result;
}

IntPolynomial descent_polynomial(const ChordPoset& poset) {
  IntPolynomial result;
  for (const Permutation& sigma : enumerate_extensions(poset))
    result += IntPolynomial::monomial(1, des(sigma.values()));
  return result;
}

namespace {

std::string signature_of(const ChordPoset& poset, int i) {
  std::vector<std::string> parts;
  for (int c : poset.children(i)) parts.push_back(signature_of(poset, c));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  out += ")";
  return out;
}

}  // namespace

std::string abstract_tree_signature(const ChordPoset& poset) {
  std::vector<std::string> parts;
  for (int r : poset.top_level()) parts.push_back(signature_of(poset, r));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  out += ")";
  return out;
}

}  // namespace dyck
