#pragma once

#include <string>
#include <vector>

#include "dyckatlas/ints.hpp"
#include "dyckatlas/path.hpp"
#include "dyckatlas/permstat.hpp"
#include "dyckatlas/poly.hpp"

namespace dyck {

// The nesting order on the chords of a Dyck path: a chord lies above
// another when its horizontal span sits strictly inside the other's span.
// With a formal root adjoined below the top-level chords this is a rooted
// plane tree; chord indices follow the reference order (ascending left
// endpoint, i.e. depth-first preorder).
class ChordPoset {
 public:
  explicit ChordPoset(const DyckPath& path);

  const DyckPath& path() const { return path_; }
  int size() const { return static_cast<int>(chords_.size()); }
  const Chord& chord(int i) const { return chords_.at(static_cast<size_t>(i)); }
  const std::vector<Chord>& all_chords() const { return chords_; }
  int parent(int i) const { return parent_.at(static_cast<size_t>(i)); }  // -1 at top level
  const std::vector<int>& children(int i) const { return children_.at(static_cast<size_t>(i)); }
  const std::vector<int>& top_level() const { return top_level_; }
  // True when chord j lies strictly above chord i (j nested inside i).
  bool above(int j, int i) const;

 private:
  DyckPath path_;
  std::vector<Chord> chords_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<int> top_level_;
};

// A natural labeling assigns 1..n to the chords so that labels increase
// upward (every chord's label exceeds its parent's); equivalently the
// labeled tree is an increasing plane tree.
class NaturalLabeling {
 public:
  NaturalLabeling(const ChordPoset& poset, std::vector<int> label_of_chord);
  int label(int chord_index) const { return labels_.at(static_cast<size_t>(chord_index)); }
  int chord_with_label(int label) const { return chord_of_label_.at(static_cast<size_t>(label - 1)); }
  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<int>& labels() const { return labels_; }

 private:
  std::vector<int> labels_;          // labels_[chord index] = label
  std::vector<int> chord_of_label_;  // inverse table
};

// Reference labeling: chord i (left-endpoint order) gets label i+1.
NaturalLabeling reference_labeling(const ChordPoset& poset);

// sigma = reference-labeling word of L: sigma_i is the reference index of
// the chord labeled i.  Inverse of labeling_of_sigma.
Permutation sigma_of_labeling(const ChordPoset& poset, const NaturalLabeling& L);
NaturalLabeling labeling_of_sigma(const ChordPoset& poset, const Permutation& sigma);

// Growth sequences encode a labeled chord diagram insertion by insertion:
// p_i counts endpoints of lower-labeled chords to the left of the left
// endpoint of the chord labeled i, so 0 <= p_i <= 2(i-1).
class GrowthSequence {
 public:
  GrowthSequence() = default;
  explicit GrowthSequence(std::vector<int> p);
  int size() const { return static_cast<int>(p_.size()); }
  int at(int i) const { return p_.at(static_cast<size_t>(i - 1)); }  // 1-based
  const std::vector<int>& values() const { return p_; }
  bool operator==(const GrowthSequence& o) const = default;
  bool operator<(const GrowthSequence& o) const { return p_ < o.p_; }

 private:
  std::vector<int> p_;
};

GrowthSequence growth_sequence(const ChordPoset& poset, const NaturalLabeling& L);

struct LabeledTree {
  DyckPath path;
  std::vector<int> label_of_chord;  // suitable for NaturalLabeling(ChordPoset(path), ...)
};

// Rebuild the path and labeling from a growth sequence by inserting unit
// chords left to right.
LabeledTree tree_from_growth(const GrowthSequence& p);

// All linear extensions of the chord poset, as permutations sigma in
// lexicographic order.  Guarded by exhaustive_limit().
std::vector<Permutation> enumerate_extensions(const ChordPoset& poset);

// n! divided by the product of the chord lengths: the number of natural
// labelings (hook length formula for the chord forest).
Int hook_count(const ChordPoset& poset);

// [n]_q! divided by the product of the q-integers of the chord lengths;
// equals the inversion generating function over linear extensions.
IntPolynomial q_hook_polynomial(const ChordPoset& poset);

// Sum of z^{des(sigma)} over linear extensions, by direct enumeration.
IntPolynomial descent_polynomial(const ChordPoset& poset);

// Canonical string for the chord forest viewed as an abstract (unordered)
// rooted tree; equal strings mean the plane embeddings share a tree shape.
std::string abstract_tree_signature(const ChordPoset& poset);

}  // namespace dyck
