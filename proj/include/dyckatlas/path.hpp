#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace dyck {

enum class Step : unsigned char { Up, Down };

// A Dyck path of order n: 2n steps of (+1,+1) ("U") or (+1,-1) ("D") from
// (-n,0) to (n,0), never dipping below height 0.  Columns x run from -n to
// n; step i (1-based) joins column i-1-n to column i-n.
class DyckPath {
 public:
  DyckPath() : heights_{0} {}  // order 0: the empty path, a single vertex
  explicit DyckPath(std::vector<Step> steps);

  // Accepts the U/D alphabet or balanced parentheses, not mixed.
  static DyckPath parse(std::string_view text);
  static DyckPath zigzag(int n);  // (UD)^n, the minimal path

  int order() const { return static_cast<int>(steps_.size()) / 2; }
  int step_count() const { return static_cast<int>(steps_.size()); }
  Step step(int i) const { return steps_.at(static_cast<size_t>(i - 1)); }  // 1-based
  const std::vector<Step>& steps() const { return steps_; }                 // 0-based
  int height(int x) const { return heights_.at(static_cast<size_t>(x + order())); }
  const std::vector<int>& heights() const { return heights_; }
  std::string word() const;

  bool operator==(const DyckPath& o) const { return steps_ == o.steps_; }
  // Lexicographic on steps with U before D; used for canonical orderings.
  bool operator<(const DyckPath& o) const { return steps_ < o.steps_; }

 private:
  std::vector<Step> steps_;
  std::vector<int> heights_;  // heights_[x + n], size 2n+1
};

// A chord pairs an up step with its matching down step (balanced-parens
// matching).  Endpoint columns: the up step starts at left_col and the down
// step ends at right_col; the chord sits at height(left_col).
struct Chord {
  int up_step = 0;    // 1-based step index
  int down_step = 0;  // 1-based step index
  int left_col = 0;
  int right_col = 0;
  bool operator==(const Chord&) const = default;
};

// All chords of the path, ordered by left endpoint (ascending up_step).
std::vector<Chord> chords(const DyckPath& path);

// Number of up steps with index in [c.up_step, c.down_step]; equals the
// size of the subtree of the chord in the nesting order.
int chord_length(const DyckPath& path, const Chord& c);

// True when upper.height(x) >= lower.height(x) for every column.
bool weakly_above(const DyckPath& upper, const DyckPath& lower);

// Number of step indices where lower steps down while upper steps up;
// equals half the Hamming distance between the words.
int discrepancy(const DyckPath& lower, const DyckPath& upper);

// Spread at column s: points left of s move one step left, points right of
// s move one step right, and column s is lifted; order grows by one.
DyckPath spread(const DyckPath& path, int s);

// Inverse of spread.  Requires a peak at column s; throws otherwise.
DyckPath contract(const DyckPath& path, int s);

// Reflection about the y-axis (reverse the word and swap U <-> D).
DyckPath mirror(const DyckPath& path);

// A skew shape: the region between a lower and an upper path of the same
// order with upper weakly above lower.  A box with bottom vertex (x,y) lies
// in the shape when lower(x) <= y and y+2 <= upper(x); column x holds
// (upper(x)-lower(x))/2 boxes.
class SkewShape {
 public:
  SkewShape(DyckPath lower, DyckPath upper);
  const DyckPath& lower() const { return lower_; }
  const DyckPath& upper() const { return upper_; }
  int order() const { return lower_.order(); }
  int boxes_in_column(int x) const { return (upper_.height(x) - lower_.height(x)) / 2; }
  long long box_count() const;
  bool operator==(const SkewShape& o) const = default;

 private:
  DyckPath lower_, upper_;
};

}  // namespace dyck
