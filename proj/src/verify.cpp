#include "dyckatlas/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dyckatlas/bijection.hpp"
#include "dyckatlas/ints.hpp"
#include "dyckatlas/matching.hpp"
#include "dyckatlas/permstat.hpp"
#include "dyckatlas/poly.hpp"
#include "dyckatlas/poset.hpp"

namespace dyck {

namespace {

struct Sweep {
  SuiteResult res;
  long long checked = 0;
  long long dropped = 0;

  explicit Sweep(std::string name) { res.name = std::move(name); }

  void fail(std::string msg) {
    res.passed = false;
    if (res.failures.size() < 8) {
      res.failures.push_back(std::move(msg));
    } else {
      ++dropped;
    }
  }

  SuiteResult done(const std::string& what) {
    if (dropped > 0) res.failures.push_back("... and " + std::to_string(dropped) + " more");
    res.summary = std::to_string(checked) + " " + what + " checked";
    return std::move(res);
  }
};

std::vector<DyckPath> paths_of_order(int n) { return enumerate_upper_paths(DyckPath::zigzag(n)); }

// Visit every growth sequence of the given order in lexicographic order.
template <typename F>
void for_each_growth(int n, F&& f) {
  std::vector<int> p(static_cast<std::size_t>(n), 0);
  while (true) {
    f(GrowthSequence(p));
    int i = n - 1;
    while (i >= 0 && p[static_cast<std::size_t>(i)] == 2 * i) p[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++p[static_cast<std::size_t>(i)];
  }
}

template <typename F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  do {
    f(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

std::string csv(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[static_cast<std::size_t>(i)]);
  }
  return s;
}

// Words of chord endpoints (step indices) listed by label.
std::pair<Word, Word> endpoint_words(const ChordPoset& poset, const NaturalLabeling& L) {
  Word left, right;
  for (int lab = 1; lab <= poset.size(); ++lab) {
    const Chord& c = poset.chord(L.chord_with_label(lab));
    left.push_back(c.up_step);
    right.push_back(c.down_step);
  }
  return {std::move(left), std::move(right)};
}

Permutation sigma_of_growth(const GrowthSequence& p) {
  const LabeledTree tree = tree_from_growth(p);
  const ChordPoset poset(tree.path);
  return sigma_of_labeling(poset, NaturalLabeling(poset, tree.label_of_chord));
}

bool one_box_only(const DyckTiling& t) {
  for (const DyckTile& tile : t.tiles())
    if (tile.size() != 1) return false;
  return true;
}

int min_boxes_over_span(const SkewShape& shape, const Chord& c) {
  int m = shape.boxes_in_column(c.left_col);
  for (int x = c.left_col + 1; x <= c.right_col; ++x)
    m = std::min(m, shape.boxes_in_column(x));
  return m;
}

template <typename F>
void for_each_bounded_labeling(const ChordPoset& poset, const std::vector<int>& h,
                               std::vector<int>& g, std::size_t i, F&& f) {
  if (i == g.size()) {
    f(g);
    return;
  }
  const int parent = poset.parent(static_cast<int>(i));
  const int lo = parent < 0 ? 0 : g[static_cast<std::size_t>(parent)];
  for (int v = lo; v <= h[i]; ++v) {
    g[i] = v;
    for_each_bounded_labeling(poset, h, g, i + 1, f);
  }
}

}  // namespace

SuiteResult verify_hook(int max_n) {
  Sweep sw("hook");
  for (int n = 0; n <= max_n; ++n) {
    Int trees_of_order = 0;
    std::map<std::string, std::pair<IntPolynomial, DyckPath>> class_poly;
    for (const DyckPath& lambda : paths_of_order(n)) {
      ++sw.checked;
      const ChordPoset poset(lambda);
      const auto extensions = enumerate_extensions(poset);
      const Int hook = hook_count(poset);
      trees_of_order += hook;
      if (Int(extensions.size()) != hook)
        sw.fail("lambda=" + lambda.word() + ": " + std::to_string(extensions.size()) +
                " extensions but hook product " + hook.str());
      const IntPolynomial qhook = q_hook_polynomial(poset);
      if (qhook.value_at_one() != hook)
        sw.fail("lambda=" + lambda.word() + ": q-hook at q=1 differs from hook product");
      const IntPolynomial despoly = descent_polynomial(poset);
      if (despoly.value_at_one() != hook)
        sw.fail("lambda=" + lambda.word() + ": descent polynomial at z=1 differs from hook product");
      IntPolynomial qinv;
      for (const Permutation& sigma : extensions) {
        qinv += IntPolynomial::monomial(1, static_cast<int>(inv(sigma.values())));
        // the labeled tree regrown from the growth sequence must be the
        // one we started from
        const NaturalLabeling L = labeling_of_sigma(poset, sigma);
        const LabeledTree tree = tree_from_growth(growth_sequence(poset, L));
        if (tree.path != lambda || tree.label_of_chord != L.labels())
          sw.fail("lambda=" + lambda.word() + " sigma=" + csv(sigma.values()) +
                  ": growth sequence does not regrow the same labeled tree");
      }
      if (qinv != qhook)
        sw.fail("lambda=" + lambda.word() + ": inversion generating function " +
                qinv.to_string("q") + " differs from q-hook " + qhook.to_string("q"));
      const std::string sig = abstract_tree_signature(poset);
      auto [it, fresh] = class_poly.try_emplace(sig, despoly, lambda);
      if (!fresh && it->second.first != despoly)
        sw.fail("lambda=" + lambda.word() + " vs " + it->second.second.word() +
                ": isomorphic trees with different descent polynomials");
    }
    if (trees_of_order != double_factorial_odd(n))
      sw.fail("order " + std::to_string(n) + ": hook products sum to " + trees_of_order.str() +
              ", not (2n-1)!!");
  }
  return sw.done("paths");
}

SuiteResult verify_qart(int max_n) {
  Sweep sw("qart");
  for (int n = 0; n <= max_n; ++n) {
    Int tilings_of_order = 0;
    for (const DyckPath& lambda : paths_of_order(n)) {
      ++sw.checked;
      const ChordPoset poset(lambda);
      const auto tilings = enumerate_all(lambda);
      tilings_of_order += Int(tilings.size());
      if (Int(tilings.size()) != hook_count(poset))
        sw.fail("lambda=" + lambda.word() + ": " + std::to_string(tilings.size()) +
                " tilings but hook product " + hook_count(poset).str());
      IntPolynomial qart;
      for (const DyckTiling& t : tilings)
        qart += IntPolynomial::monomial(1, static_cast<int>(stats(t).art));
      const IntPolynomial qhook = q_hook_polynomial(poset);
      if (qart != qhook)
        sw.fail("lambda=" + lambda.word() + ": art generating function " + qart.to_string("q") +
                " differs from q-hook " + qhook.to_string("q"));
    }
    if (tilings_of_order != double_factorial_odd(n))
      sw.fail("order " + std::to_string(n) + ": tiling total " + tilings_of_order.str() +
              " is not (2n-1)!!");
  }
  return sw.done("paths");
}

SuiteResult verify_zdis(int max_n) {
  Sweep sw("zdis");
  for (int n = 0; n <= max_n; ++n) {
    for (const DyckPath& lambda : paths_of_order(n)) {
      ++sw.checked;
      IntPolynomial zdis;
      for (const DyckTiling& t : enumerate_all(lambda))
        zdis += IntPolynomial::monomial(1, static_cast<int>(stats(t).dis));
      const IntPolynomial despoly = descent_polynomial(ChordPoset(lambda));
      if (zdis != despoly)
        sw.fail("lambda=" + lambda.word() + ": dis generating function " + zdis.to_string("z") +
                " differs from descent polynomial " + despoly.to_string("z"));
    }
  }
  return sw.done("paths");
}

SuiteResult verify_matching(int perm_n, int shape_n) {
  Sweep sw("matching");
  for (int n = 0; n <= perm_n; ++n) {
    for_each_growth(n, [&](const GrowthSequence& p) {
      ++sw.checked;
      const std::string tag = "p=" + csv(p.values());
      const PerfectMatching m = match_of(p);
      const Word mw = min_word(m);
      if (inv(mw) != nestings(m))
        sw.fail(tag + ": min-word inversions differ from nestings");
      std::set<int> pdes;
      for (int i = 1; i < n; ++i)
        if (p.at(i + 1) <= p.at(i)) pdes.insert(i);
      if (pdes != descent_set(mw))
        sw.fail(tag + ": min-word descent set differs from growth-sequence criterion");
      // shape plus per-pair nesting numbers determine the matching
      std::vector<std::pair<int, int>> by_min = m.pairs();
      std::sort(by_min.begin(), by_min.end());
      const std::vector<int> nn = nesting_numbers(m);
      std::vector<int> labels_by_up_step;
      for (const auto& pr : by_min) {
        for (std::size_t k = 0; k < m.pairs().size(); ++k)
          if (m.pairs()[k] == pr) labels_by_up_step.push_back(static_cast<int>(nn[k]));
      }
      if (matching_from_nesting_numbers(matching_shape(m), labels_by_up_step) != m)
        sw.fail(tag + ": matching not recovered from shape and nesting numbers");

      const Permutation sigma = sigma_of_growth(p);
      if (descent_set(sigma.values()) != descent_set(mw))
        sw.fail(tag + ": extension and min-word descent sets differ");

      const DyckTiling ts = dts(p);
      const DyckTiling tr = dtr(p);
      const LabeledTree tree = tree_from_growth(p);
      if (ts.lower() != tree.path || tr.lower() != tree.path)
        sw.fail(tag + ": strip/ribbon images disagree with the tree path");
      if (stats(ts).tiles != nestings(m))
        sw.fail(tag + ": strip-image tile count differs from nestings");
      if (stats(ts).art != inv(sigma.values()))
        sw.fail(tag + ": strip-image art differs from extension inversions");
      if (stats(tr).dis != des(sigma.values()))
        sw.fail(tag + ": ribbon-image dis differs from extension descents");
      if (dts_inverse(ts) != p) sw.fail(tag + ": strip round-trip failed");
      if (dtr_inverse(tr) != p) sw.fail(tag + ": ribbon round-trip failed");
    });
  }
  // image exhaustion: the two maps hit every cover-inclusive tiling exactly once
  for (int n = 0; n <= shape_n; ++n) {
    std::vector<DyckTiling> all;
    for (const DyckPath& lambda : paths_of_order(n)) {
      auto v = enumerate_all(lambda);
      all.insert(all.end(), v.begin(), v.end());
    }
    std::sort(all.begin(), all.end(), tiling_less);
    std::vector<DyckTiling> strip_images, ribbon_images;
    for_each_growth(n, [&](const GrowthSequence& p) {
      strip_images.push_back(dts(p));
      ribbon_images.push_back(dtr(p));
    });
    std::sort(strip_images.begin(), strip_images.end(), tiling_less);
    std::sort(ribbon_images.begin(), ribbon_images.end(), tiling_less);
    if (strip_images != all)
      sw.fail("order " + std::to_string(n) + ": strip images differ from enumerated tilings");
    if (ribbon_images != all)
      sw.fail("order " + std::to_string(n) + ": ribbon images differ from enumerated tilings");
  }
  return sw.done("sequences");
}

SuiteResult verify_mad(int max_n) {
  Sweep sw("mad");
  for (int n = 1; n <= max_n; ++n) {
    const DyckPath zz = DyckPath::zigzag(n);
    IntPolynomial qmad;
    std::set<std::vector<int>> composite_images;
    for_each_permutation(n, [&](const Permutation& sigma) {
      ++sw.checked;
      const std::string tag = "sigma=" + csv(sigma.values());
      const long long m = mad(sigma.values());
      qmad += IntPolynomial::monomial(1, static_cast<int>(m));
      const DyckTiling t = dtr_of(zz, sigma);
      if (stats(t).art != m) sw.fail(tag + ": art over the minimal path differs from mad");
      const Permutation image = sigma_of_growth(dts_inverse(t));
      if (inv(image.values()) != m)
        sw.fail(tag + ": composite image has inversions != mad");
      composite_images.insert(image.values());
    });
    if (qmad != IntPolynomial::q_factorial(n))
      sw.fail("order " + std::to_string(n) + ": mad distribution " + qmad.to_string("q") +
              " is not the q-factorial");
    if (Int(composite_images.size()) != factorial(n))
      sw.fail("order " + std::to_string(n) + ": composite map is not a bijection");
  }
  // closed formulas from the labeled chords, on every path and extension
  for (int n = 0; n <= max_n; ++n) {
    for (const DyckPath& lambda : paths_of_order(n)) {
      const ChordPoset poset(lambda);
      for (const Permutation& sigma : enumerate_extensions(poset)) {
        const std::string tag = "lambda=" + lambda.word() + " sigma=" + csv(sigma.values());
        const auto [left, right] = endpoint_words(poset, labeling_of_sigma(poset, sigma));
        const auto invl = inversion_set(left);
        const auto invr = inversion_set(right);
        if (!std::includes(invr.begin(), invr.end(), invl.begin(), invl.end()))
          sw.fail(tag + ": left-endpoint inversions not contained in right-endpoint inversions");
        if (standardize(left) != sigma)
          sw.fail(tag + ": extension is not the standardized left-endpoint word");
        const auto st = stats(dtr_of(lambda, sigma));
        const AreaTiles direct{st.area, st.tiles};
        if (closed_area_tiles(left, right) != direct)
          sw.fail(tag + ": endpoint formula disagrees with ribbon-image area/tiles");
        if (rem_formulas(sigma, standardize(right)) != direct)
          sw.fail(tag + ": embraced-number formula disagrees with ribbon-image area/tiles");
      }
    }
  }
  return sw.done("permutations");
}

SuiteResult verify_patterns(int max_n) {
  Sweep sw("patterns");
  // One-box images are characterized by the word listed along the lower
  // path (the inverse of the extension), so the pattern condition is
  // applied to w and the maps below take w^{-1}.
  for (int n = 1; n <= max_n; ++n) {
    const DyckPath zz = DyckPath::zigzag(n);
    Int count231 = 0;
    std::set<DyckPath> strip_uppers, ribbon_uppers, mirrored_uppers;
    long long count132 = 0;
    for_each_permutation(n, [&](const Permutation& w) {
      ++sw.checked;
      const std::string tag = "w=" + csv(w.values());
      const bool avoids = avoids_231(w.values());
      if (avoids) ++count231;
      const DyckTiling ts = dts_of(zz, w.inverse());
      const DyckTiling tr = dtr_of(zz, w.inverse());
      if (one_box_only(ts) != avoids)
        sw.fail(tag + ": strip image one-box-only iff 231-avoiding fails");
      if (one_box_only(tr) != avoids)
        sw.fail(tag + ": ribbon image one-box-only iff 231-avoiding fails");
      if (avoids) {
        strip_uppers.insert(ts.upper());
        ribbon_uppers.insert(tr.upper());
      }
      if (avoids_132(w.values())) {
        ++count132;
        if (!avoids_231(w.reversed().values()))
          sw.fail(tag + ": reversal of a 132-avoider is not 231-avoiding");
        mirrored_uppers.insert(mirror(dtr_of(zz, w.reversed().inverse()).upper()));
      }
    });
    if (count231 != catalan(n))
      sw.fail("order " + std::to_string(n) + ": 231-avoider count " + count231.str() +
              " is not Catalan");
    if (Int(strip_uppers.size()) != catalan(n) || Int(ribbon_uppers.size()) != catalan(n))
      sw.fail("order " + std::to_string(n) + ": images of 231-avoiders are not all distinct");
    if (Int(count132) != catalan(n) || Int(mirrored_uppers.size()) != catalan(n))
      sw.fail("order " + std::to_string(n) + ": mirrored images of 132-avoiders miss some path");
  }
  return sw.done("permutations");
}

SuiteResult verify_poset(int max_n) {
  Sweep sw("poset");
  for (int n = 0; n <= max_n; ++n) {
    for (const DyckPath& lambda : paths_of_order(n)) {
      const ChordPoset poset(lambda);
      for (const DyckPath& mu : enumerate_upper_paths(lambda)) {
        ++sw.checked;
        const SkewShape shape(lambda, mu);
        const std::string tag = "lambda=" + lambda.word() + " mu=" + mu.word();
        std::vector<int> h;
        for (const Chord& c : poset.all_chords()) h.push_back(min_boxes_over_span(shape, c));
        std::vector<int> max_g(static_cast<std::size_t>(poset.size()), -1);
        long long ci_count = 0;
        for (const DyckTiling& t : enumerate_tilings(shape)) {
          if (!is_cover_inclusive(t)) continue;
          ++ci_count;
          const auto st = stats(t);
          const ChordLabeling lab = chord_labels(t);
          long long gsum = 0;
          for (std::size_t i = 0; i < lab.g.size(); ++i) {
            gsum += lab.g[i];
            max_g[i] = std::max(max_g[i], lab.g[i]);
            if (lab.h[i] != h[i]) sw.fail(tag + ": chord bound differs from column minimum");
          }
          if (2 * gsum != st.area - st.tiles)
            sw.fail(tag + ": label sum is not (area - tiles)/2");
          if (tiling_from_labels(shape, lab.g) != t)
            sw.fail(tag + ": tiling not recovered from its chord labels");
        }
        long long labelings = 0;
        std::vector<int> g(static_cast<std::size_t>(poset.size()), 0);
        for_each_bounded_labeling(poset, h, g, 0, [&](const std::vector<int>& gg) {
          ++labelings;
          const DyckTiling t = tiling_from_labels(shape, gg);
          if (chord_labels(t).g != gg)
            sw.fail(tag + " g=" + csv(gg) + ": labels not recovered from the built tiling");
        });
        if (labelings != ci_count)
          sw.fail(tag + ": " + std::to_string(labelings) + " labelings vs " +
                  std::to_string(ci_count) + " cover-inclusive tilings");
        if (ci_count > 0 && max_g != h)
          sw.fail(tag + ": some chord bound is not attained");
      }
    }
  }
  return sw.done("shapes");
}

SuiteResult verify_genfun(int max_n) {
  Sweep sw("genfun");
  for (int n = 0; n <= max_n; ++n) {
    for (const DyckPath& lambda : paths_of_order(n)) {
      for (const DyckPath& mu : enumerate_upper_paths(lambda)) {
        ++sw.checked;
        const SkewShape shape(lambda, mu);
        IntPolynomial brute;
        for (const DyckTiling& t : enumerate_tilings(shape)) {
          if (!is_cover_inclusive(t)) continue;
          const auto st = stats(t);
          brute += IntPolynomial::monomial(1, static_cast<int>((st.area - st.tiles) / 2));
        }
        const IntPolynomial rec = genfun(shape);
        if (brute != rec)
          sw.fail("lambda=" + lambda.word() + " mu=" + mu.word() + ": recursion gives " +
                  rec.to_string("x") + ", enumeration gives " + brute.to_string("x"));
      }
    }
  }
  return sw.done("shapes");
}

SuiteResult verify_tableaux(int max_n) {
  Sweep sw("tableaux");
  for (int n = 0; n <= max_n; ++n) {
    std::set<std::string> seen;
    long long tilings = 0;
    for (const DyckTiling& t : enumerate_all(DyckPath::zigzag(n))) {
      ++sw.checked;
      ++tilings;
      const DyckTableau tab = to_tableau(t);
      if (from_tableau(tab) != t)
        sw.fail("tiling over the minimal path of order " + std::to_string(n) +
                " fails the tableau round-trip");
      seen.insert(tab.upper.word() + ":" + csv(tab.dot_heights));
    }
    if (Int(tilings) != factorial(n) || Int(seen.size()) != factorial(n))
      sw.fail("order " + std::to_string(n) + ": tableau count is not n!");
  }
  return sw.done("tableaux");
}

}  // namespace dyck
