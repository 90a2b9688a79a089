#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "dyckatlas/bijection.hpp"
#include "dyckatlas/ints.hpp"
#include "dyckatlas/matching.hpp"
#include "dyckatlas/permstat.hpp"
#include "dyckatlas/poly.hpp"
#include "dyckatlas/poset.hpp"
#include "dyckatlas/render.hpp"
#include "dyckatlas/tiling.hpp"
#include "dyckatlas/verify.hpp"

namespace {

using namespace dyck;

std::vector<int> parse_csv(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = text.find(',', pos);
    const std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("not an integer: '" + tok + "'");
    out.push_back(value);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

std::string csv(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string stats_line(const DyckTiling& t) {
  const TilingStats st = stats(t);
  return "area=" + std::to_string(st.area) + " tiles=" + std::to_string(st.tiles) +
         " art=" + std::to_string(st.art) + " dis=" + std::to_string(st.dis);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << data;
  if (!out) throw std::invalid_argument("failed writing file: " + path);
}

// Cover-inclusive tilings over the given lower path, canonically ordered;
// restricted to one upper path when mu is nonempty.
std::vector<DyckTiling> collect_tilings(const std::string& lambda_word, const std::string& mu_word) {
  const DyckPath lambda = DyckPath::parse(lambda_word);
  if (mu_word.empty()) return enumerate_all(lambda);
  return enumerate_tilings(SkewShape(lambda, DyckPath::parse(mu_word)));
}

int run_enumerate(const std::string& lambda, const std::string& mu, const std::string& format) {
  const std::vector<DyckTiling> tilings = collect_tilings(lambda, mu);
  if (format == "count") {
    std::cout << tilings.size() << "\n";
  } else if (format == "stats") {
    for (const DyckTiling& t : tilings) std::cout << stats_line(t) << "\n";
  } else {
    for (std::size_t i = 0; i < tilings.size(); ++i) {
      if (i) std::cout << "\n";
      std::cout << to_text(tilings[i]);
    }
  }
  return 0;
}

int run_apply(const std::string& map, const std::string& lambda, const std::string& sigma,
              const std::string& p, const std::string& out) {
  DyckTiling t = DyckTiling::empty(DyckPath());
  if (!p.empty()) {
    const GrowthSequence seq(parse_csv(p));
    t = map == "dts" ? dts(seq) : dtr(seq);
  } else {
    const DyckPath lower = DyckPath::parse(lambda);
    const Permutation s(parse_csv(sigma));
    t = map == "dts" ? dts_of(lower, s) : dtr_of(lower, s);
  }
  write_file(out, to_text(t));
  std::cout << stats_line(t) << "\n";
  return 0;
}

int run_invert(const std::string& map, const std::string& in) {
  const DyckTiling t = parse_tiling(read_file(in));
  const GrowthSequence p = map == "dts" ? dts_inverse(t) : dtr_inverse(t);
  const LabeledTree tree = tree_from_growth(p);
  const ChordPoset poset(tree.path);
  const Permutation sigma = sigma_of_labeling(poset, NaturalLabeling(poset, tree.label_of_chord));
  std::cout << "lambda " << t.lower().word() << "\n";
  std::cout << "p " << csv(p.values()) << "\n";
  std::cout << "sigma " << csv(sigma.values()) << "\n";
  std::cout << "minword " << csv(min_word(match_of(p))) << "\n";
  return 0;
}

int run_verify(int max_n, int unsafe_max_n, const std::string& suite) {
  int perm_n = 6;
  int shape_n = 5;
  if (const char* env = std::getenv("DYCK_ATLAS_MAX_N")) {
    try {
      perm_n = shape_n = std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("DYCK_ATLAS_MAX_N is not an integer");
    }
  }
  if (max_n >= 0) perm_n = shape_n = max_n;
  if (unsafe_max_n >= 0) {
    perm_n = shape_n = unsafe_max_n;
    if (unsafe_max_n > exhaustive_limit()) set_exhaustive_limit(unsafe_max_n);
  }
  std::vector<SuiteResult> results;
  const auto want = [&](const std::string& name) { return suite == "all" || suite == name; };
  if (want("hook")) results.push_back(verify_hook(perm_n));
  if (want("qart")) results.push_back(verify_qart(shape_n));
  if (want("zdis")) results.push_back(verify_zdis(shape_n));
  if (want("matching")) results.push_back(verify_matching(perm_n, shape_n));
  if (want("mad")) results.push_back(verify_mad(perm_n));
  if (want("patterns")) results.push_back(verify_patterns(perm_n));
  if (want("poset")) results.push_back(verify_poset(shape_n));
  if (want("genfun")) results.push_back(verify_genfun(shape_n));
  if (want("tableaux")) results.push_back(verify_tableaux(shape_n));
  bool ok = true;
  for (const SuiteResult& r : results) {
    std::cout << r.name << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.summary << ")\n";
    for (const std::string& f : r.failures) std::cout << "  " << f << "\n";
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

int run_genfun(const std::string& lambda, const std::string& mu, const std::string& variable) {
  IntPolynomial poly;
  if (variable == "x") {
    const DyckPath lower = DyckPath::parse(lambda);
    if (mu.empty()) {
      for (const DyckPath& upper : enumerate_upper_paths(lower)) poly += genfun(SkewShape(lower, upper));
    } else {
      poly = genfun(SkewShape(lower, DyckPath::parse(mu)));
    }
  } else {
    for (const DyckTiling& t : collect_tilings(lambda, mu)) {
      const TilingStats st = stats(t);
      const long long stat = variable == "q" ? st.art : variable == "z" ? st.dis : st.tiles;
      poly += IntPolynomial::monomial(1, static_cast<int>(stat));
    }
  }
  std::cout << poly.to_string(variable) << "\n";
  return 0;
}

int run_conjecture(int n) {
  struct ClassData {
    std::vector<std::string> paths;
    std::vector<IntPolynomial> tiles_gf, area_gf;
    std::vector<std::map<std::pair<long long, long long>, long long>> art_dis, art_tiles, dis_tiles;
  };
  std::map<std::string, ClassData> classes;
  for (const DyckPath& lambda : enumerate_upper_paths(DyckPath::zigzag(n))) {
    ClassData& cd = classes[abstract_tree_signature(ChordPoset(lambda))];
    cd.paths.push_back(lambda.word());
    IntPolynomial tiles_gf, area_gf;
    std::map<std::pair<long long, long long>, long long> ad, at, dt;
    for (const DyckTiling& t : enumerate_all(lambda)) {
      const TilingStats st = stats(t);
      tiles_gf += IntPolynomial::monomial(1, static_cast<int>(st.tiles));
      area_gf += IntPolynomial::monomial(1, static_cast<int>(st.area));
      ++ad[{st.art, st.dis}];
      ++at[{st.art, st.tiles}];
      ++dt[{st.dis, st.tiles}];
    }
    cd.tiles_gf.push_back(tiles_gf);
    cd.area_gf.push_back(area_gf);
    cd.art_dis.push_back(ad);
    cd.art_tiles.push_back(at);
    cd.dis_tiles.push_back(dt);
  }
  const auto all_equal = [](const auto& v) {
    for (const auto& x : v)
      if (!(x == v.front())) return false;
    return true;
  };
  int multi = 0, tiles_agree = 0, area_agree = 0, joint_agree = 0;
  int k = 0;
  for (const auto& [sig, cd] : classes) {
    ++k;
    std::cout << "class " << k << " (" << cd.paths.size() << " paths:";
    for (const std::string& w : cd.paths) std::cout << " " << w;
    std::cout << ")";
    if (cd.paths.size() < 2) {
      std::cout << " singleton\n";
      continue;
    }
    ++multi;
    const bool t_eq = all_equal(cd.tiles_gf);
    const bool a_eq = all_equal(cd.area_gf);
    const bool ad_eq = all_equal(cd.art_dis);
    const bool at_eq = all_equal(cd.art_tiles);
    const bool dt_eq = all_equal(cd.dis_tiles);
    tiles_agree += t_eq;
    area_agree += a_eq;
    joint_agree += (ad_eq && at_eq && dt_eq);
    std::cout << " tiles " << (t_eq ? "AGREE" : "DIFFER") << ", area "
              << (a_eq ? "AGREE" : "DIFFER") << ", art/dis " << (ad_eq ? "AGREE" : "DIFFER")
              << ", art/tiles " << (at_eq ? "AGREE" : "DIFFER") << ", dis/tiles "
              << (dt_eq ? "AGREE" : "DIFFER") << "\n";
  }
  std::cout << "summary: tiles-genfun AGREE in " << tiles_agree << "/" << multi
            << " multi-path classes; area-genfun AGREE in " << area_agree << "/" << multi
            << "; all joint pairs AGREE in " << joint_agree << "/" << multi << "\n";
  return 0;
}

int run_render(const std::string& in, const std::string& format, const std::string& out) {
  const DyckTiling t = parse_tiling(read_file(in));
  const std::string art = format == "svg" ? render_svg(t) : render_ascii(t);
  if (out.empty()) {
    std::cout << art;
  } else {
    write_file(out, art);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cover-inclusive Dyck tiling toolkit"};
  app.require_subcommand(1);

  std::string lambda, mu, sigma, pseq, in_file, out_file;
  std::string format = "text";
  std::string variable = "q";
  std::string suite = "all";
  std::string map_name;
  int max_n = -1, unsafe_max_n = -1, conj_n = 0;

  CLI::App* cmd_enum = app.add_subcommand("enumerate", "list cover-inclusive tilings");
  cmd_enum->add_option("--lambda", lambda, "lower path word")->required();
  cmd_enum->add_option("--mu", mu, "upper path word (default: all)");
  cmd_enum->add_option("--format", format, "text|count|stats")
      ->check(CLI::IsMember({"text", "count", "stats"}));

  CLI::App* cmd_apply = app.add_subcommand("apply", "build the tiling for an extension or sequence");
  cmd_apply->add_option("map", map_name, "dts|dtr")->required()->check(CLI::IsMember({"dts", "dtr"}));
  CLI::Option* opt_lambda = cmd_apply->add_option("--lambda", lambda, "lower path word");
  CLI::Option* opt_sigma = cmd_apply->add_option("--sigma", sigma, "linear extension, comma separated");
  CLI::Option* opt_p = cmd_apply->add_option("--p", pseq, "growth sequence, comma separated");
  cmd_apply->add_option("--out", out_file, "tiling file to write")->required();
  opt_sigma->needs(opt_lambda);
  opt_sigma->excludes(opt_p);
  opt_p->excludes(opt_lambda);

  CLI::App* cmd_invert = app.add_subcommand("invert", "recover sequence and extension from a tiling");
  cmd_invert->add_option("map", map_name, "dts|dtr")->required()->check(CLI::IsMember({"dts", "dtr"}));
  cmd_invert->add_option("--in", in_file, "tiling file to read")->required();

  CLI::App* cmd_verify = app.add_subcommand("verify", "run exhaustive cross-checks");
  cmd_verify->add_option("--max-n", max_n, "sweep limit for every suite")->check(CLI::Range(0, 7));
  cmd_verify->add_option("--unsafe-max-n", unsafe_max_n, "sweep limit above the safety cap")
      ->check(CLI::Range(0, 12));
  cmd_verify->add_option("--suite", suite, "all or one suite")
      ->check(CLI::IsMember({"all", "hook", "qart", "zdis", "matching", "mad", "patterns", "poset",
                             "genfun", "tableaux"}));

  CLI::App* cmd_genfun = app.add_subcommand("genfun", "print a statistic generating function");
  cmd_genfun->add_option("--lambda", lambda, "lower path word")->required();
  cmd_genfun->add_option("--mu", mu, "upper path word (default: all)");
  cmd_genfun->add_option("--variable", variable, "q (art) | z (dis) | x ((area-tiles)/2) | t (tiles)")
      ->check(CLI::IsMember({"q", "z", "x", "t"}));

  CLI::App* cmd_conj = app.add_subcommand("conjecture", "compare statistics across isomorphic trees");
  cmd_conj->add_option("--n", conj_n, "order to examine")->required()->check(CLI::Range(1, 6));

  CLI::App* cmd_render = app.add_subcommand("render", "draw a tiling");
  cmd_render->add_option("--in", in_file, "tiling file to read")->required();
  cmd_render->add_option("--format", format, "ascii|svg")->check(CLI::IsMember({"ascii", "svg"}));
  cmd_render->add_option("--out", out_file, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_enum->parsed()) return run_enumerate(lambda, mu, format);
    if (cmd_apply->parsed()) {
      if (pseq.empty() && sigma.empty()) {
        std::cerr << "apply needs either --sigma with --lambda, or --p\n";
        return 2;
      }
      return run_apply(map_name, lambda, sigma, pseq, out_file);
    }
    if (cmd_invert->parsed()) return run_invert(map_name, in_file);
    if (cmd_verify->parsed()) return run_verify(max_n, unsafe_max_n, suite);
    if (cmd_genfun->parsed()) return run_genfun(lambda, mu, variable);
    if (cmd_conj->parsed()) return run_conjecture(conj_n);
    if (cmd_render->parsed()) return run_render(in_file, format == "text" ? "ascii" : format, out_file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
