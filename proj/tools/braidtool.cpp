#include <CLI11.hpp>

#include <iostream>
#include <thread>

#include "braidkit/braid_word.hpp"
#include "braidkit/cabling.hpp"
#include "braidkit/census.hpp"
#include "braidkit/criteria.hpp"
#include "braidkit/genus.hpp"
#include "braidkit/homfly.hpp"
#include "braidkit/invariants.hpp"
#include "braidkit/regression_suite.hpp"
#include "braidkit/permutation.hpp"
#include "braidkit/poly_io.hpp"

using namespace braidkit;

namespace {

// exit codes
constexpr int kOk = 0;
constexpr int kRefused = 1;
constexpr int kUsage = 2;
constexpr int kSuiteFailed = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BraidWord word_arg(const std::string& text, int strands) {
  try {
    return parse_word(text, strands > 0 ? std::optional<int>(strands) : std::nullopt);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad braid word: ") + e.what());
  }
}

void print_stats(const LaurentPoly2& p) {
  auto st = degree_stats(p);
  std::cout << "  min_deg_v " << st.min_deg_v << "  max_deg_v " << st.max_deg_v << "  span_v " << st.span_v
            << "  min_deg_z " << st.min_deg_z << "  max_deg_z " << st.max_deg_z << '\n';
  std::cout << "  max cf_z " << to_string(st.max_cf_z, "v") << '\n';
}

int cmd_invariants(const BraidWord& w, bool raw) {
  const auto P = homfly(w);
  const int comps = closure_components(w);
  std::cout << "word        " << format_word(w, true) << '\n';
  std::cout << "letters     " << w.length() << "  exponent sum " << exponent_sum(w) << "  components " << comps << '\n';
  std::cout << "P           " << to_string(P) << '\n';
  print_stats(P);
  std::cout << "V           " << to_string(jones_from_homfly(P)) << '\n';
  if (comps == 1) std::cout << "Delta       " << to_string(alexander_from_homfly(P)) << '\n';
  if (raw) std::cout << write_homfly_text(P);
  return kOk;
}

int cmd_genus(const BraidWord& w) {
  if (!is_knot(w)) throw UsageError("genus needs a knot closure");
  const auto P = homfly(w);
  const auto st = degree_stats(P);
  std::cout << "letters " << w.length() << "  strands " << w.strands() << "  exponent sum " << exponent_sum(w) << '\n';
  if (w.is_positive()) std::cout << "positive genus      " << positive_genus(w) << '\n';
  std::cout << "Bennequin 1-chi >=  " << bennequin_lower(w) << '\n';
  if (auto b = band_parse_conjugate(w)) {
    std::cout << "bands               " << b->bands.bands.size() << "  1-chi <= " << b->bands.one_minus_chi() << '\n';
    if (!(b->word == w)) std::cout << "  after rewriting to " << format_word(b->word) << '\n';
    std::cout << "  " << format_bands(b->bands) << '\n';
  } else {
    std::cout << "bands               no positive band parse\n";
  }
  auto m = morton_conjecture_check(w);
  std::cout << "min_deg_v P         " << st.min_deg_v << "  Morton conjecture " << to_string(m.verdict) << '\n';
  auto g = canonical_genus_check(w);
  std::cout << "max_deg_z P         " << g.max_deg_z << "  diagram bound " << g.diagram_bound << "  slack " << g.slack()
            << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid words, skein polynomials and braid index bounds"};
  app.require_subcommand(1);
  int jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  app.add_option("-j,--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  std::string word_text;
  int strands = 0;
  auto add_word = [&](CLI::App* sub, bool required = true) {
    auto* o = sub->add_option("word", word_text, "braid word, e.g. \"1 1 1\" or \"n=3; 1 -2\"");
    if (required) o->required();
    sub->add_option("-n,--strands", strands, "pin the strand count");
  };

  auto* inv = app.add_subcommand("invariants", "P, V and Delta of the closure");
  add_word(inv);
  bool raw = false;
  inv->add_flag("--raw", raw, "also print P in the z^k line format");

  auto* crit = app.add_subcommand("criteria", "braid index lower bounds");
  add_word(crit, false);
  std::string homfly_file, cable_file, murakami;
  int cable_k = 2, two_cable_writhe = 0, root_k_max = 12;
  bool records = false;
  crit->add_option("--homfly", homfly_file, "read P from a file instead of a word");
  crit->add_option("--cable-homfly", cable_file, "P of a k-cable, from a file");
  crit->add_option("--cable-k", cable_k, "cable degree of --cable-homfly")->check(CLI::PositiveNumber);
  auto* two_cable_opt =
      crit->add_option("--two-cable", two_cable_writhe, "compute the 2-cable of the word with this writhe");
  crit->add_option("--murakami", murakami, "external 3-braid verdict")->check(CLI::IsMember({"excludes", "admits"}));
  crit->add_option("--root-k-max", root_k_max, "largest root of unity order")->check(CLI::Range(3, 64));
  crit->add_flag("--records", records, "key=value output");

  auto* cab = app.add_subcommand("cable", "satellite braid gamma {w}^k Delta_k^{-2[w]}");
  add_word(cab);
  std::string pattern_text;
  cab->add_option("-p,--pattern", pattern_text, "pattern braid gamma")->required();

  auto* two = app.add_subcommand("two-cable", "2-cable K_{2,writhe}");
  add_word(two);
  int writhe = 1;
  two->add_option("-w,--writhe", writhe, "writhe of the 2-cable")->required();

  auto* cen = app.add_subcommand("census", "positive words of a given size, one per class");
  int c_strands = 0, c_crossings = 0;
  std::string out_path;
  std::string policy_name = "min";
  bool no_flip = false;
  std::size_t red_budget = 20000;
  cen->add_option("--strands", c_strands)->required()->check(CLI::Range(2, 9));
  cen->add_option("--crossings", c_crossings)->required()->check(CLI::NonNegativeNumber);
  cen->add_option("-o,--out", out_path, "census file (checkpoints go next to it)")->required();
  cen->add_option("--index-sum", policy_name, "min or max")->check(CLI::IsMember({"min", "max"}));
  cen->add_flag("--no-flip", no_flip, "do not identify flipped words");
  cen->add_option("--reduction-budget", red_budget, "states per reduction search");

  auto* red = app.add_subcommand("reduce", "search positive conjugates for a destabilisation");
  add_word(red);
  std::size_t budget = 200000;
  red->add_option("-b,--budget", budget, "states to explore")->check(CLI::PositiveNumber);

  auto* dn = app.add_subcommand("dn", "least crossing number of an irreducible n-braid knot");
  int dn_strands = 0, dn_max = 0;
  dn->add_option("--strands", dn_strands)->required()->check(CLI::Range(2, 9));
  dn->add_option("--max-crossings", dn_max)->required()->check(CLI::PositiveNumber);

  auto* ex9 = app.add_subcommand("exhaust9", "length-9 word exhaustion over letters 1, 2, 3");
  bool no_counts = false, no_composite = false, no_connected = false;
  ex9->add_flag("--no-count-filter", no_counts);
  ex9->add_flag("--no-composite-filter", no_composite);
  ex9->add_flag("--no-connectedness", no_connected);

  auto* gen = app.add_subcommand("genus", "genus bounds and Morton's inequalities");
  add_word(gen);

  auto* ver = app.add_subcommand("verify-paper", "run the regression suite");
  SuiteOptions suite;
  ver->add_flag("--long-d5", suite.long_d5, "include the d_5 search (hours)");
  ver->add_flag("--long-exmbr-cable", suite.long_exmbr_cable, "include the 2-cable polynomials of item 14 (seconds)");
  ver->add_option("--data", suite.data_dir, "directory of table polynomials");
  ver->add_option("--item", suite.only, "run only these items")->check(CLI::Range(1, 14));
  ver->add_option("--reduction-budget", suite.reduction_budget, "states per reduction search in item 6");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code == 0) return kOk;
    std::cerr << app.help();
    return kUsage;
  }

  try {
    if (inv->parsed()) return cmd_invariants(word_arg(word_text, strands), raw);
    if (gen->parsed()) return cmd_genus(word_arg(word_text, strands));

    if (crit->parsed()) {
      CriteriaInput in;
      if (!homfly_file.empty()) {
        in.homfly = read_homfly_file(homfly_file);
      } else if (!word_text.empty()) {
        in.homfly = homfly(word_arg(word_text, strands));
      } else {
        throw UsageError("criteria needs a word or --homfly");
      }
      if (!cable_file.empty()) {
        in.cable_homfly = read_homfly_file(cable_file);
        in.cable_k = cable_k;
      } else if (two_cable_opt->count() > 0) {
        if (word_text.empty()) throw UsageError("--two-cable needs a word");
        in.cable_homfly = homfly(two_cable(word_arg(word_text, strands), two_cable_writhe));
        in.cable_k = 2;
      }
      if (!murakami.empty()) in.murakami_excludes_three = murakami == "excludes";
      CriteriaOptions opt;
      opt.root_k_max = root_k_max;
      auto rep = criteria_report(in, opt);
      std::cout << (records ? rep.to_records() : rep.to_text());
      return kOk;
    }

    if (cab->parsed()) {
      auto w = word_arg(word_text, strands);
      auto g = word_arg(pattern_text, 0);
      std::cout << format_word(cable_word(w, {g}), true) << '\n';
      return kOk;
    }
    if (two->parsed()) {
      std::cout << format_word(two_cable(word_arg(word_text, strands), writhe), true) << '\n';
      return kOk;
    }

    if (cen->parsed()) {
      CensusOptions opt;
      opt.jobs = jobs;
      opt.reduction_budget = red_budget;
      opt.policy.index_sum = policy_name == "max" ? IndexSum::Maximal : IndexSum::Minimal;
      opt.policy.flip = !no_flip;
      opt.progress = [](std::size_t done, std::size_t total) {
        std::cerr << "prefix " << done << "/" << total << '\n';
      };
      auto recs = run_census(c_strands, c_crossings, out_path, opt);
      std::size_t knots = 0, composite = 0, reduced = 0, certified = 0;
      for (const auto& r : recs) {
        knots += r.is_knot;
        composite += r.composite;
        reduced += r.reduction.has_value();
        certified += r.irreducible_certified;
      }
      std::cout << "classes " << recs.size() << "  knots " << knots << "  composite " << composite << "  reducible "
                << reduced << "  certified " << certified << "\nwritten " << out_path << '\n';
      return kOk;
    }

    if (red->parsed()) {
      auto w = word_arg(word_text, strands);
      auto r = reduction_search(w, budget);
      std::cout << "best      " << format_word(r.best_word, true) << '\n'
                << "letters   " << r.best_word.length() << "  strands " << r.best_word.strands() << '\n'
                << "destabilisations " << r.moves_applied << "  states " << r.states_explored
                << (r.budget_exhausted ? "  (budget exhausted)" : "") << '\n';
      // an unfinished search with nothing to show is a refusal, not a verdict
      return r.budget_exhausted && r.moves_applied == 0 ? kRefused : kOk;
    }

    if (dn->parsed()) {
      auto r = d_n_pipeline(dn_strands, dn_max, jobs);
      if (r.d) {
        std::cout << "d_" << r.n << " = " << *r.d << "  witness " << format_word(*r.witness) << '\n';
      } else {
        std::cout << "d_" << r.n << ": " << r.note << '\n';
      }
      return kOk;
    }

    if (ex9->parsed()) {
      Exhaust9Options opt;
      opt.letter_count_filter = !no_counts;
      opt.composite_filter = !no_composite;
      opt.connectedness_test = !no_connected;
      Exhaust9Stats st;
      auto out = exhaust_length9(opt, &st);
      std::cout << "generated " << st.generated << "  canonical " << st.canonical << "  after counts "
                << st.after_counts << "  after composite " << st.after_composite << "  survivors " << st.survivors
                << '\n';
      for (const auto& w : out) std::cout << format_word(w) << '\n';
      return kOk;
    }

    if (ver->parsed()) {
      suite.jobs = jobs;
      bool ok = true;
      run_regression_suite(suite, [&](const ItemResult& r) {
        std::cout << format_item(r) << std::endl;
        ok = ok && r.status != ItemStatus::Fail;
      });
      return ok ? kOk : kSuiteFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapacityError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const CoefficientOverflow& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRefused;
  }
  return kUsage;
}
