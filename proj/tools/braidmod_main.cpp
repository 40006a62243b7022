#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "braidmod/conformal.hpp"
#include "braidmod/homrep.hpp"
#include "braidmod/loop_io.hpp"
#include "braidmod/monodromy.hpp"
#include "braidmod/thurston.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

std::string fmt(double v) {
  if (std::isinf(v)) return "inf";
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

struct Output {
  std::vector<std::pair<std::string, std::string>> fields;
  void add(const std::string& k, const std::string& v) { fields.emplace_back(k, v); }
  void add(const std::string& k, double v) { add(k, fmt(v)); }
  void add(const std::string& k, long long v) { add(k, std::to_string(v)); }
  void add(const std::string& k, bool v) { add(k, std::string(v ? "true" : "false")); }

  void print(bool as_json) const {
    if (as_json) {
      nlohmann::json j = nlohmann::json::object();
      for (const auto& [k, v] : fields) j[k] = v;
      std::cout << j.dump(2) << '\n';
    } else {
      for (const auto& [k, v] : fields) std::cout << k << '=' << v << '\n';
    }
  }
};

braidmod::ModuleValue module_arg(double m) {
  if (std::isinf(m)) return braidmod::ModuleValue::infinite();
  return braidmod::ModuleValue::finite(m);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braid invariants: Thurston type, entropy, conformal module, "
               "and braid monodromy of polynomial loops"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a JSON object instead of key=value lines");

  std::string word_text, word_text2, loopfile, emit_track;
  int strands = 3;
  int degree = 3;
  double module_in = 0.0;
  long long index_in = 0;
  long long power_in = 1;

  auto* classify = app.add_subcommand("classify", "Thurston type, entropy, conformal module");
  classify->add_option("word", word_text, "braid word (signed generator indices)")->required();
  classify->add_option("--strands", strands, "strand count (3 for exact results)")
      ->default_val(3);

  auto* monodromy = app.add_subcommand("monodromy", "braid monodromy of a polynomial loop");
  monodromy->add_option("loopfile", loopfile, "loop file (JSON)")->required();
  monodromy->add_option("--emit-track", emit_track, "write strand trajectories (TSV)");

  auto* zjuzin = app.add_subcommand("zjuzin", "reducibility criterion for prime degree");
  zjuzin->add_option("--degree", degree)->required();
  zjuzin->add_option("--module", module_in, "annulus conformal module")->required();
  zjuzin->add_option("--index", index_in, "discriminant index")->required();

  auto* solvable = app.add_subcommand("solvable", "degree-3 solvability criterion");
  solvable->add_option("--module", module_in, "annulus conformal module")->required();

  auto* obstruct = app.add_subcommand("obstruct", "algebroid obstruction for a 3-braid class");
  obstruct->add_option("--module", module_in, "annulus conformal module")->required();
  obstruct->add_option("word", word_text)->required();

  auto* torus = app.add_subcommand("torus-check",
                                   "necessary condition on a two-generator homomorphism into B_3");
  torus->add_option("word_a", word_text)->required();
  torus->add_option("word_b", word_text2)->required();

  auto* equal = app.add_subcommand("equal", "word problem");
  equal->add_option("word1", word_text)->required();
  equal->add_option("word2", word_text2)->required();
  equal->add_option("--strands", strands)->default_val(3);

  auto* normalform = app.add_subcommand("normalform", "left-greedy normal form");
  normalform->add_option("word", word_text)->required();
  normalform->add_option("--strands", strands)->default_val(3);

  auto* powmod = app.add_subcommand("powmod", "conformal module of a power of the class");
  powmod->add_option("--module", module_in, "conformal module of the class")->required();
  powmod->add_option("--power", power_in)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    Output out;
    int exit_code = kExitOk;

    if (*classify) {
      auto w = braidmod::parse_braid(word_text, strands);
      if (strands == 3) {
        auto r = braidmod::thurston_report(w);
        out.add("type", braidmod::to_string(r.type));
        out.add("entropy", r.entropy.value);
        out.add("module", r.module);
        out.add("exact", true);
      } else {
        double lb = braidmod::entropy_lower_bound_burau(w);
        out.add("entropy_lower_bound", lb);
        out.add("module_upper_bound", braidmod::conformal_module_upper_bound(w).is_infinite()
                                          ? "inf"
                                          : fmt(braidmod::conformal_module_upper_bound(w).value()));
        out.add("exact", false);
      }
    } else if (*monodromy) {
      auto loop = braidmod::read_loop_file(loopfile);
      braidmod::validate_separable(loop);
      long long index = braidmod::discriminant_index(loop);
      auto track = braidmod::track_roots(loop);
      auto result = braidmod::extract_braid(track, index);
      if (!emit_track.empty()) {
        std::ofstream tf(emit_track);
        if (!tf) throw std::invalid_argument("cannot open " + emit_track);
        braidmod::write_track(tf, track);
      }
      out.add("braid", result.braid.to_string());
      out.add("permutation", result.permutation.to_cycle_string());
      out.add("index", result.discriminant_index);
      out.add("ncycle", braidmod::is_irreducible_class(result));
    } else if (*zjuzin) {
      auto v = braidmod::zjuzin_reducibility(degree, module_arg(module_in), index_in);
      out.add("verdict", braidmod::to_string(v));
      if (v == braidmod::ZjuzinVerdict::Inconclusive) exit_code = kExitInconclusive;
    } else if (*solvable) {
      auto v = braidmod::lemma2_solvability(module_arg(module_in));
      out.add("verdict", braidmod::to_string(v));
      out.add("conditional_on", std::string("Lemma 2 hypotheses"));
      if (v == braidmod::Lemma2Verdict::Inconclusive) exit_code = kExitInconclusive;
    } else if (*obstruct) {
      auto w = braidmod::parse_braid(word_text, 3);
      auto v = braidmod::lemma1_obstruction(module_arg(module_in), w);
      out.add("verdict", braidmod::to_string(v));
      if (v == braidmod::Lemma1Verdict::NotExcluded) exit_code = kExitInconclusive;
    } else if (*torus) {
      braidmod::FreeHomB3 hom{braidmod::parse_braid(word_text, 3),
                              braidmod::parse_braid(word_text2, 3)};
      auto v = braidmod::theorem3_check(hom);
      out.add("verdict", v.to_string());
      out.add("condition", std::string("necessary condition only"));
    } else if (*equal) {
      auto w1 = braidmod::parse_braid(word_text, strands);
      auto w2 = braidmod::parse_braid(word_text2, strands);
      out.add("equal", braidmod::words_equal(w1, w2));
    } else if (*normalform) {
      auto w = braidmod::parse_braid(word_text, strands);
      auto nf = braidmod::normal_form(w);
      out.add("delta_power", nf.delta_power());
      out.add("num_factors", static_cast<long long>(nf.factors().size()));
      out.add("normal_form", nf.to_string());
      out.add("word", nf.to_word().to_string());
    } else if (*powmod) {
      auto m = braidmod::module_of_power(module_arg(module_in), power_in);
      out.add("module", m.is_infinite() ? "inf" : fmt(m.value()));
    }

    out.print(as_json);
    return exit_code;
  } catch (const braidmod::SeparabilityViolation& e) {
    std::cerr << "SeparabilityViolation: " << e.what() << '\n';
    return kExitError;
  } catch (const braidmod::RefinementExhausted& e) {
    std::cerr << "RefinementExhausted: " << e.what() << '\n';
    return kExitError;
  } catch (const braidmod::ProjectionDegenerate& e) {
    std::cerr << "ProjectionDegenerate: " << e.what() << '\n';
    return kExitError;
  } catch (const braidmod::CrossCheckFailed& e) {
    std::cerr << "CrossCheckFailed: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}
