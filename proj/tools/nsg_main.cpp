// nsg: classify numerical semigroup rings (Gorenstein / almost Gorenstein /
// 2-almost Gorenstein), compute the attached invariants, and test or
// enumerate Ulrich ideals. Every subcommand prints machine-readable JSON.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nsg/classify.hpp"
#include "nsg/extensions.hpp"
#include "nsg/json_io.hpp"
#include "nsg/presentation.hpp"
#include "nsg/relative_ideal.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/trunc_algebra.hpp"
#include "nsg/ulrich.hpp"

namespace fs = std::filesystem;
using nsg::Json;

namespace {

std::vector<long long> parse_gens(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoll(item));
  }
  if (out.empty()) throw nsg::ParseError("empty generator list '" + text + "'");
  return out;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ---- corpus ------------------------------------------------------------------

struct CaseResult {
  std::string id;
  std::string anchor;
  bool pass = false;
  std::string detail;
};

bool subset_match(const Json& expected, const Json& actual, std::string& why) {
  for (auto it = expected.begin(); it != expected.end(); ++it) {
    if (!actual.contains(it.key())) {
      why = "missing key " + it.key();
      return false;
    }
    const Json& a = actual.at(it.key());
    if (it.value().is_object()) {
      if (!a.is_object() || !subset_match(it.value(), a, why)) {
        if (why.empty()) why = "mismatch under " + it.key();
        return false;
      }
    } else if (it.value() != a) {
      why = it.key() + ": expected " + it.value().dump() + ", got " + a.dump();
      return false;
    }
  }
  return true;
}

Json run_classify_case(const Json& input) {
  nsg::NumericalSemigroup h(input.at("generators").get<std::vector<long long>>());
  return nsg::to_json(nsg::classify(h));
}

Json run_ulrich_case(const Json& input) {
  nsg::NumericalSemigroup h(input.at("generators").get<std::vector<long long>>());
  long long bound = input.value("bound", -1LL);
  auto e = nsg::enumerate_monomial_ulrich(h, bound);
  Json ideals = Json::array();
  for (const auto& v : e.found) ideals.push_back(v.gens);
  return Json{{"ideals", ideals}};
}

Json run_extension_case(const Json& input) {
  nsg::NumericalSemigroup h(input.at("generators").get<std::vector<long long>>());
  nsg::NumericalSemigroup t(input.at("T").get<std::vector<long long>>());
  return nsg::to_json(nsg::duplication_report(h, t));
}

Json run_gluing_case(const Json& input) {
  nsg::NumericalSemigroup h1(input.at("h1").get<std::vector<long long>>());
  long long alpha = input.at("alpha").get<long long>();
  auto s = nsg::gluing_ulrich_set(h1, alpha);
  Json j = nsg::to_json(s);
  auto rep = nsg::classify(s.glued);
  j["two_agl"] = rep.two_agl;
  j["mu_c"] = static_cast<long long>(rep.conductor_gens.size());
  j["multiplicity_minimal"] = rep.multiplicity_minimal;
  return j;
}

Json run_presentation_case(const Json& input) {
  const auto vars = input.at("variables").get<std::vector<std::string>>();
  nsg::NumericalSemigroup h(input.at("weights").get<std::vector<long long>>());
  std::vector<std::vector<nsg::SparsePoly>> matrix;
  for (const auto& row : input.at("matrix")) {
    std::vector<nsg::SparsePoly> r;
    for (const auto& cell : row) r.push_back(nsg::SparsePoly::parse(vars, cell.get<std::string>()));
    matrix.push_back(std::move(r));
  }
  std::vector<nsg::SparsePoly> gens;
  {
    std::vector<std::vector<nsg::SparsePoly>> first_two{matrix[0], matrix[1]};
    // kernel generators: the 2x2 minors of the leading block plus any extras
    std::size_t ncols = input.value("minor_columns", static_cast<long long>(matrix[0].size()));
    std::vector<std::vector<nsg::SparsePoly>> block(2);
    for (std::size_t c = 0; c < static_cast<std::size_t>(ncols); ++c) {
      block[0].push_back(matrix[0][c]);
      block[1].push_back(matrix[1][c]);
    }
    gens = nsg::minors2(block);
  }
  if (input.contains("second_matrix")) {
    std::vector<std::vector<nsg::SparsePoly>> m2;
    for (const auto& row : input.at("second_matrix")) {
      std::vector<nsg::SparsePoly> r;
      for (const auto& cell : row) r.push_back(nsg::SparsePoly::parse(vars, cell.get<std::string>()));
      m2.push_back(std::move(r));
    }
    for (auto& p : nsg::minors2(m2)) gens.push_back(std::move(p));
  }
  for (const auto& extra : input.value("extra_generators", std::vector<std::string>{}))
    gens.push_back(nsg::SparsePoly::parse(vars, extra));

  bool all_vanish = true;
  for (const auto& g : gens)
    if (!nsg::phi_eval(g, h.generators()).vanishes) all_vanish = false;

  bool hypothesis = false;
  if (input.contains("presentation_matrix")) {
    std::vector<std::vector<nsg::SparsePoly>> pm;
    for (const auto& row : input.at("presentation_matrix")) {
      std::vector<nsg::SparsePoly> r;
      for (const auto& cell : row) r.push_back(nsg::SparsePoly::parse(vars, cell.get<std::string>()));
      pm.push_back(std::move(r));
    }
    hypothesis = nsg::presentation_staircase_hypothesis(pm, static_cast<int>(vars.size()));
  }

  const int bound = static_cast<int>(input.value("degree_bound", 10LL));
  auto evidence = all_vanish ? nsg::kernel_evidence(gens, h, bound) : nsg::KernelEvidence{};

  return Json{{"all_vanish", all_vanish},
              {"hypothesis", hypothesis},
              {"kernel_evidence", evidence.ok},
              {"evidence", nsg::to_json(evidence)}};
}

Json run_family_case(const Json& input) {
  nsg::NumericalSemigroup h(input.at("generators").get<std::vector<long long>>());
  auto field = nsg::FieldSpec::parse(input.at("field").get<std::string>());
  auto templates = input.at("family").get<std::vector<std::string>>();
  int samples = static_cast<int>(input.value("samples", 20LL));
  bool distinct = input.value("check_distinct", false);
  auto rep = nsg::family_scan(h, field, templates, samples, distinct);

  // evaluate the claimed pattern
  std::string pattern = input.value("pattern", std::string("all"));
  bool pattern_holds = true;
  if (pattern == "all") {
    pattern_holds = rep.all_ulrich;
  } else if (pattern == "iff_zero" || pattern == "iff_nonzero") {
    const std::string pname = input.at("pattern_param").get<std::string>();
    std::size_t pidx = 0;
    for (; pidx < rep.param_names.size(); ++pidx)
      if (rep.param_names[pidx] == pname) break;
    if (pidx == rep.param_names.size()) throw nsg::MalformedCase("unknown pattern_param");
    for (const auto& e : rep.entries) {
      bool want = sgn(e.params[pidx]) == 0;
      if (pattern == "iff_nonzero") want = !want;
      const bool ulrich = e.outcome == nsg::ScanOutcome::ulrich;
      if (want != ulrich) pattern_holds = false;
    }
  } else if (pattern == "none") {
    for (const auto& e : rep.entries)
      if (e.outcome == nsg::ScanOutcome::ulrich) pattern_holds = false;
  } else {
    throw nsg::MalformedCase("unknown pattern '" + pattern + "'");
  }
  Json j = nsg::to_json(rep);
  j["pattern"] = pattern;
  j["pattern_holds"] = pattern_holds;
  return j;
}

CaseResult run_case(const Json& c) {
  CaseResult r;
  r.id = c.value("id", std::string("<missing id>"));
  r.anchor = c.value("anchor", std::string());
  try {
    if (!c.contains("kind") || !c.contains("input") || !c.contains("expected"))
      throw nsg::MalformedCase("case needs kind/input/expected");
    const std::string kind = c.at("kind").get<std::string>();
    Json actual;
    if (kind == "classify")
      actual = run_classify_case(c.at("input"));
    else if (kind == "ulrich")
      actual = run_ulrich_case(c.at("input"));
    else if (kind == "extension")
      actual = run_extension_case(c.at("input"));
    else if (kind == "gluing")
      actual = run_gluing_case(c.at("input"));
    else if (kind == "presentation")
      actual = run_presentation_case(c.at("input"));
    else if (kind == "family")
      actual = run_family_case(c.at("input"));
    else
      throw nsg::MalformedCase("unknown kind '" + kind + "'");
    std::string why;
    // set-valued expectations: "ideals" compares as a set
    Json expected = c.at("expected");
    if (expected.contains("ideals") && actual.contains("ideals")) {
      auto norm = [](const Json& lst) {
        std::set<std::string> s;
        for (const auto& x : lst) s.insert(x.dump());
        return s;
      };
      if (norm(expected.at("ideals")) != norm(actual.at("ideals"))) {
        r.pass = false;
        r.detail = "ideal sets differ: expected " + expected.at("ideals").dump() + ", got " +
                   actual.at("ideals").dump();
        return r;
      }
      expected.erase("ideals");
    }
    r.pass = subset_match(expected, actual, why);
    r.detail = why;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = e.what();
  }
  return r;
}

int run_corpus(const std::string& path_arg, bool json_out) {
  fs::path dir = path_arg == "all" ? fs::path(NSG_DEFAULT_CORPUS_DIR) : fs::path(path_arg);
  if (!fs::is_directory(dir)) {
    std::cerr << "corpus directory not found: " << dir << "\n";
    return 2;
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  std::vector<CaseResult> results;
  for (const auto& f : files) {
    std::ifstream in(f);
    Json c;
    try {
      in >> c;
    } catch (const std::exception& e) {
      CaseResult r;
      r.id = f.filename().string();
      r.pass = false;
      r.detail = std::string("malformed JSON: ") + e.what();
      results.push_back(r);
      continue;
    }
    results.push_back(run_case(c));
  }
  std::sort(results.begin(), results.end(),
            [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
  int failures = 0;
  Json summary = Json::array();
  for (const auto& r : results) {
    if (!r.pass) ++failures;
    if (json_out) {
      summary.push_back(Json{{"id", r.id}, {"pass", r.pass}, {"anchor", r.anchor},
                             {"detail", r.detail}});
    } else {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id;
      if (!r.anchor.empty()) std::cout << " — " << r.anchor;
      if (!r.pass && !r.detail.empty()) std::cout << "  (" << r.detail << ")";
      std::cout << "\n";
    }
  }
  if (json_out)
    emit(Json{{"cases", summary},
              {"total", results.size()},
              {"failures", failures}});
  else
    std::cout << results.size() - failures << "/" << results.size() << " cases passed\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical semigroup ring classifier and Ulrich ideal toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_flag = false;
  app.add_flag("--json", json_flag, "emit JSON (the default for every subcommand)");

  std::string gens_text, ideal_text, t_text, alpha_text = "0", field_text = "q";
  std::string reduction_text, path_text;
  long long n_opt = -1, bound_opt = -1;
  int hilbert_n = -1;
  bool ulrich_flag = false;
  std::vector<std::string> gen_series;

  auto* info = app.add_subcommand("info", "semigroup invariants");
  info->add_option("generators", gens_text, "comma separated generators")->required();
  info->add_option("--ideal", ideal_text, "relative ideal generators");

  auto* classify_cmd = app.add_subcommand("classify", "Gorenstein / AGL / 2-AGL classification");
  classify_cmd->add_option("generators", gens_text)->required();
  classify_cmd->add_option("--hilbert", hilbert_n, "append the Hilbert table up to n");
  classify_cmd->add_option("--ideal", ideal_text, "ideal for the Hilbert table (default t^a K)");

  auto* ulrich_cmd = app.add_subcommand("ulrich", "enumerate monomial Ulrich ideals");
  ulrich_cmd->add_option("generators", gens_text)->required();
  ulrich_cmd->add_option("--bound", bound_opt, "generator valuation bound");

  auto* glue_cmd = app.add_subcommand("glue", "gluing <2a_i, alpha> and its Ulrich pairs");
  glue_cmd->add_option("generators", gens_text, "generators of H1")->required();
  glue_cmd->add_option("--alpha", alpha_text, "odd member of H1")->required();
  glue_cmd->add_flag("--ulrich", ulrich_flag, "also list two-generated monomial Ulrich ideals");

  auto* ext_cmd = app.add_subcommand("ext", "quasi-trivial extension report");
  ext_cmd->add_option("generators", gens_text, "generators of H")->required();
  ext_cmd->add_option("--T", t_text, "overring generators")->required();
  ext_cmd->add_option("--alpha", alpha_text, "series, e.g. 0, 1, t^4");
  ext_cmd->add_option("--N", n_opt, "truncation order");

  auto* verify_cmd = app.add_subcommand("verify-ideal", "Ulrich test for possibly non-monomial ideals");
  verify_cmd->add_option("generators", gens_text)->required();
  verify_cmd->add_option("--gens", gen_series, "ideal generators as series")->required();
  verify_cmd->add_option("--field", field_text, "q or fp:<p>");
  verify_cmd->add_option("--N", n_opt, "truncation order");
  verify_cmd->add_option("--reduction", reduction_text, "explicit reduction element");

  auto* pres_cmd = app.add_subcommand("presentation", "presentation verification");
  auto* pres_verify = pres_cmd->add_subcommand("verify", "run a presentation case file");
  pres_verify->add_option("file", path_text, "case JSON file")->required();

  auto* corpus_cmd = app.add_subcommand("corpus", "golden example corpus");
  auto* corpus_run = corpus_cmd->add_subcommand("run", "run all cases in a directory");
  corpus_run->add_option("path", path_text, "'all' or a directory")->required();
  auto* corpus_verify_cmd = corpus_cmd->add_subcommand("verify", "alias of run");
  corpus_verify_cmd->add_option("path", path_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*info) {
      nsg::NumericalSemigroup h(parse_gens(gens_text));
      Json j = nsg::to_json(nsg::invariants(h));
      j["generators"] = h.generators();
      j["gaps"] = h.gaps();
      j["apery"] = h.apery_set(h.multiplicity());
      if (!ideal_text.empty()) {
        nsg::RelativeIdeal e(h, parse_gens(ideal_text));
        Json je = nsg::to_json(e);
        je["mu"] = e.mu();
        if (e.is_integral() && !e.contains(0)) je["colength"] = nsg::colength(e);
        j["ideal"] = je;
      }
      emit(j);
    } else if (*classify_cmd) {
      nsg::NumericalSemigroup h(parse_gens(gens_text));
      auto rep = nsg::classify(h);
      Json j = nsg::to_json(rep);
      if (rep.two_agl) {
        j["kr_structure"] = nsg::to_json(nsg::structure_of_KR(h, true));
        j["pf_symmetry"] = nsg::to_json(nsg::pf_symmetry(h));
      }
      if (hilbert_n >= 0) {
        nsg::RelativeIdeal i = ideal_text.empty()
                                   ? [&] {
                                       auto k = nsg::canonical_ideal(h);
                                       long long a = nsg::canonical_shift(h);
                                       std::vector<long long> gens;
                                       for (long long g : k.gens()) gens.push_back(g + a);
                                       return nsg::RelativeIdeal(h, gens);
                                     }()
                                   : nsg::RelativeIdeal(h, parse_gens(ideal_text));
        j["hilbert_table"] = nsg::to_json(nsg::hilbert_samuel(h, i, hilbert_n));
      }
      emit(j);
    } else if (*ulrich_cmd) {
      nsg::NumericalSemigroup h(parse_gens(gens_text));
      auto e = nsg::enumerate_monomial_ulrich(h, bound_opt);
      Json j = nsg::to_json(e);
      Json ideals = Json::array();
      for (const auto& v : e.found) ideals.push_back(v.gens);
      j["ideals"] = ideals;
      emit(j);
    } else if (*glue_cmd) {
      nsg::NumericalSemigroup h1(parse_gens(gens_text));
      long long alpha = std::stoll(alpha_text);
      if (ulrich_flag) {
        emit(nsg::to_json(nsg::gluing_ulrich_set(h1, alpha)));
      } else {
        emit(nsg::to_json(nsg::glue(h1, alpha)));
      }
    } else if (*ext_cmd) {
      nsg::NumericalSemigroup h(parse_gens(gens_text));
      nsg::NumericalSemigroup t(parse_gens(t_text));
      auto rep = nsg::duplication_report(h, t);
      Json j = nsg::to_json(rep);
      j["canonical_check"] = nsg::to_json(nsg::verify_extension_canonical(h, t, alpha_text, n_opt));
      j["alpha"] = alpha_text;
      emit(j);
    } else if (*verify_cmd) {
      nsg::NumericalSemigroup h(parse_gens(gens_text));
      auto field = nsg::FieldSpec::parse(field_text);
      std::vector<std::string> series;
      for (const auto& chunk : gen_series)
        for (auto& s : split_commas(chunk)) series.push_back(s);
      try {
        auto v = nsg::verify_ideal(h, field, series, reduction_text, n_opt);
        Json j = nsg::to_json(v);
        j["field"] = field.str();
        emit(j);
      } catch (const nsg::NoReductionFound& e) {
        emit(Json{{"outcome", "no_reduction_found"}, {"field", field.str()},
                  {"detail", e.what()}});
      }
    } else if (*pres_verify) {
      std::ifstream in(path_text);
      if (!in) throw nsg::MalformedCase("cannot open " + path_text);
      Json c;
      in >> c;
      emit(run_presentation_case(c.contains("input") ? c.at("input") : c));
    } else if (*corpus_run || *corpus_verify_cmd) {
      return run_corpus(path_text, json_flag);
    }
  } catch (const nsg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
