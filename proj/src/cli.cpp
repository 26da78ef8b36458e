#include "posdiag/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "posdiag/covers.hpp"
#include "posdiag/diagram.hpp"
#include "posdiag/error.hpp"
#include "posdiag/json_io.hpp"
#include "posdiag/presentation.hpp"
#include "posdiag/seifert.hpp"
#include "posdiag/vertical.hpp"

namespace posdiag::cli {

namespace {

using json::Json;

struct Options {
  std::string verb;
  std::string input = "-";
  std::string output = "-";
  std::string emit = "json";
  std::string seifert_path;
};

std::string slurp(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw_parse("cannot open input file " + path);
  return slurp(f);
}

// Diagram-valued results get a "dot" key when DOT output is requested.
Json with_dot(Json j, const Diagram& dg, const Options& opt) {
  if (opt.emit == "dot") j["dot"] = to_dot(dg);
  return j;
}

Json verify(const Diagram& dg, const Options& opt, bool& ok) {
  Json report;
  const auto violations = validate(dg);
  report["valid"] = violations.empty();
  Json vs = Json::array();
  for (const auto& v : violations)
    vs.push_back(Json{{"kind", to_string(v.kind)}, {"crossing", v.crossing}, {"detail", v.detail}});
  report["violations"] = std::move(vs);
  ok = violations.empty();
  if (!ok) {
    report["ok"] = false;
    return report;
  }

  report["positive"] = is_positive_diagram(dg);
  report["declared_genus"] = dg.declared_genus;
  report["x_curves"] = dg.x_curves.size();
  report["y_curves"] = dg.y_curves.size();
  try {
    const auto rg = rotation_genus(dg);
    report["rotation_genus"] = rg;
    ok = ok && rg <= dg.declared_genus;
  } catch (const Error& e) {
    report["rotation_genus"] = nullptr;
    report["rotation_genus_error"] = e.code();
    ok = false;
  }
  const SnfResult h = diagram_homology(dg);
  report["homology"] = json::to_json(h);
  if (!opt.seifert_path.empty()) {
    const SeifertData s = json::seifert_from_json(json::parse(read_file(opt.seifert_path)));
    const SnfResult expected = homology(s);
    report["seifert_homology"] = json::to_json(expected);
    const bool match = expected.group() == h.group();
    report["homology_matches"] = match;
    ok = ok && match;
  }
  report["ok"] = ok;
  return with_dot(std::move(report), dg, opt);
}

// Returns the exit status; writes the JSON result to `result`.
int dispatch(const Options& opt, const Json& in, Json& result) {
  const std::string& v = opt.verb;
  if (v == "normalize") {
    result = json::to_json(normalize(json::seifert_from_json(in)));
  } else if (v == "homology") {
    result = json::to_json(homology(json::seifert_from_json(in)));
  } else if (v == "genus") {
    result = json::to_json(genus_report(json::seifert_from_json(in)));
  } else if (v == "diagram-build") {
    const Diagram dg = build_positive_vertical(json::seifert_from_json(in));
    result = with_dot(json::to_json(dg), dg, opt);
  } else if (v == "diagram-verify") {
    bool ok = false;
    result = verify(json::diagram_from_json(in), opt, ok);
    if (!ok) return 3;
  } else if (v == "diagram-encode") {
    result = json::to_json(montesinos_encode(json::diagram_from_json(in)));
  } else if (v == "diagram-decode") {
    const Diagram dg = montesinos_decode(json::permutations_from_json(in));
    result = with_dot(json::to_json(dg), dg, opt);
  } else if (v == "cover-lift") {
    const SeifertData s = json::seifert_from_json(in.at("seifert"));
    const CoverSpec spec = json::cover_spec_from_json(in.at("cover"));
    result = json::to_json(lift_seifert(s, spec));
  } else if (v == "cover-base") {
    result = json::to_json(base_orbifold_cover(json::seifert_from_json(in)));
  } else if (v == "betastar") {
    const auto input = json::beta_star_input_from_json(in);
    Json out = Json::array();
    for (const auto& b : beta_star(input.pairs, input.lambda)) out.push_back(json::integer_to_json(b));
    result = Json{{"beta_star", std::move(out)}};
  } else if (v == "positivize") {
    const Presentation p = json::presentation_from_json(in);
    validate(p);
    result = json::to_json(positivize(p));
  } else {
    throw_parse("unknown verb " + v);
  }
  return 0;
}

const std::vector<std::string> kVerbs = {
    "normalize",      "homology",       "genus",      "diagram-build",
    "diagram-verify", "diagram-encode", "diagram-decode", "cover-lift",
    "cover-base",     "betastar",       "positivize"};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Seifert fibered spaces: invariants, genus data and positive diagrams",
               "posdiag"};
  app.set_version_flag("--version", kVersion);
  app.add_option("verb", opt.verb, "operation to run")
      ->required()
      ->check(CLI::IsMember(kVerbs));
  app.add_option("-i,--input", opt.input, "input JSON file ('-' for stdin)");
  app.add_option("-o,--output", opt.output, "output file ('-' for stdout)");
  app.add_option("--emit", opt.emit, "json, or dot to add a Graphviz rendering of diagrams")
      ->check(CLI::IsMember({"json", "dot"}));
  app.add_option("--seifert", opt.seifert_path,
                 "diagram-verify: also compare H_1 with these invariants");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const std::string text = opt.input == "-" ? slurp(in) : read_file(opt.input);
    Json result;
    const int status = dispatch(opt, json::parse(text), result);
    const std::string rendered = result.dump(2) + "\n";
    if (opt.output == "-") {
      out << rendered;
    } else {
      std::ofstream f(opt.output, std::ios::binary);
      if (!f) throw_precondition("OutputError", "cannot open output file " + opt.output);
      f << rendered;
    }
    if (status != 0) err << "error[VerificationFailed]: diagram failed verification\n";
    return status;
  } catch (const Error& e) {
    err << "error[" << e.code() << "]: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Parse: return 2;
      case ErrorKind::Precondition: return 3;
      case ErrorKind::Internal: return 4;
    }
    return 4;
  } catch (const nlohmann::json::exception& e) {
    err << "error[ParseError]: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace posdiag::cli
