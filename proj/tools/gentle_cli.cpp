#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gentle/checks.hpp"
#include "gentle/format.hpp"
#include "gentle/gorenstein.hpp"
#include "gentle/report.hpp"

namespace {

using namespace gentle;

constexpr int kInvalid = 2;

Presentation load(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    if (!in) throw PresentationError("cannot read " + arg);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
  }
  for (const auto& f : fixtures())
    if (f.name == arg) return parse_presentation(f.text);
  throw PresentationError("no such file or fixture: " + arg);
}

FunctorInput module_from_spec(const Presentation& p, const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw PresentationError("module spec must be arrow:L, proj:V, simple:V or word:W");
  std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
  const Quiver& q = p.quiver();
  if (kind == "arrow") {
    ArrowId a = q.arrow_id(arg);
    return {arg + "A", arrow_module(p, a), Path::of(q, {a})};
  }
  if (kind == "proj") {
    VertexId v = q.vertex_id(arg);
    return {"P(" + arg + ")", projective_module(p, v), Path::trivial(v)};
  }
  if (kind == "simple") {
    VertexId v = q.vertex_id(arg);
    return {"S(" + arg + ")", simple_module(p, v), std::nullopt};
  }
  if (kind == "word") {
    StringModule m(p, parse_word(p, arg));
    return {"M(" + word_string(p, m.word()) + ")", m, std::nullopt};
  }
  throw PresentationError("unknown module kind '" + kind + "'");
}

IndexedSite pick_site(const Presentation& p, std::size_t cycle, const std::string& t) {
  if (cycle == 0) throw PresentationError("--cycle is 1-based");
  return site_for(p, cycle - 1, p.quiver().arrow_id(t));
}

void print(const json& doc, bool as_json) {
  if (as_json)
    std::cout << doc.dump(2) << '\n';
  else
    std::cout << render_text(doc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gentle algebras, Gorenstein-projectives and recollements"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string file, module_spec, arrow_label, fixture_name;
  std::size_t cycle = 0;
  std::vector<std::string> only;

  auto* validate = app.add_subcommand("validate", "Check the gentle conditions");
  auto* info = app.add_subcommand("info", "Invariants, cycles and representation type");
  auto* gproj = app.add_subcommand("gproj", "Projectives and non-projective G-projectives");
  auto* site = app.add_subcommand("site", "Recollement site of a cycle and arrow");
  auto* functors = app.add_subcommand("functors", "Functor table at a site");
  auto* check = app.add_subcommand("check", "Run the structural checks");
  auto* bands = app.add_subcommand("bands", "Find a band");
  auto* fixtures_cmd = app.add_subcommand("fixtures", "Print embedded fixtures");

  for (auto* sub : {validate, info, gproj, site, functors, check, bands})
    sub->add_option("FILE", file, "Presentation file or fixture name")->required();
  for (auto* sub : {site, functors}) {
    sub->add_option("--cycle", cycle, "1-based full-relational cycle index")->required();
    sub->add_option("--t", arrow_label, "Arrow on the cycle")->required();
  }
  functors->add_option("--module", module_spec, "arrow:L, proj:V, simple:V or word:W");
  check->add_option("--only", only, "Check ids or groups")->delimiter(',');
  fixtures_cmd->add_option("NAME", fixture_name, "Fixture name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }
  const bool as_json = format == "json";

  try {
    if (fixtures_cmd->parsed()) {
      json doc = json::array();
      for (const auto& f : fixtures())
        if (fixture_name.empty() || f.name == fixture_name)
          doc.push_back({{"name", f.name}, {"text", f.text}});
      if (doc.empty()) throw PresentationError("unknown fixture '" + fixture_name + "'");
      if (as_json) {
        std::cout << (fixture_name.empty() ? doc : doc.front()).dump(2) << '\n';
      } else {
        for (const auto& f : doc) {
          if (fixture_name.empty()) std::cout << "## " << f["name"].get<std::string>() << '\n';
          std::cout << f["text"].get<std::string>();
        }
      }
      return 0;
    }

    Presentation p = load(file);

    if (validate->parsed()) {
      auto report = validate_gentle(p);
      print(validation_json(report), as_json);
      return report.ok() ? 0 : kInvalid;
    }
    if (check->parsed()) {
      auto report = run_all(p, only);
      json doc = report_json(p, report);
      if (as_json)
        std::cout << doc.dump(2) << '\n';
      else
        std::cout << render_report_text(doc);
      if (!report.summary.gentle) return kInvalid;
      return report.verdict() == Status::fail ? 1 : 0;
    }
    if (info->parsed()) {
      print(info_json(p), as_json);
      return 0;
    }
    if (!validate_gentle(p).ok())
      throw PresentationError("presentation is not gentle; run validate for details");
    if (gproj->parsed()) {
      print(gproj_json(p), as_json);
    } else if (site->parsed()) {
      print(site_json(p, pick_site(p, cycle, arrow_label)), as_json);
    } else if (functors->parsed()) {
      auto s = pick_site(p, cycle, arrow_label);
      auto inputs = module_spec.empty()
                        ? default_functor_inputs(p)
                        : std::vector<FunctorInput>{module_from_spec(p, module_spec)};
      print(functors_json(p, s, inputs), as_json);
    } else if (bands->parsed()) {
      json doc = bands_json(p);
      if (as_json)
        std::cout << doc.dump(2) << '\n';
      else
        std::cout << doc["text"].get<std::string>() << '\n';
    }
    return 0;
  } catch (const PresentationError& e) {
    std::cerr << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kInvalid;
  }
}
