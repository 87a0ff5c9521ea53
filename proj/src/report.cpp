#include "gentle/report.hpp"

#include <sstream>

#include "gentle/gorenstein.hpp"

namespace gentle {

json module_json(const Presentation& p, const StringModule& m) {
  const Quiver& q = p.quiver();
  json word = json::array();
  for (const Letter& l : m.word().letters)
    word.push_back((l.inverse ? "-" : "") + q.arrow(l.arrow).label);
  json dv = json::object();
  for (auto [v, n] : m.dimension_vector()) dv[q.vertex_label(v)] = n;
  return {{"word", word},
          {"base", q.vertex_label(m.word().base)},
          {"dim", m.dimension()},
          {"dim_vector", dv}};
}

json module_json(const Presentation& p, const std::optional<StringModule>& m) {
  return m ? module_json(p, *m) : json{{"zero", true}};
}

json modules_json(const Presentation& p, const std::vector<StringModule>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(module_json(p, m));
  return out;
}

std::string path_string(const Presentation& p, const Path& path) {
  const Quiver& q = p.quiver();
  if (path.is_trivial()) return "e(" + q.vertex_label(path.base) + ")";
  std::string out;
  for (ArrowId a : path.arrows) out += (out.empty() ? "" : " ") + q.arrow(a).label;
  return out;
}

std::string cycle_string(const Presentation& p, const FullRelationalCycle& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.arrows.size(); ++i)
    out += (i ? "," : "") + p.quiver().arrow(c.arrows[i]).label;
  return out + ")";
}

std::string band_string(const Presentation& p, const CyclicWord& w) {
  return word_string(p, Word{0, w.letters}) + " (cyclic)";
}

json presentation_json(const Presentation& p) {
  const Quiver& q = p.quiver();
  json vertices = json::array(), arrows = json::array(), relations = json::array();
  for (VertexId v = 0; v < q.vertex_count(); ++v) vertices.push_back(q.vertex_label(v));
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    arrows.push_back({{"label", q.arrow(a).label},
                      {"source", q.vertex_label(q.source(a))},
                      {"target", q.vertex_label(q.target(a))}});
  for (auto [a, b] : p.relations())
    relations.push_back({q.arrow(a).label, q.arrow(b).label});
  return {{"vertices", vertices}, {"arrows", arrows}, {"relations", relations}};
}

json validation_json(const ValidationReport& r) {
  json conditions = json::array();
  for (const auto& c : r.conditions)
    conditions.push_back({{"condition", condition_name(c.condition)},
                          {"holds", c.holds},
                          {"witnesses", c.witnesses}});
  return {{"gentle", r.ok()}, {"conditions", conditions}};
}

json info_json(const Presentation& p) {
  json out;
  out["vertices"] = p.vertex_count();
  out["arrows"] = p.arrow_count();
  out["relations"] = p.relations().size();
  out["components"] = component_count(p);
  out["betti"] = betti_number(p);
  bool gentle = validate_gentle(p).ok();
  out["gentle"] = gentle;
  if (!is_finite_dimensional(p)) {
    out["dimension"] = nullptr;
    return out;
  }
  out["dimension"] = algebra_dimension(p);
  json cycles = json::array();
  auto all = full_relational_cycles(p);
  for (const auto& c : all) cycles.push_back(cycle_string(p, c));
  out["full_relational_cycles"] = cycles;
  auto assumption = check_assumption(p);
  json short_cycles = json::array();
  for (std::size_t k : assumption.short_cycles) short_cycles.push_back(cycle_string(p, all[k]));
  out["assumption"] = {{"ok", assumption.ok()}, {"short_cycles", short_cycles}};
  if (gentle) {
    auto band = find_band(p);
    out["representation_finite"] = !band.has_value();
    out["band"] = band ? json(band_string(p, *band)) : json("none");
  }
  return out;
}

json gproj_json(const Presentation& p) {
  const Quiver& q = p.quiver();
  json projectives = json::array();
  for (VertexId v = 0; v < p.vertex_count(); ++v)
    projectives.push_back(
        {{"vertex", q.vertex_label(v)}, {"module", module_json(p, projective_module(p, v))}});
  json nonproj = json::array();
  for (const auto& e : ind_gproj_nonproj(p))
    nonproj.push_back({{"arrow", q.arrow(e.arrow).label}, {"module", module_json(p, e.module)}});
  return {{"projectives", projectives}, {"gproj_nonprojective", nonproj}};
}

json site_json(const Presentation& p, const IndexedSite& s) {
  const Quiver& q = p.quiver();
  auto cycles = full_relational_cycles(p);
  json eps = json::array();
  for (VertexId v : s.site.idempotent().support) eps.push_back(q.vertex_label(v));
  json corner = json::array();
  for (const Path& path : s.site.corner_basis()) corner.push_back(path_string(p, path));
  return {{"cycle", cycle_string(p, cycles.at(s.cycle_index))},
          {"cycle_index", s.cycle_index + 1},
          {"t", q.arrow(s.t).label},
          {"epsilon", eps},
          {"quotient", presentation_json(s.site.quotient())},
          {"corner_dimension", corner_dimension(s.site)},
          {"corner_basis", corner}};
}

std::vector<FunctorInput> default_functor_inputs(const Presentation& p) {
  const Quiver& q = p.quiver();
  std::vector<FunctorInput> out;
  for (VertexId v = 0; v < p.vertex_count(); ++v)
    out.push_back({"P(" + q.vertex_label(v) + ")", projective_module(p, v),
                   Path::trivial(v)});
  for (const auto& e : ind_gproj_nonproj(p))
    out.push_back({q.arrow(e.arrow).label + "A", e.module, Path::of(q, {e.arrow})});
  return out;
}

json functors_json(const Presentation& p, const IndexedSite& s,
                   const std::vector<FunctorInput>& inputs) {
  const Presentation& bar = s.site.quotient();
  const Quiver& q = p.quiver();
  json rows = json::array();
  for (const auto& in : inputs) {
    auto tensor = tensor_quotient(in.module, s.site);
    auto r = res_dim(in.module, s.site.idempotent());
    json per_vertex = json::object();
    for (auto [v, n] : r.per_vertex) per_vertex[q.vertex_label(v)] = n;
    json row{{"name", in.name},
             {"module", module_json(p, in.module)},
             {"tensor", modules_json(bar, tensor)},
             {"embed_tensor", modules_json(p, embed(tensor, s.site))},
             {"res_dim", {{"total", r.total}, {"per_vertex", per_vertex}}}};
    row["image"] = in.generator
                       ? module_json(bar, image_module(*in.generator, s.site))
                       : json(nullptr);
    rows.push_back(std::move(row));
  }
  return {{"site", {{"cycle_index", s.cycle_index + 1}, {"t", q.arrow(s.t).label}}},
          {"rows", rows}};
}

json report_json(const Presentation& p, const CheckReport& r) {
  const auto& sm = r.summary;
  json summary{{"vertices", sm.vertices},
               {"arrows", sm.arrows},
               {"relations", sm.relations},
               {"gentle", sm.gentle},
               {"betti", sm.betti},
               {"full_relational_cycles", sm.full_relational_cycles}};
  summary["dimension"] = sm.dimension ? json(*sm.dimension) : json(nullptr);
  json outcomes = json::array();
  for (const auto& o : r.outcomes) {
    json site = nullptr;
    if (o.site)
      site = {{"cycle_index", o.site->cycle_index + 1},
              {"t", p.quiver().arrow(o.site->t).label}};
    outcomes.push_back({{"id", o.id},
                        {"statement", o.statement},
                        {"status", status_name(o.status)},
                        {"convention", convention_name(o.convention)},
                        {"site", site},
                        {"detail", o.detail},
                        {"witness", o.witness}});
  }
  return {{"summary", summary},
          {"outcomes", outcomes},
          {"verdict", status_name(r.verdict())}};
}

json bands_json(const Presentation& p) {
  auto band = find_band(p);
  if (!band) return {{"band", nullptr}, {"text", "none"}};
  json letters = json::array();
  for (const Letter& l : band->letters)
    letters.push_back((l.inverse ? "-" : "") + p.quiver().arrow(l.arrow).label);
  return {{"band", letters}, {"text", band_string(p, *band)}};
}

namespace {

bool is_module(const json& j) {
  return j.is_object() &&
         ((j.size() == 1 && j.contains("zero")) || j.contains("dim_vector"));
}

std::string module_text(const json& m) {
  if (m.contains("zero")) return "0";
  std::string word;
  for (const auto& l : m["word"]) word += (word.empty() ? "" : " ") + l.get<std::string>();
  if (word.empty()) word = "e(" + m["base"].get<std::string>() + ")";
  std::string dv;
  for (const auto& [v, n] : m["dim_vector"].items()) {
    dv += (dv.empty() ? "" : ",") + v;
    if (n.get<std::size_t>() > 1) dv += "^" + std::to_string(n.get<std::size_t>());
  }
  return word + " {" + dv + "}";
}

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

bool is_flat(const json& j) {
  if (is_module(j)) return true;
  if (!j.is_array()) return !j.is_object();
  for (const auto& x : j)
    if (!(x.is_primitive() || is_module(x))) return false;
  return true;
}

std::string flat_text(const json& j) {
  if (is_module(j)) return module_text(j);
  if (!j.is_array()) return scalar_text(j);
  if (j.empty()) return "[]";
  std::string out;
  for (const auto& x : j)
    out += (out.empty() ? "" : ", ") + (is_module(x) ? module_text(x) : scalar_text(x));
  return out;
}

void emit(std::ostringstream& out, const json& j, int indent) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (is_flat(v)) {
        out << pad << k << ": " << flat_text(v) << '\n';
      } else {
        out << pad << k << ":\n";
        emit(out, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (is_flat(v)) {
        out << pad << "- " << flat_text(v) << '\n';
      } else {
        out << pad << "-\n";
        emit(out, v, indent + 2);
      }
    }
  } else {
    out << pad << scalar_text(j) << '\n';
  }
}

}  // namespace

std::string render_text(const json& doc) {
  std::ostringstream out;
  emit(out, doc, 0);
  return out.str();
}

std::string render_report_text(const json& report) {
  std::ostringstream out;
  const auto& sm = report["summary"];
  out << "presentation: " << sm["vertices"] << " vertices, " << sm["arrows"]
      << " arrows, " << sm["relations"] << " relations, dimension "
      << scalar_text(sm["dimension"]) << ", betti " << sm["betti"] << '\n';
  for (const auto& o : report["outcomes"]) {
    out << '[' << o["status"].get<std::string>() << "] " << o["id"].get<std::string>();
    if (o["convention"] != "none") out << " (" << o["convention"].get<std::string>() << ')';
    if (!o["detail"].get<std::string>().empty())
      out << ": " << o["detail"].get<std::string>();
    out << '\n';
    for (const auto& [k, v] : o["witness"].items())
      out << "    " << k << " = " << v.get<std::string>() << '\n';
  }
  out << "verdict: " << report["verdict"].get<std::string>() << '\n';
  return out.str();
}

}  // namespace gentle
