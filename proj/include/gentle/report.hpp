#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gentle/checks.hpp"
#include "gentle/recollement.hpp"
#include "gentle/rep_type.hpp"

namespace gentle {

using nlohmann::json;

/// `{"zero":true}` or `{"word":[...], "base":v, "dim":n, "dim_vector":{...}}`.
json module_json(const Presentation& p, const StringModule& m);
json module_json(const Presentation& p, const std::optional<StringModule>& m);
json modules_json(const Presentation& p, const std::vector<StringModule>& ms);

std::string path_string(const Presentation& p, const Path& path);
std::string cycle_string(const Presentation& p, const FullRelationalCycle& c);
/// "b -a2 (cyclic)".
std::string band_string(const Presentation& p, const CyclicWord& w);

json presentation_json(const Presentation& p);
json validation_json(const ValidationReport& r);
json info_json(const Presentation& p);
json gproj_json(const Presentation& p);
json site_json(const Presentation& p, const IndexedSite& s);

/// A module fed to the functors, with the path generating it when it is
/// cyclic (needed for the image convention).
struct FunctorInput {
  std::string name;
  StringModule module;
  std::optional<Path> generator;
};

std::vector<FunctorInput> default_functor_inputs(const Presentation& p);
json functors_json(const Presentation& p, const IndexedSite& s,
                   const std::vector<FunctorInput>& inputs);

json report_json(const Presentation& p, const CheckReport& r);
json bands_json(const Presentation& p);

/// Indented key/value rendering of any of the documents above.
std::string render_text(const json& doc);
std::string render_report_text(const json& report);

}  // namespace gentle
