#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gentle/presentation.hpp"

namespace gentle {

enum class Status { pass, fail, not_applicable, informational };
enum class Convention { none, honest_tensor, cyclic_image };

std::string_view status_name(Status s);
std::string_view convention_name(Convention c);

/// Site coordinates: 0-based cycle index and the chosen arrow.
struct SiteRef {
  std::size_t cycle_index;
  ArrowId t;
  friend bool operator==(const SiteRef&, const SiteRef&) = default;
};

struct CheckOutcome {
  std::string id;
  std::string statement;
  Status status = Status::pass;
  Convention convention = Convention::none;
  std::optional<SiteRef> site;
  std::string detail;
  std::map<std::string, std::string> witness;
};

struct PresentationSummary {
  std::size_t vertices = 0;
  std::size_t arrows = 0;
  std::size_t relations = 0;
  bool gentle = false;
  std::optional<std::size_t> dimension;
  std::size_t betti = 0;
  std::size_t full_relational_cycles = 0;
};

struct CheckReport {
  PresentationSummary summary;
  std::vector<CheckOutcome> outcomes;

  /// Fail iff some outcome failed.
  Status verdict() const;
};

/// Check groups in report order.
const std::vector<std::string>& check_groups();

CheckOutcome check_validate(const Presentation& p);
std::vector<CheckOutcome> check_main1(const Presentation& p);
std::vector<CheckOutcome> check_main2(const Presentation& p);
std::vector<CheckOutcome> check_conventions(const Presentation& p);
std::vector<CheckOutcome> check_corollary_disjoint(const Presentation& p);
std::vector<CheckOutcome> check_lemma_proj(const Presentation& p);
std::vector<CheckOutcome> check_lemma_cycle(const Presentation& p);

/// Validation, then every group whose id matches `only` (all when empty).
/// An id matches a group when it equals it or is a dotted prefix of an
/// outcome id. Invalid input yields a report holding only validation.
/// Throws PresentationError on an unknown id.
CheckReport run_all(const Presentation& p,
                    const std::vector<std::string>& only = {});

}  // namespace gentle
