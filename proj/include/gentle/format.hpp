#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gentle/presentation.hpp"
#include "gentle/string_module.hpp"

namespace gentle {

/// Error in a presentation file; `line()` is 1-based, 0 when unknown.
class ParseError : public PresentationError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : PresentationError(line ? "line " + std::to_string(line) + ": " + what
                               : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct Statement {
  enum class Kind { vertex, arrow, rel };
  Kind kind;
  std::size_t line;
  /// vertex: the ids; arrow: label, source, target; rel: the two labels.
  std::vector<std::string> args;
};

struct PresentationFile {
  std::vector<Statement> statements;
};

/// Grammar: `vertex <id>+`, `arrow <label> <src> -> <tgt>`, `rel <l1> <l2>`,
/// `#` comments, identifiers [A-Za-z0-9_']+.
PresentationFile parse_file(std::string_view text);
Presentation to_presentation(const PresentationFile& file);
Presentation parse_presentation(std::string_view text);

std::string render(const Presentation& p);

/// Reads "c2 d2", "-a1,b1" or "e(v)".
Word parse_word(const Presentation& p, std::string_view text);

struct Fixture {
  std::string name;
  std::string text;
};

/// F1-F5 and T0, in that order.
const std::vector<Fixture>& fixtures();
/// Throws PresentationError for an unknown name.
const Fixture& fixture(std::string_view name);
Presentation load_fixture(std::string_view name);

/// Random gentle, finite-dimensional presentation on `vertex_count` vertices,
/// deterministic in `seed`.
Presentation gen_random_gentle(std::size_t vertex_count, std::uint64_t seed);

}  // namespace gentle
