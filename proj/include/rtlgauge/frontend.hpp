#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rtlgauge {

// One piece of Verilog text entering the pipeline, with its provenance label
// ("golden:<task>" or "<model>/<task>/<attempt>").
struct VerilogSource {
  std::string text;
  std::string origin;
};

struct ModuleDecl {
  std::string name;   // unescaped identifier
  size_t begin = 0;   // offset of the `module` keyword in the stripped text
  size_t end = 0;     // one past the matching `endmodule` (or next decl / EOF)
};

struct ComplexityWeight {
  std::string task_id;
  long raw_edges = 0;
  double weight = 1.0;  // in [1, 24]
};

// Lexical-level failures (unterminated comment, malformed module header,
// missing module declaration). Recoverable: the caller records these as
// syntax-stage failures.
class FrontendError : public std::runtime_error {
 public:
  FrontendError(const std::string& msg, size_t offset)
      : std::runtime_error(msg + " (offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

// Replaces every //-to-end-of-line and /* ... */ region with a single space.
// String literals are preserved verbatim. Throws FrontendError naming the
// opening offset of an unterminated block comment.
std::string strip_comments(std::string_view text);

// Replaces (* ... *) attribute regions with a single space. `(*)` is left
// alone (event-control shorthand, not an attribute).
std::string strip_attributes(std::string_view text);

// Scans comment-stripped text for `module` keywords at token boundaries.
// Entries appear in textual order. Throws FrontendError for a `module`
// keyword with no following identifier.
std::vector<ModuleDecl> list_modules(std::string_view stripped_text);

// Accepts raw source; strips comments and attributes internally. Returns
// `expected` if a module with exactly that name is declared, otherwise the
// first declared module. Throws FrontendError if no module is declared.
std::string resolve_top_module(std::string_view raw_text, std::string_view expected);

// Deterministic dependency-edge count over raw source (comments stripped
// internally). An edge is counted for each distinct RHS-identifier ->
// LHS-identifier pair per continuous or procedural assignment (identifiers
// inside index brackets on the LHS count as RHS contributors), and one edge
// per connected port in a module instantiation. Gate primitives count like
// instantiations. Function/task bodies are skipped.
long count_dependency_edges(std::string_view raw_text);

// C_t = 1 + 23 * (edges - e_min) / (e_max - e_min). When e_max == e_min every
// weight is 1. Throws std::invalid_argument on an empty map.
std::map<std::string, ComplexityWeight> normalize_complexity(
    const std::map<std::string, long>& raw_edges);

bool is_verilog_identifier(std::string_view s);

}  // namespace rtlgauge
