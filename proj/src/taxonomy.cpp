#include "rtlgauge/taxonomy.hpp"

#include <algorithm>

#include "rtlgauge/util.hpp"

namespace rtlgauge {

std::string_view to_string(FailureSubtype s) {
  switch (s) {
    case FailureSubtype::late_syntax_error: return "late_syntax_error";
    case FailureSubtype::undefined_module: return "undefined_module";
    case FailureSubtype::non_synthesizable_construct: return "non_synthesizable_construct";
    case FailureSubtype::simulation_only_system_task: return "simulation_only_system_task";
    case FailureSubtype::synthesis_timeout: return "synthesis_timeout";
    case FailureSubtype::invalid_nesting: return "invalid_nesting";
    case FailureSubtype::combinational_loop: return "combinational_loop";
    case FailureSubtype::multiple_driver: return "multiple_driver";
    case FailureSubtype::unclassified: return "unclassified";
  }
  return "unclassified";
}

FailureSubtype subtype_from_string(std::string_view s) {
  for (auto t : all_subtypes())
    if (to_string(t) == s) return t;
  throw RuleSetError("unknown failure subtype: " + std::string(s));
}

std::vector<FailureSubtype> all_subtypes() {
  return {FailureSubtype::late_syntax_error,
          FailureSubtype::undefined_module,
          FailureSubtype::non_synthesizable_construct,
          FailureSubtype::simulation_only_system_task,
          FailureSubtype::synthesis_timeout,
          FailureSubtype::invalid_nesting,
          FailureSubtype::combinational_loop,
          FailureSubtype::multiple_driver,
          FailureSubtype::unclassified};
}

RuleSet RuleSet::parse(std::string_view text) {
  RuleSet rs;
  int lineno = 0;
  for (const auto& raw_line : split(text, '\n')) {
    ++lineno;
    auto line = trim(raw_line);
    if (line.empty() || line[0] == '#') continue;
    if (starts_with(line, "version")) {
      rs.version = std::string(trim(line.substr(7)));
      continue;
    }
    // subtype :: needle [&& needle ...] :: note
    std::vector<std::string> parts;
    {
      std::string s(line);
      size_t start = 0;
      while (true) {
        size_t pos = s.find("::", start);
        if (pos == std::string::npos) {
          parts.push_back(s.substr(start));
          break;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 2;
      }
    }
    if (parts.size() < 2)
      throw RuleSetError("rule line " + std::to_string(lineno) + ": expected 'subtype :: pattern [:: note]'");
    Rule rule;
    rule.subtype = subtype_from_string(trim(parts[0]));
    if (rule.subtype == FailureSubtype::unclassified)
      throw RuleSetError("rule line " + std::to_string(lineno) +
                         ": unclassified is the fall-through, not a rule");
    if (rule.subtype == FailureSubtype::synthesis_timeout)
      throw RuleSetError("rule line " + std::to_string(lineno) +
                         ": synthesis_timeout is assigned from outcome status, not a pattern");
    std::string pattern(trim(parts[1]));
    size_t start = 0;
    while (true) {
      size_t pos = pattern.find("&&", start);
      std::string needle = pos == std::string::npos ? pattern.substr(start)
                                                    : pattern.substr(start, pos - start);
      auto n = trim(needle);
      if (!n.empty()) rule.needles.emplace_back(n);
      if (pos == std::string::npos) break;
      start = pos + 2;
    }
    if (rule.needles.empty())
      throw RuleSetError("rule line " + std::to_string(lineno) + ": empty pattern");
    if (parts.size() >= 3) rule.note = std::string(trim(parts[2]));
    rs.rules.push_back(std::move(rule));
  }
  if (rs.version.empty()) throw RuleSetError("rule file missing 'version' line");
  return rs;
}

RuleSet RuleSet::load(const std::filesystem::path& path) {
  return parse(read_text_file(path));
}

namespace {
// Shipped default rules. Anchors mirror Yosys diagnostic text; precedence
// follows the fixed subtype order, late_syntax_error last as the residual
// structural category.
constexpr const char* kBuiltinRules = R"(# rtlgauge synthesis-failure taxonomy rules
version 1

undefined_module :: referenced in module && is not part of the design :: hierarchy: missing module definition
undefined_module :: is not part of the design :: hierarchy: generic missing-module anchor

simulation_only_system_task :: System task `$display :: $display in synthesized logic
simulation_only_system_task :: System task `$finish :: $finish in synthesized logic
simulation_only_system_task :: System task `$monitor :: $monitor in synthesized logic
simulation_only_system_task :: outside initial block is unsupported :: simulation-only system task, generic anchor

non_synthesizable_construct :: while loop && is not constant :: non-constant while loop
non_synthesizable_construct :: Unsupported: behavioral :: behavioral construct rejected by synthesis
non_synthesizable_construct :: only supported in constant functions :: constant-function-only construct
non_synthesizable_construct :: is not synthesizable :: generic non-synthesizable anchor
non_synthesizable_construct :: Non-constant delay :: behavioral delay in synthesized process

invalid_nesting :: syntax error, unexpected TOK_ALWAYS :: nested always block rejected at elaboration
invalid_nesting :: syntax error, unexpected TOK_INITIAL :: nested initial block rejected at elaboration
invalid_nesting :: Nested always blocks are not permitted :: explicit nesting diagnostic

combinational_loop :: found logic loop in module :: combinational feedback detected
combinational_loop :: Found an SCC: :: combinational feedback (SCC report)

multiple_driver :: multiple conflicting drivers :: driver conflict detected
multiple_driver :: is driven by multiple :: driver conflict, generic anchor

late_syntax_error :: syntax error, unexpected :: parser acceptance followed by elaboration rejection
late_syntax_error :: Parser error in line :: elaboration-time parse failure
)";
}  // namespace

const RuleSet& RuleSet::builtin() {
  static const RuleSet rs = RuleSet::parse(kBuiltinRules);
  return rs;
}

namespace {

bool rule_matches(const Rule& rule, const std::string& diagnostics, std::string* evidence) {
  size_t first_pos = std::string::npos;
  for (const auto& needle : rule.needles) {
    size_t pos = diagnostics.find(needle);
    if (pos == std::string::npos) return false;
    if (first_pos == std::string::npos) first_pos = pos;
  }
  if (evidence) {
    // excerpt: the line containing the first needle
    size_t line_begin = diagnostics.rfind('\n', first_pos);
    line_begin = line_begin == std::string::npos ? 0 : line_begin + 1;
    size_t line_end = diagnostics.find('\n', first_pos);
    if (line_end == std::string::npos) line_end = diagnostics.size();
    *evidence = diagnostics.substr(line_begin, line_end - line_begin);
  }
  return true;
}

}  // namespace

FailureTag classify_failure(const SynthOutcome& outcome, const RuleSet& rules) {
  FailureTag tag;
  if (outcome.status == SynthOutcome::Status::timeout) {
    tag.subtype = FailureSubtype::synthesis_timeout;
    return tag;
  }
  for (const auto& rule : rules.rules) {
    std::string evidence;
    if (rule_matches(rule, outcome.diagnostics, &evidence)) {
      tag.subtype = rule.subtype;
      tag.evidence = evidence;
      tag.rule_note = rule.note;
      return tag;
    }
  }
  tag.subtype = FailureSubtype::unclassified;
  return tag;
}

std::vector<FailureTag> classify_all_matches(const SynthOutcome& outcome, const RuleSet& rules) {
  std::vector<FailureTag> out;
  if (outcome.status == SynthOutcome::Status::timeout) {
    out.push_back({FailureSubtype::synthesis_timeout, "", ""});
    return out;
  }
  for (const auto& rule : rules.rules) {
    std::string evidence;
    if (rule_matches(rule, outcome.diagnostics, &evidence))
      out.push_back({rule.subtype, evidence, rule.note});
  }
  if (out.empty()) out.push_back({FailureSubtype::unclassified, "", ""});
  return out;
}

GroupBy group_by_from_string(std::string_view s) {
  if (s == "model") return GroupBy::model;
  if (s == "benchmark") return GroupBy::benchmark;
  if (s == "access_type") return GroupBy::access_type;
  if (s == "subtype") return GroupBy::subtype;
  throw std::invalid_argument("unknown group_by: " + std::string(s));
}

Breakdown taxonomy_breakdown(const std::vector<TaggedFailure>& tags, GroupBy group_by) {
  Breakdown b;
  b.group_by = group_by;
  b.total = static_cast<int>(tags.size());
  std::map<std::string, std::map<FailureSubtype, int>> counts;
  for (const auto& t : tags) {
    std::string group;
    switch (group_by) {
      case GroupBy::model: group = t.model; break;
      case GroupBy::benchmark: group = t.benchmark; break;
      case GroupBy::access_type: group = t.access_type; break;
      case GroupBy::subtype: group = "all"; break;
    }
    counts[group][t.tag.subtype]++;
    b.group_totals[group]++;
  }
  for (const auto& [group, per_subtype] : counts) {
    int group_total = b.group_totals[group];
    for (auto subtype : all_subtypes()) {
      auto it = per_subtype.find(subtype);
      if (it == per_subtype.end()) continue;
      BreakdownCell cell;
      cell.group = group;
      cell.subtype = subtype;
      cell.count = it->second;
      cell.pct_of_group = group_total > 0 ? 100.0 * it->second / group_total : 0.0;
      b.cells.push_back(std::move(cell));
    }
  }
  return b;
}

}  // namespace rtlgauge
