#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rtlgauge/backend.hpp"

namespace rtlgauge {

enum class FailureSubtype {
  late_syntax_error,
  undefined_module,
  non_synthesizable_construct,
  simulation_only_system_task,
  synthesis_timeout,
  invalid_nesting,
  combinational_loop,
  multiple_driver,
  unclassified,
};

std::string_view to_string(FailureSubtype s);
FailureSubtype subtype_from_string(std::string_view s);  // throws on unknown
std::vector<FailureSubtype> all_subtypes();

struct FailureTag {
  FailureSubtype subtype = FailureSubtype::unclassified;
  std::string evidence;  // matched diagnostic excerpt
  std::string rule_note;
};

// One classification rule: every needle must occur in the diagnostics
// (literal substrings, no regex). First matching rule wins.
struct Rule {
  FailureSubtype subtype = FailureSubtype::unclassified;
  std::vector<std::string> needles;
  std::string note;
};

class RuleSetError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RuleSet {
  std::string version;
  std::vector<Rule> rules;  // order defines precedence

  static RuleSet parse(std::string_view text);            // throws RuleSetError
  static RuleSet load(const std::filesystem::path& path);
  static const RuleSet& builtin();  // the shipped rule file, compiled in as data
};

// Timeout status wins outright; otherwise the first rule whose needles all
// occur in the diagnostics; otherwise unclassified. Total over failures.
FailureTag classify_failure(const SynthOutcome& outcome, const RuleSet& rules);

// Diagnostic mode: every matching rule, in precedence order. Does not affect
// counts anywhere.
std::vector<FailureTag> classify_all_matches(const SynthOutcome& outcome, const RuleSet& rules);

struct TaggedFailure {
  FailureTag tag;
  std::string model;
  std::string task;
  std::string benchmark;
  std::string access_type;  // proprietary / open_weight
};

enum class GroupBy { model, benchmark, access_type, subtype };
GroupBy group_by_from_string(std::string_view s);

struct BreakdownCell {
  std::string group;
  FailureSubtype subtype = FailureSubtype::unclassified;
  int count = 0;
  double pct_of_group = 0.0;
};

struct Breakdown {
  GroupBy group_by = GroupBy::subtype;
  int total = 0;
  std::vector<BreakdownCell> cells;                 // ordered by (group, subtype)
  std::map<std::string, int> group_totals;
};

Breakdown taxonomy_breakdown(const std::vector<TaggedFailure>& tags, GroupBy group_by);

}  // namespace rtlgauge
