#pragma once

#include <map>
#include <string>
#include <vector>

#include "rtlgauge/journal.hpp"
#include "rtlgauge/manifest.hpp"
#include "rtlgauge/rank.hpp"
#include "rtlgauge/scoring.hpp"
#include "rtlgauge/taxonomy.hpp"

namespace rtlgauge {

// Scoring inputs for one metric library.
std::map<std::string, TaskInfo> build_task_infos(const Manifest& manifest,
                                                 const GoldenCache& goldens,
                                                 const std::string& library);

std::map<std::string, std::vector<AttemptScore>> build_attempt_scores(
    const std::vector<AttemptRecord>& records, const std::string& library);

// Scores every model found in the journal. Throws IncompleteCampaignError /
// UnresolvedInfraError per the scoring contracts.
std::vector<ModelSummary> score_journal(const std::vector<AttemptRecord>& records,
                                        const Manifest& manifest, const GoldenCache& goldens,
                                        const std::string& library, int k,
                                        const WeightConfig& w = {});

// Genuine synthesis failures (syntax pass, synth error/timeout) classified
// through the rule set, carrying provenance for breakdowns.
std::vector<TaggedFailure> collect_failures(
    const std::vector<AttemptRecord>& records, const Manifest& manifest,
    const std::map<std::string, std::string>& access_type_by_model, const RuleSet& rules);

// Per-design metric rank agreement plus model-ranking agreement with goldens
// re-anchored per library. Throws RankError naming any library absent from
// the journal.
XlibReport cross_library_report(const std::vector<AttemptRecord>& records,
                                const Manifest& manifest, const GoldenCache& goldens,
                                const std::string& default_library,
                                const std::vector<std::string>& alternate_libraries, int k,
                                const WeightConfig& w = {});

}  // namespace rtlgauge
