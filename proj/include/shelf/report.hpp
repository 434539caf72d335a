#pragma once

// Rendering of reports to table / CSV / JSON. JSON uses ordered maps so a
// rerun with the same inputs is byte-identical.

#include "shelf/audits.hpp"
#include "shelf/exact.hpp"
#include "shelf/genfunc.hpp"
#include "shelf/machine.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace shelf {

using ojson = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct RenderOptions {
    std::string format = "table"; // table | csv | json
    int digits = 3;
    bool exact = false; // render rationals as num/den in table/csv
};

/// Ordered command configuration, echoed into every output so a run is
/// self-reproducing.
using Config = std::vector<std::pair<std::string, std::string>>;

std::string config_comment(const Config& cfg);     // "# k=v k=v"
ojson config_json(const Config& cfg);

/// {"decimal": "...", "ratio": "num/den"}
ojson value_json(const Rat& q, int digits);

/// decimal or num/den per options
std::string value_text(const Rat& q, const RenderOptions& opt);

ojson distance_report_json(const DistanceReport& rep, const Config& cfg,
                           const RenderOptions& opt);
ojson distance_table_json(const std::vector<DistanceReport>& rows, const Config& cfg,
                          const RenderOptions& opt);
std::string distance_table_csv(const std::vector<DistanceReport>& rows,
                               const Config& cfg, const RenderOptions& opt);
std::string distance_table_text(const std::vector<DistanceReport>& rows,
                                const Config& cfg, const RenderOptions& opt);

ojson mc_report_json(const McReport& rep, const Config& cfg, const RenderOptions& opt);
std::string mc_report_csv(const McReport& rep, const Config& cfg,
                          const RenderOptions& opt);
std::string mc_report_text(const McReport& rep, const Config& cfg,
                           const RenderOptions& opt);

ojson discrete_dist_json(const DiscreteDist& dist, const Config& cfg,
                         const RenderOptions& opt);
std::string discrete_dist_csv(const DiscreteDist& dist, const Config& cfg,
                              const RenderOptions& opt);
std::string discrete_dist_text(const DiscreteDist& dist, const Config& cfg,
                               const RenderOptions& opt);

ojson perm_dist_json(const PermDist& dist, const std::string& label, const Config& cfg,
                     const RenderOptions& opt);
std::string perm_dist_csv(const PermDist& dist, const Config& cfg,
                          const RenderOptions& opt);

/// Structural validation of a report document against the shipped schema
/// (schemas/report.schema.json). Throws shelf::Error with a reason on
/// mismatch; returns the matched kind.
std::string validate_report_json(const ojson& doc, const ojson& schema);

} // namespace shelf
