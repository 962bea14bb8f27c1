#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qci/curve.hpp"
#include "qci/qci.hpp"

namespace qci::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Stable process exit codes.
enum ExitCode : int { kOk = 0, kParseError = 2, kGuardError = 3, kInternalError = 4 };

Json qci_results_json(const QciReport& report);
Json curve_results_json(const CurveReport& report);
/// Per-degree Hilbert rows, plus syzygy rows when the scheme is zero-dimensional.
Json hilbert_results_json(QciEngine& engine);

/// "key: value" rendering of a report document; numbers are the JSON numbers.
std::string render_text(const Json& document);

struct SweepRow {
  std::string family;
  int d = 0;
  std::uint32_t prime = 0;
  std::optional<std::int64_t> tau;
  std::optional<int> r;
  std::optional<std::int64_t> c2;
  std::string curve_class;
  std::string dpw_i;
  std::string dpw_ii;
  std::string status;
};

inline constexpr const char* kSweepHeader = "family,d,prime,tau,r,c2,class,dpw_i,dpw_ii,status";

/// Family names: "lines", "smooth-plus-line". Rows come back in d order
/// whatever the number of worker threads.
std::vector<SweepRow> run_sweep(const std::string& family, int d_lo, int d_hi, std::uint32_t prime,
                                AnalysisOptions options, unsigned jobs);
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qci::cli
