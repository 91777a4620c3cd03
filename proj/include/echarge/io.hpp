#pragma once

#include "echarge/charge.hpp"
#include "echarge/ensembles.hpp"

#include "json.hpp"
#include <span>
#include <string>
#include <string_view>

namespace echarge::io {

inline constexpr int              kSchemaVersion = 1;
inline constexpr std::string_view kToolVersion   = "1.0.0";

/// Shortest "%.17g" rendering; negative zero prints as 0.
[[nodiscard]] std::string format_number(double x);

/// Strict parse of an ensemble file. Throws ParseError (syntax with
/// line/column, or schema problems with a field path), ShapeError or
/// ValidationError.
[[nodiscard]] Ensemble parse_ensemble(std::string_view text, const Tolerances &tol = {});

/// Canonical rendering; parse_ensemble followed by write_ensemble is the identity on its output.
[[nodiscard]] std::string write_ensemble(const Ensemble &e);

struct ReportContext {
    std::string input_path;
    Tolerances  tolerances;
    std::string tolerance_profile = "default";
    std::uint64_t seed = 0;
};

[[nodiscard]] nlohmann::ordered_json report_json(const Ensemble &e, const ChargeReport &r, const ReportContext &ctx);
[[nodiscard]] std::string            report_text(const Ensemble &e, const ChargeReport &r, const ReportContext &ctx);

/// One-line summary of the structural flags.
[[nodiscard]] std::string structure_summary(const Ensemble &e, const StructureFlags &f);

inline constexpr std::string_view kSweepHeader = "theta,entanglement_per_state,theorem1_upper,refined_upper,lower_bound,verdict";
[[nodiscard]] std::string sweep_csv(std::span<const FamilyReport> rows);

} // namespace echarge::io
