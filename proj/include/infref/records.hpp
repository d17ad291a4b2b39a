#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "infref/io.hpp"
#include "infref/metamodel.hpp"
#include "infref/refinement.hpp"

namespace infref {

inline constexpr std::string_view profile_csv_header = "step,ev_i,h,n_refinable,decision,split_var,delta_ev,wall_ms";
inline constexpr std::string_view trace_csv_header =
    "step,ev_i,ev_star_hat,n_refinable,lvr,inc_cost,diff_value,cum_cost,ev_ii";

/// Shortest round-trip decimal form ("%.17g" trimmed to the shortest exact).
std::string format_double(double x);

/// FNV-1a, 64 bit, as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

std::string profile_to_csv(const RefinementProfile& profile, const InfluenceDiagram& diagram);
/// JSON sidecar: id, seed, ev_star (null when unknown), stop_reason, steps.
Json profile_to_json(const RefinementProfile& profile, const InfluenceDiagram& diagram);
/// Reads the sidecar; decision and split variables stay unset (ids are kept
/// only in the file).
RefinementProfile profile_from_json(const Json& doc);

std::string trace_to_csv(const ControllerTrace& trace);

/// Parses a CSV with a mandatory header; throws ParseError naming the line.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::size_t column(std::string_view name) const;
};
CsvTable parse_csv(std::string_view text);

}  // namespace infref
