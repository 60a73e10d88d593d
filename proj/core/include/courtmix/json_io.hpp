#pragma once

#include "courtmix/analytics.hpp"
#include "courtmix/court.hpp"
#include "courtmix/random_dynamics.hpp"
#include "courtmix/reduced_chain.hpp"
#include "courtmix/verify.hpp"

#include <json.hpp>

#include <string>

namespace courtmix {

// All emitters use ordered_json with fixed key order and doubles rounded to
// six significant digits, so identical inputs give byte-identical output.
using Json = nlohmann::ordered_json;

double round_sig(double v, int digits = 6);

Json configuration_to_json(const Configuration& c);

/// Parses a JSON array of 24 player ids; on malformed input throws
/// std::invalid_argument naming the position of the first violation.
Configuration configuration_from_json(const Json& j);

Json chain_to_json(const ReducedChain& chain);
std::string chain_to_csv(const ReducedChain& chain);

Json estimate_to_json(const MonteCarloEstimate& e);

Json certificate_to_json(const Certificate& c);

Json distance_rows_to_json(const std::vector<DistanceRow>& rows);
std::string distance_rows_to_csv(const std::vector<DistanceRow>& rows);

struct OccupancyRow {
    std::string start;
    double mean_ot;
    double mean_st;
};
Json occupancy_to_json(const std::vector<OccupancyRow>& rows, int horizon);
std::string occupancy_to_csv(const std::vector<OccupancyRow>& rows);

struct NeverRow {
    std::string start;
    double probability;
};
Json never_to_json(const std::vector<NeverRow>& rows, const std::string& event, int horizon);
std::string never_to_csv(const std::vector<NeverRow>& rows);

Json plan_to_json(const Plan& plan, bool emit_sequence);

/// Four-quadrant ASCII rendering of a configuration.
std::string pretty_grid(const Configuration& c);

}  // namespace courtmix
