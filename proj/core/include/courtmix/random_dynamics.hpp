#pragma once

#include "courtmix/court.hpp"
#include "courtmix/rational.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace courtmix {

// One game's randomness per court: the first team rotates C1 ~ uniform{0..5},
// the opposing team C2 = C1 - 1 + Binomial(2, 1/2) mod 6, so the offset
// C2 - C1 is -1, 0, +1 with probabilities 1/4, 1/2, 1/4. The two courts are
// independent. C1 attaches to the top quadrant of each court (A resp. B);
// the offset law is symmetric, so the choice is distributionally irrelevant.
struct CourtRotationLaw {
    int c1 = 0;
    int c2 = 0;

    static CourtRotationLaw sample(std::mt19937_64& rng);
};

struct StepOutcome {
    Step step;
    Rational probability;
};

/// All 324 (step, probability) pairs of one random game step, exact.
const std::vector<StepOutcome>& enumerate_step_distribution();

Step sample_game_step(std::mt19937_64& rng);

struct Trajectory {
    std::vector<Configuration> configurations;  // game 1 start, game 2 start, ...
    std::uint64_t seed = 0;
};

/// `games` successive starting configurations; entry 0 is `start`.
Trajectory simulate_session(const Configuration& start, int games, std::uint64_t seed);

enum class EgoCourt { First, Second };  // quadrant C resp. A

struct MonteCarloEstimate {
    std::string observable;
    int games = 0;
    long long trials = 0;
    std::uint64_t seed = 0;
    int workers = 1;
    double estimate = 0.0;
    double std_error = 0.0;
};

/// Probability that ego shares a court with every other player in at least one
/// of `games` games (game 1 included). Trials are split into contiguous
/// per-worker ranges with seeds derived from (seed, worker), so the estimate
/// is deterministic in (seed, workers).
MonteCarloEstimate estimate_encounter_all(EgoCourt court, int games, long long trials,
                                          std::uint64_t seed, int workers = 1);

/// Worker sub-seed derivation (splitmix64 over master ^ index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace courtmix
