#pragma once

#include "courtmix/rational.hpp"
#include "courtmix/reduced_chain.hpp"

#include <set>
#include <string>
#include <vector>

namespace courtmix {

struct Unreachable : std::runtime_error {
    explicit Unreachable(const std::string& s)
        : std::runtime_error("target not reachable from " + s) {}
};

using Matrix = std::vector<std::vector<double>>;
using StateSet = std::set<std::string>;

/// P^n by repeated multiplication in doubles.
Matrix n_step_matrix(const ReducedChain& chain, int n);

/// Exact-rational P^n; intended for small n (<= 16).
RationalMatrix n_step_matrix_exact(const ReducedChain& chain, int n);

/// Worst-start variation distance: max_i (1/2) sum_j |p^n_ij - pi_j|.
double variation_distance_worst(const ReducedChain& chain, int n);

/// Worst-pair separation distance: max_ij (1 - p^n_ij / pi_j).
double separation_distance_worst(const ReducedChain& chain, int n);

/// Worst-start L2 (chi-square) distance:
/// max_i sqrt(sum_j (p^n_ij - pi_j)^2 / pi_j).
double l2_distance_worst(const ReducedChain& chain, int n);

struct DistanceRow {
    int n;
    double d_star;
    double s_star;
    double l2;
};
std::vector<DistanceRow> distance_report(const ReducedChain& chain, int max_n);

/// E[ games 1..horizon spent in target_set | game 1 starts at `start` ];
/// the initial game counts. Throws UnknownState.
double expected_occupancy(const ReducedChain& chain, const std::string& start,
                          int horizon, const StateSet& target_set);

/// P[ state stays outside avoid_set for games 1..horizon ], via the
/// restricted (taboo) transition matrix; zero when the start is avoided.
double never_probability(const ReducedChain& chain, const std::string& start,
                         int horizon, const StateSet& avoid_set);

/// Distribution of the first game index (1-based) at which the chain leaves
/// `stay_set`, from taboo-matrix powers; entry k = P(exit happens on step k).
std::vector<Rational> exit_time_distribution(const ReducedChain& chain,
                                             const std::string& start,
                                             const StateSet& stay_set, int max_steps);

/// Expected number of steps to enter target_set, exact first-step solve.
/// Throws Unreachable if the expectation is infinite.
Rational expected_hitting_time(const ReducedChain& chain, const std::string& start,
                               const StateSet& target_set);

/// P[ enter goal_set strictly before fail_set ], exact.
Rational first_passage_probability(const ReducedChain& chain, const std::string& start,
                                   const StateSet& goal_set, const StateSet& fail_set);

/// Z = (I - P + 1 pi)^{-1}, exact. Throws SingularSystem.
RationalMatrix fundamental_matrix(const ReducedChain& chain);

enum class BaselineEvent { NeverOpposite, NeverSame };

/// Independent random-teams baseline: (17/23)^(games-1) for never-opposite,
/// (18/23)^(games-1) for never-same.
double independent_baseline(BaselineEvent event, int games);

// Convenience state sets over the friend or big-friend labels.
StateSet states_matching(const ReducedChain& chain, char kind);  // 'T' or 'O'
StateSet complement_of(const ReducedChain& chain, const StateSet& s);

}  // namespace courtmix
