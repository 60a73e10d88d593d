#pragma once

#include "courtmix/court.hpp"
#include "courtmix/rational.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace courtmix {

struct UnknownState : std::invalid_argument {
    explicit UnknownState(const std::string& s)
        : std::invalid_argument("unknown state: " + s) {}
};

/// A labeled finite stochastic matrix with its stationary distribution,
/// everything in exact rationals.
struct ReducedChain {
    std::vector<std::string> states;
    RationalMatrix P;
    RationalVector pi;

    int index_of(const std::string& state) const;
    bool rows_sum_to_one() const;
    bool pi_is_stationary() const;
};

// Friend-chain state labels in fixture order:
//   1+, 1-, 1T2..1T6, 1O1..1O6, 2T2..2T6, 2O1..2O6, 2+, 2-
// Quadrant 1 is C, quadrant 2 is A (ego normalized to the left court).
// T = same team, O = opposing team on the same court, +/- = friend on the
// other court in its top (B) resp. bottom (D) quadrant. T/O indices count
// counter-clockwise from ego (teammate) or from ego* -- the opponent in the
// same team-relative slot as ego.
const std::vector<std::string>& friend_state_labels();

// Big-friend labels: ego quadrant 1..4 = C, A, B, D; for ego on the right
// court, + is the other court's C quadrant and - its A quadrant (the
// half-turn image of the left-court convention). Printed order:
//   1+, 1-, 1T*, 1O*, 2T*, 2O*, 2+, 2-, 3+, 3-, 3T*, 3O*, 4T*, 4O*, 4+, 4-
const std::vector<std::string>& big_friend_state_labels();

/// Friend-chain state of (ego, friend) in a configuration: if ego sits on the
/// right court the configuration is first normalized by a half turn.
/// Returns an index into friend_state_labels(). Throws SamePlayer.
int project_friend_state(const Configuration& c, int ego, int friend_player);

/// 52-state variant without the half-turn normalization.
int project_big_friend_state(const Configuration& c, int ego, int friend_player);

/// 26-state chain built by pushing a representative of every state through
/// the 324 enumerated step outcomes. pi is 6/46 on the four +/- states and
/// 1/46 elsewhere (construction verifies pi P = pi exactly).
ReducedChain build_friend_chain();

/// 52-state chain assembled from the friend chain's 13x13 blocks in the
/// pattern [T11 T12 0 0 / 0 T22 T21 0 / 0 0 T11 T12 / T21 0 0 T22];
/// pi is 6/92 on the eight +/- states and 1/92 elsewhere.
ReducedChain build_big_friend_chain();

/// 4-state quadrant walk: stay w.p. 1/2, advance clockwise w.p. 1/2.
ReducedChain lazy_cyclic_walk_chain();

struct MatrixDiscrepancy {
    std::string row;
    std::string col;
    Rational tabulated;
    Rational derived;
};

/// Entrywise comparison of a derived friend chain against the independently
/// tabulated 26x26 fixture; empty result means exact agreement.
std::vector<MatrixDiscrepancy> compare_friend_fixture(const ReducedChain& chain);

/// The tabulated fixture itself (exact rationals, same state order).
RationalMatrix friend_chain_fixture();

struct LumpabilityReport {
    struct Violation {
        std::string state;
        int representative = 0;
        std::string detail;
    };
    int states_checked = 0;
    int representatives = 0;
    std::vector<Violation> violations;
    bool pass() const { return violations.empty(); }
};

using StateProjection = std::function<int(const Configuration&, int, int)>;

/// Checks that the projected one-step law out of every reduced state is the
/// same for `representatives` distinct concrete realizations (random ego
/// slots, relabeled players). With `half_turn_reps` every other realization is
/// turned 180 degrees, putting ego on the right court; valid only for
/// projections invariant under the half turn (the 26-state one).
/// `chain` supplies the state space and the expected rows.
LumpabilityReport check_lumpability(const StateProjection& projection,
                                    const ReducedChain& chain,
                                    int representatives = 4,
                                    std::uint64_t seed = 0x5eed,
                                    bool half_turn_reps = false);

/// Representative (configuration, ego, friend) realizing a given state label,
/// with ego at a chosen slot and identities relabeled by `relabel` (a
/// permutation of 0..23). Used by the lumpability check and tests.
struct StateRepresentative {
    Configuration configuration;
    int ego;
    int friend_player;
};
StateRepresentative make_representative(const std::string& label, int ego_slot,
                                        const std::array<int, 24>& relabel);

}  // namespace courtmix
