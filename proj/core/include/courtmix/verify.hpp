#pragma once

#include "courtmix/court.hpp"
#include "courtmix/sequence.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace courtmix {

struct EffectAssertion {
    std::string sequence;                 // DSL text (usually a macro name)
    std::array<int, 24> expected;         // expected seating after applying to the reference
    std::string source;                   // short provenance tag for reports
};

struct PositionDiff {
    int position;
    int expected_player;
    int actual_player;
};

struct EffectResult {
    bool pass = false;
    std::vector<PositionDiff> diffs;
    int steps = 0;
};

/// Applies the assertion's sequence to the reference configuration and diffs
/// the outcome against the expected seating.
EffectResult verify_effect(const EffectAssertion& assertion);

/// The bundled assertions for X, F, G, H and EEEE.
const std::vector<EffectAssertion>& builtin_effect_assertions();

struct CertificateCheck {
    std::string check;
    bool pass = false;
    std::string details;
    std::vector<PositionDiff> diffs;  // per-position evidence when an effect fails
};

struct Certificate {
    std::string name;
    bool pass = false;
    std::uint64_t seed = 0;
    std::vector<CertificateCheck> checks;
    std::vector<std::pair<std::string, int>> sequence_lengths;  // audit record
};

/// Aperiodicity: the built-in odd identity sequence returns the reference to
/// itself in 995 legal steps, EEEE is a 4-step identity, and gcd(995, 4) = 1.
Certificate verify_aperiodicity();

/// A sequence transposing the players currently at positions i and j of
/// quadrant A and fixing everyone else, built from F, G, H conjugated by
/// clean A-rotations.
Sequence transpose_in_A(int pos_i, int pos_j);

struct PlanStage {
    std::string label;      // algorithm stage, e.g. "procedure D" or "fix A"
    std::size_t token_begin;
    std::size_t token_end;
};

struct Plan {
    Sequence moves;
    std::vector<PlanStage> provenance;
    int steps = 0;
};

/// Constructive route from `c` to the reference configuration: back rows of D
/// and C, front rows of D and C via detours through B, back and front rows of
/// B, then quadrant A by transpositions. Total on all inputs; the emitted
/// sequence consists solely of legal steps.
Plan plan_to_reference(const Configuration& c);

/// Effect checks for X/F/G/H, the 15 single-transposition targets in A, and
/// apply-and-check over `random_configurations` seeded plans.
Certificate verify_irreducibility_suite(std::uint64_t seed = 0x5eed,
                                        int random_configurations = 1000);

}  // namespace courtmix
