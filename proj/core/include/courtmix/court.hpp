#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace courtmix {

// Gym layout: quadrant A top-left, B top-right, C bottom-left, D bottom-right.
// The nets run horizontally: A plays C on the left court, B plays D on the
// right. Front rows migrate clockwise A -> B -> D -> C -> A at the end of
// every game.
enum class Quadrant : std::uint8_t { A = 0, B = 1, C = 2, D = 3 };

// Team-relative slots, listed counter-clockwise starting from the serving
// position (back right, as the team faces its net).
enum class Slot : std::uint8_t {
    BackRight = 0,
    FrontRight = 1,
    FrontCenter = 2,
    FrontLeft = 3,
    BackLeft = 4,
    BackCenter = 5,
};

constexpr int kPlayers = 24;
constexpr std::array<Quadrant, 4> kQuadrants{Quadrant::A, Quadrant::B,
                                             Quadrant::C, Quadrant::D};

constexpr char quadrant_letter(Quadrant q) { return "ABCD"[static_cast<int>(q)]; }

/// Clockwise migration successor (A->B->D->C->A).
constexpr Quadrant next_clockwise(Quadrant q) {
    constexpr std::array<Quadrant, 4> next{Quadrant::B, Quadrant::D,
                                           Quadrant::A, Quadrant::C};
    return next[static_cast<int>(q)];
}

// Global position indices of each quadrant's slots, in Slot order. The index
// grid itself is four rows of six: A holds {0,1,2 / 6,7,8}, B {3,4,5 / 9,10,11},
// C {12,13,14 / 18,19,20}, D {15,16,17 / 21,22,23}. A and B face the net below
// them, so their front rows are the lower ones and "right" points west; C and
// D face up, front rows above, "right" points east.
constexpr std::array<std::array<int, 6>, 4> kSlotPosition{{
    {0, 6, 7, 8, 2, 1},      // A
    {3, 9, 10, 11, 5, 4},    // B
    {20, 14, 13, 12, 18, 19},  // C
    {23, 17, 16, 15, 21, 22},  // D
}};

constexpr int slot_position(Quadrant q, Slot s) {
    return kSlotPosition[static_cast<int>(q)][static_cast<int>(s)];
}

constexpr Quadrant quadrant_of_position(int pos) {
    const bool top = pos < 12;
    const bool left = (pos % 6) < 3;
    if (top) return left ? Quadrant::A : Quadrant::B;
    return left ? Quadrant::C : Quadrant::D;
}

constexpr Slot slot_of_position(int pos) {
    const Quadrant q = quadrant_of_position(pos);
    for (int s = 0; s < 6; ++s)
        if (kSlotPosition[static_cast<int>(q)][s] == pos)
            return static_cast<Slot>(s);
    return Slot::BackRight;  // unreachable for valid pos
}

constexpr bool is_front_slot(Slot s) {
    return s == Slot::FrontRight || s == Slot::FrontCenter || s == Slot::FrontLeft;
}

constexpr bool left_court(Quadrant q) { return q == Quadrant::A || q == Quadrant::C; }

struct IllegalStep : std::runtime_error {
    explicit IllegalStep(const std::string& what, int index = -1)
        : std::runtime_error(what), step_index(index) {}
    int step_index;  // 1-based position within a sequence, -1 if standalone
};

struct SamePlayer : std::invalid_argument {
    SamePlayer() : std::invalid_argument("ego and friend must differ") {}
};

/// One game's rotation counts in the A^x1 C^x2 B^x3 D^x4 E coding, i.e. what
/// happens between two successive starting configurations (the migration is
/// implied). Legal iff per court the two teams' counts differ by at most one
/// modulo 6.
struct Step {
    std::array<int, 4> turns{};  // indexed by Quadrant, each in 0..5

    int& operator[](Quadrant q) { return turns[static_cast<int>(q)]; }
    int operator[](Quadrant q) const { return turns[static_cast<int>(q)]; }

    bool legal() const {
        const auto ok = [](int a, int b) {
            const int d = ((a - b) % 6 + 6) % 6;
            return d == 0 || d == 1 || d == 5;
        };
        return ok(turns[0], turns[2]) && ok(turns[1], turns[3]);
    }

    bool operator==(const Step&) const = default;
};

/// An assignment of the 24 players to the 24 court positions; always a
/// permutation. Immutable value type: operations return new configurations.
class Configuration {
public:
    Configuration() { for (int p = 0; p < kPlayers; ++p) seating_[p] = static_cast<std::uint8_t>(p); }

    /// seating[i] = player at position i; throws if not a permutation of 0..23.
    static Configuration from_seating(const std::array<int, 24>& seating);

    static Configuration reference() { return Configuration{}; }

    int player_at(int pos) const { return seating_[pos]; }
    int position_of(int player) const;
    Quadrant quadrant_of(int player) const { return quadrant_of_position(position_of(player)); }
    Slot slot_of(int player) const { return slot_of_position(position_of(player)); }

    const std::array<std::uint8_t, 24>& seating() const { return seating_; }
    bool is_permutation() const;

    bool operator==(const Configuration&) const = default;

private:
    std::array<std::uint8_t, 24> seating_;
    friend Configuration rotate_quadrant(const Configuration&, Quadrant, int);
    friend Configuration migrate(const Configuration&);
    friend Configuration half_turn(const Configuration&);
};

/// Serve rotation applied k times to one quadrant: each player moves one slot
/// clockwise (front right -> back right -> back center -> ... -> front center
/// -> front right). All other quadrants unchanged.
Configuration rotate_quadrant(const Configuration& c, Quadrant q, int k);

/// Every front row moves to the same team-relative slots in the next quadrant
/// clockwise; back rows stay.
Configuration migrate(const Configuration& c);

/// Rotate the quadrants by their step counts, then migrate once.
/// Throws IllegalStep if the step violates the per-court rotation law.
Configuration apply_step(const Configuration& c, const Step& s);

/// 180-degree rotation of the gym (position p <-> 23 - p); an involution that
/// commutes with the dynamics and swaps A<->D, B<->C.
Configuration half_turn(const Configuration& c);

}  // namespace courtmix
