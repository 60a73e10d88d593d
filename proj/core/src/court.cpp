#include "courtmix/court.hpp"

#include <algorithm>

namespace courtmix {

namespace {

// Migration as a position permutation: player at kMigrateTo[p]'s source...
// computed as: for each quadrant, front slots map to the same slots next
// quadrant clockwise; back positions are fixed.
constexpr std::array<int, 24> make_migration() {
    std::array<int, 24> dest{};
    for (int p = 0; p < 24; ++p) dest[p] = p;
    for (Quadrant q : kQuadrants) {
        const Quadrant n = next_clockwise(q);
        for (Slot s : {Slot::FrontRight, Slot::FrontCenter, Slot::FrontLeft})
            dest[slot_position(q, s)] = slot_position(n, s);
    }
    return dest;
}
constexpr std::array<int, 24> kMigrateDest = make_migration();

}  // namespace

Configuration Configuration::from_seating(const std::array<int, 24>& seating) {
    Configuration c;
    std::array<bool, 24> seen{};
    for (int pos = 0; pos < kPlayers; ++pos) {
        const int pl = seating[pos];
        if (pl < 0 || pl >= kPlayers)
            throw std::invalid_argument("seating[" + std::to_string(pos) +
                                        "] = " + std::to_string(pl) + " out of range");
        if (seen[pl])
            throw std::invalid_argument("seating[" + std::to_string(pos) +
                                        "]: player " + std::to_string(pl) + " seated twice");
        seen[pl] = true;
        c.seating_[pos] = static_cast<std::uint8_t>(pl);
    }
    return c;
}

int Configuration::position_of(int player) const {
    for (int pos = 0; pos < kPlayers; ++pos)
        if (seating_[pos] == player) return pos;
    throw std::invalid_argument("no such player: " + std::to_string(player));
}

bool Configuration::is_permutation() const {
    std::array<bool, 24> seen{};
    for (int pos = 0; pos < kPlayers; ++pos) {
        if (seating_[pos] >= kPlayers || seen[seating_[pos]]) return false;
        seen[seating_[pos]] = true;
    }
    return true;
}

Configuration rotate_quadrant(const Configuration& c, Quadrant q, int k) {
    k = ((k % 6) + 6) % 6;
    if (k == 0) return c;
    Configuration out = c;
    const auto& pos = kSlotPosition[static_cast<int>(q)];
    // one rotation sends the player at CCW slot index i to index i-1
    for (int i = 0; i < 6; ++i)
        out.seating_[pos[(i - k + 6) % 6]] = c.seating_[pos[i]];
    return out;
}

Configuration migrate(const Configuration& c) {
    Configuration out = c;
    for (int p = 0; p < kPlayers; ++p)
        out.seating_[kMigrateDest[p]] = c.seating_[p];
    return out;
}

Configuration apply_step(const Configuration& c, const Step& s) {
    if (!s.legal())
        throw IllegalStep("step A^" + std::to_string(s[Quadrant::A]) + " C^" +
                          std::to_string(s[Quadrant::C]) + " B^" +
                          std::to_string(s[Quadrant::B]) + " D^" +
                          std::to_string(s[Quadrant::D]) +
                          " violates the rotation law");
    Configuration out = c;
    for (Quadrant q : kQuadrants) out = rotate_quadrant(out, q, s[q]);
    return migrate(out);
}

Configuration half_turn(const Configuration& c) {
    Configuration out = c;
    for (int p = 0; p < kPlayers; ++p)
        out.seating_[23 - p] = c.seating_[p];
    return out;
}

}  // namespace courtmix
