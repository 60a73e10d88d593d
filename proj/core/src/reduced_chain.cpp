#include "courtmix/reduced_chain.hpp"

#include "courtmix/random_dynamics.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "portable_shuffle.hpp"

namespace courtmix {

namespace {

std::vector<std::string> block_labels(int q, bool pm_first) {
    std::vector<std::string> out;
    const std::string n = std::to_string(q);
    if (pm_first) { out.push_back(n + "+"); out.push_back(n + "-"); }
    for (int k = 2; k <= 6; ++k) out.push_back(n + "T" + std::to_string(k));
    for (int k = 1; k <= 6; ++k) out.push_back(n + "O" + std::to_string(k));
    if (!pm_first) { out.push_back(n + "+"); out.push_back(n + "-"); }
    return out;
}

Quadrant ego_quadrant_of(int q) {
    switch (q) {
        case 1: return Quadrant::C;
        case 2: return Quadrant::A;
        case 3: return Quadrant::B;
        default: return Quadrant::D;
    }
}

int quadrant_number(Quadrant q) {
    switch (q) {
        case Quadrant::C: return 1;
        case Quadrant::A: return 2;
        case Quadrant::B: return 3;
        default: return 4;
    }
}

Quadrant opposing(Quadrant q) {
    switch (q) {
        case Quadrant::A: return Quadrant::C;
        case Quadrant::C: return Quadrant::A;
        case Quadrant::B: return Quadrant::D;
        default: return Quadrant::B;
    }
}

int big_label_index(int q, char kind, int k) {
    // offsets inside big_friend_state_labels()
    const int base = (q - 1) * 13;
    const bool pm_first = q == 1 || q == 3;
    if (kind == '+') return base + (pm_first ? 0 : 11);
    if (kind == '-') return base + (pm_first ? 1 : 12);
    const int head = pm_first ? 2 : 0;
    if (kind == 'T') return base + head + (k - 2);
    return base + head + 5 + (k - 1);  // 'O'
}

}  // namespace

const std::vector<std::string>& friend_state_labels() {
    static const std::vector<std::string> labels = [] {
        auto a = block_labels(1, true);
        auto b = block_labels(2, false);
        a.insert(a.end(), b.begin(), b.end());
        return a;
    }();
    return labels;
}

const std::vector<std::string>& big_friend_state_labels() {
    static const std::vector<std::string> labels = [] {
        auto a = block_labels(1, true);
        const auto b = block_labels(2, false);
        const auto c = block_labels(3, true);
        const auto d = block_labels(4, false);
        a.insert(a.end(), b.begin(), b.end());
        a.insert(a.end(), c.begin(), c.end());
        a.insert(a.end(), d.begin(), d.end());
        return a;
    }();
    return labels;
}

int ReducedChain::index_of(const std::string& state) const {
    const auto it = std::find(states.begin(), states.end(), state);
    if (it == states.end()) throw UnknownState(state);
    return static_cast<int>(it - states.begin());
}

bool ReducedChain::rows_sum_to_one() const {
    for (const auto& row : P)
        if (std::accumulate(row.begin(), row.end(), Rational(0)) != 1) return false;
    return true;
}

bool ReducedChain::pi_is_stationary() const {
    const std::size_t n = states.size();
    for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < n; ++i) s += pi[i] * P[i][j];
        if (s != pi[j]) return false;
    }
    return std::accumulate(pi.begin(), pi.end(), Rational(0)) == 1;
}

int project_big_friend_state(const Configuration& c, int ego, int friend_player) {
    if (ego == friend_player) throw SamePlayer{};
    const int pe = c.position_of(ego);
    const int pf = c.position_of(friend_player);
    const Quadrant qe = quadrant_of_position(pe);
    const Quadrant qf = quadrant_of_position(pf);
    const int se = static_cast<int>(slot_of_position(pe));
    const int sf = static_cast<int>(slot_of_position(pf));
    const int q = quadrant_number(qe);
    if (qf == qe) return big_label_index(q, 'T', 1 + (sf - se + 6) % 6);
    if (qf == opposing(qe)) return big_label_index(q, 'O', 1 + (sf - se + 6) % 6);
    const Quadrant plus = left_court(qe) ? Quadrant::B : Quadrant::C;
    return big_label_index(q, qf == plus ? '+' : '-', 0);
}

int project_friend_state(const Configuration& c, int ego, int friend_player) {
    if (ego == friend_player) throw SamePlayer{};
    const Configuration* cp = &c;
    Configuration turned;
    if (!left_court(c.quadrant_of(ego))) {
        turned = half_turn(c);
        cp = &turned;
    }
    return project_big_friend_state(*cp, ego, friend_player);  // indices 0..25
}

StateRepresentative make_representative(const std::string& label, int ego_slot,
                                        const std::array<int, 24>& relabel) {
    if (label.size() < 2) throw UnknownState(label);
    const int q = label[0] - '0';
    if (q < 1 || q > 4) throw UnknownState(label);
    const Quadrant qe = ego_quadrant_of(q);
    const int pe = kSlotPosition[static_cast<int>(qe)][ego_slot % 6];
    int pf = -1;
    const char kind = label[1];
    if (kind == '+' || kind == '-') {
        Quadrant qf;
        if (left_court(qe))
            qf = kind == '+' ? Quadrant::B : Quadrant::D;
        else
            qf = kind == '+' ? Quadrant::C : Quadrant::A;
        pf = slot_position(qf, Slot::BackRight);
    } else if (kind == 'T' || kind == 'O') {
        const int k = label[2] - '0';
        const Quadrant qf = kind == 'T' ? qe : opposing(qe);
        pf = kSlotPosition[static_cast<int>(qf)][(ego_slot + k - 1) % 6];
    } else {
        throw UnknownState(label);
    }
    std::array<int, 24> seating{};
    for (int pos = 0; pos < kPlayers; ++pos) seating[pos] = relabel[pos];
    return {Configuration::from_seating(seating), relabel[pe], relabel[pf]};
}

namespace {

std::array<int, 24> identity_relabel() {
    std::array<int, 24> r{};
    std::iota(r.begin(), r.end(), 0);
    return r;
}

RationalVector projected_row(const StateProjection& projection,
                             const StateRepresentative& rep, std::size_t n) {
    RationalVector row(n, 0);
    for (const StepOutcome& o : enumerate_step_distribution())
        row[projection(apply_step(rep.configuration, o.step), rep.ego,
                       rep.friend_player)] += o.probability;
    return row;
}

}  // namespace

ReducedChain build_friend_chain() {
    ReducedChain chain;
    chain.states = friend_state_labels();
    const std::size_t n = chain.states.size();
    const auto relabel = identity_relabel();
    chain.P.reserve(n);
    for (const std::string& s : chain.states)
        chain.P.push_back(projected_row(project_friend_state,
                                        make_representative(s, 0, relabel), n));
    for (const std::string& s : chain.states)
        chain.pi.push_back(s.back() == '+' || s.back() == '-' ? Rational(6, 46)
                                                              : Rational(1, 46));
    if (!chain.rows_sum_to_one() || !chain.pi_is_stationary())
        throw std::logic_error("friend chain construction failed its invariants");
    return chain;
}

ReducedChain build_big_friend_chain() {
    const ReducedChain f = build_friend_chain();
    const auto block = [&](int bi, int bj, int i, int j) {
        return f.P[13 * bi + i][13 * bj + j];
    };
    ReducedChain chain;
    chain.states = big_friend_state_labels();
    chain.P.assign(52, RationalVector(52, 0));
    // row blocks: 1 -> (T11, T12), 2 -> (T22, T21 into 3), 3 -> (T11, T12), 4 -> (T21 into 1, T22)
    struct Placement { int row_block, col_block, src_i, src_j; };
    const Placement placements[] = {
        {0, 0, 0, 0}, {0, 1, 0, 1},
        {1, 1, 1, 1}, {1, 2, 1, 0},
        {2, 2, 0, 0}, {2, 3, 0, 1},
        {3, 0, 1, 0}, {3, 3, 1, 1},
    };
    for (const auto& p : placements)
        for (int i = 0; i < 13; ++i)
            for (int j = 0; j < 13; ++j)
                chain.P[13 * p.row_block + i][13 * p.col_block + j] =
                    block(p.src_i, p.src_j, i, j);
    for (const std::string& s : chain.states)
        chain.pi.push_back(s.back() == '+' || s.back() == '-' ? Rational(6, 92)
                                                              : Rational(1, 92));
    if (!chain.rows_sum_to_one() || !chain.pi_is_stationary())
        throw std::logic_error("big friend chain construction failed its invariants");
    return chain;
}

ReducedChain lazy_cyclic_walk_chain() {
    ReducedChain chain;
    chain.states = {"A", "B", "D", "C"};  // clockwise order
    chain.P.assign(4, RationalVector(4, 0));
    for (int i = 0; i < 4; ++i) {
        chain.P[i][i] = Rational(1, 2);
        chain.P[i][(i + 1) % 4] = Rational(1, 2);
    }
    chain.pi.assign(4, Rational(1, 4));
    return chain;
}

RationalMatrix friend_chain_fixture() {
    // Nonzero entries {row, col, num, den} of the independently tabulated
    // 26x26 transition matrix, state order as friend_state_labels().
    static const int entries[][4] = {
        {0,0,1,4}, {0,1,1,4}, {0,24,1,4}, {0,25,1,4}, {1,1,1,4}, {1,2,1,36},
        {1,3,1,18}, {1,4,1,12}, {1,5,1,18}, {1,6,1,36}, {1,18,1,12}, {1,19,1,18},
        {1,20,1,36}, {1,22,1,36}, {1,23,1,18}, {1,25,1,4}, {2,2,1,3}, {2,8,1,6},
        {2,13,1,3}, {2,19,1,6}, {3,3,1,6}, {3,9,1,3}, {3,14,1,6}, {3,20,1,3},
        {4,10,1,2}, {4,21,1,2}, {5,5,1,6}, {5,11,1,3}, {5,16,1,6}, {5,22,1,3},
        {6,6,1,3}, {6,12,1,6}, {6,17,1,3}, {6,23,1,6}, {7,0,1,12}, {7,7,1,4},
        {7,8,1,12}, {7,12,1,12}, {7,13,1,24}, {7,17,1,24}, {7,24,5,12}, {8,0,1,6},
        {8,7,1,8}, {8,8,1,6}, {8,9,1,24}, {8,13,1,12}, {8,14,1,12}, {8,24,1,3},
        {9,0,1,3}, {9,8,1,12}, {9,9,1,12}, {9,13,1,24}, {9,14,1,6}, {9,15,1,8},
        {9,24,1,6}, {10,0,5,12}, {10,9,1,24}, {10,11,1,24}, {10,14,1,12}, {10,15,1,4},
        {10,16,1,12}, {10,24,1,12}, {11,0,1,3}, {11,11,1,12}, {11,12,1,12}, {11,15,1,8},
        {11,16,1,6}, {11,17,1,24}, {11,24,1,6}, {12,0,1,6}, {12,7,1,8}, {12,11,1,24},
        {12,12,1,6}, {12,16,1,12}, {12,17,1,12}, {12,24,1,3}, {13,1,1,6}, {13,2,1,3},
        {13,13,1,3}, {13,24,1,6}, {14,1,1,3}, {14,3,1,6}, {14,14,1,6}, {14,24,1,3},
        {15,1,1,2}, {15,24,1,2}, {16,1,1,3}, {16,5,1,6}, {16,16,1,6}, {16,24,1,3},
        {17,1,1,6}, {17,6,1,3}, {17,17,1,3}, {17,24,1,6}, {18,0,1,12}, {18,1,5,12},
        {18,13,1,24}, {18,17,1,24}, {18,18,1,4}, {18,19,1,12}, {18,23,1,12}, {19,0,1,6},
        {19,1,1,3}, {19,13,1,12}, {19,14,1,12}, {19,18,1,8}, {19,19,1,6}, {19,20,1,24},
        {20,0,1,3}, {20,1,1,6}, {20,13,1,24}, {20,14,1,6}, {20,15,1,8}, {20,19,1,12},
        {20,20,1,12}, {21,0,5,12}, {21,1,1,12}, {21,14,1,12}, {21,15,1,4}, {21,16,1,12},
        {21,20,1,24}, {21,22,1,24}, {22,0,1,3}, {22,1,1,6}, {22,15,1,8}, {22,16,1,6},
        {22,17,1,24}, {22,22,1,12}, {22,23,1,12}, {23,0,1,6}, {23,1,1,3}, {23,16,1,12},
        {23,17,1,12}, {23,18,1,8}, {23,22,1,24}, {23,23,1,6}, {24,2,1,36}, {24,3,1,18},
        {24,4,1,12}, {24,5,1,18}, {24,6,1,36}, {24,7,1,12}, {24,8,1,18}, {24,9,1,36},
        {24,11,1,36}, {24,12,1,18}, {24,24,1,4}, {24,25,1,4}, {25,0,1,4}, {25,8,1,36},
        {25,9,1,18}, {25,10,1,12}, {25,11,1,18}, {25,12,1,36}, {25,19,1,36}, {25,20,1,18},
        {25,21,1,12}, {25,22,1,18}, {25,23,1,36}, {25,25,1,4},
    };
    RationalMatrix m(26, RationalVector(26, 0));
    for (const auto& e : entries) m[e[0]][e[1]] = Rational(e[2], e[3]);
    return m;
}

std::vector<MatrixDiscrepancy> compare_friend_fixture(const ReducedChain& chain) {
    const RationalMatrix fixture = friend_chain_fixture();
    std::vector<MatrixDiscrepancy> out;
    for (int i = 0; i < 26; ++i)
        for (int j = 0; j < 26; ++j)
            if (chain.P[i][j] != fixture[i][j])
                out.push_back({chain.states[i], chain.states[j], fixture[i][j],
                               chain.P[i][j]});
    return out;
}

LumpabilityReport check_lumpability(const StateProjection& projection,
                                    const ReducedChain& chain,
                                    int representatives, std::uint64_t seed,
                                    bool half_turn_reps) {
    LumpabilityReport report;
    report.states_checked = static_cast<int>(chain.states.size());
    report.representatives = representatives;
    std::mt19937_64 rng(seed);
    for (std::size_t si = 0; si < chain.states.size(); ++si) {
        for (int r = 0; r < representatives; ++r) {
            std::array<int, 24> relabel{};
            std::iota(relabel.begin(), relabel.end(), 0);
            int ego_slot = 0;
            if (r > 0) {
                detail::portable_shuffle(relabel, rng);
                ego_slot = static_cast<int>(rng() % 6);
            }
            auto rep = make_representative(chain.states[si], ego_slot, relabel);
            if (half_turn_reps && r % 2 == 1)
                rep.configuration = half_turn(rep.configuration);
            const RationalVector row =
                projected_row(projection, rep, chain.states.size());
            if (row != chain.P[si])
                report.violations.push_back(
                    {chain.states[si], r,
                     "projected one-step law differs from the chain row"});
        }
    }
    return report;
}

}  // namespace courtmix
