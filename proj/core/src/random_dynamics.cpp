#include "courtmix/random_dynamics.hpp"

#include <cmath>
#include <thread>

namespace courtmix {

namespace {

int sample_offset(std::mt19937_64& rng) {
    // Binomial(2, 1/2) - 1
    const std::uint64_t bits = rng();
    return static_cast<int>(bits & 1) + static_cast<int>((bits >> 1) & 1) - 1;
}

Step make_step(int c1_left, int off_left, int c1_right, int off_right) {
    Step s;
    s[Quadrant::A] = c1_left;
    s[Quadrant::C] = ((c1_left + off_left) % 6 + 6) % 6;
    s[Quadrant::B] = c1_right;
    s[Quadrant::D] = ((c1_right + off_right) % 6 + 6) % 6;
    return s;
}

}  // namespace

CourtRotationLaw CourtRotationLaw::sample(std::mt19937_64& rng) {
    CourtRotationLaw law;
    law.c1 = static_cast<int>(rng() % 6);
    law.c2 = ((law.c1 + sample_offset(rng)) % 6 + 6) % 6;
    return law;
}

const std::vector<StepOutcome>& enumerate_step_distribution() {
    static const std::vector<StepOutcome> outcomes = [] {
        const Rational w[3] = {Rational(1, 4), Rational(1, 2), Rational(1, 4)};
        std::vector<StepOutcome> out;
        out.reserve(324);
        for (int c1l = 0; c1l < 6; ++c1l)
            for (int dl = -1; dl <= 1; ++dl)
                for (int c1r = 0; c1r < 6; ++c1r)
                    for (int dr = -1; dr <= 1; ++dr)
                        out.push_back({make_step(c1l, dl, c1r, dr),
                                       Rational(1, 36) * w[dl + 1] * w[dr + 1]});
        return out;
    }();
    return outcomes;
}

Step sample_game_step(std::mt19937_64& rng) {
    const auto left = CourtRotationLaw::sample(rng);
    const auto right = CourtRotationLaw::sample(rng);
    Step s;
    s[Quadrant::A] = left.c1;
    s[Quadrant::C] = left.c2;
    s[Quadrant::B] = right.c1;
    s[Quadrant::D] = right.c2;
    return s;
}

Trajectory simulate_session(const Configuration& start, int games, std::uint64_t seed) {
    if (games < 1) throw std::invalid_argument("games must be >= 1");
    Trajectory t;
    t.seed = seed;
    t.configurations.reserve(games);
    t.configurations.push_back(start);
    std::mt19937_64 rng(seed);
    for (int g = 1; g < games; ++g)
        t.configurations.push_back(apply_step(t.configurations.back(), sample_game_step(rng)));
    return t;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

namespace {

long long count_encounter_all(int ego, int games, long long trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    long long hits = 0;
    for (long long t = 0; t < trials; ++t) {
        Configuration cfg = Configuration::reference();
        std::uint32_t met = 0;  // bitmask over players on ego's court so far
        int remaining = games;
        while (true) {
            const bool ego_left = left_court(cfg.quadrant_of(ego));
            for (int pos = 0; pos < kPlayers; ++pos)
                if (left_court(quadrant_of_position(pos)) == ego_left)
                    met |= 1u << cfg.player_at(pos);
            if (--remaining == 0 || met == 0xffffffu) break;
            cfg = apply_step(cfg, sample_game_step(rng));
        }
        if (met == 0xffffffu) ++hits;
    }
    return hits;
}

}  // namespace

MonteCarloEstimate estimate_encounter_all(EgoCourt court, int games, long long trials,
                                          std::uint64_t seed, int workers) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (workers < 1) workers = 1;
    // ego's slot within the quadrant is irrelevant; pick the serving position
    const int ego = court == EgoCourt::First
                        ? slot_position(Quadrant::C, Slot::BackRight)
                        : slot_position(Quadrant::A, Slot::BackRight);

    std::vector<long long> hits(workers, 0);
    std::vector<std::thread> pool;
    const long long chunk = trials / workers;
    long long assigned = 0;
    for (int w = 0; w < workers; ++w) {
        const long long n = w + 1 == workers ? trials - assigned : chunk;
        assigned += n;
        pool.emplace_back([&hits, w, ego, games, n, seed] {
            hits[w] = count_encounter_all(ego, games, n, derive_seed(seed, w));
        });
    }
    for (auto& th : pool) th.join();

    long long total = 0;
    for (long long h : hits) total += h;
    const double p = static_cast<double>(total) / static_cast<double>(trials);

    MonteCarloEstimate e;
    e.observable = "encounter-all";
    e.games = games;
    e.trials = trials;
    e.seed = seed;
    e.workers = workers;
    e.estimate = p;
    e.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    return e;
}

}  // namespace courtmix
