#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "courtmix/analytics.hpp"

#include <cmath>

using namespace courtmix;

namespace {

const ReducedChain& friend_chain() {
    static const ReducedChain c = build_friend_chain();
    return c;
}
const ReducedChain& big_chain() {
    static const ReducedChain c = build_big_friend_chain();
    return c;
}
const ReducedChain& lazy_chain() {
    static const ReducedChain c = lazy_cyclic_walk_chain();
    return c;
}

const StateSet& team_states() {
    static const StateSet s = states_matching(friend_chain(), 'T');
    return s;
}
const StateSet& opponent_states() {
    static const StateSet s = states_matching(friend_chain(), 'O');
    return s;
}

}  // namespace

TEST_CASE("zeroth power is the identity and rows stay stochastic") {
    const Matrix p0 = n_step_matrix(friend_chain(), 0);
    for (std::size_t i = 0; i < 26; ++i)
        for (std::size_t j = 0; j < 26; ++j)
            CHECK(p0[i][j] == (i == j ? 1.0 : 0.0));
    const Matrix p7 = n_step_matrix(friend_chain(), 7);
    for (const auto& row : p7) {
        double sum = 0.0;
        for (double v : row) sum += v;
        CHECK(std::abs(sum - 1.0) < 1e-12);
    }
    const RationalMatrix e3 = n_step_matrix_exact(friend_chain(), 3);
    for (const auto& row : e3) {
        Rational sum = 0;
        for (const Rational& v : row) sum += v;
        CHECK(sum == 1);
    }
}

TEST_CASE("matrix powers converge to the stationary rows") {
    const Matrix p = n_step_matrix(friend_chain(), 64);
    double worst = 0.0;
    for (std::size_t i = 0; i < 26; ++i)
        for (std::size_t j = 0; j < 26; ++j)
            worst = std::max(worst, std::abs(p[i][j] - to_double(friend_chain().pi[j])));
    CHECK(worst < 1e-6);
}

// frozen values computed from the exact chain in extended precision
TEST_CASE("friend-chain distance table") {
    const double want[9][3] = {
        {0.956521739, 1.000000000, 4.690415760},
        {0.637681159, 1.000000000, 2.253512348},
        {0.375352254, 1.000000000, 1.544142634},
        {0.263131961, 0.933449074, 1.057820650},
        {0.180897530, 0.508200982, 0.718982831},
        {0.121950816, 0.373863282, 0.491597151},
        {0.082996839, 0.297123350, 0.338611486},
        {0.057573519, 0.223412831, 0.232747143},
        {0.039790311, 0.159789529, 0.159240285}};
    const auto rows = distance_report(friend_chain(), 9);
    REQUIRE(rows.size() == 9);
    for (int n = 1; n <= 9; ++n) {
        CHECK(rows[n - 1].d_star == doctest::Approx(want[n - 1][0]).epsilon(1e-5));
        CHECK(rows[n - 1].s_star == doctest::Approx(want[n - 1][1]).epsilon(1e-5));
        CHECK(rows[n - 1].l2 == doctest::Approx(want[n - 1][2]).epsilon(1e-5));
        CHECK(variation_distance_worst(friend_chain(), n) == rows[n - 1].d_star);
        CHECK(separation_distance_worst(friend_chain(), n) == rows[n - 1].s_star);
        CHECK(l2_distance_worst(friend_chain(), n) == rows[n - 1].l2);
    }
}

TEST_CASE("big-friend distance table") {
    const double want[9][3] = {
        {0.978260870, 1.000000000, 6.708203932},
        {0.713164251, 1.000000000, 2.976805051},
        {0.519860440, 1.000000000, 1.868129416},
        {0.339998211, 1.000000000, 1.227973132},
        {0.241811948, 0.826967593, 0.826668254},
        {0.167629246, 0.681257353, 0.562909537},
        {0.124584080, 0.460533325, 0.386680463},
        {0.084957539, 0.391495008, 0.266421189},
        {0.057869923, 0.272216695, 0.183465492}};
    const auto rows = distance_report(big_chain(), 9);
    for (int n = 1; n <= 9; ++n) {
        CHECK(rows[n - 1].d_star == doctest::Approx(want[n - 1][0]).epsilon(1e-5));
        CHECK(rows[n - 1].s_star == doctest::Approx(want[n - 1][1]).epsilon(1e-5));
        CHECK(rows[n - 1].l2 == doctest::Approx(want[n - 1][2]).epsilon(1e-5));
    }
}

TEST_CASE("lazy-walk variation distance is dyadic") {
    const double want[9] = {0.5, 0.25, 0.25, 0.125, 0.125, 0.0625, 0.0625,
                            0.03125, 0.03125};
    for (int n = 1; n <= 9; ++n)
        CHECK(variation_distance_worst(lazy_chain(), n) ==
              doctest::Approx(want[n - 1]).epsilon(1e-12));
}

TEST_CASE("separation dominates variation and both decay monotonically") {
    const auto rows = distance_report(friend_chain(), 12);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].s_star >= rows[i].d_star);
        if (i > 0) {
            CHECK(rows[i].d_star <= rows[i - 1].d_star);
            CHECK(rows[i].s_star <= rows[i - 1].s_star);
            CHECK(rows[i].l2 <= rows[i - 1].l2);
        }
    }
}

TEST_CASE("lazy-walk distances lie slightly below the friend-chain values") {
    for (int n = 2; n <= 9; ++n)
        CHECK(variation_distance_worst(lazy_chain(), n) <
              variation_distance_worst(friend_chain(), n));
}

TEST_CASE("occupancy means over eight games, initial game included") {
    CHECK(expected_occupancy(friend_chain(), "1T2", 8, team_states()) ==
          doctest::Approx(3.772645443).epsilon(1e-5));
    CHECK(expected_occupancy(friend_chain(), "1T2", 8, opponent_states()) ==
          doctest::Approx(1.802993944).epsilon(1e-5));
    CHECK(expected_occupancy(friend_chain(), "2O1", 8, opponent_states()) ==
          doctest::Approx(3.059280926).epsilon(1e-5));
    CHECK(expected_occupancy(friend_chain(), "1+", 8, opponent_states()) ==
          doctest::Approx(1.606978917).epsilon(1e-5));
    CHECK(expected_occupancy(friend_chain(), "2-", 8, team_states()) ==
          doctest::Approx(1.103177021).epsilon(1e-5));
    CHECK(expected_occupancy(friend_chain(), "1T2", 1, team_states()) == 1.0);
    CHECK_THROWS_AS(expected_occupancy(friend_chain(), "9Z9", 8, team_states()),
                    UnknownState);
}

TEST_CASE("occupancy tables are invariant under index reversal") {
    const auto mean = [&](const std::string& s, const StateSet& target) {
        return expected_occupancy(friend_chain(), s, 8, target);
    };
    for (const StateSet* target : {&team_states(), &opponent_states()}) {
        for (const char* prefix : {"1T", "1O", "2T", "2O"}) {
            const int lo = prefix[1] == 'T' ? 2 : 1;
            for (int k = lo; k <= 6; ++k) {
                const int mirror = k == 1 ? 1 : 8 - k;  // 2<->6, 3<->5
                if (mirror < lo || mirror > 6) continue;
                CHECK(mean(prefix + std::to_string(k), *target) ==
                      doctest::Approx(mean(prefix + std::to_string(mirror), *target))
                          .epsilon(1e-12));
            }
        }
        CHECK(mean("1-", *target) == doctest::Approx(mean("2+", *target)).epsilon(1e-12));
    }
}

TEST_CASE("never probabilities over eight games") {
    CHECK(never_probability(friend_chain(), "1+", 8, team_states()) ==
          doctest::Approx(0.403025602).epsilon(1e-5));
    CHECK(never_probability(friend_chain(), "2-", 8, team_states()) ==
          doctest::Approx(0.392631743).epsilon(1e-5));
    CHECK(never_probability(friend_chain(), "2T2", 8, opponent_states()) ==
          doctest::Approx(0.168274189).epsilon(1e-5));
    CHECK(never_probability(friend_chain(), "1O1", 8, opponent_states()) == 0.0);
    CHECK(never_probability(friend_chain(), "1T4", 8, opponent_states()) == 0.0);
    CHECK(never_probability(friend_chain(), "1T2", 8, opponent_states()) ==
          doctest::Approx(0.140824302).epsilon(1e-5));
}

TEST_CASE("time to leave the same team is geometric with p = 1/3, 2/3, 1") {
    const StateSet& stay = team_states();
    const struct {
        const char* start;
        Rational p;
    } cases[] = {{"1T2", Rational(1, 3)}, {"1T3", Rational(2, 3)}, {"1T4", Rational(1)},
                 {"2T2", Rational(1, 3)}, {"2T5", Rational(2, 3)}, {"2T6", Rational(1, 3)}};
    for (const auto& c : cases) {
        const auto dist = exit_time_distribution(friend_chain(), c.start, stay, 12);
        Rational geometric = c.p;
        for (const Rational& mass : dist) {
            CHECK(mass == geometric);
            geometric *= (1 - c.p);
        }
    }
}

TEST_CASE("expected games until the players split up") {
    const StateSet target = complement_of(friend_chain(), team_states());
    CHECK(expected_hitting_time(friend_chain(), "1T2", target) == Rational(3));
    CHECK(expected_hitting_time(friend_chain(), "2T2", target) == Rational(3));
    CHECK(expected_hitting_time(friend_chain(), "1T3", target) == Rational(3, 2));
    CHECK(expected_hitting_time(friend_chain(), "1T5", target) == Rational(3, 2));
    CHECK(expected_hitting_time(friend_chain(), "1T4", target) == Rational(1));
    CHECK(expected_hitting_time(friend_chain(), "1T6", target) == Rational(3));
    CHECK(expected_hitting_time(friend_chain(), "1T2", {"1T2"}) == Rational(0));
}

TEST_CASE("unreachable targets raise instead of looping") {
    ReducedChain two;
    two.states = {"a", "b"};
    two.P = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    two.pi = {Rational(1, 2), Rational(1, 2)};
    CHECK_THROWS_AS(expected_hitting_time(two, "a", {"b"}), Unreachable);
}

TEST_CASE("same team before opposite team, from the cross-court starts") {
    const StateSet& goal = team_states();
    const StateSet& fail = opponent_states();
    CHECK(first_passage_probability(friend_chain(), "1+", goal, fail) == Rational(3, 11));
    CHECK(first_passage_probability(friend_chain(), "1-", goal, fail) == Rational(4, 11));
    CHECK(first_passage_probability(friend_chain(), "2+", goal, fail) == Rational(4, 11));
    CHECK(first_passage_probability(friend_chain(), "2-", goal, fail) == Rational(1, 11));
    CHECK(first_passage_probability(friend_chain(), "1T3", goal, fail) == Rational(1));
    CHECK(first_passage_probability(friend_chain(), "2O4", goal, fail) == Rational(0));
    CHECK_THROWS_AS(first_passage_probability(friend_chain(), "1+", goal, goal),
                    std::invalid_argument);
}

TEST_CASE("fundamental matrix identities") {
    const RationalMatrix z = fundamental_matrix(friend_chain());
    for (const auto& row : z) {
        Rational sum = 0;
        for (const Rational& v : row) sum += v;
        CHECK(sum == 1);
    }
    const auto& pi = friend_chain().pi;
    for (std::size_t j = 0; j < 26; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < 26; ++i) s += pi[i] * z[i][j];
        CHECK(s == pi[j]);
    }
}

TEST_CASE("mean hitting times derived from the fundamental matrix") {
    const RationalMatrix z = fundamental_matrix(friend_chain());
    const auto& chain = friend_chain();
    for (const std::string target : {"1T2", "2O4", "1+"}) {
        const int j = chain.index_of(target);
        for (const std::string start : {"1-", "2T3", "1O5", "2+"}) {
            const int i = chain.index_of(start);
            const Rational via_z = (z[j][j] - z[i][j]) / chain.pi[j];
            CHECK(via_z == expected_hitting_time(chain, start, {target}));
        }
    }
}

TEST_CASE("independent random-teams baselines") {
    CHECK(independent_baseline(BaselineEvent::NeverOpposite, 8) ==
          doctest::Approx(0.1205168).epsilon(1e-7));
    CHECK(independent_baseline(BaselineEvent::NeverSame, 8) ==
          doctest::Approx(0.1798095).epsilon(1e-7));
    CHECK(independent_baseline(BaselineEvent::NeverOpposite, 1) == 1.0);
    CHECK(independent_baseline(BaselineEvent::NeverSame, 1) == 1.0);
}

TEST_CASE("never tables share the index-reversal symmetry") {
    const auto never_t = [&](const std::string& s) {
        return never_probability(friend_chain(), s, 8, team_states());
    };
    const auto never_o = [&](const std::string& s) {
        return never_probability(friend_chain(), s, 8, opponent_states());
    };
    for (const char* q : {"1", "2"}) {
        for (int k = 2; k <= 6; ++k) {
            const int mirror = 8 - k;
            CHECK(never_t(q + std::string("O") + std::to_string(k)) ==
                  doctest::Approx(never_t(q + std::string("O") + std::to_string(mirror)))
                      .epsilon(1e-12));
            CHECK(never_o(q + std::string("T") + std::to_string(k)) ==
                  doctest::Approx(never_o(q + std::string("T") + std::to_string(mirror)))
                      .epsilon(1e-12));
        }
    }
    CHECK(never_t("1-") == doctest::Approx(never_t("2+")).epsilon(1e-12));
    CHECK(never_o("1-") == doctest::Approx(never_o("2+")).epsilon(1e-12));
}

TEST_CASE("exact and floating n-step powers agree") {
    const RationalMatrix exact = n_step_matrix_exact(friend_chain(), 5);
    const Matrix approx = n_step_matrix(friend_chain(), 5);
    for (std::size_t i = 0; i < 26; ++i)
        for (std::size_t j = 0; j < 26; ++j)
            CHECK(approx[i][j] == doctest::Approx(to_double(exact[i][j])).epsilon(1e-12));
}

TEST_CASE("exit-time distribution requires a start inside the stay set") {
    CHECK_THROWS_AS(exit_time_distribution(friend_chain(), "1+", team_states(), 5),
                    std::invalid_argument);
}
