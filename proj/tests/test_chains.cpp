#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "courtmix/random_dynamics.hpp"
#include "courtmix/reduced_chain.hpp"

#include <numeric>
#include <random>

using namespace courtmix;

namespace {

const ReducedChain& friend_chain() {
    static const ReducedChain chain = build_friend_chain();
    return chain;
}

const ReducedChain& big_chain() {
    static const ReducedChain chain = build_big_friend_chain();
    return chain;
}

Rational entry(const ReducedChain& c, const std::string& from, const std::string& to) {
    return c.P[c.index_of(from)][c.index_of(to)];
}

}  // namespace

TEST_CASE("state label order follows the tabulated convention") {
    const auto& f = friend_state_labels();
    REQUIRE(f.size() == 26);
    CHECK(f[0] == "1+");
    CHECK(f[1] == "1-");
    CHECK(f[2] == "1T2");
    CHECK(f[7] == "1O1");
    CHECK(f[13] == "2T2");
    CHECK(f[24] == "2+");
    CHECK(f[25] == "2-");
    CHECK(big_friend_state_labels().size() == 52);
    CHECK(big_friend_state_labels()[26] == "3+");
    CHECK(big_friend_state_labels()[51] == "4-");
}

TEST_CASE("projection fixtures from the relative-position chart") {
    const Configuration ref = Configuration::reference();
    const auto& labels = friend_state_labels();
    // ego player 20 sits at the back right of C (first quadrant)
    CHECK(labels[project_friend_state(ref, 20, 0)] == "1O1");
    CHECK(labels[project_friend_state(ref, 20, 14)] == "1T2");
    CHECK(labels[project_friend_state(ref, 20, 19)] == "1T6");
    CHECK(labels[project_friend_state(ref, 20, 8)] == "1O4");
    CHECK(labels[project_friend_state(ref, 20, 3)] == "1+");
    CHECK(labels[project_friend_state(ref, 20, 21)] == "1-");
    // ego player 7 at the front center of A (second quadrant)
    CHECK(labels[project_friend_state(ref, 7, 8)] == "2T2");
    CHECK(labels[project_friend_state(ref, 7, 13)] == "2O1");
    CHECK(labels[project_friend_state(ref, 7, 20)] == "2O5");
    CHECK(labels[project_friend_state(ref, 7, 9)] == "2+");
    CHECK(labels[project_friend_state(ref, 7, 23)] == "2-");
    CHECK_THROWS_AS(project_friend_state(ref, 7, 7), SamePlayer);
}

TEST_CASE("ego on the right court is normalized by the half turn") {
    const Configuration ref = Configuration::reference();
    // ego 3 and friend 21 sit in B and D; the half turn carries them to C and A
    const int idx = project_friend_state(ref, 3, 21);
    CHECK(friend_state_labels()[idx][0] == '1');
    std::mt19937_64 rng(4);
    for (int t = 0; t < 300; ++t) {
        std::array<int, 24> seating{};
        std::iota(seating.begin(), seating.end(), 0);
        std::shuffle(seating.begin(), seating.end(), rng);
        const Configuration c = Configuration::from_seating(seating);
        const int ego = static_cast<int>(rng() % 24);
        int fr = static_cast<int>(rng() % 24);
        if (fr == ego) fr = (fr + 1) % 24;
        CHECK(project_friend_state(c, ego, fr) ==
              project_friend_state(half_turn(c), ego, fr));
    }
}

TEST_CASE("derived friend matrix matches the tabulated fixture exactly") {
    CHECK(compare_friend_fixture(friend_chain()).empty());
}

TEST_CASE("fixture comparison reports discrepancies rather than hiding them") {
    ReducedChain corrupted = friend_chain();
    corrupted.P[2][2] += Rational(1, 36);
    const auto diffs = compare_friend_fixture(corrupted);
    REQUIRE(diffs.size() == 1);
    CHECK(diffs[0].row == "1T2");
    CHECK(diffs[0].col == "1T2");
}

TEST_CASE("tabulated spot values") {
    CHECK(entry(friend_chain(), "1T2", "1T2") == Rational(1, 3));
    CHECK(entry(friend_chain(), "1T2", "1O2") == Rational(1, 6));
    CHECK(entry(friend_chain(), "1O1", "2+") == Rational(10, 24));
    CHECK(entry(friend_chain(), "1+", "2-") == Rational(1, 4));
    CHECK(entry(friend_chain(), "1-", "1T4") == Rational(3, 36));
}

TEST_CASE("rows sum to one and pi is exactly stationary") {
    for (const ReducedChain* c : {&friend_chain(), &big_chain()}) {
        CHECK(c->rows_sum_to_one());
        CHECK(c->pi_is_stationary());
    }
    CHECK(friend_chain().pi[friend_chain().index_of("1+")] == Rational(6, 46));
    CHECK(friend_chain().pi[friend_chain().index_of("2O3")] == Rational(1, 46));
    CHECK(big_chain().pi[big_chain().index_of("3+")] == Rational(6, 92));
    CHECK(big_chain().pi[big_chain().index_of("4T5")] == Rational(1, 92));
}

TEST_CASE("big friend chain is the four-block assembly of the friend chain") {
    const auto& f = friend_chain().P;
    const auto& b = big_chain().P;
    const auto block_equal = [&](int bi, int bj, int si, int sj) {
        for (int i = 0; i < 13; ++i)
            for (int j = 0; j < 13; ++j)
                if (b[13 * bi + i][13 * bj + j] != f[13 * si + i][13 * sj + j])
                    return false;
        return true;
    };
    CHECK(block_equal(0, 0, 0, 0));  // T11
    CHECK(block_equal(0, 1, 0, 1));  // T12
    CHECK(block_equal(1, 1, 1, 1));  // T22
    CHECK(block_equal(1, 2, 1, 0));  // T21
    CHECK(block_equal(2, 2, 0, 0));
    CHECK(block_equal(2, 3, 0, 1));
    CHECK(block_equal(3, 0, 1, 0));
    CHECK(block_equal(3, 3, 1, 1));
    // and the remaining eight blocks vanish
    const bool keep[4][4] = {{true, true, false, false},
                             {false, true, true, false},
                             {false, false, true, true},
                             {true, false, false, true}};
    for (int bi = 0; bi < 4; ++bi)
        for (int bj = 0; bj < 4; ++bj) {
            if (keep[bi][bj]) continue;
            for (int i = 0; i < 13; ++i)
                for (int j = 0; j < 13; ++j)
                    CHECK(b[13 * bi + i][13 * bj + j] == 0);
        }
}

TEST_CASE("direct enumeration of the 52-state chain equals the block assembly") {
    const auto& chain = big_chain();
    std::array<int, 24> identity{};
    std::iota(identity.begin(), identity.end(), 0);
    for (std::size_t si = 0; si < chain.states.size(); ++si) {
        const auto rep = make_representative(chain.states[si], 0, identity);
        RationalVector row(52, 0);
        for (const StepOutcome& o : enumerate_step_distribution())
            row[project_big_friend_state(apply_step(rep.configuration, o.step),
                                         rep.ego, rep.friend_player)] += o.probability;
        CHECK(row == chain.P[si]);
    }
}

TEST_CASE("merging opposite-quadrant states recovers the friend chain") {
    // half-turn lumping: friend(i, j) = big(i, j) + big(i, tau(j)) for rows in
    // ego quadrants 1 and 2, where tau swaps quadrant 1<->3 and 2<->4
    const auto& f = friend_chain();
    const auto& b = big_chain();
    const auto tau = [&](int j) {
        std::string s = b.states[j];
        switch (s[0]) {
            case '1': s[0] = '3'; break;
            case '2': s[0] = '4'; break;
            case '3': s[0] = '1'; break;
            default: s[0] = '2';
        }
        return b.index_of(s);
    };
    for (int i = 0; i < 26; ++i)
        for (int j = 0; j < 26; ++j)
            CHECK(f.P[i][j] == b.P[i][j] + b.P[i][tau(j)]);
}

TEST_CASE("lazy cyclic walk") {
    const ReducedChain lazy = lazy_cyclic_walk_chain();
    CHECK(entry(lazy, "A", "A") == Rational(1, 2));
    CHECK(entry(lazy, "A", "B") == Rational(1, 2));
    CHECK(entry(lazy, "A", "C") == 0);
    CHECK(lazy.pi_is_stationary());
    CHECK(lazy.rows_sum_to_one());
}

TEST_CASE("friend chain projected onto ego's quadrant is a 2-state lazy walk") {
    // ego advances C -> A -> (B, turned back to C) ... : from either quadrant
    // label the walk stays w.p. 1/2 and advances w.p. 1/2
    const auto& f = friend_chain();
    for (int i = 0; i < 26; ++i) {
        Rational to1 = 0, to2 = 0;
        for (int j = 0; j < 26; ++j)
            (f.states[j][0] == '1' ? to1 : to2) += f.P[i][j];
        CHECK(to1 == Rational(1, 2));
        CHECK(to2 == Rational(1, 2));
    }
}

TEST_CASE("lumpability holds for 26 and 52 states with several representatives") {
    const auto friend_report =
        check_lumpability(project_friend_state, friend_chain(), 4, 2024, true);
    CHECK(friend_report.pass());
    CHECK(friend_report.states_checked == 26);
    const auto big_report = check_lumpability(project_big_friend_state, big_chain(), 3, 2025);
    CHECK(big_report.pass());
    CHECK(big_report.states_checked == 52);
}

TEST_CASE("a projection that skips the half-turn normalization fails") {
    // negative control: for an ego on the right court, fold the quadrant
    // number correctly but keep the left-court +/- orientation instead of
    // the turned one
    const StateProjection wrong = [](const Configuration& c, int ego, int fr) {
        const std::string& label =
            big_friend_state_labels()[project_big_friend_state(c, ego, fr)];
        std::string folded = label;
        if (label[0] == '3' || label[0] == '4') {
            folded[0] = label[0] == '3' ? '1' : '2';
            if (folded[1] == '+')
                folded[1] = '-';
            else if (folded[1] == '-')
                folded[1] = '+';
        }
        return friend_chain().index_of(folded);
    };
    const auto report = check_lumpability(wrong, friend_chain(), 4, 7, true);
    CHECK_FALSE(report.pass());
}

TEST_CASE("unknown state names are rejected") {
    CHECK_THROWS_AS(friend_chain().index_of("5T9"), UnknownState);
}
