#include "courtmix/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "portable_shuffle.hpp"
#include <set>

namespace courtmix {

namespace {

std::array<int, 24> reference_seating() {
    std::array<int, 24> s{};
    std::iota(s.begin(), s.end(), 0);
    return s;
}

std::array<int, 24> swapped(int i, int j) {
    auto s = reference_seating();
    std::swap(s[i], s[j]);
    return s;
}

constexpr std::array<int, 6> kASlots = {0, 1, 2, 6, 7, 8};

void append_clean_rotation(std::vector<Token>& out, Quadrant q, int k) {
    k = ((k % 6) + 6) % 6;
    if (k == 0) return;
    const int unit = k >= 4 ? 5 : 1;
    const int reps = k >= 4 ? 6 - k : k;
    for (int r = 0; r < reps; ++r) {
        out.push_back(Token::rotation(q, unit));
        for (int e = 0; e < 4; ++e) out.push_back(Token::migration());
    }
}

}  // namespace

EffectResult verify_effect(const EffectAssertion& assertion) {
    const Sequence seq = parse(assertion.sequence);
    const ApplyResult applied = apply_sequence(Configuration::reference(), seq);
    EffectResult result;
    result.steps = applied.steps;
    for (int pos = 0; pos < kPlayers; ++pos)
        if (applied.configuration.player_at(pos) != assertion.expected[pos])
            result.diffs.push_back({pos, assertion.expected[pos],
                                    applied.configuration.player_at(pos)});
    result.pass = result.diffs.empty();
    return result;
}

const std::vector<EffectAssertion>& builtin_effect_assertions() {
    static const std::vector<EffectAssertion> assertions = [] {
        std::vector<EffectAssertion> v;
        v.push_back({"X",
                     {1, 0, 2, 4, 7, 8, 5, 3, 6, 9, 10, 11, 12, 13, 14, 15, 16, 17,
                      18, 19, 20, 21, 22, 23},
                     "trajectory of X"});
        v.push_back({"F", swapped(0, 1), "adjacent transposition"});
        v.push_back({"G", swapped(0, 2), "one-gap transposition"});
        v.push_back({"H", swapped(0, 8), "two-gap transposition"});
        v.push_back({"EEEE", reference_seating(), "identity move"});
        return v;
    }();
    return assertions;
}

Certificate verify_aperiodicity() {
    Certificate cert;
    cert.name = "aperiodicity";
    const Sequence aperiodic = parse("APERIODIC");

    EffectResult identity = verify_effect({"APERIODIC", reference_seating(), ""});
    cert.checks.push_back({"identity effect", identity.pass,
                           identity.pass ? "reference maps to itself"
                                         : std::to_string(identity.diffs.size()) +
                                               " positions differ",
                           identity.diffs});

    const int n = step_count(aperiodic);
    cert.checks.push_back({"odd step count", n == 995 && n % 2 == 1,
                           std::to_string(n) + " steps"});

    EffectResult four = verify_effect({"EEEE", reference_seating(), ""});
    cert.checks.push_back({"EEEE identity", four.pass && four.steps == 4,
                           "4-step identity"});

    cert.checks.push_back({"coprime lengths", std::gcd(n, 4) == 1,
                           "gcd(" + std::to_string(n) + ", 4) = " +
                               std::to_string(std::gcd(n, 4))});

    bool legal_steps = true;
    try {
        apply_sequence(Configuration::reference(), aperiodic);
    } catch (const IllegalStep&) {
        legal_steps = false;
    }
    cert.checks.push_back({"all steps legal", legal_steps,
                           legal_steps ? "every completed step obeys the rotation law"
                                       : "illegal step encountered"});

    cert.sequence_lengths = {{"EEEE", 4}, {"APERIODIC", n}};
    cert.pass = std::all_of(cert.checks.begin(), cert.checks.end(),
                            [](const CertificateCheck& c) { return c.pass; });
    return cert;
}

Sequence transpose_in_A(int pos_i, int pos_j) {
    const auto in_A = [](int p) {
        return std::find(kASlots.begin(), kASlots.end(), p) != kASlots.end();
    };
    if (pos_i == pos_j || !in_A(pos_i) || !in_A(pos_j))
        throw std::invalid_argument("positions must be two distinct slots of quadrant A");
    int si = static_cast<int>(slot_of_position(pos_i));
    int sj = static_cast<int>(slot_of_position(pos_j));
    int d = (sj - si + 6) % 6;
    if (d > 3) {
        std::swap(si, sj);
        d = 6 - d;
    }
    // base pairs: F swaps slots {5,0}, G swaps {4,0}, H swaps {0,3}
    const char* macro = d == 1 ? "F" : d == 2 ? "G" : "H";
    const int anchor = d == 1 ? 5 : d == 2 ? 4 : 0;
    const int k = (si - anchor + 6) % 6;

    Sequence seq;
    append_clean_rotation(seq.tokens, Quadrant::A, k);
    seq.tokens.push_back(Token::macro_ref(macro));
    append_clean_rotation(seq.tokens, Quadrant::A, (6 - k) % 6);
    return seq;
}

// ---------------------------------------------------------------------------
// Constructive planner. Emits whole steps (rotations + one migration each)
// while tracking the configuration; the result is re-verified independently
// through apply_sequence by callers.
namespace {

class Planner {
public:
    explicit Planner(const Configuration& c) : cfg_(c) {}

    Plan take_plan() && {
        Plan p;
        p.moves.tokens = std::move(tokens_);
        p.provenance = std::move(stages_);
        p.steps = steps_;
        return p;
    }

    const Configuration& configuration() const { return cfg_; }

    void run() {
        stage("procedure D", [&] { procedure(Quadrant::D, {21, 22, 23}); });
        stage("procedure C", [&] { procedure(Quadrant::C, {18, 19, 20}); });
        if (!players_home({15, 16, 17})) {
            stage("front row of D via B", [&] {
                procedure(Quadrant::B, {17, 16, 15});
                clean_rot(Quadrant::B, 3);
                mig(1);
            });
        }
        if (!players_home({12, 13, 14})) {
            stage("front row of C via B", [&] {
                protected_ = {15, 16, 17};
                procedure(Quadrant::B, {14, 13, 12});
                while (quad(17) != Quadrant::A) mig(1);
                clean_rot(Quadrant::B, 3);
                mig(2);
            });
        }
        protected_ = {12, 13, 14, 15, 16, 17};
        stage("back row of B", [&] {
            procedure(Quadrant::B, {5, 4, 3});
            while (pos(17) != 17) mig(1);
        });
        if (!players_home({9, 10, 11})) {
            stage("front row of B via A", [&] {
                // stopover targets in A's back row: 9 -> 2, 10 -> 1, 11 -> 0
                const std::array<std::pair<int, int>, 3> targets{
                    {{9, 2}, {10, 1}, {11, 0}}};
                for (const auto& [p, t] : targets)
                    if (quad(p) == Quadrant::A && pos(p) != t) transpose(pos(p), t);
                const auto placed = [&] {
                    return std::all_of(targets.begin(), targets.end(),
                                       [&](const auto& pt) { return pos(pt.first) == pt.second; });
                };
                if (!placed()) {
                    mig(3);  // front row of B to front row of A
                    for (const auto& [p, t] : targets)
                        if (pos(p) != t) transpose(pos(p), t);
                    mig(1);
                }
                while (quad(17) != Quadrant::B) mig(1);
                clean_rot(Quadrant::A, 3);
                mig(1);
            });
        }
        stage("fix A by transpositions", [&] {
            for (const int p : {0, 1, 2, 6, 7})
                if (pos(p) != p) transpose(pos(p), p);
        });
        if (cfg_ != Configuration::reference())
            throw std::logic_error("planner did not reach the reference state");
    }

private:
    Configuration cfg_;
    std::vector<Token> tokens_;
    std::vector<PlanStage> stages_;
    std::set<int> protected_;  // placed front-row players, never rotated
    int steps_ = 0;

    template <typename F>
    void stage(const std::string& label, F&& body) {
        const std::size_t begin = tokens_.size();
        body();
        if (tokens_.size() > begin)
            stages_.push_back({label, begin, tokens_.size()});
    }

    int pos(int player) const { return cfg_.position_of(player); }
    Quadrant quad(int player) const { return cfg_.quadrant_of(player); }
    int slot_index(int player) const { return static_cast<int>(cfg_.slot_of(player)); }
    bool in_back(int player) const { return !is_front_slot(cfg_.slot_of(player)); }

    bool players_home(std::initializer_list<int> players) const {
        return std::all_of(players.begin(), players.end(),
                           [&](int p) { return pos(p) == p; });
    }

    bool front_has_protected(Quadrant q, const std::set<int>& extra) const {
        for (Slot s : {Slot::FrontRight, Slot::FrontCenter, Slot::FrontLeft}) {
            const int p = cfg_.player_at(slot_position(q, s));
            if (protected_.count(p) || extra.count(p)) return true;
        }
        return false;
    }

    void emit_step(const Step& s) {
        if (!s.legal()) throw std::logic_error("planner produced an illegal step");
        for (Quadrant q : kQuadrants)
            if (s[q] != 0) tokens_.push_back(Token::rotation(q, s[q]));
        tokens_.push_back(Token::migration());
        cfg_ = apply_step(cfg_, s);
        if (++steps_ > 1000000)
            throw std::logic_error("plan exceeded the step safety cap");
    }

    void mig(int n) {
        for (int i = 0; i < n; ++i) emit_step({});
    }

    /// One rotation of q (by `unit` = 1 or 5) bundled with its migration,
    /// first migrating until q's front row is free of protected or in-flight
    /// players.
    void rot_step(Quadrant q, int unit, const std::set<int>& inflight = {}) {
        int guard = 0;
        while (front_has_protected(q, inflight)) {
            mig(1);
            if (++guard > 4) throw std::logic_error("cannot clear front row");
        }
        Step s;
        s[q] = unit;
        emit_step(s);
    }

    /// Net rotation of q by k with no net migration (the BEEEE device).
    void clean_rot(Quadrant q, int k, const std::set<int>& inflight = {}) {
        k = ((k % 6) + 6) % 6;
        if (k == 0) return;
        const int unit = k >= 4 ? 5 : 1;
        const int reps = k >= 4 ? 6 - k : k;
        for (int r = 0; r < reps; ++r) {
            rot_step(q, unit, inflight);
            mig(3);
        }
    }

    /// Bring `player` to the front-right slot of quadrant `target`, touring
    /// through A -- the one quadrant that is always safe to rotate -- to set
    /// the slot.
    void fetch_via_A(int player, Quadrant target) {
        if (pos(player) == slot_position(target, Slot::FrontRight)) return;
        while (in_back(player)) rot_step(quad(player), 1);
        while (quad(player) != Quadrant::A) mig(1);
        clean_rot(Quadrant::A, (slot_index(player) - 1 + 6) % 6);
        while (quad(player) != target) mig(1);
    }

    /// Move players (a, b, c) to (back-left, back-center, back-right) of P.
    void procedure(Quadrant P, std::array<int, 3> players) {
        const auto [a, b, c] = players;
        const int posBR = slot_position(P, Slot::BackRight);
        const int posBC = slot_position(P, Slot::BackCenter);
        const int posBL = slot_position(P, Slot::BackLeft);
        const int posFR = slot_position(P, Slot::FrontRight);
        if (pos(a) == posBL && pos(b) == posBC && pos(c) == posBR) return;

        if (pos(a) != posBR) {            // park a at the back right
            fetch_via_A(a, P);
            rot_step(P, 1);
        }
        if (pos(b) != posFR) {            // b to the front right, a parked
            if (quad(b) != P) {
                fetch_via_A(b, P);
            } else {
                while (in_back(b)) rot_step(P, 1);
                if (quad(b) == P) mig(1);
                while (quad(b) != Quadrant::A) mig(1);
                clean_rot(Quadrant::A, (slot_index(b) - 1 + 6) % 6);
                while (pos(a) != posBR) rot_step(P, 5, {b});
                while (quad(b) != P) mig(1);
            }
        }
        rot_step(P, 1);                   // (a,b) to (back center, back right)
        if (pos(c) != posFR) {            // c to the front right, a and b parked
            if (quad(c) != P) {
                fetch_via_A(c, P);
            } else {
                while (in_back(c)) rot_step(P, 1);
                if (quad(c) == P) mig(1);
                while (quad(c) != Quadrant::A) mig(1);
                clean_rot(Quadrant::A, (slot_index(c) - 1 + 6) % 6);
                while (pos(a) != posBC) rot_step(P, 5, {c});
                while (quad(c) != P) mig(1);
            }
        }
        rot_step(P, 1);                   // (a,b,c) to the back row
        if (pos(a) != posBL || pos(b) != posBC || pos(c) != posBR)
            throw std::logic_error("procedure did not place its back row");
    }

    void transpose(int pos_i, int pos_j) {
        const Sequence seq = expand(transpose_in_A(pos_i, pos_j));
        Step pending;
        for (const Token& t : seq.tokens) {
            if (t.kind == Token::Kind::Rotation) {
                pending[t.quadrant] = (pending[t.quadrant] + t.exponent) % 6;
            } else {
                emit_step(pending);
                // emit_step already appended rotation tokens + migration
                pending = Step{};
            }
        }
        if (pending != Step{})
            throw std::logic_error("transposition left pending rotations");
    }
};

}  // namespace

Plan plan_to_reference(const Configuration& c) {
    Planner planner(c);
    planner.run();
    return std::move(planner).take_plan();
}

Certificate verify_irreducibility_suite(std::uint64_t seed, int random_configurations) {
    Certificate cert;
    cert.name = "irreducibility";
    cert.seed = seed;

    for (const EffectAssertion& a : builtin_effect_assertions()) {
        const EffectResult r = verify_effect(a);
        cert.checks.push_back({"effect of " + a.sequence, r.pass,
                               r.pass ? std::to_string(r.steps) + " steps"
                                      : std::to_string(r.diffs.size()) + " diffs",
                               r.diffs});
    }

    const auto verify_plan = [](const Configuration& start) {
        const Plan plan = plan_to_reference(start);
        const ApplyResult replay = apply_sequence(start, plan.moves);
        return replay.configuration == Configuration::reference() &&
               replay.pending == Step{};
    };

    bool transpositions_ok = true;
    for (std::size_t i = 0; i < kASlots.size() && transpositions_ok; ++i)
        for (std::size_t j = i + 1; j < kASlots.size() && transpositions_ok; ++j) {
            auto seating = reference_seating();
            std::swap(seating[kASlots[i]], seating[kASlots[j]]);
            const auto start = Configuration::from_seating(seating);
            const Sequence t = transpose_in_A(kASlots[i], kASlots[j]);
            const ApplyResult direct = apply_sequence(start, t);
            transpositions_ok = direct.configuration == Configuration::reference() &&
                                verify_plan(start);
        }
    cert.checks.push_back({"15 transpositions in A", transpositions_ok,
                           "direct sequences and full plans"});

    bool reference_ok = false;
    {
        const Plan p = plan_to_reference(Configuration::reference());
        reference_ok = p.steps == 0 && verify_plan(Configuration::reference());
    }
    cert.checks.push_back({"plan from reference", reference_ok, "empty plan"});

    std::mt19937_64 rng(seed);
    int failures = 0;
    for (int t = 0; t < random_configurations; ++t) {
        std::array<int, 24> seating = reference_seating();
        detail::portable_shuffle(seating, rng);
        if (!verify_plan(Configuration::from_seating(seating))) ++failures;
    }
    cert.checks.push_back({"random configurations", failures == 0,
                           std::to_string(random_configurations - failures) + "/" +
                               std::to_string(random_configurations) + " plans verified"});

    const std::array<std::pair<const char*, int>, 4> lengths{
        {{"X", 20}, {"F", 68}, {"G", 212}, {"H", 340}}};
    bool lengths_ok = true;
    std::string detail;
    for (const auto& [name, expected] : lengths) {
        const int n = step_count(parse(name));
        lengths_ok = lengths_ok && n == expected;
        cert.sequence_lengths.emplace_back(name, n);
        detail += std::string(name) + ": " + std::to_string(n) + " ";
    }
    cert.checks.push_back({"sequence lengths", lengths_ok, detail});

    cert.pass = std::all_of(cert.checks.begin(), cert.checks.end(),
                            [](const CertificateCheck& c) { return c.pass; });
    return cert;
}

}  // namespace courtmix
