#include "cli.hpp"

#include "courtmix/analytics.hpp"
#include "courtmix/json_io.hpp"
#include "courtmix/random_dynamics.hpp"
#include "courtmix/reduced_chain.hpp"
#include "courtmix/sequence.hpp"
#include "courtmix/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace courtmix::cli {

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("COURTMIX_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return 0;
}

ReducedChain chain_by_name(const std::string& name) {
    if (name == "friend") return build_friend_chain();
    if (name == "big-friend") return build_big_friend_chain();
    if (name == "lazy") return lazy_cyclic_walk_chain();
    throw CLI::ValidationError("--chain", "unknown chain: " + name);
}

Configuration load_state(const std::optional<std::string>& path, std::ostream& err) {
    if (!path) return Configuration::reference();
    std::ifstream in(*path);
    if (!in) {
        err << "cannot open state file: " << *path << "\n";
        throw std::invalid_argument("unreadable state file");
    }
    Json j;
    in >> j;
    return configuration_from_json(j);
}

struct TableOptions {
    std::string format = "csv";
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int run_tables_distances(std::ostream& out, const std::string& chain_name, int max_n,
                         const std::string& format) {
    const ReducedChain chain = chain_by_name(chain_name);
    const auto rows = distance_report(chain, max_n);
    if (format == "json")
        emit(out, distance_rows_to_json(rows));
    else
        out << distance_rows_to_csv(rows);
    return 0;
}

int run_tables_mean_games(std::ostream& out, int horizon, const std::string& format) {
    const ReducedChain chain = build_friend_chain();
    const StateSet t = states_matching(chain, 'T');
    const StateSet o = states_matching(chain, 'O');
    std::vector<OccupancyRow> rows;
    for (const std::string& s : chain.states)
        rows.push_back({s, expected_occupancy(chain, s, horizon, o),
                        expected_occupancy(chain, s, horizon, t)});
    if (format == "json")
        emit(out, occupancy_to_json(rows, horizon));
    else
        out << occupancy_to_csv(rows);
    return 0;
}

int run_tables_never(std::ostream& out, const std::string& event, int horizon,
                     const std::string& format) {
    const ReducedChain chain = build_friend_chain();
    const StateSet avoid = states_matching(chain, event == "opponent" ? 'O' : 'T');
    std::vector<NeverRow> rows;
    for (const std::string& s : chain.states)
        rows.push_back({s, never_probability(chain, s, horizon, avoid)});
    if (format == "json")
        emit(out, never_to_json(rows, event, horizon));
    else
        out << never_to_csv(rows);
    return 0;
}

int run_tables_baselines(std::ostream& out, int games, const std::string& format) {
    const double no = independent_baseline(BaselineEvent::NeverOpposite, games);
    const double ns = independent_baseline(BaselineEvent::NeverSame, games);
    if (format == "json") {
        Json j;
        j["games"] = games;
        j["never_opposite"] = round_sig(no, 7);
        j["never_same"] = round_sig(ns, 7);
        emit(out, j);
    } else {
        char buf[96];
        std::snprintf(buf, sizeof buf,
                      "event,probability\nnever_opposite,%.7f\nnever_same,%.7f\n", no, ns);
        out << buf;
    }
    return 0;
}

int run_verify(std::ostream& out, const std::string& what, std::uint64_t seed) {
    Json report = Json::array();
    bool all_pass = true;
    const auto add = [&](const Certificate& c) {
        report.push_back(certificate_to_json(c));
        all_pass = all_pass && c.pass;
    };
    if (what == "aperiodicity" || what == "all") add(verify_aperiodicity());
    if (what == "irreducibility" || what == "all")
        add(verify_irreducibility_suite(seed));
    if (what == "friend-matrix" || what == "all") {
        const ReducedChain chain = build_friend_chain();
        const auto discrepancies = compare_friend_fixture(chain);
        Certificate c;
        c.name = "friend-matrix";
        c.pass = discrepancies.empty();
        c.checks.push_back(
            {"derived matrix vs tabulated fixture", discrepancies.empty(),
             discrepancies.empty()
                 ? "entrywise equal as exact rationals"
                 : std::to_string(discrepancies.size()) + " entries differ"});
        for (const auto& d : discrepancies)
            c.checks.push_back({"entry " + d.row + " -> " + d.col, false,
                                "tabulated " + d.tabulated.str() + ", derived " +
                                    d.derived.str()});
        add(c);
    }
    if (what == "lumpability" || what == "all") {
        Certificate c;
        c.name = "lumpability";
        c.seed = seed;
        const ReducedChain f = build_friend_chain();
        const auto rf = check_lumpability(project_friend_state, f, 4, seed, true);
        c.checks.push_back({"26-state projection", rf.pass(),
                            std::to_string(rf.states_checked) + " states x " +
                                std::to_string(rf.representatives) + " representatives"});
        const ReducedChain b = build_big_friend_chain();
        const auto rb = check_lumpability(project_big_friend_state, b, 4, seed);
        c.checks.push_back({"52-state projection", rb.pass(),
                            std::to_string(rb.states_checked) + " states x " +
                                std::to_string(rb.representatives) + " representatives"});
        c.pass = rf.pass() && rb.pass();
        add(c);
    }
    emit(out, report);
    return all_pass ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"team-mixing chain toolkit"};
    app.require_subcommand(1);
    std::uint64_t seed = default_seed();

    // tables
    auto* tables = app.add_subcommand("tables", "emit the numeric tables");
    tables->require_subcommand(1);
    std::string chain_name = "friend", format = "csv", event = "opponent";
    int max_n = 9, horizon = 8, games = 8;

    auto* distances = tables->add_subcommand("distances", "distance to stationarity per step");
    distances->add_option("--chain", chain_name)->check(CLI::IsMember({"friend", "big-friend", "lazy"}));
    distances->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
    distances->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* mean_games = tables->add_subcommand("mean-games", "mean games with/against over a horizon");
    mean_games->add_option("--horizon", horizon)->check(CLI::PositiveNumber);
    mean_games->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* never = tables->add_subcommand("never", "probability of never being opponent/teammate");
    never->add_option("--event", event)->check(CLI::IsMember({"opponent", "teammate"}));
    never->add_option("--horizon", horizon)->check(CLI::PositiveNumber);
    never->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* baselines = tables->add_subcommand("baselines", "independent random-teams baselines");
    baselines->add_option("--games", games)->check(CLI::PositiveNumber);
    baselines->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo observables");
    simulate->require_subcommand(1);
    auto* encounter = simulate->add_subcommand("encounter-all",
                                               "P(ego meets all 23 players)");
    std::string court = "first";
    long long trials = 1000000;
    int workers = 1;
    int sim_games = 8;
    encounter->add_option("--court", court)->check(CLI::IsMember({"first", "second"}));
    encounter->add_option("--games", sim_games)->check(CLI::PositiveNumber);
    encounter->add_option("--trials", trials)->check(CLI::PositiveNumber);
    encounter->add_option("--seed", seed);
    encounter->add_option("--workers", workers)->check(CLI::PositiveNumber);

    // apply
    auto* apply = app.add_subcommand("apply", "apply a move sequence to a state");
    std::string sequence_text;
    std::optional<std::string> state_path;
    bool pretty = false;
    apply->add_option("--sequence", sequence_text)->required();
    apply->add_option("--state", state_path);
    apply->add_flag("--pretty", pretty, "render the four-quadrant grid");

    // plan
    auto* plan_cmd = app.add_subcommand("plan", "construct a route to the reference state");
    std::optional<std::string> plan_state_path;
    bool emit_sequence = false;
    plan_cmd->add_option("--state", plan_state_path);
    plan_cmd->add_flag("--emit-sequence", emit_sequence);

    // verify
    auto* verify = app.add_subcommand("verify", "machine-checked certificates");
    std::string what = "all";
    verify->add_option("what", what)
        ->check(CLI::IsMember({"all", "irreducibility", "aperiodicity", "friend-matrix",
                               "lumpability"}));
    verify->add_option("--seed", seed);

    // export-chain
    auto* export_chain = app.add_subcommand("export-chain", "emit a reduced chain");
    std::string export_name = "friend", export_format = "json";
    export_chain->add_option("--chain", export_name)
        ->check(CLI::IsMember({"friend", "big-friend", "lazy"}));
    export_chain->add_option("--format", export_format)->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (distances->parsed()) return run_tables_distances(out, chain_name, max_n, format);
        if (mean_games->parsed()) return run_tables_mean_games(out, horizon, format);
        if (never->parsed()) return run_tables_never(out, event, horizon, format);
        if (baselines->parsed()) return run_tables_baselines(out, games, format);
        if (encounter->parsed()) {
            const auto e = estimate_encounter_all(
                court == "first" ? EgoCourt::First : EgoCourt::Second, sim_games,
                trials, seed, workers);
            emit(out, estimate_to_json(e));
            return 0;
        }
        if (apply->parsed()) {
            const Configuration start = load_state(state_path, err);
            const ApplyResult r = apply_sequence(start, parse(sequence_text));
            if (pretty)
                out << pretty_grid(r.configuration);
            else
                out << configuration_to_json(r.configuration).dump() << "\n";
            return 0;
        }
        if (plan_cmd->parsed()) {
            const Configuration start = load_state(plan_state_path, err);
            const Plan plan = plan_to_reference(start);
            const ApplyResult replay = apply_sequence(start, plan.moves);
            const bool verified =
                replay.configuration == Configuration::reference() &&
                replay.pending == Step{};
            Json j = plan_to_json(plan, emit_sequence);
            j["verified"] = verified;
            emit(out, j);
            return verified ? 0 : 1;
        }
        if (verify->parsed()) return run_verify(out, what, seed);
        if (export_chain->parsed()) {
            const ReducedChain chain = chain_by_name(export_name);
            if (export_format == "csv")
                out << chain_to_csv(chain);
            else
                emit(out, chain_to_json(chain));
            return 0;
        }
    } catch (const SyntaxError& e) {
        err << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownMacro& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace courtmix::cli
