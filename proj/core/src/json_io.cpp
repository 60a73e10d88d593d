#include "courtmix/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace courtmix {

double round_sig(double v, int digits) {
    if (v == 0.0 || !std::isfinite(v)) return v;
    const double scale =
        std::pow(10.0, digits - 1 - static_cast<int>(std::floor(std::log10(std::abs(v)))));
    return std::round(v * scale) / scale;
}

Json configuration_to_json(const Configuration& c) {
    Json j = Json::array();
    for (int pos = 0; pos < kPlayers; ++pos) j.push_back(c.player_at(pos));
    return j;
}

Configuration configuration_from_json(const Json& j) {
    if (!j.is_array())
        throw std::invalid_argument("state must be a JSON array of 24 player ids");
    if (j.size() != 24)
        throw std::invalid_argument("state has " + std::to_string(j.size()) +
                                    " entries, expected 24");
    std::array<int, 24> seating{};
    for (std::size_t i = 0; i < 24; ++i) {
        if (!j[i].is_number_integer())
            throw std::invalid_argument("position " + std::to_string(i) +
                                        ": entry is not an integer");
        seating[i] = j[i].get<int>();
    }
    return Configuration::from_seating(seating);  // reports first violation
}

namespace {

Json rational_pair(const Rational& r) {
    return Json::array({to_int64(numerator(r)), to_int64(denominator(r))});
}

}  // namespace

Json chain_to_json(const ReducedChain& chain) {
    Json j;
    j["states"] = chain.states;
    Json p = Json::array();
    for (const auto& row : chain.P) {
        Json r = Json::array();
        for (const Rational& v : row) r.push_back(rational_pair(v));
        p.push_back(r);
    }
    j["P"] = p;
    Json pi = Json::array();
    for (const Rational& v : chain.pi) pi.push_back(rational_pair(v));
    j["pi"] = pi;
    return j;
}

std::string chain_to_csv(const ReducedChain& chain) {
    std::ostringstream out;
    out << "state";
    for (const auto& s : chain.states) out << ',' << s;
    out << ",pi\n";
    char buf[32];
    for (std::size_t i = 0; i < chain.states.size(); ++i) {
        out << chain.states[i];
        for (const Rational& v : chain.P[i]) {
            std::snprintf(buf, sizeof buf, "%.6f", to_double(v));
            out << ',' << buf;
        }
        std::snprintf(buf, sizeof buf, "%.6f", to_double(chain.pi[i]));
        out << ',' << buf << '\n';
    }
    return out.str();
}

Json estimate_to_json(const MonteCarloEstimate& e) {
    Json j;
    j["observable"] = e.observable;
    j["games"] = e.games;
    j["trials"] = e.trials;
    j["seed"] = e.seed;
    j["workers"] = e.workers;
    j["estimate"] = round_sig(e.estimate);
    j["std_error"] = round_sig(e.std_error);
    return j;
}

Json certificate_to_json(const Certificate& c) {
    Json j;
    j["certificate"] = c.name;
    j["pass"] = c.pass;
    j["seed"] = c.seed;
    Json checks = Json::array();
    for (const auto& ch : c.checks) {
        Json e;
        e["check"] = ch.check;
        e["pass"] = ch.pass;
        e["details"] = ch.details;
        if (!ch.diffs.empty()) {
            Json diffs = Json::array();
            for (const auto& d : ch.diffs) {
                Json dj;
                dj["position"] = d.position;
                dj["expected"] = d.expected_player;
                dj["actual"] = d.actual_player;
                diffs.push_back(dj);
            }
            e["diffs"] = diffs;
        }
        checks.push_back(e);
    }
    j["checks"] = checks;
    if (!c.sequence_lengths.empty()) {
        Json lengths;
        for (const auto& [name, steps] : c.sequence_lengths) lengths[name] = steps;
        j["sequence_lengths"] = lengths;
    }
    return j;
}

Json distance_rows_to_json(const std::vector<DistanceRow>& rows) {
    Json arr = Json::array();
    for (const auto& r : rows) {
        Json e;
        e["n"] = r.n;
        e["d_star"] = round_sig(r.d_star);
        e["s_star"] = round_sig(r.s_star);
        e["l2"] = round_sig(r.l2);
        arr.push_back(e);
    }
    return arr;
}

std::string distance_rows_to_csv(const std::vector<DistanceRow>& rows) {
    std::ostringstream out;
    out << "n,d_star,s_star,l2\n";
    char buf[64];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%d,%.3f,%.3f,%.3f\n", r.n, r.d_star,
                      r.s_star, r.l2);
        out << buf;
    }
    return out.str();
}

Json occupancy_to_json(const std::vector<OccupancyRow>& rows, int horizon) {
    Json j;
    j["horizon"] = horizon;
    Json arr = Json::array();
    for (const auto& r : rows) {
        Json e;
        e["start"] = r.start;
        e["mean_OT"] = round_sig(r.mean_ot);
        e["mean_ST"] = round_sig(r.mean_st);
        arr.push_back(e);
    }
    j["rows"] = arr;
    return j;
}

std::string occupancy_to_csv(const std::vector<OccupancyRow>& rows) {
    std::ostringstream out;
    out << "start,mean_OT,mean_ST\n";
    char buf[64];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%s,%.3f,%.3f\n", r.start.c_str(), r.mean_ot,
                      r.mean_st);
        out << buf;
    }
    return out.str();
}

Json never_to_json(const std::vector<NeverRow>& rows, const std::string& event,
                   int horizon) {
    Json j;
    j["event"] = event;
    j["horizon"] = horizon;
    Json arr = Json::array();
    for (const auto& r : rows) {
        Json e;
        e["start"] = r.start;
        e["probability"] = round_sig(r.probability);
        arr.push_back(e);
    }
    j["rows"] = arr;
    return j;
}

std::string never_to_csv(const std::vector<NeverRow>& rows) {
    std::ostringstream out;
    out << "start,probability\n";
    char buf[64];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%s,%.3f\n", r.start.c_str(), r.probability);
        out << buf;
    }
    return out.str();
}

Json plan_to_json(const Plan& plan, bool emit_sequence) {
    Json j;
    j["steps"] = plan.steps;
    Json stages = Json::array();
    for (const auto& s : plan.provenance) {
        Json e;
        e["stage"] = s.label;
        e["token_begin"] = s.token_begin;
        e["token_end"] = s.token_end;
        stages.push_back(e);
    }
    j["stages"] = stages;
    if (emit_sequence) j["sequence"] = to_text(plan.moves);
    return j;
}

std::string pretty_grid(const Configuration& c) {
    std::ostringstream out;
    const auto cell = [&](int pos) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "%2d", c.player_at(pos));
        return std::string(buf);
    };
    out << "        A side          B side\n";
    for (int row = 0; row < 4; ++row) {
        out << "  ";
        for (int col = 0; col < 3; ++col) out << ' ' << cell(6 * row + col);
        out << "  |";
        for (int col = 3; col < 6; ++col) out << ' ' << cell(6 * row + col);
        out << '\n';
        if (row == 0 || row == 2) continue;
        if (row == 1) out << "  ---- net ----+---- net ----\n";
    }
    out << "        C side          D side\n";
    return out.str();
}

}  // namespace courtmix
