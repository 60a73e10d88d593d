#include "courtmix/analytics.hpp"

#include <cmath>

namespace courtmix {

namespace {

Matrix to_double_matrix(const RationalMatrix& m) {
    Matrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        out[i].reserve(m[i].size());
        for (const Rational& r : m[i]) out[i].push_back(to_double(r));
    }
    return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size(), m = b[0].size(), k = b.size();
    Matrix out(n, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            const double v = a[i][l];
            if (v == 0.0) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += v * b[l][j];
        }
    return out;
}

std::vector<int> indices_of(const ReducedChain& chain, const StateSet& set) {
    std::vector<int> idx;
    for (const std::string& s : set) idx.push_back(chain.index_of(s));
    return idx;
}

}  // namespace

Matrix n_step_matrix(const ReducedChain& chain, int n) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    const std::size_t m = chain.states.size();
    Matrix out(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < m; ++i) out[i][i] = 1.0;
    const Matrix base = to_double_matrix(chain.P);
    for (int k = 0; k < n; ++k) out = multiply(out, base);
    return out;
}

RationalMatrix n_step_matrix_exact(const ReducedChain& chain, int n) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    RationalMatrix out = identity_matrix(chain.states.size());
    for (int k = 0; k < n; ++k) out = multiply(out, chain.P);
    return out;
}

double variation_distance_worst(const ReducedChain& chain, int n) {
    const Matrix pn = n_step_matrix(chain, n);
    const std::size_t m = chain.states.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double d = 0.0;
        for (std::size_t j = 0; j < m; ++j)
            d += std::abs(pn[i][j] - to_double(chain.pi[j]));
        worst = std::max(worst, 0.5 * d);
    }
    return worst;
}

double separation_distance_worst(const ReducedChain& chain, int n) {
    const Matrix pn = n_step_matrix(chain, n);
    const std::size_t m = chain.states.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            worst = std::max(worst, 1.0 - pn[i][j] / to_double(chain.pi[j]));
    return worst;
}

double l2_distance_worst(const ReducedChain& chain, int n) {
    const Matrix pn = n_step_matrix(chain, n);
    const std::size_t m = chain.states.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double d = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double pj = to_double(chain.pi[j]);
            const double diff = pn[i][j] - pj;
            d += diff * diff / pj;
        }
        worst = std::max(worst, std::sqrt(d));
    }
    return worst;
}

std::vector<DistanceRow> distance_report(const ReducedChain& chain, int max_n) {
    std::vector<DistanceRow> rows;
    const Matrix base = to_double_matrix(chain.P);
    Matrix pn = base;
    for (int n = 1; n <= max_n; ++n) {
        if (n > 1) pn = multiply(pn, base);
        const std::size_t m = chain.states.size();
        DistanceRow row{n, 0.0, 0.0, 0.0};
        for (std::size_t i = 0; i < m; ++i) {
            double tv = 0.0, chi = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                const double pj = to_double(chain.pi[j]);
                const double diff = pn[i][j] - pj;
                tv += std::abs(diff);
                chi += diff * diff / pj;
                row.s_star = std::max(row.s_star, 1.0 - pn[i][j] / pj);
            }
            row.d_star = std::max(row.d_star, 0.5 * tv);
            row.l2 = std::max(row.l2, std::sqrt(chi));
        }
        rows.push_back(row);
    }
    return rows;
}

double expected_occupancy(const ReducedChain& chain, const std::string& start,
                          int horizon, const StateSet& target_set) {
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
    const std::size_t m = chain.states.size();
    std::vector<double> in_target(m, 0.0);
    for (const int j : indices_of(chain, target_set)) in_target[j] = 1.0;
    std::vector<double> v(m, 0.0);
    v[chain.index_of(start)] = 1.0;
    const Matrix base = to_double_matrix(chain.P);
    double total = 0.0;
    for (int t = 0;; ++t) {
        for (std::size_t j = 0; j < m; ++j) total += v[j] * in_target[j];
        if (t + 1 == horizon) break;
        std::vector<double> nv(m, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            if (v[i] == 0.0) continue;
            for (std::size_t j = 0; j < m; ++j) nv[j] += v[i] * base[i][j];
        }
        v = std::move(nv);
    }
    return total;
}

double never_probability(const ReducedChain& chain, const std::string& start,
                         int horizon, const StateSet& avoid_set) {
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
    const int s = chain.index_of(start);
    std::vector<bool> avoided(chain.states.size(), false);
    for (const int j : indices_of(chain, avoid_set)) avoided[j] = true;
    if (avoided[s]) return 0.0;
    std::vector<int> keep;
    for (std::size_t i = 0; i < chain.states.size(); ++i)
        if (!avoided[i]) keep.push_back(static_cast<int>(i));
    const std::size_t k = keep.size();
    std::vector<double> v(k, 0.0);
    for (std::size_t i = 0; i < k; ++i)
        if (keep[i] == s) v[i] = 1.0;
    for (int t = 1; t < horizon; ++t) {
        std::vector<double> nv(k, 0.0);
        for (std::size_t i = 0; i < k; ++i) {
            if (v[i] == 0.0) continue;
            for (std::size_t j = 0; j < k; ++j)
                nv[j] += v[i] * to_double(chain.P[keep[i]][keep[j]]);
        }
        v = std::move(nv);
    }
    double total = 0.0;
    for (const double x : v) total += x;
    return total;
}

std::vector<Rational> exit_time_distribution(const ReducedChain& chain,
                                             const std::string& start,
                                             const StateSet& stay_set, int max_steps) {
    const int s = chain.index_of(start);
    std::vector<bool> stay(chain.states.size(), false);
    for (const int j : indices_of(chain, stay_set)) stay[j] = true;
    if (!stay[s]) throw std::invalid_argument("start must lie in the stay set");
    std::vector<Rational> v(chain.states.size(), 0);
    v[s] = 1;
    std::vector<Rational> dist;
    for (int t = 1; t <= max_steps; ++t) {
        std::vector<Rational> nv(chain.states.size(), 0);
        Rational exited = 0;
        for (std::size_t i = 0; i < chain.states.size(); ++i) {
            if (v[i] == 0) continue;
            for (std::size_t j = 0; j < chain.states.size(); ++j) {
                if (chain.P[i][j] == 0) continue;
                if (stay[j])
                    nv[j] += v[i] * chain.P[i][j];
                else
                    exited += v[i] * chain.P[i][j];
            }
        }
        dist.push_back(exited);
        v = std::move(nv);
    }
    return dist;
}

Rational expected_hitting_time(const ReducedChain& chain, const std::string& start,
                               const StateSet& target_set) {
    const int s = chain.index_of(start);
    std::vector<bool> target(chain.states.size(), false);
    for (const int j : indices_of(chain, target_set)) target[j] = true;
    if (target[s]) return 0;
    std::vector<int> transient;
    for (std::size_t i = 0; i < chain.states.size(); ++i)
        if (!target[i]) transient.push_back(static_cast<int>(i));
    // reachability: the expectation is infinite iff the target is unreachable
    {
        std::vector<bool> seen(chain.states.size(), false);
        std::vector<int> stack{s};
        seen[s] = true;
        bool reachable = false;
        while (!stack.empty() && !reachable) {
            const int i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < chain.states.size(); ++j) {
                if (chain.P[i][j] == 0 || seen[j]) continue;
                if (target[j]) { reachable = true; break; }
                seen[j] = true;
                stack.push_back(static_cast<int>(j));
            }
        }
        if (!reachable) throw Unreachable(start);
    }
    const std::size_t k = transient.size();
    RationalMatrix a(k, RationalVector(k, 0));
    RationalVector b(k, 1);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            a[i][j] = -chain.P[transient[i]][transient[j]];
            if (i == j) a[i][j] += 1;
        }
    const RationalVector t = solve_linear(std::move(a), std::move(b));
    for (std::size_t i = 0; i < k; ++i)
        if (transient[i] == s) return t[i];
    throw UnknownState(start);
}

Rational first_passage_probability(const ReducedChain& chain, const std::string& start,
                                   const StateSet& goal_set, const StateSet& fail_set) {
    for (const std::string& g : goal_set)
        if (fail_set.count(g))
            throw std::invalid_argument("goal and fail sets must be disjoint");
    const int s = chain.index_of(start);
    std::vector<int> role(chain.states.size(), 0);  // 0 transient, 1 goal, -1 fail
    for (const int j : indices_of(chain, goal_set)) role[j] = 1;
    for (const int j : indices_of(chain, fail_set)) role[j] = -1;
    if (role[s] == 1) return 1;
    if (role[s] == -1) return 0;
    std::vector<int> transient;
    for (std::size_t i = 0; i < chain.states.size(); ++i)
        if (role[i] == 0) transient.push_back(static_cast<int>(i));
    const std::size_t k = transient.size();
    RationalMatrix a(k, RationalVector(k, 0));
    RationalVector b(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            a[i][j] = -chain.P[transient[i]][transient[j]];
            if (i == j) a[i][j] += 1;
        }
        for (std::size_t j = 0; j < chain.states.size(); ++j)
            if (role[j] == 1) b[i] += chain.P[transient[i]][j];
    }
    const RationalVector p = solve_linear(std::move(a), std::move(b));
    for (std::size_t i = 0; i < k; ++i)
        if (transient[i] == s) return p[i];
    throw UnknownState(start);
}

RationalMatrix fundamental_matrix(const ReducedChain& chain) {
    const std::size_t n = chain.states.size();
    RationalMatrix m(n, RationalVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = chain.pi[j] - chain.P[i][j];
            if (i == j) m[i][j] += 1;
        }
    return invert(m);
}

double independent_baseline(BaselineEvent event, int games) {
    if (games < 1) throw std::invalid_argument("games must be >= 1");
    const double p = event == BaselineEvent::NeverOpposite ? 17.0 / 23.0 : 18.0 / 23.0;
    return std::pow(p, games - 1);
}

StateSet states_matching(const ReducedChain& chain, char kind) {
    StateSet out;
    for (const std::string& s : chain.states)
        if (s.size() >= 2 && s[1] == kind) out.insert(s);
    return out;
}

StateSet complement_of(const ReducedChain& chain, const StateSet& s) {
    StateSet out;
    for (const std::string& st : chain.states)
        if (!s.count(st)) out.insert(st);
    return out;
}

}  // namespace courtmix
