#include "ptolemy/analyzer.hpp"
#include "ptolemy/treepair.hpp"
#include "ptolemy/words.hpp"
#include <algorithm>
#include <queue>
#include <stdexcept>

namespace ptolemy {

namespace {
const std::string kMoves = "fFrR";
}

std::vector<State> path_states(const std::string& moves) {
    std::vector<State> p{base_state()};
    for (char m : moves) p.push_back(apply_move(p.back(), m));
    return p;
}

Ball::Ball(int radius, size_t max_states) : radius_(radius) {
    State b = base_state();
    states_.push_back(b);
    dist_.push_back(0);
    parent_.push_back(-1);
    letter_.push_back(0);
    index_[state_key(b)] = 0;
    for (size_t h = 0; h < states_.size(); ++h) {
        if (dist_[h] >= radius) continue;
        for (char m : kMoves) {
            State x = apply_move(states_[h], m);
            std::string k = state_key(x);
            if (index_.count(k)) continue;
            if (states_.size() >= max_states) throw std::runtime_error("ball: state cap exceeded");
            index_[k] = int(states_.size());
            states_.push_back(std::move(x));
            dist_.push_back(dist_[h] + 1);
            parent_.push_back(int(h));
            letter_.push_back(m);
        }
    }
}

size_t Ball::count_at(int r) const { return size_t(std::count(dist_.begin(), dist_.end(), r)); }

std::optional<int> Ball::distance(const State& s) const {
    auto it = index_.find(state_key(s));
    if (it == index_.end()) return std::nullopt;
    return dist_[it->second];
}

std::string Ball::witness(const State& s) const {
    auto it = index_.find(state_key(s));
    if (it == index_.end()) throw std::invalid_argument("ball: state not in ball");
    std::string w;
    for (int k = it->second; parent_[k] >= 0; k = parent_[k]) w += letter_[k];
    std::reverse(w.begin(), w.end());
    return w;
}

State relative_state(const State& a, const State& b) {
    return to_state(compose_moves(symbol_inverse(to_tree_pair(a)), to_tree_pair(b)));
}

DistanceBound DistanceOracle::bound(const State& a, const State& b) {
    State x = relative_state(a, b);
    std::string key = state_key(x);
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    DistanceBound r;
    if (auto d = ball_.distance(x)) {
        r = DistanceBound{true, true, *d, ball_.witness(x)};
    } else {
        // x . u = y with y in the ball gives base . w_y u^-1 = x
        std::vector<std::pair<State, std::string>> level{{x, ""}};
        std::unordered_map<std::string, char> seen{{key, 1}};
        for (int k = 1; k <= extra_ && !level.empty(); ++k) {
            std::vector<std::pair<State, std::string>> next;
            for (auto& [s, u] : level)
                for (char m : kMoves) {
                    State y = apply_move(s, m);
                    if (!seen.emplace(state_key(y), 1).second) continue;
                    std::string uu = u + m;
                    if (auto d = ball_.distance(y)) {
                        if (!r.known || *d + k < r.value) {
                            r.known = true;
                            r.value = *d + k;
                            r.witness = ball_.witness(y) + invert_move_word(uu);
                        }
                    }
                    next.push_back({std::move(y), std::move(uu)});
                }
            level = std::move(next);
        }
    }
    std::lock_guard<std::mutex> lk(mu_);
    cache_[key] = r;
    return r;
}

CorridorReport min_corridor_K(const std::vector<State>& A, const std::vector<State>& B, int kmax, DistanceOracle& oracle) {
    if (A.empty() || B.empty() || A.front() != B.front()) throw std::invalid_argument("corridor: paths must start at a common state");
    CorridorReport rep;
    int n = int(A.size()), m = int(B.size());
    std::vector<int> cost(size_t(n) * m, -2); // -2 not evaluated, -1 unknown
    auto cell = [&](int i, int j) {
        int& c = cost[size_t(i) * m + j];
        if (c == -2) {
            DistanceBound b = oracle.bound(A[i], B[j]);
            ++rep.cellsEvaluated;
            if (!b.known) ++rep.unknownCells;
            c = b.known ? b.value : -1;
        }
        return c;
    };
    // bottleneck Dijkstra over monotone steps
    std::vector<int> best(size_t(n) * m, 1 << 30), from(size_t(n) * m, -1);
    using Item = std::pair<int, int>; // bottleneck, cell id
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    int c0 = cell(0, 0);
    best[0] = c0;
    pq.push({c0, 0});
    while (!pq.empty()) {
        auto [b, id] = pq.top();
        pq.pop();
        if (b != best[id]) continue;
        int i = id / m, j = id % m;
        if (i == n - 1 && j == m - 1) {
            rep.status = CorridorReport::Feasible;
            rep.k = b;
            for (int k = id; k >= 0; k = from[k]) rep.matching.push_back({k / m, k % m});
            std::reverse(rep.matching.begin(), rep.matching.end());
            return rep;
        }
        const int steps[3][2] = {{1, 0}, {0, 1}, {1, 1}};
        for (auto& st : steps) {
            int x = i + st[0], y = j + st[1];
            if (x >= n || y >= m) continue;
            int c = cell(x, y);
            if (c < 0 || c > kmax) continue;
            int nb = std::max(b, c);
            int nid = x * m + y;
            if (nb < best[nid]) {
                best[nid] = nb;
                from[nid] = id;
                pq.push({nb, nid});
            }
        }
    }
    // no matching within kmax among certified cells; lower bounds are not available
    rep.status = CorridorReport::Inconclusive;
    return rep;
}

bool corridor_feasible(const std::vector<State>& A, const std::vector<State>& B, int K, DistanceOracle& oracle) {
    CorridorReport r = min_corridor_K(A, B, K, oracle);
    return r.status == CorridorReport::Feasible && r.k <= K;
}

PolygonGraphReport polygon_move_graph(int n) {
    PolyMoveGraph g = build_poly_move_graph(n);
    PolygonGraphReport rep;
    rep.n = n;
    rep.triangulations = all_triangulations(n).size();
    rep.states = g.nodes.size();
    std::vector<int> comp(g.nodes.size(), -1);
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        if (comp[i] >= 0) continue;
        auto d = bfs_distances(g.nbrs, int(i));
        for (size_t k = 0; k < d.size(); ++k)
            if (d[k] >= 0) comp[k] = rep.components;
        ++rep.components;
    }
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        auto d = bfs_distances(g.nbrs, int(i));
        int ecc = 0;
        for (int x : d) ecc = std::max(ecc, x);
        rep.eccentricity[ecc]++;
        rep.diameter = std::max(rep.diameter, ecc);
    }
    return rep;
}

int polygon_diameter_matrix(int n) {
    // states reached from the fan with d.o.e. 0->2 (0->1 when n = 3)
    PolyState start{fan_triangulation(n), 0, n > 3 ? 2 : 1};
    std::vector<PolyState> st{start};
    std::unordered_map<std::string, int> id{{start.key(), 0}};
    std::vector<std::vector<char>> adj;
    for (size_t h = 0; h < st.size(); ++h)
        for (char m : kMoves) {
            if (!poly_move_defined(st[h], m)) continue;
            PolyState x = poly_move(st[h], m);
            if (id.emplace(x.key(), int(st.size())).second) st.push_back(x);
        }
    size_t N = st.size();
    adj.assign(N, std::vector<char>(N, 0));
    for (size_t i = 0; i < N; ++i) {
        adj[i][i] = 1;
        for (char m : kMoves)
            if (poly_move_defined(st[i], m)) adj[i][id.at(poly_move(st[i], m).key())] = 1;
    }
    // reach_k = (I + A)^k; the diameter is the first k with a full matrix
    std::vector<std::vector<char>> reach = adj;
    for (int k = 1;; ++k) {
        bool full = true;
        for (auto& row : reach)
            for (char c : row) full = full && c;
        if (full) return k;
        std::vector<std::vector<char>> nr(N, std::vector<char>(N, 0));
        for (size_t i = 0; i < N; ++i)
            for (size_t j = 0; j < N; ++j)
                if (reach[i][j])
                    for (size_t l = 0; l < N; ++l)
                        if (adj[j][l]) nr[i][l] = 1;
        reach = std::move(nr);
        if (k > int(N)) throw std::logic_error("matrix diameter: graph not strongly connected");
    }
}

DepartureProfile departure_profile(const std::vector<std::vector<State>>& paths, int rmax) {
    DepartureProfile p;
    p.D.assign(rmax + 1, 0);
    for (auto& P : paths) {
        std::vector<std::string> keys;
        for (auto& s : P) keys.push_back(state_key(s));
        for (size_t s = 0; s < P.size(); ++s) {
            std::unordered_map<std::string, int> near{{keys[s], 0}};
            std::vector<State> level{P[s]};
            for (int r = 1; r <= rmax; ++r) {
                std::vector<State> next;
                for (auto& x : level)
                    for (char m : kMoves) {
                        State y = apply_move(x, m);
                        if (near.emplace(state_key(y), r).second) next.push_back(std::move(y));
                    }
                level = std::move(next);
            }
            for (size_t t = s + 1; t < P.size(); ++t) {
                auto it = near.find(keys[t]);
                if (it == near.end()) continue;
                for (int r = it->second; r <= rmax; ++r) p.D[r] = std::max(p.D[r], int(t - s));
            }
        }
    }
    return p;
}

State planted_pair(int depth) {
    State s = base_state();
    OEdge h = s.doe;
    for (int k = 0; k < depth; ++k) {
        Cusp l = farey_left_apex(h.from, h.to);
        h = k % 2 == 0 ? OEdge{h.from, l} : OEdge{l, h.to};
    }
    Cusp l = farey_left_apex(h.from, h.to);
    State z = flip(s, Edge(h.from, l));
    return flip(z, Edge(l, h.to));
}

FlipDiameter flip_graph_report(int n, int threads) {
    FlipGraph g = build_flip_graph(n);
    return FlipDiameter{n, g.nodes.size(), flip_graph_diameter(g, threads)};
}

} // namespace ptolemy
