#include "ptolemy/polygon.hpp"
#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace ptolemy {

std::string PolyTri::key() const {
    std::string k;
    k.reserve(adj.size() * 4);
    for (uint32_t a : adj) k.append(reinterpret_cast<const char*>(&a), sizeof a);
    return k;
}

bool is_boundary(int n, int i, int j) {
    int d = (j - i + n) % n;
    return d == 1 || d == n - 1;
}

PolyTri poly_from_diagonals(int n, const std::vector<std::pair<int, int>>& diags) {
    PolyTri t;
    t.n = n;
    t.adj.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        t.adj[i] |= 1u << j;
        t.adj[j] |= 1u << i;
    }
    for (auto [a, b] : diags) {
        t.adj[a] |= 1u << b;
        t.adj[b] |= 1u << a;
    }
    return t;
}

PolyTri fan_triangulation(int n, int apex) {
    std::vector<std::pair<int, int>> d;
    for (int k = 2; k <= n - 2; ++k) d.push_back({apex, (apex + k) % n});
    return poly_from_diagonals(n, d);
}

std::vector<std::pair<int, int>> poly_diagonals(const PolyTri& t) {
    std::vector<std::pair<int, int>> d;
    for (int i = 0; i < t.n; ++i)
        for (int j = i + 2; j < t.n; ++j)
            if (!(i == 0 && j == t.n - 1) && t.edge(i, j)) d.push_back({i, j});
    return d;
}

bool poly_is_diagonal(const PolyTri& t, int i, int j) {
    return i != j && !is_boundary(t.n, i, j) && t.edge(i, j);
}

int poly_left_apex(const PolyTri& t, int i, int j) {
    // left of i->j is the ccw arc from j to i
    for (int k = (j + 1) % t.n; k != i; k = (k + 1) % t.n)
        if (t.edge(i, k) && t.edge(k, j)) return k;
    return -1;
}

PolyTri poly_flip(const PolyTri& t, int i, int j) {
    if (!poly_is_diagonal(t, i, j)) throw std::invalid_argument("poly_flip: not a diagonal");
    int l = poly_left_apex(t, i, j), r = poly_left_apex(t, j, i);
    PolyTri u = t;
    u.adj[i] &= ~(1u << j);
    u.adj[j] &= ~(1u << i);
    u.adj[l] |= 1u << r;
    u.adj[r] |= 1u << l;
    return u;
}

std::vector<int> poly_neighbours(const PolyTri& t, int v) {
    std::vector<int> r;
    for (int k = 1; k < t.n; ++k) {
        int x = (v + k) % t.n;
        if (t.edge(v, x)) r.push_back(x);
    }
    return r;
}

bool poly_chords_cross(int n, int a, int b, int c, int d) {
    if (a == c || a == d || b == c || b == d) return false;
    auto inside = [&](int x) { return ((x - a + n) % n) < ((b - a + n) % n); };
    return inside(c) != inside(d);
}

namespace {
void enumerate(int lo, int hi, std::vector<std::vector<std::pair<int, int>>>& out) {
    // triangulations of the polygon lo..hi (consecutive), edge (lo,hi) given
    if (hi - lo < 2) { out.push_back({}); return; }
    for (int k = lo + 1; k < hi; ++k) {
        std::vector<std::vector<std::pair<int, int>>> L, R;
        enumerate(lo, k, L);
        enumerate(k, hi, R);
        for (auto& a : L)
            for (auto& b : R) {
                std::vector<std::pair<int, int>> d = a;
                d.insert(d.end(), b.begin(), b.end());
                if (k - lo >= 2) d.push_back({lo, k});
                if (hi - k >= 2) d.push_back({k, hi});
                out.push_back(std::move(d));
            }
    }
}
} // namespace

std::vector<PolyTri> all_triangulations(int n) {
    std::vector<std::vector<std::pair<int, int>>> ds;
    enumerate(0, n - 1, ds);
    std::vector<PolyTri> r;
    r.reserve(ds.size());
    for (auto& d : ds) r.push_back(poly_from_diagonals(n, d));
    return r;
}

std::vector<std::pair<int, int>> poly_comb_chord(PolyTri& t, int s, int target) {
    std::vector<std::pair<int, int>> flips;
    int n = t.n;
    auto pos = [&](int x) { return (x - s + n) % n; };
    for (int guard = 0; guard < n * n * n + 10 && !t.edge(s, target); ++guard) {
        std::vector<int> nb = poly_neighbours(t, s);
        int a = -1, b = -1;
        for (size_t k = 0; k + 1 < nb.size(); ++k)
            if (pos(nb[k]) < pos(target) && pos(target) < pos(nb[k + 1])) { a = nb[k]; b = nb[k + 1]; break; }
        if (a < 0) throw std::logic_error("poly_comb_chord: no prong");
        t = poly_flip(t, a, b);
        flips.push_back({a, b});
    }
    if (!t.edge(s, target)) throw std::logic_error("poly_comb_chord: did not terminate");
    return flips;
}

int poly_mosher_flip_count(const PolyTri& from, const PolyTri& target) {
    PolyTri t = from;
    int count = 0;
    for (auto [a, b] : poly_diagonals(target)) {
        if (t.edge(a, b)) continue;
        count += int(poly_comb_chord(t, a, b).size());
    }
    if (!(t == target)) throw std::logic_error("poly_mosher_flip_count: target not reached");
    return count;
}

FlipGraph build_flip_graph(int n) {
    FlipGraph g;
    g.nodes = all_triangulations(n);
    std::unordered_map<std::string, int> id;
    id.reserve(g.nodes.size() * 2);
    for (size_t i = 0; i < g.nodes.size(); ++i) id[g.nodes[i].key()] = int(i);
    g.nbrs.resize(g.nodes.size());
    for (size_t i = 0; i < g.nodes.size(); ++i)
        for (auto [a, b] : poly_diagonals(g.nodes[i])) g.nbrs[i].push_back(id.at(poly_flip(g.nodes[i], a, b).key()));
    return g;
}

std::vector<int> bfs_distances(const std::vector<std::vector<int>>& nbrs, int src) {
    std::vector<int> d(nbrs.size(), -1);
    std::vector<int> q;
    q.reserve(nbrs.size());
    d[src] = 0;
    q.push_back(src);
    for (size_t h = 0; h < q.size(); ++h) {
        int x = q[h];
        for (int y : nbrs[x])
            if (d[y] < 0) { d[y] = d[x] + 1; q.push_back(y); }
    }
    return d;
}

int flip_distance(const FlipGraph& g, const PolyTri& a, const PolyTri& b) {
    int ia = -1, ib = -1;
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        if (g.nodes[i] == a) ia = int(i);
        if (g.nodes[i] == b) ib = int(i);
    }
    if (ia < 0 || ib < 0) throw std::invalid_argument("flip_distance: unknown triangulation");
    return bfs_distances(g.nbrs, ia)[ib];
}

namespace {
PolyTri transform(const PolyTri& t, int rot, bool refl) {
    std::vector<std::pair<int, int>> d;
    for (auto [a, b] : poly_diagonals(t)) {
        int x = refl ? (t.n - a) % t.n : a, y = refl ? (t.n - b) % t.n : b;
        d.push_back({(x + rot) % t.n, (y + rot) % t.n});
    }
    return poly_from_diagonals(t.n, d);
}
} // namespace

int flip_graph_diameter(const FlipGraph& g, int threads) {
    std::unordered_map<std::string, int> id;
    for (size_t i = 0; i < g.nodes.size(); ++i) id[g.nodes[i].key()] = int(i);
    std::vector<int> reps;
    std::vector<char> seen(g.nodes.size(), 0);
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        if (seen[i]) continue;
        reps.push_back(int(i));
        int n = g.nodes[i].n;
        for (int r = 0; r < n; ++r)
            for (int f = 0; f < 2; ++f) seen[id.at(transform(g.nodes[i], r, f).key())] = 1;
    }
    if (threads < 1) threads = 1;
    std::vector<int> best(threads, 0);
    std::vector<char> disconnected(threads, 0);
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (size_t k = w; k < reps.size(); k += threads) {
                auto d = bfs_distances(g.nbrs, reps[k]);
                for (int x : d) {
                    if (x < 0) disconnected[w] = 1;
                    best[w] = std::max(best[w], x);
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    for (char c : disconnected)
        if (c) throw std::logic_error("flip graph not connected");
    return *std::max_element(best.begin(), best.end());
}

} // namespace ptolemy

namespace ptolemy {

std::string PolyState::key() const {
    std::string k = t.key();
    k.push_back(char(from));
    k.push_back(char(to));
    return k;
}

bool poly_move_defined(const PolyState& s, char m) {
    if (poly_left_apex(s.t, s.from, s.to) < 0) return false;
    if (m == 'f' || m == 'F') return poly_is_diagonal(s.t, s.from, s.to);
    return m == 'r' || m == 'R';
}

namespace {
PolyState move_f(const PolyState& s) {
    int l = poly_left_apex(s.t, s.from, s.to), r = poly_left_apex(s.t, s.to, s.from);
    return PolyState{poly_flip(s.t, s.from, s.to), l, r};
}
PolyState move_r(const PolyState& s) {
    int l = poly_left_apex(s.t, s.from, s.to);
    return PolyState{s.t, l, s.from};
}
} // namespace

PolyState poly_move(const PolyState& s, char m) {
    if (!poly_move_defined(s, m)) throw std::invalid_argument(std::string("poly_move: undefined move ") + m);
    switch (m) {
    case 'f': return move_f(s);
    case 'F': return move_f(move_f(move_f(s)));
    case 'r': return move_r(s);
    case 'R': return move_r(move_r(s));
    }
    throw std::invalid_argument("poly_move: bad letter");
}

PolyMoveGraph build_poly_move_graph(int n) {
    PolyMoveGraph g;
    for (auto& t : all_triangulations(n))
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j || !t.edge(i, j)) continue;
                PolyState s{t, i, j};
                if (poly_left_apex(t, i, j) >= 0) g.nodes.push_back(s);
            }
    std::unordered_map<std::string, int> id;
    for (size_t i = 0; i < g.nodes.size(); ++i) id[g.nodes[i].key()] = int(i);
    g.nbrs.resize(g.nodes.size());
    for (size_t i = 0; i < g.nodes.size(); ++i)
        for (char m : std::string("fFrR"))
            if (poly_move_defined(g.nodes[i], m)) g.nbrs[i].push_back(id.at(poly_move(g.nodes[i], m).key()));
    return g;
}

std::string poly_shortest_word(const PolyState& start, bool (*goal)(const PolyState&, const void*), const void* ctx) {
    if (goal(start, ctx)) return "";
    // letters in ascii order so the first hit is the least word of minimal length
    static const std::string letters = "FRfr";
    std::vector<PolyState> nodes{start};
    std::vector<std::pair<int, char>> parent{{-1, 0}};
    std::unordered_map<std::string, int> seen{{start.key(), 0}};
    for (size_t h = 0; h < nodes.size(); ++h) {
        for (char m : letters) {
            if (!poly_move_defined(nodes[h], m)) continue;
            PolyState x = poly_move(nodes[h], m);
            if (!seen.emplace(x.key(), int(nodes.size())).second) continue;
            nodes.push_back(x);
            parent.push_back({int(h), m});
            if (goal(x, ctx)) {
                std::string w;
                for (int k = int(nodes.size()) - 1; parent[k].first >= 0; k = parent[k].first) w += parent[k].second;
                std::reverse(w.begin(), w.end());
                return w;
            }
        }
    }
    throw std::logic_error("poly_shortest_word: goal unreachable");
}

} // namespace ptolemy
