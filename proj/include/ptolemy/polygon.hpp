#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ptolemy {

// Triangulation of a convex n-gon with vertices 0..n-1 in ccw order (n <= 32).
struct PolyTri {
    int n = 0;
    std::vector<uint32_t> adj; // adjacency bitmasks, sides included
    bool edge(int i, int j) const { return (adj[i] >> j) & 1u; }
    bool operator==(const PolyTri& o) const { return n == o.n && adj == o.adj; }
    std::string key() const;
};

PolyTri fan_triangulation(int n, int apex = 0);
PolyTri poly_from_diagonals(int n, const std::vector<std::pair<int, int>>& diags);
std::vector<std::pair<int, int>> poly_diagonals(const PolyTri& t);
bool is_boundary(int n, int i, int j);
bool poly_is_diagonal(const PolyTri& t, int i, int j);
// apex of the triangle on the left of i->j (ccw arc from j to i), -1 if none
int poly_left_apex(const PolyTri& t, int i, int j);
PolyTri poly_flip(const PolyTri& t, int i, int j);
std::vector<int> poly_neighbours(const PolyTri& t, int v); // ccw starting after v
bool poly_chords_cross(int n, int a, int b, int c, int d);

// all triangulations of the n-gon (Catalan(n-2) of them)
std::vector<PolyTri> all_triangulations(int n);

// Mosher prong loop in a polygon: flips until chord (s,t) is present
std::vector<std::pair<int, int>> poly_comb_chord(PolyTri& t, int s, int target);
// comb every diagonal of `target` in order; returns the number of flips
int poly_mosher_flip_count(const PolyTri& from, const PolyTri& target);

// unlabeled flip graph
struct FlipGraph {
    std::vector<PolyTri> nodes;
    std::vector<std::vector<int>> nbrs;
};
FlipGraph build_flip_graph(int n);
std::vector<int> bfs_distances(const std::vector<std::vector<int>>& nbrs, int src);
int flip_distance(const FlipGraph& g, const PolyTri& a, const PolyTri& b);
// exact diameter, using dihedral symmetry to pick sources
int flip_graph_diameter(const FlipGraph& g, int threads = 1);

// labeled polygon states: triangulation plus a d.o.e. i->j with a triangle on its left
struct PolyState {
    PolyTri t;
    int from = 0, to = 0;
    bool operator==(const PolyState& o) const { return t == o.t && from == o.from && to == o.to; }
    std::string key() const;
};
bool poly_move_defined(const PolyState& s, char m);
PolyState poly_move(const PolyState& s, char m); // f F r R; throws when undefined

struct PolyMoveGraph {
    std::vector<PolyState> nodes;
    std::vector<std::vector<int>> nbrs; // over f F r R where defined
};
PolyMoveGraph build_poly_move_graph(int n);
// labeled search: lexicographically least among the shortest move words reaching a goal
std::string poly_shortest_word(const PolyState& start, bool (*goal)(const PolyState&, const void*), const void* ctx);

} // namespace ptolemy
