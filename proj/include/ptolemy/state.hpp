#pragma once
#include "ptolemy/farey.hpp"
#include "ptolemy/address.hpp"
#include <string>
#include <vector>

namespace ptolemy {

// A Farey-type triangulation with a distinguished oriented edge.
// Outside the support polygon the triangulation is the base one. The support
// is a union of base triangles; `poly` lists its cusps in ccw order (sorted,
// infinity last) and `diags` holds every inner edge of the triangulation
// restricted to it.
struct State {
    std::vector<Cusp> poly;
    std::vector<Edge> diags; // sorted by edge_less
    OEdge doe;
    bool operator==(const State& o) const;
    bool operator!=(const State& o) const { return !(*this == o); }
};

State base_state();

int poly_index(const State& s, const Cusp& c);          // -1 when absent
bool is_side(const State& s, const Edge& e);            // boundary edge of the support
bool is_diag(const State& s, const Edge& e);            // inner edge of the support
bool has_edge(const State& s, const Edge& e);           // edge of the triangulation
bool is_deviation(const State& s, const Edge& e);       // non-base edge of the triangulation
std::vector<Edge> deviation_edges(const State& s);

// apex of the triangle of the triangulation on the left of u->v (u->v must be an edge)
Cusp left_apex(const State& s, const OEdge& e);
inline Cusp right_apex(const State& s, const OEdge& e) { return left_apex(s, e.rev()); }

// neighbours of v in the triangulation restricted to the support, ccw starting after v
std::vector<Cusp> support_neighbours(const State& s, const Cusp& v);

// support management
State grow_across(const State& s, const Edge& side);  // adds the outer triangle of a side
State grow_support(const State& s, const EdgeAddress& cell);
State grow_toward(const State& s, const Edge& e);     // until e is interior (e a base edge or interior chord)
State grow_to_contain(const State& s, const Cusp& a, const Cusp& b, const Cusp& c); // a base triangle
State normalize(const State& s);
bool is_normalized(const State& s);
bool state_equal(const State& a, const State& b);

// cells of the support (base triangles), named by addresses
std::vector<std::string> support_cells(const State& s);
std::string cell_name(const Cusp& a, const Cusp& b, const Cusp& c);

// moves
State flip(const State& s, const Edge& e);
State move_F(const State& s);
State move_R(const State& s);
State move_Finv(const State& s);
State move_Rinv(const State& s);
State apply_move(const State& s, char m);                    // f F r R
State apply_move_word(const State& s, const std::string& w);

// raw (non-normalizing) variants used by local searches
State flip_raw(const State& s, const Edge& e);

std::string state_key(const State& s);   // compact canonical fingerprint
uint64_t state_hash(const State& s);
std::string state_json(const State& s);  // canonical JSON text, sorted keys
std::string state_debug(const State& s);

// consistency check of all invariants, throws on failure
void check_state(const State& s);

} // namespace ptolemy
