#pragma once
#include "ptolemy/mosher.hpp"
#include <string>
#include <vector>

namespace ptolemy {

// triangles of the triangulation met by the dual geodesic from the d.o.e.
// quadrilateral Q_e to the edge f. Each cell is listed by its three cusps.
struct TriangleChain {
    std::vector<OEdge> crossed;             // h_1 .. h_q, h_q = f, next triangle on the left
    std::vector<std::vector<Cusp>> cells;   // triangle beyond h_i, for i < q
    bool nearby = false;                     // f is an edge of Q_e (or the d.o.e.)
};
TriangleChain triangle_chain(const State& s, const Edge& f);
int dual_distance(const State& s, const Edge& f); // number of crossed edges, 0 for the d.o.e.

struct CorridorStep {
    std::vector<Cusp> zPolygon;
    std::string movesInside;
    State stateAfter;
};

struct Corridor {
    std::vector<CorridorStep> steps;
    int finalVertices = 0; // |Z_n u Q_f|
};
Corridor build_corridor(const State& s, const Edge& f);

// move word realizing the flip at f with the d.o.e. kept in place
std::string comb_flip_path(const State& s, const Edge& f);

// combing: move word w with base . w = z
std::string combing(const State& z);
std::string reduced_combing(const State& z);

} // namespace ptolemy
