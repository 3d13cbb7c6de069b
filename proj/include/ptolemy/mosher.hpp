#pragma once
#include "ptolemy/state.hpp"
#include <string>
#include <vector>

namespace ptolemy {

// uncombed arc: a base edge missing from the triangulation, oriented from its lower cusp
struct Chord {
    Cusp from, to;
};

struct Prong {
    Cusp vertex;
    Cusp left, right; // consecutive neighbours of vertex around which the chord leaves
};

struct TraceStep {
    std::string op; // "flip", "transfer", "relabel"
    std::string args;
    State before, after;
};
using CombingTrace = std::vector<TraceStep>;

struct DeviationPolygon {
    State support;             // the minimal support with the d.o.e.
    std::vector<Chord> chords; // sorted by the global edge order
};

DeviationPolygon deviation_polygon(const State& z);
Prong find_prong(const State& s, const Chord& g);

struct ArcCombing {
    std::vector<Edge> flips;
    State final_state;
};
ArcCombing comb_arc(const State& s, const Chord& g);

CombingTrace mosher_flip_sequence(const State& z);
// word W with z . W = base (transfers to each flipped edge, F, ..., final transfer home)
std::string mosher_reduction_word(const State& z);
// move word whose evaluation on the base state gives z
std::string mosher_word(const State& z);
int mosher_flip_count(const State& z);

std::string trace_json(const CombingTrace& t);

} // namespace ptolemy
