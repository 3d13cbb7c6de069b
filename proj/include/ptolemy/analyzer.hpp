#pragma once
#include "ptolemy/polygon.hpp"
#include "ptolemy/state.hpp"
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ptolemy {

// states along a move word, starting with the base state
std::vector<State> path_states(const std::string& moves);

// exact ball around the base state in the move graph (moves f F r R)
class Ball {
public:
    Ball(int radius, size_t max_states = 5000000);
    int radius() const { return radius_; }
    size_t size() const { return states_.size(); }
    size_t count_at(int r) const;
    std::optional<int> distance(const State& s) const;
    std::string witness(const State& s) const; // base . witness = s
private:
    int radius_;
    std::vector<State> states_;
    std::vector<int> dist_, parent_;
    std::vector<char> letter_;
    std::unordered_map<std::string, int> index_;
};

struct DistanceBound {
    bool known = false;
    bool exact = false;
    int value = -1;
    std::string witness; // a . witness = b
};

// certified upper bounds for the move-graph distance between two states
class DistanceOracle {
public:
    DistanceOracle(const Ball& ball, int extra_depth) : ball_(ball), extra_(extra_depth) {}
    DistanceBound bound(const State& a, const State& b);
private:
    const Ball& ball_;
    int extra_;
    std::mutex mu_;
    std::unordered_map<std::string, DistanceBound> cache_;
};
// element carrying a to b, as a state: base . w = relative  iff  a . w = b
State relative_state(const State& a, const State& b);

struct CorridorReport {
    enum Status { Feasible, Inconclusive } status = Inconclusive;
    int k = -1;                               // bottleneck of the matching found
    std::vector<std::pair<int, int>> matching;
    int cellsEvaluated = 0;
    int unknownCells = 0;
};
CorridorReport min_corridor_K(const std::vector<State>& A, const std::vector<State>& B, int kmax, DistanceOracle& oracle);
bool corridor_feasible(const std::vector<State>& A, const std::vector<State>& B, int K, DistanceOracle& oracle);

struct PolygonGraphReport {
    int n = 0;
    size_t triangulations = 0;
    size_t states = 0;
    int components = 0;
    int diameter = 0;                 // max over components of their diameter
    std::map<int, size_t> eccentricity; // eccentricity -> number of states
};
PolygonGraphReport polygon_move_graph(int n);
// second, independent diameter computation by boolean matrix powers (small n only)
int polygon_diameter_matrix(int n);

struct DepartureProfile {
    std::vector<int> D; // D[r] for r = 0..rmax
};
DepartureProfile departure_profile(const std::vector<std::vector<State>>& paths, int rmax);

// element with two flipped edges sharing a triangle at dual depth d from the root
State planted_pair(int depth);

struct FlipDiameter {
    int n = 0;
    size_t triangulations = 0;
    int diameter = 0;
};
FlipDiameter flip_graph_report(int n, int threads);

} // namespace ptolemy
