#include "doctest.h"
#include "ptolemy/analyzer.hpp"
#include "ptolemy/combing.hpp"
#include "ptolemy/polygon.hpp"
#include "ptolemy/words.hpp"

using namespace ptolemy;

namespace {
long catalan(int n) {
    long c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}
} // namespace

TEST_CASE("polygon triangulations are counted by catalan numbers") {
    for (int n = 3; n <= 9; ++n) CHECK(long(all_triangulations(n).size()) == catalan(n - 2));
}

TEST_CASE("polygon flips") {
    PolyTri t = fan_triangulation(5);
    CHECK(poly_diagonals(t).size() == 2);
    CHECK(poly_is_diagonal(t, 0, 2));
    CHECK_FALSE(poly_is_diagonal(t, 0, 1));
    PolyTri u = poly_flip(t, 0, 2);
    CHECK(u.edge(1, 3));
    CHECK(poly_flip(u, 1, 3) == t);
    CHECK(poly_chords_cross(6, 0, 3, 1, 4));
    CHECK_FALSE(poly_chords_cross(6, 0, 3, 3, 5));
}

TEST_CASE("flip graph of the square and the pentagon") {
    CHECK(flip_graph_report(4, 1).diameter == 1);
    // the pentagon flip graph is a 5-cycle
    FlipGraph g = build_flip_graph(5);
    CHECK(g.nodes.size() == 5);
    for (auto& nb : g.nbrs) CHECK(nb.size() == 2);
    CHECK(flip_graph_diameter(g) == 2);
}

TEST_CASE("comb-based flip counts never beat the flip distance") {
    FlipGraph g = build_flip_graph(7);
    PolyTri fan = fan_triangulation(7);
    for (auto& t : g.nodes) CHECK(poly_mosher_flip_count(fan, t) >= flip_distance(g, fan, t));
}

TEST_CASE("polygon move graph") {
    PolygonGraphReport r = polygon_move_graph(5);
    CHECK(r.components == 1);
    CHECK(r.triangulations == 5);
    CHECK(polygon_diameter_matrix(5) == r.diameter);
    CHECK(polygon_diameter_matrix(6) == polygon_move_graph(6).diameter);
}

TEST_CASE("ball distances") {
    Ball b(3);
    CHECK(b.distance(base_state()) == 0);
    CHECK(b.distance(eval_word("a")) == 1);
    CHECK(b.distance(eval_word("aa")) == 2);
    CHECK(b.distance(eval_word("AA")) == 2);
    CHECK(b.count_at(0) == 1);
    CHECK(b.count_at(1) == 4);
    State x = eval_word("aba");
    REQUIRE(b.distance(x));
    CHECK(apply_move_word(base_state(), b.witness(x)) == x);
}

TEST_CASE("distance oracle bounds") {
    Ball b(4);
    DistanceOracle o(b, 2);
    State x = eval_word("ab"), y = eval_word("abab");
    DistanceBound d = o.bound(x, y);
    REQUIRE(d.known);
    CHECK(apply_move_word(x, d.witness) == y);
    CHECK(int(d.witness.size()) == d.value);
    CHECK(o.bound(x, x).value == 0);
}

TEST_CASE("corridor of a path with itself") {
    Ball b(4);
    DistanceOracle o(b, 2);
    auto A = path_states(combing(eval_word("abab")));
    CorridorReport r = min_corridor_K(A, A, 10, o);
    CHECK(r.status == CorridorReport::Feasible);
    CHECK(r.k == 0);
    CHECK(corridor_feasible(A, A, 0, o));
    CHECK_THROWS(min_corridor_K(A, {eval_word("a")}, 3, o));
}

TEST_CASE("departure profile of a geodesic-like path") {
    auto p = path_states("rf");
    DepartureProfile d = departure_profile({p}, 2);
    REQUIRE(d.D.size() == 3);
    CHECK(d.D[0] == 0);
    CHECK(d.D[2] >= d.D[1]);
}
