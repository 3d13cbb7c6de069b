#include "doctest.h"
#include "ptolemy/address.hpp"
#include "ptolemy/state.hpp"
#include "ptolemy/words.hpp"
#include <stdexcept>

using namespace ptolemy;

TEST_CASE("cusps and farey edges") {
    CHECK(make_cusp(2, 4) == make_cusp(1, 2));
    CHECK(make_cusp(-3, -6) == make_cusp(1, 2));
    CHECK(inf_cusp().is_inf());
    CHECK(cusp_less(make_cusp(-1, 1), make_cusp(0, 1)));
    CHECK(cusp_less(make_cusp(5, 1), inf_cusp()));
    CHECK(is_farey(make_cusp(0, 1), make_cusp(1, 1)));
    CHECK(is_farey(make_cusp(0, 1), inf_cusp()));
    CHECK(is_farey(make_cusp(1, 2), make_cusp(2, 3)));
    CHECK_FALSE(is_farey(make_cusp(0, 1), make_cusp(2, 1)));
    CHECK(farey_left_apex(inf_cusp(), make_cusp(0, 1)) == make_cusp(1, 1));
    CHECK(farey_left_apex(make_cusp(0, 1), inf_cusp()) == make_cusp(-1, 1));
}

TEST_CASE("edges are unordered and chords cross") {
    Edge a(make_cusp(1, 1), make_cusp(0, 1));
    CHECK(a.lo == make_cusp(0, 1));
    CHECK(a == Edge(make_cusp(0, 1), make_cusp(1, 1)));
    CHECK(chords_cross(Edge(make_cusp(-1, 1), make_cusp(1, 1)), Edge(make_cusp(0, 1), inf_cusp())));
    CHECK_FALSE(chords_cross(Edge(make_cusp(0, 1), make_cusp(1, 1)), Edge(make_cusp(0, 1), inf_cusp())));
}

TEST_CASE("edge addresses round trip") {
    for (const char* s : {"e", "HL", "HR", "TL", "TRL", "HLRLR"}) {
        EdgeAddress a = EdgeAddress::parse(s);
        CHECK(a.str() == s);
        CHECK(address_of(edge_of(a)) == a);
    }
    CHECK_THROWS(EdgeAddress::parse("X"));
    CHECK_THROWS(EdgeAddress::parse("H"));
    CHECK_THROWS(EdgeAddress::parse("HLQ"));
    CHECK(address_of(Edge(make_cusp(0, 1), inf_cusp())).str() == "e");
    CHECK(address_less(EdgeAddress::parse("e"), EdgeAddress::parse("HL")));
    CHECK(address_less(EdgeAddress::parse("HL"), EdgeAddress::parse("HLL")));
}

TEST_CASE("base state") {
    State b = base_state();
    check_state(b);
    CHECK(b.doe.from == inf_cusp());
    CHECK(b.doe.to == make_cusp(0, 1));
    CHECK(deviation_edges(b).empty());
    CHECK(is_normalized(b));
    CHECK(has_edge(b, Edge(make_cusp(0, 1), make_cusp(1, 1))));
    CHECK(has_edge(b, Edge(make_cusp(5, 7), make_cusp(3, 4))));
    CHECK_FALSE(has_edge(b, Edge(make_cusp(-1, 1), make_cusp(1, 1))));
}

TEST_CASE("flip replaces a diagonal of a quadrilateral") {
    State b = base_state();
    Edge e(make_cusp(0, 1), make_cusp(1, 1));
    State f = flip(b, e);
    // the quadrilateral of [0,1] is 0, 1/2, 1, inf
    CHECK(has_edge(f, Edge(make_cusp(1, 2), inf_cusp())));
    CHECK_FALSE(has_edge(f, e));
    CHECK(deviation_edges(f).size() == 1);
    CHECK(flip(f, Edge(make_cusp(1, 2), inf_cusp())) == b);
    CHECK_THROWS(flip(b, Edge(make_cusp(-1, 1), make_cusp(1, 1))));
}

TEST_CASE("moves and their inverses") {
    State b = base_state();
    for (char m : std::string("fFrR")) {
        State x = apply_move(b, m);
        check_state(x);
        CHECK(apply_move_word(x, invert_move_word(std::string(1, m))) == b);
    }
    CHECK(move_Finv(move_F(b)) == b);
    CHECK(move_Rinv(move_R(b)) == b);
    // R turns the d.o.e. inside its left triangle: three turns come back
    CHECK(apply_move_word(b, "rrr") == b);
    CHECK(apply_move_word(b, "ffff") == b);
    CHECK(apply_move(b, 'R') == apply_move_word(b, "rr"));
    CHECK(apply_move(b, 'F') == apply_move_word(b, "fff"));
    // R keeps the triangulation
    CHECK(deviation_edges(move_R(b)).empty());
}

TEST_CASE("state keys and json are canonical") {
    State x = apply_move_word(base_state(), "frf");
    State y = apply_move_word(base_state(), "frfrrrfF");
    CHECK(x == y);
    CHECK(state_key(x) == state_key(y));
    CHECK(state_hash(x) == state_hash(y));
    CHECK(state_json(x) == state_json(y));
    CHECK(state_json(x) != state_json(base_state()));
    CHECK(state_equal(normalize(x), x));
}

TEST_CASE("supports grow and normalize") {
    State b = base_state();
    State g = grow_across(b, Edge(make_cusp(0, 1), make_cusp(1, 1)));
    CHECK(g.poly.size() == b.poly.size() + 1);
    CHECK(normalize(g) == b);
    CHECK(state_equal(g, b));
}

TEST_CASE("word syntax") {
    CHECK_NOTHROW(check_generator_word("aAbB"));
    CHECK_THROWS_AS(check_generator_word("abx"), std::invalid_argument);
    CHECK_NOTHROW(check_move_word("fFrR"));
    CHECK_THROWS_AS(check_move_word("fa"), std::invalid_argument);
    CHECK(invert_generator_word("aab") == "BAA");
    CHECK(invert_move_word("frR") == "rRF");
    CHECK(free_reduce("abBAb") == "b");
    CHECK(free_reduce("fFrR") == "");
    CHECK(phi_letters("aAbB") == "fFrR");
    CHECK(phi_inverse_letters("fFrR") == "aAbB");
    CHECK(phi_word("ab") == "rf");
    CHECK(phi_word("ab", EvalOrder::Forward) == "fr");
}

TEST_CASE("generator words of move words") {
    for (const char* m : {"", "f", "rf", "frrF", "RRfr"}) {
        std::string g = generator_word_of_moves(m);
        CHECK(eval_word(g) == apply_move_word(base_state(), m));
    }
}
