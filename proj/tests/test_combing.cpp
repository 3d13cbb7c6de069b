#include "doctest.h"
#include "ptolemy/combing.hpp"
#include "ptolemy/mosher.hpp"
#include "ptolemy/transfer.hpp"
#include "ptolemy/words.hpp"
#include "support.hpp"

using namespace ptolemy;
using namespace testing_support;

TEST_CASE("transfers keep the triangulation and move the d.o.e.") {
    State s = apply_move_word(base_state(), "frfRf");
    for (auto& e : s.diags) {
        for (OEdge to : {OEdge{e.lo, e.hi}, OEdge{e.hi, e.lo}}) {
            TransferWord t = transfer_word(s, s.doe, to);
            State x = apply_move_word(s, t.moves());
            CHECK(x.doe == to);
            CHECK(deviation_edges(x) == deviation_edges(s));
        }
        TransferWord t = transfer_to_edge(s, s.doe, e);
        CHECK(apply_move_word(s, t.moves()).doe.edge() == e);
    }
}

TEST_CASE("a transfer to the d.o.e. itself is empty") {
    State b = base_state();
    CHECK(transfer_word(b, b.doe, b.doe).moves().empty());
    CHECK(epsilon(b, b.doe, b.doe.edge(), b.doe.from) == 0);
}

TEST_CASE("transfer words are words in the modular group") {
    State s = apply_move_word(base_state(), "rfrf");
    TransferWord t = transfer_to_edge(s, s.doe, s.diags.back());
    std::string g = t.generators();
    std::string nf = psl2z_normal_form(g);
    CHECK(psl2z_normal_form(nf) == nf);
    CHECK(psl2z_normal_form("aaaa").empty());
    CHECK(psl2z_normal_form("bbb").empty());
    CHECK(psl2z_normal_form("bB").empty());
}

TEST_CASE("mosher reduction of the base is empty") {
    CHECK(mosher_reduction_word(base_state()).empty());
    CHECK(mosher_word(base_state()).empty());
    CHECK(mosher_flip_count(base_state()) == 0);
    CHECK(combing(base_state()).empty());
    CHECK(reduced_combing(base_state()).empty());
}

TEST_CASE("one flip away from the base") {
    State z = flip(base_state(), Edge(make_cusp(0, 1), make_cusp(1, 1)));
    CHECK(mosher_flip_count(z) == 1);
    DeviationPolygon dp = deviation_polygon(z);
    REQUIRE(dp.chords.size() == 1);
    CHECK(Edge(dp.chords[0].from, dp.chords[0].to) == Edge(make_cusp(0, 1), make_cusp(1, 1)));
    CHECK(apply_move_word(z, mosher_reduction_word(z)) == base_state());
    CHECK(apply_move_word(base_state(), mosher_word(z)) == z);
}

TEST_CASE("mosher trace ends at the base") {
    State z = eval_word("abaabAb");
    CombingTrace t = mosher_flip_sequence(z);
    REQUIRE(!t.empty());
    CHECK(t.front().before == z);
    CHECK(t.back().after == base_state());
    for (size_t k = 1; k < t.size(); ++k) CHECK(t[k].before == t[k - 1].after);
    CHECK(!trace_json(t).empty());
}

TEST_CASE("flip paths realize the flip and keep the d.o.e.") {
    State s = apply_move_word(base_state(), "frfrrfRf");
    for (auto& e : s.diags) {
        if (e == s.doe.edge()) continue;
        std::string p = comb_flip_path(s, e);
        State x = apply_move_word(s, p);
        CHECK(x == flip(s, e));
        CHECK(x.doe == s.doe);
    }
}

TEST_CASE("corridor near the d.o.e. needs no retriangulation") {
    State b = base_state();
    TriangleChain c = triangle_chain(b, b.doe.edge());
    CHECK(c.nearby);
    CHECK(dual_distance(b, b.doe.edge()) == 0);
    CHECK(triangle_chain(b, Edge(make_cusp(0, 1), make_cusp(1, 1))).nearby);
}

TEST_CASE("combings evaluate to their element") {
    for (const char* w : {"a", "b", "ab", "abAB", "aabab", "babaab"}) {
        State z = eval_word(w);
        CHECK(apply_move_word(base_state(), combing(z)) == z);
        std::string r = reduced_combing(z);
        CHECK(apply_move_word(base_state(), r) == z);
        CHECK(free_reduce(r) == r);
    }
}
