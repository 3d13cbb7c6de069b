#include "doctest.h"
#include "ptolemy/braided.hpp"
#include "ptolemy/mosher.hpp"
#include "support.hpp"

using namespace ptolemy;
using namespace testing_support;

namespace {
Edge E(int64_t p1, int64_t q1, int64_t p2, int64_t q2) { return Edge(make_cusp(p1, q1), make_cusp(p2, q2)); }
Edge Einf(int64_t p) { return Edge(make_cusp(p, 1), inf_cusp()); }
} // namespace

TEST_CASE("base triangles") {
    Tri t = make_tri(make_cusp(0, 1), make_cusp(1, 1), inf_cusp());
    CHECK(t.has_side(E(0, 1, 1, 1)));
    CHECK(t.third(Einf(0)) == make_cusp(1, 1));
    Tri u = across(t, E(0, 1, 1, 1));
    CHECK(u.has(make_cusp(1, 2)));
    CHECK(across(u, E(0, 1, 1, 1)) == t);
    CHECK(common_tri(Einf(0), E(0, 1, 1, 1)));
    CHECK_FALSE(common_tri(Einf(0), Einf(2)));
}

TEST_CASE("straight arcs have a single inert carried entry") {
    for (auto& e : braid_pool()) {
        Arc a = trivial_arc(e);
        CHECK(is_straight(a));
        CrossingWord w = crossing_word(a);
        REQUIRE(w.length() == 1);
        CHECK(w.entries[0].carried);
        CHECK(w.entries[0].punct == e);
        CHECK(is_tight(w));
        CHECK_FALSE(conjugate_puncture(w));
    }
}

TEST_CASE("tight reduction") {
    Edge p = Einf(0), q = E(0, 1, 1, 1);
    CrossingWord w{make_cusp(0, 1), inf_cusp(), {{p, 'L', false}, {p, 'R', false}, {q, '0', true}}};
    CHECK_FALSE(is_tight(w));
    CrossingWord r = tight_reduce(w);
    REQUIRE(r.length() == 1);
    CHECK(r.entries[0].carried);
    CrossingWord wind{make_cusp(0, 1), inf_cusp(), {{p, 'L', false}, {p, 'L', false}, {p, 'L', false}, {q, '0', true}}};
    CHECK_THROWS_AS(tight_reduce(wind), std::invalid_argument);
}

TEST_CASE("conjugate puncture is the first sign change after the first active entry") {
    Edge p = Einf(0), q = E(0, 1, 1, 1), r = Einf(1);
    CrossingWord w{make_cusp(0, 1), inf_cusp(), {{p, '0', false}, {q, 'L', false}, {r, 'L', false}, {p, 'R', true}}};
    auto c = conjugate_puncture(w);
    REQUIRE(c);
    CHECK(c->first == 1);
    CHECK(c->second == 3);
    auto all = conjugate_pairs(w);
    REQUIRE(!all.empty());
    CHECK(all.front() == *c);
    CrossingWord mono{make_cusp(0, 1), inf_cusp(), {{q, 'L', false}, {r, 'L', false}}};
    CHECK_FALSE(conjugate_puncture(mono));
}

TEST_CASE("untangling factor of adjacent entries is one half twist") {
    Edge p = Einf(0), q = E(0, 1, 1, 1);
    CrossingWord w{make_cusp(0, 1), inf_cusp(), {{p, 'R', false}, {q, 'L', true}}};
    BraidWord b = untangling_factor(w, 0, 1);
    REQUIRE(b.size() == 1);
    CHECK(b[0].sign == 1);
    // a half twist does not depend on the order of its two punctures
    CHECK(((b[0].e == p && b[0].f == q) || (b[0].e == q && b[0].f == p)));
    CHECK_THROWS(untangling_factor(w, 1, 0));
}

TEST_CASE("a half twist and its inverse cancel") {
    BraidLetter l{Einf(0), E(0, 1, 1, 1), 1};
    BraidWord b{l, BraidLetter{l.e, l.f, -1}};
    CHECK(apply_braid(b, base_pstate()) == base_pstate());
    CHECK(braid_trivial(b));
    CHECK(reduce_braid(b).empty());
    CHECK_FALSE(braid_trivial({l}));
    CHECK(braid_equal(invert_braid({l}), {BraidLetter{l.e, l.f, -1}}));
}

TEST_CASE("half twists on a triangle satisfy the braid relation") {
    Edge x = Einf(0), y = E(0, 1, 1, 1), z = Einf(1);
    BraidLetter s{x, y, 1}, t{y, z, 1};
    CHECK(braid_equal({s, t, s}, {t, s, t}));
}

TEST_CASE("a once-braided base edge straightens with one letter") {
    BraidLetter l{Einf(0), E(0, 1, 1, 1), 1};
    PuncturedState s = apply_braid({l}, base_pstate());
    REQUIRE(!s.arcs.empty());
    for (auto& [e, a] : s.arcs) {
        CHECK_FALSE(is_straight(a));
        Straightening st = straighten_comb_arc(s, e);
        CHECK(st.total.size() == 1);
        CHECK(is_straight(arc_of(st.result, e)));
    }
    Straightening all = straighten(s);
    CHECK(all.result.arcs.empty());
    CHECK(braid_equal(invert_braid(all.total), {l}));
}

TEST_CASE("punctured moves invert") {
    PuncturedState b = base_pstate();
    CHECK(apply_star_word(b, "fF") == b);
    CHECK(apply_star_word(b, "rR") == b);
    CHECK(apply_star_word(b, "rrr") == b);
}

TEST_CASE("generator orders upstairs") {
    CHECK(projects_to_identity("aaaa"));
    CHECK(projects_to_identity("bbb"));
    CHECK(is_identity_star("aaaa"));
    CHECK(is_identity_star("bbb"));
    CHECK_FALSE(projects_to_identity("ab"));
}

TEST_CASE("the pentagon relation lifts to a half twist") {
    std::string w = power("ba", 5);
    REQUIRE(projects_to_identity(w));
    CHECK_FALSE(is_identity_star(w));
    BraidWord k = kernel_braid(w);
    CHECK(braid_equal(k, {BraidLetter{E(0, 1, 1, 1), Einf(0), 1}}));
}

TEST_CASE("the free group action sends generators to conjugates of generators") {
    std::mt19937 rng(21);
    for (int t = 0; t < 50; ++t) {
        StrandAutomorphism m = braid_automorphism(random_braid(rng, 4));
        for (auto& [e, img] : m.images) CHECK(is_conjugate_of_letter(img));
    }
    FreeWord g = loop_word(generator_loop(Einf(0)));
    REQUIRE(g.size() == 1);
    CHECK(g[0].e == Einf(0));
}

TEST_CASE("admissibility balance") {
    Arc a = trivial_arc(Einf(0));
    CHECK(admissibility_balance(a, a) == std::make_pair(0, 0));
    BraidLetter l{Einf(0), E(0, 1, 1, 1), 1};
    Arc b = arc_of(apply_braid({l}, base_pstate()), Einf(0));
    CHECK(admissibility_balance(a, b) == std::make_pair(1, 1));
}

TEST_CASE("combing in the punctured group round trips") {
    for (const char* w : {"", "a", "b", "ab", "abAB", "baba"}) {
        StarCombing c = tstar_combing(w);
        CHECK(apply_star_word(base_pstate(), c.moves) == eval_star(w));
    }
}
