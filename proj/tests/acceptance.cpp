// acceptance run: one line per criterion, exit status 1 if any fails
#include "ptolemy/analyzer.hpp"
#include "ptolemy/braided.hpp"
#include "ptolemy/combing.hpp"
#include "ptolemy/mosher.hpp"
#include "ptolemy/treepair.hpp"
#include "ptolemy/words.hpp"
#include "support.hpp"
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

using namespace ptolemy;
using namespace testing_support;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void run(int id, const char* name, const std::function<Outcome()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = f();
    } catch (std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::printf("criterion %2d %-28s %s  %s (%.1fs)\n", id, name, o.pass ? "PASS" : "FAIL", o.detail.c_str(), dt);
    std::fflush(stdout);
}

bool symbol_trivial(const std::string& w) { return symbol_reduce(word_symbol(w)) == identity_pair(); }

Outcome relations() {
    int n = 0, bad = 0;
    std::vector<std::string> all = presentation_relators();
    for (auto& r : abc_relators()) all.push_back(r);
    for (auto& r : all) {
        ++n;
        if (!is_identity(r) || !symbol_trivial(r)) ++bad;
    }
    return {bad == 0, std::to_string(n - bad) + "/" + std::to_string(n) + " relators trivial in states and tree pairs"};
}

Outcome oracle_equivalence() {
    std::mt19937 rng(11);
    auto rels = presentation_relators();
    int agree = 0, equalPairs = 0, N = 1000;
    for (int t = 0; t < N; ++t) {
        std::string u = random_word(rng, 10), v;
        if (t % 2) {
            v = random_word(rng, 10);
        } else {
            // same element: splice a relator or a cancelling pair into u
            size_t at = u.empty() ? 0 : rng() % (u.size() + 1);
            std::string ins = rng() % 2 ? rels[rng() % rels.size()] : std::string("aA");
            v = u.substr(0, at) + ins + u.substr(at);
        }
        bool byState = eval_word(u) == eval_word(v);
        bool bySymbol = symbol_reduce(word_symbol(u)) == symbol_reduce(word_symbol(v));
        if (byState == bySymbol) ++agree;
        if (byState) ++equalPairs;
    }
    return {agree == N, std::to_string(agree) + "/" + std::to_string(N) + " agree, " + std::to_string(equalPairs) + " equal pairs"};
}

Outcome polygon_diameter() {
    PolygonGraphReport r = polygon_move_graph(8);
    return {r.diameter < 30, "8-gon move graph: " + std::to_string(r.states) + " states, diameter " + std::to_string(r.diameter)};
}

Outcome corridor_bound() {
    std::mt19937 rng(7);
    int maxZ = 0, samples = 0;
    while (samples < 1000) {
        std::string w;
        int len = int(rng() % 12);
        for (int i = 0; i < len; ++i) w += "fFrR"[rng() % 4];
        State s = apply_move_word(base_state(), w);
        OEdge h = rng() % 2 ? s.doe : s.doe.rev();
        int d = 1 + int(rng() % 10);
        for (int k = 0; k < d; ++k) {
            Cusp l = left_apex(s, h);
            h = rng() % 2 ? OEdge{h.from, l} : OEdge{l, h.to};
        }
        Edge f = h.edge();
        if (dual_distance(s, f) > 10) continue;
        ++samples;
        Corridor c = build_corridor(s, f);
        for (auto& st : c.steps) maxZ = std::max(maxZ, int(st.zPolygon.size()));
    }
    return {maxZ <= 7, std::to_string(samples) + " pairs, largest Z_n has " + std::to_string(maxZ) + " vertices"};
}

Outcome fellow_traveler() {
    // exact distances up to 12, certified upper bounds up to 16
    Ball ball(12);
    DistanceOracle oracle(ball, 4);
    std::mt19937 rng(3);
    int feasible = 0, inconclusive = 0, over = 0, maxK = 0, N = 100;
    for (int t = 0; t < N; ++t) {
        std::string w = random_word(rng, 8);
        auto A = path_states(reduced_combing(eval_word(w)));
        for (std::string g : {"a", "b"}) {
            auto B = path_states(reduced_combing(eval_word(g + w)));
            CorridorReport r = min_corridor_K(A, B, 30, oracle);
            if (r.status != CorridorReport::Feasible) { ++inconclusive; continue; }
            ++feasible;
            if (r.k > 30) ++over;
            maxK = std::max(maxK, r.k);
        }
    }
    std::ostringstream o;
    o << feasible << "/" << 2 * N << " neighbour pairs feasible, max K " << maxK << ", inconclusive " << inconclusive;
    return {inconclusive == 0 && over == 0, o.str()};
}

Outcome combing_round_trip() {
    std::mt19937 rng(5);
    int ok = 0, N = 1000;
    for (int t = 0; t < N; ++t) {
        State z = eval_word(random_word(rng, 8));
        if (apply_move_word(base_state(), combing(z)) == z && apply_move_word(base_state(), mosher_word(z)) == z) ++ok;
    }
    return {ok == N, std::to_string(ok) + "/" + std::to_string(N) + " round trips"};
}

Outcome flip_distances() {
    int threads = std::max(1u, std::thread::hardware_concurrency());
    std::ostringstream o;
    bool ok = true;
    int prev = 0;
    for (int n = 4; n <= 10; ++n) {
        FlipDiameter f = flip_graph_report(n, threads);
        o << "n=" << n << ":" << f.diameter << " ";
        ok = ok && f.diameter >= prev;
        prev = f.diameter;
    }
    FlipDiameter f13 = flip_graph_report(13, threads);
    o << "n=13:" << f13.diameter << " (bound 16)";
    return {ok && f13.diameter <= 2 * 13 - 10, o.str()};
}

Outcome kernel_relation() {
    const std::string w = power("ba", 5);
    bool proj = projects_to_identity(w);
    BraidWord k = kernel_braid(w);
    BraidWord s02{{Edge(make_cusp(0, 1), make_cusp(1, 1)), Edge(make_cusp(0, 1), inf_cusp()), 1}};
    bool eq = braid_equal(k, s02);
    bool nontrivial = !is_identity_star(w);
    return {proj && eq && nontrivial,
            "kernel " + braid_str(k) + (eq ? " equals" : " differs from") + " the half twist on the d.o.e. and its left neighbour"};
}

Outcome untangling() {
    std::mt19937 rng(9);
    int arcs = 0, steps = 0, primary = 0, bad = 0, N = 300;
    for (int t = 0; t < N; ++t) {
        PuncturedState s = random_mixed_state(rng, 6);
        PuncturedState b = apply_star_word(s, mosher_reduction_word(s.under));
        Straightening st = straighten(b);
        // each run of steps on one arc takes at most as many rounds as its starting length
        int runLen = 0, runRounds = 0;
        for (size_t k = 0; k < st.steps.size(); ++k) {
            auto& x = st.steps[k];
            ++steps;
            if (x.rank == 0) ++primary;
            if (x.lenAfter >= x.lenBefore) ++bad;
            if (k == 0 || st.steps[k - 1].arc != x.arc) {
                ++arcs;
                runLen = x.lenBefore;
                runRounds = 0;
            }
            if (++runRounds > runLen) ++bad;
        }
        if (!st.result.arcs.empty()) ++bad;
    }
    std::ostringstream o;
    o << arcs << " arcs, " << steps << " untangling steps, " << bad << " violations, " << primary
      << " steps used the first sign change";
    return {bad == 0, o.str()};
}

Outcome admissibility() {
    std::mt19937 rng(13);
    int pairs = 0, bad = 0;
    // braided images of base edges
    for (int t = 0; t < 300; ++t) {
        PuncturedState x = apply_braid(random_braid(rng, 5), base_pstate());
        PuncturedState y = apply_braid(random_braid(rng, 5), base_pstate());
        auto pool = braid_pool();
        Edge e = pool[rng() % pool.size()];
        auto r = admissibility_balance(arc_of(x, e), arc_of(y, e));
        ++pairs;
        if (r.first != r.second) ++bad;
    }
    // arcs of common edges of two punctured states
    for (int t = 0; t < 300; ++t) {
        PuncturedState x = random_mixed_state(rng, 6), y = random_mixed_state(rng, 6);
        for (auto& e : x.under.diags) {
            if (!has_edge(y.under, e)) continue;
            auto r = admissibility_balance(arc_of(x, e), arc_of(y, e));
            ++pairs;
            if (r.first != r.second) ++bad;
        }
    }
    return {bad == 0, std::to_string(pairs - bad) + "/" + std::to_string(pairs) + " pairs balanced"};
}

Outcome departure() {
    std::mt19937 rng(17);
    int N = 200, clean = 0;
    for (int t = 0; t < N; ++t) {
        std::string r = reduced_combing(eval_word(random_word(rng, 8)));
        if (free_reduce(r) == r) ++clean;
    }
    // planted back-and-forth: the unreduced profile grows with depth, the reduced one does not
    const int rmax = 4;
    std::vector<int> du, dr;
    for (int d : {4, 8, 12}) {
        State z = planted_pair(d);
        du.push_back(departure_profile({path_states(combing(z))}, rmax).D[rmax]);
        dr.push_back(departure_profile({path_states(reduced_combing(z))}, rmax).D[rmax]);
    }
    bool blowUp = du[0] < du[1] && du[1] < du[2];
    bool bounded = dr[0] == dr[1] && dr[1] == dr[2];
    std::ostringstream o;
    o << clean << "/" << N << " reduced combings free of inverse pairs; D(" << rmax << ") unreduced " << du[0] << "," << du[1]
      << "," << du[2] << " reduced " << dr[0] << "," << dr[1] << "," << dr[2];
    return {clean == N && blowUp && bounded, o.str()};
}

} // namespace

int main() {
    run(1, "relation suite", relations);
    run(2, "oracle equivalence", oracle_equivalence);
    run(3, "polygon diameter", polygon_diameter);
    run(4, "corridor bound K=7", corridor_bound);
    run(5, "fellow traveler K=30", fellow_traveler);
    run(6, "combing round trip", combing_round_trip);
    run(7, "flip distance", flip_distances);
    run(8, "T* kernel relation", kernel_relation);
    run(9, "untangling monotonicity", untangling);
    run(10, "admissibility balance", admissibility);
    run(11, "departure regression", departure);
    std::printf("%d criteria failed\n", failures);
    return failures ? 1 : 0;
}
