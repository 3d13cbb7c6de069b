#include "ptolemy/mosher.hpp"
#include "ptolemy/transfer.hpp"
#include "ptolemy/words.hpp"
#include <algorithm>
#include <stdexcept>
#include "json.hpp"

namespace ptolemy {

DeviationPolygon deviation_polygon(const State& z) {
    DeviationPolygon d;
    d.support = normalize(z);
    const auto& P = d.support.poly;
    std::vector<Edge> missing;
    for (size_t i = 0; i < P.size(); ++i)
        for (size_t j = i + 1; j < P.size(); ++j) {
            Edge e(P[i], P[j]);
            if (!is_farey(P[i], P[j]) || is_side(d.support, e)) continue;
            if (!is_diag(d.support, e)) missing.push_back(e);
        }
    std::sort(missing.begin(), missing.end(), base_edge_order);
    // orientation: from the endpoint lower in cusp order
    for (auto& e : missing) d.chords.push_back(Chord{e.lo, e.hi});
    return d;
}

Prong find_prong(const State& s, const Chord& g) {
    std::vector<Cusp> nb = support_neighbours(s, g.from);
    for (size_t k = 0; k + 1 < nb.size(); ++k)
        if (in_open_arc(g.to, nb[k], nb[k + 1])) return Prong{g.from, nb[k], nb[k + 1]};
    throw std::logic_error("find_prong: chord leaves no prong at " + cusp_str(g.from));
}

namespace {
bool chord_present(const State& s, const Chord& g) { return has_edge(s, Edge(g.from, g.to)); }
} // namespace

ArcCombing comb_arc(const State& s0, const Chord& g) {
    ArcCombing r;
    State s = s0;
    // the number of crossed edges drops by one each round
    for (int guard = 0; guard < 1 << 16 && !chord_present(s, g); ++guard) {
        Prong p = find_prong(s, g);
        Edge f(p.left, p.right);
        s = flip(s, f);
        r.flips.push_back(f);
    }
    if (!chord_present(s, g)) throw std::logic_error("comb_arc: did not terminate");
    r.final_state = s;
    return r;
}

namespace {

struct Run {
    CombingTrace trace;
    std::string word;
};

Run run_mosher(const State& z) {
    Run run;
    State cur = normalize(z);
    DeviationPolygon dp = deviation_polygon(cur);
    auto push = [&](const std::string& op, const std::string& args, const State& before, const State& after) {
        run.trace.push_back(TraceStep{op, args, before, after});
    };
    for (const Chord& g : dp.chords) {
        while (!chord_present(cur, g)) {
            Prong p = find_prong(cur, g);
            Edge f(p.left, p.right);
            TransferWord tw = transfer_to_edge(cur, cur.doe, f);
            std::string tm = tw.moves();
            if (!tm.empty()) {
                State nxt = apply_move_word(cur, tm);
                push("transfer", tm, cur, nxt);
                run.word += tm;
                cur = nxt;
            }
            if (cur.doe.edge() != f) throw std::logic_error("mosher: transfer missed the prong edge");
            State nxt = move_F(cur);
            push("flip", cusp_str(f.lo) + "," + cusp_str(f.hi), cur, nxt);
            run.word += "f";
            cur = nxt;
        }
    }
    OEdge home{inf_cusp(), make_cusp(0, 1)};
    TransferWord tw = transfer_word(cur, cur.doe, home);
    std::string tm = tw.moves();
    if (!tm.empty()) {
        State nxt = apply_move_word(cur, tm);
        push("relabel", tm, cur, nxt);
        run.word += tm;
        cur = nxt;
    }
    if (cur != base_state()) throw std::logic_error("mosher: combing did not reach the base state");
    return run;
}

} // namespace

CombingTrace mosher_flip_sequence(const State& z) { return run_mosher(z).trace; }

std::string mosher_reduction_word(const State& z) { return run_mosher(z).word; }

std::string mosher_word(const State& z) { return invert_move_word(run_mosher(z).word); }

int mosher_flip_count(const State& z) {
    int n = 0;
    for (auto& st : run_mosher(z).trace) n += st.op == "flip";
    return n;
}

std::string trace_json(const CombingTrace& t) {
    nlohmann::json a = nlohmann::json::array();
    for (auto& st : t) {
        nlohmann::json j;
        j["op"] = st.op;
        j["args"] = st.args;
        j["stateHash"] = state_hash(st.after);
        a.push_back(j);
    }
    return a.dump();
}

} // namespace ptolemy
