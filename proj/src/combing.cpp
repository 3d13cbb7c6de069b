#include "ptolemy/combing.hpp"
#include "ptolemy/polygon.hpp"
#include "ptolemy/transfer.hpp"
#include "ptolemy/words.hpp"
#include <algorithm>
#include <stdexcept>

namespace ptolemy {

TriangleChain triangle_chain(const State& s, const Edge& f) {
    TriangleChain c;
    if (f == s.doe.edge()) { c.nearby = true; return c; }
    std::vector<OEdge> v = transfer_geodesic(s, s.doe, f);
    size_t k = 1;
    if (k < v.size() && v[k] == s.doe.rev()) ++k;
    c.crossed.assign(v.begin() + k, v.end());
    if (c.crossed.empty() || c.crossed.back().edge() != f) throw std::logic_error("triangle_chain: walk did not reach f");
    c.nearby = c.crossed.size() == 1;
    for (size_t i = 0; i + 1 < c.crossed.size(); ++i) {
        const OEdge& h = c.crossed[i];
        c.cells.push_back({h.from, h.to, left_apex(s, h)});
    }
    return c;
}

int dual_distance(const State& s, const Edge& f) {
    return int(triangle_chain(s, f).crossed.size());
}

namespace {

std::vector<Cusp> quad_vertices(const State& s) {
    return {s.doe.from, s.doe.to, left_apex(s, s.doe), right_apex(s, s.doe)};
}

void add_unique(std::vector<Cusp>& v, const Cusp& c) {
    if (std::find(v.begin(), v.end(), c) == v.end()) v.push_back(c);
}

struct ZGoal {
    int x1, x3;
    std::vector<std::pair<int, int>> keep;
    int from, to;
};

bool z_goal(const PolyState& p, const void* ctx) {
    auto* g = static_cast<const ZGoal*>(ctx);
    if (p.from != g->from || p.to != g->to || !p.t.edge(g->x1, g->x3)) return false;
    for (auto [a, b] : g->keep)
        if (!p.t.edge(a, b)) return false;
    return true;
}

// moves inside Z that put the chord x1x3 in while keeping Q and the d.o.e.
std::string retriangulate(const State& s, std::vector<Cusp> Z, const Cusp& x1, const Cusp& x3) {
    std::sort(Z.begin(), Z.end(), cusp_less);
    int m = int(Z.size());
    auto idx = [&](const Cusp& c) { return int(std::find(Z.begin(), Z.end(), c) - Z.begin()); };
    std::vector<std::pair<int, int>> d;
    for (int i = 0; i < m; ++i)
        for (int j = i + 2; j < m; ++j)
            if (!(i == 0 && j == m - 1) && has_edge(s, Edge(Z[i], Z[j]))) d.push_back({i, j});
    if (int(d.size()) != m - 3) throw std::logic_error("corridor: Z is not triangulated by the state");
    PolyState p{poly_from_diagonals(m, d), idx(s.doe.from), idx(s.doe.to)};
    ZGoal g{idx(x1), idx(x3), {}, p.from, p.to};
    std::vector<Cusp> q = quad_vertices(s);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (has_edge(s, Edge(q[a], q[b]))) g.keep.push_back({idx(q[a]), idx(q[b])});
    return poly_shortest_word(p, z_goal, &g);
}

} // namespace

Corridor build_corridor(const State& s, const Edge& f) {
    Corridor c;
    State cur = s;
    for (;;) {
        TriangleChain ch = triangle_chain(cur, f);
        int q = int(ch.crossed.size());
        if (ch.nearby || q <= 2) break;
        std::vector<Cusp> a{ch.crossed[0].from}, b{ch.crossed[0].to};
        int cut = -1;
        for (int i = 0; i + 2 < q; ++i) {
            const OEdge& h = ch.crossed[i];
            const Cusp& z = ch.cells[i][2];
            if (ch.crossed[i + 1].from == h.from) b.push_back(z);
            else a.push_back(z);
            if (a.size() == 3 || b.size() == 3) { cut = i; break; }
        }
        if (cut < 0) break;
        std::vector<Cusp> Z = quad_vertices(cur);
        for (auto& x : a) add_unique(Z, x);
        for (auto& x : b) add_unique(Z, x);
        const std::vector<Cusp>& side = a.size() == 3 ? a : b;
        std::string w = retriangulate(cur, Z, side[0], side[2]);
        State nxt = apply_move_word(cur, w);
        if (nxt.doe != cur.doe || !has_edge(nxt, Edge(side[0], side[2])))
            throw std::logic_error("corridor: retriangulation missed its goal");
        std::sort(Z.begin(), Z.end(), cusp_less);
        c.steps.push_back(CorridorStep{Z, w, nxt});
        if (int(triangle_chain(nxt, f).crossed.size()) >= q) throw std::logic_error("corridor: chain did not shrink");
        cur = nxt;
    }
    TriangleChain ch = triangle_chain(cur, f);
    std::vector<Cusp> all = quad_vertices(cur);
    for (auto& cell : ch.cells)
        for (auto& x : cell) add_unique(all, x);
    OEdge last = ch.crossed.empty() ? cur.doe : ch.crossed.back();
    add_unique(all, last.from);
    add_unique(all, last.to);
    add_unique(all, left_apex(cur, last));
    c.finalVertices = int(all.size());
    return c;
}

namespace {

// a piece of a combing word; transfers keep their end points so that
// consecutive ones can be replaced by a direct transfer
struct Segment {
    bool transfer = false;
    std::string moves;
    State start;
    OEdge to;
};

void push_transfer(std::vector<Segment>& out, const State& s, const std::string& mv) {
    State e = apply_move_word(s, mv);
    out.push_back(Segment{true, mv, s, e.doe});
}

void push_moves(std::vector<Segment>& out, const std::string& mv) {
    if (!mv.empty()) out.push_back(Segment{false, mv, State{}, OEdge{}});
}

State flip_path_segments(const State& s, const Edge& f, std::vector<Segment>& out) {
    if (f == s.doe.edge()) {
        push_moves(out, "f");
        return move_F(s);
    }
    if (!has_edge(s, f)) throw std::invalid_argument("comb_flip_path: not an edge of the triangulation");
    Corridor c = build_corridor(s, f);
    std::string C;
    for (auto& st : c.steps) C += st.movesInside;
    push_moves(out, C);
    State cur = c.steps.empty() ? s : c.steps.back().stateAfter;
    std::string T = transfer_to_edge(cur, cur.doe, f).moves();
    push_transfer(out, cur, T);
    cur = apply_move_word(cur, T);
    cur = move_F(cur);
    push_moves(out, "f");
    std::string back = transfer_word(cur, cur.doe, s.doe).moves();
    push_transfer(out, cur, back);
    cur = apply_move_word(cur, back);
    std::string Ci = invert_move_word(C);
    push_moves(out, Ci);
    return apply_move_word(cur, Ci);
}

std::string concat(const std::vector<Segment>& segs) {
    std::string w;
    for (auto& s : segs) w += s.moves;
    return w;
}

std::vector<Segment> combing_segments(const State& z) {
    std::vector<Segment> segs;
    State cur = normalize(z);
    DeviationPolygon dp = deviation_polygon(cur);
    for (const Chord& g : dp.chords) {
        while (!has_edge(cur, Edge(g.from, g.to))) {
            Prong p = find_prong(cur, g);
            Edge f(p.left, p.right);
            State expect = flip(cur, f);
            cur = flip_path_segments(cur, f, segs);
            if (cur != expect) throw std::logic_error("combing: flip path does not realize the flip");
        }
    }
    // home transfer, plain Mosher type
    std::string home = transfer_word(cur, cur.doe, OEdge{inf_cusp(), make_cusp(0, 1)}).moves();
    push_transfer(segs, cur, home);
    cur = apply_move_word(cur, home);
    if (cur != base_state()) throw std::logic_error("combing: did not reach the base state");
    return segs;
}

} // namespace

std::string comb_flip_path(const State& s, const Edge& f) {
    std::vector<Segment> segs;
    flip_path_segments(s, f, segs);
    return concat(segs);
}

std::string combing(const State& z) { return invert_move_word(concat(combing_segments(z))); }

std::string reduced_combing(const State& z) {
    std::vector<Segment> segs = combing_segments(z);
    // drop the common part of consecutive transfers, cancel seams, repeat
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<Segment> out;
        for (auto& s : segs) {
            if (s.moves.empty()) { changed = true; continue; }
            if (!out.empty() && out.back().transfer == s.transfer) {
                Segment& t = out.back();
                if (s.transfer) t.moves = transfer_word(t.start, t.start.doe, s.to).moves();
                else t.moves = free_reduce(t.moves + s.moves);
                t.to = s.to;
                if (t.moves.empty()) out.pop_back();
                changed = true;
                continue;
            }
            out.push_back(s);
        }
        segs = std::move(out);
    }
    return invert_move_word(free_reduce(concat(segs)));
}

} // namespace ptolemy
