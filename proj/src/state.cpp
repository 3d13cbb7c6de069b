#include "ptolemy/state.hpp"
#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include "json.hpp"

namespace ptolemy {

namespace {

bool cusp_lt(const Cusp& a, const Cusp& b) { return cusp_less(a, b); }

void insert_cusp(std::vector<Cusp>& v, const Cusp& c) {
    auto it = std::lower_bound(v.begin(), v.end(), c, cusp_lt);
    if (it != v.end() && *it == c) return;
    v.insert(it, c);
}

void insert_edge(std::vector<Edge>& v, const Edge& e) {
    auto it = std::lower_bound(v.begin(), v.end(), e, edge_less);
    if (it != v.end() && *it == e) return;
    v.insert(it, e);
}

void erase_edge(std::vector<Edge>& v, const Edge& e) {
    auto it = std::lower_bound(v.begin(), v.end(), e, edge_less);
    if (it == v.end() || *it != e) throw std::logic_error("erase_edge: missing edge");
    v.erase(it);
}

bool in_closed_arc(const Cusp& c, const Cusp& a, const Cusp& b) {
    return c == a || c == b || in_open_arc(c, a, b);
}

// edge of the support triangulation (side or inner edge)
bool p_edge(const State& s, const Cusp& a, const Cusp& b) {
    Edge e(a, b);
    return is_side(s, e) || is_diag(s, e);
}

} // namespace

bool State::operator==(const State& o) const {
    return doe == o.doe && poly == o.poly && diags == o.diags;
}

State base_state() {
    State s;
    Cusp inf = inf_cusp(), zero = make_cusp(0, 1);
    s.poly = {make_cusp(-1, 1), zero, make_cusp(1, 1), inf};
    s.diags = {Edge(zero, inf)};
    s.doe = OEdge{inf, zero};
    return s;
}

int poly_index(const State& s, const Cusp& c) {
    auto it = std::lower_bound(s.poly.begin(), s.poly.end(), c, cusp_lt);
    if (it == s.poly.end() || *it != c) return -1;
    return int(it - s.poly.begin());
}

bool is_side(const State& s, const Edge& e) {
    int i = poly_index(s, e.lo), j = poly_index(s, e.hi);
    if (i < 0 || j < 0) return false;
    int n = int(s.poly.size());
    return j == i + 1 || (i == 0 && j == n - 1);
}

bool is_diag(const State& s, const Edge& e) {
    return std::binary_search(s.diags.begin(), s.diags.end(), e, edge_less);
}

bool has_edge(const State& s, const Edge& e) {
    int i = poly_index(s, e.lo), j = poly_index(s, e.hi);
    if (i >= 0 && j >= 0) return is_side(s, e) || is_diag(s, e);
    return is_farey(e.lo, e.hi);
}

bool is_deviation(const State& s, const Edge& e) {
    return !is_farey(e.lo, e.hi) && is_diag(s, e);
}

std::vector<Edge> deviation_edges(const State& s) {
    std::vector<Edge> r;
    for (auto& e : s.diags)
        if (!is_farey(e.lo, e.hi)) r.push_back(e);
    return r;
}

Cusp left_apex(const State& s, const OEdge& e) {
    int iu = poly_index(s, e.from), iv = poly_index(s, e.to);
    int n = int(s.poly.size());
    if (iu >= 0 && iv >= 0) {
        Edge ed(e.from, e.to);
        bool inside = is_diag(s, ed) || (is_side(s, ed) && iv == (iu + 1) % n);
        if (inside) {
            for (int k = (iv + 1) % n; k != iu; k = (k + 1) % n) {
                const Cusp& x = s.poly[k];
                if (p_edge(s, e.from, x) && p_edge(s, x, e.to)) return x;
            }
            throw std::logic_error("left_apex: no triangle found in support");
        }
    }
    if (!is_farey(e.from, e.to)) throw std::logic_error("left_apex: not an edge " + cusp_str(e.from) + "," + cusp_str(e.to));
    return farey_left_apex(e.from, e.to);
}

std::vector<Cusp> support_neighbours(const State& s, const Cusp& v) {
    std::vector<Cusp> r;
    int iv = poly_index(s, v);
    if (iv < 0) return r;
    int n = int(s.poly.size());
    for (int k = 1; k < n; ++k) {
        const Cusp& x = s.poly[(iv + k) % n];
        if (p_edge(s, v, x)) r.push_back(x);
    }
    return r;
}

State grow_across(const State& s, const Edge& side) {
    if (!is_side(s, side)) throw std::invalid_argument("grow_across: not a side of the support");
    int i = poly_index(s, side.lo), j = poly_index(s, side.hi);
    int n = int(s.poly.size());
    Cusp a, b; // ccw direction a->b, support on the left
    if (j == (i + 1) % n) { a = side.lo; b = side.hi; } else { a = side.hi; b = side.lo; }
    Cusp apex = farey_left_apex(b, a);
    State r = s;
    insert_cusp(r.poly, apex);
    insert_edge(r.diags, side);
    return r;
}

namespace {
void cell_vertices(const EdgeAddress& a, const std::string& name, Cusp out[3]) {
    Cusp inf = inf_cusp(), zero = make_cusp(0, 1);
    if (name == "H") { out[0] = zero; out[1] = make_cusp(1, 1); out[2] = inf; return; }
    if (name == "T") { out[0] = make_cusp(-1, 1); out[1] = zero; out[2] = inf; return; }
    OEdge c = canonical_orientation(a);
    out[0] = c.from; out[1] = c.to; out[2] = farey_left_apex(c.from, c.to);
}
} // namespace

State grow_support(const State& s, const EdgeAddress& cell) {
    Cusp v[3];
    std::string name = cell.str();
    if (cell.anchor != EdgeAddress::Root && cell.turns.empty()) name = cell.anchor == EdgeAddress::Head ? "H" : "T";
    cell_vertices(cell, name, v);
    for (int k = 0; k < 3; ++k) {
        Cusp a = v[k], b = v[(k + 1) % 3], c = v[(k + 2) % 3];
        if (is_side(s, Edge(a, b)) && poly_index(s, c) < 0) {
            State r = grow_across(s, Edge(a, b));
            if (poly_index(r, c) < 0) throw std::logic_error("grow_support: wrong side");
            return r;
        }
    }
    throw std::invalid_argument("grow_support: cell not adjacent to support");
}

State grow_toward(const State& s, const Edge& e) {
    State r = s;
    for (int guard = 0; guard < 1 << 16; ++guard) {
        int i = poly_index(r, e.lo), j = poly_index(r, e.hi);
        if (i >= 0 && j >= 0 && !is_side(r, e)) return r;
        int n = int(r.poly.size());
        bool grown = false;
        for (int k = 0; k < n; ++k) {
            const Cusp& a = r.poly[k];
            const Cusp& b = r.poly[(k + 1) % n];
            if (in_closed_arc(e.lo, a, b) && in_closed_arc(e.hi, a, b)) {
                r = grow_across(r, Edge(a, b));
                grown = true;
                break;
            }
        }
        if (!grown) throw std::logic_error("grow_toward: chord not reachable");
    }
    throw std::logic_error("grow_toward: runaway");
}

State grow_to_contain(const State& s, const Cusp& a, const Cusp& b, const Cusp& c) {
    State r = s;
    for (int guard = 0; guard < 1 << 16; ++guard) {
        if (poly_index(r, a) >= 0 && poly_index(r, b) >= 0 && poly_index(r, c) >= 0) return r;
        int n = int(r.poly.size());
        bool grown = false;
        for (int k = 0; k < n; ++k) {
            const Cusp& x = r.poly[k];
            const Cusp& y = r.poly[(k + 1) % n];
            if (in_closed_arc(a, x, y) && in_closed_arc(b, x, y) && in_closed_arc(c, x, y)) {
                r = grow_across(r, Edge(x, y));
                grown = true;
                break;
            }
        }
        if (!grown) throw std::logic_error("grow_to_contain: triangle not reachable");
    }
    throw std::logic_error("grow_to_contain: runaway");
}

State normalize(const State& s) {
    State r = s;
    Edge de = r.doe.edge();
    bool changed = true;
    while (changed) {
        changed = false;
        int n = int(r.poly.size());
        if (n <= 4) break;
        for (int i = 0; i < n; ++i) {
            const Cusp& prev = r.poly[(i + n - 1) % n];
            const Cusp& next = r.poly[(i + 1) % n];
            if (!is_farey(prev, next)) continue;
            Edge inner(prev, next);
            if (inner == de || !is_diag(r, inner)) continue;
            erase_edge(r.diags, inner);
            r.poly.erase(r.poly.begin() + i);
            changed = true;
            break;
        }
    }
    return r;
}

bool is_normalized(const State& s) { return normalize(s) == s; }

bool state_equal(const State& a, const State& b) { return normalize(a) == normalize(b); }

std::string cell_name(const Cusp& a, const Cusp& b, const Cusp& c) {
    EdgeAddress best;
    bool have = false;
    Cusp v[3] = {a, b, c};
    for (int k = 0; k < 3; ++k) {
        EdgeAddress ad = address_of(Edge(v[k], v[(k + 1) % 3]));
        if (!have || ad.turns.size() < best.turns.size() ||
            (best.anchor != EdgeAddress::Root && ad.anchor == EdgeAddress::Root)) {
            best = ad;
            have = true;
        }
    }
    if (best.anchor == EdgeAddress::Root) {
        Cusp one = make_cusp(1, 1);
        return (a == one || b == one || c == one) ? "H" : "T";
    }
    return best.str();
}

std::vector<std::string> support_cells(const State& s) {
    std::set<std::string> names;
    int n = int(s.poly.size());
    std::vector<Edge> chords;
    for (int k = 0; k < n; ++k) chords.push_back(Edge(s.poly[k], s.poly[(k + 1) % n]));
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            if (!(i == 0 && j == n - 1) && is_farey(s.poly[i], s.poly[j])) chords.push_back(Edge(s.poly[i], s.poly[j]));
    for (auto& e : chords) {
        for (int side = 0; side < 2; ++side) {
            Cusp u = side ? e.hi : e.lo, v = side ? e.lo : e.hi;
            Cusp x = farey_left_apex(u, v);
            if (poly_index(s, x) >= 0) names.insert(cell_name(u, v, x));
        }
    }
    std::vector<std::string> out(names.begin(), names.end());
    std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
        auto conv = [](const std::string& x) {
            if (x == "H" || x == "T") { EdgeAddress r; r.anchor = x == "H" ? EdgeAddress::Head : EdgeAddress::Tail; return r; }
            return EdgeAddress::parse(x);
        };
        EdgeAddress A = conv(a), B = conv(b);
        if (address_less(A, B)) return true;
        if (address_less(B, A)) return false;
        return a < b;
    });
    return out;
}

State flip_raw(const State& s, const Edge& e) {
    if (!is_diag(s, e)) throw std::invalid_argument("flip_raw: edge is not an inner edge of the support");
    State r = s;
    if (e == s.doe.edge()) {
        Cusp l = left_apex(s, s.doe), rr = right_apex(s, s.doe);
        erase_edge(r.diags, e);
        insert_edge(r.diags, Edge(rr, l));
        // new d.o.e. runs from the old left apex to the old right apex
        r.doe = OEdge{l, rr};
        return r;
    }
    OEdge o{e.lo, e.hi};
    Cusp l = left_apex(s, o), rr = right_apex(s, o);
    erase_edge(r.diags, e);
    insert_edge(r.diags, Edge(rr, l));
    return r;
}

State flip(const State& s, const Edge& e) {
    if (e == s.doe.edge()) return move_F(s);
    if (!has_edge(s, e)) throw std::invalid_argument("flip: not an edge of the triangulation");
    State t = grow_toward(s, e);
    return normalize(flip_raw(t, e));
}

State move_F(const State& s) { return normalize(flip_raw(s, s.doe.edge())); }

State move_R(const State& s) {
    Cusp l = left_apex(s, s.doe);
    State r = s;
    r.doe = OEdge{l, s.doe.from};
    r = grow_toward(r, r.doe.edge());
    return normalize(r);
}

State move_Finv(const State& s) { return move_F(move_F(move_F(s))); }
State move_Rinv(const State& s) { return move_R(move_R(s)); }

State apply_move(const State& s, char m) {
    switch (m) {
    case 'f': return move_F(s);
    case 'F': return move_Finv(s);
    case 'r': return move_R(s);
    case 'R': return move_Rinv(s);
    }
    throw std::invalid_argument(std::string("bad move letter: ") + m);
}

State apply_move_word(const State& s, const std::string& w) {
    State r = s;
    for (char c : w) r = apply_move(r, c);
    return r;
}

std::string state_key(const State& s) {
    std::string k;
    auto put = [&](int64_t x) { k.append(reinterpret_cast<const char*>(&x), sizeof x); };
    put(int64_t(s.poly.size()));
    for (auto& c : s.poly) { put(c.p); put(c.q); }
    for (auto& e : s.diags) { put(int64_t(poly_index(s, e.lo)) * 4096 + poly_index(s, e.hi)); }
    put(s.doe.from.p); put(s.doe.from.q); put(s.doe.to.p); put(s.doe.to.q);
    return k;
}

uint64_t state_hash(const State& s) {
    std::string k = state_key(s);
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : k) { h ^= c; h *= 1099511628211ull; }
    return h;
}

std::string state_json(const State& s) {
    nlohmann::json j;
    std::vector<std::string> cusps;
    for (auto& c : s.poly) cusps.push_back(cusp_str(c));
    j["cusps"] = cusps;
    j["support"] = support_cells(s);
    nlohmann::json d = nlohmann::json::array();
    for (auto& e : s.diags) d.push_back({poly_index(s, e.lo), poly_index(s, e.hi)});
    j["diagonals"] = d;
    nlohmann::json doe;
    if (is_farey(s.doe.from, s.doe.to)) {
        OrientedAddress oa = oriented_address_of(s.doe);
        doe["address"] = oa.address.str();
        doe["reversed"] = oa.reversed;
    } else {
        doe["chord"] = {poly_index(s, s.doe.from), poly_index(s, s.doe.to)};
    }
    j["doe"] = doe;
    return j.dump();
}

std::string state_debug(const State& s) {
    std::ostringstream o;
    o << "poly[";
    for (size_t i = 0; i < s.poly.size(); ++i) o << (i ? " " : "") << cusp_str(s.poly[i]);
    o << "] diags[";
    for (size_t i = 0; i < s.diags.size(); ++i)
        o << (i ? " " : "") << cusp_str(s.diags[i].lo) << "-" << cusp_str(s.diags[i].hi);
    o << "] doe " << cusp_str(s.doe.from) << "->" << cusp_str(s.doe.to);
    return o.str();
}

void check_state(const State& s) {
    int n = int(s.poly.size());
    if (n < 4) throw std::logic_error("support too small");
    for (int i = 0; i + 1 < n; ++i)
        if (!cusp_less(s.poly[i], s.poly[i + 1])) throw std::logic_error("poly not sorted");
    for (int i = 0; i < n; ++i)
        if (!is_farey(s.poly[i], s.poly[(i + 1) % n])) throw std::logic_error("support side not a base edge");
    if (int(s.diags.size()) != n - 3) throw std::logic_error("wrong diagonal count");
    for (size_t i = 0; i < s.diags.size(); ++i) {
        const Edge& e = s.diags[i];
        if (poly_index(s, e.lo) < 0 || poly_index(s, e.hi) < 0) throw std::logic_error("diagonal endpoint outside support");
        if (is_side(s, e)) throw std::logic_error("diagonal is a side");
        for (size_t j = i + 1; j < s.diags.size(); ++j)
            if (chords_cross(e, s.diags[j])) throw std::logic_error("crossing diagonals");
    }
    if (!is_diag(s, s.doe.edge())) throw std::logic_error("doe is not an inner edge");
    if (!is_normalized(s)) throw std::logic_error("state not normalized");
}

} // namespace ptolemy
