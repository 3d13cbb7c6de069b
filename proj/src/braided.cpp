#include "ptolemy/braided.hpp"
#include "ptolemy/mosher.hpp"
#include "ptolemy/transfer.hpp"
#include "ptolemy/words.hpp"
#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include "json.hpp"

namespace ptolemy {

// ---- triangles ------------------------------------------------------------

Cusp Tri::third(const Edge& e) const {
    if (!e.has(a)) return a;
    if (!e.has(b)) return b;
    return c;
}

Tri make_tri(const Cusp& x, const Cusp& y, const Cusp& z) {
    Cusp v[3] = {x, y, z};
    std::sort(v, v + 3, cusp_less);
    return Tri{v[0], v[1], v[2]};
}

Tri left_tri(const Cusp& u, const Cusp& v) {
    if (!is_farey(u, v)) throw std::invalid_argument("left_tri: not a base edge");
    return make_tri(u, v, farey_left_apex(u, v));
}

Tri across(const Tri& t, const Edge& side) {
    if (!t.has_side(side)) throw std::invalid_argument("across: not a side");
    Cusp z = t.third(side);
    return left_of(z, side.lo, side.hi) ? left_tri(side.hi, side.lo) : left_tri(side.lo, side.hi);
}

std::optional<Tri> common_tri(const Edge& e, const Edge& f) {
    if (e == f) return std::nullopt;
    Cusp shared, x, y;
    if (e.has(f.lo)) shared = f.lo;
    else if (e.has(f.hi)) shared = f.hi;
    else return std::nullopt;
    x = e.other(shared);
    y = f.other(shared);
    if (!is_farey(e.lo, e.hi) || !is_farey(f.lo, f.hi) || !is_farey(x, y)) return std::nullopt;
    return make_tri(shared, x, y);
}

namespace {

int vertex_index(const Tri& t, const Cusp& c) {
    if (t.a == c) return 0;
    if (t.b == c) return 1;
    if (t.c == c) return 2;
    return -1;
}

Cusp vertex(const Tri& t, int k) {
    k = ((k % 3) + 3) % 3;
    return k == 0 ? t.a : k == 1 ? t.b : t.c;
}

// side k runs from vertex k to vertex k+1, with t on its left
int side_index(const Tri& t, const Edge& e) {
    for (int k = 0; k < 3; ++k)
        if (Edge(vertex(t, k), vertex(t, k + 1)) == e) return k;
    return -1;
}

// positions on the boundary of t, ccw: vertex k at 4k, door near vertex k on
// side k at 4k+1, the puncture at 4k+2, the door near vertex k+1 at 4k+3
int door_port(const Tri& t, const Door& d) {
    int k = side_index(t, d.e);
    if (k < 0) throw std::logic_error("door_port: door not on triangle");
    return d.near == vertex(t, k) ? 4 * k + 1 : 4 * k + 3;
}

int vertex_port(const Tri& t, const Cusp& c) {
    int k = vertex_index(t, c);
    if (k < 0) throw std::logic_error("vertex_port: cusp not on triangle");
    return 4 * k;
}

bool open12(int u, int x, int y) {
    int du = ((u - x) % 12 + 12) % 12, dy = ((y - x) % 12 + 12) % 12;
    return du > 0 && du < dy;
}

bool separates(int x, int y, int u, int w) { return open12(u, x, y) != open12(w, x, y); }

// R when the puncture of d.e passes on the right of a curve crossing from t
char door_exponent(const Tri& t, const Door& d) {
    int k = side_index(t, d.e);
    if (k < 0) throw std::logic_error("door_exponent: door not on triangle");
    // t is on the right of vertex(k+1) -> vertex(k)
    return d.near == vertex(t, k + 1) ? 'R' : 'L';
}

// side of `from` to cross when turning around cusp y toward triangle `to`
Edge fan_side(const Tri& from, const Cusp& y, const Tri& to) {
    int k = vertex_index(from, y);
    Cusp s1 = vertex(from, k + 1), s2 = vertex(from, k + 2);
    Cusp z1 = vertex(to, vertex_index(to, y) + 1);
    if (z1 == s2 || in_open_arc(z1, s2, y)) return Edge(y, s2);
    return Edge(y, s1);
}

std::vector<Door> fan_doors(Tri from, const Cusp& y, const Tri& to) {
    std::vector<Door> out;
    if (vertex_index(from, y) < 0 || vertex_index(to, y) < 0) throw std::logic_error("fan_doors: cusp not shared");
    for (int guard = 0; from != to; ++guard) {
        if (guard > 1000000) throw std::logic_error("fan_doors: runaway");
        Edge side = fan_side(from, y, to);
        out.push_back(Door{side, y});
        from = across(from, side);
    }
    return out;
}

} // namespace

std::vector<Tri> path_tris(const Path& p) {
    std::vector<Tri> ts{p.start};
    for (auto& d : p.doors) ts.push_back(across(ts.back(), d.e));
    return ts;
}

Path canon_path(Path p, const Cusp& from, const Cusp& to) {
    if (!p.start.has(from)) throw std::logic_error("canon_path: start does not contain the initial cusp");
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<Door> st;
        for (auto& d : p.doors) {
            if (!st.empty() && st.back() == d) { st.pop_back(); changed = true; }
            else st.push_back(d);
        }
        p.doors = std::move(st);
        size_t k = 0;
        while (k < p.doors.size() && p.doors[k].near == from) {
            p.start = across(p.start, p.doors[k].e);
            ++k;
        }
        if (k) { p.doors.erase(p.doors.begin(), p.doors.begin() + k); changed = true; }
        while (!p.doors.empty() && p.doors.back().near == to) { p.doors.pop_back(); changed = true; }
    }
    return p;
}

Path reverse_path(const Path& p, const Cusp& from, const Cusp& to) {
    std::vector<Tri> ts = path_tris(p);
    Path r{ts.back(), {p.doors.rbegin(), p.doors.rend()}};
    return canon_path(r, to, from);
}

Path join_at(const Path& p1, const Cusp& from, const Cusp& mid, const Path& p2, const Cusp& to) {
    Tri end1 = path_tris(p1).back();
    Path r{p1.start, p1.doors};
    std::vector<Door> f = fan_doors(end1, mid, p2.start);
    r.doors.insert(r.doors.end(), f.begin(), f.end());
    r.doors.insert(r.doors.end(), p2.doors.begin(), p2.doors.end());
    return canon_path(r, from, to);
}

std::string path_str(const Path& p) {
    std::ostringstream o;
    o << "(" << cusp_str(p.start.a) << "," << cusp_str(p.start.b) << "," << cusp_str(p.start.c) << ")";
    for (auto& d : p.doors) o << " [" << cusp_str(d.e.lo) << "," << cusp_str(d.e.hi) << "]@" << cusp_str(d.near);
    return o.str();
}

// ---- arcs -------------------------------------------------------------------

Arc trivial_arc(const Edge& e) {
    if (!is_farey(e.lo, e.hi)) throw std::invalid_argument("trivial_arc: not a base edge");
    return Arc{e, e, Path{left_tri(e.lo, e.hi), {}}, Path{left_tri(e.hi, e.lo), {}}};
}

bool is_straight(const Arc& a) { return is_farey(a.under.lo, a.under.hi) && a == trivial_arc(a.under); }

Path left_pushoff(const Arc& a, const Cusp& x) {
    if (x == a.under.lo) return a.left;
    if (x == a.under.hi) return reverse_path(a.right, a.under.lo, a.under.hi);
    throw std::invalid_argument("left_pushoff: not an endpoint");
}

Path right_pushoff(const Arc& a, const Cusp& x) {
    if (x == a.under.lo) return a.right;
    if (x == a.under.hi) return reverse_path(a.left, a.under.lo, a.under.hi);
    throw std::invalid_argument("right_pushoff: not an endpoint");
}

namespace {

// arc x -> y given by its left and right pushoffs in that direction
Arc make_arc(const Cusp& x, const Cusp& y, const Edge& punct, const Path& L, const Path& R) {
    Edge u(x, y);
    if (x == u.lo) return Arc{u, punct, L, R};
    return Arc{u, punct, reverse_path(R, x, y), reverse_path(L, x, y)};
}

} // namespace

// ---- crossing words -------------------------------------------------------------

namespace {

std::vector<Door> free_reduce_doors(const std::vector<Door>& v) {
    std::vector<Door> st;
    for (auto& d : v) {
        if (!st.empty() && st.back() == d) st.pop_back();
        else st.push_back(d);
    }
    return st;
}

// the arc as a door sequence through the carried puncture: doors [0, mid) are
// crossed before the puncture, doors [mid + loop, n) after it
struct TightArc {
    Tri start;
    std::vector<Door> doors;   // pushoff on the side where the puncture detour is not empty
    std::vector<Door> other;   // the same for the opposite side
    size_t mid = 0, loop = 0, otherLoop = 0;
};

TightArc parse_arc(const Arc& a) {
    const Cusp &x = a.under.lo, &y = a.under.hi;
    // bring both pushoffs to a common first and last triangle
    std::vector<Door> L = a.left.doors, R = fan_doors(a.left.start, x, a.right.start);
    R.insert(R.end(), a.right.doors.begin(), a.right.doors.end());
    R = free_reduce_doors(R);
    Tri endL = path_tris(Path{a.left.start, L}).back(), endR = path_tris(Path{a.left.start, R}).back();
    std::vector<Door> tail = fan_doors(endR, y, endL);
    R.insert(R.end(), tail.begin(), tail.end());
    R = free_reduce_doors(R);
    size_t nl = L.size(), nr = R.size(), pre = 0, suf = 0;
    while (pre < nl && pre < nr && L[pre] == R[pre]) ++pre;
    while (suf + pre < nl && suf + pre < nr && L[nl - 1 - suf] == R[nr - 1 - suf]) ++suf;
    std::vector<Door> ml(L.begin() + pre, L.end() - suf), mr(R.begin() + pre, R.end() - suf);
    auto bad = [] { return std::logic_error("crossing_word: pushoffs do not differ by a detour around the carried puncture"); };
    TightArc t;
    t.start = a.left.start;
    if (ml.size() == 1 && mr.size() == 1) {
        if (ml[0].e != a.punct || mr[0].e != a.punct || ml[0] == mr[0]) throw bad();
        t.doors = L;
        t.other = R;
        t.mid = pre;
        t.loop = t.otherLoop = 1;
        return t;
    }
    if (!ml.empty() && !mr.empty()) throw bad();
    const std::vector<Door>& m = ml.empty() ? mr : ml;
    t.doors = ml.empty() ? R : L;
    t.other = ml.empty() ? L : R;
    if (m.size() < 2 || m.size() % 2) throw bad();
    size_t h = (m.size() - 2) / 2;
    for (size_t k = 0; k < h; ++k)
        if (m[k] != m[m.size() - 1 - k]) throw bad();
    if (m[h].e != a.punct || m[h + 1].e != a.punct || m[h] == m[h + 1]) throw bad();
    t.mid = pre + h;
    t.loop = 2;
    t.otherLoop = 0;
    return t;
}

// number of detour doors that survive sliding crossings near the endpoints into the cusps
size_t surviving(const std::vector<Door>& d, size_t mid, size_t loop, const Cusp& x, const Cusp& y) {
    size_t lo = 0, hi = d.size();
    while (lo < hi && d[lo].near == x) ++lo;
    while (hi > lo && d[hi - 1].near == y) --hi;
    size_t a = std::max(lo, mid), b = std::min(hi, mid + loop);
    return b > a ? b - a : 0;
}

} // namespace

CrossingWord crossing_word(const Arc& a) {
    const Cusp &x = a.under.lo, &y = a.under.hi;
    TightArc t = parse_arc(a);
    std::vector<Tri> ts = path_tris(Path{t.start, t.doors});
    std::vector<Tri> to = path_tris(Path{t.start, t.other});
    size_t n = t.doors.size();
    size_t lo = 0, hi = n;
    while (lo < t.mid && t.doors[lo].near == x) ++lo;
    while (hi > t.mid + t.loop && t.doors[hi - 1].near == y) --hi;
    size_t s1 = surviving(t.doors, t.mid, t.loop, x, y), s2 = surviving(t.other, t.mid, t.otherLoop, x, y);
    char carried = '0';
    if (s1 && !s2) carried = door_exponent(ts[t.mid], t.doors[t.mid]);
    else if (s2 && !s1) carried = door_exponent(to[t.mid], t.other[t.mid]);
    CrossingWord w;
    w.start = x;
    w.end = y;
    for (size_t k = lo; k < t.mid; ++k) w.entries.push_back({t.doors[k].e, door_exponent(ts[k], t.doors[k]), false});
    w.entries.push_back({a.punct, carried, true});
    for (size_t k = t.mid + t.loop; k < hi; ++k) w.entries.push_back({t.doors[k].e, door_exponent(ts[k], t.doors[k]), false});
    return w;
}

char exponent_of_carried(const Arc& a) {
    for (auto& e : crossing_word(a).entries)
        if (e.carried) return e.eps;
    throw std::logic_error("exponent_of_carried: no carried entry");
}

std::string crossing_word_str(const CrossingWord& w) {
    std::ostringstream o;
    o << cusp_str(w.start);
    for (auto& e : w.entries) {
        o << " p[" << cusp_str(e.punct.lo) << "," << cusp_str(e.punct.hi) << "]";
        if (e.carried) o << "*";
        o << "^" << e.eps;
    }
    o << " " << cusp_str(w.end);
    return o.str();
}

bool is_tight(const CrossingWord& w) {
    auto& v = w.entries;
    for (size_t k = 0; k + 1 < v.size(); ++k) {
        if (v[k].punct != v[k + 1].punct) continue;
        if (v[k].eps != '0' && v[k + 1].eps != '0' && v[k].eps != v[k + 1].eps) return false;
        if (k + 2 < v.size() && v[k + 2].punct == v[k].punct && v[k].eps == v[k + 1].eps && v[k].eps == v[k + 2].eps &&
            v[k].eps != '0')
            return false;
    }
    return true;
}

CrossingWord tight_reduce(CrossingWord w) {
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<CrossEntry> st;
        for (auto& e : w.entries) {
            if (!st.empty() && st.back().punct == e.punct && !st.back().carried && !e.carried && st.back().eps != '0' &&
                e.eps != '0' && st.back().eps != e.eps) {
                st.pop_back();
                changed = true;
            } else {
                st.push_back(e);
            }
        }
        w.entries = std::move(st);
    }
    auto& v = w.entries;
    for (size_t k = 0; k + 2 < v.size(); ++k)
        if (v[k].punct == v[k + 1].punct && v[k].punct == v[k + 2].punct && v[k].eps != '0' && v[k].eps == v[k + 1].eps &&
            v[k].eps == v[k + 2].eps)
            throw std::invalid_argument("tight_reduce: arc winds around a puncture (p^e p^e p^e)");
    return w;
}

size_t first_active(const CrossingWord& w) {
    for (size_t k = 0; k < w.entries.size(); ++k)
        if (w.entries[k].eps != '0') return k;
    return w.entries.size();
}

namespace {
std::optional<size_t> sign_change_after(const std::vector<CrossEntry>& v, size_t i) {
    for (size_t j = i + 1; j < v.size(); ++j)
        if (v[j].eps != '0' && v[j].eps != v[i].eps) return j;
    return std::nullopt;
}
} // namespace

std::optional<std::pair<size_t, size_t>> conjugate_puncture(const CrossingWord& w) {
    size_t i = first_active(w);
    if (i >= w.entries.size()) return std::nullopt;
    if (auto j = sign_change_after(w.entries, i)) return std::make_pair(i, *j);
    return std::nullopt;
}

std::vector<std::pair<size_t, size_t>> conjugate_pairs(const CrossingWord& w) {
    auto& v = w.entries;
    std::vector<std::pair<size_t, size_t>> r;
    auto add = [&](size_t i, size_t j) {
        if (std::find(r.begin(), r.end(), std::make_pair(i, j)) == r.end()) r.push_back({i, j});
    };
    if (auto p = conjugate_puncture(w)) add(p->first, p->second);
    // hairpins x^E c* x^E' through the carried puncture
    for (size_t k = 1; k + 1 < v.size(); ++k)
        if (v[k].carried && v[k - 1].punct == v[k + 1].punct && v[k - 1].eps != '0' && v[k + 1].eps != '0' &&
            v[k - 1].eps != v[k + 1].eps)
            add(k - 1, k);
    // first sign changes after later entries
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i].eps != '0')
            if (auto j = sign_change_after(v, i)) add(i, *j);
    // later differing partners of the first active entry, the last one first
    size_t i = first_active(w);
    for (size_t j = v.size(); j-- > i + 1;)
        if (i < v.size() && v[j].eps != '0' && v[j].eps != v[i].eps) add(i, j);
    return r;
}

// ---- braids -----------------------------------------------------------------

namespace {
BraidLetter letter(const Edge& e, const Edge& f, int sign) {
    return edge_less(e, f) ? BraidLetter{e, f, sign} : BraidLetter{f, e, sign};
}
} // namespace

BraidWord invert_braid(const BraidWord& b) {
    BraidWord r;
    for (auto it = b.rbegin(); it != b.rend(); ++it) r.push_back(BraidLetter{it->e, it->f, -it->sign});
    return r;
}

BraidWord reduce_braid(const BraidWord& b) {
    BraidWord st;
    for (auto& l : b) {
        BraidLetter n = letter(l.e, l.f, l.sign);
        if (!st.empty() && st.back().e == n.e && st.back().f == n.f && st.back().sign == -n.sign) st.pop_back();
        else st.push_back(n);
    }
    return st;
}

std::string braid_str(const BraidWord& b) {
    std::ostringstream o;
    for (size_t k = 0; k < b.size(); ++k) {
        auto& l = b[k];
        o << (k ? " " : "") << "s[" << cusp_str(l.e.lo) << "," << cusp_str(l.e.hi) << "|" << cusp_str(l.f.lo) << ","
          << cusp_str(l.f.hi) << "]" << (l.sign > 0 ? "" : "^-1");
    }
    return o.str();
}

namespace {
std::string edge_name(const Edge& e) {
    if (is_farey(e.lo, e.hi)) return address_of(e).str();
    return "[" + cusp_str(e.lo) + "," + cusp_str(e.hi) + "]";
}
} // namespace

std::string braid_json(const BraidWord& b) {
    nlohmann::json j = nlohmann::json::array();
    for (auto& l : b) j.push_back({{"e", edge_name(l.e)}, {"f", edge_name(l.f)}, {"sign", l.sign}});
    return j.dump();
}

BraidWord untangling_factor(const CrossingWord& w, size_t i, size_t j) {
    if (i >= j || j >= w.entries.size()) throw std::invalid_argument("untangling_factor: bad indices");
    std::vector<Edge> red;
    for (size_t k = i; k <= j; ++k)
        if (red.empty() || red.back() != w.entries[k].punct) red.push_back(w.entries[k].punct);
    int sign = w.entries[i].eps == 'R' ? 1 : -1;
    BraidWord b;
    for (size_t k = 0; k + 1 < red.size(); ++k) {
        if (!common_tri(red[k], red[k + 1])) throw std::logic_error("untangling_factor: punctures not adjacent");
        b.push_back(letter(red[k], red[k + 1], sign));
    }
    return b;
}

Path apply_letter_to_path(const BraidLetter& l, const Path& p, const Cusp& from, const Cusp& to) {
    auto t = common_tri(l.e, l.f);
    if (!t) throw std::invalid_argument("braid letter on non-adjacent punctures");
    int ke = side_index(*t, l.e), kf = side_index(*t, l.f);
    int pe = 4 * ke + 2, pf = 4 * kf + 2;
    // e and f oriented tail -> head with t on the right
    Cusp tailE = vertex(*t, ke + 1), headE = vertex(*t, ke);
    Cusp tailF = vertex(*t, kf + 1), headF = vertex(*t, kf);
    std::vector<Door> up, down; // chord going from below to above, and back
    if (l.sign > 0) up = {{l.f, headF}, {l.f, tailF}, {l.e, tailE}, {l.e, headE}};
    else up = {{l.e, tailE}, {l.e, headE}, {l.f, headF}, {l.f, tailF}};
    down.assign(up.rbegin(), up.rend());
    std::vector<Tri> ts = path_tris(p);
    Path r{p.start, {}};
    for (size_t i = 0; i < ts.size(); ++i) {
        if (ts[i] == *t) {
            int x = i == 0 ? vertex_port(*t, from) : door_port(*t, p.doors[i - 1]);
            int y = i == p.doors.size() ? vertex_port(*t, to) : door_port(*t, p.doors[i]);
            if (separates(x, y, pe, pf)) {
                const auto& ins = open12(x, pe, pf) ? up : down;
                r.doors.insert(r.doors.end(), ins.begin(), ins.end());
            }
        }
        if (i < p.doors.size()) r.doors.push_back(p.doors[i]);
    }
    return canon_path(r, from, to);
}

namespace {
Arc apply_letter_to_arc(const BraidLetter& l, const Arc& a) {
    Arc r = a;
    r.left = apply_letter_to_path(l, a.left, a.under.lo, a.under.hi);
    r.right = apply_letter_to_path(l, a.right, a.under.lo, a.under.hi);
    if (a.punct == l.e) r.punct = l.f;
    else if (a.punct == l.f) r.punct = l.e;
    return r;
}
} // namespace

Arc apply_braid_to_arc(const BraidWord& b, const Arc& a) {
    Arc r = a;
    for (auto it = b.rbegin(); it != b.rend(); ++it) r = apply_letter_to_arc(*it, r);
    return r;
}

// ---- punctured states ----------------------------------------------------------

PuncturedState base_pstate() { return PuncturedState{base_state(), {}}; }

Arc arc_of(const PuncturedState& s, const Edge& e) {
    auto it = s.arcs.find(e);
    if (it != s.arcs.end()) return it->second;
    if (!has_edge(s.under, e)) throw std::invalid_argument("arc_of: not an edge of the triangulation");
    return trivial_arc(e);
}

namespace {

void store(PuncturedState& s, const Arc& a) {
    if (is_straight(a)) s.arcs.erase(a.under);
    else s.arcs[a.under] = a;
}

// arc of the diagonal x -> y of the quadrilateral x, d, y, c (c on the left of
// x -> y) through the puncture left in the middle by the old diagonal
Arc quad_diagonal(const PuncturedState& s, const Cusp& x, const Cusp& y, const Cusp& c, const Cusp& d, const Edge& punct) {
    Path L = join_at(right_pushoff(arc_of(s, Edge(x, c)), x), x, c, right_pushoff(arc_of(s, Edge(c, y)), c), y);
    Path R = join_at(left_pushoff(arc_of(s, Edge(x, d)), x), x, d, left_pushoff(arc_of(s, Edge(d, y)), d), y);
    return make_arc(x, y, punct, L, R);
}

PuncturedState star_flip(const PuncturedState& s, bool inverse) {
    const OEdge& h = s.under.doe;
    Cusp l = left_apex(s.under, h), r = right_apex(s.under, h);
    Edge old = h.edge();
    Edge punct = arc_of(s, old).punct;
    PuncturedState t;
    t.under = inverse ? move_Finv(s.under) : move_F(s.under);
    t.arcs = s.arcs;
    t.arcs.erase(old);
    // new diagonal l - r; the quadrilateral is u, r, v, l in ccw order
    Arc a = quad_diagonal(s, l, r, h.to, h.from, punct);
    store(t, a);
    return t;
}

} // namespace

PuncturedState apply_star_move(const PuncturedState& s, char m) {
    switch (m) {
    case 'f': return star_flip(s, false);
    case 'F': return star_flip(s, true);
    case 'r': return PuncturedState{move_R(s.under), s.arcs};
    case 'R': return PuncturedState{move_Rinv(s.under), s.arcs};
    }
    throw std::invalid_argument(std::string("apply_star_move: bad letter ") + m);
}

PuncturedState apply_star_word(const PuncturedState& s, const std::string& moves) {
    PuncturedState r = s;
    for (char m : moves) r = apply_star_move(r, m);
    return r;
}

PuncturedState eval_star(const std::string& generators) {
    check_generator_word(generators);
    return apply_star_word(base_pstate(), phi_word(generators));
}

PuncturedState apply_braid(const BraidWord& b, const PuncturedState& s) {
    PuncturedState r = s;
    for (auto it = b.rbegin(); it != b.rend(); ++it) {
        auto t = common_tri(it->e, it->f);
        if (!t) throw std::invalid_argument("apply_braid: letter on non-adjacent punctures");
        std::vector<Edge> touched;
        for (auto& [e, a] : r.arcs) touched.push_back(e);
        for (int k = 0; k < 3; ++k) {
            Edge side(vertex(*t, k), vertex(*t, k + 1));
            if (!r.arcs.count(side) && has_edge(r.under, side)) touched.push_back(side);
        }
        PuncturedState n{r.under, {}};
        std::map<Edge, Arc, EdgeLess> out;
        for (auto& e : touched) store(n, apply_letter_to_arc(*it, arc_of(r, e)));
        r = std::move(n);
    }
    return r;
}

std::string pstate_json(const PuncturedState& s) {
    nlohmann::json j;
    j["state"] = nlohmann::json::parse(state_json(s.under));
    nlohmann::json arcs = nlohmann::json::array();
    for (auto& [e, a] : s.arcs) {
        CrossingWord w = crossing_word(a);
        nlohmann::json entries = nlohmann::json::array();
        for (auto& x : w.entries)
            entries.push_back({{"puncture", edge_name(x.punct)}, {"exponent", std::string(1, x.eps)}, {"carried", x.carried}});
        arcs.push_back({{"from", cusp_str(w.start)}, {"to", cusp_str(w.end)}, {"word", entries}});
    }
    j["arcs"] = arcs;
    return j.dump();
}

uint64_t pstate_hash(const PuncturedState& s) {
    std::string k = state_key(s.under);
    for (auto& [e, a] : s.arcs) k += "|" + path_str(a.left) + "#" + path_str(a.right) + "#" + cusp_str(a.punct.lo) + cusp_str(a.punct.hi);
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : k) h = (h ^ c) * 1099511628211ull;
    return h;
}

// ---- move words of braid letters ------------------------------------------------

std::string braid_letter_moves(const BraidLetter& l0) {
    static std::mutex mu;
    static std::map<std::string, std::string> cache;
    BraidLetter l = letter(l0.e, l0.f, 1);
    std::string key = braid_str({l});
    std::string w;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(key);
        if (it != cache.end()) w = it->second;
    }
    if (w.empty()) {
        PuncturedState target = apply_braid({l}, base_pstate());
        State b = base_state();
        for (const Edge* x : {&l.f, &l.e})
            for (int o = 0; o < 2 && w.empty(); ++o) {
                OEdge d = o ? OEdge{x->hi, x->lo} : OEdge{x->lo, x->hi};
                std::string T = transfer_word(b, b.doe, d).moves();
                for (const char* X : {"frfrfrfrfr", "rfrfrfrfrf"}) {
                    std::string cand = T + X + invert_move_word(T);
                    if (apply_star_word(base_pstate(), cand) == target) { w = free_reduce(cand); break; }
                }
            }
        if (w.empty()) throw std::logic_error("braid_letter_moves: no twist word matches " + key);
        std::lock_guard<std::mutex> lk(mu);
        cache[key] = w;
    }
    return l0.sign > 0 ? w : invert_move_word(w);
}

std::string braid_word_moves(const BraidWord& b) {
    std::string w;
    for (auto& l : b) w += braid_letter_moves(l);
    return free_reduce(w);
}

} // namespace ptolemy

namespace ptolemy {

// ---- straightening ------------------------------------------------------------------

namespace {

const int kStraightenGuard = 10000;

bool try_swap(PuncturedState& s, const Edge& g, BraidWord& total, std::vector<UntangleStep>& steps) {
    Arc a = arc_of(s, g);
    for (int sign : {1, -1}) {
        BraidWord f{letter(a.under, a.punct, sign)};
        if (!common_tri(a.under, a.punct)) return false;
        PuncturedState t = apply_braid(f, s);
        if (is_straight(arc_of(t, g))) {
            CrossingWord w = crossing_word(a);
            steps.push_back(UntangleStep{g, w, 0, 0, f, w.length(), 1});
            total.insert(total.begin(), f.begin(), f.end());
            s = std::move(t);
            return true;
        }
    }
    return false;
}

void untangle(PuncturedState& s, const Edge& g, BraidWord& total, std::vector<UntangleStep>& steps, int& guard) {
    for (;;) {
        Arc a = arc_of(s, g);
        if (is_straight(a)) return;
        if (++guard > kStraightenGuard) throw std::logic_error("straighten: no termination");
        CrossingWord w = crossing_word(a);
        auto cands = conjugate_pairs(w);
        if (cands.empty()) {
            if (w.length() == 1 && try_swap(s, g, total, steps)) continue;
            throw InadmissibleArc("straighten: arc " + crossing_word_str(w) + " has no conjugate punctures");
        }
        // the first conjugate pair in scan order whose factor shortens the arc
        bool done = false;
        BraidWord f;
        PuncturedState t;
        for (size_t rank = 0; rank < cands.size() && !done; ++rank) {
            auto [i, j] = cands[rank];
            f = untangling_factor(w, i, j);
            t = apply_braid(f, s);
            int len = crossing_word(arc_of(t, g)).length();
            if (len < w.length()) {
                steps.push_back(UntangleStep{g, w, i, j, f, w.length(), len, int(rank)});
                done = true;
            }
        }
        if (!done) throw std::logic_error("straighten: no untangling factor shortens " + crossing_word_str(w));
        total.insert(total.begin(), f.begin(), f.end());
        s = std::move(t);
    }
}

} // namespace

Straightening straighten_comb_arc(const PuncturedState& s, const Edge& g) {
    if (!has_edge(s.under, g)) throw std::invalid_argument("straighten_comb_arc: not an edge of the triangulation");
    if (!is_farey(g.lo, g.hi)) throw std::invalid_argument("straighten_comb_arc: target is not a base edge");
    Straightening r;
    r.result = s;
    int guard = 0;
    untangle(r.result, g, r.total, r.steps, guard);
    return r;
}

Straightening straighten(const PuncturedState& s) {
    for (auto& e : s.under.diags)
        if (!is_farey(e.lo, e.hi)) throw std::invalid_argument("straighten: triangulation is not the base one");
    Straightening r;
    r.result = s;
    int guard = 0;
    while (!r.result.arcs.empty()) {
        Edge g = r.result.arcs.begin()->first;
        untangle(r.result, g, r.total, r.steps, guard);
    }
    r.total = reduce_braid(r.total);
    return r;
}

PuncturedState admissible_lift(const State& t) { return apply_star_word(base_pstate(), mosher_word(t)); }

BraidWord correction_factor(const PuncturedState& s) {
    std::string M = mosher_reduction_word(s.under);
    PuncturedState b = apply_star_word(s, M);
    if (b.under != base_state()) throw std::logic_error("correction_factor: reduction word missed the base");
    return straighten(b).total;
}

StarCombing tstar_combing(const std::string& generators) {
    PuncturedState z = eval_star(generators);
    StarCombing c;
    c.mosher = mosher_reduction_word(z.under);
    PuncturedState b = apply_star_word(z, c.mosher);
    if (b.under != base_state()) throw std::logic_error("tstar_combing: reduction word missed the base");
    c.kernel = invert_braid(straighten(b).total);
    c.moves = free_reduce(braid_word_moves(c.kernel) + invert_move_word(c.mosher));
    c.generators = generator_word_of_moves(c.moves);
    return c;
}

bool projects_to_identity(const std::string& generators) { return is_identity(generators); }

BraidWord kernel_braid(const std::string& generators) {
    PuncturedState z = eval_star(generators);
    if (z.under != base_state()) throw std::invalid_argument("kernel_braid: word does not project to the identity of T");
    return invert_braid(straighten(z).total);
}

bool is_identity_star(const std::string& generators) {
    return projects_to_identity(generators) && braid_trivial(kernel_braid(generators));
}

// ---- braid oracle -----------------------------------------------------------------

namespace {

Door tree_door(const Edge& e) { return e.has(inf_cusp()) ? Door{e, inf_cusp()} : Door{e, e.lo}; }

Door free_door(const Edge& e) {
    Door t = tree_door(e);
    return Door{e, t.near == e.lo ? e.hi : e.lo};
}

// tree doors from t up to a triangle at the cusp at infinity
std::vector<Door> up_path(Tri t) {
    std::vector<Door> out;
    while (!t.has(inf_cusp())) {
        int m = 0;
        for (int k = 1; k < 3; ++k)
            if (vertex(t, k).q > vertex(t, m).q) m = k;
        Edge side(vertex(t, m + 1), vertex(t, m + 2));
        out.push_back(tree_door(side));
        t = across(t, side);
    }
    return out;
}

std::vector<Tri> ancestors(Tri t) {
    std::vector<Tri> out{t};
    for (auto& d : up_path(t)) {
        t = across(t, d.e);
        out.push_back(t);
    }
    return out;
}

struct TriLess {
    bool operator()(const Tri& x, const Tri& y) const {
        if (x.a != y.a) return cusp_less(x.a, y.a);
        if (x.b != y.b) return cusp_less(x.b, y.b);
        return cusp_less(x.c, y.c);
    }
};

std::vector<Edge> support_edges(const BraidWord& b, const std::vector<Edge>& extra) {
    std::set<Tri, TriLess> core;
    auto add_with_ancestors = [&](const Tri& t) {
        for (auto& x : ancestors(t)) core.insert(x);
    };
    for (auto& l : b) {
        auto t = common_tri(l.e, l.f);
        if (!t) throw std::invalid_argument("braid oracle: letter on non-adjacent punctures");
        add_with_ancestors(*t);
        for (int k = 0; k < 3; ++k) add_with_ancestors(across(*t, Edge(vertex(*t, k), vertex(*t, k + 1))));
    }
    for (auto& e : extra) {
        add_with_ancestors(left_tri(e.lo, e.hi));
        add_with_ancestors(left_tri(e.hi, e.lo));
    }
    std::set<Tri, TriLess> all = core;
    for (auto& t : core)
        for (int k = 0; k < 3; ++k) all.insert(across(t, Edge(vertex(t, k), vertex(t, k + 1))));
    std::set<Edge, EdgeLess> edges;
    for (auto& t : all)
        for (int k = 0; k < 3; ++k) edges.insert(Edge(vertex(t, k), vertex(t, k + 1)));
    return {edges.begin(), edges.end()};
}

FreeWord reduce_free(const FreeWord& w) {
    FreeWord st;
    for (auto& x : w) {
        if (!st.empty() && st.back().e == x.e && st.back().sign == -x.sign) st.pop_back();
        else st.push_back(x);
    }
    return st;
}

} // namespace

Path generator_loop(const Edge& e) {
    if (!is_farey(e.lo, e.hi)) throw std::invalid_argument("generator_loop: not a base edge");
    Tri X = left_tri(e.lo, e.hi), Y = left_tri(e.hi, e.lo);
    std::vector<Door> ux = up_path(X), uy = up_path(Y);
    std::vector<Tri> tx = ancestors(X);
    Path p{tx.back(), {ux.rbegin(), ux.rend()}};
    p.doors.push_back(free_door(e));
    p.doors.insert(p.doors.end(), uy.begin(), uy.end());
    return canon_path(p, inf_cusp(), inf_cusp());
}

FreeWord loop_word(const Path& loop) {
    std::vector<Tri> ts = path_tris(loop);
    FreeWord w;
    for (size_t k = 0; k < loop.doors.size(); ++k) {
        const Door& d = loop.doors[k];
        if (d == tree_door(d.e)) continue;
        w.push_back(FreeLetter{d.e, ts[k] == left_tri(d.e.lo, d.e.hi) ? 1 : -1});
    }
    return reduce_free(w);
}

bool is_conjugate_of_letter(const FreeWord& w0) {
    FreeWord w = reduce_free(w0);
    size_t i = 0, j = w.size();
    while (j - i > 1 && w[i].e == w[j - 1].e && w[i].sign == -w[j - 1].sign) { ++i; --j; }
    return j - i == 1;
}

std::string free_word_str(const FreeWord& w) {
    std::ostringstream o;
    for (size_t k = 0; k < w.size(); ++k)
        o << (k ? " " : "") << "g[" << cusp_str(w[k].e.lo) << "," << cusp_str(w[k].e.hi) << "]" << (w[k].sign > 0 ? "" : "^-1");
    return o.str();
}

StrandAutomorphism braid_automorphism(const BraidWord& b, const std::vector<Edge>& extra) {
    StrandAutomorphism a;
    a.support = support_edges(b, extra);
    for (auto& e : a.support) {
        Path p = generator_loop(e);
        for (auto it = b.rbegin(); it != b.rend(); ++it) p = apply_letter_to_path(*it, p, inf_cusp(), inf_cusp());
        FreeWord w = loop_word(p);
        if (!(w.size() == 1 && w[0].e == e && w[0].sign == 1)) a.images[e] = w;
    }
    return a;
}

bool braid_equal(const BraidWord& x, const BraidWord& y) {
    std::vector<Edge> ex;
    for (auto& l : x) { ex.push_back(l.e); ex.push_back(l.f); }
    for (auto& l : y) { ex.push_back(l.e); ex.push_back(l.f); }
    // both images over one common support
    std::vector<Edge> sx = support_edges(x, ex), sy = support_edges(y, ex);
    ex.insert(ex.end(), sx.begin(), sx.end());
    ex.insert(ex.end(), sy.begin(), sy.end());
    StrandAutomorphism ax = braid_automorphism(x, ex), ay = braid_automorphism(y, ex);
    std::set<Edge, EdgeLess> all(ax.support.begin(), ax.support.end());
    all.insert(ay.support.begin(), ay.support.end());
    for (auto& e : all) {
        auto ix = ax.images.find(e), iy = ay.images.find(e);
        bool mx = ix != ax.images.end(), my = iy != ay.images.end();
        if (mx != my) return false;
        if (mx && !(ix->second == iy->second)) return false;
    }
    return true;
}

bool braid_trivial(const BraidWord& b) { return braid_automorphism(b).images.empty(); }

// ---- admissibility balance -------------------------------------------------------------

int puncture_side(const Arc& a, const Edge& q) {
    if (q == a.punct) return 0;
    const Cusp &x = a.under.lo, &y = a.under.hi;
    std::vector<Tri> ts = path_tris(a.left);
    int parity = 0, side = 0;
    if (!q.has(x) || !q.has(y)) {
        Cusp c = q.lo != x && q.lo != y ? q.lo : q.hi;
        for (auto& d : a.left.doors) parity ^= (d == Door{q, c});
        side = left_of(c, x, y) ? 1 : -1;
    } else {
        Tri t = left_tri(x, y);
        Cusp z = t.third(q);
        int pq = 4 * side_index(t, q) + 2, pz = vertex_port(t, z);
        for (size_t i = 0; i < ts.size(); ++i) {
            if (ts[i] != t) continue;
            int u = i == 0 ? vertex_port(t, x) : door_port(t, a.left.doors[i - 1]);
            int v = i == a.left.doors.size() ? vertex_port(t, y) : door_port(t, a.left.doors[i]);
            parity ^= separates(u, v, pq, pz);
        }
        side = 1;
    }
    return parity ? -side : side;
}

std::pair<int, int> admissibility_balance(const Arc& a, const Arc& b) {
    if (a.under != b.under) throw std::invalid_argument("admissibility_balance: arcs have different endpoints");
    std::set<Edge, EdgeLess> qs;
    for (const Path* p : {&a.left, &a.right, &b.left, &b.right})
        for (auto& t : path_tris(*p))
            for (int k = 0; k < 3; ++k) qs.insert(Edge(vertex(t, k), vertex(t, k + 1)));
    qs.insert(a.punct);
    qs.insert(b.punct);
    int xab = 0, xba = 0;
    for (auto& q : qs) {
        // the carried puncture is read off the right pushoff, so it sits on the left
        int sa = puncture_side(a, q), sb = puncture_side(b, q);
        if (sa == 0) sa = 1;
        if (sb == 0) sb = 1;
        if (sa > 0 && sb < 0) ++xab;
        if (sb > 0 && sa < 0) ++xba;
    }
    return {xab, xba};
}

} // namespace ptolemy
