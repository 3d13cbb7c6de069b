#include "ptolemy/farey.hpp"
#include <numeric>
#include <stdexcept>

namespace ptolemy {

Cusp make_cusp(int64_t p, int64_t q) {
    if (q < 0 || (q == 0 && p < 0)) { p = -p; q = -q; }
    if (q == 0) return Cusp{1, 0};
    int64_t g = std::gcd(p < 0 ? -p : p, q);
    if (g == 0) throw std::invalid_argument("bad cusp 0/0");
    return Cusp{p / g, q / g};
}

bool cusp_less(const Cusp& a, const Cusp& b) {
    if (a.q == 0) return false;
    if (b.q == 0) return true;
    __int128 l = (__int128)a.p * b.q, r = (__int128)b.p * a.q;
    return l < r;
}

std::string cusp_str(const Cusp& c) {
    if (c.q == 0) return "inf";
    if (c.q == 1) return std::to_string(c.p);
    return std::to_string(c.p) + "/" + std::to_string(c.q);
}

bool in_open_arc(const Cusp& x, const Cusp& a, const Cusp& b) {
    if (x == a || x == b) return false;
    if (cusp_less(a, b)) return cusp_less(a, x) && cusp_less(x, b);
    // wraps through infinity
    return cusp_less(a, x) || cusp_less(x, b);
}

bool is_farey(const Cusp& a, const Cusp& b) {
    __int128 d = (__int128)a.p * b.q - (__int128)b.p * a.q;
    return d == 1 || d == -1;
}

Edge::Edge(const Cusp& a, const Cusp& b) {
    if (cusp_less(a, b)) { lo = a; hi = b; } else { lo = b; hi = a; }
}

bool edge_less(const Edge& a, const Edge& b) {
    if (a.lo != b.lo) return cusp_less(a.lo, b.lo);
    return cusp_less(a.hi, b.hi);
}

bool chords_cross(const Edge& a, const Edge& b) {
    if (a.has(b.lo) || a.has(b.hi)) return false;
    return in_open_arc(b.lo, a.lo, a.hi) != in_open_arc(b.hi, a.lo, a.hi);
}

Cusp farey_left_apex(const Cusp& u, const Cusp& v) {
    Cusp c1 = make_cusp(u.p + v.p, u.q + v.q);
    Cusp c2 = make_cusp(u.p - v.p, u.q - v.q);
    return left_of(c1, u, v) ? c1 : c2;
}

} // namespace ptolemy
