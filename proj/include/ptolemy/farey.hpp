#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <functional>

namespace ptolemy {

// Ideal vertex of the Farey tessellation. q >= 0, gcd(p,q) = 1, infinity is 1/0.
struct Cusp {
    int64_t p = 1;
    int64_t q = 0;
    bool is_inf() const { return q == 0; }
    bool operator==(const Cusp& o) const { return p == o.p && q == o.q; }
    bool operator!=(const Cusp& o) const { return !(*this == o); }
};

Cusp make_cusp(int64_t p, int64_t q);
inline Cusp inf_cusp() { return Cusp{1, 0}; }

// circular counterclockwise order: increasing reals, infinity last
bool cusp_less(const Cusp& a, const Cusp& b);
std::string cusp_str(const Cusp& c);

// true when x sits strictly inside the ccw arc going from a to b
bool in_open_arc(const Cusp& x, const Cusp& a, const Cusp& b);

// edges of the base tessellation: |p1 q2 - p2 q1| = 1
bool is_farey(const Cusp& a, const Cusp& b);

// unordered edge, lo < hi in cusp order
struct Edge {
    Cusp lo, hi;
    Edge() = default;
    Edge(const Cusp& a, const Cusp& b);
    bool operator==(const Edge& o) const { return lo == o.lo && hi == o.hi; }
    bool operator!=(const Edge& o) const { return !(*this == o); }
    bool has(const Cusp& c) const { return lo == c || hi == c; }
    Cusp other(const Cusp& c) const { return lo == c ? hi : lo; }
};
bool edge_less(const Edge& a, const Edge& b);

struct OEdge {
    Cusp from, to;
    Edge edge() const { return Edge(from, to); }
    OEdge rev() const { return OEdge{to, from}; }
    bool operator==(const OEdge& o) const { return from == o.from && to == o.to; }
    bool operator!=(const OEdge& o) const { return !(*this == o); }
};

// chords with four distinct endpoints cross iff the endpoints interleave
bool chords_cross(const Edge& a, const Edge& b);

// base apex of the Farey triangle on the left of u->v (u,v Farey neighbours)
Cusp farey_left_apex(const Cusp& u, const Cusp& v);
// x lies on the left of the directed chord u->v
inline bool left_of(const Cusp& x, const Cusp& u, const Cusp& v) { return in_open_arc(x, v, u); }

struct CuspHash {
    size_t operator()(const Cusp& c) const {
        return std::hash<int64_t>()(c.p * 1000003 + c.q);
    }
};

} // namespace ptolemy
