#include "ptolemy/address.hpp"
#include <stdexcept>

namespace ptolemy {

namespace {

bool in_closed_arc(const Cusp& c, const Cusp& a, const Cusp& b) {
    return c == a || c == b || in_open_arc(c, a, b);
}

OEdge anchor_entry(EdgeAddress::Anchor a) {
    Cusp inf = inf_cusp(), zero = make_cusp(0, 1);
    if (a == EdgeAddress::Tail) return OEdge{zero, inf};
    return OEdge{inf, zero};
}

} // namespace

std::string EdgeAddress::str() const {
    if (anchor == Root) return "e";
    return std::string(anchor == Head ? "H" : "T") + turns;
}

EdgeAddress EdgeAddress::parse(const std::string& s) {
    EdgeAddress a;
    if (s.empty()) throw std::invalid_argument("empty address");
    if (s == "e") return a;
    if (s[0] == 'H') a.anchor = Head;
    else if (s[0] == 'T') a.anchor = Tail;
    else throw std::invalid_argument("bad address anchor: " + s);
    a.turns = s.substr(1);
    if (a.turns.empty()) throw std::invalid_argument("side address needs turns: " + s);
    for (char c : a.turns)
        if (c != 'L' && c != 'R') throw std::invalid_argument("bad turn in address: " + s);
    return a;
}

bool address_less(const EdgeAddress& a, const EdgeAddress& b) {
    bool ra = a.anchor == EdgeAddress::Root, rb = b.anchor == EdgeAddress::Root;
    if (ra != rb) return ra;
    if (a.turns.size() != b.turns.size()) return a.turns.size() < b.turns.size();
    if (a.turns != b.turns) return a.turns < b.turns;
    return a.anchor < b.anchor;
}

EdgeAddress address_of(const Edge& e) {
    Cusp inf = inf_cusp(), zero = make_cusp(0, 1);
    if (!is_farey(e.lo, e.hi)) throw std::invalid_argument("address_of: not a base edge");
    EdgeAddress a;
    if (e == Edge(inf, zero)) return a;
    a.anchor = (in_closed_arc(e.lo, zero, inf) && in_closed_arc(e.hi, zero, inf))
                   ? EdgeAddress::Head : EdgeAddress::Tail;
    OEdge cur = anchor_entry(a.anchor);
    for (int guard = 0; guard < 1 << 20; ++guard) {
        Cusp x = cur.from, y = cur.to, z = farey_left_apex(x, y);
        if (e == Edge(x, z)) { a.turns += 'L'; return a; }
        if (e == Edge(z, y)) { a.turns += 'R'; return a; }
        if (in_closed_arc(e.lo, z, x) && in_closed_arc(e.hi, z, x)) {
            a.turns += 'L';
            cur = OEdge{x, z};
        } else {
            a.turns += 'R';
            cur = OEdge{z, y};
        }
    }
    throw std::runtime_error("address_of: runaway descent");
}

OEdge canonical_orientation(const EdgeAddress& a) {
    OEdge cur = anchor_entry(a.anchor);
    if (a.anchor == EdgeAddress::Root) return cur;
    for (char t : a.turns) {
        Cusp z = farey_left_apex(cur.from, cur.to);
        cur = t == 'L' ? OEdge{cur.from, z} : OEdge{z, cur.to};
    }
    return cur;
}

Edge edge_of(const EdgeAddress& a) { return canonical_orientation(a).edge(); }

OrientedAddress oriented_address_of(const OEdge& e) {
    OrientedAddress r;
    r.address = address_of(e.edge());
    r.reversed = canonical_orientation(r.address) != e;
    return r;
}

OEdge oedge_of(const OrientedAddress& a) {
    OEdge c = canonical_orientation(a.address);
    return a.reversed ? c.rev() : c;
}

bool base_edge_order(const Edge& a, const Edge& b) {
    return address_less(address_of(a), address_of(b));
}

} // namespace ptolemy
