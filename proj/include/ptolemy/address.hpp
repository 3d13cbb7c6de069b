#pragma once
#include "ptolemy/farey.hpp"
#include <string>
#include <vector>

namespace ptolemy {

// Names an edge of the base tessellation by a walk in the dual trivalent tree.
// head-side walks start in the triangle {0,1,inf}, tail-side in {-1,0,inf}.
struct EdgeAddress {
    enum Anchor { Root = 0, Head = 1, Tail = 2 };
    Anchor anchor = Root;
    std::string turns; // over 'L','R'
    bool operator==(const EdgeAddress& o) const { return anchor == o.anchor && turns == o.turns; }
    std::string str() const;
    static EdgeAddress parse(const std::string& s);
};

// global edge order: length, then turns, then anchor; root first
bool address_less(const EdgeAddress& a, const EdgeAddress& b);

EdgeAddress address_of(const Edge& e);
// canonical orientation: the one with the triangle entered from the root side on its left
OEdge canonical_orientation(const EdgeAddress& a);
Edge edge_of(const EdgeAddress& a);

struct OrientedAddress {
    EdgeAddress address;
    bool reversed = false;
};
OrientedAddress oriented_address_of(const OEdge& e);
OEdge oedge_of(const OrientedAddress& a);

// order on base edges used by the combing algorithms
bool base_edge_order(const Edge& a, const Edge& b);

} // namespace ptolemy
