#pragma once
#include "ptolemy/state.hpp"
#include <string>
#include <vector>

namespace ptolemy {

// 0 when f = e, 1 when f is reached by one clockwise turn (R) inside the
// triangle on the left of e, 2 when it takes two
int epsilon(const State& s, const OEdge& e, const Edge& f, const Cusp& v);

struct TransferWord {
    std::vector<int> exponents; // eps_0 .. eps_q
    int delta = 0;
    std::string moves() const;      // R^e0 F^2 R^e1 ... R^eq F^(2 delta)
    std::string generators() const; // b^e0 aa b^e1 ... b^eq aa^delta
};

// walk from `from` to `to` along the dual geodesic; the triangulation is untouched
TransferWord transfer_word(const State& s, const OEdge& from, const OEdge& to);
// same, but the arriving orientation of `to` is whatever the walk gives (delta = 0)
TransferWord transfer_to_edge(const State& s, const OEdge& from, const Edge& to);
// oriented edges visited by the walk (raw geodesic data)
std::vector<OEdge> transfer_geodesic(const State& s, const OEdge& from, const Edge& to);

// normal form in PSL(2,Z) = Z/2 * Z/3 of a word in aa, AA, b, B
std::string psl2z_normal_form(const std::string& generator_word);

} // namespace ptolemy
