#pragma once
#include "ptolemy/state.hpp"
#include <string>
#include <vector>

namespace ptolemy {

// A finite forest hanging off the three sides of a root triangle.
// Leaves are listed in ccw order; a leaf is (branch, path) with path over '0','1'
// where '0' is the ccw-first child.
struct Leaf {
    int branch = 0;
    std::string path;
    bool operator==(const Leaf& o) const { return branch == o.branch && path == o.path; }
};
using Forest = std::vector<Leaf>;

Forest base_forest();                     // the tripod: three leaves
std::string forest_string(const Forest& f);  // "(B0B1B2)", leaf "()", node "(LR)"
Forest parse_forest(const std::string& s);

// Symbol (target, source, perm): source leaf i goes to target leaf perm[i].
struct TreePair {
    Forest target;
    Forest source;
    std::vector<int> perm;
    int shift() const { return perm.empty() ? 0 : perm[0]; }
    bool operator==(const TreePair& o) const {
        return target == o.target && source == o.source && perm == o.perm;
    }
};

TreePair identity_pair();
TreePair make_pair_symbol(const Forest& target, const Forest& source, int shift);
bool is_cyclic(const TreePair& s);
TreePair expand_source(const TreePair& s, int i);
TreePair expand_target(const TreePair& s, int j);
TreePair symbol_reduce(const TreePair& s);
TreePair symbol_inverse(const TreePair& s);
// product [T2,T1,tau].[T1,T0,sigma] = [T2,T0,tau o sigma]
TreePair symbol_multiply(const TreePair& x, const TreePair& y);

// conversions; the element acting on the base is read off its labeled triangulation
TreePair to_tree_pair(const State& s);
State to_state(const TreePair& t);

// composition matching the move action: sym(s . moves(t)) = compose(sym(s), sym(t))
TreePair compose_moves(const TreePair& s, const TreePair& t);

TreePair alpha_symbol();  // hand-built symbols of the generators
TreePair beta_symbol();
TreePair word_symbol(const std::string& generator_word);  // product through symbols only

std::string tree_pair_json(const TreePair& t);
std::string tree_pair_key(const TreePair& t);

} // namespace ptolemy
