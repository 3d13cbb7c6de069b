#pragma once
#include "ptolemy/state.hpp"
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptolemy {

// ---- door paths in the base tessellation --------------------------------
// Every base edge carries a puncture at its midpoint, which cuts the edge in
// two doors. A curve avoiding the punctures is recorded by the base triangle
// it starts in and the doors it crosses.

struct Tri {
    Cusp a, b, c; // ccw
    bool operator==(const Tri& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator!=(const Tri& o) const { return !(*this == o); }
    bool has(const Cusp& x) const { return a == x || b == x || c == x; }
    bool has_side(const Edge& e) const { return has(e.lo) && has(e.hi); }
    Cusp third(const Edge& e) const;
};
Tri make_tri(const Cusp& x, const Cusp& y, const Cusp& z);
Tri left_tri(const Cusp& u, const Cusp& v);  // base triangle on the left of u->v
Tri across(const Tri& t, const Edge& side);  // the other base triangle on a side
std::optional<Tri> common_tri(const Edge& e, const Edge& f);

struct Door {
    Edge e;
    Cusp near; // the half of e between `near` and the puncture
    bool operator==(const Door& o) const { return e == o.e && near == o.near; }
    bool operator!=(const Door& o) const { return !(*this == o); }
};

// a curve from cusp `from` (a vertex of start) to cusp `to`
struct Path {
    Tri start;
    std::vector<Door> doors;
    bool operator==(const Path& o) const { return start == o.start && doors == o.doors; }
};
std::vector<Tri> path_tris(const Path& p);   // doors.size()+1 triangles
Path canon_path(Path p, const Cusp& from, const Cusp& to);
Path reverse_path(const Path& p, const Cusp& from, const Cusp& to);
Path join_at(const Path& p1, const Cusp& from, const Cusp& mid, const Path& p2, const Cusp& to);
std::string path_str(const Path& p);

// ---- arcs ----------------------------------------------------------------
// An arc through one puncture is stored by its two pushoffs off that puncture,
// both oriented from under.lo to under.hi. The pair is a complete invariant.
struct Arc {
    Edge under;  // endpoints
    Edge punct;  // base edge whose puncture the arc carries
    Path left, right;
    bool operator==(const Arc& o) const { return under == o.under && punct == o.punct && left == o.left && right == o.right; }
    bool operator!=(const Arc& o) const { return !(*this == o); }
};
Arc trivial_arc(const Edge& e); // e must be a base edge
bool is_straight(const Arc& a);
// pushoffs of the arc run from x to y (x, y its endpoints)
Path left_pushoff(const Arc& a, const Cusp& x);
Path right_pushoff(const Arc& a, const Cusp& x);

// ---- crossing words -------------------------------------------------------
struct CrossEntry {
    Edge punct;
    char eps = '0'; // 'L', 'R' or '0'
    bool carried = false;
    bool operator==(const CrossEntry& o) const { return punct == o.punct && eps == o.eps && carried == o.carried; }
};
struct CrossingWord {
    Cusp start, end;
    std::vector<CrossEntry> entries;
    int length() const { return int(entries.size()); }
    bool operator==(const CrossingWord& o) const { return start == o.start && end == o.end && entries == o.entries; }
};
CrossingWord crossing_word(const Arc& a);   // from under.lo to under.hi
char exponent_of_carried(const Arc& a);
std::string crossing_word_str(const CrossingWord& w);
bool is_tight(const CrossingWord& w);
CrossingWord tight_reduce(CrossingWord w); // throws on p^e p^e p^e
// first sign change after the first non-inert entry, or nullopt (monotone)
std::optional<std::pair<size_t, size_t>> conjugate_puncture(const CrossingWord& w);
// conjugate pairs in the order straightening tries them; conjugate_puncture first
std::vector<std::pair<size_t, size_t>> conjugate_pairs(const CrossingWord& w);
size_t first_active(const CrossingWord& w);

// ---- braids ---------------------------------------------------------------
struct BraidLetter {
    Edge e, f;     // adjacent base edges
    int sign = 1;  // +1 counterclockwise half twist
    bool operator==(const BraidLetter& o) const { return e == o.e && f == o.f && sign == o.sign; }
};
// composition order: letters[0] is applied last
using BraidWord = std::vector<BraidLetter>;
BraidWord invert_braid(const BraidWord& b);
BraidWord reduce_braid(const BraidWord& b);
std::string braid_str(const BraidWord& b);
std::string braid_json(const BraidWord& b);

BraidWord untangling_factor(const CrossingWord& w, size_t i, size_t j);
Path apply_letter_to_path(const BraidLetter& l, const Path& p, const Cusp& from, const Cusp& to);
Arc apply_braid_to_arc(const BraidWord& b, const Arc& a);

// ---- punctured states -----------------------------------------------------
struct EdgeLess {
    bool operator()(const Edge& a, const Edge& b) const { return edge_less(a, b); }
};
struct PuncturedState {
    State under;
    std::map<Edge, Arc, EdgeLess> arcs; // only arcs that differ from the straight base arc
    bool operator==(const PuncturedState& o) const { return under == o.under && arcs == o.arcs; }
    bool operator!=(const PuncturedState& o) const { return !(*this == o); }
};
PuncturedState base_pstate();
Arc arc_of(const PuncturedState& s, const Edge& e);
PuncturedState apply_star_move(const PuncturedState& s, char m); // f F r R
PuncturedState apply_star_word(const PuncturedState& s, const std::string& moves);
PuncturedState eval_star(const std::string& generators);         // same letter order as eval_word
PuncturedState apply_braid(const BraidWord& b, const PuncturedState& s); // left action
std::string pstate_json(const PuncturedState& s);
uint64_t pstate_hash(const PuncturedState& s);

// move word w with base . w = letter(base)
std::string braid_letter_moves(const BraidLetter& l);
std::string braid_word_moves(const BraidWord& b);

// ---- straightening and combing ---------------------------------------------
struct UntangleStep {
    Edge arc;
    CrossingWord before;
    size_t i = 0, j = 0;
    BraidWord factor;
    int lenBefore = 0, lenAfter = 0;
    int rank = 0; // position of (i, j) in conjugate_pairs
};
struct Straightening {
    std::vector<UntangleStep> steps;
    BraidWord total; // total(start) = result
    PuncturedState result;
};
struct InadmissibleArc : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// untangle arc g until it is straight; underlying triangulation must contain g
Straightening straighten_comb_arc(const PuncturedState& s, const Edge& g);
// untangle every arc of a state over the base triangulation
Straightening straighten(const PuncturedState& s);

struct StarCombing {
    std::string mosher;    // z . mosher has the base triangulation
    BraidWord kernel;      // its braid: base* . moves(kernel) = z . mosher
    std::string moves;     // moves(kernel) + mosher^-1
    std::string generators;
};
StarCombing tstar_combing(const std::string& generators);
BraidWord correction_factor(const PuncturedState& s);
PuncturedState admissible_lift(const State& t);

bool projects_to_identity(const std::string& generators);
BraidWord kernel_braid(const std::string& generators);
bool is_identity_star(const std::string& generators);

// ---- braid oracle -----------------------------------------------------------
// action on the free group of loops based at the cusp at infinity; one free
// generator per base edge (the loop through its non-tree door)
struct FreeLetter {
    Edge e;
    int sign = 1;
    bool operator==(const FreeLetter& o) const { return e == o.e && sign == o.sign; }
};
using FreeWord = std::vector<FreeLetter>;
struct StrandAutomorphism {
    std::vector<Edge> support;
    std::map<Edge, FreeWord, EdgeLess> images; // only generators that move
};
StrandAutomorphism braid_automorphism(const BraidWord& b, const std::vector<Edge>& extra = {});
bool braid_equal(const BraidWord& a, const BraidWord& b);
bool braid_trivial(const BraidWord& b);
FreeWord loop_word(const Path& loop);
Path generator_loop(const Edge& e);
bool is_conjugate_of_letter(const FreeWord& w);
std::string free_word_str(const FreeWord& w);

// side of the puncture of base edge q: +1 left, -1 right, 0 on the arc
int puncture_side(const Arc& a, const Edge& q);
std::pair<int, int> admissibility_balance(const Arc& a, const Arc& b);

} // namespace ptolemy
