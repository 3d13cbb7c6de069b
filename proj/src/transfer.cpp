#include "ptolemy/transfer.hpp"
#include <stdexcept>

namespace ptolemy {

namespace {

bool in_closed_arc(const Cusp& c, const Cusp& a, const Cusp& b) {
    return c == a || c == b || in_open_arc(c, a, b);
}

bool beyond(const Edge& f, const Cusp& a, const Cusp& b) {
    return in_closed_arc(f.lo, a, b) && in_closed_arc(f.hi, a, b);
}

struct Walk {
    std::vector<int> eps;
    std::vector<OEdge> visited;
    OEdge last;
};

Walk walk(const State& s, const OEdge& from, const Edge& to) {
    Walk w;
    OEdge d = from;
    w.visited.push_back(d);
    if (d.edge() == to) { w.last = d; return w; }
    if (!has_edge(s, to)) throw std::invalid_argument("transfer: target is not an edge");
    // target on the right side: reverse first
    if (!beyond(to, d.to, d.from)) {
        w.eps.push_back(0);
        d = d.rev();
        w.visited.push_back(d);
    }
    for (int guard = 0; guard < 1 << 20; ++guard) {
        Cusp u = d.from, v = d.to, l = left_apex(s, d);
        if (to == Edge(u, l)) { w.eps.push_back(1); d = OEdge{l, u}; w.visited.push_back(d); break; }
        if (to == Edge(v, l)) { w.eps.push_back(2); d = OEdge{v, l}; w.visited.push_back(d); break; }
        if (beyond(to, l, u)) {
            w.eps.push_back(1);
            d = OEdge{u, l};
        } else if (beyond(to, v, l)) {
            w.eps.push_back(2);
            d = OEdge{l, v};
        } else {
            throw std::logic_error("transfer: target not found beyond the left triangle");
        }
        w.visited.push_back(d);
    }
    w.last = d;
    return w;
}

} // namespace

int epsilon(const State& s, const OEdge& e, const Edge& f, const Cusp& v) {
    if (!e.edge().has(v) || !f.has(v)) throw std::invalid_argument("epsilon: edges not incident at the given vertex");
    if (f == e.edge()) return 0;
    Cusp l = left_apex(s, e);
    if (f == Edge(e.from, l)) return 1;
    if (f == Edge(e.to, l)) return 2;
    throw std::invalid_argument("epsilon: edges do not share the left triangle");
}

std::string TransferWord::moves() const {
    std::string m;
    for (size_t i = 0; i < exponents.size(); ++i) {
        if (i) m += "ff";
        m += std::string(exponents[i], 'r');
    }
    if (delta) m += "ff";
    return m;
}

std::string TransferWord::generators() const {
    std::string g;
    for (size_t i = 0; i < exponents.size(); ++i) {
        if (i) g += "aa";
        g += std::string(exponents[i], 'b');
    }
    if (delta) g += "aa";
    return g;
}

TransferWord transfer_to_edge(const State& s, const OEdge& from, const Edge& to) {
    Walk w = walk(s, from, to);
    TransferWord t;
    t.exponents = w.eps;
    return t;
}

TransferWord transfer_word(const State& s, const OEdge& from, const OEdge& to) {
    Walk w = walk(s, from, to.edge());
    TransferWord t;
    t.exponents = w.eps;
    t.delta = w.last == to ? 0 : 1;
    return t;
}

std::vector<OEdge> transfer_geodesic(const State& s, const OEdge& from, const Edge& to) {
    return walk(s, from, to).visited;
}

std::string psl2z_normal_form(const std::string& g) {
    // tokens: 0 = alpha^2, 1/2 = beta powers
    std::vector<int> st;
    for (size_t i = 0; i < g.size(); ++i) {
        int tok;
        char c = g[i];
        if (c == 'a' || c == 'A') {
            if (i + 1 >= g.size() || g[i + 1] != c)
                throw std::invalid_argument("psl2z_normal_form: lone alpha at position " + std::to_string(i));
            tok = 0;
            ++i;
        } else if (c == 'b') tok = 1;
        else if (c == 'B') tok = 2;
        else throw std::invalid_argument("psl2z_normal_form: bad letter at position " + std::to_string(i));
        if (!st.empty() && (st.back() == 0) == (tok == 0)) {
            if (tok == 0) st.pop_back();
            else {
                int k = (st.back() + tok) % 3;
                if (k == 0) st.pop_back();
                else st.back() = k;
            }
        } else {
            st.push_back(tok);
        }
    }
    std::string out;
    for (int t : st) out += t == 0 ? "aa" : std::string(t, 'b');
    return out;
}

} // namespace ptolemy
