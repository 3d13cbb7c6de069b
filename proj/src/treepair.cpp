#include "ptolemy/treepair.hpp"
#include <algorithm>
#include <map>
#include <stdexcept>
#include "json.hpp"

namespace ptolemy {

Forest base_forest() { return Forest{Leaf{0, ""}, Leaf{1, ""}, Leaf{2, ""}}; }

namespace {

void node_string(const Forest& f, size_t& k, int branch, const std::string& path, std::string& out) {
    if (k < f.size() && f[k].branch == branch && f[k].path == path) {
        out += "()";
        ++k;
        return;
    }
    out += "(";
    node_string(f, k, branch, path + "0", out);
    node_string(f, k, branch, path + "1", out);
    out += ")";
}

void parse_node(const std::string& s, size_t& k, int branch, const std::string& path, Forest& out) {
    if (k >= s.size() || s[k] != '(') throw std::invalid_argument("bad tree string");
    ++k;
    if (k < s.size() && s[k] == ')') {
        ++k;
        out.push_back(Leaf{branch, path});
        return;
    }
    parse_node(s, k, branch, path + "0", out);
    parse_node(s, k, branch, path + "1", out);
    if (k >= s.size() || s[k] != ')') throw std::invalid_argument("bad tree string: nodes are binary");
    ++k;
}

bool siblings(const Leaf& a, const Leaf& b) {
    if (a.branch != b.branch || a.path.size() != b.path.size() || a.path.empty()) return false;
    size_t n = a.path.size();
    return a.path.compare(0, n - 1, b.path, 0, n - 1) == 0 && a.path[n - 1] == '0' && b.path[n - 1] == '1';
}

bool proper_prefix(const Leaf& a, const Leaf& b) {
    return a.branch == b.branch && a.path.size() < b.path.size() && b.path.compare(0, a.path.size(), a.path) == 0;
}

} // namespace

std::string forest_string(const Forest& f) {
    std::string out = "(";
    size_t k = 0;
    for (int b = 0; b < 3; ++b) node_string(f, k, b, "", out);
    out += ")";
    if (k != f.size()) throw std::logic_error("forest_string: malformed forest");
    return out;
}

Forest parse_forest(const std::string& s) {
    Forest f;
    size_t k = 0;
    if (s.empty() || s[0] != '(') throw std::invalid_argument("bad tree string");
    ++k;
    for (int b = 0; b < 3; ++b) parse_node(s, k, b, "", f);
    if (k >= s.size() || s[k] != ')' || k + 1 != s.size()) throw std::invalid_argument("bad tree string: root has three branches");
    return f;
}

TreePair identity_pair() {
    TreePair t;
    t.target = t.source = base_forest();
    t.perm = {0, 1, 2};
    return t;
}

TreePair make_pair_symbol(const Forest& target, const Forest& source, int shift) {
    if (target.size() != source.size()) throw std::invalid_argument("leaf counts differ");
    int n = int(target.size());
    TreePair t{target, source, std::vector<int>(n)};
    for (int i = 0; i < n; ++i) t.perm[i] = ((i + shift) % n + n) % n;
    return t;
}

bool is_cyclic(const TreePair& s) {
    int n = int(s.perm.size());
    for (int i = 0; i < n; ++i)
        if (s.perm[i] != (s.perm[0] + i) % n) return false;
    return true;
}

TreePair expand_source(const TreePair& s, int i) {
    int n = int(s.perm.size());
    int j = s.perm[i];
    TreePair r;
    r.source = s.source;
    Leaf ls = s.source[i];
    r.source[i].path += '0';
    r.source.insert(r.source.begin() + i + 1, Leaf{ls.branch, ls.path + "1"});
    r.target = s.target;
    Leaf lt = s.target[j];
    r.target[j].path += '0';
    r.target.insert(r.target.begin() + j + 1, Leaf{lt.branch, lt.path + "1"});
    r.perm.assign(n + 1, 0);
    for (int k = 0; k < n; ++k) {
        if (k == i) continue;
        int v = s.perm[k];
        r.perm[k + (k > i)] = v + (v > j);
    }
    r.perm[i] = j;
    r.perm[i + 1] = j + 1;
    return r;
}

TreePair expand_target(const TreePair& s, int j) {
    for (int i = 0; i < int(s.perm.size()); ++i)
        if (s.perm[i] == j) return expand_source(s, i);
    throw std::logic_error("expand_target: bad permutation");
}

TreePair symbol_reduce(const TreePair& s) {
    TreePair r = s;
    bool changed = true;
    while (changed) {
        changed = false;
        int n = int(r.perm.size());
        for (int i = 0; i + 1 < n; ++i) {
            int j = r.perm[i];
            if (r.perm[i + 1] != j + 1) continue;
            if (!siblings(r.source[i], r.source[i + 1]) || !siblings(r.target[j], r.target[j + 1])) continue;
            r.source[i].path.pop_back();
            r.source.erase(r.source.begin() + i + 1);
            r.target[j].path.pop_back();
            r.target.erase(r.target.begin() + j + 1);
            std::vector<int> p;
            p.reserve(n - 1);
            for (int k = 0; k < n; ++k) {
                if (k == i + 1) continue;
                int v = r.perm[k];
                p.push_back(v > j ? v - 1 : v);
            }
            r.perm = std::move(p);
            changed = true;
            break;
        }
    }
    return r;
}

TreePair symbol_inverse(const TreePair& s) {
    TreePair r;
    r.target = s.source;
    r.source = s.target;
    r.perm.assign(s.perm.size(), 0);
    for (size_t i = 0; i < s.perm.size(); ++i) r.perm[s.perm[i]] = int(i);
    return r;
}

TreePair symbol_multiply(const TreePair& x0, const TreePair& y0) {
    TreePair x = x0, y = y0;
    size_t i = 0;
    while (i < x.source.size() || i < y.target.size()) {
        if (i >= x.source.size() || i >= y.target.size()) throw std::logic_error("multiply: forests do not cover the same polygon");
        const Leaf& a = x.source[i];
        const Leaf& b = y.target[i];
        if (a == b) { ++i; continue; }
        if (proper_prefix(a, b)) x = expand_source(x, int(i));
        else if (proper_prefix(b, a)) y = expand_target(y, int(i));
        else throw std::logic_error("multiply: incomparable leaves");
    }
    TreePair r;
    r.target = x.target;
    r.source = y.source;
    r.perm.assign(y.perm.size(), 0);
    for (size_t k = 0; k < y.perm.size(); ++k) r.perm[k] = x.perm[y.perm[k]];
    return symbol_reduce(r);
}

namespace {

// leaves of the dual tree of a triangulated polygon, rooted at the triangle on the
// left of root, branch 0 through root itself; leaf order ccw from root.from
template <class Apex>
Forest build_forest(const State& poly, const OEdge& root, Cusp l, Apex right_apex_of, std::vector<Edge>* leaf_edges) {
    Forest f;
    struct Item { OEdge e; std::string path; };
    OEdge branches[3] = {root, OEdge{root.to, l}, OEdge{l, root.from}};
    for (int b = 0; b < 3; ++b) {
        std::vector<Item> stack{{branches[b], ""}};
        while (!stack.empty()) {
            Item it = stack.back();
            stack.pop_back();
            if (is_side(poly, it.e.edge())) {
                f.push_back(Leaf{b, it.path});
                if (leaf_edges) leaf_edges->push_back(it.e.edge());
                continue;
            }
            Cusp z = right_apex_of(it.e);
            // push second child first so the first child is handled first
            stack.push_back({OEdge{z, it.e.to}, it.path + "1"});
            stack.push_back({OEdge{it.e.from, z}, it.path + "0"});
        }
    }
    return f;
}

} // namespace

TreePair to_tree_pair(const State& s0) {
    Cusp inf = inf_cusp(), zero = make_cusp(0, 1), one = make_cusp(1, 1);
    State S = grow_to_contain(s0, zero, one, inf);
    int n = int(S.poly.size());
    Forest base = build_forest(S, OEdge{inf, zero}, one,
                               [](const OEdge& e) { return farey_left_apex(e.to, e.from); }, nullptr);
    Cusp l = left_apex(S, S.doe);
    Forest tau = build_forest(S, S.doe, l, [&](const OEdge& e) { return left_apex(S, e.rev()); }, nullptr);
    // cusp list starts at infinity
    int pa = poly_index(S, S.doe.from);
    int shift = (pa + 1) % n;
    if (S.doe.from.is_inf()) shift = 0;
    TreePair t = make_pair_symbol(base, tau, shift);
    return symbol_reduce(t);
}

State to_state(const TreePair& t) {
    if (!is_cyclic(t)) throw std::invalid_argument("to_state: permutation is not cyclic");
    Cusp inf = inf_cusp(), zero = make_cusp(0, 1), one = make_cusp(1, 1);
    int n = int(t.target.size());
    // cusps from the base forest
    std::vector<Cusp> starts(n);
    OEdge roots[3] = {OEdge{inf, zero}, OEdge{zero, one}, OEdge{one, inf}};
    for (int k = 0; k < n; ++k) {
        const Leaf& lf = t.target[k];
        OEdge e = roots[lf.branch];
        for (char c : lf.path) {
            Cusp z = farey_left_apex(e.to, e.from);
            e = c == '0' ? OEdge{e.from, z} : OEdge{z, e.to};
        }
        starts[k] = e.from;
    }
    auto start_of = [&](int i) { return starts[t.perm[i]]; };
    auto end_of = [&](int i) { return starts[(t.perm[i] + 1) % n]; };
    // internal nodes of the source forest
    std::map<std::pair<int, std::string>, std::pair<int, int>> range;
    for (int i = 0; i < n; ++i) {
        const Leaf& lf = t.source[i];
        for (size_t len = 0; len < lf.path.size(); ++len) {
            auto key = std::make_pair(lf.branch, lf.path.substr(0, len));
            auto it = range.find(key);
            if (it == range.end()) range[key] = {i, i};
            else it->second.second = i;
        }
    }
    State s;
    s.poly = starts;
    std::sort(s.poly.begin(), s.poly.end(), [](const Cusp& a, const Cusp& b) { return cusp_less(a, b); });
    for (auto& [key, r] : range) s.diags.push_back(Edge(start_of(r.first), end_of(r.second)));
    std::sort(s.diags.begin(), s.diags.end(), edge_less);
    int first = -1, last = -1;
    for (int i = 0; i < n; ++i)
        if (t.source[i].branch == 0) { if (first < 0) first = i; last = i; }
    s.doe = OEdge{start_of(first), end_of(last)};
    if (is_side(s, s.doe.edge()) || s.poly.size() < 4) s = grow_toward(s, s.doe.edge());
    return normalize(s);
}

TreePair compose_moves(const TreePair& s, const TreePair& t) { return symbol_multiply(s, t); }

TreePair alpha_symbol() {
    Forest f = parse_forest("((()())()())");
    return make_pair_symbol(f, f, 3);
}

TreePair beta_symbol() {
    Forest f = base_forest();
    return make_pair_symbol(f, f, 2);
}

TreePair word_symbol(const std::string& w) {
    TreePair a = alpha_symbol(), b = beta_symbol();
    TreePair ai = symbol_inverse(a), bi = symbol_inverse(b);
    TreePair r = identity_pair();
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const TreePair* g = nullptr;
        switch (*it) {
        case 'a': g = &a; break; case 'A': g = &ai; break;
        case 'b': g = &b; break; case 'B': g = &bi; break;
        default: throw std::invalid_argument(std::string("bad generator letter: ") + *it);
        }
        r = compose_moves(r, *g);
    }
    return r;
}

std::string tree_pair_json(const TreePair& t) {
    nlohmann::json j;
    j["source"] = forest_string(t.source);
    j["target"] = forest_string(t.target);
    j["shift"] = t.shift();
    return j.dump();
}

std::string tree_pair_key(const TreePair& t) {
    return forest_string(t.target) + "|" + forest_string(t.source) + "|" + std::to_string(t.shift());
}

} // namespace ptolemy
