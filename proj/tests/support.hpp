#pragma once
// helpers shared by the unit, property and acceptance binaries
#include "ptolemy/braided.hpp"
#include "ptolemy/words.hpp"
#include <random>
#include <string>
#include <vector>

namespace testing_support {

inline std::string random_word(std::mt19937& rng, int maxLen, const char* letters = "aAbB") {
    std::string w;
    int n = int(rng() % unsigned(maxLen + 1));
    for (int k = 0; k < n; ++k) w += letters[rng() % 4];
    return w;
}

inline std::string power(const std::string& w, int n) {
    std::string r;
    for (int k = 0; k < n; ++k) r += w;
    return r;
}

inline std::string commutator(const std::string& x, const std::string& y) {
    return x + y + ptolemy::invert_generator_word(x) + ptolemy::invert_generator_word(y);
}

// the presentation of T on alpha = a, beta = b
inline std::vector<std::string> presentation_relators() {
    return {
        "aaaa",
        "bbb",
        commutator("bab", "aababaa"),
        commutator("bab", "aabbaababaabaa"),
        power("ba", 5),
    };
}

// the A, B, C relations with A = b a a, B = b b a, C = b b
inline std::vector<std::string> abc_relators() {
    using ptolemy::invert_generator_word;
    const std::string A = "baa", B = "bba", C = "bb";
    const std::string Ai = invert_generator_word(A), Bi = invert_generator_word(B);
    std::string AiCB = Ai + C + B;
    return {
        commutator(A + Bi, Ai + B + A),
        commutator(A + Bi, Ai + Ai + B + A + A),
        power(C, 3),
        C + invert_generator_word(B + Ai + C + B),
        C + A + invert_generator_word(AiCB + AiCB),
        AiCB + Ai + B + A + invert_generator_word(B + Ai + Ai + C + B + B),
    };
}

// base edges near the origin used for random braids
inline std::vector<ptolemy::Edge> braid_pool() {
    using namespace ptolemy;
    std::vector<Edge> pool;
    for (int p = -2; p <= 2; ++p) {
        pool.push_back(Edge(make_cusp(p, 1), inf_cusp()));
        pool.push_back(Edge(make_cusp(p, 1), make_cusp(p + 1, 1)));
    }
    pool.push_back(Edge(make_cusp(0, 1), make_cusp(1, 2)));
    pool.push_back(Edge(make_cusp(1, 2), make_cusp(1, 1)));
    return pool;
}

inline ptolemy::BraidLetter random_letter(std::mt19937& rng, const std::vector<ptolemy::Edge>& pool) {
    for (;;) {
        const ptolemy::Edge& x = pool[rng() % pool.size()];
        const ptolemy::Edge& y = pool[rng() % pool.size()];
        if (!ptolemy::common_tri(x, y)) continue;
        return {x, y, rng() % 2 ? 1 : -1};
    }
}

inline ptolemy::BraidWord random_braid(std::mt19937& rng, int maxLen) {
    auto pool = braid_pool();
    ptolemy::BraidWord b;
    int n = int(rng() % unsigned(maxLen + 1));
    for (int k = 0; k < n; ++k) b.push_back(random_letter(rng, pool));
    return b;
}

// a random mix of braid letters and punctured moves, applied in order
inline ptolemy::PuncturedState random_mixed_state(std::mt19937& rng, int maxLen, std::string* log = nullptr) {
    auto pool = braid_pool();
    ptolemy::PuncturedState s = ptolemy::base_pstate();
    int n = 1 + int(rng() % unsigned(maxLen));
    for (int k = 0; k < n; ++k) {
        if (rng() % 2) {
            ptolemy::BraidLetter l = random_letter(rng, pool);
            s = ptolemy::apply_braid({l}, s);
            if (log) *log += "[" + ptolemy::braid_str({l}) + "]";
        } else {
            char m = "fFrR"[rng() % 4];
            s = ptolemy::apply_star_move(s, m);
            if (log) *log += m;
        }
    }
    return s;
}

} // namespace testing_support
