#include "ptolemy/words.hpp"
#include <algorithm>
#include <stdexcept>

namespace ptolemy {

namespace {
char inv_letter(char c) {
    switch (c) {
    case 'f': return 'F'; case 'F': return 'f';
    case 'r': return 'R'; case 'R': return 'r';
    case 'a': return 'A'; case 'A': return 'a';
    case 'b': return 'B'; case 'B': return 'b';
    }
    throw std::invalid_argument(std::string("bad letter: ") + c);
}
} // namespace

void check_move_word(const std::string& w) {
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] != 'f' && w[i] != 'F' && w[i] != 'r' && w[i] != 'R')
            throw std::invalid_argument("bad move letter '" + std::string(1, w[i]) + "' at position " + std::to_string(i));
}

void check_generator_word(const std::string& w) {
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] != 'a' && w[i] != 'A' && w[i] != 'b' && w[i] != 'B')
            throw std::invalid_argument("bad generator letter '" + std::string(1, w[i]) + "' at position " + std::to_string(i));
}

std::string invert_move_word(const std::string& w) {
    std::string r(w.rbegin(), w.rend());
    for (auto& c : r) c = inv_letter(c);
    return r;
}

std::string invert_generator_word(const std::string& w) { return invert_move_word(w); }

std::string free_reduce(const std::string& w) {
    std::string r;
    for (char c : w) {
        if (!r.empty() && r.back() == inv_letter(c)) r.pop_back();
        else r.push_back(c);
    }
    return r;
}

std::string phi_letters(const std::string& g) {
    std::string m = g;
    for (auto& c : m) {
        switch (c) {
        case 'a': c = 'f'; break; case 'A': c = 'F'; break;
        case 'b': c = 'r'; break; case 'B': c = 'R'; break;
        default: throw std::invalid_argument(std::string("bad generator letter: ") + c);
        }
    }
    return m;
}

std::string phi_inverse_letters(const std::string& m) {
    std::string g = m;
    for (auto& c : g) {
        switch (c) {
        case 'f': c = 'a'; break; case 'F': c = 'A'; break;
        case 'r': c = 'b'; break; case 'R': c = 'B'; break;
        default: throw std::invalid_argument(std::string("bad move letter: ") + c);
        }
    }
    return g;
}

std::string phi_word(const std::string& g, EvalOrder order) {
    std::string m = phi_letters(g);
    if (order == EvalOrder::Reversed) std::reverse(m.begin(), m.end());
    return m;
}

State eval_word(const std::string& g, EvalOrder order) {
    check_generator_word(g);
    return apply_move_word(base_state(), phi_word(g, order));
}

bool is_identity(const std::string& g) { return eval_word(g) == base_state(); }

std::string generator_word_of_moves(const std::string& m) {
    std::string g = phi_inverse_letters(m);
    std::reverse(g.begin(), g.end());
    return g;
}

} // namespace ptolemy
