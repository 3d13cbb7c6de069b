#pragma once
#include "ptolemy/state.hpp"
#include <string>

namespace ptolemy {

// Move words over {f,F,r,R} = {F, F^-1, R, R^-1}.
// Generator words over {a,A,b,B} = {alpha, alpha^-1, beta, beta^-1}.

void check_move_word(const std::string& w);       // throws with position on bad syntax
void check_generator_word(const std::string& w);

std::string invert_move_word(const std::string& w);
std::string invert_generator_word(const std::string& w);
std::string free_reduce(const std::string& w);    // cancels x x^-1 (works for both alphabets)

// letter-by-letter image under Phi: a->f, A->F, b->r, B->R
std::string phi_letters(const std::string& g);
std::string phi_inverse_letters(const std::string& m);

// Evaluation convention: the anti-isomorphism reverses letter order.
// The forward variant exists for the relation suite and debugging only.
enum class EvalOrder { Reversed, Forward };
std::string phi_word(const std::string& g, EvalOrder order = EvalOrder::Reversed);
State eval_word(const std::string& g, EvalOrder order = EvalOrder::Reversed);
bool is_identity(const std::string& g);

// move word whose evaluation gives the same element (inverse of phi_word)
std::string generator_word_of_moves(const std::string& m);

} // namespace ptolemy
