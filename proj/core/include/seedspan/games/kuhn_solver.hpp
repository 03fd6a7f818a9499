#pragma once

namespace seedspan::kuhn_solver {

// Expected payoff (chips) to the first actor of one ante-1/bet-1 Kuhn hand
// under a given pair of pure strategies and deal.
//
// First-actor strategy per card: 0 = bet, 1 = check then call, 2 = check then fold.
// Second-actor strategy per card: bit 0 = call a bet (else fold),
//                                 bit 1 = bet after a check (else check).
double pure_payoff(int card1, int card2, int strat1, int strat2);

// Exact value of the single-hand game for the first actor, from full
// enumeration of the 27 x 64 pure-strategy matrix and an LP solve.
// Known to be -1/18.
double hand_value();

// Facing a bet while holding the King, calling beats folding against every
// opponent pure strategy and consistent deal.
bool call_with_king_dominant();

} // namespace seedspan::kuhn_solver
