#pragma once

#include <array>
#include <vector>

#include "painleve/linalg.hpp"
#include "painleve/newton.hpp"
#include "painleve/systems.hpp"

namespace painleve {

// Movable-pole machinery. Near a pole z0 the solutions behave like
//   x ~ a0 * T^{-p},  y ~ b0 * T^{-q},  T = z - z0,
// where (a0, b0) solves the leading-order balance of the weighted top part of
// the field. Each balance carries a 2x2 step matrix whose eigenvalues locate
// the free constants of the expansion.

struct PoleBalance {
  std::array<Rat, 2> lead;  // (a0, b0), never both zero
  Mat<Rat> kov;             // step n of the recursion solves (n*I - kov) c = r
  std::vector<Rat> eigs;    // eigenvalues of kov, ascending
};

std::vector<PoleBalance> pole_balances(const VectorField& S, const NewtonWeights& W);

// Formal Laurent expansion around a movable pole:
//   x = sum_{n>=0} a[n] T^{n-p},  y = sum_{n>=0} b[n] T^{n-q},  z = z0 + T.
// Coefficients are exact polynomials in z0, the parameters of the field, and
// one free constant C<n> per positive resonance.
struct LaurentExpansion {
  long p = 0, q = 0;
  std::array<Rat, 2> lead;
  VarId z0;
  Mat<Rat> kov;
  std::vector<long> resonances;     // steps where the recursion matrix drops rank
  std::vector<VarId> free_consts;   // the C<n> symbols, in step order
  std::vector<PolyQ> a, b;          // size order+1
};

// Throws std::invalid_argument if lead is not a balance and std::domain_error
// if a resonance step is obstructed, meaning the expansion would need a
// logarithm and the field fails the pole test.
LaurentExpansion laurent_series(const VectorField& S, const NewtonWeights& W,
                                const std::array<Rat, 2>& lead, long order);

// Residuals of the truncated expansion in both equations of the field, keeping
// exactly the orders the construction claims to satisfy. Both components are
// zero iff the expansion is consistent.
std::array<PolyQ, 2> series_residual(const VectorField& S, const LaurentExpansion& L);

}  // namespace painleve
