#pragma once

#include <vector>

#include "lerchpade/rational.hpp"
#include "lerchpade/unipoly.hpp"

namespace lerchpade {

/// Generic simultaneous-approximation problem: find P_0 of degree <= M
/// such that for every target series f_j (given by the coefficients of
/// 1/z^(k+1), k >= 0), the tail of P_0(z) f_j(z) past its polynomial part
/// starts at order >= n_j + 1. Counting gives a solution space of
/// dimension >= M + 1 - sum n_j.
struct OracleProblem {
    std::vector<std::vector<Rational>> fcoeffs;  // fcoeffs[j][k]: coefficient of 1/z^(k+1)
    std::vector<unsigned long> weights;          // n_j
    unsigned long degree;                        // M

    unsigned long condition_count() const;
};

struct OracleSolution {
    /// Basis of the candidate P_0 coefficient space, each vector of length
    /// M + 1 (ascending degree), normalized to coprime integer entries with
    /// positive first nonzero entry.
    std::vector<std::vector<Rational>> basis;
    unsigned long conditions = 0;

    std::size_t dimension() const { return basis.size(); }
};

/// Solves the homogeneous linear system by fraction-free elimination over
/// the integers (denominators cleared row by row). Throws when a series
/// window is too short to express every condition.
OracleSolution oracle_solve(const OracleProblem& problem);

/// Whether the given P_0 coefficients (padded to length M + 1) satisfy
/// every vanishing condition of the problem.
bool oracle_satisfies(const OracleProblem& problem, const UniPoly& P0);

/// The polynomial part of P_0(z) f(z) for a series with the given
/// coefficients; needs at least deg P_0 of them.
UniPoly oracle_polynomial_part(const UniPoly& P0, const std::vector<Rational>& fcoeffs);

}  // namespace lerchpade
