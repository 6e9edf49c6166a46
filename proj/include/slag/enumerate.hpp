#pragma once

#include <functional>

#include "slag/lattice.hpp"
#include "slag/majorant.hpp"

namespace slag {

/// M-value computed exactly the way the enumeration recursion accumulates
/// it (Cholesky rows, top coordinate first), so oracles can reproduce the
/// enumerator's inclusion decisions bit for bit.
double m_via_cholesky(const MajorantForm& M, const VecZ& v);

/// Range of the outermost coordinate x_{n-1} inside the ball M(v) <= bound;
/// the unit callers partition for data-parallel runs.
std::pair<long long, long long> top_coordinate_range(const MajorantForm& M, double bound);

/// Visits every nonzero integer vector with M(v) <= bound exactly once,
/// both signs, in a fixed order: outermost coordinate ascending, then each
/// inner level ascending.  Return false from the callback to stop.
void enumerate_ball(const MajorantForm& M, double bound,
                    const std::function<bool(const VecZ&, double m)>& yield);

/// Same traversal restricted to the outermost-coordinate slice [top_lo,
/// top_hi]; concatenating slices in ascending order reproduces the full
/// deterministic stream.
void enumerate_ball_partition(const MajorantForm& M, double bound, long long top_lo,
                              long long top_hi,
                              const std::function<bool(const VecZ&, double m)>& yield);

/// Backtracking walk that visits only isotropic vectors: the innermost
/// coordinate is solved from the integer quadratic Q(v) = 0 instead of
/// looped.  Every callback argument satisfies Q(v) = 0 exactly.
void isotropic_ball_walk(const GramLattice& L, const MajorantForm& M, double bound,
                         long long top_lo, long long top_hi,
                         const std::function<void(const VecZ&, double m)>& visit);

}  // namespace slag
