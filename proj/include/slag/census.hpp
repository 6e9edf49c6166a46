#pragma once

#include <vector>

#include "slag/enumerate.hpp"
#include "slag/fit.hpp"
#include "slag/lattice.hpp"

namespace slag {

struct CensusRecord {
    double V = 0.0;                 // projection-norm bound
    long long count = 0;            // primitive isotropic, both signs
    long long count_up_to_sign = 0; // count / 2
    long long enumerated = 0;       // isotropic candidates examined
    long long elapsed_ms = 0;       // total wall time of the census call
};

/// Counts primitive isotropic vectors with Q((v)_P) <= V^2 for each V,
/// through one enumeration at the largest bound with bucketing by M-value.
/// threads = 0 resolves SLAG_THREADS, then hardware concurrency.  Thread
/// count never changes the counts.
std::vector<CensusRecord> census(const GramLattice& L, const PositivePlane& P,
                                 const std::vector<double>& V_list, int threads = 0);

/// Least squares of log(count) against log(V); slope estimates rank - 2.
/// Requires >= 3 records with positive count; with >= 5 usable points the
/// smallest V is dropped as pre-asymptotic.
FitResult fit_exponent(const std::vector<CensusRecord>& records);

int resolve_thread_count(int requested);

}  // namespace slag
