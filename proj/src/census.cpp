#include "slag/census.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace slag {

namespace {

constexpr double kThresholdTol = 1e-9;  // relative slack on bucket boundaries

bool within_threshold(double m, double threshold) {
    return m <= threshold * (1.0 + kThresholdTol);
}

}  // namespace

int resolve_thread_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SLAG_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp<unsigned>(hw, 1u, 16u));
}

std::vector<CensusRecord> census(const GramLattice& L, const PositivePlane& P,
                                 const std::vector<double>& V_list, int threads) {
    if (V_list.empty()) throw std::invalid_argument("census: V list must be non-empty");
    for (size_t i = 0; i < V_list.size(); ++i) {
        if (V_list[i] <= 0) throw std::invalid_argument("census: V values must be positive");
        if (i > 0 && V_list[i] <= V_list[i - 1])
            throw std::invalid_argument("census: V list must be strictly ascending");
    }
    if (P.dim() != L.signature().first)
        throw std::invalid_argument("census: plane dimension != n_plus");

    auto t0 = std::chrono::steady_clock::now();

    const size_t nv = V_list.size();
    std::vector<double> thresholds(nv);
    for (size_t k = 0; k < nv; ++k) thresholds[k] = 2.0 * V_list[k] * V_list[k];

    MajorantForm M = build_majorant(L, P);
    const double bound = thresholds.back();
    auto [top_lo, top_hi] = top_coordinate_range(M, bound);

    const int nthreads = std::min<long long>(resolve_thread_count(threads),
                                             std::max<long long>(1, top_hi - top_lo + 1));

    struct Buckets {
        std::vector<long long> count;
        std::vector<long long> enumerated;
    };
    std::vector<Buckets> partial(nthreads);
    for (auto& b : partial) {
        b.count.assign(nv, 0);
        b.enumerated.assign(nv, 0);
    }

    auto worker = [&](int idx, long long lo, long long hi) {
        Buckets& mine = partial[idx];
        isotropic_ball_walk(L, M, bound, lo, hi, [&](const VecZ& v, double m) {
            // first bucket whose threshold admits this M-value
            size_t k = 0;
            while (k < nv && !within_threshold(m, thresholds[k])) ++k;
            if (k == nv) return;
            mine.enumerated[k] += 1;
            if (is_primitive(v)) mine.count[k] += 1;
        });
    };

    if (nthreads <= 1) {
        worker(0, top_lo, top_hi);
    } else {
        std::vector<std::thread> pool;
        long long total = top_hi - top_lo + 1;
        long long chunk = (total + nthreads - 1) / nthreads;
        for (int i = 0; i < nthreads; ++i) {
            long long lo = top_lo + i * chunk;
            long long hi = std::min(top_hi, lo + chunk - 1);
            if (lo > top_hi) break;
            pool.emplace_back(worker, i, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    std::vector<CensusRecord> records(nv);
    long long cum_count = 0, cum_enum = 0;
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    for (size_t k = 0; k < nv; ++k) {
        for (const auto& b : partial) {
            cum_count += b.count[k];
            cum_enum += b.enumerated[k];
        }
        records[k].V = V_list[k];
        records[k].count = cum_count;
        records[k].count_up_to_sign = cum_count / 2;
        records[k].enumerated = cum_enum;
        records[k].elapsed_ms = elapsed;
    }
    return records;
}

FitResult fit_exponent(const std::vector<CensusRecord>& records) {
    std::vector<double> xs, ys;
    for (const auto& r : records) {
        if (r.count > 0) {
            xs.push_back(std::log(r.V));
            ys.push_back(std::log(static_cast<double>(r.count)));
        }
    }
    if (xs.size() < 3) throw std::invalid_argument("fit_exponent: need >= 3 records with count > 0");
    if (xs.size() >= 5) {
        // smallest V is pre-asymptotic; the list is ascending
        xs.erase(xs.begin());
        ys.erase(ys.begin());
    }
    return linear_fit(xs, ys);
}

}  // namespace slag
