#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slag/ratmat.hpp"
#include "slag/rational.hpp"

namespace slag {

/// The real orthogonal group O(p,q), p <= q.  Real rank is p.
struct GroupSpec {
    int p = 1;
    int q = 1;

    GroupSpec() = default;
    GroupSpec(int p_, int q_);

    int n() const { return p + q; }
    friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
        return a.p == b.p && a.q == b.q;
    }
    friend bool operator<(const GroupSpec& a, const GroupSpec& b) {
        return a.p != b.p ? a.p < b.p : a.q < b.q;
    }
};

struct GroupDimensions {
    long long dim_G = 0;
    long long dim_K = 0;
    long long dim_He = 0;  // stabilizer of an isotropic vector
    long long dim_X = 0;   // Gamma \ G
    long long dim_Y = 0;   // Gamma_e \ H_e
};

/// A positive restricted root as an integer coefficient vector over the
/// rank-p torus basis e_1..e_p, with its multiplicity.
struct RestrictedRoot {
    std::vector<int> coeffs;
    int multiplicity = 1;
};

struct RestrictedRootDatum {
    std::vector<RestrictedRoot> positive_roots;
    RatVec rho;   // half sum with multiplicities, exact
    char family;  // 'B' when q > p, 'D' when q == p

    long long root_count_with_multiplicity() const;
};

GroupDimensions dimensions(const GroupSpec& spec);

/// Positive restricted roots of so(p,q): e_i +- e_j (i<j, mult 1) plus,
/// when q > p, the short roots e_i with multiplicity q - p.
RestrictedRootDatum root_datum(const GroupSpec& spec);

/// rho evaluated on H = first torus coordinate, summed from the datum.
/// Equals (p+q-2)/2, but is computed, not short-circuited.
Rational rho_H(const GroupSpec& spec);

/// Lookup table for the integrability exponent p(pi) of the regular
/// representation on L^2_0(Gamma\G).  Values are cited constants, never
/// computed; the built-in table carries only (3,19) -> 20.
class PpiTable {
  public:
    static PpiTable builtin();
    /// Extends the built-in table with [p, q, value] triples from a JSON file.
    static PpiTable from_json_file(const std::string& path);

    void set(const GroupSpec& spec, long long value);
    std::optional<long long> lookup(const GroupSpec& spec) const;

  private:
    std::map<GroupSpec, long long> entries_;
};

std::optional<long long> integrability_constant(const GroupSpec& spec,
                                                const PpiTable& table = PpiTable::builtin());

}  // namespace slag
