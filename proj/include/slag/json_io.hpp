#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "slag/census.hpp"
#include "slag/exponents.hpp"
#include "slag/lattice.hpp"
#include "slag/lie.hpp"
#include "slag/xi.hpp"

namespace slag {

using nlohmann::json;

/// Shortest round-trip decimal text for a double (std::to_chars).
std::string format_double(double v);

/// Inserts a rational as two sibling keys: name = "num/den" (or "num" when
/// integral) and name_decimal = approximate value.
void put_rational(json& j, const std::string& name, const Rational& r);

json dimensions_json(const GroupDimensions& dims);
json delta_report_json(const DeltaReport& report, const std::string& variant = "both");
json root_datum_json(const GroupSpec& spec, const RestrictedRootDatum& datum);
json gram_json(const GramLattice& L);

struct PlaneDescriptor {
    bool seeded = false;
    std::uint64_t seed = 0;
    std::vector<VecZ> vectors;  // used when not seeded
    json to_json() const;
};

json census_json(const GramLattice& L, const PlaneDescriptor& plane,
                 const std::vector<CensusRecord>& records, bool include_timings);
std::string census_csv(const std::vector<CensusRecord>& records, bool include_timings);

json xi_json(const GroupSpec& spec, const XiFitReport& report, int nodes_per_circle);
std::string xi_csv(const std::vector<XiSample>& samples);

}  // namespace slag
