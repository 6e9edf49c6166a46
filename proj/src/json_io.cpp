#include "slag/json_io.hpp"

#include <charconv>
#include <cmath>

namespace slag {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void put_rational(json& j, const std::string& name, const Rational& r) {
    j[name] = r.to_string();
    j[name + "_decimal"] = r.to_double();
}

json dimensions_json(const GroupDimensions& dims) {
    return json{{"dim_G", dims.dim_G},
                {"dim_K", dims.dim_K},
                {"dim_He", dims.dim_He},
                {"dim_X", dims.dim_X},
                {"dim_Y", dims.dim_Y}};
}

json delta_report_json(const DeltaReport& report, const std::string& variant) {
    json j;
    j["p"] = report.spec.p;
    j["q"] = report.spec.q;
    j["p_pi"] = report.p_pi;
    j["dimensions"] = dimensions_json(report.dims);
    j["l0_prime"] = report.l0_prime;
    j["l0"] = report.l0;
    put_rational(j, "p_cusp", report.p_cusp);
    put_rational(j, "rho_H", report.rho_H_value);
    put_rational(j, "delta0_prime_sup", report.delta0_prime_sup);
    put_rational(j, "C_l0", report.C_l0);
    put_rational(j, "delta0_sup", report.delta0_sup);
    put_rational(j, "d_l0", report.d_l0);
    put_rational(j, "delta_section5", report.delta_section5);
    put_rational(j, "delta_eq22", report.delta_eq22);
    j["open_interval_flags"] = report.open_interval_flags;
    if (variant == "section5") {
        j["delta_variant"] = "section5";
        put_rational(j, "delta", report.delta_section5);
    } else if (variant == "eq22") {
        j["delta_variant"] = "eq22";
        put_rational(j, "delta", report.delta_eq22);
    } else {
        j["delta_variant"] = "both";
    }
    return j;
}

json root_datum_json(const GroupSpec& spec, const RestrictedRootDatum& datum) {
    json j;
    j["p"] = spec.p;
    j["q"] = spec.q;
    j["family"] = std::string(1, datum.family);
    j["dimensions"] = dimensions_json(dimensions(spec));
    json roots = json::array();
    for (const auto& r : datum.positive_roots)
        roots.push_back(json{{"coeffs", r.coeffs}, {"multiplicity", r.multiplicity}});
    j["positive_roots"] = roots;
    json rho = json::array(), rho_dec = json::array();
    for (const auto& c : datum.rho) {
        rho.push_back(c.to_string());
        rho_dec.push_back(c.to_double());
    }
    j["rho"] = rho;
    j["rho_decimal"] = rho_dec;
    put_rational(j, "rho_H", datum.rho[0]);
    j["root_count_with_multiplicity"] = datum.root_count_with_multiplicity();
    return j;
}

json gram_json(const GramLattice& L) {
    json rows = json::array();
    for (int i = 0; i < L.rank(); ++i) {
        json row = json::array();
        for (int j = 0; j < L.rank(); ++j) row.push_back(L.gram()(i, j));
        rows.push_back(row);
    }
    return rows;
}

json PlaneDescriptor::to_json() const {
    json j;
    if (seeded) {
        j["kind"] = "seed";
        j["seed"] = seed;
    } else {
        j["kind"] = "vectors";
        json vecs = json::array();
        for (const auto& v : vectors) {
            json row = json::array();
            for (int i = 0; i < v.size(); ++i) row.push_back(v(i));
            vecs.push_back(row);
        }
        j["vectors"] = vecs;
    }
    return j;
}

json census_json(const GramLattice& L, const PlaneDescriptor& plane,
                 const std::vector<CensusRecord>& records, bool include_timings) {
    json j;
    j["lattice"] = L.spec_string();
    j["rank"] = L.rank();
    j["signature"] = json::array({L.signature().first, L.signature().second});
    j["plane"] = plane.to_json();
    json recs = json::array();
    for (const auto& r : records) {
        recs.push_back(json{{"V", r.V},
                            {"count", r.count},
                            {"count_up_to_sign", r.count_up_to_sign},
                            {"enumerated", r.enumerated},
                            {"elapsed_ms", include_timings ? r.elapsed_ms : 0}});
    }
    j["records"] = recs;
    long long positive = 0;
    for (const auto& r : records)
        if (r.count > 0) ++positive;
    if (positive >= 3) {
        FitResult fit = fit_exponent(records);
        j["fit"] = json{{"slope", fit.slope},
                        {"intercept", fit.intercept},
                        {"r_squared", fit.r_squared},
                        {"expected_slope", L.rank() - 2}};
    } else {
        j["fit"] = nullptr;
    }
    return j;
}

std::string census_csv(const std::vector<CensusRecord>& records, bool include_timings) {
    std::string out = "V,count,count_up_to_sign,enumerated,elapsed_ms\n";
    for (const auto& r : records) {
        out += format_double(r.V);
        out += "," + std::to_string(r.count);
        out += "," + std::to_string(r.count_up_to_sign);
        out += "," + std::to_string(r.enumerated);
        out += "," + std::to_string(include_timings ? r.elapsed_ms : 0);
        out += "\n";
    }
    return out;
}

json xi_json(const GroupSpec& spec, const XiFitReport& report, int nodes_per_circle) {
    json j;
    j["p"] = spec.p;
    j["q"] = spec.q;
    j["nodes_per_circle"] = nodes_per_circle;
    j["log_degree"] = report.log_degree;
    put_rational(j, "rho_H", rho_H(spec));
    json samples = json::array();
    for (const auto& s : report.samples)
        samples.push_back(json{{"t", s.t}, {"xi", s.xi}, {"log_xi", s.log_xi}});
    j["samples"] = samples;
    j["fit"] = json{{"log_corrected",
                     json{{"rate", report.log_corrected.slope},
                          {"intercept", report.log_corrected.intercept},
                          {"r_squared", report.log_corrected.r_squared}}},
                    {"pure_exponential",
                     json{{"rate", report.pure_exponential.slope},
                          {"intercept", report.pure_exponential.intercept},
                          {"r_squared", report.pure_exponential.r_squared}}}};
    return j;
}

std::string xi_csv(const std::vector<XiSample>& samples) {
    std::string out = "t,xi,log_xi\n";
    for (const auto& s : samples) {
        out += format_double(s.t);
        out += "," + format_double(s.xi);
        out += "," + format_double(s.log_xi);
        out += "\n";
    }
    return out;
}

}  // namespace slag
