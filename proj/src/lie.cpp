#include "slag/lie.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace slag {

GroupSpec::GroupSpec(int p_, int q_) : p(p_), q(q_) {
    if (p < 1 || q < p) throw std::invalid_argument("GroupSpec: need 1 <= p <= q");
}

GroupDimensions dimensions(const GroupSpec& spec) {
    long long p = spec.p, q = spec.q, n = p + q;
    GroupDimensions d;
    d.dim_G = n * (n - 1) / 2;
    d.dim_K = p * (p - 1) / 2 + q * (q - 1) / 2;
    // The isotropic cone minus the origin is a single G-orbit of dimension n-1.
    d.dim_He = d.dim_G - (n - 1);
    d.dim_X = d.dim_G;
    d.dim_Y = d.dim_He;
    return d;
}

long long RestrictedRootDatum::root_count_with_multiplicity() const {
    long long total = 0;
    for (const auto& r : positive_roots) total += r.multiplicity;
    return total;
}

RestrictedRootDatum root_datum(const GroupSpec& spec) {
    int p = spec.p, q = spec.q;
    RestrictedRootDatum datum;
    datum.family = (q > p) ? 'B' : 'D';
    for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) {
            RestrictedRoot minus, plus;
            minus.coeffs.assign(p, 0);
            minus.coeffs[i] = 1;
            minus.coeffs[j] = -1;
            plus.coeffs.assign(p, 0);
            plus.coeffs[i] = 1;
            plus.coeffs[j] = 1;
            datum.positive_roots.push_back(minus);
            datum.positive_roots.push_back(plus);
        }
    }
    if (q > p) {
        for (int i = 0; i < p; ++i) {
            RestrictedRoot shortr;
            shortr.coeffs.assign(p, 0);
            shortr.coeffs[i] = 1;
            shortr.multiplicity = q - p;
            datum.positive_roots.push_back(shortr);
        }
    }
    datum.rho.assign(p, Rational(0));
    for (const auto& r : datum.positive_roots)
        for (int i = 0; i < p; ++i)
            datum.rho[i] += Rational(r.coeffs[i] * (long long)r.multiplicity, 2);
    return datum;
}

Rational rho_H(const GroupSpec& spec) {
    return root_datum(spec).rho[0];
}

PpiTable PpiTable::builtin() {
    PpiTable t;
    t.set(GroupSpec(3, 19), 20);
    return t;
}

PpiTable PpiTable::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("p(pi) table: cannot open " + path);
    nlohmann::json j;
    in >> j;
    if (!j.is_array()) throw std::runtime_error("p(pi) table: expected a JSON array of triples");
    PpiTable t = builtin();
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 3)
            throw std::runtime_error("p(pi) table: each entry must be [p, q, value]");
        t.set(GroupSpec(entry[0].get<int>(), entry[1].get<int>()), entry[2].get<long long>());
    }
    return t;
}

void PpiTable::set(const GroupSpec& spec, long long value) {
    if (value < 2) throw std::invalid_argument("p(pi) table: values must be >= 2");
    entries_[spec] = value;
}

std::optional<long long> PpiTable::lookup(const GroupSpec& spec) const {
    auto it = entries_.find(spec);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::optional<long long> integrability_constant(const GroupSpec& spec, const PpiTable& table) {
    return table.lookup(spec);
}

}  // namespace slag
