// Command-line front end: batch computations, machine-readable output.
// Exit codes: 0 on success, 2 on validation errors.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "slag/census.hpp"
#include "slag/exponents.hpp"
#include "slag/json_io.hpp"
#include "slag/lattice.hpp"
#include "slag/lie.hpp"
#include "slag/xi.hpp"

namespace {

void write_out(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + out_path);
    f << payload;
}

std::string json_text(const slag::json& j) { return j.dump(2) + "\n"; }

int run_constants(int p, int q, long long p_pi_override, const std::string& p_cusp_str,
                  const std::string& ppi_file, const std::string& variant,
                  const std::string& output, const std::string& out_path) {
    slag::GroupSpec spec(p, q);
    slag::PpiTable table =
        ppi_file.empty() ? slag::PpiTable::builtin() : slag::PpiTable::from_json_file(ppi_file);
    if (p_pi_override > 0) table.set(spec, p_pi_override);
    slag::Rational p_cusp = slag::Rational::from_string(p_cusp_str);
    if (!slag::integrability_constant(spec, table)) {
        std::cerr << "error: p(pi) not tabulated for --p " << p << " --q " << q
                  << " (provide --p-pi or --p-pi-table)\n";
        return 2;
    }
    slag::DeltaReport rep = slag::delta_chain(spec, table, p_cusp);
    slag::json j = slag::delta_report_json(rep, variant);
    if (output == "table") {
        std::string t;
        t += "constant chain for SO(" + std::to_string(p) + "," + std::to_string(q) + ")\n";
        t += "  dim G = " + std::to_string(rep.dims.dim_G) +
             ", dim K = " + std::to_string(rep.dims.dim_K) +
             ", dim Y = " + std::to_string(rep.dims.dim_Y) + "\n";
        t += "  rho(H) = " + rep.rho_H_value.to_string() + ", p(pi) = " + std::to_string(rep.p_pi) +
             "\n";
        t += "  l0' = " + std::to_string(rep.l0_prime) + ", l0 = " + std::to_string(rep.l0) + "\n";
        t += "  delta0' < " + rep.delta0_prime_sup.to_string() + "\n";
        t += "  C_l0 = " + rep.C_l0.to_string() + ", d_l0 = " + rep.d_l0.to_string() + "\n";
        t += "  delta0 < " + rep.delta0_sup.to_string() + "\n";
        t += "  delta (section 5 arithmetic, delta0/d_l0)   < " + rep.delta_section5.to_string() +
             "\n";
        t += "  delta (eq. 2.2 balancing, delta0/(d_l0+1)) < " + rep.delta_eq22.to_string() + "\n";
        write_out(t, out_path);
    } else {
        write_out(json_text(j), out_path);
    }
    return 0;
}

int run_census(const std::string& lattice_spec, const std::string& plane_expr, bool have_seed,
               std::uint64_t seed, double vmax, std::vector<double> v_list, int threads,
               bool timings, const std::string& output, const std::string& out_path) {
    slag::GramLattice L = slag::GramLattice::parse(lattice_spec);
    const int n_plus = L.signature().first;

    slag::PlaneDescriptor desc;
    slag::PositivePlane plane = [&]() {
        if (!plane_expr.empty()) {
            desc.seeded = false;
            desc.vectors = slag::parse_vector_exprs(plane_expr, L.rank());
            return slag::PositivePlane::from_vectors(L, desc.vectors);
        }
        if (have_seed) {
            desc.seeded = true;
            desc.seed = seed;
            return slag::PositivePlane::from_seed(L, seed);
        }
        if (n_plus == 0) {
            desc.seeded = false;
            return slag::PositivePlane::from_vectors(L, {});
        }
        throw std::invalid_argument("census needs --plane or --seed for an indefinite lattice");
    }();

    if (v_list.empty()) {
        if (vmax <= 0) throw std::invalid_argument("census needs --vmax or --v-list");
        v_list.push_back(vmax);
    }
    auto records = slag::census(L, plane, v_list, threads);
    if (output == "csv") {
        write_out(slag::census_csv(records, timings), out_path);
    } else if (output == "table") {
        std::string t = slag::census_csv(records, timings);
        write_out(t, out_path);
    } else {
        write_out(json_text(slag::census_json(L, desc, records, timings)), out_path);
    }
    return 0;
}

int run_xi(int p, int q, double t_min, double t_max, int samples, int nodes,
           const std::string& output, const std::string& out_path) {
    slag::GroupSpec spec(p, q);
    slag::XiFitReport rep = slag::xi_decay_fit(spec, t_min, t_max, samples, nodes);
    if (output == "csv" || output == "table") {
        std::string t = slag::xi_csv(rep.samples);
        t += "\n";
        slag::json fit = slag::xi_json(spec, rep, nodes)["fit"];
        t += fit.dump(2) + "\n";
        write_out(t, out_path);
    } else {
        write_out(json_text(slag::xi_json(spec, rep, nodes)), out_path);
    }
    return 0;
}

int run_roots(int p, int q, const std::string& output, const std::string& out_path) {
    slag::GroupSpec spec(p, q);
    auto datum = slag::root_datum(spec);
    slag::json j = slag::root_datum_json(spec, datum);
    if (output == "table") {
        std::string t = "positive restricted roots of so(" + std::to_string(p) + "," +
                        std::to_string(q) + ") [type " + std::string(1, datum.family) + "]\n";
        for (const auto& r : datum.positive_roots) {
            t += "  (";
            for (size_t i = 0; i < r.coeffs.size(); ++i)
                t += (i ? "," : "") + std::to_string(r.coeffs[i]);
            t += ") x" + std::to_string(r.multiplicity) + "\n";
        }
        t += "rho = (";
        for (size_t i = 0; i < datum.rho.size(); ++i)
            t += (i ? ", " : "") + datum.rho[i].to_string();
        t += ")\nrho(H) = " + datum.rho[0].to_string() + "\n";
        write_out(t, out_path);
    } else {
        write_out(json_text(j), out_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equidistribution-constant and isotropic-census toolkit for SO(p,q)"};
    app.require_subcommand(1);

    // constants
    auto* c_cmd = app.add_subcommand("constants", "exact constant chain (delta0, delta, ...)");
    int c_p = 3, c_q = 19;
    long long c_ppi = 0;
    std::string c_pcusp = "1", c_ppi_file, c_variant = "both", c_output = "json", c_out;
    c_cmd->add_option("--p", c_p, "positive part of the signature")->required();
    c_cmd->add_option("--q", c_q, "negative part of the signature")->required();
    c_cmd->add_option("--p-pi", c_ppi, "override p(pi) for this spec");
    c_cmd->add_option("--p-pi-table", c_ppi_file, "JSON file of [p, q, value] triples");
    c_cmd->add_option("--p-cusp", c_pcusp, "cusp-excursion exponent (rational, default 1)");
    c_cmd->add_option("--variant", c_variant, "delta variant: section5, eq22, both")
        ->check(CLI::IsMember({"section5", "eq22", "both"}));
    c_cmd->add_option("--output", c_output, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    c_cmd->add_option("--out", c_out, "output file (default stdout)");

    // census
    auto* n_cmd = app.add_subcommand("census", "count primitive isotropic vectors");
    std::string n_lattice, n_plane, n_vlist, n_output = "json", n_out;
    std::uint64_t n_seed = 0;
    bool n_have_seed = false, n_timings = false;
    double n_vmax = 0;
    int n_threads = 0;
    n_cmd->add_option("--lattice", n_lattice, "lattice spec, e.g. U, 2U, 3U+2E8m")->required();
    n_cmd->add_option("--plane", n_plane, "explicit plane, e.g. 'e1+e2' or 'e1,e2+e3'");
    n_cmd->add_option("--seed", n_seed, "seeded random plane")->each([&](const std::string&) {
        n_have_seed = true;
    });
    n_cmd->add_option("--vmax", n_vmax, "single projection-norm bound");
    n_cmd->add_option("--v-list", n_vlist, "comma-separated ascending bounds");
    n_cmd->add_option("--threads", n_threads, "enumeration threads (0 = SLAG_THREADS/auto)");
    n_cmd->add_flag("--timings", n_timings, "include wall-clock times in output");
    n_cmd->add_option("--output", n_output, "json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    n_cmd->add_option("--out", n_out, "output file (default stdout)");

    // xi
    auto* x_cmd = app.add_subcommand("xi", "Harish-Chandra function decay");
    int x_p = 1, x_q = 2, x_samples = 8, x_nodes = 1024;
    double x_tmin = 6, x_tmax = 12;
    std::string x_output = "json", x_out;
    x_cmd->add_option("--p", x_p)->required();
    x_cmd->add_option("--q", x_q)->required();
    x_cmd->add_option("--t-min", x_tmin, "start of the fit window (>= 4)");
    x_cmd->add_option("--t-max", x_tmax, "end of the fit window");
    x_cmd->add_option("--samples", x_samples, "number of t samples (>= 8)");
    x_cmd->add_option("--nodes", x_nodes, "quadrature nodes per circle (>= 256)");
    x_cmd->add_option("--output", x_output, "json or csv")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    x_cmd->add_option("--out", x_out, "output file (default stdout)");

    // roots
    auto* r_cmd = app.add_subcommand("roots", "restricted root datum");
    int r_p = 3, r_q = 19;
    std::string r_output = "json", r_out;
    r_cmd->add_option("--p", r_p)->required();
    r_cmd->add_option("--q", r_q)->required();
    r_cmd->add_option("--output", r_output, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    r_cmd->add_option("--out", r_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(c_cmd))
            return run_constants(c_p, c_q, c_ppi, c_pcusp, c_ppi_file, c_variant, c_output, c_out);
        if (app.got_subcommand(n_cmd)) {
            std::vector<double> v_list;
            if (!n_vlist.empty()) {
                size_t pos = 0;
                while (pos <= n_vlist.size()) {
                    size_t next = n_vlist.find(',', pos);
                    v_list.push_back(std::stod(
                        n_vlist.substr(pos, next == std::string::npos ? next : next - pos)));
                    if (next == std::string::npos) break;
                    pos = next + 1;
                }
            }
            return run_census(n_lattice, n_plane, n_have_seed, n_seed, n_vmax, v_list, n_threads,
                              n_timings, n_output, n_out);
        }
        if (app.got_subcommand(x_cmd))
            return run_xi(x_p, x_q, x_tmin, x_tmax, x_samples, x_nodes, x_output, x_out);
        if (app.got_subcommand(r_cmd)) return run_roots(r_p, r_q, r_output, r_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
