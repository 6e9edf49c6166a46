#include "slag/exponents.hpp"

#include <stdexcept>

namespace slag {

AsymptoticMonomial operator*(const AsymptoticMonomial& a, const AsymptoticMonomial& b) {
    AsymptoticMonomial m;
    m.eps_exp = a.eps_exp + b.eps_exp;
    m.decay_exp = a.decay_exp + b.decay_exp;
    m.growth_exp = a.growth_exp + b.growth_exp;
    if (a.sobolev_index && b.sobolev_index)
        m.sobolev_index = *a.sobolev_index + *b.sobolev_index;
    else
        m.sobolev_index = a.sobolev_index ? a.sobolev_index : b.sobolev_index;
    return m;
}

bool dominates(const AsymptoticMonomial& a, const AsymptoticMonomial& b, const Rational& s) {
    return a.decay_rate_at(s) < b.decay_rate_at(s);
}

Rational balance(const AsymptoticMonomial& term_a, const AsymptoticMonomial& term_b) {
    Rational deps = term_a.eps_exp - term_b.eps_exp;
    if (deps.num() == 0)
        throw std::domain_error("balance: eps-exponents coincide, nothing to balance");
    Rational rate_a = term_a.decay_exp - term_a.growth_exp;
    Rational rate_b = term_b.decay_exp - term_b.growth_exp;
    Rational s = (rate_b - rate_a) / deps;
    if (!(s > Rational(0)))
        throw std::range_error("balance: solved rate is not positive; terms are mis-ordered");
    return s;
}

PipelineConstants PipelineConstants::make(const GroupSpec& spec, Rational p_cusp) {
    if (!(p_cusp > Rational(0)) || p_cusp > Rational(1))
        throw std::invalid_argument("PipelineConstants: p_cusp must lie in (0, 1]");
    PipelineConstants c;
    c.spec = spec;
    c.dims = dimensions(spec);
    c.p_cusp = p_cusp;
    c.c1 = Rational(c.dims.dim_G - c.dims.dim_K);
    c.d = c.dims.dim_K;
    return c;
}

Rational d_l(const Rational& l, const PipelineConstants& consts) {
    if (l < Rational(0)) throw std::invalid_argument("d_l: l must be non-negative");
    return l + consts.c1 / Rational(2);
}

Rational C_l(const Rational& l, const PipelineConstants& consts) {
    return Rational(2) * l + Rational(4 * consts.dims.dim_Y) + Rational(consts.dims.dim_X, 2);
}

bool sobolev_lemma_applies(const Rational& l, const PipelineConstants& consts) {
    return l > Rational(consts.dims.dim_X, 2);
}

std::map<std::string, Rational> thickening_norm_exponents(const Rational& l,
                                                          const PipelineConstants& consts) {
    if (l < Rational(0))
        throw std::invalid_argument("thickening_norm_exponents: l must be non-negative");
    const Rational dim_X(consts.dims.dim_X), dim_Y(consts.dims.dim_Y);
    std::map<std::string, Rational> m;
    m["rho"] = -l - (dim_X - dim_Y) / Rational(2);
    m["beta"] = -l + dim_Y / Rational(2);
    m["tau"] = -l - Rational(9) * dim_Y / Rational(2);
    m["phi"] = -C_l(l, consts);
    m["G_ball"] = Rational(-2) * dim_Y;
    m["F_total"] = Rational(-3) * dim_Y;
    return m;
}

Rational mixing_rate_sup(const Rational& rho_H, long long p_pi) {
    if (p_pi < 2) throw std::invalid_argument("mixing_rate_sup: p(pi) must be >= 2");
    long long k = (p_pi + 1) / 2;  // ceil(p_pi / 2)
    return rho_H / Rational(k);
}

std::pair<long long, long long> sobolev_thresholds(const PipelineConstants& consts) {
    long long l0_prime = consts.dims.dim_K / 2 + 1;
    long long wavefront = consts.dims.dim_X / 2 + 2;
    return {l0_prime, std::max(l0_prime, wavefront)};
}

DeltaReport delta_chain(const GroupSpec& spec, const PpiTable& table, Rational p_cusp) {
    auto consts = PipelineConstants::make(spec, p_cusp);
    auto p_pi = table.lookup(spec);
    if (!p_pi) throw std::domain_error("delta_chain: p(pi) not tabulated for this spec");

    DeltaReport rep;
    rep.spec = spec;
    rep.dims = consts.dims;
    rep.p_pi = *p_pi;
    rep.p_cusp = consts.p_cusp;
    rep.rho_H_value = rho_H(spec);
    rep.delta0_prime_sup = mixing_rate_sup(rep.rho_H_value, rep.p_pi);
    std::tie(rep.l0_prime, rep.l0) = sobolev_thresholds(consts);
    rep.C_l0 = C_l(Rational(rep.l0), consts);
    rep.d_l0 = d_l(Rational(rep.l0), consts);

    // delta0 comes from balancing the cusp term eps^{p_cusp p'} against the
    // mixing term eps^{-C_l} e^{-delta0' t}, then sending p' to its open
    // limit 1.  At the limit the balanced decay is
    // p_cusp * delta0' / (p_cusp + C_l).
    const Rational p_prime = consts.p_prime_limit;
    AsymptoticMonomial cusp_term(consts.p_cusp * p_prime, Rational(0));
    AsymptoticMonomial mixing_term(-rep.C_l0, rep.delta0_prime_sup);
    Rational s = balance(cusp_term, mixing_term);
    rep.delta0_sup = s * consts.p_cusp * p_prime;

    rep.delta_section5 = rep.delta0_sup / rep.d_l0;
    rep.delta_eq22 = rep.delta0_sup / (rep.d_l0 + Rational(1));

    rep.open_interval_flags = {
        {"delta0_prime_sup", true}, {"delta0_sup", true},   {"delta_section5", true},
        {"delta_eq22", true},       {"p_prime_limit", true}, {"C_l0", false},
        {"d_l0", false},            {"p_cusp", false},
    };
    return rep;
}

}  // namespace slag
