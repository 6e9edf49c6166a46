#pragma once

#include <map>
#include <optional>
#include <string>

#include "slag/lie.hpp"
#include "slag/rational.hpp"

namespace slag {

/// One big-O term  eps^a * e^{-b t} * V^g  (optionally tagged with the
/// Sobolev scale l of the norm it multiplies).  The exponent calculus
/// never touches the functions themselves, only these shadows.
struct AsymptoticMonomial {
    Rational eps_exp;    // exponent a of eps
    Rational decay_exp;  // exponent b in e^{-b t}
    Rational growth_exp; // exponent g of the volume/count variable (e^{+g t} growth)
    std::optional<Rational> sobolev_index;

    AsymptoticMonomial() = default;
    AsymptoticMonomial(Rational eps, Rational decay, Rational growth = Rational(0),
                       std::optional<Rational> sobolev = std::nullopt)
        : eps_exp(eps), decay_exp(decay), growth_exp(growth), sobolev_index(sobolev) {}

    /// Net exponential decay rate once eps is substituted as e^{-s t}.
    Rational decay_rate_at(const Rational& s) const {
        return s * eps_exp + decay_exp - growth_exp;
    }

    friend AsymptoticMonomial operator*(const AsymptoticMonomial& a, const AsymptoticMonomial& b);
};

/// True when a decays strictly slower than b (so a dominates the error)
/// under the substitution eps = e^{-s t}.
bool dominates(const AsymptoticMonomial& a, const AsymptoticMonomial& b, const Rational& s);

/// Solves for the rate s such that eps := e^{-s t} makes the two terms
/// decay at the same exponential rate.  Throws std::domain_error when the
/// eps-exponents coincide (no balancing possible) and std::range_error
/// when the solution is not positive (mis-ordered terms).
Rational balance(const AsymptoticMonomial& term_a, const AsymptoticMonomial& term_b);

/// Fixed inputs of the constant pipeline for one group.
struct PipelineConstants {
    GroupSpec spec;
    GroupDimensions dims;
    Rational p_cusp{1};        // cusp-excursion exponent; 1 in the (3,19) setting
    Rational p_prime_limit{1}; // open supremum of the thickening parameter p'
    Rational c1;               // dim G - dim K
    long long d = 0;           // dim K, the Sobolev order base

    static PipelineConstants make(const GroupSpec& spec, Rational p_cusp = Rational(1));
};

/// d_l = l + (dim G - dim K)/2.
Rational d_l(const Rational& l, const PipelineConstants& consts);

/// C_l = 2l + 4 dim Y + dim X / 2.
Rational C_l(const Rational& l, const PipelineConstants& consts);

/// The Sobolev-lemma threshold l > dim X / 2 behind C_l.
bool sobolev_lemma_applies(const Rational& l, const PipelineConstants& consts);

/// eps-exponents of the thickening data at Sobolev scale l:
/// rho, beta, tau, phi norms plus the covering cardinalities G_ball, F_total.
std::map<std::string, Rational> thickening_norm_exponents(const Rational& l,
                                                          const PipelineConstants& consts);

/// Supremum of admissible mixing rates: rho(H) / ceil(p_pi / 2).
/// The interval is open; callers subtract their own epsilon.
Rational mixing_rate_sup(const Rational& rho_H, long long p_pi);

/// (l0', l0) = (floor(dim K/2)+1, max{l0', floor(dim X/2)+2}).
std::pair<long long, long long> sobolev_thresholds(const PipelineConstants& consts);

/// Full output of the constant chain.  Every value is exact; constants
/// that are suprema of open intervals are flagged.
struct DeltaReport {
    GroupSpec spec;
    GroupDimensions dims;
    Rational rho_H_value;
    long long p_pi = 0;
    long long l0_prime = 0;
    long long l0 = 0;
    Rational delta0_prime_sup;
    Rational C_l0;
    Rational delta0_sup;
    Rational d_l0;
    Rational delta_section5;  // delta0 / d_{l0}; the headline value
    Rational delta_eq22;      // delta0 / (d_{l0} + 1)
    Rational p_cusp;
    std::map<std::string, bool> open_interval_flags;
};

/// Composes dimensions -> rho(H) -> mixing rate -> Sobolev thresholds ->
/// C_l -> delta0 -> d_l -> both delta variants.  Throws std::domain_error
/// when p(pi) is not tabulated for the spec.
DeltaReport delta_chain(const GroupSpec& spec, const PpiTable& table = PpiTable::builtin(),
                        Rational p_cusp = Rational(1));

}  // namespace slag
