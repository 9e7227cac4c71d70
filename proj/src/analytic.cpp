#include "hkseq/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hkseq/mp_complex.hpp"

namespace hkseq {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

mpfr_prec_t precision_for(std::int64_t m) {
    // Terms reach ~2^m; keep ~64 guard bits past full cancellation.
    return static_cast<mpfr_prec_t>(std::max<std::int64_t>(256, m + 64));
}

FloatEval finish(const mp::Real& re, const mp::Real& im) {
    FloatEval out;
    out.value = re.to_double();
    out.imag_residual = im.abs_to_double();
    out.rounded = re.round_to_integer();
    return out;
}

}  // namespace

RootOfUnityBasis make_basis(int order) {
    validate(FamilyParams{Family::Hyperbolic, order});
    RootOfUnityBasis basis;
    basis.order = order;
    basis.omega = std::polar(1.0, kTwoPi / order);
    basis.mu = std::polar(1.0, kTwoPi / (2.0 * order));
    return basis;
}

void analytic_check_range(std::int64_t m) {
    if (m < 0) throw std::domain_error("step count m must be nonnegative");
    if (m > kMaxFloatStep) {
        throw std::domain_error("m = " + std::to_string(m) +
                                " exceeds the float evaluation range (max " +
                                std::to_string(kMaxFloatStep) + ")");
    }
}

FloatEval eval_roots_of_unity(const FamilyParams& params, int s, std::int64_t m) {
    validate_index(params, s);
    analytic_check_range(m);
    const int n = params.order;
    const bool hyperbolic = params.family == Family::Hyperbolic;
    const mpfr_prec_t prec = precision_for(m);

    mp::Complex sum(prec);
    for (int j = 1; j <= n; ++j) {
        // Root exp(i*pi*k/n): k = 2j gives omega^j, k = 2j-1 gives mu^{2j-1}.
        const std::int64_t k = hyperbolic ? 2 * j : 2 * j - 1;
        mp::Complex base = mp::unit(prec, k, n);
        mpfr_add_ui(base.re.get(), base.re.get(), 1, MPFR_RNDN);
        mp::Complex term = mp::pow_ui(base, static_cast<std::uint64_t>(m));
        term = mp::mul(term, mp::unit(prec, (1 - s) * k, n));
        mp::add_inplace(sum, term);
    }
    mpfr_div_ui(sum.re.get(), sum.re.get(), static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_div_ui(sum.im.get(), sum.im.get(), static_cast<unsigned long>(n), MPFR_RNDN);
    return finish(sum.re, sum.im);
}

FloatEval eval_k5_formula(int s, std::int64_t m) {
    if (s < 1 || s > 5) throw std::out_of_range("eval_k5_formula: s must be in 1..5");
    if (m == 0) throw std::domain_error("eval_k5_formula: the closed form holds for m >= 1 only");
    analytic_check_range(m);
    const mpfr_prec_t prec = precision_for(m);
    const std::int64_t shift = m - 2 * (s - 1);

    mp::Real phi(prec);  // (1 + sqrt 5) / 2
    mpfr_sqrt_ui(phi.get(), 5, MPFR_RNDN);
    mpfr_add_ui(phi.get(), phi.get(), 1, MPFR_RNDN);
    mpfr_div_ui(phi.get(), phi.get(), 2, MPFR_RNDN);

    mp::Real growth(prec);  // (phi + 2)^{m/2} as sqrt(phi+2)^m
    mpfr_add_ui(growth.get(), phi.get(), 2, MPFR_RNDN);
    mpfr_sqrt(growth.get(), growth.get(), MPFR_RNDN);
    mpfr_pow_ui(growth.get(), growth.get(), static_cast<unsigned long>(m), MPFR_RNDN);

    mp::Real decay(prec);  // (phi - 1)^m
    mpfr_sub_ui(decay.get(), phi.get(), 1, MPFR_RNDN);
    mpfr_pow_ui(decay.get(), decay.get(), static_cast<unsigned long>(m), MPFR_RNDN);

    mp::Real pi(prec);
    mpfr_const_pi(pi.get(), MPFR_RNDN);

    mp::Real cos_main(prec);  // cos(pi * shift / 10)
    mpfr_mul_si(cos_main.get(), pi.get(), shift, MPFR_RNDN);
    mpfr_div_ui(cos_main.get(), cos_main.get(), 10, MPFR_RNDN);
    mpfr_cos(cos_main.get(), cos_main.get(), MPFR_RNDN);

    mp::Real cos_triple(prec);  // cos(3 * pi * shift / 10)
    mpfr_mul_si(cos_triple.get(), pi.get(), 3 * shift, MPFR_RNDN);
    mpfr_div_ui(cos_triple.get(), cos_triple.get(), 10, MPFR_RNDN);
    mpfr_cos(cos_triple.get(), cos_triple.get(), MPFR_RNDN);

    mp::Real value(prec);
    mpfr_mul(value.get(), decay.get(), cos_triple.get(), MPFR_RNDN);
    mpfr_add(value.get(), value.get(), cos_main.get(), MPFR_RNDN);
    mpfr_mul(value.get(), value.get(), growth.get(), MPFR_RNDN);
    mpfr_mul_ui(value.get(), value.get(), 2, MPFR_RNDN);
    mpfr_div_ui(value.get(), value.get(), 5, MPFR_RNDN);

    mp::Real zero(prec);
    return finish(value, zero);
}

bool k5_zero_class(int s, std::int64_t m) {
    if (s < 1 || s > 5) throw std::out_of_range("k5_zero_class: s must be in 1..5");
    if (m < 0) throw std::domain_error("k5_zero_class: m must be nonnegative");
    switch (s) {
        case 1: return m % 10 == 5;
        case 2: return m == 0 || m % 10 == 7;
        case 3: return m == 0 || m == 1 || m % 10 == 9;
        case 4: return m == 0 || m == 2 || m % 10 == 1;
        default: return m == 0 || m == 1 || m == 2 || m % 10 == 3;
    }
}

}  // namespace hkseq
