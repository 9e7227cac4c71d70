#include "hkseq/mp_complex.hpp"

namespace hkseq::mp {

Complex unit(mpfr_prec_t prec, std::int64_t num, std::int64_t den) {
    Real angle(prec);
    mpfr_const_pi(angle.get(), MPFR_RNDN);
    mpfr_mul_si(angle.get(), angle.get(), num, MPFR_RNDN);
    mpfr_div_si(angle.get(), angle.get(), den, MPFR_RNDN);
    Complex z(prec);
    mpfr_sin_cos(z.im.get(), z.re.get(), angle.get(), MPFR_RNDN);
    return z;
}

Complex mul(const Complex& a, const Complex& b) {
    const mpfr_prec_t prec = mpfr_get_prec(a.re.get());
    Complex out(prec);
    // (a.re*b.re - a.im*b.im) + i(a.re*b.im + a.im*b.re)
    mpfr_fmms(out.re.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_fmma(out.im.get(), a.re.get(), b.im.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    return out;
}

void add_inplace(Complex& a, const Complex& b) {
    mpfr_add(a.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(a.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}

Complex pow_ui(const Complex& base, std::uint64_t e) {
    const mpfr_prec_t prec = mpfr_get_prec(base.re.get());
    Complex result(prec);
    mpfr_set_ui(result.re.get(), 1, MPFR_RNDN);
    if (e == 0) return result;
    result = base;
    int top = 63;
    while (((e >> top) & 1ULL) == 0) --top;
    for (int bit = top - 1; bit >= 0; --bit) {
        result = mul(result, result);
        if ((e >> bit) & 1ULL) result = mul(result, base);
    }
    return result;
}

}  // namespace hkseq::mp
