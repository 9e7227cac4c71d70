#pragma once

#include <mpfr.h>

#include <cstdint>

#include "hkseq/bigint.hpp"

namespace hkseq::mp {

/**
 * @file mp_complex.hpp
 * @brief Minimal RAII wrappers around mpfr for the extended-precision float
 *        evaluations. Only the handful of operations the library needs;
 *        anything heavier should use a real multiprecision package.
 */

class Real {
public:
    explicit Real(mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(const Real& other) {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    Real(Real&& other) noexcept {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_swap(v_, other.v_);
    }
    Real& operator=(const Real& other) {
        if (this != &other) {
            mpfr_set_prec(v_, mpfr_get_prec(other.v_));
            mpfr_set(v_, other.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& other) noexcept {
        if (this != &other) mpfr_swap(v_, other.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    double abs_to_double() const {
        double d = mpfr_get_d(v_, MPFR_RNDN);
        return d < 0 ? -d : d;
    }
    BigInt round_to_integer() const {
        BigInt z;
        mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
        return z;
    }

private:
    mpfr_t v_;
};

struct Complex {
    Real re;
    Real im;

    explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
};

// exp(i * pi * num / den)
Complex unit(mpfr_prec_t prec, std::int64_t num, std::int64_t den);

Complex mul(const Complex& a, const Complex& b);
void add_inplace(Complex& a, const Complex& b);

// Binary powering; pow_ui(z, 0) is 1 even for z = 0.
Complex pow_ui(const Complex& base, std::uint64_t e);

}  // namespace hkseq::mp
