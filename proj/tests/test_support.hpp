#pragma once

// Test-only oracles, deliberately independent of the library's computation
// paths: a Laplace-expansion determinant (vs fraction-free elimination) and
// the circulant eigenvalue product (vs the exact integer determinant).

#include <cmath>
#include <cstdint>
#include <vector>

#include "hkseq/bigint.hpp"
#include "hkseq/identities.hpp"
#include "hkseq/mp_complex.hpp"

namespace hkseq::testing {

inline BigInt det_laplace(const std::vector<std::vector<BigInt>>& mat) {
    const std::size_t n = mat.size();
    if (n == 0) return BigInt(1);
    if (n == 1) return mat[0][0];
    BigInt det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (mpz_sgn(mat[0][c].get_mpz_t()) == 0) continue;
        std::vector<std::vector<BigInt>> minor(n - 1, std::vector<BigInt>(n - 1));
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t mc = 0;
            for (std::size_t cc = 0; cc < n; ++cc) {
                if (cc == c) continue;
                minor[r - 1][mc++] = mat[r][cc];
            }
        }
        const BigInt cofactor = mat[0][c] * det_laplace(minor);
        if (c % 2 == 0) {
            det += cofactor;
        } else {
            det -= cofactor;
        }
    }
    return det;
}

// prod_{t=0..n-1} sum_i first_row[i] * exp(2 pi i t i / n), evaluated in
// 256-bit complex arithmetic.
struct EigenProduct {
    mp::Real re;
    mp::Real im;

    EigenProduct() : re(256), im(256) {}

    double real_distance_to(const BigInt& target) const {
        mp::Real diff(mpfr_get_prec(re.get()));
        mpfr_sub_z(diff.get(), re.get(), target.get_mpz_t(), MPFR_RNDN);
        return diff.abs_to_double();
    }
    double imag_magnitude() const { return im.abs_to_double(); }
};

inline EigenProduct eigen_det_product(const CirculantSpec& spec) {
    constexpr mpfr_prec_t prec = 256;
    const int n = spec.params.order;

    mp::Complex product(prec);
    mpfr_set_ui(product.re.get(), 1, MPFR_RNDN);
    for (int t = 0; t < n; ++t) {
        mp::Complex factor(prec);
        for (int i = 0; i < n; ++i) {
            mp::Complex term = mp::unit(prec, 2LL * t * i, n);
            mpfr_mul_z(term.re.get(), term.re.get(), spec.first_row[static_cast<std::size_t>(i)].get_mpz_t(),
                       MPFR_RNDN);
            mpfr_mul_z(term.im.get(), term.im.get(), spec.first_row[static_cast<std::size_t>(i)].get_mpz_t(),
                       MPFR_RNDN);
            mp::add_inplace(factor, term);
        }
        product = mp::mul(product, factor);
    }

    EigenProduct out;
    out.re = product.re;
    out.im = product.im;
    return out;
}

}  // namespace hkseq::testing
