#include "hkseq/poly_residue.hpp"

#include <stdexcept>

namespace hkseq {

namespace {

void validate_ring(int order, int epsilon) {
    if (order < 1) throw std::invalid_argument("ring order must be >= 1");
    if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
}

}  // namespace

PolyResidue residue_one(int order, int epsilon) {
    validate_ring(order, epsilon);
    PolyResidue p{order, epsilon, std::vector<BigInt>(static_cast<std::size_t>(order))};
    p.coeffs[0] = 1;
    return p;
}

PolyResidue residue_binomial_base(int order, int epsilon) {
    PolyResidue p = residue_one(order, epsilon);
    if (order >= 2) {
        p.coeffs[1] = 1;
    } else {
        p.coeffs[0] += epsilon;  // x == eps in the order-1 ring
    }
    return p;
}

PolyResidue residue_mul(const PolyResidue& a, const PolyResidue& b) {
    if (a.order != b.order || a.epsilon != b.epsilon) {
        throw std::invalid_argument("residue_mul: mismatched ring parameters");
    }
    const std::size_t n = static_cast<std::size_t>(a.order);

    std::vector<BigInt> full(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (mpz_sgn(a.coeffs[i].get_mpz_t()) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            mpz_addmul(full[i + j].get_mpz_t(), a.coeffs[i].get_mpz_t(),
                       b.coeffs[j].get_mpz_t());
        }
    }

    PolyResidue out{a.order, a.epsilon, std::vector<BigInt>(n)};
    for (std::size_t k = 0; k < n; ++k) out.coeffs[k] = std::move(full[k]);
    for (std::size_t k = n; k < 2 * n - 1; ++k) {
        if (a.epsilon > 0) {
            out.coeffs[k - n] += full[k];
        } else {
            out.coeffs[k - n] -= full[k];
        }
    }
    return out;
}

PolyResidue binom_power_mod(int order, int epsilon, std::int64_t m, std::size_t* mul_count) {
    validate_ring(order, epsilon);
    if (m < 0) throw std::domain_error("exponent m must be nonnegative");

    std::size_t count = 0;
    PolyResidue result = residue_one(order, epsilon);
    if (m > 0) {
        const PolyResidue base = residue_binomial_base(order, epsilon);
        result = base;
        int top = 63;
        while (((m >> top) & 1) == 0) --top;
        for (int bit = top - 1; bit >= 0; --bit) {
            result = residue_mul(result, result);
            ++count;
            if ((m >> bit) & 1) {
                result = residue_mul(result, base);
                ++count;
            }
        }
    }
    if (mul_count) *mul_count = count;
    return result;
}

BigInt eval_poly(const FamilyParams& params, int s, std::int64_t m) {
    validate_index(params, s);
    PolyResidue p = binom_power_mod(params.order, wrap_sign(params), m);
    return std::move(p.coeffs[static_cast<std::size_t>(s - 1)]);
}

}  // namespace hkseq
