#include "hkseq/identities.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "hkseq/sequence.hpp"

namespace hkseq {

bool check_addition(const FamilyParams& params, int i, std::int64_t m, std::int64_t s) {
    validate_index(params, i);
    if (m < 0 || s < 0) throw std::domain_error("addition formula needs m, s >= 0");
    const int n = params.order;

    const std::vector<BigInt> at_s = state_at(params, s).values;
    const std::vector<BigInt> at_m = state_at(params, m).values;
    const BigInt lhs = state_at(params, m + s).values[static_cast<std::size_t>(i - 1)];

    BigInt rhs = 0;
    for (int j = 1; j <= n; ++j) {
        const SignedIndex idx = extend_index(params, static_cast<std::int64_t>(i) - j + 1);
        const BigInt& factor = at_m[static_cast<std::size_t>(idx.canonical - 1)];
        if (idx.sign > 0) {
            mpz_addmul(rhs.get_mpz_t(), at_s[static_cast<std::size_t>(j - 1)].get_mpz_t(),
                       factor.get_mpz_t());
        } else {
            mpz_submul(rhs.get_mpz_t(), at_s[static_cast<std::size_t>(j - 1)].get_mpz_t(),
                       factor.get_mpz_t());
        }
    }
    return lhs == rhs;
}

BigInt alternating_sum(const FamilyParams& params, std::int64_t m) {
    const StateVector state = state_at(params, m);
    BigInt sum = 0;
    for (int i = 0; i < params.order; ++i) {
        if (i % 2 == 0) {
            sum += state.values[static_cast<std::size_t>(i)];
        } else {
            sum -= state.values[static_cast<std::size_t>(i)];
        }
    }
    return sum;
}

CirculantSpec build_circulant(const FamilyParams& params, std::int64_t m) {
    const StateVector state = state_at(params, m);
    CirculantSpec spec{params, m, state.values};
    for (int i = 1; i < params.order; i += 2) {
        spec.first_row[static_cast<std::size_t>(i)] = -spec.first_row[static_cast<std::size_t>(i)];
    }
    return spec;
}

std::vector<std::vector<BigInt>> materialize(const CirculantSpec& spec) {
    const std::size_t n = spec.first_row.size();
    std::vector<std::vector<BigInt>> mat(n, std::vector<BigInt>(n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            mat[r][c] = spec.first_row[(c + n - r) % n];
        }
    }
    return mat;
}

BigInt det_bareiss(std::vector<std::vector<BigInt>> mat) {
    const std::size_t n = mat.size();
    if (n == 0) return BigInt(1);
    for (const auto& row : mat) {
        if (row.size() != n) throw std::invalid_argument("det_bareiss: matrix not square");
    }

    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (mpz_sgn(mat[k][k].get_mpz_t()) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && mpz_sgn(mat[pivot][k].get_mpz_t()) == 0) ++pivot;
            if (pivot == n) return BigInt(0);  // zero column, singular
            std::swap(mat[k], mat[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // (M[i][j]*M[k][k] - M[i][k]*M[k][j]) / prev, division exact
                mat[i][j] *= mat[k][k];
                mpz_submul(mat[i][j].get_mpz_t(), mat[i][k].get_mpz_t(), mat[k][j].get_mpz_t());
                mpz_divexact(mat[i][j].get_mpz_t(), mat[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            mat[i][k] = 0;
        }
        prev = mat[k][k];
    }
    BigInt det = std::move(mat[n - 1][n - 1]);
    if (sign < 0) det = -det;
    return det;
}

BigInt circulant_det(const CirculantSpec& spec) { return det_bareiss(materialize(spec)); }

}  // namespace hkseq
