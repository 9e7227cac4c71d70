#include "hkseq/sequence.hpp"

#include <stdexcept>

#include "hkseq/analytic.hpp"
#include "hkseq/poly_residue.hpp"

namespace hkseq {

namespace {

void validate_step_count(std::int64_t m) {
    if (m < 0) throw std::domain_error("step count m must be nonnegative");
}

}  // namespace

StateVector initial_state(const FamilyParams& params) {
    validate(params);
    StateVector state{params, 0, std::vector<BigInt>(static_cast<std::size_t>(params.order))};
    state.values[0] = 1;
    return state;
}

void step_inplace(StateVector& state) {
    const int n = state.params.order;
    const BigInt old_last = state.values[static_cast<std::size_t>(n - 1)];  // y_n(m)
    // Descending so each y_i picks up the not-yet-updated y_{i-1}.
    for (int i = n - 1; i >= 1; --i) {
        state.values[static_cast<std::size_t>(i)] += state.values[static_cast<std::size_t>(i - 1)];
    }
    if (wrap_sign(state.params) > 0) {
        state.values[0] += old_last;
    } else {
        state.values[0] -= old_last;
    }
    ++state.m;
}

StateVector step(StateVector state) {
    step_inplace(state);
    return state;
}

StateVector state_at(const FamilyParams& params, std::int64_t m) {
    validate_step_count(m);
    StateVector state = initial_state(params);
    for (std::int64_t i = 0; i < m; ++i) step_inplace(state);
    return state;
}

BigInt eval_recurrence(const FamilyParams& params, int s, std::int64_t m) {
    validate_index(params, s);
    return state_at(params, m).values[static_cast<std::size_t>(s - 1)];
}

BigInt eval_binomial(const FamilyParams& params, int s, std::int64_t m) {
    validate_index(params, s);
    validate_step_count(m);
    const std::int64_t n = params.order;
    const bool alternate = params.family == Family::Trigonometric;
    const std::int64_t k0 = s - 1;

    BigInt acc = 0;
    BigInt c = 1;  // C(m, k) while k walks the row
    for (std::int64_t k = 0; k <= m; ++k) {
        if (k >= k0 && (k - k0) % n == 0) {
            if (alternate && ((k - k0) / n) % 2 != 0) {
                acc -= c;
            } else {
                acc += c;
            }
        }
        if (k < m) {
            c *= static_cast<unsigned long>(m - k);
            mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k + 1));
        }
    }
    return acc;
}

const char* method_name(Method method) {
    switch (method) {
        case Method::Recurrence: return "recurrence";
        case Method::Binomial:   return "binomial";
        case Method::Polynomial: return "polynomial";
        case Method::Float:      return "float";
    }
    return "?";
}

Method method_from_name(const std::string& name) {
    if (name == "recurrence") return Method::Recurrence;
    if (name == "binomial")   return Method::Binomial;
    if (name == "polynomial") return Method::Polynomial;
    if (name == "float")      return Method::Float;
    throw std::invalid_argument("unknown method '" + name + "'");
}

SequenceRecord sequence(const FamilyParams& params, int s, std::int64_t max_m,
                        Method method, ExecMode mode) {
    validate_index(params, s);
    validate_step_count(max_m);

    SequenceRecord record{params, s, std::vector<BigInt>(static_cast<std::size_t>(max_m + 1)),
                          method};

    if (method == Method::Recurrence) {
        // One walk; the other methods would cost M independent evaluations.
        StateVector state = initial_state(params);
        record.values[0] = state.values[static_cast<std::size_t>(s - 1)];
        for (std::int64_t m = 1; m <= max_m; ++m) {
            step_inplace(state);
            record.values[static_cast<std::size_t>(m)] =
                state.values[static_cast<std::size_t>(s - 1)];
        }
        return record;
    }

    if (method == Method::Float) analytic_check_range(max_m);

    const auto cell = [&](std::int64_t m) -> BigInt {
        switch (method) {
            case Method::Binomial:   return eval_binomial(params, s, m);
            case Method::Polynomial: return eval_poly(params, s, m);
            case Method::Float:      return eval_roots_of_unity(params, s, m).rounded;
            default:                 return BigInt(0);
        }
    };

    if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t m = 0; m <= max_m; ++m) {
            record.values[static_cast<std::size_t>(m)] = cell(m);
        }
    } else {
        for (std::int64_t m = 0; m <= max_m; ++m) {
            record.values[static_cast<std::size_t>(m)] = cell(m);
        }
    }
    return record;
}

}  // namespace hkseq
