#include "hkseq/family.hpp"

#include <stdexcept>

namespace hkseq {

void validate(const FamilyParams& params) {
    if (params.order < 1) {
        throw std::invalid_argument("family order must be >= 1, got " +
                                    std::to_string(params.order));
    }
}

void validate_index(const FamilyParams& params, int s) {
    validate(params);
    if (s < 1 || s > params.order) {
        throw std::out_of_range("index s = " + std::to_string(s) + " outside 1.." +
                                std::to_string(params.order));
    }
}

SignedIndex extend_index(const FamilyParams& params, std::int64_t raw_s) {
    validate(params);
    const std::int64_t n = params.order;
    // raw_s = q*n + canonical with canonical in 1..n.
    const std::int64_t canonical = ((raw_s - 1) % n + n) % n + 1;
    const std::int64_t q = (raw_s - canonical) / n;
    int sign = +1;
    if (params.family == Family::Trigonometric && q % 2 != 0) sign = -1;
    return SignedIndex{static_cast<int>(canonical), sign};
}

}  // namespace hkseq
