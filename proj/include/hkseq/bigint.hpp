#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hkseq {

// Exact arbitrary-precision integer. Everything the library computes is a
// BigInt; overflow is impossible by construction.
using BigInt = mpz_class;

inline BigInt pow2(unsigned long m) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, m);
    return r;
}

// FNV-1a over the decimal representation; used to compare values across
// evaluation methods without shipping the full digits around.
inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::uint64_t value_digest(const BigInt& v) { return fnv1a(v.get_str()); }

}  // namespace hkseq
