// Acceptance suite: every release-gating check, one pass/fail line each.
// Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "hkseq/analytic.hpp"
#include "hkseq/bfile.hpp"
#include "hkseq/identities.hpp"
#include "hkseq/poly_residue.hpp"
#include "hkseq/sequence.hpp"
#include "hkseq/verify.hpp"
#include "test_support.hpp"

using namespace hkseq;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& message) {
        ok = false;
        if (detail.empty()) detail = message;  // keep the first failure
    }
};

int g_failures = 0;

template <typename Body>
void criterion(int number, const char* label, double time_limit_s, Body&& body) {
    Outcome outcome;
    const auto start = Clock::now();
    try {
        body(outcome);
    } catch (const std::exception& e) {
        outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (time_limit_s > 0 && seconds >= time_limit_s) {
        outcome.fail("runtime " + std::to_string(seconds) + " s exceeds " +
                     std::to_string(time_limit_s) + " s");
    }
    std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", outcome.ok ? "PASS" : "FAIL", number,
                label, seconds, outcome.detail.empty() ? "" : " -- ",
                outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.ok) ++g_failures;
}

constexpr Family kFamilies[] = {Family::Hyperbolic, Family::Trigonometric};

double to_double(const BigInt& v) { return v.get_d(); }

}  // namespace

int main() {
    std::printf("acceptance suite, %d thread(s)\n", max_threads());

    criterion(1, "three exact routes agree on families x n<=8 x s x m<=300", 30.0,
              [](Outcome& out) {
                  const VerifyReport report = verify_cross(8, 300, ExecMode::Parallel);
                  if (!report.ok()) {
                      out.fail("cross grid failures: " + std::to_string(report.failures));
                      return;
                  }
                  if (report.checks != 2 * 36 * 301) {
                      out.fail("unexpected grid size " + std::to_string(report.checks));
                      return;
                  }
                  // point API spot checks on top of the grid driver
                  for (Family family : kFamilies) {
                      for (int n = 1; n <= 8; ++n) {
                          const FamilyParams params{family, n};
                          for (int s = 1; s <= n; ++s) {
                              for (std::int64_t m : {0LL, 1LL, 137LL, 300LL}) {
                                  const BigInt r = eval_recurrence(params, s, m);
                                  if (r != eval_binomial(params, s, m) ||
                                      r != eval_poly(params, s, m)) {
                                      out.fail("spot check failed");
                                      return;
                                  }
                              }
                          }
                      }
                  }
              });

    criterion(2, "complex closed forms within 1e-9 on n<=8 x s x m<=200", 0, [](Outcome& out) {
        for (Family family : kFamilies) {
            for (int n = 1; n <= 8; ++n) {
                const FamilyParams params{family, n};
                for (int s = 1; s <= n; ++s) {
                    const SequenceRecord exact =
                        sequence(params, s, 200, Method::Recurrence, ExecMode::Serial);
                    for (std::int64_t m = 0; m <= 200; ++m) {
                        const FloatEval fe = eval_roots_of_unity(params, s, m);
                        const double scale =
                            std::max(1.0, std::abs(to_double(exact.values[m])));
                        if (std::abs(fe.value - to_double(exact.values[m])) / scale > 1e-9 ||
                            fe.imag_residual / scale > 1e-9) {
                            out.fail(std::string(1, family_letter(family)) + " n=" +
                                     std::to_string(n) + " s=" + std::to_string(s) +
                                     " m=" + std::to_string(m));
                            return;
                        }
                    }
                }
            }
        }
    });

    criterion(3, "addition formulas on families x n<=6 x i x m,s<=40", 60.0, [](Outcome& out) {
        const VerifyReport report = verify_addition(6, 40, ExecMode::Parallel);
        if (!report.ok()) out.fail("failures: " + std::to_string(report.failures));
        if (report.checks != 2 * 21 * 41 * 41) {
            out.fail("unexpected grid size " + std::to_string(report.checks));
        }
    });

    criterion(4, "circulant determinants vanish; alternating sums vanish; eigen cross-check", 0,
              [](Outcome& out) {
                  const VerifyReport dets = verify_circulant(8, 25, ExecMode::Parallel);
                  if (!dets.ok()) out.fail("determinant failures: " + std::to_string(dets.failures));
                  const VerifyReport alts = verify_alternating(8, 200, ExecMode::Parallel);
                  if (!alts.ok()) out.fail("alternating failures: " + std::to_string(alts.failures));
                  for (Family family : kFamilies) {
                      for (int n = 1; n <= 6; ++n) {
                          for (std::int64_t m = 0; m <= 10; ++m) {
                              const CirculantSpec spec = build_circulant({family, n}, m);
                              const BigInt det = circulant_det(spec);
                              const testing::EigenProduct eigen = testing::eigen_det_product(spec);
                              if (eigen.real_distance_to(det) > 1e-3 ||
                                  eigen.imag_magnitude() > 1e-3) {
                                  out.fail("eigen product off at n=" + std::to_string(n) +
                                           " m=" + std::to_string(m));
                                  return;
                              }
                          }
                      }
                  }
              });

    criterion(5, "order-5 golden-ratio formulas (m<=120) and zero pattern (m<=500)", 0,
              [](Outcome& out) {
                  const FamilyParams k5{Family::Trigonometric, 5};
                  for (int s = 1; s <= 5; ++s) {
                      const SequenceRecord exact =
                          sequence(k5, s, 120, Method::Recurrence, ExecMode::Serial);
                      for (std::int64_t m = 1; m <= 120; ++m) {
                          const FloatEval fe = eval_k5_formula(s, m);
                          const double scale = std::max(1.0, std::abs(to_double(exact.values[m])));
                          if (fe.rounded != exact.values[m] ||
                              std::abs(fe.value - to_double(exact.values[m])) / scale > 1e-8) {
                              out.fail("formula off at s=" + std::to_string(s) +
                                       " m=" + std::to_string(m));
                              return;
                          }
                      }
                  }
                  const VerifyReport zeros = verify_zeros(500, ExecMode::Parallel);
                  if (!zeros.ok()) {
                      out.fail("zero-pattern discrepancies: " + std::to_string(zeros.failures));
                  }
              });

    criterion(6, "OEIS concordance for the seven fixture sequences", 0, [](Outcome& out) {
        struct Fixture {
            const char* file;
            Family family;
            int order;
            int s;
        };
        const Fixture fixtures[] = {
            {"b009545.txt", Family::Trigonometric, 2, 2},
            {"b024493.txt", Family::Hyperbolic, 3, 1},
            {"b289306.txt", Family::Trigonometric, 5, 1},
            {"b289321.txt", Family::Trigonometric, 5, 2},
            {"b289387.txt", Family::Trigonometric, 5, 3},
            {"b289388.txt", Family::Trigonometric, 5, 4},
            {"b289389.txt", Family::Trigonometric, 5, 5},
        };
        for (const Fixture& f : fixtures) {
            const BFile bfile = load_bfile(std::string(HKSEQ_TEST_DATA_DIR) + "/" + f.file);
            if (bfile.entries.size() < 50) {
                out.fail(std::string(f.file) + ": fewer than 50 terms");
                return;
            }
            const OeisReport report = oeis_check({f.family, f.order}, f.s, bfile, 0);
            if (!report.full_match() || report.matches != bfile.entries.size()) {
                out.fail(std::string(f.file) + ": mismatch at m=" +
                         std::to_string(report.mismatch_m));
                return;
            }
        }
    });

    criterion(7, "residue-ring power: m=10^6 under 10 s, exact at 10^4, minimal multiplies",
              0, [](Outcome& out) {
                  const FamilyParams h8{Family::Hyperbolic, 8};
                  const auto start = Clock::now();
                  const BigInt big = eval_poly(h8, 1, 1000000);
                  const double seconds =
                      std::chrono::duration<double>(Clock::now() - start).count();
                  if (seconds >= 10.0) {
                      out.fail("m=10^6 took " + std::to_string(seconds) + " s");
                  }
                  if (big <= 0) out.fail("implausible m=10^6 value");

                  if (eval_poly(h8, 1, 10000) != eval_recurrence(h8, 1, 10000)) {
                      out.fail("m=10^4 mismatch vs recurrence");
                  }

                  for (std::int64_t m : {1000LL, 10000LL, 100000LL, 1000000LL}) {
                      std::size_t count = 0;
                      binom_power_mod(8, 1, m, &count);
                      std::int64_t log2m = 0;
                      while ((1LL << (log2m + 1)) <= m) ++log2m;
                      if (count > 2 * static_cast<std::size_t>(log2m) + 1) {
                          out.fail("multiplication count " + std::to_string(count) +
                                   " over bound at m=" + std::to_string(m));
                      }
                  }
              });

    criterion(8, "randomized property suite (>= 1000 cases)", 10.0, [](Outcome& out) {
        std::mt19937 rng(20260810);
        const auto pick_family = [&] {
            return (rng() & 1) ? Family::Hyperbolic : Family::Trigonometric;
        };

        // row sums: sum_s H_s(m,n) = 2^m
        for (int trial = 0; trial < 400; ++trial) {
            const int n = std::uniform_int_distribution<int>(1, 8)(rng);
            const std::int64_t m = std::uniform_int_distribution<std::int64_t>(0, 300)(rng);
            const StateVector state = state_at({Family::Hyperbolic, n}, m);
            BigInt total = 0;
            for (const BigInt& v : state.values) total += v;
            if (total != pow2(static_cast<unsigned long>(m))) {
                out.fail("row sum failed at n=" + std::to_string(n) + " m=" + std::to_string(m));
                return;
            }
        }

        // truncation: F_s(m,n) = C(m, s-1) while the second term is out of reach
        for (int trial = 0; trial < 300; ++trial) {
            const int n = std::uniform_int_distribution<int>(1, 8)(rng);
            const int s = std::uniform_int_distribution<int>(1, n)(rng);
            const std::int64_t m = std::uniform_int_distribution<std::int64_t>(0, n + s - 2)(rng);
            BigInt expect;
            mpz_bin_uiui(expect.get_mpz_t(), static_cast<unsigned long>(m),
                         static_cast<unsigned long>(s - 1));
            if (eval_binomial({pick_family(), n}, s, m) != expect) {
                out.fail("truncation failed");
                return;
            }
        }

        // index extension: literal table and (anti-)periodicity
        for (int trial = 0; trial < 200; ++trial) {
            const int n = std::uniform_int_distribution<int>(1, 8)(rng);
            const Family family = pick_family();
            const FamilyParams params{family, n};
            const int s = std::uniform_int_distribution<int>(1, n)(rng);
            const SignedIndex table = extend_index(params, -(s - 1));
            if (table.canonical != n - s + 1 ||
                table.sign != (family == Family::Hyperbolic ? +1 : -1)) {
                out.fail("extension table failed");
                return;
            }
            const std::int64_t raw = std::uniform_int_distribution<std::int64_t>(-50, 50)(rng);
            const SignedIndex a = extend_index(params, raw);
            const SignedIndex b = extend_index(params, raw + n);
            if (a.canonical != b.canonical || b.sign != wrap_sign(family) * a.sign) {
                out.fail("extension periodicity failed");
                return;
            }
        }

        // wrap equation through the extension: delta F_1(m) = sign(0) F_canon(0)(m)
        for (int trial = 0; trial < 100; ++trial) {
            const int n = std::uniform_int_distribution<int>(1, 8)(rng);
            const FamilyParams params{pick_family(), n};
            const std::int64_t m = std::uniform_int_distribution<std::int64_t>(0, 120)(rng);
            const SignedIndex zero = extend_index(params, 0);
            const StateVector now = state_at(params, m);
            const StateVector next = step(now);
            if (next.values[0] - now.values[0] !=
                zero.sign * now.values[static_cast<std::size_t>(zero.canonical - 1)]) {
                out.fail("wrap equation failed");
                return;
            }
        }

        // b-file round trip
        for (int trial = 0; trial < 150; ++trial) {
            const int n = std::uniform_int_distribution<int>(1, 8)(rng);
            const int s = std::uniform_int_distribution<int>(1, n)(rng);
            const std::int64_t max_m = std::uniform_int_distribution<std::int64_t>(0, 50)(rng);
            const SequenceRecord record =
                sequence({pick_family(), n}, s, max_m, Method::Recurrence, ExecMode::Serial);
            const BFile parsed = parse_bfile(export_bfile(record));
            if (parsed.entries.size() != record.values.size()) {
                out.fail("round trip size changed");
                return;
            }
            for (std::size_t m = 0; m < record.values.size(); ++m) {
                if (parsed.entries[m].first != static_cast<std::int64_t>(m) ||
                    parsed.entries[m].second != record.values[m]) {
                    out.fail("round trip value changed");
                    return;
                }
            }
        }
    });

    std::printf("%s: %d criterion(s) failed\n", g_failures == 0 ? "ACCEPTED" : "REJECTED",
                g_failures);
    return g_failures;
}
