#include "hkseq/verify.hpp"

#include <functional>
#include <stdexcept>

#include "hkseq/analytic.hpp"
#include "hkseq/identities.hpp"
#include "hkseq/poly_residue.hpp"
#include "hkseq/sequence.hpp"

namespace hkseq {

namespace {

constexpr Family kFamilies[] = {Family::Hyperbolic, Family::Trigonometric};

struct CellOutput {
    std::vector<std::string> lines;
    std::size_t checks = 0;
    std::size_t failures = 0;
};

// Runs `cell` over 0..count-1 and stitches the outputs back in index order,
// so the report is identical in both modes.
VerifyReport run_cells(std::string target, std::size_t count, ExecMode mode,
                       const std::function<CellOutput(std::size_t)>& cell) {
    std::vector<CellOutput> outputs(count);
    if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
            outputs[static_cast<std::size_t>(i)] = cell(static_cast<std::size_t>(i));
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) outputs[i] = cell(i);
    }

    VerifyReport report;
    report.target = std::move(target);
    for (CellOutput& out : outputs) {
        report.checks += out.checks;
        report.failures += out.failures;
        for (std::string& line : out.lines) report.lines.push_back(std::move(line));
    }
    return report;
}

void check_grid_args(int max_order, std::int64_t max_m) {
    if (max_order < 1) throw std::invalid_argument("max order must be >= 1");
    if (max_m < 0) throw std::invalid_argument("max m must be >= 0");
}

std::string cell_prefix(const FamilyParams& params) {
    return std::string(1, family_letter(params.family)) + ' ' +
           std::to_string(params.order) + ' ';
}

}  // namespace

VerifyReport verify_cross(int max_order, std::int64_t max_m, ExecMode mode) {
    check_grid_args(max_order, max_m);

    struct Cell {
        FamilyParams params;
        int s;
    };
    std::vector<Cell> cells;
    for (Family family : kFamilies) {
        for (int n = 1; n <= max_order; ++n) {
            for (int s = 1; s <= n; ++s) cells.push_back({FamilyParams{family, n}, s});
        }
    }

    return run_cells("cross", cells.size(), mode, [&](std::size_t idx) {
        const auto& [params, s] = cells[idx];
        CellOutput out;
        const SequenceRecord walked =
            sequence(params, s, max_m, Method::Recurrence, ExecMode::Serial);
        std::int64_t first_fail = -1;
        for (std::int64_t m = 0; m <= max_m; ++m) {
            ++out.checks;
            const BigInt& by_recurrence = walked.values[static_cast<std::size_t>(m)];
            const bool agree = by_recurrence == eval_binomial(params, s, m) &&
                               by_recurrence == eval_poly(params, s, m);
            if (!agree) {
                ++out.failures;
                if (first_fail < 0) first_fail = m;
            }
        }
        std::string line = cell_prefix(params) + std::to_string(s) + ' ' +
                           std::to_string(max_m) + ' ';
        line += first_fail < 0 ? "ok" : "fail m=" + std::to_string(first_fail);
        out.lines.push_back(std::move(line));
        return out;
    });
}

VerifyReport verify_addition(int max_order, std::int64_t max_ms, ExecMode mode) {
    check_grid_args(max_order, max_ms);

    struct Cell {
        FamilyParams params;
        int i;
    };
    std::vector<Cell> cells;
    for (Family family : kFamilies) {
        for (int n = 1; n <= max_order; ++n) {
            for (int i = 1; i <= n; ++i) cells.push_back({FamilyParams{family, n}, i});
        }
    }

    return run_cells("addition", cells.size(), mode, [&](std::size_t idx) {
        const auto& [params, i] = cells[idx];
        CellOutput out;
        std::int64_t fail_m = -1, fail_s = -1;
        for (std::int64_t m = 0; m <= max_ms; ++m) {
            for (std::int64_t s = 0; s <= max_ms; ++s) {
                ++out.checks;
                if (!check_addition(params, i, m, s)) {
                    ++out.failures;
                    if (fail_m < 0) {
                        fail_m = m;
                        fail_s = s;
                    }
                }
            }
        }
        std::string line = cell_prefix(params) + std::to_string(i) + ' ' +
                           std::to_string(max_ms) + ' ';
        line += fail_m < 0 ? "ok"
                           : "fail m=" + std::to_string(fail_m) + ",s=" + std::to_string(fail_s);
        out.lines.push_back(std::move(line));
        return out;
    });
}

VerifyReport verify_circulant(int max_order, std::int64_t max_m, ExecMode mode) {
    check_grid_args(max_order, max_m);

    struct Cell {
        FamilyParams params;
        std::int64_t m;
    };
    std::vector<Cell> cells;
    for (Family family : kFamilies) {
        for (int n = 1; n <= max_order; ++n) {
            for (std::int64_t m = 0; m <= max_m; ++m) cells.push_back({FamilyParams{family, n}, m});
        }
    }

    return run_cells("circulant", cells.size(), mode, [&](std::size_t idx) {
        const auto& [params, m] = cells[idx];
        CellOutput out;
        const BigInt det = circulant_det(build_circulant(params, m));
        std::string status = "recorded";
        if (det_vanishes_by_theory(params, m)) {
            ++out.checks;
            if (det == 0) {
                status = "ok";
            } else {
                status = "fail";
                ++out.failures;
            }
        }
        out.lines.push_back(cell_prefix(params) + std::to_string(m) + ' ' + det.get_str() +
                            ' ' + status);
        return out;
    });
}

VerifyReport verify_alternating(int max_order, std::int64_t max_m, ExecMode mode) {
    check_grid_args(max_order, max_m);

    std::vector<FamilyParams> cells;
    for (Family family : kFamilies) {
        for (int n = 1; n <= max_order; ++n) cells.push_back(FamilyParams{family, n});
    }

    return run_cells("alternating", cells.size(), mode, [&](std::size_t idx) {
        const FamilyParams params = cells[idx];
        CellOutput out;
        StateVector state = initial_state(params);
        for (std::int64_t m = 0; m <= max_m; ++m) {
            if (m > 0) step_inplace(state);
            BigInt sum = 0;
            for (int i = 0; i < params.order; ++i) {
                if (i % 2 == 0) {
                    sum += state.values[static_cast<std::size_t>(i)];
                } else {
                    sum -= state.values[static_cast<std::size_t>(i)];
                }
            }
            std::string status = "recorded";
            if (det_vanishes_by_theory(params, m)) {  // same hypothesis set
                ++out.checks;
                if (sum == 0) {
                    status = "ok";
                } else {
                    status = "fail";
                    ++out.failures;
                }
            }
            out.lines.push_back(cell_prefix(params) + std::to_string(m) + ' ' + sum.get_str() +
                                ' ' + status);
        }
        return out;
    });
}

VerifyReport verify_zeros(std::int64_t max_m, ExecMode mode) {
    check_grid_args(1, max_m);
    const FamilyParams params{Family::Trigonometric, 5};

    return run_cells("zeros", 5, mode, [&](std::size_t idx) {
        const int s = static_cast<int>(idx) + 1;
        CellOutput out;
        const SequenceRecord values =
            sequence(params, s, max_m, Method::Recurrence, ExecMode::Serial);
        for (std::int64_t m = 0; m <= max_m; ++m) {
            ++out.checks;
            const bool actual = values.values[static_cast<std::size_t>(m)] == 0;
            const bool predicted = k5_zero_class(s, m);
            if (actual != predicted) ++out.failures;
            std::string line = "K 5 " + std::to_string(s) + ' ' + std::to_string(m) + ' ';
            line += actual ? "zero " : "nonzero ";
            line += predicted ? "zero " : "nonzero ";
            line += actual == predicted ? "ok" : "fail";
            out.lines.push_back(std::move(line));
        }
        return out;
    });
}

}  // namespace hkseq
