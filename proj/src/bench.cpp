#include "hkseq/bench.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

#include "hkseq/analytic.hpp"
#include "hkseq/bigint.hpp"
#include "hkseq/poly_residue.hpp"

namespace hkseq {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

BenchRun run_bench(const FamilyParams& params, int s, std::vector<std::int64_t> m_list,
                   const std::vector<Method>& methods) {
    validate_index(params, s);
    if (m_list.empty()) throw std::invalid_argument("run_bench: empty m list");
    if (methods.empty()) throw std::invalid_argument("run_bench: empty method list");

    std::sort(m_list.begin(), m_list.end());
    m_list.erase(std::unique(m_list.begin(), m_list.end()), m_list.end());
    if (m_list.front() < 0) throw std::domain_error("run_bench: m must be nonnegative");
    for (Method method : methods) {
        if (method == Method::Float) analytic_check_range(m_list.back());
    }

    BenchRun run;
    for (Method method : methods) {
        if (method == Method::Recurrence) {
            // One walk; each checkpoint gets the cumulative time to reach it.
            const auto start = Clock::now();
            StateVector state = initial_state(params);
            for (std::int64_t m : m_list) {
                while (state.m < m) step_inplace(state);
                run.results.push_back(
                    {method, params, s, m, seconds_since(start),
                     value_digest(state.values[static_cast<std::size_t>(s - 1)])});
            }
            continue;
        }
        for (std::int64_t m : m_list) {
            const auto start = Clock::now();
            BigInt value;
            switch (method) {
                case Method::Binomial:   value = eval_binomial(params, s, m); break;
                case Method::Polynomial: value = eval_poly(params, s, m); break;
                case Method::Float:      value = eval_roots_of_unity(params, s, m).rounded; break;
                default:                 break;
            }
            run.results.push_back({method, params, s, m, seconds_since(start),
                                   value_digest(value)});
        }
    }

    std::map<std::int64_t, std::uint64_t> reference;
    for (const BenchResult& result : run.results) {
        auto [it, inserted] = reference.emplace(result.m, result.value_hash);
        if (!inserted && it->second != result.value_hash) run.hashes_agree = false;
    }
    return run;
}

}  // namespace hkseq
