#pragma once

#include <pgq/bounds.hpp>
#include <pgq/params.hpp>

#include <iosfwd>
#include <string_view>
#include <vector>

namespace pgq
{
    enum class Classification
    {
        gq_possible,
        pgq_possible_only,
        ruled_out_by_new_bound,
        ruled_out_by_prior_conditions,
        trivial
    };

    auto to_string(Classification c) -> std::string_view;

    /// Every condition applied to one (s, t), in fixed order:
    /// consistency, trivial, krein, divisibility, neumaier, gq-duality, four-term-bound.
    struct FeasibilityReport
    {
        GQParams params;
        SrgParams derived;
        std::vector<Verdict> verdicts;
        Classification classification = Classification::trivial;

        [[nodiscard]] auto survives() const -> bool
        {
            return classification != Classification::ruled_out_by_new_bound &&
                classification != Classification::ruled_out_by_prior_conditions;
        }
    };

    struct ScanRange
    {
        Int t_min = 2;
        Int t_max = 2;

        ScanRange(Int lo, Int hi);
    };

    auto check_one(const GQParams & p) -> FeasibilityReport;

    /// check_one with the optimal four-term bound for p.t() already computed.
    auto check_one(const GQParams & p, const OptimalBound & bound) -> FeasibilityReport;

    /// Parameter sets with s in [2, neumaier_bound(t)] that pass every prior condition but
    /// exceed the four-term bound, ordered by t then s. Parallel over whole t-blocks.
    auto scan(const ScanRange & range) -> std::vector<FeasibilityReport>;

    /// Single-threaded reference for scan.
    auto scan_serial(const ScanRange & range) -> std::vector<FeasibilityReport>;

    /// CSV with header "s,t,v,k,lambda,mu", one row per report, "\n" line endings.
    void emit_csv(std::ostream & out, const std::vector<FeasibilityReport> & reports);

    /// JSON array of full reports.
    void emit_json(std::ostream & out, const std::vector<FeasibilityReport> & reports);
}
