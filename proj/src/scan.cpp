#include <pgq/scan.hpp>

#include <json.hpp>

#include <optional>
#include <ostream>

namespace pgq
{
    namespace
    {
        auto consistency(const SrgParams & q) -> Verdict
        {
            Int lhs = checked_mul(q.k, q.k - q.lambda - 1);
            Int rhs = checked_mul(q.v - q.k - 1, q.mu);
            return {"consistency", lhs == rhs ? Status::pass : Status::fail,
                "k(k-lambda-1)=" + std::to_string(lhs) + " (v-k-1)mu=" + std::to_string(rhs)};
        }

        auto neumaier(const GQParams & p) -> Verdict
        {
            if (p.trivial())
                return {"neumaier", Status::not_applicable, "requires s, t >= 2"};
            Int b = neumaier_bound(p.t());
            return {"neumaier", p.s() <= b ? Status::pass : Status::fail,
                "s=" + std::to_string(p.s()) + " bound=" + std::to_string(b)};
        }

        auto four_term(const GQParams & p, const std::optional<OptimalBound> & bound) -> Verdict
        {
            if (p.trivial() || ! bound)
                return {"four-term-bound", Status::not_applicable, "requires s, t >= 2"};
            std::string w = "s=" + std::to_string(p.s()) + " bound=" + bound->bound.to_string() + " at theta=" +
                std::to_string(bound->argmin.theta) + " beta=" + std::to_string(bound->argmin.beta);
            return {"four-term-bound", Rational(p.s()) <= bound->bound ? Status::pass : Status::fail, w};
        }

        auto build(const GQParams & p, const std::optional<OptimalBound> & bound) -> FeasibilityReport
        {
            FeasibilityReport r{p, derive_srg(p), {}, Classification::trivial};
            r.verdicts.reserve(7);
            r.verdicts.push_back(consistency(r.derived));
            r.verdicts.push_back({"trivial", p.trivial() ? Status::fail : Status::pass,
                p.trivial() ? "s = 1 or t = 1" : "s, t >= 2"});
            r.verdicts.push_back(krein_check(p));
            r.verdicts.push_back(multiplicity_integrality(p));
            r.verdicts.push_back(neumaier(p));
            r.verdicts.push_back(gq_possible(p));
            r.verdicts.push_back(four_term(p, bound));

            const auto & v = r.verdicts;
            if (p.trivial())
                r.classification = Classification::trivial;
            else if (! v[0].passed() || ! v[2].passed() || ! v[3].passed() || ! v[4].passed())
                r.classification = Classification::ruled_out_by_prior_conditions;
            else if (v[5].passed())
                r.classification = Classification::gq_possible;
            else if (v[6].passed())
                r.classification = Classification::pgq_possible_only;
            else
                r.classification = Classification::ruled_out_by_new_bound;
            return r;
        }

        auto scan_block(Int t) -> std::vector<FeasibilityReport>
        {
            std::vector<FeasibilityReport> rows;
            auto bound = optimal_four_term_bound_serial(t);
            Int cap = neumaier_bound(t);
            for (Int s = 2; s <= cap; ++s) {
                auto r = build(GQParams{s, t}, bound);
                if (r.classification == Classification::ruled_out_by_new_bound)
                    rows.push_back(std::move(r));
            }
            return rows;
        }
    }

    auto to_string(Classification c) -> std::string_view
    {
        switch (c) {
        case Classification::gq_possible: return "gq-possible";
        case Classification::pgq_possible_only: return "pgq-possible-only";
        case Classification::ruled_out_by_new_bound: return "ruled-out-by-new-bound";
        case Classification::ruled_out_by_prior_conditions: return "ruled-out-by-prior-conditions";
        case Classification::trivial: return "trivial";
        }
        return "trivial";
    }

    ScanRange::ScanRange(Int lo, Int hi) : t_min(lo), t_max(hi)
    {
        if (lo < 2 || hi < lo)
            throw DomainError("scan range needs 2 <= t_min <= t_max, got [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }

    auto check_one(const GQParams & p) -> FeasibilityReport
    {
        derive_srg(p); // overflow surfaces before the sweep
        if (p.trivial())
            return build(p, std::nullopt);
        return build(p, optimal_four_term_bound(p.t()));
    }

    auto check_one(const GQParams & p, const OptimalBound & bound) -> FeasibilityReport
    {
        return build(p, bound);
    }

    auto scan(const ScanRange & range) -> std::vector<FeasibilityReport>
    {
        auto blocks = static_cast<std::size_t>(range.t_max - range.t_min + 1);
        std::vector<std::vector<FeasibilityReport>> per_t(blocks);

        // exceptions must not escape an OpenMP region; carry the first one out by hand
        std::vector<std::exception_ptr> errors(blocks);
#pragma omp parallel for schedule(dynamic, 1)
        for (std::size_t i = 0; i < blocks; ++i) {
            try {
                per_t[i] = scan_block(range.t_min + static_cast<Int>(i));
            }
            catch (...) {
                errors[i] = std::current_exception();
            }
        }
        for (auto & e : errors)
            if (e)
                std::rethrow_exception(e);

        std::vector<FeasibilityReport> out;
        for (auto & block : per_t)
            for (auto & r : block)
                out.push_back(std::move(r));
        return out;
    }

    auto scan_serial(const ScanRange & range) -> std::vector<FeasibilityReport>
    {
        std::vector<FeasibilityReport> out;
        for (Int t = range.t_min; t <= range.t_max; ++t)
            for (auto & r : scan_block(t))
                out.push_back(std::move(r));
        return out;
    }

    void emit_csv(std::ostream & out, const std::vector<FeasibilityReport> & reports)
    {
        out << "s,t,v,k,lambda,mu\n";
        for (const auto & r : reports)
            out << r.params.s() << ',' << r.params.t() << ',' << r.derived.v << ',' << r.derived.k << ','
                << r.derived.lambda << ',' << r.derived.mu << '\n';
    }

    void emit_json(std::ostream & out, const std::vector<FeasibilityReport> & reports)
    {
        auto arr = nlohmann::ordered_json::array();
        for (const auto & r : reports) {
            auto verdicts = nlohmann::ordered_json::array();
            for (const auto & v : r.verdicts)
                verdicts.push_back({{"name", v.name}, {"verdict", std::string(to_string(v.status))}, {"witness", v.witness}});
            arr.push_back({{"s", r.params.s()}, {"t", r.params.t()}, {"v", r.derived.v}, {"k", r.derived.k},
                {"lambda", r.derived.lambda}, {"mu", r.derived.mu}, {"verdicts", verdicts},
                {"classification", std::string(to_string(r.classification))}});
        }
        out << arr.dump(2) << '\n';
    }
}
