#include <pgq/bounds.hpp>

#include <algorithm>
#include <optional>
#include <vector>

namespace pgq
{
    namespace
    {
        void require_t(Int t, const char * what)
        {
            if (t < 2)
                throw DomainError(std::string(what) + " requires t >= 2, got " + std::to_string(t));
        }

        void require_sweepable(Int t)
        {
            require_t(t, "optimal_four_term_bound");
            if (t > max_sweep_t)
                throw DomainError("exhaustive sweep supports t <= " + std::to_string(max_sweep_t) + ", got " + std::to_string(t));
        }

        /// Best choice for a fixed theta, scanning beta upwards so the first minimiser wins.
        auto best_for_theta(Int t, Int theta) -> std::pair<Rational, BoundChoice>
        {
            std::optional<std::pair<Rational, BoundChoice>> best;
            for (Int beta = 2; beta <= t + 1; ++beta) {
                BoundChoice c{theta, beta};
                auto r = four_term_bound(t, c);
                if (! best || r.bound < best->first)
                    best = std::pair{r.bound, c};
            }
            return *best;
        }

        auto finish(const Rational & bound, const BoundChoice & c) -> OptimalBound
        {
            return OptimalBound{bound, bound.floor(), c};
        }
    }

    auto neumaier_bound(Int t) -> Int
    {
        require_t(t, "neumaier_bound");
        // t(t+1) is even
        return checked_mul(checked_mul(t, checked_add(t, 1)) / 2, checked_add(t, 2));
    }

    auto claw_inequality_check(const SrgParams & q, Int r) -> Verdict
    {
        if (r < 2)
            throw DomainError("claw size must be at least 2");
        Int lhs = checked_mul(q.mu - 1, choose2(r));
        Int rhs = checked_sub(checked_mul(r, q.lambda + 1), q.k);
        std::string w = "(mu-1)C(r,2)=" + std::to_string(lhs) + " r(lambda+1)-k=" + std::to_string(rhs);
        return {"claw-inequality", lhs >= rhs ? Status::pass : Status::fail, w};
    }

    auto four_term_bound(Int t, const BoundChoice & c) -> BoundResult
    {
        require_t(t, "four_term_bound");
        if (! c.valid_for(t))
            throw DomainError("invalid (theta, beta) = (" + std::to_string(c.theta) + ", " + std::to_string(c.beta) +
                ") for t = " + std::to_string(t));

        Int beta_pairs = choose2(c.beta);
        BoundResult r;
        r.terms[0] = Rational(checked_mul(t, choose2(checked_add(c.theta, 1))), c.theta - t);
        r.terms[1] = Rational(checked_mul(t, checked_sub(checked_mul(2, c.theta), 1)));
        r.terms[2] = Rational(checked_mul(beta_pairs, t));
        Int t1 = checked_add(t, 1);
        r.terms[3] = Rational(checked_mul(checked_mul(t1, t1), c.theta), beta_pairs);
        r.bound = *std::max_element(r.terms.begin(), r.terms.end());
        return r;
    }

    auto closed_form_bound(Int t) -> Int
    {
        require_t(t, "closed_form_bound");
        // floor(8t/3 + 1) = floor((8t + 3)/3)
        return checked_mul(t, checked_add(checked_mul(8, t), 3) / 3);
    }

    auto closed_form_witness(Int t) -> BoundChoice
    {
        require_t(t, "closed_form_witness");
        return BoundChoice{checked_add(checked_mul(4, t), 3) / 3, ceil_sqrt(checked_mul(4, t))};
    }

    auto optimal_four_term_bound(Int t) -> OptimalBound
    {
        require_sweepable(t);
        Int first = t + 2, last = theta_cap(t);
        std::vector<std::pair<Rational, BoundChoice>> per_theta(static_cast<std::size_t>(last - first + 1));

#pragma omp parallel for schedule(dynamic)
        for (Int theta = first; theta <= last; ++theta)
            per_theta[static_cast<std::size_t>(theta - first)] = best_for_theta(t, theta);

        // merge in theta order so ties resolve to the smallest theta
        auto best = per_theta.front();
        for (const auto & candidate : per_theta)
            if (candidate.first < best.first)
                best = candidate;
        return finish(best.first, best.second);
    }

    auto optimal_four_term_bound_serial(Int t) -> OptimalBound
    {
        require_sweepable(t);
        std::optional<std::pair<Rational, BoundChoice>> best;
        for (Int theta = t + 2; theta <= theta_cap(t); ++theta)
            for (Int beta = 2; beta <= t + 1; ++beta) {
                auto r = four_term_bound(t, {theta, beta});
                if (! best || r.bound < best->first)
                    best = std::pair{r.bound, BoundChoice{theta, beta}};
            }
        return finish(best->first, best->second);
    }

    auto pgq_ruled_out(const GQParams & p) -> RuledOutReport
    {
        if (p.trivial())
            throw DomainError("pgq_ruled_out requires s, t >= 2");
        RuledOutReport r;
        r.pgq_bound = optimal_four_term_bound(p.t());
        r.gq_possible = gq_possible(p).passed();
        r.pgq_possible = Rational(p.s()) <= r.pgq_bound.bound;
        r.ruled_out = ! r.gq_possible && ! r.pgq_possible;
        return r;
    }
}
