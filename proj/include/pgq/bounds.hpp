#pragma once

#include <pgq/params.hpp>
#include <pgq/rational.hpp>

#include <array>
#include <string_view>

namespace pgq
{
    /// A choice of the two free integers in the four-term bound.
    /// Valid for a given t when theta >= t+2 and 2 <= beta <= t+1.
    struct BoundChoice
    {
        Int theta = 0;
        Int beta = 0;

        [[nodiscard]] auto valid_for(Int t) const -> bool { return theta >= t + 2 && beta >= 2 && beta <= t + 1; }

        friend auto operator==(const BoundChoice &, const BoundChoice &) -> bool = default;
    };

    /// The four candidate upper bounds on s and their maximum.
    ///   term[0]  t/(theta-t) * C(theta+1, 2)   a vertex with a (theta+1)-claw
    ///   term[1]  t(2 theta - 1)                 a vertex with a (t+2)-claw, all claws <= theta
    ///   term[2]  C(beta, 2) t                   beta-clique census, first case
    ///   term[3]  (t+1)^2 theta / C(beta, 2)     beta-clique census, second case
    /// term[1] and term[2] are always integers.
    struct BoundResult
    {
        std::array<Rational, 4> terms;
        Rational bound;

        static constexpr std::array<std::string_view, 4> sources = {
            "large-claw", "bounded-claw", "clique-census-a", "clique-census-b"};
    };

    /// s <= t(t+1)(t+2)/2, the classical claw bound.
    auto neumaier_bound(Int t) -> Int;

    /// Claw inequality for distance-regular graphs: an r-claw can exist only if
    /// (mu - 1) C(r, 2) >= r(lambda + 1) - k. Pass means an r-claw is not excluded.
    auto claw_inequality_check(const SrgParams & q, Int r) -> Verdict;

    /// The four terms for one (theta, beta). Throws DomainError if the choice is invalid for t.
    auto four_term_bound(Int t, const BoundChoice & c) -> BoundResult;

    /// t * floor(8t/3 + 1).
    auto closed_form_bound(Int t) -> Int;

    /// The explicit choice theta = floor(4t/3 + 1), beta = ceil(2 sqrt t) that attains
    /// closed_form_bound for t >= 3. beta is computed with an integer square root.
    auto closed_form_witness(Int t) -> BoundChoice;

    struct OptimalBound
    {
        Rational bound;      ///< min over the sweep of the four-term maximum
        Int threshold = 0;   ///< floor(bound); s is ruled out iff s > threshold
        BoundChoice argmin;  ///< smallest theta, then smallest beta, among minimisers
    };

    /// Largest theta worth sweeping. For theta > 4t, term[1] = t(2 theta - 1) >= t(8t + 1),
    /// while the optimum over theta <= 4t is at most closed_form_bound(t) <= t(8t + 3)/3 for t >= 3
    /// (and 14 for t = 2), so no larger theta can lower the maximum.
    inline auto theta_cap(Int t) -> Int { return 4 * t; }

    /// Largest t the exhaustive sweep accepts; its cost grows as 3t^2.
    inline constexpr Int max_sweep_t = 2000;

    /// Exhaustive minimisation of four_term_bound over theta in [t+2, 4t], beta in [2, t+1].
    /// OpenMP-parallel over theta; the result is independent of the schedule.
    /// Throws DomainError for t outside [2, max_sweep_t].
    auto optimal_four_term_bound(Int t) -> OptimalBound;

    /// Single-threaded reference for optimal_four_term_bound.
    auto optimal_four_term_bound_serial(Int t) -> OptimalBound;

    struct RuledOutReport
    {
        bool ruled_out = false;      ///< neither a GQ nor a pseudo-GQ can exist
        bool gq_possible = false;    ///< s <= t^2
        bool pgq_possible = false;   ///< s <= optimal four-term bound
        OptimalBound pgq_bound;
    };

    /// No SRG with these parameters exists iff s > t^2 and s > the optimal four-term bound.
    auto pgq_ruled_out(const GQParams & p) -> RuledOutReport;
}
