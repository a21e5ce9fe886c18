#pragma once

#include <pgq/checked.hpp>
#include <pgq/rational.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace pgq
{
    enum class Status
    {
        pass,
        fail,
        not_applicable
    };

    auto to_string(Status s) -> std::string_view;

    /// Outcome of one feasibility condition. The witness is a short human-readable
    /// account of the numbers behind the verdict (quotient, remainder, compared sides).
    struct Verdict
    {
        std::string name;
        Status status = Status::not_applicable;
        std::string witness;

        [[nodiscard]] auto passed() const -> bool { return status == Status::pass; }
    };

    /// General strongly regular parameter quadruple (v, k, lambda, mu).
    struct SrgParams
    {
        Int v = 0, k = 0, lambda = 0, mu = 0;

        /// 0 <= lambda <= k-1, 1 <= mu <= k, k < v.
        [[nodiscard]] auto well_formed() const -> bool;

        /// k(k - lambda - 1) == (v - k - 1) mu.
        [[nodiscard]] auto counting_identity_holds() const -> bool;

        friend auto operator==(const SrgParams &, const SrgParams &) -> bool = default;
    };

    auto to_string(const SrgParams & p) -> std::string;

    /// The (s, t) pair of a generalized-quadrangle-shaped parameter set.
    /// s = 1 or t = 1 is accepted but flagged trivial (rook's graphs and K_{t+1,t+1}).
    class GQParams
    {
    public:
        GQParams(Int s, Int t);

        [[nodiscard]] auto s() const -> Int { return _s; }
        [[nodiscard]] auto t() const -> Int { return _t; }
        [[nodiscard]] auto trivial() const -> bool { return _s == 1 || _t == 1; }

        friend auto operator==(const GQParams &, const GQParams &) -> bool = default;

    private:
        Int _s, _t;
    };

    /// Nontrivial eigenvalues of an SRG and their (possibly non-integral) multiplicities.
    struct Spectrum
    {
        Int theta_pos = 0;
        Int theta_neg = 0;
        Rational mult_pos;
        Rational mult_neg;
    };

    /// ((s+1)(st+1), s(t+1), s-1, t+1), with checked arithmetic.
    auto derive_srg(const GQParams & p) -> SrgParams;

    /// Inverse of derive_srg: (lambda+1, mu-1) if it reproduces q exactly.
    auto identify_gq_form(const SrgParams & q) -> std::optional<GQParams>;

    /// Eigenvalues s-1 and -(t+1) with multiplicities from the trace conditions.
    auto spectrum_of(const GQParams & p) -> Spectrum;

    /// (s+t) | s(s+1)t(t+1): the positive-eigenvalue multiplicity is integral.
    auto multiplicity_integrality(const GQParams & p) -> Verdict;

    /// t <= s^2, the Krein consequence that holds for every graph with these parameters.
    auto krein_check(const GQParams & p) -> Verdict;

    /// s <= t^2, required of a genuine GQ(s,t) by duality. Failure means any such graph is pseudo.
    auto gq_possible(const GQParams & p) -> Verdict;
}
