#include <pgq/params.hpp>

namespace pgq
{
    namespace
    {
        auto require_nontrivial(const GQParams & p, const char * name) -> std::optional<Verdict>
        {
            if (p.s() >= 2 && p.t() >= 2)
                return std::nullopt;
            return Verdict{name, Status::not_applicable, "requires s, t >= 2"};
        }
    }

    auto to_string(Status s) -> std::string_view
    {
        switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::not_applicable: return "na";
        }
        return "na";
    }

    auto SrgParams::well_formed() const -> bool
    {
        return lambda >= 0 && lambda <= k - 1 && mu >= 1 && mu <= k && k < v;
    }

    auto SrgParams::counting_identity_holds() const -> bool
    {
        return checked_mul(k, checked_sub(checked_sub(k, lambda), 1)) == checked_mul(checked_sub(checked_sub(v, k), 1), mu);
    }

    auto to_string(const SrgParams & p) -> std::string
    {
        return "(" + std::to_string(p.v) + "," + std::to_string(p.k) + "," + std::to_string(p.lambda) + "," + std::to_string(p.mu) + ")";
    }

    GQParams::GQParams(Int s, Int t) : _s(s), _t(t)
    {
        if (s < 1 || t < 1)
            throw DomainError("GQ parameters need s >= 1 and t >= 1, got s=" + std::to_string(s) + " t=" + std::to_string(t));
    }

    auto derive_srg(const GQParams & p) -> SrgParams
    {
        Int s = p.s(), t = p.t();
        SrgParams q;
        q.v = checked_mul(checked_add(s, 1), checked_add(checked_mul(s, t), 1));
        q.k = checked_mul(s, checked_add(t, 1));
        q.lambda = s - 1;
        q.mu = checked_add(t, 1);
        return q;
    }

    auto identify_gq_form(const SrgParams & q) -> std::optional<GQParams>
    {
        if (! q.well_formed())
            throw DomainError("malformed SRG parameters " + to_string(q));
        Int s = q.lambda + 1, t = q.mu - 1;
        if (s < 1 || t < 1)
            return std::nullopt;
        try {
            if (derive_srg(GQParams{s, t}) == q)
                return GQParams{s, t};
        }
        catch (const OverflowError &) {
        }
        return std::nullopt;
    }

    auto spectrum_of(const GQParams & p) -> Spectrum
    {
        Int s = p.s(), t = p.t();
        Spectrum sp;
        sp.theta_pos = s - 1;
        sp.theta_neg = -(t + 1);
        // f = st(s+1)(t+1)/(s+t), g = v - 1 - f
        Int numerator = checked_mul(checked_mul(s, s + 1), checked_mul(t, t + 1));
        sp.mult_pos = Rational(numerator, checked_add(s, t));
        sp.mult_neg = Rational(checked_sub(derive_srg(p).v, 1)) - sp.mult_pos;
        return sp;
    }

    auto multiplicity_integrality(const GQParams & p) -> Verdict
    {
        if (auto na = require_nontrivial(p, "divisibility"))
            return *na;
        Int s = p.s(), t = p.t();
        Int divisor = checked_add(s, t);
        Int dividend = checked_mul(checked_mul(s, s + 1), checked_mul(t, t + 1));
        Int q = dividend / divisor, r = dividend % divisor;
        std::string base = std::to_string(dividend) + " = " + std::to_string(divisor) + "*" + std::to_string(q);
        if (r == 0)
            return {"divisibility", Status::pass, base};
        return {"divisibility", Status::fail, base + " + " + std::to_string(r)};
    }

    auto krein_check(const GQParams & p) -> Verdict
    {
        if (auto na = require_nontrivial(p, "krein"))
            return *na;
        Int s2 = checked_mul(p.s(), p.s());
        std::string w = "t=" + std::to_string(p.t()) + " s^2=" + std::to_string(s2);
        return {"krein", p.t() <= s2 ? Status::pass : Status::fail, w};
    }

    auto gq_possible(const GQParams & p) -> Verdict
    {
        if (auto na = require_nontrivial(p, "gq-duality"))
            return *na;
        Int t2 = checked_mul(p.t(), p.t());
        std::string w = "s=" + std::to_string(p.s()) + " t^2=" + std::to_string(t2);
        return {"gq-duality", p.s() <= t2 ? Status::pass : Status::fail, w};
    }
}
