#include "cli.hpp"

#include <pgq/bounds.hpp>
#include <pgq/graph.hpp>
#include <pgq/incidence.hpp>
#include <pgq/scan.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

using json = nlohmann::ordered_json;

namespace pgq::cli
{
    namespace
    {
        struct Io
        {
            std::istream & in;
            std::ostream & out;
            std::ostream & err;
        };

        /// A semantic negative: message for stderr, exit 3.
        struct Negative
        {
            std::string message;
        };

        auto with_input(const std::string & path, Io & io, const std::function<void(std::istream &)> & f) -> void
        {
            if (path == "-") {
                f(io.in);
                return;
            }
            std::ifstream file(path);
            if (! file)
                throw ParseError("cannot open '" + path + "'");
            f(file);
        }

        /// Writes to --out when given, otherwise stdout.
        auto emit(const std::string & out_path, Io & io, const std::function<void(std::ostream &)> & f) -> void
        {
            if (out_path.empty()) {
                f(io.out);
                return;
            }
            std::ofstream file(out_path, std::ios::binary);
            if (! file)
                throw ParseError("cannot open '" + out_path + "' for writing");
            f(file);
            if (! file.flush())
                throw ParseError("write to '" + out_path + "' failed");
        }

        auto load_graph(const std::string & path, Io & io) -> Graph
        {
            std::optional<Graph> g;
            with_input(path, io, [&](std::istream & s) { g = read_pgqgraph(s); });
            return std::move(*g);
        }

        auto load_incidence(const std::string & path, Io & io) -> IncidenceStructure
        {
            std::optional<IncidenceStructure> inc;
            with_input(path, io, [&](std::istream & s) { inc = read_pgqinc(s); });
            return std::move(*inc);
        }

        auto report_json(const FeasibilityReport & r) -> json
        {
            std::ostringstream buf;
            emit_json(buf, {r});
            return json::parse(buf.str()).at(0);
        }

        /// (s, t) from the flags, or inferred from the graph's SRG parameters.
        auto resolve_params(const Graph & g, std::optional<Int> s, std::optional<Int> t) -> GQParams
        {
            if (s.has_value() != t.has_value())
                throw CLI::ValidationError("--s and --t must be given together");
            auto check = verify_srg(g);
            if (! check.params)
                throw Negative{"graph is not strongly regular: " + check.reason};
            if (s)
                return GQParams{*s, *t};
            auto p = identify_gq_form(*check.params);
            if (! p)
                throw Negative{"srg" + to_string(*check.params) + " is not of GQ parameter form"};
            return *p;
        }

        auto parse_error_code(const CLI::Error & e) -> int
        {
            return e.get_exit_code() == 0 ? ok : usage_error;
        }
    }

    auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        Io io{in, out, err};
        CLI::App app{"Feasibility checks for strongly regular graphs of generalized-quadrangle type", "pgq"};
        app.require_subcommand(1);

        std::string format = "csv", out_path, file;
        std::optional<Int> s_flag, t_flag, theta_flag, beta_flag, m_flag;
        Int t_min = 0, t_max = 0;

        auto * scan_cmd = app.add_subcommand("scan", "List parameter sets ruled out only by the four-term bound");
        scan_cmd->add_option("--t-min", t_min)->required();
        scan_cmd->add_option("--t-max", t_max)->required();
        scan_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
        scan_cmd->add_option("--out", out_path);

        auto * check_cmd = app.add_subcommand("check", "Run every condition on one (s, t)");
        check_cmd->add_option("--s", s_flag)->required();
        check_cmd->add_option("--t", t_flag)->required();
        check_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

        auto * bound_cmd = app.add_subcommand("bound", "Evaluate the bounds on s for one t");
        bound_cmd->add_option("--t", t_flag)->required();
        auto * theta_opt = bound_cmd->add_option("--theta", theta_flag);
        auto * beta_opt = bound_cmd->add_option("--beta", beta_flag);
        theta_opt->needs(beta_opt);
        beta_opt->needs(theta_opt);

        auto * graph_cmd = app.add_subcommand("graph", "Concrete graph checks");
        graph_cmd->require_subcommand(1);
        auto add_graph_sub = [&](const char * name, const char * help) {
            auto * c = graph_cmd->add_subcommand(name, help);
            c->add_option("file", file, "pgqgraph file, or - for stdin")->required();
            c->add_option("--s", s_flag);
            c->add_option("--t", t_flag);
            return c;
        };
        auto * graph_verify = add_graph_sub("verify", "Check strong regularity");
        auto * graph_claw = add_graph_sub("claw", "Claw numbers of every vertex");
        auto * graph_extract = add_graph_sub("extract-gq", "Rebuild the generalized quadrangle");
        graph_extract->add_option("--out", out_path);

        std::string kind;
        auto * gen_cmd = app.add_subcommand("gen", "Write a generator graph in pgqgraph format");
        gen_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"rook", "bipartite", "kneser", "w3", "shrikhande"}));
        gen_cmd->add_option("--m", m_flag);
        gen_cmd->add_option("--out", out_path);

        auto * inc_cmd = app.add_subcommand("inc", "Incidence structure checks");
        inc_cmd->require_subcommand(1);
        auto add_inc_sub = [&](const char * name, const char * help) {
            auto * c = inc_cmd->add_subcommand(name, help);
            c->add_option("file", file, "pgqinc file, or - for stdin")->required();
            c->add_option("--out", out_path);
            return c;
        };
        auto * inc_verify = add_inc_sub("verify", "Check the quadrangle axioms");
        auto * inc_dual = add_inc_sub("dual", "Swap points and lines");
        auto * inc_collinearity = add_inc_sub("collinearity", "Collinearity graph in pgqgraph format");

        std::vector<std::string> argv_rev(args.rbegin(), args.rend());
        try {
            app.parse(argv_rev);
        }
        catch (const CLI::ParseError & e) {
            std::ostringstream o, e2;
            int code = app.exit(e, o, e2);
            err << o.str() << e2.str();
            return code == 0 ? ok : usage_error;
        }

        try {
            if (scan_cmd->parsed()) {
                auto rows = scan(ScanRange{t_min, t_max});
                emit(out_path, io, [&](std::ostream & o) { format == "json" ? emit_json(o, rows) : emit_csv(o, rows); });
                err << rows.size() << " parameter sets ruled out by the four-term bound for t in [" << t_min << ", " << t_max << "]\n";
                return ok;
            }

            if (check_cmd->parsed()) {
                auto r = check_one(GQParams{*s_flag, *t_flag});
                if (format == "json")
                    out << json::array({report_json(r)}).dump(2) << '\n';
                else
                    out << "s,t,v,k,lambda,mu,classification\n"
                        << r.params.s() << ',' << r.params.t() << ',' << r.derived.v << ',' << r.derived.k << ',' << r.derived.lambda
                        << ',' << r.derived.mu << ',' << to_string(r.classification) << '\n';
                for (const auto & v : r.verdicts)
                    err << v.name << ": " << to_string(v.status) << " (" << v.witness << ")\n";
                return r.survives() ? ok : negative;
            }

            if (bound_cmd->parsed()) {
                Int t = *t_flag;
                auto opt = optimal_four_term_bound(t);
                json j;
                j["t"] = t;
                j["closed_form"] = closed_form_bound(t);
                j["optimal"] = {{"bound", opt.bound.to_string()}, {"decimal", opt.bound.to_decimal()}, {"threshold", opt.threshold},
                    {"theta", opt.argmin.theta}, {"beta", opt.argmin.beta}};
                j["neumaier"] = neumaier_bound(t);
                if (theta_flag) {
                    auto r = four_term_bound(t, BoundChoice{*theta_flag, *beta_flag});
                    auto terms = json::array();
                    for (std::size_t i = 0; i < r.terms.size(); ++i)
                        terms.push_back({{"source", std::string(BoundResult::sources[i])}, {"value", r.terms[i].to_string()},
                            {"decimal", r.terms[i].to_decimal()}});
                    j["choice"] = {{"theta", *theta_flag}, {"beta", *beta_flag}, {"terms", terms}, {"bound", r.bound.to_string()}};
                }
                out << j.dump(2) << '\n';
                return ok;
            }

            if (graph_verify->parsed()) {
                auto g = load_graph(file, io);
                auto check = verify_srg(g);
                json j;
                j["srg"] = check.params.has_value();
                if (check.params) {
                    j["v"] = check.params->v;
                    j["k"] = check.params->k;
                    j["lambda"] = check.params->lambda;
                    j["mu"] = check.params->mu;
                    if (auto p = identify_gq_form(*check.params))
                        j["gq_form"] = {{"s", p->s()}, {"t", p->t()}};
                }
                else {
                    j["reason"] = check.reason;
                    if (check.violation)
                        j["pair"] = {check.violation->first, check.violation->second};
                }
                if (s_flag && t_flag && check.params && ! (*check.params == derive_srg(GQParams{*s_flag, *t_flag}))) {
                    j["matches_st"] = false;
                    out << j.dump(2) << '\n';
                    return negative;
                }
                out << j.dump(2) << '\n';
                return check.params ? ok : negative;
            }

            if (graph_claw->parsed()) {
                auto g = load_graph(file, io);
                json j;
                std::optional<GQParams> p;
                if (s_flag || t_flag)
                    p = resolve_params(g, s_flag, t_flag);
                else if (auto check = verify_srg(g); check.params)
                    p = identify_gq_form(*check.params);

                if (p) {
                    auto c = claw_lower_bound_check(g, *p);
                    j["claw_numbers"] = c.claw_numbers;
                    json hist = json::object();
                    for (auto [claw, count] : c.histogram)
                        hist[std::to_string(claw)] = count;
                    j["histogram"] = hist;
                    j["s"] = p->s();
                    j["t"] = p->t();
                    j["min"] = c.minimum;
                    j["lower_bound_holds"] = c.pass;
                    j["all_equal_t_plus_1"] = c.histogram.size() == 1 && c.histogram.begin()->first == p->t() + 1;
                    out << j.dump(2) << '\n';
                    return c.pass ? ok : negative;
                }
                auto claws = claw_numbers(g);
                json hist = json::object();
                std::map<int, int> h;
                for (int c : claws)
                    ++h[c];
                for (auto [claw, count] : h)
                    hist[std::to_string(claw)] = count;
                j["claw_numbers"] = claws;
                j["histogram"] = hist;
                out << j.dump(2) << '\n';
                return ok;
            }

            if (graph_extract->parsed()) {
                auto g = load_graph(file, io);
                auto p = resolve_params(g, s_flag, t_flag);
                auto r = extract_gq(g, p);
                if (! r.gq)
                    throw Negative{r.reason};
                emit(out_path, io, [&](std::ostream & o) { write_pgqinc(o, *r.gq); });
                err << "extracted GQ(" << p.s() << "," << p.t() << ") with " << r.gq->lines().size() << " lines\n";
                return ok;
            }

            if (gen_cmd->parsed()) {
                auto need_m = [&]() -> int {
                    if (! m_flag)
                        throw CLI::ValidationError("gen " + kind + " requires --m");
                    if (*m_flag < 2 || *m_flag > 2000)
                        throw DomainError("--m must be in [2, 2000]");
                    return static_cast<int>(*m_flag);
                };
                Graph g;
                if (kind == "rook")
                    g = gen_rook(need_m());
                else if (kind == "bipartite")
                    g = gen_complete_bipartite(need_m());
                else if (kind == "kneser")
                    g = gen_kneser_6_2();
                else if (kind == "w3")
                    g = gen_symplectic_w3();
                else
                    g = gen_shrikhande();
                emit(out_path, io, [&](std::ostream & o) { write_pgqgraph(o, g); });
                return ok;
            }

            if (inc_verify->parsed() || inc_dual->parsed() || inc_collinearity->parsed()) {
                auto inc = load_incidence(file, io);
                auto axioms = verify_axioms(inc);
                if (inc_verify->parsed()) {
                    json j;
                    j["pass"] = axioms.pass;
                    j["points"] = inc.points();
                    j["lines"] = inc.lines().size();
                    j["s"] = inc.s();
                    j["t"] = inc.t();
                    if (! axioms.pass) {
                        j["axiom"] = axioms.axiom;
                        j["point"] = axioms.point;
                        j["line"] = axioms.line;
                        j["reason"] = axioms.reason;
                    }
                    out << j.dump(2) << '\n';
                    return axioms.pass ? ok : negative;
                }
                if (! axioms.pass)
                    throw Negative{"axiom (" + axioms.axiom + ") fails: " + axioms.reason};
                if (inc_dual->parsed()) {
                    auto d = dual(inc);
                    emit(out_path, io, [&](std::ostream & o) { write_pgqinc(o, d); });
                }
                else {
                    auto g = collinearity_graph(inc);
                    emit(out_path, io, [&](std::ostream & o) { write_pgqgraph(o, g); });
                }
                return ok;
            }
        }
        catch (const Negative & n) {
            err << n.message << '\n';
            return negative;
        }
        catch (const CLI::Error & e) {
            err << e.what() << '\n';
            return parse_error_code(e);
        }
        catch (const ParseError & e) {
            err << e.what() << '\n';
            return input_error;
        }
        catch (const OverflowError & e) {
            err << e.what() << '\n';
            return input_error;
        }
        catch (const DomainError & e) {
            err << e.what() << '\n';
            return input_error;
        }
        return usage_error;
    }
}
