#include <ferrodim/cli.hpp>
#include <ferrodim/constructions.hpp>
#include <ferrodim/dimensions.hpp>
#include <ferrodim/explorer.hpp>
#include <ferrodim/matrix_io.hpp>
#include <ferrodim/recognition.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace ferrodim;

namespace
{
    struct Options
    {
        std::string input;
        std::string inline_text;
        bool json = false;
        std::uint64_t seed = 0;
        std::uint64_t budget = 0;
        int max_n = 4;
        int samples = 1000;
        int fuzz = 10000;
        std::vector<std::string> checks;
        std::string report;
        std::string what;
    };

    class UsageError : public std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    auto read_input(const Options & o, std::istream & in) -> GraphValue
    {
        if (! o.inline_text.empty()) {
            std::string text = o.inline_text;
            std::replace(text.begin(), text.end(), ';', '\n');
            return parse_matrix_text(text);
        }
        if (o.input.empty())
            throw UsageError("no input: give a file, '-' for standard input, or --inline");
        if (o.input == "-")
            return parse_matrix_text(std::string(std::istreambuf_iterator<char>(in), {}));
        std::ifstream file(o.input);
        if (! file)
            throw UsageError("cannot open '" + o.input + "'");
        return parse_matrix_text(std::string(std::istreambuf_iterator<char>(file), {}));
    }

    template <typename T>
    auto expect(const GraphValue & v, const char * what) -> const T &
    {
        if (auto p = std::get_if<T>(&v))
            return *p;
        throw UsageError(std::string("this command needs a ") + what + " input");
    }

    auto as_digraph(const GraphValue & v) -> Digraph
    {
        if (auto g = std::get_if<ReflexiveGraph>(&v))
            return g->digraph();
        return expect<Digraph>(v, "digraph or graph");
    }

    auto yes_no(bool b) -> std::string { return b ? "yes" : "no"; }

    auto order_text(const std::vector<int> & order) -> std::string
    {
        std::string s;
        for (int v : order)
            s += vertex_name(v);
        return s;
    }

    auto recognize(const Options & o, std::istream & in, std::ostream & out) -> int
    {
        auto value = read_input(o, in);
        nlohmann::ordered_json j;

        if (auto b = std::get_if<Bigraph>(&value)) {
            auto w = is_ferrers_bigraph(*b);
            j["ferrers_bigraph"] = w.has_value();
            if (b->rows() * b->cols() <= max_interval_bigraph_entries)
                j["interval_bigraph"] = interval_bigraph_witness(*b).has_value();
            j["completion_interval"] = is_interval(hat(*b).graph).has_value();
        }
        else if (auto g = std::get_if<ReflexiveGraph>(&value)) {
            auto model = is_interval(*g);
            j["interval"] = model.has_value();
            if (model) {
                std::vector<std::string> intervals;
                for (int v = 0 ; v < model->size() ; ++v)
                    intervals.push_back(std::string(1, vertex_name(v)) + "=[" + std::to_string(model->intervals[v].left)
                            + "," + std::to_string(model->intervals[v].right) + "]");
                j["model"] = intervals;
            }
            if (g->size() <= max_quasi_linear_vertices) {
                auto order = quasi_linear_order(*g);
                j["quasi_linear_order"] = order ? nlohmann::ordered_json(order_text(*order)) : nlohmann::ordered_json(nullptr);
            }
            j["indifference"] = is_indifference(*g);
            j["complement_transitively_orientable"] = transitive_orientation(complement(g->digraph())).has_value();
        }
        else {
            const auto & d = std::get<Digraph>(value);
            auto w = is_ferrers(d);
            j["ferrers"] = w.has_value();
            if (w) {
                j["row_order"] = order_text(w->row_order);
                j["col_order"] = order_text(w->col_order);
            }
            else if (auto c = find_couple(d))
                j["couple"] = {entry_name(c->first), entry_name(c->second)};
            j["oriented"] = is_oriented(d);
            j["transitive"] = is_transitive(d);
            j["interval_order"] = is_interval_order(d);
        }

        if (o.json)
            out << j.dump(2) << "\n";
        else
            for (auto & [key, v] : j.items())
                out << key << ": " << (v.is_boolean() ? yes_no(v.get<bool>()) : v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        return cli::ok;
    }

    auto construct(const Options & o, std::istream & in, std::ostream & out) -> int
    {
        auto value = read_input(o, in);
        const auto & what = o.what;
        std::string text;
        if (what == "couple-graph")
            text = serialize(couple_graph(as_digraph(value)));
        else if (what == "j-digraph")
            text = serialize(j_digraph(as_digraph(value)));
        else if (what == "j-complement")
            text = serialize(j_digraph(complement(as_digraph(value))));
        else if (what == "skeleton")
            text = serialize(undirected_skeleton(j_digraph(complement(as_digraph(value)))));
        else if (what == "complement") {
            if (auto b = std::get_if<Bigraph>(&value))
                text = serialize(complement(*b));
            else
                text = serialize(complement(as_digraph(value)));
        }
        else if (what == "hat") {
            const auto & b = expect<Bigraph>(value, "bigraph");
            auto h = hat(b);
            text = "# X = " + order_text(members(h.cover.x)) + ", Y = " + order_text(members(h.cover.y)) + "\n" + serialize(h.graph);
        }
        else if (what == "ferrers-factor") {
            const auto & g = expect<ReflexiveGraph>(value, "graph");
            auto model = is_interval(g);
            if (! model)
                throw UsageError("graph is not an interval graph");
            text = serialize(ferrers_factor(*model));
        }
        else if (what == "two-clique-ferrers") {
            const auto & b = expect<Bigraph>(value, "bigraph");
            auto h = hat(b);
            auto e = two_clique_to_ferrers(h.graph, h.cover);
            text = "# rows " + order_text(e.x_order) + ", columns " + order_text(e.y_order) + "\n" + serialize(e.block);
        }
        else
            throw UsageError("unknown construction '" + what + "'");

        if (o.json) {
            nlohmann::ordered_json j;
            j["construction"] = what;
            j["matrix"] = text;
            out << j.dump(2) << "\n";
        }
        else
            out << text;
        return cli::ok;
    }

    auto print_certificate(std::ostream & out, const Options & o, const std::string & invariant, int value,
            const std::vector<std::string> & factors, bool verified, std::uint64_t nodes,
            nlohmann::ordered_json extra = nlohmann::ordered_json::object()) -> void
    {
        if (o.json) {
            auto j = certificate_json(invariant, value, factors, verified, nodes);
            for (auto & [k, v] : extra.items())
                j[k] = v;
            out << j.dump(2) << "\n";
            return;
        }
        out << invariant << " = " << value << "\n";
        out << "verified: " << yes_no(verified) << ", nodes: " << nodes << "\n";
        for (auto & [k, v] : extra.items())
            out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        for (std::size_t i = 0 ; i < factors.size() ; ++i)
            out << "# factor " << (i + 1) << "\n" << factors[i];
    }

    auto factor_texts(const CoverCertificate & cert) -> std::vector<std::string>
    {
        std::vector<std::string> texts;
        for (const auto & f : cert.factors)
            texts.push_back(cert.kind == FactorKind::interval ? serialize(ReflexiveGraph(f)) : serialize(f));
        return texts;
    }

    auto dim(const Options & o, std::istream & in, std::ostream & out) -> int
    {
        auto value = read_input(o, in);
        SolveOptions options{o.budget};
        const auto & what = o.what;

        if (what == "boxicity") {
            const auto & g = expect<ReflexiveGraph>(value, "graph");
            auto r = boxicity(g, options);
            print_certificate(out, o, "boxicity", r.boxicity, factor_texts(r.certificate),
                    verify_certificate(r.certificate, g.digraph()), r.nodes);
        }
        else if (what == "ferrers") {
            if (auto b = std::get_if<Bigraph>(&value)) {
                auto r = bigraph_ferrers_dimension(*b, options);
                std::vector<std::string> texts;
                for (const auto & f : r.factors)
                    texts.push_back(serialize(f));
                print_certificate(out, o, "ferrers_dimension", r.dimension, texts, true, r.nodes);
            }
            else {
                Digraph d = as_digraph(value);
                auto r = ferrers_dimension(d, options);
                print_certificate(out, o, "ferrers_dimension", r.dimension, factor_texts(r.certificate),
                        verify_certificate(r.certificate, d), r.nodes);
            }
        }
        else if (what == "total-cover") {
            Digraph d = as_digraph(value);
            auto r = total_covering_number(d, options);
            nlohmann::ordered_json extra;
            std::vector<std::string> sets;
            for (const auto & s : r.cover.subsets) {
                std::string names;
                for (int v : s)
                    names += (names.empty() ? "" : " ") + entry_name(r.j.arcs[v]);
                sets.push_back("{" + names + "}");
            }
            extra["total_subdigraphs"] = sets;
            print_certificate(out, o, "total_covering_number", r.number, factor_texts(r.certificate),
                    verify_certificate(r.certificate, d), r.nodes, extra);
        }
        else if (what == "chromatic") {
            auto h = couple_graph(as_digraph(value));
            auto r = chromatic_number(h, options);
            std::string colouring;
            for (int i = 0 ; i < h.size() ; ++i)
                colouring += (i ? " " : "") + entry_name(h.vertices[i]) + "=" + std::to_string(r.colouring[i]);
            nlohmann::ordered_json extra;
            extra["colouring"] = colouring;
            print_certificate(out, o, "chromatic_number", r.colours, {}, is_proper_colouring(h, r.colouring), r.nodes, extra);
        }
        else if (what == "symmetric-factor") {
            const auto & g = expect<ReflexiveGraph>(value, "graph");
            auto r = min_symmetric_factor_dimension(g, options);
            nlohmann::ordered_json extra;
            extra["candidates"] = r.candidates;
            print_certificate(out, o, "min_symmetric_factor_dimension", r.dimension, {serialize(r.witness)},
                    intersect({r.witness, transpose(r.witness)}) == g.digraph(), 0, extra);
        }
        else if (what == "interval-bigraph") {
            const auto & b = expect<Bigraph>(value, "bigraph");
            auto w = interval_bigraph_witness(b);
            std::vector<std::string> texts;
            if (w)
                texts = {serialize(w->first), serialize(w->second)};
            print_certificate(out, o, "interval_bigraph", w.has_value(), texts, true, 0);
        }
        else if (what == "at-most-2") {
            bool r = ferrers_dim_at_most_2(as_digraph(value));
            print_certificate(out, o, "ferrers_dim_at_most_2", r, {}, true, 0);
        }
        else
            throw UsageError("unknown invariant '" + what + "'");
        return cli::ok;
    }

    auto explore(const Options & o, std::ostream & out) -> int
    {
        CampaignConfig config;
        config.seed = o.seed;
        config.node_budget = o.budget;
        config.chi_exhaustive_n = o.max_n;
        config.random_samples = o.samples;
        config.fuzz_samples = o.fuzz;

        std::vector<std::string> ids;
        for (const auto & c : o.checks) {
            std::stringstream ss(c);
            std::string id;
            while (std::getline(ss, id, ','))
                if (! id.empty())
                    ids.push_back(id);
        }

        std::vector<CheckReport> reports;
        try {
            reports = run_campaign(ids, config);
        }
        catch (const std::invalid_argument & e) {
            throw UsageError(e.what());
        }

        std::string lines;
        for (const auto & r : reports)
            lines += to_json_line(r) + "\n";
        if (! o.report.empty()) {
            std::ofstream file(o.report);
            if (! file)
                throw UsageError("cannot write '" + o.report + "'");
            file << lines;
        }
        if (o.json)
            out << lines;
        else
            out << summary_table(reports);

        bool clean = std::all_of(reports.begin(), reports.end(), [] (const CheckReport & r) { return r.status == CheckStatus::pass; });
        return clean ? cli::ok : cli::check_failed;
    }

    auto verify_fixtures(const Options & o, std::ostream & out) -> int
    {
        auto results = fixtures::run_all();
        bool clean = true;
        if (o.json) {
            nlohmann::ordered_json j = nlohmann::ordered_json::array();
            for (const auto & r : results)
                j.push_back({{"fixture", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            out << j.dump(2) << "\n";
        }
        for (const auto & r : results) {
            clean = clean && r.pass;
            if (! o.json)
                out << (r.pass ? "PASS  " : "FAIL  ") << r.name << (r.pass || r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
        }
        return clean ? cli::ok : cli::check_failed;
    }
}

auto ferrodim::cli::run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int
{
    Options o;
    CLI::App app{"Boxicity, Ferrers dimension and friends for small graphs and digraphs", "ferrodim"};
    app.require_subcommand(1, 1);

    auto add_input = [&] (CLI::App * sub) {
        sub->add_option("input", o.input, "Matrix file, or - for standard input");
        sub->add_option("--inline", o.inline_text, "Matrix text with ';' between lines, e.g. \"digraph 2;10;01\"");
        sub->add_flag("--json", o.json, "JSON output");
    };

    auto recognize_cmd = app.add_subcommand("recognize", "Recognition tests for a digraph, graph or bigraph");
    add_input(recognize_cmd);

    auto construct_cmd = app.add_subcommand("construct", "Print a derived structure in matrix text form");
    construct_cmd->add_option("construction", o.what, "couple-graph | j-digraph | j-complement | skeleton | complement | hat | ferrers-factor | two-clique-ferrers")
        ->required();
    add_input(construct_cmd);

    auto dim_cmd = app.add_subcommand("dim", "Compute an invariant with a certificate");
    dim_cmd->add_option("invariant", o.what, "boxicity | ferrers | total-cover | chromatic | symmetric-factor | interval-bigraph | at-most-2")
        ->required();
    add_input(dim_cmd);
    dim_cmd->add_option("--budget", o.budget, "Search node budget, 0 for none");

    auto explore_cmd = app.add_subcommand("explore", "Run the verification campaign");
    explore_cmd->add_option("--check", o.checks, "Comma-separated check ids")->delimiter(',');
    explore_cmd->add_option("--seed", o.seed, "Seed for the random phases");
    explore_cmd->add_option("--budget", o.budget, "Search node budget per solve, 0 for none");
    explore_cmd->add_option("--max-n", o.max_n, "Largest exhaustive size for the chi search")->check(CLI::Range(1, 4));
    explore_cmd->add_option("--samples", o.samples, "Random digraphs per size in random phases")->check(CLI::NonNegativeNumber);
    explore_cmd->add_option("--fuzz", o.fuzz, "Random inputs for certificate fuzzing")->check(CLI::NonNegativeNumber);
    explore_cmd->add_option("--report", o.report, "Write JSON lines to this file");
    explore_cmd->add_flag("--json", o.json, "JSON lines on standard output instead of the table");

    auto verify_cmd = app.add_subcommand("verify-paper", "Run the fixed regression fixtures");
    verify_cmd->add_flag("--json", o.json, "JSON output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (*recognize_cmd)
            return recognize(o, in, out);
        if (*construct_cmd)
            return construct(o, in, out);
        if (*dim_cmd)
            return dim(o, in, out);
        if (*explore_cmd)
            return explore(o, out);
        return verify_fixtures(o, out);
    }
    catch (const BudgetExceeded & e) {
        err << "budget exceeded: " << e.what() << "\n";
        return budget_exceeded;
    }
    catch (const ParseError & e) {
        err << "parse error: " << e.what() << "\n";
        return usage_error;
    }
    catch (const UsageError & e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
    catch (const std::invalid_argument & e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
    catch (const std::out_of_range & e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
}
