#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "pcomp/competition.hpp"
#include "pcomp/cover.hpp"
#include "pcomp/errors.hpp"
#include "pcomp/graph.hpp"
#include "pcomp/io.hpp"
#include "pcomp/oracle.hpp"
#include "pcomp/realization.hpp"

namespace pcomp::cli {

namespace {

struct Range {
    int first = 0;
    int last = 0;
};

// "a..b" (inclusive) or a single integer.
Range parse_range(const std::string& text)
{
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) {
            throw invalid_parameter("bad range \"" + text + "\": expected a..b");
        }
        return v;
    };
    const auto dots = text.find("..");
    Range r;
    if (dots == std::string::npos) {
        r.first = r.last = to_int(text);
    } else {
        r.first = to_int(text.substr(0, dots));
        r.last = to_int(text.substr(dots + 2));
    }
    if (r.first > r.last) {
        throw invalid_parameter("bad range \"" + text + "\": empty");
    }
    return r;
}

std::vector<Vertex> parse_order(const std::string& text)
{
    std::vector<Vertex> order;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            order.push_back(std::stoi(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw invalid_parameter("bad --order \"" + text + "\": expected comma-separated vertices");
        }
    }
    return order;
}

Graph family_graph(const std::string& family, int n)
{
    if (n < 3) {
        throw invalid_parameter(family + ": requires n >= 3");
    }
    auto cycle = make_cycle(static_cast<std::size_t>(n));
    if (family == "cycle") {
        return cycle;
    }
    if (n < 5) {
        throw invalid_parameter("co-cycle: requires n >= 5");
    }
    return complement(cycle);
}

class Emitter {
public:
    Emitter(std::ostream& out, std::string path) : out_(out), path_(std::move(path)) {}

    void write(const std::string& text) const
    {
        if (path_.empty()) {
            out_ << text;
            return;
        }
        std::ofstream file(path_);
        if (!file) {
            throw parse_error("cannot write " + path_);
        }
        file << text;
    }

    void json(const nlohmann::json& j) const { write(j.dump() + "\n"); }

private:
    std::ostream& out_;
    std::string path_;
};

struct Options {
    std::string family;
    int n = 0;
    std::optional<int> p;
    std::string n_range;
    std::string p_range;
    std::string graph_file;
    std::string cover_file;
    std::string digraph_file;
    std::string order;
    bool acyclic = false;
    std::optional<std::size_t> budget;
    std::optional<std::size_t> guard;
    bool exhaustive = false;
    std::string format = "json";
    std::string out_file;
};

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

std::string survey_table(const std::string& family, Range ns, Range ps, std::size_t guard)
{
    std::ostringstream table;
    table << "n\tp\tdecision\tmethod\tcover_size\tagree\n";
    for (int n = ns.first; n <= ns.last; ++n) {
        const Graph g = family_graph(family, n);
        for (int p = ps.first; p <= ps.last; ++p) {
            table << n << '\t' << p << '\t';
            try {
                const auto d = is_p_competition(g, p, DecideOptions{guard, SearchMode::pruned});
                table << yes_no(d.answer) << '\t' << to_string(d.method) << '\t'
                      << (d.cover_size ? std::to_string(*d.cover_size) : "-") << '\t'
                      << (d.agree ? yes_no(*d.agree) : "-") << '\n';
            } catch (const unsupported_instance&) {
                table << "skipped\t-\t-\t-\n";
            } catch (const scale_error&) {
                table << "skipped\t-\t-\t-\n";
            }
        }
    }
    return table.str();
}

int dispatch(const std::string& command, const Options& o, std::ostream& out)
{
    const Emitter emit(out, o.out_file);
    const bool dot = o.format == "dot";

    if (command == "gen") {
        const auto g = family_graph(o.family, o.n);
        dot ? emit.write(to_dot(g)) : emit.json(to_json(g));
        return ok;
    }
    if (command == "cover") {
        if (o.family == "cycle") {
            if (!o.p) {
                throw invalid_parameter("cover cycle: --p is required");
            }
            emit.json(to_json(cycle_cover(static_cast<std::size_t>(std::max(o.n, 0)), *o.p)));
            return ok;
        }
        if (o.n < 5) {
            throw invalid_parameter("co-cycle: requires n >= 5");
        }
        auto f = complement_cycle_cover(static_cast<std::size_t>(o.n));
        if (o.p) {
            f = lift_cover(f, *o.p);
            if (f.size() > f.host_order()) {
                throw pcomp::infeasible("cover co-cycle: lifted cover has " + std::to_string(f.size()) +
                                 " sets (requires |F| + p - 1 <= n)");
            }
        }
        emit.json(to_json(f));
        return ok;
    }
    if (command == "verify") {
        const auto g = graph_from_json(read_json_file(o.graph_file));
        const auto f = cover_from_json(read_json_file(o.cover_file));
        const auto verdict = verify_p_ecc(g, f, o.p.value_or(1));
        emit.json(to_json(verdict));
        return verdict.valid() ? ok : invalid;
    }
    if (command == "realize") {
        const auto f = cover_from_json(read_json_file(o.cover_file));
        std::optional<Digraph> d;
        if (o.acyclic) {
            if (o.order.empty()) {
                throw invalid_parameter("realize --acyclic: --order is required");
            }
            const auto order = parse_order(o.order);
            d = realize_acyclic(f, order);
        } else {
            d = realize(f);
        }
        dot ? emit.write(to_dot(*d)) : emit.json(to_json(*d));
        return ok;
    }
    if (command == "compete") {
        const auto d = digraph_from_json(read_json_file(o.digraph_file));
        const auto g = p_competition_graph(d, o.p.value_or(1));
        dot ? emit.write(to_dot(g)) : emit.json(to_json(g));
        return ok;
    }
    if (command == "theta-e") {
        const auto g = graph_from_json(read_json_file(o.graph_file));
        ThetaOptions options;
        options.upper = o.budget;
        options.guard = o.guard.value_or(options.guard);
        emit.json(to_json(exact_theta_e(g, options)));
        return ok;
    }
    if (command == "theta-e-p") {
        const auto g = graph_from_json(read_json_file(o.graph_file));
        ThetaPOptions options;
        options.mode = o.exhaustive ? SearchMode::exhaustive : SearchMode::pruned;
        options.guard = o.guard;
        emit.json(to_json(exact_theta_e_p(g, o.p.value_or(1), o.budget.value_or(g.order()), options)));
        return ok;
    }
    if (command == "decide") {
        const auto g = graph_from_json(read_json_file(o.graph_file));
        DecideOptions options;
        options.oracle_guard = o.guard.value_or(options.oracle_guard);
        const auto d = is_p_competition(g, o.p.value_or(1), options);
        emit.json(to_json(d));
        return d.answer ? ok : invalid;
    }
    if (command == "survey") {
        const auto ns = parse_range(o.n_range);
        const auto ps = parse_range(o.p_range);
        emit.write(survey_table(o.family, ns, ps, o.guard.value_or(DecideOptions{}.oracle_guard)));
        return ok;
    }
    throw invalid_parameter("unknown command " + command);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"p-competition graphs of cycles and their complements"};
    app.require_subcommand(1);
    Options o;

    const std::vector<std::string> families{"cycle", "co-cycle"};
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "dot"}));
    };
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out_file, "write to FILE instead of stdout"); };

    auto* gen = app.add_subcommand("gen", "emit C_n or its complement");
    gen->add_option("family", o.family)->required()->check(CLI::IsMember(families));
    gen->add_option("--n", o.n)->required();
    add_format(gen);
    add_out(gen);

    auto* cover = app.add_subcommand("cover", "emit a (p-)edge clique cover");
    cover->add_option("family", o.family)->required()->check(CLI::IsMember(families));
    cover->add_option("--n", o.n)->required();
    cover->add_option("--p", o.p);
    add_out(cover);

    auto* verify = app.add_subcommand("verify", "check a p-edge clique cover; exit 0 iff valid");
    verify->add_option("graph", o.graph_file)->required();
    verify->add_option("cover", o.cover_file)->required();
    verify->add_option("--p", o.p);
    add_out(verify);

    auto* realize_cmd = app.add_subcommand("realize", "build the digraph of a cover");
    realize_cmd->add_option("cover", o.cover_file)->required();
    realize_cmd->add_flag("--acyclic", o.acyclic);
    realize_cmd->add_option("--order", o.order, "comma-separated vertex ordering");
    add_format(realize_cmd);
    add_out(realize_cmd);

    auto* compete = app.add_subcommand("compete", "p-competition graph of a digraph");
    compete->add_option("digraph", o.digraph_file)->required();
    compete->add_option("--p", o.p);
    add_format(compete);
    add_out(compete);

    auto* theta_e = app.add_subcommand("theta-e", "exact edge clique cover number");
    theta_e->add_option("graph", o.graph_file)->required();
    theta_e->add_option("--budget", o.budget, "give up above this many cliques");
    theta_e->add_option("--guard", o.guard, "largest n to search");
    add_out(theta_e);

    auto* theta_e_p = app.add_subcommand("theta-e-p", "exact p-edge clique cover number up to a budget");
    theta_e_p->add_option("graph", o.graph_file)->required();
    theta_e_p->add_option("--p", o.p)->required();
    theta_e_p->add_option("--budget", o.budget, "largest family size (default n)");
    theta_e_p->add_option("--guard", o.guard, "largest n to search");
    theta_e_p->add_flag("--exhaustive", o.exhaustive, "enumerate every canonical family");
    add_out(theta_e_p);

    auto* decide = app.add_subcommand("decide", "is the graph a p-competition graph; exit 0 iff yes");
    decide->add_option("graph", o.graph_file)->required();
    decide->add_option("--p", o.p)->required();
    decide->add_option("--guard", o.guard, "largest n for the exact search");
    add_out(decide);

    auto* survey = app.add_subcommand("survey", "TSV table of decisions over n and p ranges");
    survey->add_option("family", o.family)->required()->check(CLI::IsMember(families));
    auto* n_opt = survey->add_option("--n", o.n_range, "a..b");
    survey->add_option("--range", o.n_range, "alias of --n")->excludes(n_opt);
    survey->add_option("--p", o.p_range, "a..b")->required();
    survey->add_option("--guard", o.guard, "largest n for the exact search");
    add_out(survey);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : io_error;
    }

    const auto* chosen = app.get_subcommands().front();
    if (chosen == survey && o.n_range.empty()) {
        err << "survey: --n (or --range) is required\n";
        return io_error;
    }

    try {
        return dispatch(chosen->get_name(), o, out);
    } catch (const pcomp::infeasible& e) {
        err << e.what() << '\n';
        return infeasible;
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return io_error;
    }
}

} // namespace pcomp::cli
