#include "euphotic/commands.hpp"
#include "euphotic/errors.hpp"
#include "euphotic/plot.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace euphotic;

namespace {

struct GroupArgs {
    std::string type;
    int rank = 0;
};

void add_group(CLI::App* cmd, GroupArgs& g) {
    cmd->add_option("--type", g.type, "Root system type: A..G, or a tag such as G2 or E8")->required();
    cmd->add_option("--rank", g.rank, "Rank when --type is a bare letter");
}

RootSystem build(const GroupArgs& g) { return RootSystem::build(g.type, g.rank); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"euphotic: exact combinatorics of parahoric gradings, Hessenberg weight data and rigidity counts"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string out = "json";
    app.add_option("--out", out, "Report format")->check(CLI::IsMember({"json", "text"}));

    GroupArgs facet_g, grade_g, span_g;
    std::vector<int> facet_J, grade_J;
    auto* facet = app.add_subcommand("facet", "Facet barycenter, m and graded dimensions");
    add_group(facet, facet_g);
    facet->add_option("--J", facet_J, "Affine simple roots vanishing on the facet")->delimiter(',')->required();

    auto* grade_cmd = app.add_subcommand("grade", "Full grading with weight sets");
    add_group(grade_cmd, grade_g);
    grade_cmd->add_option("--J", grade_J, "Affine simple roots vanishing on the facet")->delimiter(',')->required();

    std::string scenario_path, bound_text;
    auto* hess = app.add_subcommand("hessenberg", "Enumerate orbit points with emptiness gates");
    hess->add_option("--scenario", scenario_path, "Scenario file")->required();
    hess->add_option("--bound", bound_text, "Override the bound on <theta, y>");

    auto* audit_cmd = app.add_subcommand("audit", "Rigidity numerology for a scenario");
    audit_cmd->add_option("--scenario", scenario_path, "Scenario file")->required();

    std::string classify_type;
    int classify_max = 0, classify_rank = 0;
    auto* classify = app.add_subcommand("classify", "Dimension-equality census against the listed spherical pairs");
    classify->add_option("--type", classify_type, "A, B, C or D")->required();
    classify->add_option("--max-rank", classify_max, "Largest rank (at most 8)");
    classify->add_option("--rank", classify_rank, "A single rank");

    std::string kind_text;
    int char_n = 0;
    long long char_q = 0;
    std::vector<long long> exps;
    auto* chargen = app.add_subcommand("chargen", "Generic character census or a single genericity test");
    chargen->add_option("--kind", kind_text, "A or BCD")->required();
    chargen->add_option("--n", char_n, "Torus rank for the census");
    chargen->add_option("--q", char_q, "Field size")->required();
    chargen->add_option("--exps", exps, "Exponents of one character")->delimiter(',');

    std::string span_psi, span_q;
    auto* span = app.add_subcommand("spancheck", "Span-rank check over all double cosets");
    add_group(span, span_g);
    span->add_option("--psi", span_psi, "Parabolic label for the centralizer of psi")->required();
    span->add_option("--q", span_q, "Parabolic label for Q")->required();

    std::string plot_path, plot_type;
    int plot_walls = 3;
    auto* plot = app.add_subcommand("plot", "SVG of a rank-two apartment");
    plot->add_option("--scenario", scenario_path, "Scenario file");
    plot->add_option("--type", plot_type, "Group tag when no scenario is given");
    plot->add_option("--output", plot_path, "SVG output path")->required();
    plot->add_option("--walls", plot_walls, "Draw walls alpha + n = 0 for |n| <= walls");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        CommandResult res;
        if (*facet) {
            res = cmd_facet(build(facet_g), facet_J);
        } else if (*grade_cmd) {
            res = cmd_grade(build(grade_g), grade_J);
        } else if (*hess) {
            std::optional<Rat> bound;
            if (!bound_text.empty()) bound = Rat::parse(bound_text);
            res = cmd_hessenberg(load_scenario(scenario_path), bound);
        } else if (*audit_cmd) {
            res = cmd_audit(load_scenario(scenario_path));
        } else if (*classify) {
            const bool tagged = classify_type.size() > 1;
            if (!tagged && !classify_rank && !classify_max) throw InputError("classify: give --rank or --max-rank");
            int rank = tagged ? 0 : (classify_rank ? classify_rank : classify_max);
            const Family f = parse_family(classify_type, rank);
            if (tagged || classify_rank) res = cmd_classify(f, rank, rank);
            else res = cmd_classify(f, 1, classify_max);
        } else if (*chargen) {
            res = cmd_chargen(parse_char_kind(kind_text), char_n, char_q, exps);
        } else if (*span) {
            res = cmd_spancheck(build(span_g), span_psi, span_q);
        } else if (*plot) {
            PlotOptions opts;
            opts.walls = plot_walls;
            std::optional<RootSystem> rs;
            if (!scenario_path.empty()) {
                const Scenario s = load_scenario(scenario_path);
                rs = s.root_system();
                if (rs->rank() != 2) throw CapabilityError("plots are available for rank-two groups only");
                EnumerationOptions eo;
                eo.lattice = s.lattice;
                eo.bound = s.bound;
                eo.predicates = s.predicates;
                eo.rules = s.rules;
                for (const auto& d : enumerate_candidates(*rs, make_facet(*rs, s.J_P), s.x_Q_values(*rs), eo).data)
                    opts.points.push_back({d.y, survives_gates(d)});
                opts.region = s.region;
                opts.title = s.name;
            } else if (!plot_type.empty()) {
                rs = RootSystem::build(plot_type);
            } else {
                throw InputError("plot: give --scenario or --type");
            }
            const std::string svg = render_svg(*rs, opts);
            std::ofstream f(plot_path);
            if (!f) throw InputError("cannot write '" + plot_path + "'");
            f << svg;
            res.report["schema"] = kReportSchema;
            res.report["command"] = "plot";
            res.report["group"] = rs->name();
            res.report["output"] = plot_path;
            res.report["points"] = opts.points.size();
            res.report["walls"] = plot_walls;
        }
        if (out == "json") std::cout << res.report.dump(2) << "\n";
        else std::cout << render_text(res.report);
        return res.checks_passed ? 0 : 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const CapabilityError& e) {
        std::cerr << "capability error: " << e.what() << "\n";
        return 1;
    } catch (const ConsistencyError& e) {
        std::cerr << "consistency error: " << e.what() << "\n";
        return 2;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    }
}
