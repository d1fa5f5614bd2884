#include "oie/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oie/event_file.hpp"
#include "oie/expression.hpp"
#include "oie/scenario.hpp"

namespace oie {

namespace {

std::string format_index_tuple(const IndexTuple& idx) {
    std::string out = "(";
    for (std::size_t k = 1; k <= idx.size(); ++k) {
        if (k > 1) out += ", ";
        out += std::to_string(idx.at(k));
    }
    return out + ")";
}

int run_eval(const std::string& path, const std::string& expr_override,
             std::size_t max_product, std::ostream& out) {
    const EventFile file = load_event_file(path);
    const std::string text = expr_override.empty() ? file.expression : expr_override;
    if (text.empty()) {
        throw InvalidInputError("the file declares no expression; pass --expr");
    }
    EvalOptions options;
    options.limits.max_product = max_product;
    const EvalOutcome outcome = evaluate_traced(*parse_expression(text), file, options);
    out << format_eval_outcome(outcome.value, outcome.voided);
    return 0;
}

int run_orbit(const std::string& path, const std::string& op_name,
              const std::string& alpha, const std::string& beta,
              std::size_t orbit_cap, std::ostream& out) {
    const EventFile file = load_event_file(path);
    std::vector<EventStarId> labels;
    for (const auto& event : file.events) labels.push_back(event.id);

    OpDescriptor op = MulOp{};
    if (op_name == "add") {
        if (alpha.empty() || beta.empty()) {
            throw InvalidInputError("orbits over add need --alpha and --beta");
        }
        op = AddOp{DomainWindow(Rational::parse(alpha), Rational::parse(beta))};
    }
    const OrbitSpace space =
        orbit_space(file_atoms(file), op, constraints_for(file, labels), orbit_cap);
    out << format_orbit(space);
    return 0;
}

int run_cayley(std::size_t n, const std::string& dot_path, std::ostream& out) {
    const CayleyTable table = cayley_table(n);
    out << format_cayley(table);
    if (!dot_path.empty()) {
        std::ofstream dot(dot_path, std::ios::binary);
        if (!dot) {
            throw InvalidInputError("cannot open " + dot_path + " for writing");
        }
        dot << emit_full_csa_diagram(n, DiagramLayout::circular);
    }
    return 0;
}

int run_diagram(std::size_t n, const std::string& layout_name, std::ostream& out) {
    const DiagramLayout layout =
        layout_name == "grid" ? DiagramLayout::grid : DiagramLayout::circular;
    out << emit_full_csa_diagram(n, layout);
    return 0;
}

int run_sampling(std::size_t balls, std::size_t red, std::size_t drawers,
                 const std::string& tick, std::ostream& out) {
    const SamplingReport report =
        scenario_sampling(balls, red, drawers, Rational::parse(tick));
    out << "sampling " << balls << " balls (" << red << " red) across " << drawers
        << " drawers\n";
    for (std::size_t d = 0; d < drawers; ++d) {
        out << "drawer" << (d + 1) << ": add=" << report.marginal_add[d].str()
            << " mul=" << report.marginal_mul[d].str() << "\n";
    }
    return 0;
}

int run_validate(const std::string& path, std::ostream& out) {
    load_event_file(path);
    out << "ok\n";
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact optional intervals event algebra"};
    app.require_subcommand(1);

    std::string eval_file;
    std::string eval_expr;
    std::size_t eval_max_product = Limits{}.max_product;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate an event file expression");
    eval_cmd->add_option("file", eval_file, "Event file to evaluate")->required();
    eval_cmd->add_option("--expr", eval_expr, "Expression overriding the file's own");
    eval_cmd->add_option("--max-product", eval_max_product,
                         "Cap on enumerated combos");

    std::string orbit_file;
    std::string orbit_op;
    std::string orbit_alpha;
    std::string orbit_beta;
    std::size_t orbit_cap = 6;
    auto* orbit_cmd =
        app.add_subcommand("orbit", "Orbit space over all operand orders");
    orbit_cmd->add_option("file", orbit_file, "Event file with the operands")
        ->required();
    orbit_cmd->add_option("--op", orbit_op, "Operation, add or mul")
        ->required()
        ->check(CLI::IsMember({"add", "mul"}));
    orbit_cmd->add_option("--alpha", orbit_alpha, "Window start for add");
    orbit_cmd->add_option("--beta", orbit_beta, "Window end for add");
    orbit_cmd->add_option("--orbit-cap", orbit_cap, "Operand count cap");

    std::size_t cayley_n = 0;
    std::string cayley_dot;
    auto* cayley_cmd =
        app.add_subcommand("cayley", "Cayley table of the induced semigroup");
    cayley_cmd->add_option("-n,--events", cayley_n, "Base event count")->required();
    cayley_cmd->add_option("--dot", cayley_dot, "Also write the diagram here");

    std::size_t diagram_n = 0;
    std::string diagram_layout;
    auto* diagram_cmd = app.add_subcommand("diagram", "Full CSA diagram as DOT");
    diagram_cmd->add_option("-n,--events", diagram_n, "Base event count")->required();
    diagram_cmd->add_option("--layout", diagram_layout, "circular or grid")
        ->required()
        ->check(CLI::IsMember({"circular", "grid"}));

    auto* scenario_cmd =
        app.add_subcommand("scenario", "Generate a scenario event file");
    scenario_cmd->require_subcommand(1);

    std::size_t sprint_lanes = 0;
    std::string sprint_alpha, sprint_beta, sprint_dmin, sprint_dmax, sprint_tick;
    auto* sprint_cmd = scenario_cmd->add_subcommand("sprint", "Shared-window heats");
    sprint_cmd->add_option("--lanes", sprint_lanes)->required();
    sprint_cmd->add_option("--alpha", sprint_alpha)->required();
    sprint_cmd->add_option("--beta", sprint_beta)->required();
    sprint_cmd->add_option("--dmin", sprint_dmin)->required();
    sprint_cmd->add_option("--dmax", sprint_dmax)->required();
    sprint_cmd->add_option("--tick", sprint_tick)->required();

    std::size_t downhill_skiers = 0;
    std::string downhill_start, downhill_total, downhill_tmin, downhill_tmax,
        downhill_tick;
    auto* downhill_cmd =
        scenario_cmd->add_subcommand("downhill", "Strictly ordered starts");
    downhill_cmd->add_option("--skiers", downhill_skiers)->required();
    downhill_cmd->add_option("--start", downhill_start)->required();
    downhill_cmd->add_option("--total", downhill_total)->required();
    downhill_cmd->add_option("--tmin", downhill_tmin)->required();
    downhill_cmd->add_option("--tmax", downhill_tmax)->required();
    downhill_cmd->add_option("--tick", downhill_tick)->required();

    std::size_t mergesort_len = 0;
    std::size_t mergesort_procs = 0;
    auto* mergesort_cmd =
        scenario_cmd->add_subcommand("mergesort", "Layered merge scheduling");
    mergesort_cmd->add_option("--len", mergesort_len)->required();
    mergesort_cmd->add_option("--procs", mergesort_procs);

    std::size_t sampling_balls = 0;
    std::size_t sampling_red = 0;
    std::size_t sampling_drawers = 0;
    std::string sampling_tick;
    auto* sampling_cmd =
        scenario_cmd->add_subcommand("sampling", "Drawer sampling marginals");
    sampling_cmd->add_option("--balls", sampling_balls)->required();
    sampling_cmd->add_option("--red", sampling_red)->required();
    sampling_cmd->add_option("--drawers", sampling_drawers)->required();
    sampling_cmd->add_option("--tick", sampling_tick)->required();

    std::string validate_file;
    auto* validate_cmd = app.add_subcommand("validate", "Check an event file");
    validate_cmd->add_option("file", validate_file, "Event file to check")->required();

    try {
        // CLI11's vector overload consumes arguments back to front.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand(eval_cmd)) {
            return run_eval(eval_file, eval_expr, eval_max_product, out);
        }
        if (app.got_subcommand(orbit_cmd)) {
            return run_orbit(orbit_file, orbit_op, orbit_alpha, orbit_beta, orbit_cap,
                             out);
        }
        if (app.got_subcommand(cayley_cmd)) {
            return run_cayley(cayley_n, cayley_dot, out);
        }
        if (app.got_subcommand(diagram_cmd)) {
            return run_diagram(diagram_n, diagram_layout, out);
        }
        if (app.got_subcommand(scenario_cmd)) {
            if (scenario_cmd->got_subcommand(sprint_cmd)) {
                const EventFile file = scenario_sprint(
                    sprint_lanes,
                    DomainWindow(Rational::parse(sprint_alpha),
                                 Rational::parse(sprint_beta)),
                    Rational::parse(sprint_dmin), Rational::parse(sprint_dmax),
                    Rational::parse(sprint_tick));
                out << serialize_event_file(file);
                return 0;
            }
            if (scenario_cmd->got_subcommand(downhill_cmd)) {
                const EventFile file = scenario_downhill(
                    downhill_skiers, Rational::parse(downhill_start),
                    Rational::parse(downhill_total), Rational::parse(downhill_tmin),
                    Rational::parse(downhill_tmax), Rational::parse(downhill_tick));
                out << serialize_event_file(file);
                return 0;
            }
            if (scenario_cmd->got_subcommand(mergesort_cmd)) {
                out << serialize_event_file(
                    scenario_mergesort(mergesort_len, mergesort_procs));
                return 0;
            }
            return run_sampling(sampling_balls, sampling_red, sampling_drawers,
                                sampling_tick, out);
        }
        return run_validate(validate_file, out);
    } catch (const CapacityExceededError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

std::string format_oie(const OIE& o) {
    std::ostringstream ss;
    if (o.is_void()) {
        ss << "VOID\n";
        return ss.str();
    }
    ss << "kind: " << (o.is_atomic() ? "atomic" : "composite") << "\n";
    ss << "label: " << oie_label(o) << "\n";
    if (o.is_composite()) {
        ss << "components (" << o.components().size() << "):\n";
        for (std::size_t i = 0; i < o.components().size(); ++i) {
            ss << "  " << (i + 1) << ": " << oie_label(o.components()[i]) << "\n";
        }
    }
    ss << "details F (" << o.details_F().size() << "):\n";
    for (const auto& combo : o.details_F().combos()) {
        ss << "  " << to_string(combo) << "\n";
    }
    ss << "intervals I (" << o.intervals_I().size() << "):\n";
    for (const auto& iv : o.intervals_I()) {
        ss << "  " << to_string(iv) << "\n";
    }
    ss << "atoms A (" << o.atoms_A().size() << "):";
    for (const auto& atom : o.atoms_A()) {
        ss << " " << atom;
    }
    ss << "\n";
    return ss.str();
}

std::string format_eval_outcome(const OIE& value, VoidStep voided) {
    if (!value.is_void()) return format_oie(value);
    if (voided == VoidStep::none) return "VOID\n";
    return "VOID at step " + std::to_string(static_cast<int>(voided)) + "\n";
}

std::string format_orbit(const OrbitSpace& space) {
    std::ostringstream ss;
    ss << space.classes.size() << (space.classes.size() == 1 ? " class" : " classes")
       << "\n";
    for (std::size_t i = 0; i < space.classes.size(); ++i) {
        const OrbitClass& cls = space.classes[i];
        ss << "class " << (i + 1) << ": " << oie_label(cls.representative) << ", "
           << cls.representative.details_F().size() << " details\n";
        ss << "  index tuples:";
        for (const auto& idx : cls.index_tuples) {
            ss << " " << format_index_tuple(idx);
        }
        ss << "\n";
    }
    return ss.str();
}

std::string format_cayley(const CayleyTable& table) {
    const auto& elements = table.elements();
    std::size_t width = 0;
    for (const auto& e : elements) width = std::max(width, e.name().size());

    const auto pad = [width](const std::string& s) {
        return s + std::string(width - s.size(), ' ');
    };

    std::ostringstream ss;
    ss << pad("");
    for (const auto& e : elements) ss << "  " << pad(e.name());
    ss << "\n";
    for (std::size_t i = 0; i < table.order(); ++i) {
        ss << pad(elements[i].name());
        for (std::size_t j = 0; j < table.order(); ++j) {
            ss << "  " << pad(table.cell(i, j).name());
        }
        ss << "\n";
    }
    return ss.str();
}

} // namespace oie
