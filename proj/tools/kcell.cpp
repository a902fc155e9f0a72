/**
 * Command-line front end: homology, complex export, order graphs, boundary
 * rows and validity checks for the cell structures on maximal compact
 * subgroups of split real semisimple Lie groups.
 *
 * Exit codes: 0 success, 2 usage or parse failure, 3 mathematical validation
 * failure (a type whose orientation convention fails its d o d = 0 check).
 */
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "kcell/kcell.hpp"

namespace {

struct Options {
    std::string type;
    std::string space = "compact";
    std::string format = "text";
    std::string element;
    std::string out;
};

void add_common(CLI::App* sub, Options& opt, bool with_element) {
    sub->add_option("--type", opt.type, "Lie type, e.g. A2, B3, G2")->required();
    sub->add_option("--space", opt.space, "compact|flag")
        ->check(CLI::IsMember({"compact", "flag"}));
    sub->add_option("--format", opt.format, "text|json|dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--out", opt.out, "output path (default stdout)");
    if (with_element)
        sub->add_option("--element", opt.element,
                        "element as s/c tokens, e.g. \"s1 s2 c1\"")->required();
}

struct Session {
    kcell::RootSystem rs;
    kcell::WeylGroup wg;
    kcell::UGroup ug;

    explicit Session(const std::string& type)
        : rs(kcell::build_root_system(kcell::parse_lie_type(type))),
          wg(kcell::WeylGroup::enumerate(rs)),
          ug(rs, wg) {}
};

kcell::Space parse_space(const std::string& s) {
    return s == "flag" ? kcell::Space::FlagManifold : kcell::Space::CompactGroup;
}

int run_homology(const Options& opt, std::ostream& os) {
    Session s(opt.type);
    const auto cx = kcell::build_complex(s.ug, parse_space(opt.space));
    const auto groups = kcell::homology(cx);
    if (opt.format == "json") {
        os << kcell::to_json(groups).dump(2) << "\n";
    } else {
        for (std::size_t k = 0; k < groups.size(); ++k)
            os << (k ? " " : "") << "H" << k << "=" << kcell::to_string(groups[k]);
        os << "\n";
    }
    return 0;
}

int run_complex(const Options& opt, std::ostream& os) {
    Session s(opt.type);
    const kcell::Space space = parse_space(opt.space);
    const auto cx = kcell::build_complex(s.ug, space);
    if (opt.format == "json") {
        os << kcell::to_json(cx).dump(2) << "\n";
    } else if (opt.format == "dot") {
        // cell incidence digraph: an edge per nonzero boundary entry
        os << "digraph complex_" << kcell::to_string(cx.lie_type) << " {\n  node [shape=box];\n";
        for (int d = 1; d <= cx.top_dimension(); ++d)
            for (const auto& [r, c, v] : cx.boundary[d].entries)
                os << "  \"" << kcell::detail::cell_label(cx, s.ug, d, c) << "\" -> \""
                   << kcell::detail::cell_label(cx, s.ug, d - 1, r) << "\" [label=\"" << v
                   << "\"];\n";
        os << "}\n";
    } else {
        const auto lines = space == kcell::Space::CompactGroup
                               ? kcell::boundary_table(s.ug)
                               : kcell::flag_boundary_table(s.wg);
        for (const auto& line : lines)
            os << line << "\n";
    }
    return 0;
}

int run_order_graph(const Options& opt, std::ostream& os) {
    Session s(opt.type);
    if (parse_space(opt.space) == kcell::Space::CompactGroup) {
        const auto g = kcell::order_graph(s.ug);
        if (opt.format == "json")
            os << kcell::to_json(s.ug, g).dump(2) << "\n";
        else if (opt.format == "dot")
            os << kcell::to_dot(s.ug, g);
        else
            for (const auto& e : g.edges)
                os << kcell::render_element(s.ug, e.from) << " -> "
                   << kcell::render_element(s.ug, e.to) << "  [position " << e.position + 1
                   << ", kind " << e.kind << "]\n";
    } else {
        if (opt.format == "json")
            os << kcell::to_json(s.wg).dump(2) << "\n";
        else if (opt.format == "dot")
            os << kcell::to_dot(s.wg);
        else
            for (const auto& w : s.wg.elements())
                for (const auto& [pos, v] : s.wg.cover_deletions(w.id))
                    os << kcell::detail::weyl_label(s.wg, w.id, 'r') << " -> "
                       << kcell::detail::weyl_label(s.wg, v, 'r') << "  [position " << pos + 1
                       << "]\n";
    }
    return 0;
}

int run_boundary(const Options& opt, std::ostream& os) {
    Session s(opt.type);
    const kcell::UElement u = kcell::parse_element(s.ug, opt.element);
    if (parse_space(opt.space) == kcell::Space::CompactGroup) {
        if (opt.format == "json") {
            kcell::Json j;
            j["cell"] = kcell::render_element(s.ug, u);
            kcell::Json entries = kcell::Json::array();
            for (const auto& bc : kcell::boundary_of_cell(s.ug, u)) {
                kcell::Json e;
                e["to"] = kcell::render_element(s.ug, bc.v);
                e["position"] = bc.position + 1;
                e["kind"] = bc.kind;
                e["value"] = bc.value;
                entries.push_back(std::move(e));
            }
            j["boundary"] = std::move(entries);
            os << j.dump(2) << "\n";
        } else {
            os << kcell::render_boundary(s.ug, u) << "\n";
        }
    } else {
        os << kcell::render_flag_boundary(s.wg, u.w) << "\n";
    }
    return 0;
}

int run_check(const Options& opt, std::ostream& os) {
    const auto results =
        kcell::run_checks(kcell::parse_lie_type(opt.type), parse_space(opt.space));
    bool all = true;
    for (const auto& r : results) {
        os << (r.pass ? "PASS " : "FAIL ") << r.name
           << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
        all = all && r.pass;
    }
    return all ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cellular chain complexes and integral homology of maximal compact subgroups "
                 "of split real semisimple Lie groups"};
    app.require_subcommand(1);

    Options opt;
    CLI::App* homology = app.add_subcommand("homology", "print one homology group per degree");
    add_common(homology, opt, false);
    CLI::App* complex = app.add_subcommand("complex", "emit the graded complex");
    add_common(complex, opt, false);
    CLI::App* order = app.add_subcommand("order-graph", "emit the cover-relation graph");
    add_common(order, opt, false);
    CLI::App* boundary = app.add_subcommand("boundary", "print the boundary of one cell");
    add_common(boundary, opt, true);
    CLI::App* check = app.add_subcommand("check", "run the validity checks, PASS/FAIL each");
    add_common(check, opt, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // 0 is --help
    }

    if (opt.format == "dot" && !complex->parsed() && !order->parsed()) {
        std::cerr << "error: --format dot is only available for order-graph and complex\n";
        return 2;
    }

    std::ofstream file;
    if (!opt.out.empty()) {
        file.open(opt.out);
        if (!file) {
            std::cerr << "error: cannot open \"" << opt.out << "\" for writing\n";
            return 2;
        }
    }
    std::ostream& os = opt.out.empty() ? std::cout : file;

    try {
        if (homology->parsed())
            return run_homology(opt, os);
        if (complex->parsed())
            return run_complex(opt, os);
        if (order->parsed())
            return run_order_graph(opt, os);
        if (boundary->parsed())
            return run_boundary(opt, os);
        if (check->parsed())
            return run_check(opt, os);
    } catch (const kcell::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const kcell::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const kcell::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const kcell::EnumerationLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
