// Command-line front end: polytope generation and export, group queries,
// invariant suites, the Fibonacci approximant report, the duality identity
// check and lattice membership queries. All computation is exact; the
// POLYQUAT_PRECISION_BITS environment variable only controls float rendering.

#include "polyquat/export.hpp"
#include "polyquat/lattices.hpp"
#include "polyquat/polytopes.hpp"
#include "polyquat/qgroups.hpp"
#include "polyquat/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using polyquat::field::FieldElement;
using polyquat::field::Rational;

/// Parameter strings are exact: "p/q", "p", "tau" or "sigma"; floats are
/// rejected.
FieldElement parse_x(const std::string& text) {
    if (text == "tau") return FieldElement::tau();
    if (text == "sigma") return FieldElement::sigma();
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return FieldElement(Rational(polyquat::field::BigInt(text)));
        return FieldElement(Rational(polyquat::field::BigInt(text.substr(0, slash)),
                                     polyquat::field::BigInt(text.substr(slash + 1))));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--x", "expected p/q, an integer, tau or sigma");
    }
}

Rational parse_rational(const std::string& text, const std::string& flag) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(polyquat::field::BigInt(text));
        return Rational(polyquat::field::BigInt(text.substr(0, slash)),
                        polyquat::field::BigInt(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw CLI::ValidationError(flag, "expected a rational p/q");
    }
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    out << content;
}

polyquat::polytopes::Polytope build_family(const std::string& family,
                                           const FieldElement& x, const Rational& scale) {
    using namespace polyquat::polytopes;
    for (const std::string& solid : standard_solid_names())
        if (family == solid) return standard_solid(family);
    if (family == "pseudo-icosahedron") return pseudoicosahedron(x, scale);
    if (family == "pyritohedron") return pyritohedron(x);
    if (family == "pseudo-icosidodecahedron") return pseudo_icosidodecahedron(x, scale);
    if (family == "snub24") {
        SnubParameter p{x, scale};
        return p.degenerate() ? snub24(p) : snub24_cells(p);
    }
    if (family == "snub24-dual") return snub24_dual({x, scale});
    if (family == "snub24-alt") return snub24_alt({x, scale});
    throw CLI::ValidationError("--family", "unknown family " + family);
}

int cmd_gen(const std::string& family, const std::string& x_text, const std::string& scale_text,
            const std::string& format, const std::string& out_path) {
    const unsigned bits = polyquat::exporter::precision_bits_from_env();
    polyquat::polytopes::Polytope p =
        build_family(family, parse_x(x_text), parse_rational(scale_text, "--scale"));
    if (format == "json") {
        write_output(out_path, polyquat::exporter::polytope_json(p, bits));
    } else if (format == "off") {
        if (p.cells.empty()) {
            write_output(out_path, polyquat::exporter::polytope_off(p, bits));
        } else {
            if (out_path.empty() || out_path == "-")
                throw CLI::ValidationError(
                    "--out", "4D OFF export writes multiple files; give a path prefix");
            polyquat::exporter::CellCatalog cat = polyquat::exporter::cell_catalog(p, bits);
            write_output(out_path + ".sidecar.json", cat.sidecar_json);
            std::cout << out_path + ".sidecar.json" << '\n';
            for (const auto& [name, off] : cat.cell_offs) {
                write_output(out_path + "." + name, off);
                std::cout << out_path + "." + name << '\n';
            }
        }
    } else {
        throw CLI::ValidationError("--format", "expected off or json");
    }
    return 0;
}

int cmd_group(const std::string& name, bool order, bool dump,
              const std::string& subgroup_of) {
    using namespace polyquat::qgroups;
    const FiniteGroup& g = catalog(parse_group_name(name));
    bool any = false;
    if (order) {
        std::cout << g.order() << '\n';
        any = true;
    }
    if (!subgroup_of.empty()) {
        const FiniteGroup& super = catalog(parse_group_name(subgroup_of));
        auto [ok, index] = is_subgroup(g, super);
        std::cout << (ok ? "true" : "false");
        if (ok) std::cout << ", index " << index;
        std::cout << '\n';
        any = true;
    }
    if (dump) {
        for (const auto& m : g.elements()) std::cout << m.str() << '\n';
        any = true;
    }
    if (!any) std::cout << g.name() << ": order " << g.order() << '\n';
    return 0;
}

int cmd_verify(const std::string& suite, bool json, bool verbose) {
    polyquat::verify::CheckReport report = polyquat::verify::run_suite(suite);
    std::cout << (json ? polyquat::verify::report_json(report)
                       : polyquat::verify::report_text(report, verbose));
    return report.passed ? 0 : 1;
}

int cmd_dual_check(const std::string& y_text) {
    bool ok = polyquat::polytopes::dual_identity_check(parse_rational(y_text, "--y"));
    std::cout << (ok ? "true" : "false") << '\n';
    return ok ? 0 : 1;
}

int cmd_lattice(const std::string& kind, const std::string& point) {
    std::vector<Rational> coords;
    std::stringstream ss(point);
    std::string part;
    while (std::getline(ss, part, ',')) coords.push_back(parse_rational(part, "--point"));
    if (coords.size() != 4)
        throw CLI::ValidationError("--point", "expected four comma-separated rationals");
    polyquat::quat::Quaternion v{FieldElement(coords[0]), FieldElement(coords[1]),
                                 FieldElement(coords[2]), FieldElement(coords[3])};
    bool member =
        polyquat::lattices::contains(polyquat::lattices::parse_lattice_kind(kind), v);
    std::cout << (member ? "true" : "false") << '\n';
    return member ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact quaternionic polytope and lattice toolkit"};
    app.require_subcommand(1);

    std::string family, x_text = "1", scale_text = "1", format = "json", out_path;
    auto* gen = app.add_subcommand("gen", "Generate a polytope and export it");
    gen->add_option("--family", family, "Polytope family")->required();
    gen->add_option("--x", x_text, "Parameter: p/q, integer, tau or sigma");
    gen->add_option("--scale", scale_text, "Overall rational scale");
    gen->add_option("--format", format, "off or json");
    gen->add_option("--out", out_path, "Output path ('-' or empty: stdout)");

    std::string group_name, subgroup_of;
    bool order = false, dump = false;
    auto* group = app.add_subcommand("group", "Query a group from the catalog");
    group->add_option("--name", group_name, "Group name (e.g. wf4, pyr4d576)")->required();
    group->add_flag("--order", order, "Print the group order");
    group->add_flag("--dump", dump, "Print all elements");
    group->add_option("--subgroup-of", subgroup_of, "Test containment in another group");

    std::string suite = "all";
    bool json = false, verbose = false;
    auto* verify = app.add_subcommand("verify", "Run an invariant suite");
    verify->add_option("suite", suite, "groups|orbits|snub|dual|lattice|fib|all");
    verify->add_flag("--json", json, "JSON report");
    verify->add_flag("--verbose", verbose, "List passing checks too");

    int fib_n = 10;
    std::string fib_family = "snub24", fib_out;
    auto* fib = app.add_subcommand("fib", "Fibonacci approximant report (CSV)");
    fib->add_option("--n", fib_n, "Largest chain index (>= 2)");
    fib->add_option("--family", fib_family, "pseudo-icosahedron or snub24");
    fib->add_option("--out", fib_out, "Output path ('-' or empty: stdout)");

    std::string y_text;
    auto* dual = app.add_subcommand("dual-check", "Exact duality identity at rational y");
    dual->add_option("--y", y_text, "Rational parameter p/q")->required();

    std::string kind, point;
    auto* lattice = app.add_subcommand("lattice", "Lattice membership query");
    lattice->add_option("--kind", kind, "sc|fcc|bcc|bcc2|d4")->required();
    lattice->add_option("--point", point, "m0,m1,m2,m3 (rationals)")->required();

    CLI11_PARSE(app, argc, argv);
    try {
        if (gen->parsed()) return cmd_gen(family, x_text, scale_text, format, out_path);
        if (group->parsed()) return cmd_group(group_name, order, dump, subgroup_of);
        if (verify->parsed()) return cmd_verify(suite, json, verbose);
        if (fib->parsed()) {
            write_output(fib_out, polyquat::exporter::fib_csv(fib_n, fib_family));
            return 0;
        }
        if (dual->parsed()) return cmd_dual_check(y_text);
        if (lattice->parsed()) return cmd_lattice(kind, point);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
