#include "polyquat/export.hpp"

#include "polyquat/lattices.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace polyquat::exporter {

namespace {

using field::FieldElement;
using nlohmann::ordered_json;
using quat::Quaternion;

std::array<double, 4> floats_of(const Quaternion& q, unsigned bits) {
    return {q.q0.to_float(bits), q.q1.to_float(bits), q.q2.to_float(bits),
            q.q3.to_float(bits)};
}

void print_float(std::ostringstream& out, double v) {
    // max_digits10 keeps the text round-trippable and deterministic.
    out << std::setprecision(17) << v;
}

std::string off_document(const std::vector<std::array<double, 3>>& vertices,
                         const std::vector<std::vector<std::size_t>>& faces,
                         std::size_t edge_count) {
    std::ostringstream out;
    out << "OFF\n"
        << vertices.size() << ' ' << faces.size() << ' ' << edge_count << '\n';
    for (const auto& v : vertices) {
        print_float(out, v[0]);
        out << ' ';
        print_float(out, v[1]);
        out << ' ';
        print_float(out, v[2]);
        out << '\n';
    }
    for (const auto& f : faces) {
        out << f.size();
        for (std::size_t idx : f) out << ' ' << idx;
        out << '\n';
    }
    return out.str();
}

}  // namespace

unsigned precision_bits_from_env() {
    const char* raw = std::getenv("POLYQUAT_PRECISION_BITS");
    if (raw == nullptr) return 128;
    char* end = nullptr;
    long v = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || v < 53 || v > 65536)
        throw std::invalid_argument("POLYQUAT_PRECISION_BITS must be an integer in [53, 65536]");
    return static_cast<unsigned>(v);
}

std::string polytope_json(const polytopes::Polytope& p, unsigned bits) {
    ordered_json j;
    j["family"] = p.family;
    j["parameter"] = {{"exact", p.x.str()}, {"float", p.x.to_float(bits)}};
    j["degenerate"] = p.degenerate;
    j["group"] = p.vertices.group_name;
    j["vertices"] = ordered_json::array();
    for (const auto& v : p.vertices.points) {
        auto f = floats_of(v, bits);
        j["vertices"].push_back(
            {{"exact", {v.q0.str(), v.q1.str(), v.q2.str(), v.q3.str()}},
             {"float", {f[0], f[1], f[2], f[3]}}});
    }
    j["edges"] = ordered_json::array();
    for (const auto& e : p.edges) j["edges"].push_back({e[0], e[1]});
    j["faces"] = p.faces;
    j["cells"] = ordered_json::array();
    for (const auto& c : p.cells)
        j["cells"].push_back({{"type", c.type}, {"vertices", c.vertex_indices}});
    return j.dump(2) + "\n";
}

polytopes::Polytope polytope_from_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    polytopes::Polytope p;
    p.family = j.at("family").get<std::string>();
    p.x = FieldElement::parse(j.at("parameter").at("exact").get<std::string>());
    p.degenerate = j.at("degenerate").get<bool>();
    p.vertices.group_name = j.at("group").get<std::string>();
    for (const auto& v : j.at("vertices")) {
        const auto& e = v.at("exact");
        p.vertices.points.emplace_back(FieldElement::parse(e.at(0).get<std::string>()),
                                       FieldElement::parse(e.at(1).get<std::string>()),
                                       FieldElement::parse(e.at(2).get<std::string>()),
                                       FieldElement::parse(e.at(3).get<std::string>()));
    }
    p.vertices.seed =
        p.vertices.points.empty() ? Quaternion::zero() : p.vertices.points.front();
    p.vertices.rebuild_index();
    for (const auto& e : j.at("edges"))
        p.edges.push_back({e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>()});
    for (const auto& f : j.at("faces"))
        p.faces.push_back(f.get<std::vector<std::size_t>>());
    for (const auto& c : j.at("cells")) {
        polytopes::Cell cell;
        cell.type = c.at("type").get<std::string>();
        cell.vertex_indices = c.at("vertices").get<std::vector<std::size_t>>();
        p.cells.push_back(std::move(cell));
    }
    return p;
}

std::string polytope_off(const polytopes::Polytope& p, unsigned bits) {
    if (!p.cells.empty())
        throw std::invalid_argument(
            "OFF export covers 3D solids; use the cell catalog for 4D polytopes");
    std::vector<std::array<double, 3>> verts;
    for (const auto& v : p.vertices.points) {
        if (!v.is_vector())
            throw std::invalid_argument("OFF export needs pure-vector vertices");
        verts.push_back({v.q1.to_float(bits), v.q2.to_float(bits), v.q3.to_float(bits)});
    }
    return off_document(verts, p.faces, p.edges.size());
}

CellCatalog cell_catalog(const polytopes::Polytope& p, unsigned bits) {
    if (p.cells.empty())
        throw std::invalid_argument("cell catalog needs a polytope with cells");
    CellCatalog catalog;
    catalog.sidecar_json = polytope_json(p, bits);

    for (const auto& cell : p.cells) {
        std::string key = "cell-" + cell.type + ".off";
        if (catalog.cell_offs.count(key)) continue;

        // Float coordinates of the sample cell, centered in its hyperplane.
        std::vector<std::array<double, 4>> pts;
        std::array<double, 4> center = {0, 0, 0, 0};
        for (std::size_t idx : cell.vertex_indices) {
            pts.push_back(floats_of(p.vertices.points[idx], bits));
            for (int k = 0; k < 4; ++k) center[k] += pts.back()[k];
        }
        for (int k = 0; k < 4; ++k) center[k] /= double(pts.size());
        for (auto& v : pts)
            for (int k = 0; k < 4; ++k) v[k] -= center[k];

        // Orthonormal basis of the cell's 3D hyperplane by Gram-Schmidt over
        // the centered vertex directions.
        std::vector<std::array<double, 4>> basis;
        for (const auto& v : pts) {
            std::array<double, 4> w = v;
            for (const auto& b : basis) {
                double dot = 0;
                for (int k = 0; k < 4; ++k) dot += w[k] * b[k];
                for (int k = 0; k < 4; ++k) w[k] -= dot * b[k];
            }
            double norm = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2] + w[3] * w[3]);
            if (norm < 1e-9) continue;
            for (double& c : w) c /= norm;
            basis.push_back(w);
            if (basis.size() == 3) break;
        }
        if (basis.size() != 3)
            throw std::logic_error("cell does not span a 3D hyperplane");

        std::vector<std::array<double, 3>> projected;
        for (const auto& v : pts) {
            std::array<double, 3> coord = {0, 0, 0};
            for (int b = 0; b < 3; ++b)
                for (int k = 0; k < 4; ++k) coord[std::size_t(b)] += v[k] * basis[std::size_t(b)][k];
            projected.push_back(coord);
        }

        // Faces of the polytope entirely inside this cell, reindexed locally.
        std::map<std::size_t, std::size_t> local;
        for (std::size_t i = 0; i < cell.vertex_indices.size(); ++i)
            local[cell.vertex_indices[i]] = i;
        std::vector<std::vector<std::size_t>> faces;
        std::size_t edge_count = 0;
        for (const auto& face : p.faces) {
            bool inside = std::all_of(face.begin(), face.end(),
                                      [&](std::size_t i) { return local.count(i); });
            if (!inside) continue;
            std::vector<std::size_t> f;
            for (std::size_t i : face) f.push_back(local[i]);
            edge_count += f.size();
            faces.push_back(std::move(f));
        }
        edge_count /= 2;  // every cell-surface edge borders two of its faces
        catalog.cell_offs[key] = off_document(projected, faces, edge_count);
    }
    return catalog;
}

std::string fib_csv(int n_max, const std::string& family) {
    const bool icosa = family == "pseudo-icosahedron";
    if (!icosa && family != "snub24")
        throw std::invalid_argument("fib report covers pseudo-icosahedron and snub24");
    std::ostringstream out;
    out << "n,f_n,x_n,in_lattice,distance_to_golden\n";

    polytopes::Polytope golden_icosa;
    if (icosa)
        golden_icosa = polytopes::pseudoicosahedron(FieldElement::tau(), 1);
    for (const auto& term : lattices::fibonacci_chain(n_max).terms) {
        lattices::ApproximantReport r = lattices::approximant_check(term.n);
        bool in_lattice = icosa ? r.icosahedron_in_sc : r.snub_in_d4;
        double distance = r.distance_to_golden;
        if (icosa) {
            polytopes::Polytope approx =
                polytopes::pseudoicosahedron(FieldElement(term.x_n), field::Rational(term.f_n));
            distance =
                lattices::normalized_vertex_distance(approx.vertices, golden_icosa.vertices);
        }
        out << term.n << ',' << term.f_n << ',' << term.x_n << ','
            << (in_lattice ? "true" : "false") << ',';
        print_float(out, distance);
        out << '\n';
    }
    return out.str();
}

}  // namespace polyquat::exporter
