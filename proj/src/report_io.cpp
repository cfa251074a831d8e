#include "trihedral/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace trihedral {

namespace {

std::string triple_str(Int r, const std::array<Int, 3>& g) {
    std::ostringstream os;
    os << "1/" << r << "(" << g[0] << "," << g[1] << "," << g[2] << ")";
    return os.str();
}

std::string generators_str(Int r, const std::vector<std::array<Int, 3>>& gens) {
    if (gens.empty()) return "none (trivial diagonal part)";
    std::string out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) out += ", ";
        out += triple_str(r, gens[i]);
    }
    return out;
}

GroupType type_from_string(const std::string& s) {
    if (s == "I") return GroupType::TypeI;
    if (s == "II") return GroupType::TypeII;
    throw input_error("unknown group type tag: " + s);
}

std::string central_kind_str(CentralKind k) {
    switch (k) {
        case CentralKind::WholeSimplex: return "whole_simplex";
        case CentralKind::CentralTriangle: return "central_triangle";
        case CentralKind::StarAtCenter: return "star_at_center";
        case CentralKind::CentralTriangleWithStar: return "central_triangle_with_star";
    }
    throw invariant_violation("unreachable central kind");
}

ordered_json point_json(const LatticePoint& pt) {
    return ordered_json::array({pt.p, pt.q, pt.s});
}

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

GroupSpec parse_spec(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("malformed spec JSON: ") + e.what());
    }
    if (!j.is_object()) throw input_error("spec must be a JSON object");
    if (!j.contains("r") || !j["r"].is_number_integer())
        throw input_error("spec requires an integer field \"r\"");
    GroupSpec spec;
    spec.r = j["r"].get<Int>();
    if (!j.contains("generators") || !j["generators"].is_array())
        throw input_error("spec requires an array field \"generators\"");
    for (const auto& gen : j["generators"]) {
        if (!gen.is_array() || gen.size() != 3 || !gen[0].is_number_integer() ||
            !gen[1].is_number_integer() || !gen[2].is_number_integer())
            throw input_error("each generator must be a triple of integers");
        std::array<Int, 3> t{gen[0].get<Int>(), gen[1].get<Int>(), gen[2].get<Int>()};
        make_diagonal(spec.r, t[0], t[1], t[2]);  // validates range and SL condition
        spec.generators.push_back(t);
    }
    if (j.contains("label")) {
        if (!j["label"].is_string()) throw input_error("\"label\" must be a string");
        spec.label = j["label"].get<std::string>();
    }
    return spec;
}

GroupSpec load_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

DiagonalGroup group_from_spec(const GroupSpec& spec) {
    return generate_diagonal_group(spec.r, spec.generators);
}

ordered_json report_to_json(const ResolutionReport& rep) {
    ordered_json j;
    j["label"] = rep.label;
    j["r"] = rep.r;
    j["generators"] = rep.generators;
    j["group_order_Gprime"] = rep.group_order_Gprime;
    j["group_order_G"] = rep.group_order_G;
    j["group_type"] = to_string(rep.group_type);
    j["m"] = rep.m;
    j["k"] = rep.k;
    j["phi_size"] = rep.phi_size;
    j["phi1_size"] = rep.phi1_size;
    j["phi2_size"] = rep.phi2_size;
    j["g1_size"] = rep.g1_size;
    j["g2_size"] = rep.g2_size;
    j["lattice_index"] = rep.lattice_index;
    j["euler_toric"] = rep.euler_toric;
    j["euler_quotient"] = rep.euler_quotient;
    j["euler_final"] = rep.euler_final;
    j["conj_formula"] = rep.conj_formula;
    j["conj_enum"] = rep.conj_enum;
    j["orbifold_euler"] = rep.orbifold_euler;
    if (rep.oracle_classes)
        j["oracle_classes"] = *rep.oracle_classes;
    else
        j["oracle_classes"] = nullptr;
    j["triangle_count"] = rep.triangle_count;
    ordered_json c;
    c["type_consistent"] = rep.checks.type_consistent;
    c["phi_split_consistent"] = rep.checks.phi_split_consistent;
    c["lattice_index_matches"] = rep.checks.lattice_index_matches;
    c["triangulation_valid"] = rep.checks.triangulation_valid;
    c["triangle_count_matches"] = rep.checks.triangle_count_matches;
    c["crepant_toric"] = rep.checks.crepant_toric;
    c["fixed_structure_consistent"] = rep.checks.fixed_structure_consistent;
    c["euler_eq_formula"] = rep.checks.euler_eq_formula;
    c["euler_eq_enum"] = rep.checks.euler_eq_enum;
    c["euler_eq_orbifold"] = rep.checks.euler_eq_orbifold;
    if (rep.checks.oracle_classes_agree)
        c["oracle_classes_agree"] = *rep.checks.oracle_classes_agree;
    else
        c["oracle_classes_agree"] = nullptr;
    j["checks"] = c;
    j["failed_stage"] = rep.failed_stage;
    j["failure_detail"] = rep.failure_detail;
    j["notes"] = rep.notes;
    j["verified"] = rep.verified;
    return j;
}

ResolutionReport report_from_json(const ordered_json& j) {
    ResolutionReport rep;
    try {
        rep.label = j.at("label").get<std::string>();
        rep.r = j.at("r").get<Int>();
        for (const auto& g : j.at("generators"))
            rep.generators.push_back({g.at(0).get<Int>(), g.at(1).get<Int>(),
                                      g.at(2).get<Int>()});
        rep.group_order_Gprime = j.at("group_order_Gprime").get<Int>();
        rep.group_order_G = j.at("group_order_G").get<Int>();
        rep.group_type = type_from_string(j.at("group_type").get<std::string>());
        rep.m = j.at("m").get<Int>();
        rep.k = j.at("k").get<Int>();
        rep.phi_size = j.at("phi_size").get<Int>();
        rep.phi1_size = j.at("phi1_size").get<Int>();
        rep.phi2_size = j.at("phi2_size").get<Int>();
        rep.g1_size = j.at("g1_size").get<Int>();
        rep.g2_size = j.at("g2_size").get<Int>();
        rep.lattice_index = j.at("lattice_index").get<Int>();
        rep.euler_toric = j.at("euler_toric").get<Int>();
        rep.euler_quotient = j.at("euler_quotient").get<Int>();
        rep.euler_final = j.at("euler_final").get<Int>();
        rep.conj_formula = j.at("conj_formula").get<Int>();
        rep.conj_enum = j.at("conj_enum").get<Int>();
        rep.orbifold_euler = j.at("orbifold_euler").get<Int>();
        if (!j.at("oracle_classes").is_null())
            rep.oracle_classes = j.at("oracle_classes").get<Int>();
        rep.triangle_count = j.at("triangle_count").get<Int>();
        const auto& c = j.at("checks");
        rep.checks.type_consistent = c.at("type_consistent").get<bool>();
        rep.checks.phi_split_consistent = c.at("phi_split_consistent").get<bool>();
        rep.checks.lattice_index_matches = c.at("lattice_index_matches").get<bool>();
        rep.checks.triangulation_valid = c.at("triangulation_valid").get<bool>();
        rep.checks.triangle_count_matches = c.at("triangle_count_matches").get<bool>();
        rep.checks.crepant_toric = c.at("crepant_toric").get<bool>();
        rep.checks.fixed_structure_consistent =
            c.at("fixed_structure_consistent").get<bool>();
        rep.checks.euler_eq_formula = c.at("euler_eq_formula").get<bool>();
        rep.checks.euler_eq_enum = c.at("euler_eq_enum").get<bool>();
        rep.checks.euler_eq_orbifold = c.at("euler_eq_orbifold").get<bool>();
        if (!c.at("oracle_classes_agree").is_null())
            rep.checks.oracle_classes_agree = c.at("oracle_classes_agree").get<bool>();
        rep.failed_stage = j.at("failed_stage").get<std::string>();
        rep.failure_detail = j.at("failure_detail").get<std::string>();
        rep.notes = j.at("notes").get<std::string>();
        rep.verified = j.at("verified").get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("malformed report JSON: ") + e.what());
    }
    return rep;
}

std::string report_to_text(const ResolutionReport& rep) {
    std::ostringstream os;
    if (!rep.label.empty()) os << "label: " << rep.label << "\n";
    os << "generators: " << generators_str(rep.r, rep.generators) << "\n";
    os << "type: " << to_string(rep.group_type) << "  |G'|=" << rep.group_order_Gprime
       << "  |G|=" << rep.group_order_G << "  m=" << rep.m << "  k=" << rep.k << "\n";
    os << "junior points: " << rep.phi_size << " (interior " << rep.phi1_size
       << ", edge " << rep.phi2_size << "); matching group split " << rep.g1_size
       << "+" << rep.g2_size << "\n";
    os << "lattice index: " << rep.lattice_index << "\n";
    os << "triangles: " << rep.triangle_count << "\n";
    os << "euler: toric=" << rep.euler_toric << " quotient=" << rep.euler_quotient
       << " resolved=" << rep.euler_final << "\n";
    os << "classes: formula=" << rep.conj_formula << " enumerated=" << rep.conj_enum
       << " orbifold=" << rep.orbifold_euler << " oracle=";
    if (rep.oracle_classes)
        os << *rep.oracle_classes;
    else
        os << "skipped";
    os << "\n";

    const std::pair<const char*, bool> named[] = {
        {"type_consistent", rep.checks.type_consistent},
        {"phi_split_consistent", rep.checks.phi_split_consistent},
        {"lattice_index_matches", rep.checks.lattice_index_matches},
        {"triangulation_valid", rep.checks.triangulation_valid},
        {"triangle_count_matches", rep.checks.triangle_count_matches},
        {"crepant_toric", rep.checks.crepant_toric},
        {"fixed_structure_consistent", rep.checks.fixed_structure_consistent},
        {"euler_eq_formula", rep.checks.euler_eq_formula},
        {"euler_eq_enum", rep.checks.euler_eq_enum},
        {"euler_eq_orbifold", rep.checks.euler_eq_orbifold},
    };
    int total = 10, passed = 0;
    std::string failing;
    for (const auto& [name, ok] : named) {
        if (ok)
            ++passed;
        else
            failing += std::string(" ") + name;
    }
    if (rep.checks.oracle_classes_agree) {
        ++total;
        if (*rep.checks.oracle_classes_agree)
            ++passed;
        else
            failing += " oracle_classes_agree";
    }
    os << "checks: " << passed << "/" << total << " passed";
    if (!failing.empty()) os << " (failing:" << failing << ")";
    os << "\n";
    if (!rep.failed_stage.empty())
        os << "failed at stage " << rep.failed_stage << ": " << rep.failure_detail
           << "\n";
    os << "note: " << rep.notes << "\n";
    os << "chi=" << rep.euler_final << " classes=" << rep.conj_enum
       << " verified=" << (rep.verified ? "true" : "false") << "\n";
    return os.str();
}

ordered_json triangulation_to_json(const Triangulation& tri) {
    ordered_json j;
    j["denominator"] = tri.r;
    ordered_json pts = ordered_json::array();
    for (const auto& p : tri.points) pts.push_back(point_json(p));
    j["points"] = pts;
    j["triangles"] = tri.triangles;
    j["orbits"] = tri.orbits;
    ordered_json central;
    central["kind"] = central_kind_str(tri.central.kind);
    central["apex"] = tri.central.apex ? point_json(*tri.central.apex)
                                       : ordered_json(nullptr);
    central["center"] = tri.central.center ? point_json(*tri.central.center)
                                           : ordered_json(nullptr);
    j["central"] = central;
    return j;
}

std::string triangulation_to_svg(const Triangulation& tri) {
    // Equilateral barycentric frame: e1 bottom-left, e2 bottom-right, e3 top.
    const double ax = 40, ay = 560, bx = 600, by = 560;
    const double cx = 320, cy = 560 - 560 * std::sqrt(3.0) / 2.0;
    const double r = static_cast<double>(tri.r);
    auto px = [&](const LatticePoint& p) {
        return (static_cast<double>(p.p) * ax + static_cast<double>(p.q) * bx +
                static_cast<double>(p.s) * cx) / r;
    };
    auto py = [&](const LatticePoint& p) {
        return (static_cast<double>(p.p) * ay + static_cast<double>(p.q) * by +
                static_cast<double>(p.s) * cy) / r;
    };

    // Highlighted faces: the rotation-fixed triangle (type I) or the star
    // triangles at the fixed center vertex (type II).
    std::vector<bool> highlight(tri.triangles.size(), false);
    for (const auto& orbit : tri.orbits)
        if (orbit.size() == 1) highlight[static_cast<std::size_t>(orbit[0])] = true;
    int center_idx = -1;
    if (tri.central.center) {
        for (std::size_t i = 0; i < tri.points.size(); ++i)
            if (tri.points[i] == *tri.central.center)
                center_idx = static_cast<int>(i);
        for (std::size_t t = 0; t < tri.triangles.size(); ++t)
            for (int v : tri.triangles[t])
                if (v == center_idx) highlight[t] = true;
    }

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"620\" "
          "viewBox=\"0 0 640 620\">\n";
    os << "<rect width=\"640\" height=\"620\" fill=\"#ffffff\"/>\n";
    for (std::size_t t = 0; t < tri.triangles.size(); ++t) {
        os << "<polygon points=\"";
        for (int e = 0; e < 3; ++e) {
            const auto& p = tri.points[static_cast<std::size_t>(tri.triangles[t][e])];
            if (e) os << " ";
            os << fmt2(px(p)) << "," << fmt2(py(p));
        }
        os << "\" fill=\"" << (highlight[t] ? "#f2c14e" : "#d7e7f5")
           << "\" stroke=\"#3b4b5a\" stroke-width=\"1.2\"/>\n";
    }
    for (std::size_t i = 0; i < tri.points.size(); ++i) {
        const auto& p = tri.points[i];
        const bool is_center = static_cast<int>(i) == center_idx;
        os << "<circle cx=\"" << fmt2(px(p)) << "\" cy=\"" << fmt2(py(p))
           << "\" r=\"" << (is_center ? "6" : "4") << "\" fill=\""
           << (is_center ? "#c0392b" : "#22303c") << "\"/>\n";
    }
    const char* corner_label[3] = {"e1", "e2", "e3"};
    const double dx[3] = {-26, 10, -8};
    const double dy[3] = {16, 16, -12};
    for (int i = 0; i < 3; ++i) {
        const LatticePoint corner = simplex_corner(i, tri.r);
        os << "<text x=\"" << fmt2(px(corner) + dx[i]) << "\" y=\""
           << fmt2(py(corner) + dy[i])
           << "\" font-family=\"sans-serif\" font-size=\"16\" fill=\"#22303c\">"
           << corner_label[i] << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace trihedral
