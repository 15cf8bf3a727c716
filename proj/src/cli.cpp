#include "sperm/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "sperm/geometry.hpp"
#include "sperm/json_io.hpp"
#include "sperm/nu_tamari.hpp"
#include "sperm/sweeps.hpp"

namespace sperm {

namespace {

struct CliOptions {
    std::string s_text;
    std::string path_text;
    std::string format = "plain";
    std::string method = "both";
    std::string out_path;
    std::string scene_path;
    std::string face1, face2;
    std::int64_t max_trees = 100000;
    int threads = 0;
    int narayana_k = -1;
    bool json = false;
    bool table = false;
    bool tamari = false;
};

std::ostream& sink(const CliOptions& opt, std::ofstream& file, std::ostream& fallback) {
    if (opt.out_path.empty()) return fallback;
    file.open(opt.out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + opt.out_path);
    return file;
}

int effective_threads(const CliOptions& opt) {
    if (opt.threads > 0) return opt.threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string check_line(const CheckResult& c) {
    return std::string(c.pass ? "pass" : "FAIL") + "  " + c.name +
           (c.details.empty() ? "" : "  (" + c.details + ")");
}

std::string report_json(const WeakComposition& s, const std::vector<CheckResult>& checks) {
    std::ostringstream out;
    out << "{\"s\":[";
    for (int i = 1; i <= s.length(); ++i) out << (i > 1 ? "," : "") << s(i);
    out << "],\"pass\":";
    bool all = true;
    for (const auto& c : checks) all = all && c.pass;
    out << (all ? "true" : "false") << ",\"checks\":[";
    for (size_t i = 0; i < checks.size(); ++i) {
        out << (i ? "," : "") << "{\"name\":\"" << checks[i].name << "\",\"pass\":"
            << (checks[i].pass ? "true" : "false") << ",\"details\":\"" << checks[i].details
            << "\"}";
    }
    out << "]}";
    return out.str();
}

int run_table(const CliOptions& opt, std::ostream& out) {
    bool all_ok = true;
    for (const ReferenceFPolynomial& row : reference_f_polynomials()) {
        const IntPolynomial recursive = f_polynomial_recursive(row.s);
        const IntPolynomial direct = f_polynomial_direct(row.s, INT64_MAX / 2, effective_threads(opt));
        const bool ok = recursive == row.f && direct == row.f;
        all_ok = all_ok && ok;
        out << (ok ? "pass" : "FAIL") << "  f(" << row.s.to_string() << ") = " << row.f.to_string()
            << "\n";
    }
    return all_ok ? 0 : 1;
}

int run_verify_complex(const CliOptions& opt, const WeakComposition& s, std::ostream& out) {
    const ComplexReport report = verify_complex(s, opt.max_trees, effective_threads(opt));
    std::vector<CheckResult> checks;
    std::string dims;
    for (size_t d = 0; d < report.faces_by_dimension.size(); ++d)
        dims += (d ? "," : "") + std::to_string(report.faces_by_dimension[d]);
    checks.push_back(CheckResult{"faces-enumerated", true, dims});
    checks.push_back(CheckResult{"subface-closure", report.violations.empty(),
                                 std::to_string(report.subfaces_checked) + " subfaces"});
    checks.push_back(CheckResult{"pairwise-intersections", report.violations.empty(),
                                 std::to_string(report.pairs_checked) + " pairs"});
    for (const std::string& v : report.violations)
        checks.push_back(CheckResult{"violation", false, v});
    if (opt.json) {
        out << report_json(s, checks) << "\n";
    } else {
        for (const auto& c : checks) out << check_line(c) << "\n";
    }
    return report.passed() ? 0 : 1;
}

int run_verify_realization(const CliOptions& opt, const WeakComposition& s, std::ostream& out) {
    const RealizationReport report = [&]() {
        if (opt.tamari) return associahedron_realization(s, opt.max_trees).report;
        if (s.length() == 3)
            return verify_realization(realize_2d(s, opt.max_trees), effective_threads(opt));
        if (s.length() == 4)
            return verify_realization(realize_3d(s, opt.max_trees), effective_threads(opt));
        throw CLI::ValidationError("--s", "realizations exist for lengths 3 and 4 only");
    }();
    if (opt.json) {
        out << report_json(s, report.checks) << "\n";
    } else {
        for (const auto& c : report.checks) out << check_line(c) << "\n";
    }
    return report.passed() ? 0 : 1;
}

int run_verify_iso(const CliOptions& opt, const WeakComposition& s, std::ostream& out) {
    const IsoReport report = verify_isomorphism(s, opt.max_trees);
    std::vector<CheckResult> checks;
    checks.push_back(CheckResult{"tree-bijection", true, std::to_string(report.trees_matched) + " trees"});
    checks.push_back(CheckResult{"face-bijection", report.violations.empty(),
                                 std::to_string(report.faces_matched) + " faces"});
    for (const std::string& v : report.violations)
        checks.push_back(CheckResult{"violation", false, v});
    if (opt.json) {
        out << report_json(s, checks) << "\n";
    } else {
        for (const auto& c : checks) out << check_line(c) << "\n";
    }
    return report.passed() ? 0 : 1;
}

void run_hasse(const CliOptions& opt, const WeakComposition& s, std::ostream& out) {
    const HasseDiagram diagram = hasse_diagram(s, opt.max_trees);
    if (opt.format == "dot") {
        out << "digraph hasse {\n";
        for (size_t i = 0; i < diagram.vertices.size(); ++i)
            out << "  v" << i << " [label=\"" << diagram.vertices[i].to_string() << "\"];\n";
        for (const HasseEdge& e : diagram.edges)
            out << "  v" << e.from << " -> v" << e.to << " [label=\"(" << e.ascent.a << ","
                << e.ascent.c << ")\"];\n";
        out << "}\n";
    } else if (opt.format == "json") {
        out << "{\"s\":[";
        for (int i = 1; i <= s.length(); ++i) out << (i > 1 ? "," : "") << s(i);
        out << "],\"vertices\":[";
        for (size_t i = 0; i < diagram.vertices.size(); ++i)
            out << (i ? "," : "") << "\"" << diagram.vertices[i].to_string() << "\"";
        out << "],\"edges\":[";
        for (size_t i = 0; i < diagram.edges.size(); ++i)
            out << (i ? "," : "") << "[" << diagram.edges[i].from << "," << diagram.edges[i].to
                << "]";
        out << "]}\n";
    } else {
        out << diagram.vertices.size() << " vertices, " << diagram.edges.size() << " edges\n";
    }
}

void run_nu_lattice(const CliOptions& opt, std::ostream& out) {
    const LatticePath path(opt.path_text);
    const NuLattice lattice = nu_lattice(path);
    auto node_text = [&](const NuTree& t) {
        std::string s;
        for (const GridPoint& p : t.nodes)
            s += "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
        return s;
    };
    if (opt.format == "dot") {
        out << "digraph nu {\n";
        for (size_t i = 0; i < lattice.trees.size(); ++i)
            out << "  v" << i << " [label=\"" << node_text(lattice.trees[i]) << "\"];\n";
        for (auto [from, to] : lattice.edges) out << "  v" << from << " -> v" << to << ";\n";
        out << "}\n";
    } else if (opt.format == "json") {
        out << "{\"path\":\"" << path.steps() << "\",\"vertices\":[";
        for (size_t i = 0; i < lattice.trees.size(); ++i) {
            out << (i ? "," : "") << "[";
            for (size_t j = 0; j < lattice.trees[i].nodes.size(); ++j)
                out << (j ? "," : "") << "[" << lattice.trees[i].nodes[j].x << ","
                    << lattice.trees[i].nodes[j].y << "]";
            out << "]";
        }
        out << "],\"edges\":[";
        for (size_t i = 0; i < lattice.edges.size(); ++i)
            out << (i ? "," : "") << "[" << lattice.edges[i].first << "," << lattice.edges[i].second
                << "]";
        out << "]}\n";
    } else {
        out << lattice.trees.size() << " vertices, " << lattice.edges.size() << " edges\n";
    }
}

int run_realize(const CliOptions& opt, const WeakComposition& s, std::ostream& out,
                std::ostream& err) {
    if (s.length() == 3) {
        GeometricComplex complex =
            opt.tamari ? associahedron_realization(s, opt.max_trees).complex
                       : realize_2d(s, opt.max_trees);
        std::ofstream file;
        export_svg(complex, sink(opt, file, out));
        return 0;
    }
    if (s.length() == 4) {
        GeometricComplex complex =
            opt.tamari ? associahedron_realization(s, opt.max_trees).complex
                       : realize_3d(s, opt.max_trees);
        if (!opt.out_path.empty()) {
            std::ofstream obj(opt.out_path, std::ios::binary);
            if (!obj) throw std::runtime_error("cannot open output file: " + opt.out_path);
            export_obj(complex, obj);
        }
        if (!opt.scene_path.empty()) {
            std::ofstream scene(opt.scene_path, std::ios::binary);
            if (!scene) throw std::runtime_error("cannot open scene file: " + opt.scene_path);
            export_scene_json(complex, scene);
        }
        if (opt.out_path.empty() && opt.scene_path.empty()) export_scene_json(complex, out);
        return 0;
    }
    err << "realizations exist for lengths 3 and 4 only\n";
    return 2;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"s-permutahedron and s-associahedron toolkit"};
    app.require_subcommand(1);
    CliOptions opt;
    if (const char* env = std::getenv("SPERM_MAX_TREES")) {
        try {
            opt.max_trees = std::stoll(env);
        } catch (...) {
            err << "bad SPERM_MAX_TREES value\n";
            return 2;
        }
    }

    auto add_common = [&](CLI::App* cmd, bool needs_s) {
        if (needs_s) cmd->add_option("--s", opt.s_text, "weak composition, e.g. 0,2,2")->required();
        cmd->add_option("--max-trees", opt.max_trees, "enumeration size bound");
        cmd->add_option("--threads", opt.threads, "worker threads (default: cores)");
        cmd->add_option("--out", opt.out_path, "write output to a file");
        cmd->add_flag("--json", opt.json, "machine-readable report");
    };

    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "list all trees");
    add_common(enumerate_cmd, true);
    CLI::App* fpoly_cmd = app.add_subcommand("fpoly", "face polynomial");
    add_common(fpoly_cmd, false);
    fpoly_cmd->add_option("--s", opt.s_text, "weak composition");
    fpoly_cmd->add_option("--method", opt.method, "direct|recursive|both");
    fpoly_cmd->add_flag("--table", opt.table, "replay the reference table");
    CLI::App* tamari_fpoly_cmd = app.add_subcommand("tamari-fpoly", "face polynomial of the Tamari complex");
    add_common(tamari_fpoly_cmd, true);
    CLI::App* catalan_cmd = app.add_subcommand("catalan", "number of s-Tamari trees");
    add_common(catalan_cmd, true);
    CLI::App* narayana_cmd = app.add_subcommand("narayana", "Tamari trees by ascent count");
    add_common(narayana_cmd, true);
    narayana_cmd->add_option("--k", opt.narayana_k, "ascent count (all when omitted)");
    CLI::App* hasse_cmd = app.add_subcommand("hasse", "cover-relation graph");
    add_common(hasse_cmd, true);
    hasse_cmd->add_option("--format", opt.format, "plain|json|dot");
    CLI::App* faces_cmd = app.add_subcommand("faces", "pure intervals");
    add_common(faces_cmd, true);
    faces_cmd->add_option("--format", opt.format, "plain|json");
    CLI::App* intersect_cmd = app.add_subcommand("intersect", "intersect two faces");
    intersect_cmd->add_option("--face1", opt.face1, "face JSON")->required();
    intersect_cmd->add_option("--face2", opt.face2, "face JSON")->required();
    intersect_cmd->add_option("--out", opt.out_path, "write output to a file");
    CLI::App* verify_complex_cmd = app.add_subcommand("verify-complex", "face-of-face and intersection checks");
    add_common(verify_complex_cmd, true);
    CLI::App* nu_cmd = app.add_subcommand("nu-lattice", "nu-Tamari lattice of a path");
    nu_cmd->add_option("--path", opt.path_text, "N/E path, e.g. NEENEEN")->required();
    nu_cmd->add_option("--format", opt.format, "plain|json|dot");
    nu_cmd->add_option("--out", opt.out_path, "write output to a file");
    CLI::App* realize_cmd = app.add_subcommand("realize", "geometric realization export");
    add_common(realize_cmd, true);
    realize_cmd->add_option("--scene", opt.scene_path, "scene JSON output (length 4)");
    realize_cmd->add_flag("--tamari", opt.tamari, "restrict to the Tamari subcomplex");
    CLI::App* verify_realization_cmd = app.add_subcommand("verify-realization", "subdivision checks");
    add_common(verify_realization_cmd, true);
    verify_realization_cmd->add_flag("--tamari", opt.tamari, "check the Tamari subcomplex");
    CLI::App* verify_iso_cmd = app.add_subcommand("verify-iso", "Tamari / nu-Tamari isomorphism");
    add_common(verify_iso_cmd, true);
    CLI::App* table_cmd = app.add_subcommand("table", "replay the reference f-polynomials");
    table_cmd->add_option("--threads", opt.threads, "worker threads");
    table_cmd->add_option("--out", opt.out_path, "write output to a file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    std::ofstream out_file;
    try {
        if (table_cmd->parsed()) return run_table(opt, sink(opt, out_file, out));

        if (intersect_cmd->parsed()) {
            const PureInterval f1 = face_from_json(opt.face1);
            const PureInterval f2 = face_from_json(opt.face2);
            std::ostream& o = sink(opt, out_file, out);
            if (auto result = intersect(f1, f2))
                o << face_to_json(*result) << "\n";
            else
                o << "empty\n";
            return 0;
        }

        if (nu_cmd->parsed()) {
            std::ofstream file;
            run_nu_lattice(opt, sink(opt, file, out));
            return 0;
        }

        if (fpoly_cmd->parsed() && opt.table) return run_table(opt, sink(opt, out_file, out));
        if (fpoly_cmd->parsed() && opt.s_text.empty())
            throw CLI::ValidationError("--s", "composition required");

        const WeakComposition s = WeakComposition::parse(opt.s_text);

        if (enumerate_cmd->parsed()) {
            std::ostream& o = sink(opt, out_file, out);
            for (const SDecreasingTree& tree : enumerate_trees(s, opt.max_trees))
                o << tree.to_string() << "\n";
            return 0;
        }
        if (fpoly_cmd->parsed()) {
            std::ostream& o = sink(opt, out_file, out);
            if (opt.method == "direct") {
                o << f_polynomial_direct(s, opt.max_trees, effective_threads(opt)).to_string() << "\n";
            } else if (opt.method == "recursive") {
                o << f_polynomial_recursive(s).to_string() << "\n";
            } else if (opt.method == "both") {
                const IntPolynomial direct = f_polynomial_direct(s, opt.max_trees, effective_threads(opt));
                const IntPolynomial recursive = f_polynomial_recursive(s);
                if (direct != recursive) {
                    err << "direct and recursive computations disagree\n";
                    return 1;
                }
                o << direct.to_string() << "\n";
            } else {
                throw CLI::ValidationError("--method", "expected direct|recursive|both");
            }
            return 0;
        }
        if (tamari_fpoly_cmd->parsed()) {
            sink(opt, out_file, out) << f_polynomial_tamari(s, opt.max_trees).to_string() << "\n";
            return 0;
        }
        if (catalan_cmd->parsed()) {
            sink(opt, out_file, out) << s_catalan(s, opt.max_trees) << "\n";
            return 0;
        }
        if (narayana_cmd->parsed()) {
            std::ostream& o = sink(opt, out_file, out);
            if (opt.narayana_k >= 0) {
                o << s_narayana(s, opt.narayana_k, opt.max_trees) << "\n";
            } else {
                std::string line;
                for (int k = 0; k < s.length(); ++k) {
                    const std::int64_t count = s_narayana(s, k, opt.max_trees);
                    if (count == 0 && k > 0) break;
                    line += (k ? " " : "") + std::to_string(count);
                }
                o << line << "\n";
            }
            return 0;
        }
        if (hasse_cmd->parsed()) {
            std::ofstream file;
            run_hasse(opt, s, sink(opt, file, out));
            return 0;
        }
        if (faces_cmd->parsed()) {
            std::ostream& o = sink(opt, out_file, out);
            const FaceSet faces = enumerate_faces(s, opt.max_trees);
            if (opt.format == "json") {
                o << "[";
                for (size_t i = 0; i < faces.faces.size(); ++i)
                    o << (i ? "," : "") << face_to_json(faces.faces[i]);
                o << "]\n";
            } else {
                std::string counts;
                for (size_t d = 0; d < faces.count_by_dimension.size(); ++d)
                    counts += (d ? " " : "") + std::to_string(faces.count_by_dimension[d]);
                o << counts << "\n";
            }
            return 0;
        }
        if (verify_complex_cmd->parsed()) return run_verify_complex(opt, s, sink(opt, out_file, out));
        if (verify_realization_cmd->parsed())
            return run_verify_realization(opt, s, sink(opt, out_file, out));
        if (verify_iso_cmd->parsed()) return run_verify_iso(opt, s, sink(opt, out_file, out));
        if (realize_cmd->parsed()) return run_realize(opt, s, out, err);
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const SizeBoundExceeded& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "unknown command\n";
    return 2;
}

} // namespace sperm
