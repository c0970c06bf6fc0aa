#include "coxspec/cli.hpp"

#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "coxspec/io.hpp"

namespace coxspec::cli {

namespace {

using io::json;

std::string curves_summary(const CurveSet& curves) {
    if (curves.empty()) return "(empty)";
    std::string out;
    for (const auto& [curve, mult] : curves) {
        if (!out.empty()) out += ", ";
        out += curve.to_string();
        if (mult != 1) out += " x" + std::to_string(mult);
    }
    return out;
}

std::string kernel_names(const std::vector<DihedralElement>& kernel) {
    std::string out;
    for (const auto& w : kernel) {
        if (!out.empty()) out += ", ";
        out += w.to_string();
    }
    return out;
}

void print_matrix(const CoxeterMatrix& m, std::ostream& out) {
    for (int i = 0; i < m.rank; ++i) {
        std::string line;
        for (int j = 0; j < m.rank; ++j) {
            if (j) line += " ";
            line += std::to_string(m.m[i][j]);
        }
        out << line << "\n";
    }
}

// F of a labeled representation via the product identity: the determinant of
// the assembled pencil equals prod curve_poly^mult exactly.
BiPoly spec_polynomial(const RepSpec& spec) {
    BiPoly f = BiPoly::constant(Rational(1));
    for (const auto& [curve, mult] : spectrum_of_spec(spec)) {
        BiPoly p = curve_poly(curve);
        for (int t = 0; t < mult; ++t) f = f * p;
    }
    return f;
}

int cmd_catalog(int n, int max_order, const std::string& format, std::ostream& out) {
    if (n < 2 || n > max_order)
        throw input_error("catalog parameter n must satisfy 2 <= n <= " +
                          std::to_string(max_order));
    std::vector<IrrepLabel> labels = catalog_labels(n);
    if (format == "json") {
        json rows = json::array();
        for (const IrrepLabel& label : labels) {
            std::vector<DihedralElement> kernel = irrep_kernel(n, label);
            Curve curve = irrep_curve(n, label);
            json row;
            row["label"] = label.dim == 1 ? json{{"dim", 1}, {"j", label.index}}
                                          : json{{"dim", 2}, {"k", label.index}};
            row["dimension"] = label.dim;
            if (curve.is_line())
                row["curve"] = json{{"type", "line"}, {"code", line_code_name(curve.code())}};
            else
                row["curve"] = json{{"type", "ellipse"}, {"num", curve.num()}, {"den", curve.den()}};
            row["curve_poly"] = curve_poly(curve).to_text();
            json kj = json::array();
            for (const auto& w : kernel) kj.push_back(w.to_string());
            row["kernel"] = std::move(kj);
            row["kernel_order"] = kernel.size();
            row["image_order"] = 2 * n / static_cast<int>(kernel.size());
            rows.push_back(std::move(row));
        }
        out << io::dump(json{{"n", n}, {"order", 2 * n}, {"irreducibles", std::move(rows)}});
        return 0;
    }
    out << "catalog W(I2(" << n << ")): |W| = " << 2 * n << ", " << one_dim_count(n)
        << " one-dimensional + " << two_dim_count(n) << " two-dimensional irreducibles\n";
    for (const IrrepLabel& label : labels) {
        std::vector<DihedralElement> kernel = irrep_kernel(n, label);
        Curve curve = irrep_curve(n, label);
        out << label.to_string() << "  dim " << label.dim << "  curve: "
            << curve_poly(curve).to_text() << " = 0  kernel order " << kernel.size() << ": {"
            << kernel_names(kernel) << "}  image order " << 2 * n / kernel.size() << "\n";
    }
    return 0;
}

struct LoadedRep {
    bool is_spec = false;
    RepSpec spec;
    MatrixRep matrices;
};

LoadedRep load_rep_file(const std::string& path) {
    json j = io::load_json_file(path);
    LoadedRep rep;
    if (j.contains("group")) {
        rep.is_spec = true;
        rep.spec = io::repspec_from_json(j);
    } else if (j.contains("generators")) {
        rep.matrices = io::matrixrep_from_json(j);
    } else {
        throw input_error("file is neither a representation spec nor a matrix representation");
    }
    return rep;
}

void check_pair(const std::vector<int>& pair, int count) {
    if (pair.size() != 2 || pair[0] < 0 || pair[1] >= count || pair[0] >= pair[1])
        throw input_error("--pair needs indices 0 <= i < j < " + std::to_string(count));
}

int cmd_spectrum(const std::string& path, std::vector<int> pair, int max_order,
                 const std::string& out_path, const std::string& format, std::ostream& out) {
    LoadedRep rep = load_rep_file(path);
    CurveSet curves;
    BiPoly f;
    std::pair<int, int> key{0, 1};
    std::string headline;
    if (rep.is_spec) {
        curves = spectrum_of_spec(rep.spec);
        f = spec_polynomial(rep.spec);
        headline = "group: W(I2(" + std::to_string(rep.spec.n) + "))";
    } else {
        if (pair.empty()) pair = {0, 1};
        check_pair(pair, static_cast<int>(rep.matrices.generators.size()));
        key = {pair[0], pair[1]};
        PairSpectrum ps = spectrum_of_matrices(rep.matrices.generators[pair[0]],
                                               rep.matrices.generators[pair[1]], max_order);
        curves = ps.curves;
        f = ps.f;
        headline = "pair (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                   "): product order " + std::to_string(ps.product_order);
    }
    std::map<std::pair<int, int>, CurveSet> pairs{{key, curves}};
    json cj = io::curvesets_to_json(pairs);
    if (format == "json") {
        json j = cj;
        j["f"] = f.to_text();
        out << io::dump(j);
    } else {
        out << headline << "\n";
        out << "F = " << f.to_text() << "\n";
        out << "curves: " << curves_summary(curves) << "\n";
    }
    if (!out_path.empty()) io::save_json_file(out_path, cj);
    return 0;
}

void print_verdict(const FaithfulnessVerdict& v, const std::string& tag, std::ostream& out) {
    out << tag << ": " << (v.faithful ? "faithful" : "not faithful") << ", kernel order "
        << v.kernel_size;
    if (v.witness) out << ", witness " << v.witness->to_string();
    out << "\n";
}

int cmd_faithful(const std::string& path, bool with_oracle, std::vector<int> pair, int group_n,
                 int max_order, const std::string& format, std::ostream& out) {
    LoadedRep rep = load_rep_file(path);
    FaithfulnessVerdict primary, secondary;
    bool have_secondary = false;
    if (rep.is_spec) {
        primary = is_faithful_theorem(rep.spec);
        if (with_oracle) {
            secondary = is_faithful_oracle(rep.spec);
            have_secondary = true;
        }
    } else {
        if (pair.empty()) pair = {0, 1};
        check_pair(pair, static_cast<int>(rep.matrices.generators.size()));
        const CycMatrix& a = rep.matrices.generators[pair[0]];
        const CycMatrix& b = rep.matrices.generators[pair[1]];
        primary = is_faithful_matrices(a, b, max_order, group_n);
        if (with_oracle) {
            // decompose against the same ambient group, then apply the theorem
            int n = group_n > 0 ? group_n : std::max(ord_of_product(a, b, max_order), 2);
            secondary = is_faithful_theorem(decompose(a, b, n));
            have_secondary = true;
        }
    }
    if (format == "json") {
        json j{{"verdict", io::verdict_to_json(primary)}};
        if (have_secondary) j["cross_check"] = io::verdict_to_json(secondary);
        out << io::dump(j);
    } else {
        print_verdict(primary, rep.is_spec ? "theorem" : "matrices", out);
        if (have_secondary) print_verdict(secondary, rep.is_spec ? "oracle" : "theorem", out);
    }
    if (have_secondary && primary.faithful != secondary.faithful)
        throw math_error("faithfulness methods disagree");
    return 0;
}

int cmd_reconstruct(const std::string& path, bool strict, const std::string& out_path,
                    const std::string& format, std::ostream& out) {
    auto pairs = io::curvesets_from_json(io::load_json_file(path));
    int rank = 1;  // inferred: the largest index present plus one
    for (const auto& [key, curves] : pairs) rank = std::max(rank, key.second + 1);
    ReconstructionReport rpt = reconstruct_matrix(pairs, rank, strict);
    if (format == "json") {
        out << io::dump(io::reconstruction_to_json(rpt));
    } else {
        out << "reconstructed Coxeter matrix (rank " << rank << "):\n";
        print_matrix(rpt.matrix, out);
        for (const auto& [key, rec] : rpt.per_pair)
            out << "pair (" << key.first << "," << key.second << "): case " << rec.case_id
                << ", theta " << rec.theta << ", m " << rec.m << "\n";
    }
    if (!out_path.empty()) io::save_json_file(out_path, io::reconstruction_to_json(rpt));
    return 0;
}

int cmd_geom(const std::string& path, const std::string& out_path, std::ostream& out) {
    CoxeterMatrix cm = io::coxeter_from_json(io::load_json_file(path));
    MatrixRep rep = geometric_representation(cm);
    json j = io::matrixrep_to_json(rep);
    if (!out_path.empty()) {
        io::save_json_file(out_path, j);
        out << "geometric representation of rank " << cm.rank << " written to " << out_path
            << "\n";
    } else {
        out << io::dump(j);
    }
    return 0;
}

int cmd_roundtrip(const std::string& path, int max_order, std::ostream& out) {
    CoxeterMatrix cm = io::coxeter_from_json(io::load_json_file(path));
    for (int i = 0; i < cm.rank; ++i)
        for (int j = i + 1; j < cm.rank; ++j)
            if (cm.m[i][j] > max_order)
                throw input_error("bond " + std::to_string(cm.m[i][j]) +
                                  " exceeds --max-order " + std::to_string(max_order));
    MatrixRep rep = geometric_representation(cm);
    AnalysisReport rpt = analyze(rep, max_order);
    out << "input matrix:\n";
    print_matrix(cm, out);
    out << "reconstructed matrix:\n";
    print_matrix(rpt.matrix, out);
    for (const auto& [key, pa] : rpt.pairs)
        out << "pair (" << key.first << "," << key.second << "): m = " << pa.rec.m
            << ", faithful, curves: " << curves_summary(pa.curves) << "\n";
    if (!(rpt.matrix == cm)) {
        out << "round trip: MISMATCH\n";
        return 3;
    }
    out << "round trip: ok\n";
    return 0;
}

int cmd_selftest(int max_n, int max_rank, int max_order, std::ostream& out) {
    if (max_n < 2 || max_rank < 2) throw input_error("selftest bounds must be >= 2");
    // theorem vs oracle on every support spec
    long long checked = 0;
    for (int n = 2; n <= max_n; ++n) {
        for (const RepSpec& spec : all_support_specs(n, 4)) {
            FaithfulnessVerdict t = is_faithful_theorem(spec);
            FaithfulnessVerdict o = is_faithful_oracle(spec);
            ++checked;
            if (t.faithful != o.faithful || t.kernel_size != o.kernel_size) {
                out << "equivalence failure: " << io::dump(io::repspec_to_json(spec));
                return 3;
            }
        }
    }
    out << "faithfulness theorem vs oracle: " << checked << " specs, 0 disagreements\n";

    // determinant product identity
    long long identities = 0;
    for (int n = 2; n <= std::min(max_n, 12); ++n) {
        for (const RepSpec& spec : all_specs_with_mults(n, 3, 2)) {
            BiPoly det = det_pencil(PolyMatrix::pencil(assemble(spec).generators[0],
                                                       assemble(spec).generators[1]));
            if (!(det == spec_polynomial(spec))) {
                out << "product identity failure: " << io::dump(io::repspec_to_json(spec));
                return 3;
            }
            ++identities;
        }
    }
    out << "determinant product identity: " << identities << " assembled specs, all exact\n";

    // reconstruction soundness on faithful supports
    long long recovered = 0;
    for (int n = 2; n <= max_n; ++n) {
        for (const RepSpec& spec : all_support_specs(n, 4)) {
            if (!is_faithful_theorem(spec).faithful) continue;
            CurveSet curves = spectrum_of_spec(spec);
            if (reconstruct_order(curves).m != n) {
                out << "reconstruction failure: " << io::dump(io::repspec_to_json(spec));
                return 3;
            }
            // multiplicities never matter
            RepSpec scaled = spec;
            for (auto& [label, mult] : scaled.terms) mult *= 3;
            if (reconstruct_order(spectrum_of_spec(scaled)).m != n) {
                out << "multiplicity sensitivity: " << io::dump(io::repspec_to_json(scaled));
                return 3;
            }
            ++recovered;
        }
    }
    out << "reconstruction soundness: " << recovered << " faithful specs, all bonds recovered\n";

    // geometric round trips
    DetRng rng(20240 + max_rank);
    long long trips = 0;
    for (int rank = 2; rank <= max_rank; ++rank) {
        for (int t = 0; t < 3; ++t) {
            CoxeterMatrix cm = random_coxeter(rng, rank, 2, std::min(8, max_order));
            AnalysisReport rpt = analyze(geometric_representation(cm), max_order);
            if (!(rpt.matrix == cm)) {
                out << "round-trip failure:\n";
                print_matrix(cm, out);
                return 3;
            }
            ++trips;
        }
    }
    out << "geometric round trips: " << trips << " matrices, all reconstructed\n";
    out << "selftest: PASS\n";
    return 0;
}

int cmd_plot(const std::string& path, std::vector<int> pair, double range,
             const std::string& out_path, std::ostream& out) {
    auto pairs = io::curvesets_from_json(io::load_json_file(path));
    CurveSet curves;
    if (pairs.empty()) {
        // axes only
    } else if (pair.empty()) {
        if (pairs.size() != 1)
            throw input_error("file contains several pairs; select one with --pair i j");
        curves = pairs.begin()->second;
    } else {
        check_pair(pair, 1 << 20);
        auto it = pairs.find({pair[0], pair[1]});
        if (it == pairs.end()) throw input_error("requested pair not present in the file");
        curves = it->second;
    }
    if (!(range > 1.0)) throw input_error("--range must be > 1");
    std::ofstream file(out_path);
    if (!file) throw input_error("cannot write file: " + out_path);
    emit_svg(curves, range, file);
    out << "wrote " << out_path << "\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact proper joint spectra of Coxeter group representations"};
    app.require_subcommand(1);
    int max_order = 64;
    std::string format = "text";
    app.add_option("--max-order", max_order, "bound for product-order detection")
        ->capture_default_str();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto* catalog = app.add_subcommand("catalog", "irreducible catalog of W(I2(n))");
    int cat_n = 0;
    catalog->add_option("n", cat_n, "dihedral parameter")->required();

    auto* spectrum = app.add_subcommand("spectrum", "proper joint spectrum of a representation");
    std::string spec_file, spec_out;
    std::vector<int> spec_pair;
    spectrum->add_option("file", spec_file, "RepSpec or MatrixRep JSON file")->required();
    spectrum->add_option("--pair", spec_pair, "generator pair i j")->expected(2);
    spectrum->add_option("--out", spec_out, "write the curve set JSON here");

    auto* faithful = app.add_subcommand("faithful", "decide faithfulness");
    std::string faith_file;
    std::vector<int> faith_pair;
    bool faith_oracle = false;
    int faith_group_n = 0;
    faithful->add_option("file", faith_file, "RepSpec or MatrixRep JSON file")->required();
    faithful->add_flag("--oracle", faith_oracle, "also run the brute-force kernel oracle");
    faithful->add_option("--pair", faith_pair, "generator pair i j")->expected(2);
    faithful->add_option("--group-n", faith_group_n,
                         "judge against the dihedral group of this parameter");

    auto* reconstruct = app.add_subcommand("reconstruct", "Coxeter matrix from curve sets");
    std::string rec_file, rec_out;
    bool rec_strict = false;
    reconstruct->add_option("file", rec_file, "curve set JSON file")->required();
    reconstruct->add_flag("--strict", rec_strict, "require realizability by a faithful rep");
    reconstruct->add_option("--out", rec_out, "write the matrix JSON here");

    auto* geom = app.add_subcommand("geom", "geometric (reflection) representation");
    std::string geom_file, geom_out;
    geom->add_option("file", geom_file, "Coxeter matrix JSON file")->required();
    geom->add_option("--out", geom_out, "write the MatrixRep JSON here");

    auto* roundtrip = app.add_subcommand("roundtrip", "geom -> analyze -> compare");
    std::string rt_file;
    roundtrip->add_option("file", rt_file, "Coxeter matrix JSON file")->required();

    auto* selftest = app.add_subcommand("selftest", "exhaustive verification sweeps");
    int st_max_n = 12, st_max_rank = 3;
    selftest->add_option("--max-n", st_max_n, "largest dihedral parameter")
        ->capture_default_str();
    selftest->add_option("--max-rank", st_max_rank, "largest Coxeter rank")
        ->capture_default_str();

    auto* plot = app.add_subcommand("plot", "render a curve set as SVG");
    std::string plot_file, plot_out = "plot.svg";
    std::vector<int> plot_pair;
    double plot_range = 4.0;
    plot->add_option("file", plot_file, "curve set JSON file")->required();
    plot->add_option("--range", plot_range, "half-width of the plotted square")
        ->capture_default_str();
    plot->add_option("--out", plot_out, "output SVG path")->capture_default_str();
    plot->add_option("--pair", plot_pair, "generator pair i j")->expected(2);

    std::vector<std::string> argv_store;
    argv_store.push_back("coxspec");
    for (const auto& a : args) argv_store.push_back(a);
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (catalog->parsed()) return cmd_catalog(cat_n, max_order, format, out);
        if (spectrum->parsed())
            return cmd_spectrum(spec_file, spec_pair, max_order, spec_out, format, out);
        if (faithful->parsed())
            return cmd_faithful(faith_file, faith_oracle, faith_pair, faith_group_n, max_order,
                                format, out);
        if (reconstruct->parsed())
            return cmd_reconstruct(rec_file, rec_strict, rec_out, format, out);
        if (geom->parsed()) return cmd_geom(geom_file, geom_out, out);
        if (roundtrip->parsed()) return cmd_roundtrip(rt_file, max_order, out);
        if (selftest->parsed()) return cmd_selftest(st_max_n, st_max_rank, max_order, out);
        if (plot->parsed()) return cmd_plot(plot_file, plot_pair, plot_range, plot_out, out);
        err << "error: no subcommand\n";
        return 1;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const verify_error& e) {
        err << "verification failure: " << e.what() << "\n";
        return 3;
    } catch (const math_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace coxspec::cli
