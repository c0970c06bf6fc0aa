#include "coxspec/io.hpp"

#include <fstream>
#include <numeric>

namespace coxspec::io {

namespace {

long long int_field(const json& j, const char* name) {
    if (!j.contains(name) || !j[name].is_number_integer())
        throw input_error(std::string("expected integer field '") + name + "'");
    return j[name].get<long long>();
}

json bigint_to_json(const BigInt& b) {
    if (!b.fits_int64()) throw input_error("integer too large for JSON serialization");
    return json(b.to_int64());
}

}  // namespace

json cyc_to_json(const Cyc& c) {
    json coeffs = json::array();
    size_t last = c.coeffs().size();
    while (last > 0 && c.coeffs()[last - 1].is_zero()) --last;
    for (size_t i = 0; i < last; ++i) {
        const Rational& r = c.coeffs()[i];
        coeffs.push_back(json::array({bigint_to_json(r.num()), bigint_to_json(r.den())}));
    }
    return json{{"order", c.order()}, {"coeffs", std::move(coeffs)}};
}

Cyc cyc_from_json(const json& j) {
    if (!j.is_object()) throw input_error("cyclotomic number must be an object");
    long long order = int_field(j, "order");
    if (order < 1) throw input_error("cyclotomic order must be positive");
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
        throw input_error("cyclotomic number needs a 'coeffs' array");
    if (j["coeffs"].size() > static_cast<size_t>(order))
        throw input_error("cyclotomic coefficient list longer than the order");
    std::vector<Rational> coeffs;
    for (const json& e : j["coeffs"]) {
        if (e.is_number_integer()) {
            coeffs.emplace_back(e.get<long long>());
        } else if (e.is_array() && e.size() == 2 && e[0].is_number_integer() &&
                   e[1].is_number_integer()) {
            coeffs.emplace_back(BigInt(e[0].get<long long>()), BigInt(e[1].get<long long>()));
        } else {
            throw input_error("cyclotomic coefficients must be integers or [num, den] pairs");
        }
    }
    try {
        return Cyc::from_coeffs(static_cast<int>(order), std::move(coeffs));
    } catch (const math_error& e) {
        throw input_error(e.what());
    }
}

json coxeter_to_json(const CoxeterMatrix& m) {
    json rows = json::array();
    for (const auto& row : m.m) rows.push_back(row);
    return json{{"rank", m.rank}, {"m", std::move(rows)}};
}

CoxeterMatrix coxeter_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m") || !j["m"].is_array())
        throw input_error("Coxeter matrix file needs fields 'rank' and 'm'");
    long long rank = int_field(j, "rank");
    std::vector<std::vector<int>> rows;
    for (const json& r : j["m"]) {
        if (!r.is_array()) throw input_error("'m' must be an array of rows");
        std::vector<int> row;
        for (const json& v : r) {
            if (!v.is_number_integer()) throw input_error("Coxeter entries must be integers");
            row.push_back(v.get<int>());
        }
        rows.push_back(std::move(row));
    }
    if (rank != static_cast<long long>(rows.size()))
        throw input_error("declared rank does not match the matrix");
    return CoxeterMatrix::make(std::move(rows));
}

json repspec_to_json(const RepSpec& s) {
    json terms = json::array();
    for (const auto& [label, mult] : s.terms) {
        json irrep;
        if (label.dim == 1)
            irrep = json{{"dim", 1}, {"j", label.index}};
        else
            irrep = json{{"dim", 2}, {"k", label.index}};
        terms.push_back(json{{"irrep", std::move(irrep)}, {"mult", mult}});
    }
    return json{{"group", json{{"type", "dihedral"}, {"n", s.n}}}, {"terms", std::move(terms)}};
}

RepSpec repspec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("group") || !j.contains("terms"))
        throw input_error("representation spec needs 'group' and 'terms'");
    const json& g = j["group"];
    if (!g.is_object() || g.value("type", "") != "dihedral")
        throw input_error("group type must be \"dihedral\"");
    RepSpec s;
    s.n = static_cast<int>(int_field(g, "n"));
    if (!j["terms"].is_array()) throw input_error("'terms' must be an array");
    for (const json& t : j["terms"]) {
        if (!t.is_object() || !t.contains("irrep")) throw input_error("bad term entry");
        const json& ir = t["irrep"];
        long long dim = int_field(ir, "dim");
        IrrepLabel label = dim == 1 ? IrrepLabel::one_dim(static_cast<int>(int_field(ir, "j")))
                                    : IrrepLabel::two_dim(static_cast<int>(int_field(ir, "k")));
        if (dim != 1 && dim != 2) throw input_error("irrep dim must be 1 or 2");
        long long mult = t.contains("mult") ? int_field(t, "mult") : 1;
        s.terms.emplace_back(label, static_cast<int>(mult));
    }
    try {
        s.validate();
    } catch (const math_error& e) {
        throw input_error(e.what());
    }
    s.sort_canonical();
    return s;
}

json matrixrep_to_json(const MatrixRep& r) {
    int common = 1;
    for (const auto& g : r.generators)
        for (int i = 0; i < g.dim(); ++i)
            for (int j = 0; j < g.dim(); ++j)
                common = static_cast<int>(std::lcm(static_cast<long long>(common),
                                                   static_cast<long long>(g.at(i, j).order())));
    json gens = json::array();
    for (const auto& g : r.generators) {
        json rows = json::array();
        for (int i = 0; i < g.dim(); ++i) {
            json row = json::array();
            for (int j = 0; j < g.dim(); ++j) row.push_back(cyc_to_json(g.at(i, j)));
            rows.push_back(std::move(row));
        }
        gens.push_back(std::move(rows));
    }
    return json{{"cyclotomic_order", common}, {"generators", std::move(gens)}};
}

MatrixRep matrixrep_from_json(const json& j) {
    if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array() ||
        j["generators"].empty())
        throw input_error("matrix representation needs a nonempty 'generators' array");
    long long common = int_field(j, "cyclotomic_order");
    MatrixRep rep;
    for (const json& g : j["generators"]) {
        if (!g.is_array() || g.empty()) throw input_error("generator must be an array of rows");
        const int d = static_cast<int>(g.size());
        CycMatrix m(d);
        for (int r = 0; r < d; ++r) {
            if (!g[r].is_array() || static_cast<int>(g[r].size()) != d)
                throw input_error("generator matrix must be square");
            for (int c = 0; c < d; ++c) {
                Cyc v = cyc_from_json(g[r][c]);
                if (common % v.order() != 0)
                    throw input_error("entry order does not divide the file cyclotomic_order");
                m.at(r, c) = std::move(v);
            }
        }
        if (rep.dim == 0) rep.dim = d;
        if (rep.dim != d) throw input_error("generator matrices must share one dimension");
        if (!m.is_involution()) throw input_error("generator matrix is not an involution");
        rep.generators.push_back(std::move(m));
    }
    return rep;
}

json curvesets_to_json(const std::map<std::pair<int, int>, CurveSet>& pairs) {
    json arr = json::array();
    for (const auto& [key, curves] : pairs) {
        json lines = json::array();
        json ellipses = json::array();
        for (const auto& [curve, mult] : curves) {
            if (curve.is_line())
                lines.push_back(json{{"code", line_code_name(curve.code())}, {"mult", mult}});
            else
                ellipses.push_back(
                    json{{"num", curve.num()}, {"den", curve.den()}, {"mult", mult}});
        }
        arr.push_back(json{{"i", key.first},
                           {"j", key.second},
                           {"lines", std::move(lines)},
                           {"ellipses", std::move(ellipses)}});
    }
    return json{{"pairs", std::move(arr)}};
}

std::map<std::pair<int, int>, CurveSet> curvesets_from_json(const json& j) {
    if (!j.is_object() || !j.contains("pairs") || !j["pairs"].is_array())
        throw input_error("curve set file needs a 'pairs' array");
    std::map<std::pair<int, int>, CurveSet> out;
    for (const json& p : j["pairs"]) {
        int i = static_cast<int>(int_field(p, "i"));
        int jj = static_cast<int>(int_field(p, "j"));
        if (i < 0 || jj <= i) throw input_error("pair indices must satisfy 0 <= i < j");
        if (out.count({i, jj})) throw input_error("duplicate pair in curve set file");
        CurveSet curves;
        try {
            if (p.contains("lines")) {
                for (const json& l : p["lines"]) {
                    Curve c = Curve::line(line_code_from_name(l.value("code", "")));
                    long long mult = int_field(l, "mult");
                    if (mult < 1) throw input_error("multiplicities must be positive");
                    if (curves.count(c)) throw input_error("duplicate curve in pair");
                    curves[c] = static_cast<int>(mult);
                }
            }
            if (p.contains("ellipses")) {
                for (const json& e : p["ellipses"]) {
                    Curve c = Curve::ellipse(int_field(e, "num"), int_field(e, "den"));
                    long long mult = int_field(e, "mult");
                    if (mult < 1) throw input_error("multiplicities must be positive");
                    if (curves.count(c)) throw input_error("duplicate curve in pair");
                    curves[c] = static_cast<int>(mult);
                }
            }
        } catch (const invalid_curveset& e) {
            throw input_error(e.what());
        }
        out[{i, jj}] = std::move(curves);
    }
    return out;
}

json verdict_to_json(const FaithfulnessVerdict& v) {
    json j{{"faithful", v.faithful},
           {"kernel_size", v.kernel_size},
           {"method", v.method == FaithfulnessVerdict::Method::theorem ? "theorem" : "oracle"}};
    j["witness"] = v.witness ? json(v.witness->to_string()) : json(nullptr);
    return j;
}

json reconstruction_to_json(const ReconstructionReport& r) {
    json j = coxeter_to_json(r.matrix);
    json pairs = json::array();
    for (const auto& [key, rec] : r.per_pair)
        pairs.push_back(json{{"i", key.first},
                             {"j", key.second},
                             {"case", rec.case_id},
                             {"theta", rec.theta},
                             {"m", rec.m},
                             {"faithful", rec.faithful}});
    j["pairs"] = std::move(pairs);
    return j;
}

json analysis_to_json(const AnalysisReport& r) {
    json j = coxeter_to_json(r.matrix);
    json pairs = json::array();
    for (const auto& [key, pa] : r.pairs) {
        std::map<std::pair<int, int>, CurveSet> one{{key, pa.curves}};
        json p{{"i", key.first},
               {"j", key.second},
               {"case", pa.rec.case_id},
               {"theta", pa.rec.theta},
               {"m", pa.rec.m},
               {"faithful", pa.verdict.faithful},
               {"product_order", pa.product_order},
               {"f", pa.f.to_text()}};
        p["curves"] = curvesets_to_json(one)["pairs"][0];
        pairs.push_back(std::move(p));
    }
    j["pairs"] = std::move(pairs);
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write file: " + path);
    out << dump(j);
    if (!out.good()) throw sink_failure();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace coxspec::io
