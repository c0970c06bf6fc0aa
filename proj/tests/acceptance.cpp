// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exit code = number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "coxspec/analysis.hpp"
#include "coxspec/cli.hpp"
#include "coxspec/io.hpp"

using namespace coxspec;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    int number;
    std::string title;
    double budget_seconds;
    bool ok = true;
    std::vector<std::string> notes;

    void fail(const std::string& why) {
        ok = false;
        notes.push_back(why);
    }
    void expect(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }
};

int finish(Criterion& c, std::chrono::steady_clock::time_point start) {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds)
        c.fail("runtime " + std::to_string(secs) + "s exceeds budget " +
               std::to_string(c.budget_seconds) + "s");
    std::printf("%s criterion %d: %s (%.2f s)\n", c.ok ? "PASS" : "FAIL", c.number,
                c.title.c_str(), secs);
    for (const auto& n : c.notes) std::printf("       - %s\n", n.c_str());
    return c.ok ? 0 : 1;
}

// independent subgroup closure for kernel-generator verification
std::vector<DihedralElement> closure(int n, const std::vector<DihedralElement>& gens) {
    std::set<std::pair<int, int>> seen{{0, 0}};
    std::vector<DihedralElement> frontier{DihedralElement::identity(n)};
    while (!frontier.empty()) {
        std::vector<DihedralElement> next;
        for (const auto& w : frontier)
            for (const auto& g : gens) {
                DihedralElement p = dihedral_mul(w, g);
                if (seen.insert({p.ref, p.rot}).second) next.push_back(p);
            }
        frontier = std::move(next);
    }
    std::vector<DihedralElement> out;
    out.reserve(seen.size());
    for (auto [ref, rot] : seen) out.push_back(DihedralElement{n, rot, ref});
    std::sort(out.begin(), out.end());
    return out;
}

bool same_elements(const std::vector<DihedralElement>& a, const std::vector<DihedralElement>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

// expected curve polynomial built from raw terms, not via curve_poly
BiPoly expected_line(int s1, int s2) {
    BiPoly p;
    p.add_term(Mono{1, 0}, Cyc(Rational(s1)));
    p.add_term(Mono{0, 1}, Cyc(Rational(s2)));
    p.add_term(Mono{0, 0}, Cyc(Rational(-1)));
    return p;
}

BiPoly expected_ellipse(int k, int n) {
    BiPoly p;
    p.add_term(Mono{0, 0}, Cyc(1));
    p.add_term(Mono{2, 0}, Cyc(Rational(-1)));
    p.add_term(Mono{0, 2}, Cyc(Rational(-1)));
    p.add_term(Mono{1, 1}, -Cyc::two_cos(k, n));
    return p;
}

int criterion1() {
    auto start = std::chrono::steady_clock::now();
    Criterion c{1, "catalog reproduces the irreducible tables", 5.0};
    for (int n : {2, 3, 4, 5, 6, 8, 12}) {
        DihedralElement s1 = DihedralElement::s1(n);
        DihedralElement s2 = DihedralElement::s2(n);
        DihedralElement r = DihedralElement::rotation(n, 1);
        for (const IrrepLabel& label : catalog_labels(n)) {
            Curve curve = irrep_curve(n, label);
            std::vector<DihedralElement> kernel = irrep_kernel(n, label);
            BiPoly expect_poly;
            std::vector<DihedralElement> expect_kernel;
            long long expect_image = 0;
            if (label.dim == 1) {
                switch (label.index) {
                    case 1:
                        expect_poly = expected_line(1, 1);
                        expect_kernel = closure(n, {s1, s2});
                        expect_image = 1;
                        break;
                    case 2:
                        expect_poly = expected_line(-1, -1);
                        expect_kernel = closure(n, {dihedral_mul(s1, s2)});
                        expect_image = 2;
                        break;
                    case 3:
                        // rho(1,3) = (+1,-1) forces the polynomial
                        // x1 - x2 - 1 and the kernel <s1, s2 s1 s2>
                        expect_poly = expected_line(1, -1);
                        expect_kernel =
                            closure(n, {s1, dihedral_mul(dihedral_mul(s2, s1), s2)});
                        expect_image = 2;
                        break;
                    default:
                        expect_poly = expected_line(-1, 1);
                        expect_kernel =
                            closure(n, {s2, dihedral_mul(dihedral_mul(s1, s2), s1)});
                        expect_image = 2;
                        break;
                }
            } else {
                int k = label.index;
                expect_poly = expected_ellipse(k, n);
                int g = std::gcd(n, k);
                expect_kernel = closure(n, {DihedralElement::rotation(n, n / g)});
                expect_image = 2 * n / g;
            }
            c.expect(curve_poly(curve) == expect_poly,
                     label.to_string() + " at n=" + std::to_string(n) + ": curve mismatch");
            c.expect(same_elements(kernel, expect_kernel),
                     label.to_string() + " at n=" + std::to_string(n) + ": kernel mismatch");
            c.expect(2 * n % static_cast<long long>(kernel.size()) == 0 &&
                         2 * n / static_cast<long long>(kernel.size()) == expect_image,
                     label.to_string() + " at n=" + std::to_string(n) + ": image order mismatch");
            // determinant of the actual matrices equals the table polynomial
            MatrixRep rep = irrep_matrices(n, label);
            BiPoly det = det_pencil(PolyMatrix::pencil(rep.generators[0], rep.generators[1]));
            c.expect(det == expect_poly,
                     label.to_string() + " at n=" + std::to_string(n) + ": pencil det mismatch");
        }
        // rho(1,2) kernel has order n (the odd-n table prints Z/2Z; the order
        // is 2 only when n = 2)
        size_t k12 = irrep_kernel(n, IrrepLabel::one_dim(2)).size();
        c.expect(static_cast<int>(k12) == n, "rho(1,2) kernel order must equal n");
        // the CLI view agrees on row counts
        std::ostringstream out, err;
        int code = cli::run({"catalog", std::to_string(n)}, out, err);
        c.expect(code == 0, "catalog command failed");
        size_t rows = 0, pos = 0;
        while ((pos = out.str().find("rho(", pos)) != std::string::npos) {
            ++rows;
            pos += 4;
        }
        c.expect(rows == catalog_labels(n).size(), "catalog row count mismatch");
    }
    return finish(c, start);
}

int criterion2() {
    auto start = std::chrono::steady_clock::now();
    Criterion c{2, "pencil determinant equals the curve-product exactly", 60.0};
    long long instances = 0;
    for (int n = 2; n <= 12 && c.ok; ++n) {
        for (const RepSpec& spec : all_specs_with_mults(n, 3, 2)) {
            MatrixRep rep = assemble(spec);
            BiPoly det = det_pencil(PolyMatrix::pencil(rep.generators[0], rep.generators[1]));
            BiPoly prod = BiPoly::constant(Rational(1));
            for (const auto& [curve, mult] : spectrum_of_spec(spec)) {
                BiPoly p = curve_poly(curve);
                for (int t = 0; t < mult; ++t) prod = prod * p;
            }
            ++instances;
            if (!(det == prod)) {
                c.fail("determinant / product mismatch at n=" + std::to_string(n));
                break;
            }
            Rational origin = spec.dimension() % 2 == 0 ? Rational(1) : Rational(-1);
            if (!(det.eval(Cyc(0), Cyc(0)) == Cyc(origin))) {
                c.fail("origin value is not (-1)^dim at n=" + std::to_string(n));
                break;
            }
        }
    }
    c.expect(instances >= 500, "needs at least 500 instances, ran " + std::to_string(instances));
    c.notes.push_back(std::to_string(instances) + " assembled representations checked");
    return finish(c, start);
}

int criterion3() {
    auto start = std::chrono::steady_clock::now();
    Criterion c{3, "faithfulness theorem matches the kernel oracle", 60.0};
    long long checked = 0;
    bool adjudication_seen = false;
    for (int n = 2; n <= 16 && c.ok; ++n) {
        for (const RepSpec& spec : all_support_specs(n, 4)) {
            FaithfulnessVerdict t = is_faithful_theorem(spec);
            FaithfulnessVerdict o = is_faithful_oracle(spec);
            ++checked;
            if (t.faithful != o.faithful) {
                c.fail("disagreement at n=" + std::to_string(n));
                break;
            }
            if (n == 12 && spec.terms.size() == 2 &&
                spec.has_label(IrrepLabel::one_dim(3)) &&
                spec.has_label(IrrepLabel::two_dim(3))) {
                adjudication_seen = true;
                if (t.faithful) c.fail("n=12 {rho(1,3), rho(2,3)} must be unfaithful");
            }
        }
    }
    c.expect(adjudication_seen, "the n=12 one-dim-3 + two-dim-3 case must be in the sweep");
    c.notes.push_back(std::to_string(checked) + " support specs, zero disagreements");
    return finish(c, start);
}

int criterion4() {
    auto start = std::chrono::steady_clock::now();
    Criterion c{4, "reconstruction recovers n on every faithful support", 30.0};
    long long checked = 0;
    for (int n = 2; n <= 16 && c.ok; ++n) {
        for (const RepSpec& spec : all_support_specs(n, 4)) {
            if (!is_faithful_theorem(spec).faithful) continue;
            ++checked;
            if (reconstruct_order(spectrum_of_spec(spec)).m != n) {
                c.fail("wrong bond for a faithful spec at n=" + std::to_string(n));
                break;
            }
            RepSpec bumped = spec;
            for (size_t i = 0; i < bumped.terms.size(); ++i)
                bumped.terms[i].second = 1 + static_cast<int>((i + n) % 3);
            if (reconstruct_order(spectrum_of_spec(bumped)).m != n) {
                c.fail("multiplicity perturbation changed the bond at n=" + std::to_string(n));
                break;
            }
        }
    }
    c.notes.push_back(std::to_string(checked) + " faithful supports recovered");
    return finish(c, start);
}

int criterion5() {
    auto start = std::chrono::steady_clock::now();
    Criterion c{5, "geometric round trip on 25 random Coxeter matrices", 120.0};
    DetRng rng(424242);
    for (int t = 0; t < 25 && c.ok; ++t) {
        int rank = rng.uniform(2, 4);
        CoxeterMatrix cm = random_coxeter(rng, rank, 2, 8);
        try {
            AnalysisReport rpt = analyze(geometric_representation(cm), 64);
            if (!(rpt.matrix == cm)) {
                c.fail("matrix mismatch on trial " + std::to_string(t));
                break;
            }
            for (const auto& [key, pa] : rpt.pairs)
                if (!pa.verdict.faithful) {
                    c.fail("pair restriction reported unfaithful on trial " + std::to_string(t));
                    break;
                }
        } catch (const std::exception& e) {
            c.fail(std::string("pipeline error: ") + e.what());
            break;
        }
    }
    c.notes.push_back("rank 2..4, bonds 2..8, fixed seed");
    return finish(c, start);
}

int criterion6() {
    auto start = std::chrono::steady_clock::now();
    Criterion c{6, "exact cyclotomic arithmetic base", 60.0};
    for (int n = 1; n <= 64 && c.ok; ++n) {
        UniPoly prod = UniPoly::constant(Rational(1));
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic_polynomial(d);
        if (!(prod == UniPoly::x_pow_minus_one(n))) {
            c.fail("Phi product failed at N=" + std::to_string(n));
            break;
        }
        auto q = UniPoly::exact_div(UniPoly::x_pow_minus_one(n), cyclotomic_polynomial(n));
        if (!q) {
            c.fail("Phi_N does not divide x^N - 1 at N=" + std::to_string(n));
            break;
        }
        // inverse round trip and conjugation on zeta_N and a mixed value
        Cyc z = Cyc::root_of_unity(n, 1);
        if (!(z * z.inv() == Cyc(1))) c.fail("inverse round trip failed at N=" + std::to_string(n));
        if (!(z.conj().conj() == z)) c.fail("conjugation is not an involution");
        Cyc mix = z + Cyc(Rational(2));
        if (!(mix * mix.inv() == Cyc(1))) c.fail("mixed inverse failed at N=" + std::to_string(n));
        for (int k = 0; k <= n; ++k) {
            if (!(Cyc::two_cos(k, n) == Cyc::two_cos(k % n, n)) ||
                !(Cyc::two_cos(k, n) == Cyc::two_cos(n - (k % n), n))) {
                c.fail("two_cos symmetry failed at N=" + std::to_string(n));
                break;
            }
        }
    }
    long long matches = 0;
    for (int den = 3; den <= 24 && c.ok; ++den)
        for (int num = 1; 2 * num < den; ++num) {
            if (std::gcd(num, den) != 1) continue;
            auto hit = match_two_cos(Cyc::two_cos(num, den), 24);
            ++matches;
            if (!hit || hit->first != num || hit->second != den) {
                c.fail("match_two_cos failed on " + std::to_string(num) + "/" +
                       std::to_string(den));
                break;
            }
        }
    c.notes.push_back("Phi identities to N=64; " + std::to_string(matches) +
                      " two_cos inversions");
    return finish(c, start);
}

int criterion7() {
    auto start = std::chrono::steady_clock::now();
    Criterion c{7, "subcommands are byte-deterministic", 60.0};
    fs::path dir = fs::temp_directory_path() / "coxspec_acceptance";
    fs::create_directories(dir);
    auto write = [&dir](const std::string& name, const std::string& text) {
        std::ofstream out(dir / name);
        out << text;
        return (dir / name).string();
    };
    std::string spec = write("spec.json", R"({"group":{"type":"dihedral","n":6},
        "terms":[{"irrep":{"dim":1,"j":3},"mult":1},{"irrep":{"dim":2,"k":1},"mult":2}]})");
    std::string cox = write("cox.json", R"({"rank":3,"m":[[1,3,4],[3,1,2],[4,2,1]]})");
    std::string curves = write("curves.json", R"({"pairs":[{"i":0,"j":1,
        "lines":[{"code":"MP","mult":1}],"ellipses":[{"num":1,"den":4,"mult":1}]}]})");

    std::vector<std::vector<std::string>> invocations = {
        {"catalog", "12"},
        {"--format", "json", "catalog", "8"},
        {"spectrum", spec, "--out", (dir / "c1.json").string()},
        {"--format", "json", "spectrum", spec},
        {"faithful", spec, "--oracle"},
        {"--format", "json", "faithful", spec},
        {"reconstruct", curves, "--out", (dir / "m1.json").string()},
        {"geom", cox, "--out", (dir / "g1.json").string()},
        {"roundtrip", cox},
        {"selftest", "--max-n", "6", "--max-rank", "2"},
        {"plot", curves, "--range", "3", "--out", (dir / "p1.svg").string()},
    };
    auto slurp = [](const std::string& p) {
        std::ifstream in(p);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    for (const auto& args : invocations) {
        std::ostringstream out1, out2, err;
        int c1 = cli::run(args, out1, err);
        int c2 = cli::run(args, out2, err);
        c.expect(c1 == c2 && c1 == 0, "exit codes differ or nonzero");
        c.expect(out1.str() == out2.str(), "stdout differs between runs");
    }
    // file outputs: run twice to different paths and compare bytes
    std::ostringstream sink, err;
    cli::run({"plot", curves, "--out", (dir / "p2.svg").string()}, sink, err);
    cli::run({"plot", curves, "--out", (dir / "p3.svg").string()}, sink, err);
    c.expect(slurp((dir / "p2.svg").string()) == slurp((dir / "p3.svg").string()),
             "SVG output differs between runs");
    cli::run({"geom", cox, "--out", (dir / "g2.json").string()}, sink, err);
    cli::run({"geom", cox, "--out", (dir / "g3.json").string()}, sink, err);
    c.expect(slurp((dir / "g2.json").string()) == slurp((dir / "g3.json").string()),
             "geom output differs between runs");
    std::error_code ec;
    fs::remove_all(dir, ec);
    return finish(c, start);
}

}  // namespace

int main() {
    int failures = 0;
    failures += criterion1();
    failures += criterion2();
    failures += criterion3();
    failures += criterion4();
    failures += criterion5();
    failures += criterion6();
    failures += criterion7();
    if (failures == 0)
        std::printf("acceptance: all 7 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures;
}
