#include "coxspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "coxspec/errors.hpp"

namespace coxspec {

BiPoly curve_poly(const Curve& c) {
    if (c.is_line()) {
        Rational one(1), neg(-1);
        switch (c.code()) {
            case LineCode::PP: return BiPoly::affine(Cyc(one), Cyc(one), Cyc(neg));
            case LineCode::MM: return BiPoly::affine(Cyc(neg), Cyc(neg), Cyc(neg));
            case LineCode::MP: return BiPoly::affine(Cyc(neg), Cyc(one), Cyc(neg));
            case LineCode::PM: return BiPoly::affine(Cyc(one), Cyc(neg), Cyc(neg));
        }
    }
    BiPoly p = BiPoly::constant(Rational(1));
    p.add_term(Mono{2, 0}, Cyc(Rational(-1)));
    p.add_term(Mono{0, 2}, Cyc(Rational(-1)));
    p.add_term(Mono{1, 1}, -Cyc::two_cos(c.num(), static_cast<int>(c.den())));
    return p;
}

CurveSet spectrum_of_spec(const RepSpec& spec) {
    RepSpec s = spec;
    s.validate();
    CurveSet out;
    for (const auto& [label, mult] : s.terms) out[irrep_curve(s.n, label)] += mult;
    return out;
}

PairSpectrum spectrum_of_matrices(const CycMatrix& a, const CycMatrix& b, int max_order) {
    if (a.dim() != b.dim()) throw math_error("matrix dimension mismatch");
    if (!a.is_involution() || !b.is_involution())
        throw not_a_representation("generators must be involutions");
    PairSpectrum out;
    out.product_order = ord_of_product(a, b, max_order);
    // orders 1 and 2 both live inside the minimal Coxeter bond n = 2
    out.catalog_n = std::max(out.product_order, 2);
    out.f = det_pencil(PolyMatrix::pencil(a, b));

    std::vector<Curve> candidates;
    for (LineCode code : {LineCode::PP, LineCode::MM, LineCode::MP, LineCode::PM})
        candidates.push_back(Curve::line(code));
    for (int k = 1; k <= two_dim_count(out.catalog_n); ++k)
        candidates.push_back(irrep_curve(out.catalog_n, IrrepLabel::two_dim(k)));

    BiPoly residual = out.f;
    for (const Curve& c : candidates) {
        BiPoly divisor = curve_poly(c);
        int mult = 0;
        while (true) {
            auto q = BiPoly::exact_div(residual, divisor);
            if (!q) break;
            residual = std::move(*q);
            ++mult;
        }
        if (mult > 0) out.curves[c] = mult;
    }
    if (!residual.is_one())
        throw not_fully_factorable("residual quotient " + residual.to_text());
    return out;
}

namespace {

std::string fmt(double v) {
    char buf[32];
    if (v == 0.0) v = 0.0;  // normalize -0
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

}  // namespace

// The viewBox spans [-range, range]^2 in world coordinates; the y coordinate
// is negated on emission because SVG's y axis points down.
void emit_svg(const CurveSet& curves, double range, std::ostream& out) {
    if (!(range > 1.0)) throw math_error("plot range must be > 1");
    const double unit = range / 320.0;  // world size of one pixel at 640 px
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" "
           "height=\"640\" viewBox=\""
        << fmt(-range) << " " << fmt(-range) << " " << fmt(2 * range) << " " << fmt(2 * range)
        << "\">\n";
    out << "  <rect x=\"" << fmt(-range) << "\" y=\"" << fmt(-range) << "\" width=\""
        << fmt(2 * range) << "\" height=\"" << fmt(2 * range) << "\" fill=\"white\"/>\n";
    // axes with unit tick marks
    out << "  <g stroke=\"#888888\" stroke-width=\"" << fmt(unit) << "\">\n";
    out << "    <line x1=\"" << fmt(-range) << "\" y1=\"0\" x2=\"" << fmt(range)
        << "\" y2=\"0\"/>\n";
    out << "    <line x1=\"0\" y1=\"" << fmt(-range) << "\" x2=\"0\" y2=\"" << fmt(range)
        << "\"/>\n";
    const double tick = 4 * unit;
    for (int t = static_cast<int>(-range); t <= static_cast<int>(range); ++t) {
        if (t == 0) continue;
        out << "    <line x1=\"" << fmt(t) << "\" y1=\"" << fmt(-tick) << "\" x2=\"" << fmt(t)
            << "\" y2=\"" << fmt(tick) << "\"/>\n";
        out << "    <line x1=\"" << fmt(-tick) << "\" y1=\"" << fmt(t) << "\" x2=\"" << fmt(tick)
            << "\" y2=\"" << fmt(t) << "\"/>\n";
    }
    out << "  </g>\n";

    for (const auto& [curve, mult] : curves) {
        const double width = (1.5 + 0.75 * (mult - 1)) * unit;
        if (curve.is_line()) {
            // a*x1 + b*x2 = 1 with a,b = +-1; draw the segment across the box
            double a = 1, b = 1;
            switch (curve.code()) {
                case LineCode::PP: a = 1; b = 1; break;
                case LineCode::MM: a = -1; b = -1; break;
                case LineCode::MP: a = -1; b = 1; break;
                case LineCode::PM: a = 1; b = -1; break;
            }
            double x0 = -range, y0 = (1 - a * x0) / b;
            double x1 = range, y1 = (1 - a * x1) / b;
            out << "  <line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(-y0) << "\" x2=\"" << fmt(x1)
                << "\" y2=\"" << fmt(-y1) << "\" stroke=\"#1f5fa8\" stroke-width=\"" << fmt(width)
                << "\" fill=\"none\"><title>" << curve.to_string() << " x" << mult
                << "</title></line>\n";
        } else {
            // x^2 + y^2 + c*x*y = 1 with c = 2cos(2*pi*q): rotate 45 degrees,
            // semi-axes 1/sqrt(1 + c/2) and 1/sqrt(1 - c/2)
            const double c =
                Cyc::two_cos(curve.num(), static_cast<int>(curve.den())).approx().real();
            const double sa = 1.0 / std::sqrt(1.0 + c / 2.0);
            const double sb = 1.0 / std::sqrt(1.0 - c / 2.0);
            const double inv_sqrt2 = 0.7071067811865476;
            out << "  <polyline points=\"";
            const int samples = 256;
            for (int s = 0; s <= samples; ++s) {
                double t = 2.0 * 3.14159265358979323846 * s / samples;
                double u = sa * std::cos(t);
                double v = sb * std::sin(t);
                double x = (u + v) * inv_sqrt2;
                double y = (u - v) * inv_sqrt2;
                if (s) out << " ";
                out << fmt(x) << "," << fmt(-y);
            }
            out << "\" stroke=\"#a8321f\" stroke-width=\"" << fmt(width) << "\" fill=\"none\">"
                << "<title>" << curve.to_string() << " x" << mult << "</title></polyline>\n";
        }
    }
    out << "</svg>\n";
    if (!out.good()) throw sink_failure();
}

}  // namespace coxspec
