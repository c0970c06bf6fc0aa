#include "coxspec/curves.hpp"

#include <numeric>

namespace coxspec {

std::string line_code_name(LineCode c) {
    switch (c) {
        case LineCode::PP: return "PP";
        case LineCode::MM: return "MM";
        case LineCode::MP: return "MP";
        case LineCode::PM: return "PM";
    }
    return "??";
}

LineCode line_code_from_name(const std::string& s) {
    if (s == "PP") return LineCode::PP;
    if (s == "MM") return LineCode::MM;
    if (s == "MP") return LineCode::MP;
    if (s == "PM") return LineCode::PM;
    throw invalid_curveset("unknown line code '" + s + "'");
}

Curve Curve::line(LineCode c) {
    Curve k;
    k.is_line_ = true;
    k.code_ = c;
    return k;
}

Curve Curve::ellipse(long long num, long long den) {
    if (den <= 0 || num <= 0 || 2 * num >= den)
        throw invalid_curveset("ellipse label " + std::to_string(num) + "/" + std::to_string(den) +
                               " outside (0, 1/2)");
    if (std::gcd(num, den) != 1)
        throw invalid_curveset("ellipse label " + std::to_string(num) + "/" + std::to_string(den) +
                               " not reduced");
    Curve k;
    k.is_line_ = false;
    k.num_ = num;
    k.den_ = den;
    return k;
}

bool operator==(const Curve& a, const Curve& b) {
    if (a.is_line_ != b.is_line_) return false;
    if (a.is_line_) return a.code_ == b.code_;
    return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Curve& a, const Curve& b) {
    if (a.is_line_ != b.is_line_) return a.is_line_;  // lines before ellipses
    if (a.is_line_) return static_cast<int>(a.code_) < static_cast<int>(b.code_);
    return a.num_ * b.den_ < b.num_ * a.den_;  // by label value
}

std::string Curve::to_string() const {
    if (is_line_) return "line " + line_code_name(code_);
    return "ellipse " + std::to_string(num_) + "/" + std::to_string(den_);
}

bool curveset_equal_support(const CurveSet& a, const CurveSet& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
        if (!(ia->first == ib->first)) return false;
    return ia == a.end() && ib == b.end();
}

}  // namespace coxspec
