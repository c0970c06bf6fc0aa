#pragma once

#include <map>
#include <string>

#include "coxspec/errors.hpp"

namespace coxspec {

// The four spectral lines, named by the signs of x1 and x2 in the normalized
// defining polynomial (constant term -1):
//   PP: x1 + x2 - 1,  MM: -x1 - x2 - 1,  MP: -x1 + x2 - 1,  PM: x1 - x2 - 1
enum class LineCode { PP, MM, MP, PM };

std::string line_code_name(LineCode c);
LineCode line_code_from_name(const std::string& s);  // throws invalid_curveset

// A spectral curve: one of the four lines, or the ellipse
// 1 - x1^2 - x2^2 - 2cos(2*pi*q)*x1*x2 with label q = num/den reduced,
// 0 < q < 1/2.
class Curve {
public:
    static Curve line(LineCode c);
    static Curve ellipse(long long num, long long den);  // validates the label

    bool is_line() const { return is_line_; }
    LineCode code() const { return code_; }
    long long num() const { return num_; }
    long long den() const { return den_; }

    friend bool operator==(const Curve& a, const Curve& b);
    friend bool operator<(const Curve& a, const Curve& b);

    std::string to_string() const;

private:
    Curve() = default;
    bool is_line_ = true;
    LineCode code_ = LineCode::PP;
    long long num_ = 0;
    long long den_ = 1;
};

// Multiset of curves with positive multiplicities.
using CurveSet = std::map<Curve, int>;

bool curveset_equal_support(const CurveSet& a, const CurveSet& b);

}  // namespace coxspec
