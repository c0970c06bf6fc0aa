#include "coxspec/linalg.hpp"

#include "coxspec/errors.hpp"

namespace coxspec {

CycMatrix CycMatrix::identity(int n) {
    CycMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Cyc(1);
    return m;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
    if (a.n_ != b.n_) throw math_error("matrix dimension mismatch");
    const int n = a.n_;
    CycMatrix r(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Cyc& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                const Cyc& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    }
    return r;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
    if (a.n_ != b.n_) return false;
    for (size_t i = 0; i < a.e_.size(); ++i)
        if (!(a.e_[i] == b.e_[i])) return false;
    return true;
}

bool CycMatrix::is_identity() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            const Cyc& v = at(i, j);
            if (i == j ? !v.is_one() : !v.is_zero()) return false;
        }
    return true;
}

bool CycMatrix::is_involution() const { return (*this * *this).is_identity(); }

Cyc CycMatrix::trace() const {
    Cyc t;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

}  // namespace coxspec
