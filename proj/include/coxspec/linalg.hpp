#pragma once

#include <vector>

#include "coxspec/cyclotomic.hpp"

namespace coxspec {

// Dense square matrix over the cyclotomic numbers. Entries keep their own
// orders; arithmetic unifies lazily. Multiplication skips zero entries,
// which keeps products of reflection-style matrices (identity except for a
// row or two) cheap.
class CycMatrix {
public:
    CycMatrix() : n_(0) {}
    explicit CycMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n) {}
    static CycMatrix identity(int n);

    int dim() const { return n_; }
    const Cyc& at(int r, int c) const { return e_[static_cast<size_t>(r) * n_ + c]; }
    Cyc& at(int r, int c) { return e_[static_cast<size_t>(r) * n_ + c]; }

    friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
    friend bool operator==(const CycMatrix& a, const CycMatrix& b);

    bool is_identity() const;
    bool is_involution() const;  // M * M == I
    Cyc trace() const;

private:
    int n_;
    std::vector<Cyc> e_;
};

}  // namespace coxspec
