#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coxspec/curves.hpp"
#include "coxspec/linalg.hpp"

namespace coxspec {

// Symmetric matrix of bond orders: m[i][i] = 1, m[i][j] >= 2 finite.
struct CoxeterMatrix {
    int rank = 0;
    std::vector<std::vector<int>> m;

    static CoxeterMatrix make(std::vector<std::vector<int>> entries);  // validates
    int bond(int i, int j) const { return m[i][j]; }
    friend bool operator==(const CoxeterMatrix& a, const CoxeterMatrix& b) {
        return a.rank == b.rank && a.m == b.m;
    }
};

// Element r^a * s2^b of the dihedral group of order 2n, where r = s1*s2.
struct DihedralElement {
    int n = 1;
    int rot = 0;
    int ref = 0;

    static DihedralElement identity(int n) { return {n, 0, 0}; }
    static DihedralElement rotation(int n, int a) { return {n, ((a % n) + n) % n, 0}; }
    static DihedralElement s1(int n) { return {n, 1 % n, 1}; }  // s1 = r * s2
    static DihedralElement s2(int n) { return {n, 0, 1}; }
    bool is_identity() const { return rot == 0 && ref == 0; }
    std::string to_string() const;

    friend bool operator==(const DihedralElement& a, const DihedralElement& b) {
        return a.n == b.n && a.rot == b.rot && a.ref == b.ref;
    }
    // canonical enumeration order: rotations first (rot ascending), then
    // reflections (rot ascending)
    friend bool operator<(const DihedralElement& a, const DihedralElement& b) {
        if (a.ref != b.ref) return a.ref < b.ref;
        return a.rot < b.rot;
    }
};

DihedralElement dihedral_mul(const DihedralElement& a, const DihedralElement& b);
DihedralElement dihedral_inverse(const DihedralElement& a);
std::vector<DihedralElement> dihedral_enumerate(int n);

// Label of an irreducible representation of Dih_2n: OneDim j (j = 1..2 for n
// odd, 1..4 for n even) or TwoDim k (1 <= k <= floor((n-1)/2)).
struct IrrepLabel {
    int dim = 1;
    int index = 1;

    static IrrepLabel one_dim(int j) { return {1, j}; }
    static IrrepLabel two_dim(int k) { return {2, k}; }
    void validate(int n) const;  // throws invalid_label
    std::string to_string() const;

    friend bool operator==(const IrrepLabel& a, const IrrepLabel& b) {
        return a.dim == b.dim && a.index == b.index;
    }
    friend bool operator<(const IrrepLabel& a, const IrrepLabel& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.index < b.index;
    }
};

int one_dim_count(int n);
int two_dim_count(int n);
std::vector<IrrepLabel> catalog_labels(int n);

// A representation given as a multiset of labeled irreducibles.
struct RepSpec {
    int n = 2;
    std::vector<std::pair<IrrepLabel, int>> terms;  // label -> multiplicity

    void validate() const;  // throws invalid_label / math_error
    void sort_canonical();
    int dimension() const;
    bool has_label(const IrrepLabel& l) const;
};

// A representation given by explicit generator matrices (all involutions).
struct MatrixRep {
    std::vector<CycMatrix> generators;
    int dim = 0;
};

// Explicit matrices of the catalog irreducible: OneDim j with the sign
// patterns (+,+), (-,-), (+,-), (-,+); TwoDim k with
// s1 = [[0,1],[1,0]], s2 = [[0, zeta_n^k], [zeta_n^-k, 0]].
MatrixRep irrep_matrices(int n, const IrrepLabel& label);

// The spectral curve attached to the irreducible. The one-dimensional signs
// determine the line directly from the determinant of the pencil:
// (+,+) -> PP, (-,-) -> MM, (+,-) -> PM, (-,+) -> MP.
Curve irrep_curve(int n, const IrrepLabel& label);

// Kernel by enumeration over all 2n elements (never read off a table).
std::vector<DihedralElement> irrep_kernel(int n, const IrrepLabel& label);

// Trace of the irreducible at a group element.
Cyc character(int n, const IrrepLabel& label, const DihedralElement& w);

// Block-diagonal direct sum in canonical label order.
MatrixRep assemble(const RepSpec& spec);

// Matrices of every group element in canonical enumeration order, for a pair
// of generator matrices (a = s1, b = s2): index = ref * n + rot.
std::vector<CycMatrix> word_matrices(const CycMatrix& a, const CycMatrix& b, int n);

// Smallest n >= 1 with (A*B)^n = I; throws order_exceeded past max_order.
int ord_of_product(const CycMatrix& a, const CycMatrix& b, int max_order);

// Multiplicities via exact character inner products over Dih_2n.
RepSpec decompose(const CycMatrix& a, const CycMatrix& b, int n);

// Tits reflection representation: generators act on the root basis by
// sigma_i(alpha_j) = alpha_j - 2 B(alpha_i, alpha_j) alpha_i with
// B(alpha_i, alpha_j) = -cos(pi / m_ij).
MatrixRep geometric_representation(const CoxeterMatrix& m);

}  // namespace coxspec
