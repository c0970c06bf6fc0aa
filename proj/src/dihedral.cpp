#include "coxspec/dihedral.hpp"

#include <algorithm>
#include <numeric>

#include "coxspec/errors.hpp"

namespace coxspec {

CoxeterMatrix CoxeterMatrix::make(std::vector<std::vector<int>> entries) {
    CoxeterMatrix cm;
    cm.rank = static_cast<int>(entries.size());
    if (cm.rank < 1) throw input_error("Coxeter matrix must have rank >= 1");
    for (const auto& row : entries)
        if (static_cast<int>(row.size()) != cm.rank)
            throw input_error("Coxeter matrix must be square");
    for (int i = 0; i < cm.rank; ++i) {
        if (entries[i][i] != 1) throw input_error("Coxeter matrix diagonal must be 1");
        for (int j = 0; j < cm.rank; ++j) {
            if (entries[i][j] != entries[j][i]) throw input_error("Coxeter matrix must be symmetric");
            if (i != j && entries[i][j] < 2)
                throw input_error("off-diagonal Coxeter bonds must be >= 2");
        }
    }
    cm.m = std::move(entries);
    return cm;
}

std::string DihedralElement::to_string() const {
    if (is_identity()) return "e";
    std::string out;
    if (rot == 1) out = "r";
    else if (rot > 1) out = "r^" + std::to_string(rot);
    if (ref) {
        if (!out.empty()) out += "*";
        out += "s2";
    }
    return out;
}

DihedralElement dihedral_mul(const DihedralElement& a, const DihedralElement& b) {
    if (a.n != b.n) throw modulus_mismatch();
    // (r^p s^e)(r^q s^f) = r^{p + q or p - q} s^{e xor f}, via s r = r^{-1} s
    int q = a.ref ? (a.n - b.rot) % a.n : b.rot;
    return DihedralElement{a.n, (a.rot + q) % a.n, a.ref ^ b.ref};
}

DihedralElement dihedral_inverse(const DihedralElement& a) {
    if (a.ref) return a;  // reflections are involutions
    return DihedralElement{a.n, (a.n - a.rot) % a.n, 0};
}

std::vector<DihedralElement> dihedral_enumerate(int n) {
    if (n < 1) throw math_error("dihedral parameter must be >= 1");
    std::vector<DihedralElement> out;
    out.reserve(2 * static_cast<size_t>(n));
    for (int ref = 0; ref <= 1; ++ref)
        for (int rot = 0; rot < n; ++rot) out.push_back(DihedralElement{n, rot, ref});
    return out;
}

int one_dim_count(int n) { return n % 2 == 0 ? 4 : 2; }
int two_dim_count(int n) { return (n - 1) / 2; }

void IrrepLabel::validate(int n) const {
    if (n < 2) throw invalid_label("dihedral parameter must be >= 2");
    if (dim == 1) {
        if (index < 1 || index > one_dim_count(n))
            throw invalid_label(to_string() + " for n=" + std::to_string(n));
    } else if (dim == 2) {
        if (index < 1 || index > two_dim_count(n))
            throw invalid_label(to_string() + " for n=" + std::to_string(n));
    } else {
        throw invalid_label("dimension must be 1 or 2");
    }
}

std::string IrrepLabel::to_string() const {
    return "rho(" + std::to_string(dim) + "," + std::to_string(index) + ")";
}

std::vector<IrrepLabel> catalog_labels(int n) {
    std::vector<IrrepLabel> out;
    for (int j = 1; j <= one_dim_count(n); ++j) out.push_back(IrrepLabel::one_dim(j));
    for (int k = 1; k <= two_dim_count(n); ++k) out.push_back(IrrepLabel::two_dim(k));
    return out;
}

void RepSpec::validate() const {
    if (n < 2) throw math_error("RepSpec requires n >= 2");
    for (const auto& [label, mult] : terms) {
        label.validate(n);
        if (mult < 1) throw math_error("multiplicities must be positive");
    }
    for (size_t i = 0; i < terms.size(); ++i)
        for (size_t j = i + 1; j < terms.size(); ++j)
            if (terms[i].first == terms[j].first)
                throw math_error("duplicate irrep label in RepSpec");
}

void RepSpec::sort_canonical() {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
}

int RepSpec::dimension() const {
    int d = 0;
    for (const auto& [label, mult] : terms) d += label.dim * mult;
    return d;
}

bool RepSpec::has_label(const IrrepLabel& l) const {
    for (const auto& [label, mult] : terms)
        if (label == l) return true;
    return false;
}

namespace {

// sign patterns of the one-dimensional irreducibles
void one_dim_signs(int j, int& s1, int& s2) {
    switch (j) {
        case 1: s1 = 1; s2 = 1; break;
        case 2: s1 = -1; s2 = -1; break;
        case 3: s1 = 1; s2 = -1; break;
        default: s1 = -1; s2 = 1; break;
    }
}

}  // namespace

MatrixRep irrep_matrices(int n, const IrrepLabel& label) {
    label.validate(n);
    MatrixRep rep;
    if (label.dim == 1) {
        int s1, s2;
        one_dim_signs(label.index, s1, s2);
        CycMatrix a(1), b(1);
        a.at(0, 0) = Cyc(Rational(s1));
        b.at(0, 0) = Cyc(Rational(s2));
        rep.generators = {a, b};
        rep.dim = 1;
        return rep;
    }
    CycMatrix a(2), b(2);
    a.at(0, 1) = Cyc(1);
    a.at(1, 0) = Cyc(1);
    b.at(0, 1) = Cyc::root_of_unity(n, label.index);
    b.at(1, 0) = Cyc::root_of_unity(n, -label.index);
    rep.generators = {a, b};
    rep.dim = 2;
    return rep;
}

Curve irrep_curve(int n, const IrrepLabel& label) {
    label.validate(n);
    if (label.dim == 1) {
        // det(-1 + x1*s1 + x2*s2) determines the line:
        // (+,+): x1+x2-1  (-,-): -x1-x2-1  (+,-): x1-x2-1  (-,+): -x1+x2-1
        switch (label.index) {
            case 1: return Curve::line(LineCode::PP);
            case 2: return Curve::line(LineCode::MM);
            case 3: return Curve::line(LineCode::PM);
            default: return Curve::line(LineCode::MP);
        }
    }
    long long g = std::gcd(static_cast<long long>(label.index), static_cast<long long>(n));
    return Curve::ellipse(label.index / g, n / g);
}

std::vector<CycMatrix> word_matrices(const CycMatrix& a, const CycMatrix& b, int n) {
    std::vector<CycMatrix> words;
    words.reserve(2 * static_cast<size_t>(n));
    CycMatrix r = a * b;
    CycMatrix cur = CycMatrix::identity(a.dim());
    for (int i = 0; i < n; ++i) {
        if (i) cur = cur * r;
        words.push_back(cur);
    }
    for (int i = 0; i < n; ++i) words.push_back(words[i] * b);
    return words;
}

std::vector<DihedralElement> irrep_kernel(int n, const IrrepLabel& label) {
    label.validate(n);
    MatrixRep rep = irrep_matrices(n, label);
    std::vector<CycMatrix> words = word_matrices(rep.generators[0], rep.generators[1], n);
    std::vector<DihedralElement> kernel;
    std::vector<DihedralElement> elems = dihedral_enumerate(n);
    for (size_t i = 0; i < elems.size(); ++i)
        if (words[i].is_identity()) kernel.push_back(elems[i]);
    return kernel;
}

Cyc character(int n, const IrrepLabel& label, const DihedralElement& w) {
    label.validate(n);
    if (w.n != n) throw modulus_mismatch();
    MatrixRep rep = irrep_matrices(n, label);
    CycMatrix r = rep.generators[0] * rep.generators[1];
    CycMatrix cur = CycMatrix::identity(rep.dim);
    for (int i = 0; i < w.rot; ++i) cur = cur * r;
    if (w.ref) cur = cur * rep.generators[1];
    return cur.trace();
}

MatrixRep assemble(const RepSpec& spec) {
    RepSpec s = spec;
    s.validate();
    s.sort_canonical();
    const int d = s.dimension();
    CycMatrix a(d), b(d);
    int off = 0;
    for (const auto& [label, mult] : s.terms) {
        MatrixRep block = irrep_matrices(s.n, label);
        for (int t = 0; t < mult; ++t) {
            for (int r = 0; r < block.dim; ++r)
                for (int c = 0; c < block.dim; ++c) {
                    a.at(off + r, off + c) = block.generators[0].at(r, c);
                    b.at(off + r, off + c) = block.generators[1].at(r, c);
                }
            off += block.dim;
        }
    }
    MatrixRep rep;
    rep.generators = {a, b};
    rep.dim = d;
    return rep;
}

int ord_of_product(const CycMatrix& a, const CycMatrix& b, int max_order) {
    if (!a.is_involution() || !b.is_involution())
        throw not_a_representation("generators must be involutions");
    CycMatrix r = a * b;
    CycMatrix cur = r;
    for (int n = 1; n <= max_order; ++n) {
        if (cur.is_identity()) return n;
        cur = cur * r;
    }
    throw order_exceeded(max_order);
}

RepSpec decompose(const CycMatrix& a, const CycMatrix& b, int n) {
    if (n < 2) throw math_error("decompose requires n >= 2");
    if (a.dim() != b.dim()) throw math_error("matrix dimension mismatch");
    if (!a.is_involution() || !b.is_involution())
        throw not_a_representation("generators must be involutions");
    std::vector<CycMatrix> words = word_matrices(a, b, n);
    if (!(words[n - 1] * (a * b)).is_identity())
        throw order_violation("(AB)^" + std::to_string(n) + " != I");
    std::vector<Cyc> traces;
    traces.reserve(words.size());
    for (const auto& w : words) traces.push_back(w.trace());

    std::vector<DihedralElement> elems = dihedral_enumerate(n);
    RepSpec spec;
    spec.n = n;
    int total_dim = 0;
    for (const IrrepLabel& label : catalog_labels(n)) {
        Cyc inner;
        for (size_t i = 0; i < elems.size(); ++i)
            inner += traces[i] * character(n, label, elems[i]).conj();
        Cyc mult = inner.scaled(Rational(BigInt(1), BigInt(2 * n)));
        if (!mult.is_rational())
            throw not_a_representation("character multiplicity not rational");
        Rational mv = mult.rational_value();
        if (!mv.is_integer() || mv.sign() < 0)
            throw not_a_representation("character multiplicity " + mv.to_string() +
                                       " not a nonnegative integer");
        long long t = mv.num().to_int64();
        if (t > 0) {
            spec.terms.emplace_back(label, static_cast<int>(t));
            total_dim += label.dim * static_cast<int>(t);
        }
    }
    if (total_dim != a.dim())
        throw not_a_representation("multiplicities sum to dimension " +
                                   std::to_string(total_dim) + " != " + std::to_string(a.dim()));
    return spec;
}

MatrixRep geometric_representation(const CoxeterMatrix& m) {
    const int d = m.rank;
    // B(alpha_i, alpha_j) = -cos(pi/m_ij) = -two_cos(1, 2 m_ij)/2; the
    // diagonal m_ii = 1 gives -cos(pi) = 1.
    std::vector<std::vector<Cyc>> bform(d, std::vector<Cyc>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            bform[i][j] = Cyc::two_cos(1, 2 * m.bond(i, j)).scaled(Rational(BigInt(-1), BigInt(2)));
    MatrixRep rep;
    rep.dim = d;
    for (int i = 0; i < d; ++i) {
        CycMatrix g = CycMatrix::identity(d);
        for (int j = 0; j < d; ++j) {
            // sigma_i(alpha_j) = alpha_j - 2 B(alpha_i, alpha_j) alpha_i:
            // subtract 2 B(i,j) from row i, column j
            g.at(i, j) -= bform[i][j] + bform[i][j];
        }
        rep.generators.push_back(std::move(g));
    }
    return rep;
}

}  // namespace coxspec
