#include "coxspec/analysis.hpp"

#include <algorithm>
#include <numeric>

#include "coxspec/errors.hpp"

namespace coxspec {

std::vector<DihedralElement> kernel_of_spec(const RepSpec& spec) {
    RepSpec s = spec;
    s.validate();
    std::vector<DihedralElement> elems = dihedral_enumerate(s.n);
    std::vector<char> in_kernel(elems.size(), 1);
    for (const auto& [label, mult] : s.terms) {
        std::vector<DihedralElement> ker = irrep_kernel(s.n, label);
        std::vector<char> mask(elems.size(), 0);
        for (const auto& w : ker) mask[static_cast<size_t>(w.ref) * s.n + w.rot] = 1;
        for (size_t i = 0; i < elems.size(); ++i) in_kernel[i] &= mask[i];
    }
    std::vector<DihedralElement> out;
    for (size_t i = 0; i < elems.size(); ++i)
        if (in_kernel[i]) out.push_back(elems[i]);
    return out;
}

FaithfulnessVerdict is_faithful_oracle(const RepSpec& spec) {
    std::vector<DihedralElement> kernel = kernel_of_spec(spec);
    FaithfulnessVerdict v;
    v.method = FaithfulnessVerdict::Method::oracle;
    v.kernel_size = static_cast<long long>(kernel.size());
    v.faithful = kernel.size() == 1;
    if (!v.faithful) v.witness = kernel[1];  // kernel[0] is the identity
    return v;
}

FaithfulnessVerdict is_faithful_theorem(const RepSpec& spec) {
    RepSpec s = spec;
    s.validate();
    bool faithful = false;
    if (s.n == 2) {
        int hits = 0;
        for (int j = 2; j <= 4; ++j)
            if (s.has_label(IrrepLabel::one_dim(j))) ++hits;
        faithful = hits >= 2;
    } else {
        std::vector<long long> ks;
        for (const auto& [label, mult] : s.terms)
            if (label.dim == 2) ks.push_back(label.index);
        if (!ks.empty()) {
            long long g;
            if (s.n % 2 == 0 &&
                (s.has_label(IrrepLabel::one_dim(3)) || s.has_label(IrrepLabel::one_dim(4)))) {
                // a parity character collapses <r^2>, so the even case
                // tightens to gcd(n/2, k_1, ..., k_t) = 1
                g = s.n / 2;
            } else {
                g = s.n;
            }
            for (long long k : ks) g = std::gcd(g, k);
            faithful = g == 1;
        }
    }
    FaithfulnessVerdict v;
    if (faithful) {
        v.faithful = true;
        v.kernel_size = 1;
    } else {
        v = is_faithful_oracle(s);  // fill kernel size and witness
    }
    v.method = FaithfulnessVerdict::Method::theorem;
    return v;
}

FaithfulnessVerdict is_faithful_matrices(const CycMatrix& a, const CycMatrix& b, int max_order,
                                         int ambient_n) {
    if (!a.is_involution() || !b.is_involution())
        throw not_a_representation("generators must be involutions");
    int ord = ord_of_product(a, b, max_order);
    int n = std::max(ord, 2);
    if (ambient_n > 0) {
        if (ambient_n % ord != 0)
            throw order_violation("product order " + std::to_string(ord) +
                                  " does not divide claimed n " + std::to_string(ambient_n));
        n = ambient_n;
    }
    std::vector<CycMatrix> words = word_matrices(a, b, n);
    std::vector<DihedralElement> elems = dihedral_enumerate(n);
    FaithfulnessVerdict v;
    v.method = FaithfulnessVerdict::Method::oracle;
    long long kernel = 0;
    for (size_t i = 0; i < words.size(); ++i) {
        if (!words[i].is_identity()) continue;
        ++kernel;
        if (!elems[i].is_identity() && !v.witness) v.witness = elems[i];
    }
    v.kernel_size = kernel;
    v.faithful = kernel == 1;
    if (v.faithful) v.witness.reset();
    return v;
}

PairReconstruction reconstruct_order(const CurveSet& curves) {
    PairReconstruction rec;
    bool any_ellipse = false;
    bool parity_line = false;
    long long theta = 1;
    for (const auto& [curve, mult] : curves) {
        if (mult < 1) throw invalid_curveset("multiplicities must be positive");
        if (curve.is_line()) {
            if (curve.code() == LineCode::MP || curve.code() == LineCode::PM) parity_line = true;
            continue;
        }
        any_ellipse = true;
        theta = std::lcm(theta, curve.den());
        if (theta > (1LL << 30)) throw invalid_curveset("ellipse denominators lcm too large");
    }
    if (!any_ellipse) {
        rec.case_id = 1;
        rec.theta = 1;
        rec.m = 2;
        return rec;
    }
    rec.theta = theta;
    if (parity_line) {
        rec.case_id = 3;
        rec.m = static_cast<int>(theta % 2 == 1 ? 2 * theta : theta);
    } else {
        rec.case_id = 2;
        rec.m = static_cast<int>(theta);
    }
    return rec;
}

bool validate_faithful_curveset(const CurveSet& curves) {
    PairReconstruction rec = reconstruct_order(curves);
    RepSpec support;
    support.n = rec.m;
    for (const auto& [curve, mult] : curves) {
        IrrepLabel label = IrrepLabel::one_dim(1);
        if (curve.is_line()) {
            switch (curve.code()) {
                case LineCode::PP: label = IrrepLabel::one_dim(1); break;
                case LineCode::MM: label = IrrepLabel::one_dim(2); break;
                case LineCode::PM: label = IrrepLabel::one_dim(3); break;
                case LineCode::MP: label = IrrepLabel::one_dim(4); break;
            }
        } else {
            // k/m reduces to num/den, so k = m * num / den (den divides m)
            label = IrrepLabel::two_dim(static_cast<int>(rec.m / curve.den() * curve.num()));
        }
        support.terms.emplace_back(label, 1);
    }
    return is_faithful_theorem(support).faithful;
}

ReconstructionReport reconstruct_matrix(const std::map<std::pair<int, int>, CurveSet>& pairs,
                                        int rank, bool strict) {
    if (rank < 1) throw input_error("rank must be >= 1");
    ReconstructionReport rpt;
    rpt.matrix.rank = rank;
    rpt.matrix.m.assign(rank, std::vector<int>(rank, 1));
    for (int i = 0; i < rank; ++i) {
        for (int j = i + 1; j < rank; ++j) {
            auto it = pairs.find({i, j});
            if (it == pairs.end()) throw missing_pair(i, j);
            PairReconstruction rec = reconstruct_order(it->second);
            rec.faithful = validate_faithful_curveset(it->second);
            if (strict && !rec.faithful)
                throw invalid_curveset("pair (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") is not the spectrum of any faithful representation");
            rpt.per_pair[{i, j}] = rec;
            rpt.matrix.m[i][j] = rec.m;
            rpt.matrix.m[j][i] = rec.m;
        }
    }
    return rpt;
}

AnalysisReport analyze(const MatrixRep& rep, int max_order, int ambient_n) {
    const int rank = static_cast<int>(rep.generators.size());
    if (rank < 1) throw math_error("representation needs at least one generator");
    for (const auto& g : rep.generators)
        if (!g.is_involution()) throw not_a_representation("generator matrix is not an involution");
    AnalysisReport rpt;
    rpt.matrix.rank = rank;
    rpt.matrix.m.assign(rank, std::vector<int>(rank, 1));
    for (int i = 0; i < rank; ++i) {
        for (int j = i + 1; j < rank; ++j) {
            const CycMatrix& a = rep.generators[i];
            const CycMatrix& b = rep.generators[j];
            PairAnalysis pa;
            PairSpectrum ps = spectrum_of_matrices(a, b, max_order);
            pa.f = ps.f;
            pa.curves = ps.curves;
            pa.product_order = ps.product_order;
            pa.verdict = is_faithful_matrices(a, b, max_order, ambient_n);
            if (!pa.verdict.faithful)
                throw faithfulness_violation(i, j, pa.verdict.witness
                                                       ? pa.verdict.witness->to_string()
                                                       : "none");
            pa.rec = reconstruct_order(pa.curves);
            pa.rec.faithful = true;  // established by the matrix kernel above
            if (pa.rec.m != pa.product_order)
                throw verify_error("pair (" + std::to_string(i) + "," + std::to_string(j) +
                                   "): reconstructed bond " + std::to_string(pa.rec.m) +
                                   " disagrees with product order " +
                                   std::to_string(pa.product_order));
            rpt.matrix.m[i][j] = pa.rec.m;
            rpt.matrix.m[j][i] = pa.rec.m;
            rpt.pairs[{i, j}] = std::move(pa);
        }
    }
    return rpt;
}

std::vector<RepSpec> all_support_specs(int n, int max_support) {
    std::vector<IrrepLabel> labels = catalog_labels(n);
    const int L = static_cast<int>(labels.size());
    std::vector<RepSpec> out;
    std::vector<int> pick;
    // index combinations in lexicographic order, sizes 1..max_support
    auto emit = [&] {
        RepSpec s;
        s.n = n;
        for (int i : pick) s.terms.emplace_back(labels[i], 1);
        out.push_back(std::move(s));
    };
    for (int size = 1; size <= std::min(max_support, L); ++size) {
        pick.assign(size, 0);
        for (int i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            emit();
            int pos = size - 1;
            while (pos >= 0 && pick[pos] == L - size + pos) --pos;
            if (pos < 0) break;
            ++pick[pos];
            for (int i = pos + 1; i < size; ++i) pick[i] = pick[i - 1] + 1;
        }
    }
    return out;
}

std::vector<RepSpec> all_specs_with_mults(int n, int max_support, int max_mult) {
    std::vector<RepSpec> out;
    for (const RepSpec& base : all_support_specs(n, max_support)) {
        const size_t k = base.terms.size();
        std::vector<int> mults(k, 1);
        while (true) {
            RepSpec s = base;
            for (size_t i = 0; i < k; ++i) s.terms[i].second = mults[i];
            out.push_back(std::move(s));
            size_t pos = 0;
            while (pos < k && mults[pos] == max_mult) mults[pos++] = 1;
            if (pos == k) break;
            ++mults[pos];
        }
    }
    return out;
}

unsigned long long DetRng::next() {
    // xorshift64*; reproducible across platforms
    state ^= state >> 12;
    state ^= state << 25;
    state ^= state >> 27;
    return state * 0x2545F4914F6CDD1DULL;
}

int DetRng::uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<unsigned long long>(hi - lo + 1));
}

CoxeterMatrix random_coxeter(DetRng& rng, int rank, int min_bond, int max_bond) {
    std::vector<std::vector<int>> m(rank, std::vector<int>(rank, 1));
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) m[i][j] = m[j][i] = rng.uniform(min_bond, max_bond);
    return CoxeterMatrix::make(std::move(m));
}

}  // namespace coxspec
