#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "coxspec/spectrum.hpp"

namespace coxspec {

struct FaithfulnessVerdict {
    bool faithful = false;
    long long kernel_size = 1;
    std::optional<DihedralElement> witness;  // smallest nontrivial kernel element
    enum class Method { theorem, oracle } method = Method::oracle;
};

// Intersection of the constituent kernels, by enumeration over Dih_2n.
std::vector<DihedralElement> kernel_of_spec(const RepSpec& spec);

// gcd-based criterion: n = 2 needs two of rho(1,2..4); n odd needs two-dim
// labels with gcd(n, k_1, ..., k_t) = 1; n even needs two-dim labels with
// gcd(n, k...) = 1, tightened to gcd(n/2, k...) = 1 when rho(1,3) or
// rho(1,4) occurs. Kernel data of a negative verdict comes from the oracle.
FaithfulnessVerdict is_faithful_theorem(const RepSpec& spec);

// Direct kernel computation.
FaithfulnessVerdict is_faithful_oracle(const RepSpec& spec);

// Kernel of the word evaluation over Dih_2n. By default n is detected as the
// order of A*B; pass ambient_n to judge faithfulness for a larger claimed
// dihedral group (the relations must still hold).
FaithfulnessVerdict is_faithful_matrices(const CycMatrix& a, const CycMatrix& b, int max_order,
                                         int ambient_n = 0);

struct PairReconstruction {
    int case_id = 1;       // 1: lines only, 2: no parity line, 3: parity line present
    long long theta = 1;   // lcm of ellipse label denominators (1 in case 1)
    int m = 2;             // reconstructed bond order
    bool faithful = false; // some faithful representation realizes the support
};

// Bond-order case analysis on the support of a curve multiset: lines
// only give 2; otherwise theta = lcm of the ellipse denominators, doubled
// when a parity line is present and theta is odd.
PairReconstruction reconstruct_order(const CurveSet& curves);

// True iff some faithful representation has exactly this support: map the
// curves back to irreducible labels of Dih_2m and apply the gcd criterion.
bool validate_faithful_curveset(const CurveSet& curves);

struct ReconstructionReport {
    CoxeterMatrix matrix;
    std::map<std::pair<int, int>, PairReconstruction> per_pair;
};

// Assemble the Coxeter matrix from per-pair curve sets. With strict = true
// every pair must pass validate_faithful_curveset.
ReconstructionReport reconstruct_matrix(const std::map<std::pair<int, int>, CurveSet>& pairs,
                                        int rank, bool strict);

struct PairAnalysis {
    PairReconstruction rec;
    FaithfulnessVerdict verdict;
    CurveSet curves;
    BiPoly f;
    int product_order = 1;
};

struct AnalysisReport {
    CoxeterMatrix matrix;
    std::map<std::pair<int, int>, PairAnalysis> pairs;
};

// Full pipeline over every generator pair: spectrum, faithfulness check,
// reconstruction, and the cross-check of the reconstructed bond against the
// detected product order. Throws faithfulness_violation when a pair fails.
AnalysisReport analyze(const MatrixRep& rep, int max_order, int ambient_n = 0);

// --- exhaustive-sweep helpers shared by selftest and the acceptance suite ---

// All specs with distinct labels, multiplicity 1, support size 1..max_support.
std::vector<RepSpec> all_support_specs(int n, int max_support);
// The same supports expanded over multiplicities 1..max_mult per term.
std::vector<RepSpec> all_specs_with_mults(int n, int max_support, int max_mult);

// Deterministic PRNG for reproducible random sweeps.
struct DetRng {
    unsigned long long state;
    explicit DetRng(unsigned long long seed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    unsigned long long next();
    int uniform(int lo, int hi);  // inclusive bounds
};

CoxeterMatrix random_coxeter(DetRng& rng, int rank, int min_bond, int max_bond);

}  // namespace coxspec
