#pragma once

#include <cohit/hitbasis.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cohit {

struct WeightStratum {
    WeightVector omega;
    std::vector<ExponentMonomial> basis;  // admissible monomials of this weight, basis order
};

struct SigmaComponent {
    std::vector<ExponentMonomial> members;  // compare_monomials order
    std::vector<BitVector2> kernel;         // reduced echelon basis over members
    std::vector<BitMatrix2> constraints;    // T_j + I for j = 1..k-1
};

struct Combination {
    std::vector<int> coeffs;  // over the kernel basis
    std::size_t terms = 0;
    BitVector2 vector;        // over the component members
};

enum class InvariantCase { case1, case2, case3 };
std::string to_string(InvariantCase c);

struct GlkCertificate {
    InvariantCase case_tag = InvariantCase::case3;
    std::optional<WeightVector> main_weight;
    std::optional<Poly2> h;
    std::optional<Poly2> h_prime;
    std::size_t correction_rows = 0;  // shape of the h' system
    std::size_t correction_cols = 0;
    std::vector<Poly2> global_sigma_basis;
    std::vector<std::vector<std::size_t>> constraint_equations;  // beta indices per nonzero row
    std::vector<BitVector2> solutions;                           // kernel vectors over global_sigma_basis
    std::vector<Poly2> invariant_basis;
    std::vector<std::string> warnings;
};

// Algorithm steps, individually callable.
std::vector<WeightStratum> weight_strata(const HitBasis& basis);
std::vector<SigmaComponent> sigma_components(const WeightStratum& stratum, const HitBasis& basis);
SigmaComponent component_invariants(SigmaComponent c, const HitBasis& basis);
std::vector<Combination> meaningful_combinations(const std::vector<BitVector2>& kernel, std::size_t component_size);

struct WeightwiseResult {
    std::vector<Poly2> invariants;
    std::vector<std::vector<std::size_t>> equations;  // gamma indices per nonzero row of A
    std::vector<BitVector2> solutions;
};
WeightwiseResult weightwise_glk(const WeightStratum& stratum, const std::vector<Poly2>& sigma_invariants,
                                const HitBasis& basis);

struct CaseDetection {
    InvariantCase tag;
    std::optional<WeightVector> main_weight;
};
// Inputs are parallel to the strata (weight order): invariant counts per weight.
CaseDetection detect_case(const std::vector<WeightVector>& weights, const std::vector<std::size_t>& glk_counts,
                          const std::vector<std::size_t>& sigma_counts);

bool verify_global_sigma(const Poly2& p, const HitBasis& basis);
bool verify_glk(const Poly2& p, const HitBasis& basis);  // all rho_1..rho_k

struct CorrectionResult {
    std::optional<Poly2> h_prime;  // nullopt: inconsistent system
    std::size_t rows = 0;
    std::size_t cols = 0;
};
CorrectionResult particular_correction(const Poly2& h, const std::vector<ExponentMonomial>& correction_basis,
                                       const HitBasis& basis);

struct StratumAnalysis {
    WeightStratum stratum;
    std::vector<SigmaComponent> components;
    std::vector<std::vector<Combination>> selections;  // per component
    std::vector<Poly2> sigma_invariants;               // all selections, component order
    WeightwiseResult glk;
};

struct InvariantReport {
    int k = 0;
    int d = 0;
    std::vector<StratumAnalysis> strata;
    GlkCertificate certificate;
};

InvariantReport global_glk_invariants(const HitBasis& basis, const ParallelFor& pf = serial_for);

std::string certificate_json(const InvariantReport& r);
std::string text_report(const InvariantReport& r, const HitBasis& basis);
std::string format_weight(const WeightVector& w);  // "(3,3,2,2)"

}  // namespace cohit
