#pragma once

#include <cohit/divided.hpp>
#include <cohit/gf2.hpp>
#include <cohit/lambda.hpp>
#include <cohit/transfer.hpp>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cohit {

// Solve phi_k(x) + d(z) = y with x A-annihilated.
struct PreimageProblem {
    int k = 0;
    LambdaPoly y;
    int deg_x = 0;  // index sum of y
    int deg_z = 1;  // deg_x + 1
    TransferVariant variant = TransferVariant::chon_ha;
    int max_z_terms = 2;
    std::uint64_t kernel_cap = std::uint64_t{1} << 20;
    bool all = false;          // collect every verified solution instead of the first
    bool widen_z = false;      // z words may use lambda_0
    bool require_cocycle = true;
    // Order of the x unknowns; decides which solution is the particular one.
    // Default: lexicographic on (i_k, ..., i_1), the a_k-first reading.
    std::function<bool(const DividedMonomial&, const DividedMonomial&)> x_order;
};

PreimageProblem make_problem(int k, const LambdaPoly& y, TransferVariant v = TransferVariant::chon_ha);

class NotCocycleError : public std::runtime_error {
public:
    explicit NotCocycleError(LambdaPoly delta);
    const LambdaPoly& delta() const { return delta_; }

private:
    LambdaPoly delta_;
};

struct PreimageSystem {
    BitMatrix2 matrix;  // [phi columns | d columns], rows = admissible words
    std::vector<DividedMonomial> x_columns;
    std::vector<LambdaWord> z_columns;
    std::vector<LambdaWord> rows;
    BitVector2 target;
};

// Throws NotCocycleError when y is not a cocycle.
PreimageSystem assemble_system(const PreimageProblem& p);

struct PreimageSolution {
    DividedPoly x;
    LambdaPoly z;
    LambdaPoly certificate;  // adem_reduce(phi(x) + d(z))
};

enum class SearchStatus { found, no_solution, truncated };

struct PreimageResult {
    SearchStatus status = SearchStatus::no_solution;
    std::vector<PreimageSolution> solutions;
    std::uint64_t candidates_checked = 0;
    std::uint64_t z_candidates = 0;
    std::size_t kernel_dim = 0;  // of the annihilated phi-subsystem
};

// Called every 10000 kernel candidates with the running count.
using ProgressFn = std::function<void(std::uint64_t)>;

PreimageResult find_preimages(const PreimageProblem& p, const ProgressFn& progress = {});

bool verify_solution(int k, const DividedPoly& x, const LambdaPoly& z, const LambdaPoly& y,
                     TransferVariant v = TransferVariant::chon_ha);

std::string to_string(SearchStatus s);
// {x, z, y_admissible, variant, candidates_checked} per solution, plus status.
std::string certificate_json(const PreimageProblem& p, const PreimageResult& r);

}  // namespace cohit
