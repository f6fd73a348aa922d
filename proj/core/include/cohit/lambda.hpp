#pragma once

#include <cohit/termset.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cohit {

// lambda_{i_1} ... lambda_{i_s}, stored as (i_1, ..., i_s).
using LambdaWord = IntTuple;

struct LambdaTag {};
using LambdaPoly = TermSet<LambdaTag>;

class RewriteBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// i_j <= 2 i_{j+1} for every adjacent pair.
bool is_admissible(const LambdaWord& w);

// Adem normal form. Rewrites the leftmost inadmissible pair
//   lambda_s lambda_t  (s > 2t)  ->  sum_j C(j-t-1, 2j-s) lambda_{s+t-j} lambda_j
// until every word is admissible. Per-word results are memoized per thread.
LambdaPoly adem_reduce(const LambdaPoly& p);
LambdaPoly adem_reduce(const LambdaWord& w);
// One rewrite at position pos (pos, pos+1 must be an inadmissible pair).
LambdaPoly adem_rewrite_at(const LambdaWord& w, std::size_t pos);
// Cap on rewrite steps for a single adem_reduce call.
void set_rewrite_budget(std::size_t steps);

// Word order of the two letters in d(lambda_n), coefficient C(n-1-t, t+1):
//   matched:  lambda_t lambda_{n-1-t}. This is the form that squares to zero
//             with the relations and admissible basis used here.
//   reversed: lambda_{n-1-t} lambda_t. Belongs to the mirror-image convention
//             (admissible when i_{j+1} <= 2 i_j); with these relations d^2 != 0.
//             Kept only to replay hand computations written in that form.
enum class DifferentialOrder { matched, reversed };

// Leibniz extension over words, no signs. Output is not reduced.
LambdaPoly differential(const LambdaPoly& p, DifferentialOrder order = DifferentialOrder::matched);
LambdaPoly differential(const LambdaWord& w, DifferentialOrder order = DifferentialOrder::matched);

bool is_cocycle(const LambdaPoly& p);

std::vector<LambdaWord> positive_compositions(int total, int parts);
std::vector<LambdaWord> nonnegative_compositions(int total, int parts);

// All admissible words with the given length and index sum, in lex order.
std::vector<LambdaWord> admissible_words(int length, int total);

LambdaPoly parse_lambda(std::string_view s);
std::string format_lambda(const LambdaPoly& p);
// "lambda_3lambda_3lambda_2" style, sorted by (index sum, word).
std::string format_lambda_names(const LambdaPoly& p);

}  // namespace cohit
