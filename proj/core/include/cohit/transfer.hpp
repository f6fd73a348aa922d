#pragma once

#include <cohit/divided.hpp>
#include <cohit/lambda.hpp>

#include <string>
#include <string_view>

namespace cohit {

enum class TransferVariant { chon_ha, sum };

std::string to_string(TransferVariant v);
TransferVariant parse_variant(std::string_view s);  // "chon-ha" or "sum"

// Chain-level transfer of a^{(t_1)}...a^{(t_k)}; k is the tuple length.
//   chon_ha: sum_{i >= t_1} lambda_i * phi((t_2..t_k) Sq_*^{i-t_1})
//   sum:     sum_{i >= t_k} phi((t_1..t_{k-1}) Sq_*^{i-t_k}) * lambda_i
// Words have length k and index sum deg m. The result is not Adem-reduced.
LambdaPoly transfer(const DividedMonomial& m, TransferVariant v = TransferVariant::chon_ha);
LambdaPoly transfer_poly(const DividedPoly& x, TransferVariant v = TransferVariant::chon_ha);

}  // namespace cohit
