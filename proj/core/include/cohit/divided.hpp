#pragma once

#include <cohit/poly.hpp>
#include <cohit/termset.hpp>

#include <string>
#include <string_view>

namespace cohit {

// a_1^{(i_1)} ... a_k^{(i_k)}, stored as (i_1, ..., i_k). Zero entries are kept.
using DividedMonomial = IntTuple;

struct DividedTag {};
using DividedPoly = TermSet<DividedTag>;

// Right action of the dual square: sum over j_1+...+j_k = j of
// prod_t C(i_t - j_t, j_t) a^{(i_t - j_t)}.
DividedPoly sq_star(const DividedMonomial& m, int j);
DividedPoly sq_star(const DividedPoly& x, int j);

// (x)Sq_*^{2^t} = 0 for every t with 2^t <= deg x. Zero counts as annihilated.
bool is_A_annihilated(const DividedPoly& x);

// Parity of the number of exponent tuples common to u and v.
int pairing(const DividedPoly& u, const Poly2& v);

int divided_degree(const DividedPoly& x);  // -1 for zero

DividedPoly parse_divided(std::string_view s);
std::string format_divided(const DividedPoly& x);

}  // namespace cohit
