#pragma once

#include <cohit/termset.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace cohit {

// x_1^{e_1} ... x_k^{e_k}, stored as the exponent tuple (e_1, ..., e_k).
using ExponentMonomial = IntTuple;

struct PolyTag {};
using Poly2 = TermSet<PolyTag>;

// omega_j = number of exponents with binary digit j-1 set; trailing zeros stripped.
using WeightVector = std::vector<int>;

int degree(const ExponentMonomial& m);

// All compositions of d into k nonnegative parts, in lexicographic order.
std::vector<ExponentMonomial> monomials_of_degree(int k, int d);

WeightVector weight_vector(const ExponentMonomial& m);
int weight_degree(const WeightVector& w);  // sum 2^{j-1} omega_j

// Lexicographic with the shorter vector padded by zeros.
int compare_weights(const WeightVector& a, const WeightVector& b);
// Weight vectors first, then exponent tuples; returns -1, 0 or 1.
int compare_monomials(const ExponentMonomial& a, const ExponentMonomial& b);
struct MonomialLess {
    bool operator()(const ExponentMonomial& a, const ExponentMonomial& b) const {
        return compare_monomials(a, b) < 0;
    }
};

// Total Steenrod square Sq^i. The monomial version is memoized per thread.
Poly2 sq(int i, const ExponentMonomial& m);
Poly2 sq(int i, const Poly2& f);

// rho_j for j < k swaps x_j and x_{j+1}; rho_k sends x_k to x_k + x_{k-1}.
Poly2 apply_rho(const Poly2& p, int j, int k);

Poly2 multiply(const Poly2& a, const Poly2& b);
int variables(const Poly2& p);  // common tuple length, 0 for the zero polynomial

Poly2 parse_poly(std::string_view s);
std::string format_poly(const Poly2& p);

}  // namespace cohit
