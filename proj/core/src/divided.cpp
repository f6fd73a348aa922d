#include <cohit/divided.hpp>
#include <cohit/gf2.hpp>
#include <cohit/text.hpp>

#include <stdexcept>

namespace cohit {

namespace {

void star_expand(const DividedMonomial& m, std::size_t t, int remaining, DividedMonomial& cur,
                 std::vector<DividedMonomial>& out) {
    if (t == m.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    const int i = m[t];
    // C(i - j, j) vanishes once 2j > i.
    for (int j = 0; 2 * j <= i && j <= remaining; ++j) {
        if (!binom_mod2(i - j, j)) continue;
        cur[t] = i - j;
        star_expand(m, t + 1, remaining - j, cur, out);
    }
    cur[t] = i;
}

}  // namespace

DividedPoly sq_star(const DividedMonomial& m, int j) {
    if (j < 0) throw std::invalid_argument("sq_star: negative index");
    if (j == 0) return DividedPoly::single(m);
    std::vector<DividedMonomial> out;
    DividedMonomial cur = m;
    star_expand(m, 0, j, cur, out);
    return DividedPoly::from_terms(std::move(out));
}

DividedPoly sq_star(const DividedPoly& x, int j) {
    TermAccumulator<DividedTag> acc;
    for (const auto& m : x) acc.add(sq_star(m, j));
    return acc.finish();
}

int divided_degree(const DividedPoly& x) { return x.empty() ? -1 : degree(x.terms().front()); }

bool is_A_annihilated(const DividedPoly& x) {
    const int d = divided_degree(x);
    for (int p = 1; p <= d; p <<= 1)
        if (!sq_star(x, p).is_zero()) return false;
    return true;
}

int pairing(const DividedPoly& u, const Poly2& v) {
    int c = 0;
    auto a = u.begin();
    auto b = v.begin();
    while (a != u.end() && b != v.end()) {
        if (*a < *b)
            ++a;
        else if (*b < *a)
            ++b;
        else {
            ++c;
            ++a;
            ++b;
        }
    }
    return c & 1;
}

DividedPoly parse_divided(std::string_view s) {
    auto terms = parse_tuple_sum(s);
    for (const auto& t : terms)
        if (t.size() != terms.front().size()) throw ParseError(0, "terms have different numbers of generators");
    return DividedPoly::from_terms(std::move(terms));
}

std::string format_divided(const DividedPoly& x) { return to_text(x); }

}  // namespace cohit
