#include <cohit/gf2.hpp>
#include <cohit/poly.hpp>
#include <cohit/text.hpp>

#include <stdexcept>
#include <unordered_map>

namespace cohit {

int degree(const ExponentMonomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

namespace {

void compositions(int k, int d, std::vector<int>& cur, std::vector<ExponentMonomial>& out) {
    if (static_cast<int>(cur.size()) == k - 1) {
        cur.push_back(d);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int a = 0; a <= d; ++a) {
        cur.push_back(a);
        compositions(k, d - a, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<ExponentMonomial> monomials_of_degree(int k, int d) {
    if (k < 1 || d < 0) throw std::invalid_argument("monomials_of_degree: need k >= 1, d >= 0");
    std::vector<ExponentMonomial> out;
    std::vector<int> cur;
    compositions(k, d, cur, out);
    return out;
}

WeightVector weight_vector(const ExponentMonomial& m) {
    WeightVector w;
    for (int bit = 0; bit < 31; ++bit) {
        int c = 0;
        for (int e : m) c += (e >> bit) & 1;
        w.push_back(c);
    }
    while (!w.empty() && w.back() == 0) w.pop_back();
    return w;
}

int weight_degree(const WeightVector& w) {
    int d = 0;
    for (std::size_t j = 0; j < w.size(); ++j) d += w[j] << j;
    return d;
}

int compare_weights(const WeightVector& a, const WeightVector& b) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int x = i < a.size() ? a[i] : 0;
        int y = i < b.size() ? b[i] : 0;
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

int compare_monomials(const ExponentMonomial& a, const ExponentMonomial& b) {
    int c = compare_weights(weight_vector(a), weight_vector(b));
    if (c) return c;
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

namespace {

// Sq^i(x^e) = sum over j_1+...+j_k = i with each j_t a binary submask of e_t
// of x^{e+j}. Distinct j give distinct monomials, so nothing cancels.
void sq_expand(const ExponentMonomial& m, std::size_t t, int remaining, ExponentMonomial& cur,
               std::vector<ExponentMonomial>& out) {
    if (t == m.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    int suffix = 0;
    for (std::size_t u = t + 1; u < m.size(); ++u) suffix += m[u];
    const int e = m[t];
    // Enumerate submasks j of e with j <= remaining and remaining - j <= suffix.
    for (int j = e;; j = (j - 1) & e) {
        if (j <= remaining && remaining - j <= suffix) {
            cur[t] = e + j;
            sq_expand(m, t + 1, remaining - j, cur, out);
        }
        if (j == 0) break;
    }
    cur[t] = e;
}

struct SqKeyHash {
    std::size_t operator()(const std::pair<int, ExponentMonomial>& k) const noexcept {
        return IntTupleHash{}(k.second) * 31 + static_cast<std::size_t>(k.first);
    }
};

}  // namespace

Poly2 sq(int i, const ExponentMonomial& m) {
    if (i < 0) throw std::invalid_argument("sq: negative index");
    if (i == 0) return Poly2::single(m);
    if (i > degree(m)) return {};
    thread_local std::unordered_map<std::pair<int, ExponentMonomial>, Poly2, SqKeyHash> memo;
    auto key = std::make_pair(i, m);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<ExponentMonomial> out;
    ExponentMonomial cur = m;
    sq_expand(m, 0, i, cur, out);
    Poly2 r = Poly2::from_terms(std::move(out));
    if (memo.size() > 4'000'000) memo.clear();
    memo.emplace(std::move(key), r);
    return r;
}

Poly2 sq(int i, const Poly2& f) {
    TermAccumulator<PolyTag> acc;
    for (const auto& m : f) acc.add(sq(i, m));
    return acc.finish();
}

Poly2 apply_rho(const Poly2& p, int j, int k) {
    if (k < 1 || j < 1 || j > k || (j == k && k < 2))
        throw std::invalid_argument("apply_rho: need 1 <= j <= k and k >= 2 when j = k");
    TermAccumulator<PolyTag> acc;
    for (const auto& m : p) {
        if (static_cast<int>(m.size()) != k) throw std::invalid_argument("apply_rho: monomial length differs from k");
        if (j < k) {
            ExponentMonomial r = m;
            std::swap(r[j - 1], r[j]);
            acc.add(std::move(r));
        } else {
            // (x_k + x_{k-1})^e = sum_i C(e,i) x_{k-1}^i x_k^{e-i}
            const int e = m[k - 1];
            for (int i = 0; i <= e; ++i) {
                if (!binom_mod2(e, i)) continue;
                ExponentMonomial r = m;
                r[k - 2] += i;
                r[k - 1] = e - i;
                acc.add(std::move(r));
            }
        }
    }
    return acc.finish();
}

Poly2 multiply(const Poly2& a, const Poly2& b) {
    TermAccumulator<PolyTag> acc;
    for (const auto& x : a)
        for (const auto& y : b) {
            if (x.size() != y.size()) throw std::invalid_argument("multiply: variable count mismatch");
            ExponentMonomial r = x;
            for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
            acc.add(std::move(r));
        }
    return acc.finish();
}

int variables(const Poly2& p) { return p.empty() ? 0 : static_cast<int>(p.terms().front().size()); }

Poly2 parse_poly(std::string_view s) {
    auto terms = parse_tuple_sum(s);
    for (const auto& t : terms)
        if (t.size() != terms.front().size()) throw ParseError(0, "monomials have different numbers of variables");
    return Poly2::from_terms(std::move(terms));
}

std::string format_poly(const Poly2& p) { return to_text(p); }

}  // namespace cohit
