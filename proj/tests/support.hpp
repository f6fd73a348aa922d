#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library routine it is meant to check.

#include <cohit/divided.hpp>
#include <cohit/gf2.hpp>
#include <cohit/hitbasis.hpp>
#include <cohit/lambda.hpp>
#include <cohit/poly.hpp>
#include <cohit/text.hpp>
#include <cohit/transfer.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using cohit::IntTuple;

inline std::string data_path(const std::string& name) { return std::string(COHIT_TEST_DATA) + "/" + name; }

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing test data: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string read_data(const std::string& name) { return read_file(data_path(name)); }

// "name : payload" lines, '#' comments skipped.
inline std::map<std::string, std::string> read_named(const std::string& name) {
    std::map<std::string, std::string> out;
    std::istringstream in(read_data(name));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto colon = line.find(':');
        auto key = line.substr(0, colon);
        key.erase(key.find_last_not_of(' ') + 1);
        out[key] = line.substr(colon + 1);
    }
    return out;
}

// Binomial coefficient from factorials, n <= 20 fits in 64 bits.
inline int binom_parity_factorial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::uint64_t f[21] = {1};
    for (int i = 1; i <= 20; ++i) f[i] = f[i - 1] * static_cast<std::uint64_t>(i);
    return static_cast<int>((f[n] / (f[k] * f[n - k])) & 1);
}

// Plain binomial mod 2 by Pascal's rule, for arguments the factorial table cannot hold.
inline int binom_pascal(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    static std::vector<std::vector<int>> rows{{1}};
    while (static_cast<int>(rows.size()) <= n) {
        const auto& p = rows.back();
        std::vector<int> r(p.size() + 1, 1);
        for (std::size_t i = 1; i < p.size(); ++i) r[i] = p[i - 1] ^ p[i];
        rows.push_back(std::move(r));
    }
    return rows[n][k];
}

// ---- dense linear algebra over F2 ----

using Dense = std::vector<std::vector<int>>;  // row-major

inline std::size_t dense_rank(Dense m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && !m[p][c]) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != r && m[i][c])
                for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
        ++r;
    }
    return r;
}

// Number of x with m x = 0, by trying every x (cols <= 16).
inline std::size_t brute_kernel_size(const Dense& m, std::size_t cols) {
    std::size_t count = 0;
    for (std::uint32_t x = 0; x < (1u << cols); ++x) {
        bool zero = true;
        for (const auto& row : m) {
            int s = 0;
            for (std::size_t j = 0; j < cols; ++j) s ^= row[j] & static_cast<int>((x >> j) & 1);
            if (s) {
                zero = false;
                break;
            }
        }
        count += zero;
    }
    return count;
}

// Solve m x = b by elimination on the augmented matrix; empty optional if inconsistent.
inline std::optional<std::vector<int>> dense_solve(Dense m, std::vector<int> b) {
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t i = 0; i < rows; ++i) m[i].push_back(b[i]);
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && !m[p][c]) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && m[i][c])
                for (std::size_t j = 0; j <= cols; ++j) m[i][j] ^= m[r][j];
        piv.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (m[i][cols]) return std::nullopt;
    std::vector<int> x(cols, 0);
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = m[i][cols];
    return x;
}

// ---- Steenrod squares by the binomial formula ----

// Sq^j(x^e) = sum over j_1+..+j_k = j of prod C(e_t, j_t) x^{e+j}.
inline std::map<IntTuple, int> sq_binomial(int j, const IntTuple& e) {
    std::map<IntTuple, int> out;
    std::function<void(std::size_t, int, IntTuple&, int)> rec = [&](std::size_t t, int left, IntTuple& cur, int c) {
        if (t == e.size()) {
            if (left == 0 && c) out[cur] ^= 1;
            return;
        }
        for (int a = 0; a <= left; ++a) {
            int bc = binom_pascal(e[t], a);
            if (!bc) continue;
            cur[t] = e[t] + a;
            rec(t + 1, left - a, cur, c & bc);
        }
        cur[t] = e[t];
    };
    IntTuple cur = e;
    rec(0, j, cur, 1);
    for (auto it = out.begin(); it != out.end();) it = it->second ? std::next(it) : out.erase(it);
    return out;
}

// ---- literal [M_hit | I] hit-basis oracle ----

struct LiteralBasis {
    std::vector<IntTuple> monomials;   // compare order
    std::vector<IntTuple> admissible;  // compare order
    std::vector<std::vector<int>> coordinates;  // per monomial, over admissible
};

inline LiteralBasis literal_hit_basis(int k, int d) {
    LiteralBasis b;
    b.monomials = cohit::monomials_of_degree(k, d);
    std::sort(b.monomials.begin(), b.monomials.end(), cohit::MonomialLess{});
    const std::size_t n = b.monomials.size();
    std::map<IntTuple, std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) idx[b.monomials[i]] = i;
    Dense hit_cols;  // each entry is a column of length n
    for (int p = 1; p <= d; p <<= 1) {
        if (d - p < 0) break;
        for (const auto& g : cohit::monomials_of_degree(k, d - p)) {
            auto img = sq_binomial(p, g);
            if (img.empty()) continue;
            std::vector<int> col(n, 0);
            for (const auto& [m, c] : img) col[idx.at(m)] = c;
            hit_cols.push_back(col);
        }
    }
    auto rank_of = [&](const Dense& cols) {
        Dense rows(n, std::vector<int>(cols.size(), 0));
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (std::size_t r = 0; r < n; ++r) rows[r][c] = cols[c][r];
        return dense_rank(rows);
    };
    // m is admissible iff x^m is not congruent to a sum of smaller monomials modulo hits.
    Dense cols = hit_cols;
    std::size_t base = rank_of(cols);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        Dense with = cols;
        with.push_back(e);
        std::size_t rk = rank_of(with);
        if (rk > base) b.admissible.push_back(b.monomials[i]);
        cols = std::move(with);
        base = rk;
    }
    // Coordinates: solve [M_hit | I_adm] (c, a) = e_m and keep the a-part.
    const std::size_t h = hit_cols.size(), na = b.admissible.size();
    Dense sys(n, std::vector<int>(h + na, 0));
    for (std::size_t c = 0; c < h; ++c)
        for (std::size_t r = 0; r < n; ++r) sys[r][c] = hit_cols[c][r];
    for (std::size_t a = 0; a < na; ++a) sys[idx.at(b.admissible[a])][h + a] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        auto x = dense_solve(sys, e);
        if (!x) throw std::logic_error("literal_hit_basis: unsolvable");
        b.coordinates.emplace_back(x->begin() + static_cast<long>(h), x->end());
    }
    return b;
}

// ---- transfer oracles ----

// Triple sum for k = 3. m = (t_1, t_2, t_3) with a_1 first.
inline std::map<IntTuple, int> transfer_k3_closed(const IntTuple& m) {
    const int t1 = m[0], t2 = m[1], t3 = m[2], T = t1 + t2 + t3;
    std::map<IntTuple, int> out;
    for (int i1 = t1; i1 <= T; ++i1)
        for (int u1 = 0; u1 <= i1 - t1; ++u1) {
            const int u2 = i1 - t1 - u1;
            for (int i2 = std::max(0, t2 - u2); i2 <= T - i1; ++i2) {
                int c = binom_pascal(t3 - u1, u1) & binom_pascal(t2 - u2, u2) &
                        binom_pascal(T - i1 - i2, i2 + u2 - t2);
                if (c) out[{i1, i2, T - i1 - i2}] ^= 1;
            }
        }
    for (auto it = out.begin(); it != out.end();) it = it->second ? std::next(it) : out.erase(it);
    return out;
}

// Five-fold sum for k = 4. m = (t_1, t_2, t_3, t_4).
inline std::map<IntTuple, int> transfer_k4_closed(const IntTuple& m) {
    const int t1 = m[0], t2 = m[1], t3 = m[2], t4 = m[3], T = t1 + t2 + t3 + t4;
    std::map<IntTuple, int> out;
    for (int i1 = t1; i1 <= T; ++i1)
        for (int k1 = 0; k1 <= i1 - t1; ++k1)
            for (int k2 = 0; k1 + k2 <= i1 - t1; ++k2) {
                const int k3 = i1 - t1 - k1 - k2;
                for (int i2 = std::max(0, t2 - k3); i1 + i2 <= T; ++i2)
                    for (int u1 = 0; u1 <= i2 + k3 - t2; ++u1) {
                        const int u2 = i2 + k3 - t2 - u1;
                        for (int i3 = std::max(0, t3 - k2 - u2); i1 + i2 + i3 <= T; ++i3) {
                            const int i4 = T - i1 - i2 - i3;
                            int c = binom_pascal(t4 - k1, k1) & binom_pascal(t3 - k2, k2) &
                                    binom_pascal(t2 - k3, k3) & binom_pascal(t4 - k1 - u1, u1) &
                                    binom_pascal(t3 - k2 - u2, u2) & binom_pascal(i4, i3 + k2 + u2 - t3);
                            if (c) out[{i1, i2, i3, i4}] ^= 1;
                        }
                    }
            }
    for (auto it = out.begin(); it != out.end();) it = it->second ? std::next(it) : out.erase(it);
    return out;
}

// Independent dictionary-based implementation of the appended-letter recursion.
// Monomials are in (t_k, ..., t_1) reading; zero exponents are dropped
// by sq_star and restored by left padding in phi.
struct ListingTransfer {
    std::map<std::pair<IntTuple, int>, std::map<IntTuple, int>> sq_memo;
    std::map<std::pair<int, IntTuple>, std::map<IntTuple, int>> phi_memo;

    std::map<IntTuple, int> sq_star(const IntTuple& mono, int i) {
        if (i < 0) return {};
        if (mono.empty()) return i == 0 ? std::map<IntTuple, int>{{{}, 1}} : std::map<IntTuple, int>{};
        int total = 0;
        for (int x : mono) total += x;
        if (i > total) return {};
        auto key = std::make_pair(mono, i);
        if (auto it = sq_memo.find(key); it != sq_memo.end()) return it->second;
        std::map<IntTuple, int> result;
        const int tk = mono[0];
        IntTuple rest(mono.begin() + 1, mono.end());
        for (int ik = 0; ik <= std::min(i, tk); ++ik) {
            if (!binom_pascal(tk - ik, ik)) continue;
            IntTuple head;
            if (tk - ik > 0) head.push_back(tk - ik);
            for (const auto& [sub, c] : sq_star(rest, i - ik)) {
                IntTuple t = head;
                t.insert(t.end(), sub.begin(), sub.end());
                result[t] += c;
            }
        }
        std::map<IntTuple, int> odd;
        for (const auto& [t, c] : result)
            if (c & 1) odd[t] = 1;
        sq_memo[key] = odd;
        return odd;
    }

    std::map<IntTuple, int> phi(int k, const IntTuple& mono) {
        if (k == 0) return {{{}, 1}};
        auto key = std::make_pair(k, mono);
        if (auto it = phi_memo.find(key); it != phi_memo.end()) return it->second;
        IntTuple padded(static_cast<std::size_t>(k) - mono.size(), 0);
        padded.insert(padded.end(), mono.begin(), mono.end());
        int total = 0;
        for (int x : padded) total += x;
        std::map<IntTuple, int> acc;
        const int tk = padded[0];
        IntTuple rest(padded.begin() + 1, padded.end());
        for (int i = tk; i < total + k * 4; ++i) {
            for (const auto& [mnew, c] : sq_star(rest, i - tk)) {
                (void)c;
                for (const auto& [w, c2] : phi(k - 1, mnew)) {
                    (void)c2;
                    IntTuple word = w;
                    word.push_back(i);
                    acc[word] += 1;
                }
            }
        }
        std::map<IntTuple, int> odd;
        for (const auto& [t, c] : acc)
            if (c & 1) odd[t] = 1;
        phi_memo[key] = odd;
        return odd;
    }
};

// Matching reducer: rewrite the first inadmissible pair of the first
// term that has one, until none remain. Terms are scanned in key order here
// rather than dictionary order; the normal form does not depend on it.
inline std::map<IntTuple, int> listing_reduce(std::map<IntTuple, int> poly) {
    for (;;) {
        std::optional<std::pair<IntTuple, std::size_t>> site;
        for (const auto& [term, c] : poly) {
            for (std::size_t i = 0; i + 1 < term.size() && !site; ++i)
                if (term[i] > 2 * term[i + 1]) site.emplace(term, i);
            if (site) break;
        }
        if (!site) return poly;
        const auto [term, i] = *site;
        const int s = term[i], t = term[i + 1];
        poly.erase(term);
        for (int j = 0; j <= s + t; ++j) {
            if (!binom_pascal(j - t - 1, 2 * j - s)) continue;
            IntTuple nt(term.begin(), term.begin() + static_cast<long>(i));
            nt.push_back(s + t - j);
            nt.push_back(j);
            nt.insert(nt.end(), term.begin() + static_cast<long>(i) + 2, term.end());
            if (poly.count(nt)) poly.erase(nt);
            else poly[nt] = 1;
        }
    }
}

// Adem reduction applying rewrites at random positions of random terms.
inline cohit::LambdaPoly random_order_reduce(const cohit::LambdaPoly& p, std::mt19937& rng) {
    std::map<IntTuple, int> cur;
    for (const auto& w : p) cur[w] = 1;
    for (;;) {
        std::vector<std::pair<IntTuple, std::size_t>> sites;
        for (const auto& [w, c] : cur)
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i] > 2 * w[i + 1]) sites.emplace_back(w, i);
        if (sites.empty()) break;
        auto [w, pos] = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
        cur.erase(w);
        for (const auto& t : cohit::adem_rewrite_at(w, pos)) {
            if (cur.count(t)) cur.erase(t);
            else cur[t] = 1;
        }
    }
    std::vector<IntTuple> terms;
    for (const auto& [w, c] : cur) terms.push_back(w);
    return cohit::LambdaPoly::from_terms(std::move(terms));
}

template <class Tag>
std::map<IntTuple, int> as_map(const cohit::TermSet<Tag>& s) {
    std::map<IntTuple, int> m;
    for (const auto& t : s) m[t] = 1;
    return m;
}

inline IntTuple reversed(IntTuple t) {
    std::reverse(t.begin(), t.end());
    return t;
}

// ---- exhaustive fixed vectors ----

// Dimension of the subspace of (QP_k)_d fixed by every rho_j, by trying
// every coordinate vector (dim <= 20).
inline std::size_t brute_glk_dimension(const cohit::HitBasis& b) {
    const std::size_t n = b.admissible.size();
    if (n > 20) throw std::invalid_argument("brute_glk_dimension: space too large");
    std::size_t fixed = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<IntTuple> t;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1) t.push_back(b.admissible[i]);
        auto f = cohit::Poly2::from_terms(std::move(t));
        bool ok = true;
        for (int j = 1; j <= b.k && ok && b.k >= 2; ++j)
            ok = cohit::decompose(cohit::apply_rho(f, j, b.k) + f, b).is_zero();
        fixed += ok;
    }
    std::size_t dim = 0;
    while ((std::size_t{1} << dim) < fixed) ++dim;
    return dim;
}

}  // namespace oracle
