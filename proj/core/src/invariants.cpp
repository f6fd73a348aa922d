#include <cohit/invariants.hpp>
#include <cohit/text.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <stdexcept>
#include <unordered_map>

namespace cohit {

std::string to_string(InvariantCase c) {
    switch (c) {
        case InvariantCase::case1: return "CASE_1";
        case InvariantCase::case2: return "CASE_2";
        case InvariantCase::case3: return "CASE_3";
    }
    return "?";
}

std::string format_weight(const WeightVector& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

namespace {

std::string x_monomial(const ExponentMonomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

// decompose((rho_j + I) p); zero when k = 1, where there are no generators.
BitVector2 rho_error(const Poly2& p, int j, const HitBasis& basis) {
    if (basis.k < 2) return BitVector2(basis.admissible.size());
    return decompose(apply_rho(p, j, basis.k) + p, basis);
}

Poly2 sum_of(const std::vector<ExponentMonomial>& members, const BitVector2& v) {
    std::vector<ExponentMonomial> t;
    for (auto i : v.support()) t.push_back(members[i]);
    return Poly2::from_terms(std::move(t));
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// Incremental independence test over coefficient masks.
struct XorBasis {
    std::vector<std::uint64_t> rows;
    bool insert(std::uint64_t v) {
        for (auto r : rows) v = std::min(v, v ^ r);
        if (!v) return false;
        rows.push_back(v);
        std::sort(rows.rbegin(), rows.rend());
        return true;
    }
};

}  // namespace

std::vector<WeightStratum> weight_strata(const HitBasis& basis) {
    std::vector<WeightStratum> out;
    for (const auto& m : basis.admissible) {
        auto w = weight_vector(m);
        auto it = std::find_if(out.begin(), out.end(), [&](const WeightStratum& s) { return s.omega == w; });
        if (it == out.end()) out.push_back({w, {m}});
        else it->basis.push_back(m);
    }
    std::sort(out.begin(), out.end(),
              [](const WeightStratum& a, const WeightStratum& b) { return compare_weights(a.omega, b.omega) < 0; });
    for (auto& s : out) std::sort(s.basis.begin(), s.basis.end(), MonomialLess{});
    return out;
}

std::vector<SigmaComponent> sigma_components(const WeightStratum& stratum, const HitBasis& basis) {
    const auto& members = stratum.basis;
    std::unordered_map<ExponentMonomial, std::size_t, IntTupleHash> local;
    for (std::size_t i = 0; i < members.size(); ++i) local.emplace(members[i], i);
    UnionFind uf(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
        for (int j = 1; j < basis.k; ++j) {
            auto v = decompose(apply_rho(Poly2::single(members[i]), j, basis.k), basis);
            for (auto p : v.support())
                if (auto it = local.find(basis.admissible[p]); it != local.end()) uf.unite(i, it->second);
        }
    std::map<std::size_t, std::vector<ExponentMonomial>> groups;  // root is the least index
    for (std::size_t i = 0; i < members.size(); ++i) groups[uf.find(i)].push_back(members[i]);
    std::vector<SigmaComponent> out;
    for (auto& [root, ms] : groups) {
        SigmaComponent c;
        c.members = std::move(ms);
        out.push_back(std::move(c));
    }
    return out;
}

SigmaComponent component_invariants(SigmaComponent c, const HitBasis& basis) {
    const std::size_t n = c.members.size();
    std::unordered_map<ExponentMonomial, std::size_t, IntTupleHash> local;
    for (std::size_t i = 0; i < n; ++i) local.emplace(c.members[i], i);
    c.constraints.clear();
    BitMatrix2 stacked(0, n);
    for (int j = 1; j < basis.k; ++j) {
        BitMatrix2 t(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::uint32_t> rows{static_cast<std::uint32_t>(i)};
            auto v = decompose(apply_rho(Poly2::single(c.members[i]), j, basis.k), basis);
            for (auto p : v.support())
                if (auto it = local.find(basis.admissible[p]); it != local.end())
                    rows.push_back(static_cast<std::uint32_t>(it->second));
            t.append_column(std::move(rows));
        }
        stacked = stacked.stack(t);
        c.constraints.push_back(std::move(t));
    }
    // The kernel basis is reduced echelon with pivots taken in the textual
    // order of the printed monomials. Any basis spans the same space; this
    // one gives the familiar representatives.
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::string> names;
    for (const auto& m : c.members) names.push_back(x_monomial(m));
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });
    std::vector<BitVector2> permuted;
    for (const auto& v : right_kernel_basis(stacked)) {
        BitVector2 w(n);
        for (std::size_t i = 0; i < n; ++i) w.set(i, v.get(perm[i]));
        permuted.push_back(std::move(w));
    }
    c.kernel.clear();
    for (const auto& w : echelon_basis(permuted, n)) {
        BitVector2 v(n);
        for (std::size_t i = 0; i < n; ++i) v.set(perm[i], w.get(i));
        c.kernel.push_back(std::move(v));
    }
    return c;
}

std::vector<Combination> meaningful_combinations(const std::vector<BitVector2>& kernel, std::size_t component_size) {
    const std::size_t dim = kernel.size();
    std::vector<Combination> out;
    if (dim == 0) return out;
    auto by_terms = [](const Combination& a, const Combination& b) { return a.terms < b.terms; };
    if (dim > 20) {
        // Exhaustive enumeration is out of reach; the kernel basis itself is returned.
        for (std::size_t i = 0; i < dim; ++i) {
            Combination c;
            c.coeffs.assign(dim, 0);
            c.coeffs[i] = 1;
            c.terms = kernel[i].weight();
            c.vector = kernel[i];
            out.push_back(std::move(c));
        }
        std::stable_sort(out.begin(), out.end(), by_terms);
        return out;
    }

    struct Entry {
        std::uint64_t mask;
        Combination c;
        int complexity;
    };
    std::vector<Entry> all;
    const std::size_t len = kernel.front().length();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << dim); ++mask) {
        Entry e{mask, {}, 0};
        e.c.coeffs.assign(dim, 0);
        e.c.vector = BitVector2(len);
        for (std::size_t j = 0; j < dim; ++j)
            if ((mask >> j) & 1) {
                e.c.coeffs[j] = 1;
                e.c.vector += kernel[j];
                ++e.complexity;
            }
        e.c.terms = e.c.vector.weight();
        if (e.c.terms) all.push_back(std::move(e));
    }
    std::sort(all.begin(), all.end(), [](const Entry& a, const Entry& b) {
        if (a.complexity != b.complexity) return a.complexity < b.complexity;
        if (a.c.terms != b.c.terms) return a.c.terms < b.c.terms;
        return a.c.coeffs < b.c.coeffs;
    });

    XorBasis xb;
    std::vector<char> taken(all.size(), 0);
    auto fill = [&](const std::vector<std::size_t>& order) {
        for (auto i : order) {
            if (out.size() == dim) break;
            if (taken[i] || !xb.insert(all[i].mask)) continue;
            taken[i] = 1;
            out.push_back(all[i].c);
        }
    };
    std::vector<std::size_t> everything(all.size());
    std::iota(everything.begin(), everything.end(), 0);

    if (component_size >= 30) {
        const long n = static_cast<long>(component_size);
        std::vector<long> targets{n / 3, 4 * n / 9, 2 * n / 3};
        std::sort(targets.begin(), targets.end());
        std::vector<char> used(all.size(), 0);
        std::vector<std::size_t> selected;
        for (long t : targets) {
            std::optional<std::size_t> best;
            long best_dist = 0;
            for (std::size_t i = 0; i < all.size(); ++i) {
                if (used[i]) continue;
                long dist = std::labs(static_cast<long>(all[i].c.terms) - t);
                if (!best || dist < best_dist) {
                    best = i;
                    best_dist = dist;
                }
            }
            if (best) {
                used[*best] = 1;
                selected.push_back(*best);
            }
        }
        std::stable_sort(selected.begin(), selected.end(),
                         [&](std::size_t a, std::size_t b) { return all[a].complexity < all[b].complexity; });
        fill(selected);
    }
    fill(everything);
    std::stable_sort(out.begin(), out.end(), by_terms);
    return out;
}

WeightwiseResult weightwise_glk(const WeightStratum& stratum, const std::vector<Poly2>& sigma_invariants,
                                const HitBasis& basis) {
    WeightwiseResult r;
    const std::size_t n = sigma_invariants.size();
    if (n == 0) return r;
    std::unordered_map<std::size_t, std::size_t> local;  // global admissible index -> stratum row
    for (std::size_t i = 0; i < stratum.basis.size(); ++i) {
        auto g = basis.admissible_index(stratum.basis[i]);
        if (!g) throw std::invalid_argument("weightwise_glk: stratum member is not admissible");
        local.emplace(*g, i);
    }
    BitMatrix2 a(stratum.basis.size(), 0);
    for (const auto& s : sigma_invariants) {
        std::vector<std::uint32_t> rows;
        for (auto p : rho_error(s, basis.k, basis).support())
            if (auto it = local.find(p); it != local.end()) rows.push_back(static_cast<std::uint32_t>(it->second));
        a.append_column(std::move(rows));
    }
    for (const auto& row : a.dense_rows()) {
        auto idx = row.positions();
        if (!idx.empty()) r.equations.push_back(std::move(idx));
    }
    r.solutions = echelon_basis(right_kernel_basis(a), n);
    for (const auto& v : r.solutions) {
        Poly2 p;
        for (auto j : v.support()) p += sigma_invariants[j];
        if (!p.is_zero()) r.invariants.push_back(std::move(p));
    }
    return r;
}

CaseDetection detect_case(const std::vector<WeightVector>& weights, const std::vector<std::size_t>& glk_counts,
                          const std::vector<std::size_t>& sigma_counts) {
    if (weights.size() != glk_counts.size() || weights.size() != sigma_counts.size())
        throw std::invalid_argument("detect_case: inputs must be parallel");
    std::optional<std::size_t> min_sigma, max_glk;
    bool larger_glk = false;
    auto less = [&](std::size_t a, std::size_t b) { return compare_weights(weights[a], weights[b]) < 0; };
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (sigma_counts[i] && (!min_sigma || less(i, *min_sigma))) min_sigma = i;
        if (glk_counts[i] && (!max_glk || less(*max_glk, i))) max_glk = i;
    }
    if (!max_glk || !min_sigma) return {InvariantCase::case3, std::nullopt};
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (glk_counts[i] && less(*min_sigma, i)) larger_glk = true;
    if (glk_counts[*min_sigma] && !larger_glk) return {InvariantCase::case1, weights[*min_sigma]};
    return {InvariantCase::case2, weights[*max_glk]};
}

bool verify_global_sigma(const Poly2& p, const HitBasis& basis) {
    for (int j = 1; j < basis.k; ++j)
        if (!rho_error(p, j, basis).is_zero()) return false;
    return true;
}

bool verify_glk(const Poly2& p, const HitBasis& basis) {
    return verify_global_sigma(p, basis) && rho_error(p, basis.k, basis).is_zero();
}

CorrectionResult particular_correction(const Poly2& h, const std::vector<ExponentMonomial>& correction_basis,
                                       const HitBasis& basis) {
    CorrectionResult r;
    const std::size_t n = basis.admissible.size();
    const int gens = std::max(basis.k - 1, 0);
    r.rows = static_cast<std::size_t>(gens) * n;
    r.cols = correction_basis.size();
    if (r.cols == 0) {
        // Only h' = 0 is available.
        if (verify_global_sigma(h, basis)) r.h_prime = Poly2{};
        return r;
    }
    BitMatrix2 a(r.rows, 0);
    for (const auto& b : correction_basis) {
        std::vector<std::uint32_t> rows;
        for (int i = 1; i <= gens; ++i)
            for (auto p : rho_error(Poly2::single(b), i, basis).support())
                rows.push_back(static_cast<std::uint32_t>((i - 1) * n + p));
        a.append_column(std::move(rows));
    }
    BitVector2 target(r.rows);
    for (int i = 1; i <= gens; ++i)
        for (auto p : rho_error(h, i, basis).support()) target.set((i - 1) * n + p);
    auto c = solve_right(a, target);
    if (!c) return r;
    r.h_prime = sum_of(correction_basis, *c);
    return r;
}

InvariantReport global_glk_invariants(const HitBasis& basis, const ParallelFor& pf) {
    InvariantReport rep;
    rep.k = basis.k;
    rep.d = basis.d;
    auto strata = weight_strata(basis);

    // Components of all strata form one flat pool of independent work.
    std::vector<std::pair<std::size_t, SigmaComponent>> jobs;
    for (std::size_t s = 0; s < strata.size(); ++s)
        for (auto& c : sigma_components(strata[s], basis)) jobs.emplace_back(s, std::move(c));
    std::vector<SigmaComponent> solved(jobs.size());
    std::vector<std::vector<Combination>> picks(jobs.size());
    pf(jobs.size(), [&](std::size_t i) {
        solved[i] = component_invariants(jobs[i].second, basis);
        picks[i] = meaningful_combinations(solved[i].kernel, solved[i].members.size());
    });

    for (std::size_t s = 0; s < strata.size(); ++s) {
        StratumAnalysis a;
        a.stratum = strata[s];
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            if (jobs[i].first != s) continue;
            for (const auto& c : picks[i]) a.sigma_invariants.push_back(sum_of(solved[i].members, c.vector));
            a.components.push_back(std::move(solved[i]));
            a.selections.push_back(std::move(picks[i]));
        }
        rep.strata.push_back(std::move(a));
    }
    pf(rep.strata.size(), [&](std::size_t s) {
        rep.strata[s].glk = weightwise_glk(rep.strata[s].stratum, rep.strata[s].sigma_invariants, basis);
    });

    std::vector<WeightVector> weights;
    std::vector<std::size_t> glk_counts, sigma_counts;
    for (const auto& a : rep.strata) {
        weights.push_back(a.stratum.omega);
        glk_counts.push_back(a.glk.invariants.size());
        sigma_counts.push_back(a.sigma_invariants.size());
    }
    auto det = detect_case(weights, glk_counts, sigma_counts);
    auto& cert = rep.certificate;
    cert.case_tag = det.tag;
    cert.main_weight = det.main_weight;
    if (det.tag == InvariantCase::case3) return rep;

    std::size_t min_sigma = 0;
    while (sigma_counts[min_sigma] == 0) ++min_sigma;
    const auto& guaranteed = rep.strata[min_sigma].sigma_invariants;

    if (det.tag == InvariantCase::case1) {
        for (const auto& p : guaranteed) cert.global_sigma_basis.push_back(p);
        for (std::size_t s = min_sigma + 1; s < rep.strata.size(); ++s)
            for (const auto& p : rep.strata[s].sigma_invariants)
                if (verify_global_sigma(p, basis)) cert.global_sigma_basis.push_back(p);
    } else {
        const auto& main = *det.main_weight;
        std::size_t main_idx = 0;
        while (rep.strata[main_idx].stratum.omega != main) ++main_idx;
        std::vector<ExponentMonomial> corr;
        for (const auto& m : basis.admissible)
            if (compare_weights(weight_vector(m), main) < 0) corr.push_back(m);
        const auto& seeds = rep.strata[main_idx].glk.invariants;
        if (seeds.size() > 1)
            cert.warnings.push_back("main weight carries " + std::to_string(seeds.size()) +
                                    " local invariants; extra seeds are corrected independently");
        for (std::size_t i = 0; i < seeds.size(); ++i) {
            auto cr = particular_correction(seeds[i], corr, basis);
            if (i == 0) {
                cert.h = seeds[0];
                cert.correction_rows = cr.rows;
                cert.correction_cols = cr.cols;
                cert.h_prime = cr.h_prime;
            }
            if (!cr.h_prime) {
                cert.warnings.push_back("correction system for seed " + std::to_string(i + 1) + " is inconsistent");
                continue;
            }
            Poly2 g = seeds[i] + *cr.h_prime;
            if (!verify_global_sigma(g, basis))
                cert.warnings.push_back("seed " + std::to_string(i + 1) + " plus correction is not Sigma-invariant");
            cert.global_sigma_basis.push_back(std::move(g));
        }
        for (const auto& p : guaranteed) cert.global_sigma_basis.push_back(p);
        for (std::size_t s = min_sigma + 1; s < main_idx; ++s)
            for (const auto& p : rep.strata[s].sigma_invariants)
                if (verify_global_sigma(p, basis)) cert.global_sigma_basis.push_back(p);
    }

    const std::size_t n = cert.global_sigma_basis.size();
    BitMatrix2 a(basis.admissible.size(), 0);
    for (const auto& p : cert.global_sigma_basis) a.append_column(rho_error(p, basis.k, basis));
    for (const auto& row : a.dense_rows()) {
        auto idx = row.positions();
        if (!idx.empty() &&
            std::find(cert.constraint_equations.begin(), cert.constraint_equations.end(), idx) ==
                cert.constraint_equations.end())
            cert.constraint_equations.push_back(std::move(idx));
    }
    cert.solutions = echelon_basis(right_kernel_basis(a), n);
    for (const auto& v : cert.solutions) {
        Poly2 g;
        for (auto j : v.support()) g += cert.global_sigma_basis[j];
        if (g.is_zero()) continue;
        if (!verify_glk(g, basis)) cert.warnings.push_back("a final invariant fails the full generator check");
        cert.invariant_basis.push_back(std::move(g));
    }
    return rep;
}

namespace {

// Terms in string order of their printed form, wrapped every few terms.
std::string x_poly(const Poly2& p, const std::string& indent, std::size_t per_line = 4) {
    if (p.is_zero()) return "0";
    std::vector<std::string> t;
    for (const auto& m : p) t.push_back(x_monomial(m));
    std::sort(t.begin(), t.end());
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += (i % per_line == 0) ? "\n" + indent + "+ " : " + ";
        s += t[i];
    }
    return s;
}

std::string betas(const std::vector<std::size_t>& idx, const char* sym) {
    std::string s;
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? " + " : "") + std::string(sym) + "_" + std::to_string(idx[i]);
    return s + " = 0";
}

const std::string kRule(78, '=');

}  // namespace

std::string text_report(const InvariantReport& r, const HitBasis& basis) {
    std::ostringstream o;
    const auto kk = std::to_string(r.k);
    o << kRule << "\nSTARTING INVARIANT SUBSPACE COMPUTATION for k = " << r.k << ", d = " << r.d << "\n" << kRule << "\n\n";
    auto [zero, plus] = zero_plus_split(basis);
    o << "Admissible basis: " << basis.admissible.size() << " monomials (" << zero.size() << " with a zero exponent, "
      << plus.size() << " with all exponents positive)\n";
    for (std::size_t i = 0; i < basis.admissible.size(); ++i)
        o << "  a_" << (i + 1) << " = " << x_monomial(basis.admissible[i]) << "\n";
    o << "\nWeight vectors: " << r.strata.size() << " distinct\n";

    std::size_t s_counter = 0;
    std::size_t comp_counter = 0;
    for (const auto& a : r.strata) {
        o << "\n--- Weight w = " << format_weight(a.stratum.omega) << ": " << a.stratum.basis.size()
          << " admissible monomials, " << a.components.size() << " components ---\n";
        for (std::size_t c = 0; c < a.components.size(); ++c) {
            const auto& comp = a.components[c];
            o << "\n  Component " << ++comp_counter << " (size " << comp.members.size() << ")\n";
            for (std::size_t i = 0; i < comp.members.size(); ++i)
                o << "    m_" << (i + 1) << " = " << x_monomial(comp.members[i]) << "\n";
            o << "    Sigma-invariant kernel dimension: " << comp.kernel.size() << "\n";
            for (std::size_t i = 0; i < a.selections[c].size(); ++i) {
                const auto& sel = a.selections[c][i];
                o << "    Solution " << (i + 1) << " (" << sel.terms << " terms): gamma_i = 1 for i in {";
                auto sup = sel.vector.support();
                for (std::size_t t = 0; t < sup.size(); ++t) o << (t ? ", " : "") << (sup[t] + 1);
                o << "}\n";
            }
        }
    }

    o << "\n" << kRule << "\nWEIGHT-WISE INVARIANT ANALYSIS\n" << kRule << "\n";
    s_counter = 0;
    std::size_t g_counter = 0;
    for (const auto& a : r.strata) {
        o << "\n--- Results for Weight w = " << format_weight(a.stratum.omega) << " ---\n";
        o << "  Dimension of [QP_" << kk << "(w)]^Sigma_" << kk << ": " << a.sigma_invariants.size() << "\n";
        const std::size_t first = s_counter;
        for (const auto& p : a.sigma_invariants) {
            std::string name = "S_inv_" + std::to_string(++s_counter);
            o << "    " << name << " = " << x_poly(p, std::string(name.size() + 7, ' ')) << "\n";
        }
        if (!a.glk.equations.empty()) {
            o << "  Equations from (rho_" << kk << " + I):\n";
            for (const auto& e : a.glk.equations) {
                std::vector<std::size_t> shifted;
                for (auto j : e) shifted.push_back(first + j + 1);
                o << "    " << betas(shifted, "gamma") << "\n";
            }
        }
        o << "  Dimension of weight-wise [QP_" << kk << "(w)]^GL_" << kk << ": " << a.glk.invariants.size() << "\n";
        for (const auto& p : a.glk.invariants) {
            std::string name = "GL_inv_" + std::to_string(++g_counter);
            o << "    " << name << " = " << x_poly(p, std::string(name.size() + 7, ' ')) << "\n";
        }
    }

    const auto& c = r.certificate;
    o << "\n" << kRule << "\nUNIFIED GL_K-INVARIANT ANALYSIS WITH AUTOMATIC CASE DETECTION\n" << kRule << "\n";
    o << "\nCASE DETECTION RESULT:\nCase Type: " << to_string(c.case_tag) << "\n";
    if (c.main_weight) o << "Main Weight: " << format_weight(*c.main_weight) << "\n";
    if (c.case_tag == InvariantCase::case2) {
        o << "\n=== CASE 2: CORRECTION METHOD ===\n";
        if (c.h) o << "Primary candidate h = " << x_poly(*c.h, "      ") << "\n";
        o << "Correction system: " << c.correction_rows << " equations and " << c.correction_cols << " variables\n";
        if (c.h_prime) o << "h' (" << c.h_prime->size() << " terms) = " << x_poly(*c.h_prime, "      ") << "\n";
        else o << "Correction system is inconsistent\n";
    } else if (c.case_tag == InvariantCase::case1) {
        o << "\n=== CASE 1: MINIMAL WEIGHT ===\n";
    } else {
        o << "\n=== CASE 3: NO LOCAL INVARIANTS ===\n";
    }
    for (const auto& w : c.warnings) o << "WARNING: " << w << "\n";

    if (c.case_tag != InvariantCase::case3) {
        o << "\n" << std::string(60, '=') << "\nDETAILED GLOBAL Sigma_" << kk << "-INVARIANT BASIS\n"
          << std::string(60, '=') << "\n";
        o << "Total dimension: " << c.global_sigma_basis.size() << "\n";
        for (std::size_t i = 0; i < c.global_sigma_basis.size(); ++i) {
            std::string name = "p_" + std::to_string(i);
            o << name << " = " << x_poly(c.global_sigma_basis[i], std::string(name.size() + 3, ' ')) << "\n";
        }
        o << "\nConstraint equations from (rho_" << kk << " + I)g = 0:\n";
        for (const auto& e : c.constraint_equations) o << "    " << betas(e, "beta") << "\n";
        for (std::size_t i = 0; i < c.solutions.size(); ++i) {
            o << "  Solution " << (i + 1) << ": beta_i = 1 for i in {";
            auto sup = c.solutions[i].support();
            for (std::size_t t = 0; t < sup.size(); ++t) o << (t ? ", " : "") << sup[t];
            o << "}\n";
        }
    }

    o << "\n" << std::string(60, '=') << "\nFINAL GL_" << kk << "-INVARIANT RESULTS\n" << std::string(60, '=') << "\n";
    o << "Dimension of (QP_" << kk << ")_" << r.d << "^GL_" << kk << ": " << c.invariant_basis.size() << "\n";
    for (std::size_t i = 0; i < c.invariant_basis.size(); ++i) {
        std::string name = "GL_" + kk + " Invariant " + std::to_string(i + 1);
        o << "  " << name << " (" << c.invariant_basis[i].size() << " terms) = "
          << x_poly(c.invariant_basis[i], std::string(name.size() + 16, ' ')) << "\n";
    }
    return o.str();
}

std::string certificate_json(const InvariantReport& r) {
    using nlohmann::ordered_json;
    const auto& c = r.certificate;
    auto polys = [](const std::vector<Poly2>& ps) {
        auto a = ordered_json::array();
        for (const auto& p : ps) a.push_back(format_poly(p));
        return a;
    };
    ordered_json j;
    j["k"] = r.k;
    j["d"] = r.d;
    auto strata = ordered_json::array();
    for (const auto& a : r.strata) {
        ordered_json s;
        s["weight"] = a.stratum.omega;
        s["size"] = a.stratum.basis.size();
        auto comps = ordered_json::array();
        for (std::size_t i = 0; i < a.components.size(); ++i) {
            std::vector<std::size_t> terms;
            for (const auto& sel : a.selections[i]) terms.push_back(sel.terms);
            comps.push_back({{"size", a.components[i].members.size()},
                             {"kernel_dim", a.components[i].kernel.size()},
                             {"solution_terms", terms}});
        }
        s["components"] = comps;
        s["sigma_invariants"] = polys(a.sigma_invariants);
        s["glk_invariants"] = polys(a.glk.invariants);
        strata.push_back(s);
    }
    j["strata"] = strata;
    j["case"] = to_string(c.case_tag);
    j["main_weight"] = c.main_weight ? ordered_json(*c.main_weight) : ordered_json(nullptr);
    j["h"] = c.h ? ordered_json(format_poly(*c.h)) : ordered_json(nullptr);
    j["h_prime"] = c.h_prime ? ordered_json(format_poly(*c.h_prime)) : ordered_json(nullptr);
    j["correction_system"] = {c.correction_rows, c.correction_cols};
    j["global_sigma_basis"] = polys(c.global_sigma_basis);
    j["constraint_equations"] = c.constraint_equations;
    auto sols = ordered_json::array();
    for (const auto& v : c.solutions) sols.push_back(v.support());
    j["solutions"] = sols;
    j["invariant_basis"] = polys(c.invariant_basis);
    j["dimension"] = c.invariant_basis.size();
    j["warnings"] = c.warnings;
    return j.dump(2);
}

}  // namespace cohit
