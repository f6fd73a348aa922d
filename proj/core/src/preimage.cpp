#include <cohit/preimage.hpp>
#include <cohit/text.hpp>

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace cohit {

namespace {

int index_sum(const LambdaWord& w) {
    int s = 0;
    for (int x : w) s += x;
    return s;
}

}  // namespace

NotCocycleError::NotCocycleError(LambdaPoly delta)
    : std::runtime_error("target is not a cocycle: d(y) = " + format_lambda(delta)), delta_(std::move(delta)) {}

PreimageProblem make_problem(int k, const LambdaPoly& y, TransferVariant v) {
    if (k < 1) throw std::invalid_argument("preimage: k must be positive");
    if (y.is_zero()) throw std::invalid_argument("preimage: target is zero");
    PreimageProblem p;
    p.k = k;
    p.y = y;
    p.deg_x = index_sum(y.terms().front());
    for (const auto& w : y) {
        if (static_cast<int>(w.size()) != k) throw std::invalid_argument("preimage: target words must have length k");
        if (index_sum(w) != p.deg_x) throw std::invalid_argument("preimage: target is not homogeneous");
    }
    p.deg_z = p.deg_x + 1;
    p.variant = v;
    return p;
}

PreimageSystem assemble_system(const PreimageProblem& p) {
    const LambdaPoly y = adem_reduce(p.y);
    if (p.require_cocycle)
        if (LambdaPoly dy = adem_reduce(differential(y)); !dy.is_zero()) throw NotCocycleError(std::move(dy));

    PreimageSystem s;
    s.rows = admissible_words(p.k, p.deg_x);
    std::unordered_map<LambdaWord, std::uint32_t, IntTupleHash> row_of;
    for (std::size_t i = 0; i < s.rows.size(); ++i) row_of.emplace(s.rows[i], static_cast<std::uint32_t>(i));
    auto column = [&](const LambdaPoly& reduced) {
        std::vector<std::uint32_t> c;
        for (const auto& w : reduced) {
            auto it = row_of.find(w);
            if (it == row_of.end()) throw std::logic_error("preimage: reduced word outside the admissible row set");
            c.push_back(it->second);
        }
        return c;
    };

    s.matrix = BitMatrix2(s.rows.size(), 0);
    s.x_columns = monomials_of_degree(p.k, p.deg_x);
    if (p.x_order)
        std::stable_sort(s.x_columns.begin(), s.x_columns.end(), p.x_order);
    else
        std::sort(s.x_columns.begin(), s.x_columns.end(), [](const DividedMonomial& a, const DividedMonomial& b) {
            return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
        });
    for (const auto& m : s.x_columns) s.matrix.append_column(column(adem_reduce(transfer(m, p.variant))));
    if (p.k >= 2)
        s.z_columns = p.widen_z ? nonnegative_compositions(p.deg_z, p.k - 1) : positive_compositions(p.deg_z, p.k - 1);
    for (const auto& w : s.z_columns) s.matrix.append_column(column(adem_reduce(differential(w))));

    std::vector<std::size_t> t;
    for (const auto& w : y) t.push_back(row_of.at(w));
    s.target = BitVector2(s.rows.size(), t);
    return s;
}

bool verify_solution(int k, const DividedPoly& x, const LambdaPoly& z, const LambdaPoly& y, TransferVariant v) {
    for (const auto& m : x)
        if (static_cast<int>(m.size()) != k) return false;
    if (!is_A_annihilated(x)) return false;
    return adem_reduce(transfer_poly(x, v) + differential(z)) == adem_reduce(y);
}

PreimageResult find_preimages(const PreimageProblem& p, const ProgressFn& progress) {
    const PreimageSystem sys = assemble_system(p);
    const std::size_t nx = sys.x_columns.size();
    const std::size_t nz = sys.z_columns.size();
    const std::size_t nadm = sys.rows.size();

    // Stack (x)Sq_*^{2^t} = 0 under the phi rows so that every solution of the
    // linear system is already A-annihilated and the kernel stays small.
    std::vector<std::vector<std::uint32_t>> cols(nx);
    for (std::size_t c = 0; c < nx; ++c) cols[c] = sys.matrix.column(c);
    std::size_t offset = nadm;
    for (int q = 1; q <= p.deg_x; q <<= 1) {
        const auto targets = monomials_of_degree(p.k, p.deg_x - q);
        std::unordered_map<DividedMonomial, std::uint32_t, IntTupleHash> at;
        for (std::size_t i = 0; i < targets.size(); ++i) at.emplace(targets[i], static_cast<std::uint32_t>(offset + i));
        for (std::size_t c = 0; c < nx; ++c)
            for (const auto& m : sq_star(sys.x_columns[c], q)) cols[c].push_back(at.at(m));
        offset += targets.size();
    }
    BitMatrix2 a(offset, 0);
    for (auto& c : cols) a.append_column(std::move(c));

    auto pad = [&](const std::vector<std::uint32_t>& support) {
        BitVector2 v(offset);
        for (auto r : support) v.flip(r);
        return v;
    };
    std::vector<BitVector2> rhs;
    rhs.push_back(pad([&] {
        std::vector<std::uint32_t> t;
        for (auto i : sys.target.support()) t.push_back(static_cast<std::uint32_t>(i));
        return t;
    }()));
    for (std::size_t c = 0; c < nz; ++c) rhs.push_back(pad(sys.matrix.column(nx + c)));

    const MultiSolver ms(a, rhs);
    const auto kernel = ms.kernel_basis();

    PreimageResult res;
    res.kernel_dim = kernel.size();
    std::uint64_t per_z = p.kernel_cap;
    bool truncated = false;
    if (kernel.size() < 63 && (std::uint64_t{1} << kernel.size()) <= p.kernel_cap)
        per_z = std::uint64_t{1} << kernel.size();
    else
        truncated = true;

    std::vector<std::size_t> combo;
    auto try_combo = [&]() -> bool {  // true: stop searching
        Bits t = ms.transformed(0);
        for (auto c : combo) t.xor_with(ms.transformed(1 + c));
        if (!ms.consistent(t)) return false;
        ++res.z_candidates;
        std::vector<LambdaWord> zw;
        for (auto c : combo) zw.push_back(sys.z_columns[c]);
        const LambdaPoly z = LambdaPoly::from_terms(std::move(zw));
        BitVector2 x = ms.particular(t);
        for (std::uint64_t g = 0; g < per_z; ++g) {
            if (g) x += kernel[static_cast<std::size_t>(std::countr_zero(g))];
            ++res.candidates_checked;
            if (progress && res.candidates_checked % 10000 == 0) progress(res.candidates_checked);
            std::vector<DividedMonomial> terms;
            for (auto i : x.support()) terms.push_back(sys.x_columns[i]);
            DividedPoly xp = DividedPoly::from_terms(std::move(terms));
            if (!verify_solution(p.k, xp, z, p.y, p.variant)) continue;
            LambdaPoly cert = adem_reduce(transfer_poly(xp, p.variant) + differential(z));
            res.solutions.push_back({std::move(xp), z, std::move(cert)});
            if (!p.all) return true;
        }
        return false;
    };

    // z supports by increasing size, lexicographic in column index.
    for (int n = 0; n <= p.max_z_terms && static_cast<std::size_t>(n) <= nz; ++n) {
        combo.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) combo[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
        while (true) {
            if (try_combo()) {
                res.status = SearchStatus::found;
                return res;
            }
            int i = n - 1;
            while (i >= 0 && combo[static_cast<std::size_t>(i)] == nz - static_cast<std::size_t>(n - i)) --i;
            if (i < 0) break;
            ++combo[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < n; ++j) combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    if (!res.solutions.empty())
        res.status = SearchStatus::found;
    else
        res.status = truncated && res.z_candidates > 0 ? SearchStatus::truncated : SearchStatus::no_solution;
    return res;
}

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::no_solution: return "no_solution";
        case SearchStatus::truncated: return "truncated";
    }
    return "?";
}

std::string certificate_json(const PreimageProblem& p, const PreimageResult& r) {
    nlohmann::ordered_json j;
    j["status"] = to_string(r.status);
    j["k"] = p.k;
    j["variant"] = to_string(p.variant);
    j["y_admissible"] = format_lambda(adem_reduce(p.y));
    j["candidates_checked"] = r.candidates_checked;
    j["kernel_dim"] = r.kernel_dim;
    if (!r.solutions.empty()) {
        j["x"] = format_divided(r.solutions.front().x);
        j["z"] = format_lambda(r.solutions.front().z);
    } else {
        j["x"] = nullptr;
        j["z"] = nullptr;
    }
    auto sols = nlohmann::ordered_json::array();
    for (const auto& s : r.solutions)
        sols.push_back({{"x", format_divided(s.x)}, {"z", format_lambda(s.z)}, {"certificate", format_lambda(s.certificate)}});
    j["solutions"] = sols;
    return j.dump(2);
}

}  // namespace cohit
