#include <cohit/hitbasis.hpp>
#include <cohit/text.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cohit {

void HitBasis::build_index() {
    pos_.clear();
    adm_.clear();
    for (std::size_t i = 0; i < ordered.size(); ++i) pos_.emplace(ordered[i], i);
    for (std::size_t i = 0; i < admissible.size(); ++i) adm_.emplace(admissible[i], i);
}

std::size_t HitBasis::position(const ExponentMonomial& m) const {
    auto it = pos_.find(m);
    if (it == pos_.end()) throw std::invalid_argument("monomial " + format_tuple(m) + " is not in this degree");
    return it->second;
}

std::optional<std::size_t> HitBasis::admissible_index(const ExponentMonomial& m) const {
    auto it = adm_.find(m);
    if (it == adm_.end()) return std::nullopt;
    return it->second;
}

std::vector<ExponentMonomial> ordered_monomials(int k, int d) {
    auto ms = monomials_of_degree(k, d);
    std::vector<std::pair<WeightVector, ExponentMonomial>> keyed;
    keyed.reserve(ms.size());
    for (auto& m : ms) keyed.emplace_back(weight_vector(m), std::move(m));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        int c = compare_weights(a.first, b.first);
        return c ? c < 0 : a.second < b.second;
    });
    std::vector<ExponentMonomial> out;
    out.reserve(keyed.size());
    for (auto& kv : keyed) out.push_back(std::move(kv.second));
    return out;
}

namespace {

std::vector<std::vector<std::uint32_t>> hit_columns(int k, int d, const std::vector<ExponentMonomial>& ordered,
                                                    const ParallelFor& pf) {
    std::unordered_map<ExponentMonomial, std::uint32_t, IntTupleHash> row;
    for (std::size_t i = 0; i < ordered.size(); ++i) row.emplace(ordered[i], static_cast<std::uint32_t>(i));

    std::vector<std::pair<int, ExponentMonomial>> tasks;
    for (int q = 1; q <= d; q <<= 1)
        for (auto& g : ordered_monomials(k, d - q)) tasks.emplace_back(q, std::move(g));

    std::vector<std::vector<std::uint32_t>> cols(tasks.size());
    pf(tasks.size(), [&](std::size_t t) {
        std::vector<std::uint32_t> c;
        for (const auto& m : sq(tasks[t].first, tasks[t].second)) c.push_back(row.at(m));
        std::sort(c.begin(), c.end());
        cols[t] = std::move(c);
    });
    std::erase_if(cols, [](const auto& c) { return c.empty(); });
    return cols;
}

}  // namespace

BitMatrix2 build_hit_matrix(int k, int d, const ParallelFor& pf) {
    const auto ordered = ordered_monomials(k, d);
    BitMatrix2 m(ordered.size(), 0);
    for (auto& c : hit_columns(k, d, ordered, pf)) m.append_column(std::move(c));
    return m;
}

HitBasis admissible_basis_and_reducer(int k, int d, const ParallelFor& pf) {
    HitBasis b;
    b.k = k;
    b.d = d;
    b.ordered = ordered_monomials(k, d);
    const std::size_t n = b.ordered.size();

    // A monomial is inadmissible iff some hit element has it as leading
    // (largest) term. Reduce hit vectors to distinct leading positions.
    std::vector<Bits> lead(n);
    std::vector<char> has(n, 0);
    for (const auto& c : hit_columns(k, d, b.ordered, pf)) {
        Bits v(n);
        for (auto r : c) v.set(r);
        for (std::size_t h = v.highest(); h != Bits::npos; h = v.highest()) {
            if (!has[h]) {
                lead[h] = std::move(v);
                has[h] = 1;
                break;
            }
            v.xor_upto(lead[h], h >> 6);
        }
    }

    std::vector<std::size_t> adm_of(n, static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < n; ++i)
        if (!has[i]) {
            adm_of[i] = b.admissible.size();
            b.admissible.push_back(b.ordered[i]);
        }

    // Back-substitute in increasing order so each lead[h] keeps only h and
    // admissible positions below it: then h == that admissible sum mod hit.
    for (std::size_t h = 0; h < n; ++h) {
        if (!has[h]) continue;
        for (std::size_t r : lead[h].positions())
            if (r < h && has[r]) lead[h].xor_upto(lead[r], r >> 6);
    }

    const std::size_t na = b.admissible.size();
    b.decomposition.assign(n, BitVector2(na));
    for (std::size_t i = 0; i < n; ++i) {
        if (!has[i]) {
            b.decomposition[i].set(adm_of[i]);
            continue;
        }
        for (std::size_t r : lead[i].positions())
            if (r != i) b.decomposition[i].set(adm_of[r]);
    }
    b.build_index();
    return b;
}

BitVector2 decompose(const Poly2& f, const HitBasis& basis) {
    BitVector2 out(basis.admissible.size());
    for (const auto& m : f) {
        if (static_cast<int>(m.size()) != basis.k || degree(m) != basis.d)
            throw std::invalid_argument("decompose: " + format_tuple(m) + " is not a degree-" +
                                        std::to_string(basis.d) + " monomial in " + std::to_string(basis.k) +
                                        " variables");
        out += basis.coordinates(m);
    }
    return out;
}

Poly2 to_poly(const BitVector2& coords, const HitBasis& basis) {
    std::vector<ExponentMonomial> t;
    for (auto i : coords.support()) t.push_back(basis.admissible[i]);
    return Poly2::from_terms(std::move(t));
}

std::pair<std::vector<ExponentMonomial>, std::vector<ExponentMonomial>> zero_plus_split(const HitBasis& basis) {
    std::pair<std::vector<ExponentMonomial>, std::vector<ExponentMonomial>> out;
    for (const auto& m : basis.admissible) {
        bool zero = std::find(m.begin(), m.end(), 0) != m.end();
        (zero ? out.first : out.second).push_back(m);
    }
    return out;
}

namespace {

constexpr const char* kCacheVersion = "cohit-cache v1";

std::string header(int k, int d) {
    return std::string(kCacheVersion) + " k=" + std::to_string(k) + " d=" + std::to_string(d);
}

}  // namespace

std::string cache_file_name(int k, int d) {
    return "cohit-k" + std::to_string(k) + "-d" + std::to_string(d) + ".txt";
}

void write_cache(const HitBasis& b, const std::string& path) {
    std::string out = header(b.k, b.d) + "\n";
    for (const auto& m : b.admissible) out += format_tuple(m) + "\n";
    for (std::size_t i = 0; i < b.ordered.size(); ++i) {
        out += format_tuple(b.ordered[i]) + " : ";
        const auto& v = b.decomposition[i];
        for (std::size_t j = 0; j < v.length(); ++j) out += v.get(j) ? '1' : '0';
        out += '\n';
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write cache file " + tmp);
        f << out;
        if (!f) throw std::runtime_error("cannot write cache file " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

std::optional<HitBasis> read_cache(const std::string& path, int k, int d, std::string* why) {
    auto fail = [&](const std::string& reason) -> std::optional<HitBasis> {
        if (why) *why = reason;
        return std::nullopt;
    };
    std::ifstream f(path, std::ios::binary);
    if (!f) return fail("missing");
    std::string line;
    if (!std::getline(f, line)) return fail("empty file");
    if (line.rfind(kCacheVersion, 0) != 0) return fail("version mismatch: '" + line + "'");
    if (line != header(k, d)) return fail("header does not match k=" + std::to_string(k) + " d=" + std::to_string(d));

    HitBasis b;
    b.k = k;
    b.d = d;
    b.ordered = ordered_monomials(k, d);
    std::vector<std::string> bitstrings;
    try {
        while (std::getline(f, line)) {
            auto colon = line.find(':');
            if (colon == std::string::npos) {
                if (!bitstrings.empty()) return fail("admissible line after decomposition lines");
                b.admissible.push_back(parse_tuple(line));
                continue;
            }
            auto m = parse_tuple(std::string_view(line).substr(0, colon));
            if (bitstrings.size() >= b.ordered.size() || m != b.ordered[bitstrings.size()])
                return fail("unexpected monomial " + format_tuple(m));
            std::string bits = line.substr(colon + 1);
            std::erase(bits, ' ');
            bitstrings.push_back(std::move(bits));
        }
    } catch (const ParseError& e) {
        return fail(e.what());
    }
    if (bitstrings.size() != b.ordered.size()) return fail("truncated decomposition table");
    const std::size_t na = b.admissible.size();
    b.build_index();
    b.decomposition.reserve(b.ordered.size());
    for (std::size_t i = 0; i < b.ordered.size(); ++i) {
        const auto& s = bitstrings[i];
        if (s.size() != na) return fail("coordinate length mismatch at " + format_tuple(b.ordered[i]));
        BitVector2 v(na);
        for (std::size_t j = 0; j < na; ++j) {
            if (s[j] == '1')
                v.set(j);
            else if (s[j] != '0')
                return fail("bad coordinate character");
        }
        if (auto a = b.admissible_index(b.ordered[i]))
            if (v.weight() != 1 || !v.get(*a)) return fail("admissible monomial without unit coordinates");
        b.decomposition.push_back(std::move(v));
    }
    for (const auto& m : b.admissible)
        if (static_cast<int>(m.size()) != k || degree(m) != d) return fail("admissible monomial of wrong shape");
    return b;
}

CacheOutcome load_or_build(int k, int d, const std::string& cache_dir, const ParallelFor& pf) {
    CacheOutcome out;
    if (!cache_dir.empty()) {
        out.path = (std::filesystem::path(cache_dir) / cache_file_name(k, d)).string();
        std::string why;
        if (auto b = read_cache(out.path, k, d, &why)) {
            out.basis = std::move(*b);
            out.from_cache = true;
            return out;
        }
        if (why != "missing") out.warning = "cache file " + out.path + " rejected (" + why + "); recomputing";
    }
    out.basis = admissible_basis_and_reducer(k, d, pf);
    if (!cache_dir.empty()) {
        std::filesystem::create_directories(cache_dir);
        write_cache(out.basis, out.path);
    }
    return out;
}

}  // namespace cohit
