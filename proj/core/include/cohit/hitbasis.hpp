#pragma once

#include <cohit/gf2.hpp>
#include <cohit/parallel.hpp>
#include <cohit/poly.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cohit {

// Admissible monomial basis of (Q P_k)_d and the reducer sending every
// degree-d monomial to its coordinates in that basis modulo hit elements.
struct HitBasis {
    int k = 0;
    int d = 0;
    std::vector<ExponentMonomial> ordered;     // all degree-d monomials, compare_monomials order
    std::vector<ExponentMonomial> admissible;  // sub-list of ordered
    std::vector<BitVector2> decomposition;     // parallel to ordered, length |admissible|

    std::size_t position(const ExponentMonomial& m) const;  // index into ordered; throws if foreign
    std::optional<std::size_t> admissible_index(const ExponentMonomial& m) const;
    const BitVector2& coordinates(const ExponentMonomial& m) const { return decomposition[position(m)]; }

    void build_index();  // call after filling ordered/admissible

private:
    std::unordered_map<ExponentMonomial, std::size_t, IntTupleHash> pos_;
    std::unordered_map<ExponentMonomial, std::size_t, IntTupleHash> adm_;
};

std::vector<ExponentMonomial> ordered_monomials(int k, int d);

// One column per nonzero Sq^{2^i}(g), 2^i <= d, g of degree d - 2^i; columns in
// (i, g) order with g in monomial order. Rows follow ordered_monomials(k, d).
BitMatrix2 build_hit_matrix(int k, int d, const ParallelFor& pf = serial_for);

HitBasis admissible_basis_and_reducer(int k, int d, const ParallelFor& pf = serial_for);

// Sum of coordinate vectors; zero iff f is hit. Rejects other degrees or k.
BitVector2 decompose(const Poly2& f, const HitBasis& basis);
Poly2 to_poly(const BitVector2& coords, const HitBasis& basis);

// Admissible monomials with some zero exponent, and with all exponents positive.
std::pair<std::vector<ExponentMonomial>, std::vector<ExponentMonomial>> zero_plus_split(const HitBasis& basis);

// Versioned text cache. Returns nullopt (with a reason) if the file is
// missing, of another version, or damaged.
std::string cache_file_name(int k, int d);
void write_cache(const HitBasis& b, const std::string& path);
std::optional<HitBasis> read_cache(const std::string& path, int k, int d, std::string* why = nullptr);

struct CacheOutcome {
    HitBasis basis;
    bool from_cache = false;
    std::string warning;  // nonempty when a cache file was present but rejected
    std::string path;
};
// Cache-first: load from dir if valid, otherwise build and write. Empty dir disables caching.
CacheOutcome load_or_build(int k, int d, const std::string& cache_dir, const ParallelFor& pf = serial_for);

}  // namespace cohit
