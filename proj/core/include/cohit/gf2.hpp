#pragma once

#include <cohit/bits.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cohit {

// C(n,k) mod 2 by Lucas. Zero for negative arguments or k > n.
inline int binom_mod2(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    return (k & n) == k ? 1 : 0;
}

class BitVector2 {
public:
    BitVector2() = default;
    explicit BitVector2(std::size_t length) : bits_(length) {}
    BitVector2(std::size_t length, const std::vector<std::size_t>& support);
    explicit BitVector2(Bits b) : bits_(std::move(b)) {}

    std::size_t length() const { return bits_.size(); }
    bool get(std::size_t i) const { return bits_.get(i); }
    void set(std::size_t i, bool v = true) { bits_.assign(i, v); }
    void flip(std::size_t i) { bits_.flip(i); }
    std::vector<std::size_t> support() const { return bits_.positions(); }
    std::size_t weight() const { return bits_.count(); }
    bool is_zero() const { return bits_.none(); }

    BitVector2& operator+=(const BitVector2& o);
    friend BitVector2 operator+(BitVector2 a, const BitVector2& b) { return a += b; }
    bool operator==(const BitVector2& o) const { return bits_ == o.bits_; }

    const Bits& bits() const { return bits_; }
    Bits& bits() { return bits_; }

private:
    Bits bits_;
};

// Sparse matrix: each column keeps a sorted list of the rows holding 1.
class BitMatrix2 {
public:
    BitMatrix2() = default;
    BitMatrix2(std::size_t nrows, std::size_t ncols) : nrows_(nrows), cols_(ncols) {}

    static BitMatrix2 identity(std::size_t n);
    static BitMatrix2 from_dense_rows(std::size_t ncols, const std::vector<Bits>& rows);

    std::size_t nrows() const { return nrows_; }
    std::size_t ncols() const { return cols_.size(); }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool v = true);

    // Appends a column given by its row support (duplicates cancel in pairs).
    void append_column(std::vector<std::uint32_t> rows);
    void append_column(const BitVector2& v);
    const std::vector<std::uint32_t>& column(std::size_t c) const { return cols_[c]; }

    std::vector<std::pair<std::size_t, std::size_t>> entries() const;
    std::vector<Bits> dense_rows() const;
    BitVector2 multiply(const BitVector2& v) const;
    BitMatrix2 augment(const BitMatrix2& right) const;
    BitMatrix2 stack(const BitMatrix2& below) const;

    bool operator==(const BitMatrix2& o) const { return nrows_ == o.nrows_ && cols_ == o.cols_; }

private:
    std::size_t nrows_ = 0;
    std::vector<std::vector<std::uint32_t>> cols_;
};

struct Echelon {
    BitMatrix2 matrix;
    std::vector<std::size_t> pivots;
};

Echelon echelonize(const BitMatrix2& m);
std::size_t rank(const BitMatrix2& m);
std::optional<BitVector2> solve_right(const BitMatrix2& m, const BitVector2& b);
std::vector<BitVector2> right_kernel_basis(const BitMatrix2& m);
// Reduced echelon basis of the span of vs (leading entry = lowest index);
// the canonical basis of a subspace, independent of how vs was produced.
std::vector<BitVector2> echelon_basis(const std::vector<BitVector2>& vs, std::size_t length);

// Reduced row echelon form of [A | R] where R holds several right-hand sides.
// Elimination pivots only on A's columns; the transformed right-hand sides
// can then be combined linearly and solved without redoing the elimination.
class MultiSolver {
public:
    MultiSolver(const BitMatrix2& a, const std::vector<BitVector2>& rhs);

    std::size_t rank() const { return pivots_.size(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::size_t ncols() const { return ncols_; }
    std::size_t nrows() const { return rows_.size(); }

    // Transformed right-hand side j, one bit per row of the echelon form.
    const Bits& transformed(std::size_t j) const { return rhs_[j]; }

    bool consistent(const Bits& t) const;
    BitVector2 particular(const Bits& t) const;
    std::vector<BitVector2> kernel_basis() const;
    const std::vector<Bits>& rows() const { return rows_; }

private:
    std::size_t ncols_ = 0;
    std::vector<Bits> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<Bits> rhs_;
};

}  // namespace cohit
