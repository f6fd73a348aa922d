#include <cohit/gf2.hpp>

#include <algorithm>
#include <stdexcept>

namespace cohit {

BitVector2::BitVector2(std::size_t length, const std::vector<std::size_t>& support) : bits_(length) {
    for (auto i : support) {
        if (i >= length) throw std::out_of_range("BitVector2: support position out of range");
        bits_.set(i);
    }
}

BitVector2& BitVector2::operator+=(const BitVector2& o) {
    if (o.length() != length()) throw std::invalid_argument("BitVector2: length mismatch");
    bits_.xor_with(o.bits_);
    return *this;
}

BitMatrix2 BitMatrix2::identity(std::size_t n) {
    BitMatrix2 m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.cols_[i].push_back(static_cast<std::uint32_t>(i));
    return m;
}

BitMatrix2 BitMatrix2::from_dense_rows(std::size_t ncols, const std::vector<Bits>& rows) {
    BitMatrix2 m(rows.size(), ncols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = rows[r].next(0); c != Bits::npos && c < ncols; c = rows[r].next(c + 1))
            m.cols_[c].push_back(static_cast<std::uint32_t>(r));
    return m;
}

bool BitMatrix2::get(std::size_t r, std::size_t c) const {
    const auto& col = cols_.at(c);
    return std::binary_search(col.begin(), col.end(), static_cast<std::uint32_t>(r));
}

void BitMatrix2::set(std::size_t r, std::size_t c, bool v) {
    if (r >= nrows_ || c >= cols_.size()) throw std::out_of_range("BitMatrix2::set");
    auto& col = cols_[c];
    auto key = static_cast<std::uint32_t>(r);
    auto it = std::lower_bound(col.begin(), col.end(), key);
    bool present = it != col.end() && *it == key;
    if (v && !present) col.insert(it, key);
    if (!v && present) col.erase(it);
}

void BitMatrix2::append_column(std::vector<std::uint32_t> rows) {
    std::sort(rows.begin(), rows.end());
    std::vector<std::uint32_t> out;
    out.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size();) {
        std::size_t j = i;
        while (j < rows.size() && rows[j] == rows[i]) ++j;
        if ((j - i) & 1) {
            if (rows[i] >= nrows_) throw std::out_of_range("BitMatrix2::append_column");
            out.push_back(rows[i]);
        }
        i = j;
    }
    cols_.push_back(std::move(out));
}

void BitMatrix2::append_column(const BitVector2& v) {
    if (v.length() != nrows_) throw std::invalid_argument("BitMatrix2::append_column: length mismatch");
    std::vector<std::uint32_t> rows;
    for (auto i : v.support()) rows.push_back(static_cast<std::uint32_t>(i));
    cols_.push_back(std::move(rows));
}

std::vector<std::pair<std::size_t, std::size_t>> BitMatrix2::entries() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t c = 0; c < cols_.size(); ++c)
        for (auto r : cols_[c]) out.emplace_back(r, c);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Bits> BitMatrix2::dense_rows() const {
    std::vector<Bits> rows(nrows_, Bits(cols_.size()));
    for (std::size_t c = 0; c < cols_.size(); ++c)
        for (auto r : cols_[c]) rows[r].set(c);
    return rows;
}

BitVector2 BitMatrix2::multiply(const BitVector2& v) const {
    if (v.length() != ncols()) throw std::invalid_argument("BitMatrix2::multiply: length mismatch");
    BitVector2 out(nrows_);
    for (auto c : v.support())
        for (auto r : cols_[c]) out.flip(r);
    return out;
}

BitMatrix2 BitMatrix2::augment(const BitMatrix2& right) const {
    if (right.nrows_ != nrows_) throw std::invalid_argument("BitMatrix2::augment: row mismatch");
    BitMatrix2 m = *this;
    m.cols_.insert(m.cols_.end(), right.cols_.begin(), right.cols_.end());
    return m;
}

BitMatrix2 BitMatrix2::stack(const BitMatrix2& below) const {
    if (below.ncols() != ncols()) throw std::invalid_argument("BitMatrix2::stack: column mismatch");
    BitMatrix2 m(nrows_ + below.nrows_, ncols());
    for (std::size_t c = 0; c < ncols(); ++c) {
        m.cols_[c] = cols_[c];
        for (auto r : below.cols_[c]) m.cols_[c].push_back(static_cast<std::uint32_t>(r + nrows_));
    }
    return m;
}

namespace {

// Gauss-Jordan on dense rows, pivoting only on the first `ncols` columns.
// Returns pivot columns; rows[0..rank) end up as the reduced pivot rows.
std::vector<std::size_t> gauss_jordan(std::vector<Bits>& rows, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const std::size_t n = rows.size();
    for (std::size_t c = 0; c < ncols && r < n; ++c) {
        std::size_t p = r;
        while (p < n && !rows[p].get(c)) ++p;
        if (p == n) continue;
        if (p != r) std::swap(rows[p], rows[r]);
        const std::size_t from = c >> 6;
        const Bits& piv = rows[r];
        for (std::size_t i = 0; i < n; ++i)
            if (i != r && rows[i].get(c)) rows[i].xor_with(piv, from);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Echelon echelonize(const BitMatrix2& m) {
    auto rows = m.dense_rows();
    auto pivots = gauss_jordan(rows, m.ncols());
    return {BitMatrix2::from_dense_rows(m.ncols(), rows), pivots};
}

std::size_t rank(const BitMatrix2& m) { return echelonize(m).pivots.size(); }

MultiSolver::MultiSolver(const BitMatrix2& a, const std::vector<BitVector2>& rhs) : ncols_(a.ncols()) {
    const std::size_t width = ncols_ + rhs.size();
    rows_.assign(a.nrows(), Bits(width));
    for (std::size_t c = 0; c < a.ncols(); ++c)
        for (auto r : a.column(c)) rows_[r].set(c);
    for (std::size_t j = 0; j < rhs.size(); ++j) {
        if (rhs[j].length() != a.nrows()) throw std::invalid_argument("MultiSolver: rhs length mismatch");
        for (auto r : rhs[j].support()) rows_[r].set(ncols_ + j);
    }
    pivots_ = gauss_jordan(rows_, ncols_);
    rhs_.assign(rhs.size(), Bits(rows_.size()));
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t j = 0; j < rhs.size(); ++j)
            if (rows_[r].get(ncols_ + j)) rhs_[j].set(r);
}

bool MultiSolver::consistent(const Bits& t) const {
    std::size_t first = t.next(pivots_.size());
    return first == Bits::npos;
}

BitVector2 MultiSolver::particular(const Bits& t) const {
    BitVector2 x(ncols_);
    for (std::size_t r = 0; r < pivots_.size(); ++r)
        if (t.get(r)) x.set(pivots_[r]);
    return x;
}

std::vector<BitVector2> MultiSolver::kernel_basis() const {
    std::vector<BitVector2> out;
    std::vector<char> is_pivot(ncols_, 0);
    for (auto p : pivots_) is_pivot[p] = 1;
    for (std::size_t f = 0; f < ncols_; ++f) {
        if (is_pivot[f]) continue;
        BitVector2 v(ncols_);
        v.set(f);
        for (std::size_t r = 0; r < pivots_.size(); ++r)
            if (rows_[r].get(f)) v.set(pivots_[r]);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<BitVector2> solve_right(const BitMatrix2& m, const BitVector2& b) {
    if (b.length() != m.nrows()) throw std::invalid_argument("solve_right: length mismatch");
    MultiSolver s(m, {b});
    if (!s.consistent(s.transformed(0))) return std::nullopt;
    return s.particular(s.transformed(0));
}

std::vector<BitVector2> right_kernel_basis(const BitMatrix2& m) { return MultiSolver(m, {}).kernel_basis(); }

std::vector<BitVector2> echelon_basis(const std::vector<BitVector2>& vs, std::size_t length) {
    std::vector<Bits> rows;
    for (const auto& v : vs) rows.push_back(v.bits());
    const Echelon e = echelonize(BitMatrix2::from_dense_rows(length, rows));
    const auto dense = e.matrix.dense_rows();
    std::vector<BitVector2> out;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) out.emplace_back(dense[i]);
    return out;
}

}  // namespace cohit
