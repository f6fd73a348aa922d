#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

namespace cohit {

// Exponent tuple or lambda index word. One type serves both.
using IntTuple = std::vector<int>;

struct IntTupleHash {
    std::size_t operator()(const IntTuple& v) const noexcept {
        std::size_t h = 1469598103934665603ull ^ v.size();
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

// A finite sum of basis elements over F2: a sorted set where addition is
// symmetric difference. Tag keeps polynomials, divided-power elements and
// lambda elements from mixing by accident.
template <class Tag>
class TermSet {
public:
    TermSet() = default;

    // Builds from a list of terms, cancelling repeated terms in pairs.
    static TermSet from_terms(std::vector<IntTuple> terms) {
        std::sort(terms.begin(), terms.end());
        TermSet s;
        s.terms_.reserve(terms.size());
        for (std::size_t i = 0; i < terms.size();) {
            std::size_t j = i;
            while (j < terms.size() && terms[j] == terms[i]) ++j;
            if ((j - i) & 1) s.terms_.push_back(std::move(terms[i]));
            i = j;
        }
        return s;
    }
    static TermSet single(IntTuple t) {
        TermSet s;
        s.terms_.push_back(std::move(t));
        return s;
    }

    const std::vector<IntTuple>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    bool is_zero() const { return terms_.empty(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    bool contains(const IntTuple& t) const { return std::binary_search(terms_.begin(), terms_.end(), t); }

    void toggle(const IntTuple& t) {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), t);
        if (it != terms_.end() && *it == t)
            terms_.erase(it);
        else
            terms_.insert(it, t);
    }

    TermSet& operator+=(const TermSet& o) {
        std::vector<IntTuple> out;
        out.reserve(terms_.size() + o.terms_.size());
        std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                      std::back_inserter(out));
        terms_ = std::move(out);
        return *this;
    }
    friend TermSet operator+(TermSet a, const TermSet& b) { return a += b; }
    bool operator==(const TermSet& o) const { return terms_ == o.terms_; }
    bool operator!=(const TermSet& o) const { return !(*this == o); }

private:
    std::vector<IntTuple> terms_;
};

// Collects terms with repeats and resolves parity once at the end.
template <class Tag>
class TermAccumulator {
public:
    void add(const IntTuple& t) { raw_.push_back(t); }
    void add(IntTuple&& t) { raw_.push_back(std::move(t)); }
    void add(const TermSet<Tag>& s) { raw_.insert(raw_.end(), s.begin(), s.end()); }
    TermSet<Tag> finish() { return TermSet<Tag>::from_terms(std::move(raw_)); }

private:
    std::vector<IntTuple> raw_;
};

}  // namespace cohit
