#include <cohit/transfer.hpp>

#include <stdexcept>
#include <unordered_map>

namespace cohit {

std::string to_string(TransferVariant v) { return v == TransferVariant::sum ? "sum" : "chon-ha"; }

TransferVariant parse_variant(std::string_view s) {
    if (s == "chon-ha") return TransferVariant::chon_ha;
    if (s == "sum") return TransferVariant::sum;
    throw std::invalid_argument("unknown transfer variant: " + std::string(s));
}

namespace {

using Memo = std::unordered_map<DividedMonomial, LambdaPoly, IntTupleHash>;

Memo& memo(TransferVariant v) {
    thread_local Memo chon, sum;
    return v == TransferVariant::sum ? sum : chon;
}

}  // namespace

LambdaPoly transfer(const DividedMonomial& m, TransferVariant v) {
    if (m.empty()) return LambdaPoly::single({});
    if (m.size() == 1) return LambdaPoly::single({m[0]});
    auto& cache = memo(v);
    if (auto it = cache.find(m); it != cache.end()) return it->second;

    const bool left = v == TransferVariant::chon_ha;
    const int peeled = left ? m.front() : m.back();
    DividedMonomial rest = left ? DividedMonomial(m.begin() + 1, m.end()) : DividedMonomial(m.begin(), m.end() - 1);
    // (a^{(t)})Sq_*^j vanishes for 2j > t, which bounds i.
    int slack = 0;
    for (int t : rest) slack += t / 2;

    TermAccumulator<LambdaTag> acc;
    for (int i = peeled; i <= peeled + slack; ++i) {
        for (const auto& r : sq_star(rest, i - peeled)) {
            for (const auto& w : transfer(r, v)) {
                LambdaWord word;
                word.reserve(m.size());
                if (left) word.push_back(i);
                word.insert(word.end(), w.begin(), w.end());
                if (!left) word.push_back(i);
                acc.add(std::move(word));
            }
        }
    }
    LambdaPoly out = acc.finish();
    if (cache.size() > 1'000'000) cache.clear();
    cache.emplace(m, out);
    return out;
}

LambdaPoly transfer_poly(const DividedPoly& x, TransferVariant v) {
    TermAccumulator<LambdaTag> acc;
    for (const auto& m : x) acc.add(transfer(m, v));
    return acc.finish();
}

}  // namespace cohit
