#include <cohit/gf2.hpp>
#include <cohit/lambda.hpp>
#include <cohit/text.hpp>

#include <atomic>
#include <unordered_map>

namespace cohit {

namespace {

std::atomic<std::size_t> g_budget{50'000'000};

struct ReduceState {
    std::unordered_map<LambdaWord, LambdaPoly, IntTupleHash> memo;
    std::size_t steps = 0;
};

ReduceState& state() {
    thread_local ReduceState s;
    return s;
}

std::size_t leftmost_inadmissible(const LambdaWord& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > 2 * w[i + 1]) return i;
    return w.size();
}

const LambdaPoly& reduce_word(const LambdaWord& w) {
    auto& st = state();
    if (auto it = st.memo.find(w); it != st.memo.end()) return it->second;
    LambdaPoly out;
    const std::size_t pos = leftmost_inadmissible(w);
    if (pos == w.size()) {
        out = LambdaPoly::single(w);
    } else {
        if (++st.steps > g_budget.load()) throw RewriteBudgetExceeded("adem_reduce: rewrite budget exceeded");
        TermAccumulator<LambdaTag> acc;
        for (const auto& v : adem_rewrite_at(w, pos)) acc.add(reduce_word(v));
        out = acc.finish();
    }
    if (st.memo.size() > 2'000'000) st.memo.clear();
    return st.memo.emplace(w, std::move(out)).first->second;
}

}  // namespace

bool is_admissible(const LambdaWord& w) { return leftmost_inadmissible(w) == w.size(); }

void set_rewrite_budget(std::size_t steps) { g_budget = steps; }

LambdaPoly adem_rewrite_at(const LambdaWord& w, std::size_t pos) {
    if (pos + 1 >= w.size() || w[pos] <= 2 * w[pos + 1])
        throw std::invalid_argument("adem_rewrite_at: no inadmissible pair at position");
    const int s = w[pos], t = w[pos + 1];
    std::vector<LambdaWord> out;
    for (int j = 0; j <= s + t; ++j) {
        if (!binom_mod2(j - t - 1, 2 * j - s)) continue;
        LambdaWord v = w;
        v[pos] = s + t - j;
        v[pos + 1] = j;
        out.push_back(std::move(v));
    }
    return LambdaPoly::from_terms(std::move(out));
}

LambdaPoly adem_reduce(const LambdaWord& w) {
    state().steps = 0;
    return reduce_word(w);
}

LambdaPoly adem_reduce(const LambdaPoly& p) {
    state().steps = 0;
    TermAccumulator<LambdaTag> acc;
    for (const auto& w : p) acc.add(reduce_word(w));
    return acc.finish();
}

LambdaPoly differential(const LambdaWord& w, DifferentialOrder order) {
    const bool matched = order == DifferentialOrder::matched;
    std::vector<LambdaWord> out;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        const int n = w[pos];
        for (int t = 0; t <= n - 1; ++t) {
            if (!binom_mod2(n - 1 - t, t + 1)) continue;
            LambdaWord v;
            v.reserve(w.size() + 1);
            v.insert(v.end(), w.begin(), w.begin() + pos);
            v.push_back(matched ? t : n - 1 - t);
            v.push_back(matched ? n - 1 - t : t);
            v.insert(v.end(), w.begin() + pos + 1, w.end());
            out.push_back(std::move(v));
        }
    }
    return LambdaPoly::from_terms(std::move(out));
}

LambdaPoly differential(const LambdaPoly& p, DifferentialOrder order) {
    TermAccumulator<LambdaTag> acc;
    for (const auto& w : p) acc.add(differential(w, order));
    return acc.finish();
}

bool is_cocycle(const LambdaPoly& p) { return adem_reduce(differential(p)).is_zero(); }

namespace {

void compose(int total, int parts, int lo, LambdaWord& cur, std::vector<LambdaWord>& out) {
    if (parts == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int a = lo; a <= total - lo * (parts - 1); ++a) {
        cur.push_back(a);
        compose(total - a, parts - 1, lo, cur, out);
        cur.pop_back();
    }
}

void admissible_rec(int length, int total, LambdaWord& cur, std::vector<LambdaWord>& out) {
    if (static_cast<int>(cur.size()) == length) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int a = 0; a <= total; ++a) {
        if (!cur.empty() && cur.back() > 2 * a) continue;
        if (static_cast<int>(cur.size()) + 1 == length && a != total) continue;
        cur.push_back(a);
        admissible_rec(length, total - a, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<LambdaWord> positive_compositions(int total, int parts) {
    if (total < 0 || parts < 0) throw std::invalid_argument("positive_compositions: negative argument");
    std::vector<LambdaWord> out;
    LambdaWord cur;
    compose(total, parts, 1, cur, out);
    return out;
}

std::vector<LambdaWord> nonnegative_compositions(int total, int parts) {
    if (total < 0 || parts < 0) throw std::invalid_argument("nonnegative_compositions: negative argument");
    std::vector<LambdaWord> out;
    LambdaWord cur;
    compose(total, parts, 0, cur, out);
    return out;
}

std::vector<LambdaWord> admissible_words(int length, int total) {
    std::vector<LambdaWord> out;
    LambdaWord cur;
    if (length == 0) {
        if (total == 0) out.push_back(cur);
        return out;
    }
    admissible_rec(length, total, cur, out);
    return out;
}

LambdaPoly parse_lambda(std::string_view s) {
    auto terms = parse_tuple_sum(s);
    for (const auto& t : terms)
        if (t.size() != terms.front().size()) throw ParseError(0, "words have different lengths");
    return LambdaPoly::from_terms(std::move(terms));
}

std::string format_lambda(const LambdaPoly& p) { return to_text(p); }

std::string format_lambda_names(const LambdaPoly& p) {
    if (p.empty()) return "0";
    std::vector<LambdaWord> ws(p.begin(), p.end());
    std::stable_sort(ws.begin(), ws.end(), [](const LambdaWord& a, const LambdaWord& b) {
        int sa = 0, sb = 0;
        for (int x : a) sa += x;
        for (int x : b) sb += x;
        return sa != sb ? sa < sb : a < b;
    });
    std::string out;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) out += " + ";
        if (ws[i].empty()) out += "1";
        for (int x : ws[i]) out += "lambda_" + std::to_string(x);
    }
    return out;
}

}  // namespace cohit
