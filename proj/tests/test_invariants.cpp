#include "properties.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

using namespace cohit;

namespace {

const HitBasis& basis_4_33() {
    static const HitBasis b = admissible_basis_and_reducer(4, 33, thread_pool_for(4));
    return b;
}

const InvariantReport& report_4_33() {
    static const InvariantReport r = global_glk_invariants(basis_4_33(), thread_pool_for(4));
    return r;
}

std::map<int, ExponentMonomial> fixture_basis() {
    std::map<int, ExponentMonomial> out;
    std::istringstream in(oracle::read_data("basis_k4_d33.txt"));
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] == '#') continue;
        auto colon = line.find(':');
        out[std::stoi(line.substr(0, colon))] = parse_tuple(line.substr(colon + 1));
    }
    return out;
}

struct FixtureComponent {
    std::size_t size = 0, kernel_dim = 0;
    std::vector<std::size_t> terms;
    std::set<ExponentMonomial> members;
};

std::vector<FixtureComponent> fixture_components() {
    auto idx = fixture_basis();
    std::vector<FixtureComponent> out;
    std::istringstream in(oracle::read_data("components_k4_d33.txt"));
    auto split = [](const std::string& s) {
        std::vector<std::size_t> v;
        std::istringstream f(s);
        for (std::string tok; std::getline(f, tok, ',');) v.push_back(std::stoul(tok));
        return v;
    };
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cols;
        std::istringstream f(line);
        for (std::string tok; std::getline(f, tok, '|');) cols.push_back(tok);
        FixtureComponent c;
        c.size = std::stoul(cols[1]);
        c.kernel_dim = std::stoul(cols[2]);
        c.terms = split(cols[3]);
        for (auto i : split(cols[4])) c.members.insert(idx.at(static_cast<int>(i)));
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

TEST_CASE("weight strata in degree 33") {
    auto strata = weight_strata(basis_4_33());
    REQUIRE(strata.size() == 2);
    CHECK(format_weight(strata[0].omega) == "(3,1,1,1,1)");
    CHECK(strata[0].basis.size() == 45);
    CHECK(format_weight(strata[1].omega) == "(3,3,2,2)");
    CHECK(strata[1].basis.size() == 91);
}

TEST_CASE("components partition each stratum and match the tables") {
    const auto& b = basis_4_33();
    auto expected = fixture_components();
    std::vector<bool> used(expected.size(), false);
    for (const auto& s : weight_strata(b)) {
        auto comps = sigma_components(s, b);
        std::set<ExponentMonomial> seen;
        std::size_t total = 0;
        for (const auto& c : comps) {
            total += c.members.size();
            seen.insert(c.members.begin(), c.members.end());
            CHECK(std::is_sorted(c.members.begin(), c.members.end(), MonomialLess{}));
            std::set<ExponentMonomial> mine(c.members.begin(), c.members.end());
            auto it = std::find_if(expected.begin(), expected.end(), [&](const auto& e) { return e.members == mine; });
            REQUIRE(it != expected.end());
            used[static_cast<std::size_t>(it - expected.begin())] = true;

            auto solved = component_invariants(c, b);
            CHECK(solved.kernel.size() == it->kernel_dim);
            auto sel = meaningful_combinations(solved.kernel, solved.members.size());
            std::vector<std::size_t> terms;
            for (const auto& x : sel) terms.push_back(x.terms);
            CHECK(terms == it->terms);
        }
        CHECK(total == s.basis.size());
        CHECK(seen.size() == s.basis.size());
    }
    CHECK(std::all_of(used.begin(), used.end(), [](bool u) { return u; }));
}

TEST_CASE("meaningful combinations span the kernel") {
    std::vector<BitVector2> kernel;
    for (int i = 0; i < 3; ++i) {
        BitVector2 v(6);
        v.set(static_cast<std::size_t>(i));
        v.set(static_cast<std::size_t>(i + 3));
        if (i == 2) v.set(0);
        kernel.push_back(v);
    }
    auto sel = meaningful_combinations(kernel, 6);
    REQUIRE(sel.size() == 3);
    BitMatrix2 m(6, 0);
    for (const auto& c : sel) m.append_column(c.vector);
    CHECK(rank(m) == 3);
    for (const auto& c : sel) CHECK(c.terms == c.vector.weight());
    CHECK(meaningful_combinations({}, 4).empty());
}

TEST_CASE("invariants in degree 33") {
    const auto& b = basis_4_33();
    const auto& r = report_4_33();
    const auto& c = r.certificate;
    auto named = oracle::read_named("invariants_k4_d33.txt");

    REQUIRE(r.strata.size() == 2);
    CHECK(r.strata[0].sigma_invariants.size() == 4);
    CHECK(r.strata[1].sigma_invariants.size() == 9);
    CHECK(r.strata[0].glk.invariants.empty());
    REQUIRE(r.strata[1].glk.invariants.size() == 1);
    CHECK(r.strata[1].glk.invariants[0] == parse_poly(named.at("GL_inv_1")));

    std::set<std::vector<IntTuple>> sigma_expected, sigma_ours;
    for (int i = 1; i <= 13; ++i) sigma_expected.insert(parse_poly(named.at("S_inv_" + std::to_string(i))).terms());
    for (const auto& s : r.strata)
        for (const auto& p : s.sigma_invariants) sigma_ours.insert(p.terms());
    CHECK(sigma_ours == sigma_expected);

    CHECK(c.case_tag == InvariantCase::case2);
    CHECK(to_string(c.case_tag) == "CASE_2");
    REQUIRE(c.main_weight);
    CHECK(format_weight(*c.main_weight) == "(3,3,2,2)");
    REQUIRE(c.h_prime);
    CHECK(*c.h_prime == parse_poly(named.at("h_prime")));
    CHECK(c.h_prime->size() == 11);
    CHECK(c.correction_rows == 408);
    CHECK(c.correction_cols == 45);
    CHECK(c.global_sigma_basis.size() == 5);
    REQUIRE(c.invariant_basis.size() == 1);
    CHECK(c.invariant_basis[0] == parse_poly(named.at("G4_invariant_1")));
    CHECK(c.invariant_basis[0].size() == 16);
    CHECK(c.warnings.empty());

    for (const auto& p : c.global_sigma_basis) CHECK(verify_global_sigma(p, b));
    CHECK(verify_glk(c.invariant_basis[0], b));
    CHECK_FALSE(verify_glk(parse_poly(named.at("GL_inv_1")), b));
    CHECK(parse_poly(named.at("GL_inv_1")) + *c.h_prime == parse_poly(named.at("h_plus_h_prime")));
    CHECK(verify_global_sigma(parse_poly(named.at("h_plus_h_prime")), b));
}

TEST_CASE("certificate fields") {
    auto j = nlohmann::json::parse(certificate_json(report_4_33()));
    CHECK(j["k"] == 4);
    CHECK(j["d"] == 33);
    CHECK(j["case"] == "CASE_2");
    CHECK(j["dimension"] == 1);
    CHECK(j["strata"].size() == 2);
    CHECK(j["strata"][1]["size"] == 91);
    CHECK(j["global_sigma_basis"].size() == 5);
    auto txt = text_report(report_4_33(), basis_4_33());
    CHECK(txt.find("Case Type: CASE_2") != std::string::npos);
    CHECK(txt.find("Dimension of (QP_4)_33^GL_4: 1") != std::string::npos);
}

TEST_CASE("order of the component pool does not matter") {
    auto serial = global_glk_invariants(basis_4_33());
    CHECK(serial.certificate.invariant_basis == report_4_33().certificate.invariant_basis);
    CHECK(serial.certificate.h_prime == report_4_33().certificate.h_prime);
}

TEST_CASE("case detection") {
    WeightVector lo{3, 1, 1, 1, 1}, hi{3, 3, 2, 2};
    CHECK(detect_case({lo, hi}, {0, 0}, {1, 1}).tag == InvariantCase::case3);
    CHECK(detect_case({}, {}, {}).tag == InvariantCase::case3);
    auto one = detect_case({lo, hi}, {1, 0}, {1, 1});
    CHECK(one.tag == InvariantCase::case1);
    CHECK(one.main_weight == lo);
    auto two = detect_case({lo, hi}, {0, 1}, {4, 9});
    CHECK(two.tag == InvariantCase::case2);
    CHECK(two.main_weight == hi);
    CHECK(detect_case({lo, hi}, {1, 1}, {1, 1}).tag == InvariantCase::case2);
    CHECK_THROWS(detect_case({lo}, {1, 1}, {1}));
}

TEST_CASE("two variables against exhaustive search") {
    auto o = props::k2_invariant_dimensions();
    CHECK_MESSAGE(o.ok, o.detail);
    CHECK(o.checked == 7);
}

TEST_CASE("small degrees") {
    auto b = admissible_basis_and_reducer(1, 3);
    auto r = global_glk_invariants(b);
    CHECK(r.certificate.invariant_basis.size() == 1);
    CHECK(verify_glk(Poly2::single({3}), b));
}
