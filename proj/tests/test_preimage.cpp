#include "properties.hpp"

#include <cohit/preimage.hpp>

#include <doctest.h>
#include <json.hpp>

using namespace cohit;

namespace {

const char* kD0 = "3,3,2,6 + 3,3,4,4 + 3,5,4,2 + 3,5,3,3";
const char* kNotCocycle = "6,2,3,3 + 4,4,3,3 + 2,4,5,3 + 1,5,1,7";

}  // namespace

TEST_CASE("degree-8 class in three variables") {
    auto p = make_problem(3, parse_lambda("3,3,2"));
    CHECK(p.deg_x == 8);
    CHECK(p.deg_z == 9);
    auto r = find_preimages(p);
    REQUIRE(r.status == SearchStatus::found);
    const auto& s = r.solutions.front();
    CHECK(s.x == parse_divided(oracle::read_data("c0_x.txt")));
    CHECK(s.z.is_zero());
    CHECK(s.certificate == parse_lambda("3,3,2"));
    CHECK(verify_solution(3, s.x, s.z, p.y));
}

TEST_CASE("degree-14 class in four variables") {
    auto p = make_problem(4, parse_lambda(kD0));
    auto r = find_preimages(p);
    REQUIRE(r.status == SearchStatus::found);
    const auto& s = r.solutions.front();
    CHECK(is_A_annihilated(s.x));
    CHECK(verify_solution(4, s.x, s.z, p.y));
    CHECK(adem_reduce(transfer_poly(s.x) + differential(s.z)) == adem_reduce(p.y));
    // the fixture representative needs a boundary under the mirrored differential
    auto printed_x = parse_divided(oracle::read_data("d0_x.txt"));
    CHECK(is_A_annihilated(printed_x));
    auto printed_z = parse_lambda("3,3,9 + 3,9,3");
    CHECK(adem_reduce(transfer_poly(printed_x) + differential(printed_z, DifferentialOrder::reversed)) ==
          adem_reduce(p.y));
}

TEST_CASE("solutions differ by annihilated kernel elements") {
    auto p = make_problem(3, parse_lambda("3,3,2"));
    p.all = true;
    auto r = find_preimages(p);
    REQUIRE(r.status == SearchStatus::found);
    for (const auto& s : r.solutions) CHECK(verify_solution(3, s.x, s.z, p.y));
}

TEST_CASE("non-cocycle targets are refused") {
    auto p = make_problem(4, parse_lambda(kNotCocycle));
    CHECK_THROWS_AS(assemble_system(p), NotCocycleError);
    CHECK_THROWS_AS(find_preimages(p), NotCocycleError);
    try {
        find_preimages(p);
    } catch (const NotCocycleError& e) {
        CHECK_FALSE(e.delta().is_zero());
    }
    p.require_cocycle = false;
    auto r = find_preimages(p);
    CHECK(r.status == SearchStatus::no_solution);
    CHECK(r.solutions.empty());
}

TEST_CASE("bad targets") {
    CHECK_THROWS_AS(make_problem(4, LambdaPoly{}), std::invalid_argument);
    CHECK_THROWS_AS(make_problem(3, parse_lambda("3,3,2,6")), std::invalid_argument);
    CHECK_THROWS_AS(make_problem(2, parse_lambda("1,2 + 1,3")), std::invalid_argument);
}

TEST_CASE("certificate") {
    auto p = make_problem(3, parse_lambda("3,3,2"));
    auto r = find_preimages(p);
    auto j = nlohmann::json::parse(certificate_json(p, r));
    CHECK(j["status"] == "found");
    CHECK(j["k"] == 3);
    CHECK(j["y_admissible"] == "3,3,2");
    CHECK(parse_divided(j["x"].get<std::string>()) == parse_divided(oracle::read_data("c0_x.txt")));
    CHECK(j["solutions"].size() == r.solutions.size());
}
