#include <doctest.h>

#include <string>

#include "loctower/io.hpp"
#include "support.hpp"

using namespace loctower;
namespace ts = loctower::testsupport;
using nlohmann::json;

TEST_CASE("tower serialization round-trips bit-exactly") {
    ts::Rng rng(2024);
    for (int trial = 0; trial < 10; ++trial) {
        const auto p = ts::random_normal_tower(rng, ts::random_chain(rng, 4, 8));
        const json doc = io::tower_to_json(p.tower);
        const std::string text = doc.dump();
        const auto back = io::tower_from_json(io::parse_text(text));
        CHECK(io::tower_to_json(back).dump() == text);
        for (std::size_t a = 1; a <= p.tower.num_levels(); ++a)
            CHECK(ts::max_abs_diff(back.level(a), p.tower.level(a)) == 0.0);
    }
}

TEST_CASE("tower parser rejects malformed documents") {
    CHECK_THROWS_AS(io::parse_text("{"), TowerError);
    CHECK_THROWS_AS(io::parse_text("{\"dims\": [1], \"levels\": [[NaN, 0]]}"), TowerError);
    CHECK_THROWS_AS(io::tower_from_json(io::parse_text("{\"dims\": [1]}")), TowerError);
    CHECK_THROWS_AS(
        io::tower_from_json(io::parse_text("{\"dims\": [1], \"levels\": [[[1, 0], [0, 0]]]}")),
        TowerError);
    // wrong nesting: entries must be [re, im] pairs
    CHECK_THROWS_AS(io::tower_from_json(io::parse_text("{\"dims\": [1], \"levels\": [[1.5]]}")),
                    TowerError);
}

TEST_CASE("function spec serialization round-trips") {
    ts::Rng rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = FunctionSpec::polynomial(ts::random_polynomial(rng));
        const std::string text = io::function_spec_to_json(f).dump();
        const auto back = io::function_spec_from_json(io::parse_text(text));
        CHECK(io::function_spec_to_json(back).dump() == text);
        for (int i = 0; i < 5; ++i) {
            const Complex z = ts::random_complex(rng);
            CHECK(std::abs(f(z) - back(z)) == 0.0);
        }
    }
    for (const std::string name : {"identity", "conj", "exp", "re", "im", "abs2", "const:2.5,-1"}) {
        const auto f = io::named_function_from_string(name);
        const std::string text = io::function_spec_to_json(f).dump();
        const auto back = io::function_spec_from_json(io::parse_text(text));
        CHECK(io::function_spec_to_json(back).dump() == text);
    }
    const auto table = FunctionSpec::table({{Complex(1, 0), Complex(2, 3)}, {Complex(4, 0), Complex(0, 0)}});
    const std::string text = io::function_spec_to_json(table).dump();
    CHECK(io::function_spec_to_json(io::function_spec_from_json(io::parse_text(text))).dump() == text);
    CHECK_THROWS_AS(io::named_function_from_string("nope"), TowerError);
}

TEST_CASE("grid function serialization round-trips") {
    IntervalChain half(IntervalChain::Mode::Halfline, 2, 10);
    const auto g = make_witness(half, 2);
    const std::string text = io::grid_function_to_json(g).dump();
    const auto back = io::grid_function_from_json(io::parse_text(text));
    CHECK(io::grid_function_to_json(back).dump() == text);
    CHECK(back.chain() == g.chain());
}

TEST_CASE("character and gelfand serialization shapes") {
    std::vector<int> dims{1, 2, 3};
    std::vector<Complex> entries{{1, 0}, {2, 0}, {3, 0}};
    const auto t = OperatorTower::diagonal(IndexChain(dims), entries);
    const auto chars = enumerate_characters(t);
    const json cj = io::characters_to_json(chars);
    REQUIRE(cj.is_array());
    REQUIRE(cj.size() == 3);
    CHECK(cj[0].contains("min_level"));
    CHECK(cj[0].contains("value"));
    const auto values = gelfand(t, {FunctionSpec::named(NamedFunction::Identity)}, chars);
    const json gj = io::gelfand_to_json(chars, values);
    REQUIRE(gj.size() == 3);
    CHECK(gj[0].contains("character"));
    CHECK(gj[0].at("value") == cj[0].at("value"));
}
