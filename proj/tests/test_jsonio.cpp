#include <doctest.h>

#include "wdual/json_io.hpp"

using namespace wdual;

TEST_CASE("weight descriptors round-trip") {
    for (const WeightTable& w : {homogeneous_chain(2, 3), homogeneous_matrix(3, 2),
                                 WeightTable::chain(9, 2, {3, 5}), WeightTable::matrix(4, 2, {7, 2})}) {
        WeightTable back = weight_from_json(weight_to_json(w));
        CHECK(back.family() == w.family());
        CHECK(back.q() == w.q());
        CHECK(back.values() == w.values());
    }
    json bad;
    bad["family"] = "group";
    bad["q"] = 2;
    bad["values"] = {1};
    CHECK_THROWS_AS(weight_from_json(bad), std::invalid_argument);
}

TEST_CASE("enumerators round-trip with decimal-string coefficients") {
    PartitionEnumerator e(3, 5);
    e.add_term({5, 0, 0}, Int("123456789012345678901234567890"));
    e.add_term({2, 2, 1}, 7);
    PartitionEnumerator back = enumerator_from_json(enumerator_to_json(e));
    CHECK(back == e);
    // canonical term order: exponent vectors ascending
    json j = enumerator_to_json(e);
    CHECK(j["terms"][0]["exponents"] == json({2, 2, 1}));
    CHECK(j["terms"][1]["coeff"] == "123456789012345678901234567890");
}

TEST_CASE("code descriptors round-trip") {
    ChainRing z8 = ChainRing::integers_mod(2, 3);
    ChainCode c = ChainCode::cyclic(z8, 3, {8, 8, 8}, 2);
    ParsedCode pc = code_from_json(code_to_json(c));
    REQUIRE(pc.chain.has_value());
    CHECK(pc.chain->cyclic_mult() == c.cyclic_mult());
    CHECK(pc.chain->zero_mult() == 2);
    CHECK(pc.chain->ring().rep() == ChainRing::Rep::IntegersModPM);

    std::map<std::vector<int>, Int> mult;
    mult[{0, 0, 1}] = 2;
    mult[{1, 1, 0}] = 1;
    ChainCode s = ChainCode::semisimple(z8, 3, mult, 0);
    ParsedCode ps = code_from_json(code_to_json(s));
    REQUIRE(ps.chain.has_value());
    CHECK(ps.chain->semisimple_mult() == s.semisimple_mult());

    auto orbits = orbit_index_for(2, 3, 2, SubspaceOrdering::Lex);
    std::vector<Int> mm(static_cast<size_t>(orbits->count()), Int(0));
    mm[0] = 3;
    mm[4] = 2;
    mm[9] = 1;
    MatrixCode mc(2, 3, field(2), orbits, mm);
    ParsedCode pm = code_from_json(code_to_json(mc));
    REQUIRE(pm.matrix.has_value());
    CHECK(pm.matrix->mult() == mc.mult());
    // the w-weight enumerator survives the round trip
    WeightTable w = homogeneous_matrix(2, 2);
    CHECK(pm.matrix->wwe(w) == mc.wwe(w));
}

TEST_CASE("verdict serialization") {
    WeightTable w = homogeneous_chain(2, 3);
    Verdict v = classify_chain(w);
    json j = verdict_to_json(v);
    CHECK(j["verdict"] == "fails");
    CHECK(j["witness"]["k"].get<long>() == v.k);
    CHECK(j["witness"]["delta"].get<std::string>() == v.delta.get_str());
    Verdict r = classify_chain(hamming_chain(2, 2));
    json jr = verdict_to_json(r);
    CHECK(jr["verdict"] == "respects");
    CHECK(jr["rule"] == "hamming-multiple");
    CHECK(jr.find("witness") == jr.end());
}
