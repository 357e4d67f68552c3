#include <doctest.h>

#include "cmsdef/io.hpp"

using namespace cmsdef;

TEST_CASE("laurent text form") {
    LaurentPoly f(1, 1);
    f.add_term({1, -1}, RatK::k_pow(-1));
    f.add_term({0, 0}, RatK(2));
    CHECK(to_text(f) == "(2)/(1) + (1)/(k) * x1 * x2^-1");
    CHECK(to_text(LaurentPoly(1, 1)) == "0");
}

TEST_CASE("laurent json round trip") {
    LaurentPoly f = deformed_power_sum(1, 2, 1) * deformed_power_sum(-2, 2, 1);
    LaurentPoly g = laurent_from_json(to_json(f));
    CHECK(f == g);
    // byte determinism of the serialized form
    CHECK(to_json(f) == to_json(g));
}

TEST_CASE("bipartition json round trip") {
    auto [lam, mu] = bipartition_from_json(bipartition_to_json({3, 1}, {2}));
    CHECK(lam == Partition{3, 1});
    CHECK(mu == Partition{2});
}

TEST_CASE("report json shapes") {
    std::string cls = to_json(eq_class(Weight(1, 1, {0, 0})));
    CHECK(cls.find("\"chi_min\":\"(0|0)\"") != std::string::npos);
    CHECK(cls.find("\"class_size\":2") != std::string::npos);
    std::string alg = to_json(image_algebra(Weight(1, 1, {0, 0})));
    CHECK(alg.find("\"dimension\":2") != std::string::npos);
    CHECK(alg.find("\"local_structure_ok\":true") != std::string::npos);
}
