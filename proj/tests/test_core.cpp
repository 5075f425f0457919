#include <doctest.h>

#include <cmath>

#include "layersim/core.hpp"

using namespace layersim;

TEST_CASE("validate_params derives the circuit constants") {
    SystemParams p;
    p.N = 100;
    p.R_V = 2;
    p.R_0 = 200;
    p.V = 1;
    const ValidatedParams v = validate_params(p);
    CHECK(v.mu == doctest::Approx(100.0));
    CHECK(v.R == doctest::Approx(20000.0));
    CHECK(v.V_scaled == doctest::Approx(10.0));
    CHECK(v.P_typ == doctest::Approx(0.5));

    SystemParams unit;
    unit.N = 2;
    unit.R_V = 1;
    unit.R_0 = 1;
    unit.V = 1;
    const ValidatedParams u = validate_params(unit);
    CHECK(u.mu == 1.0);
    CHECK(u.R == 2.0);
    CHECK(u.V_scaled == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("validate_params names the offending field") {
    auto field_of = [](SystemParams p) -> std::string {
        try {
            validate_params(p);
        } catch (const ValidationError& e) {
            return e.field();
        }
        return "";
    };
    SystemParams p;
    p.p_err = 1.5;
    CHECK(field_of(p) == "p_err");
    p = {};
    p.N = 1;
    CHECK(field_of(p) == "N");
    p = {};
    p.R_V = 0;
    CHECK(field_of(p) == "R_V_ohm");
    p = {};
    p.R_0 = -1;
    CHECK(field_of(p) == "R0_ohm");
    p = {};
    p.V = std::nan("");
    CHECK(field_of(p) == "V_volt");
    p = {};
    p.burn_in = p.steps;
    CHECK(field_of(p) == "burn_in");
    p = {};
    p.topology.kind = TopologyKind::WattsStrogatz;
    p.topology.ws_K = 3;
    CHECK(field_of(p) == "ws_K");
    p.topology.ws_K = 100;
    CHECK(field_of(p) == "ws_K");
    p = {};
    p.topology.kind = TopologyKind::BarabasiAlbert;
    p.topology.ba_m = 100;
    CHECK(field_of(p) == "ba_m");
}

TEST_CASE("validate_params is pure") {
    SystemParams p;
    p.N = 37;
    p.R_0 = 123.5;
    const ValidatedParams a = validate_params(p);
    const ValidatedParams b = validate_params(p);
    CHECK(a.params == b.params);
    CHECK(a.mu == b.mu);
    CHECK(a.R == b.R);
    CHECK(a.V_scaled == b.V_scaled);
    CHECK(a.P_typ == b.P_typ);
}

TEST_CASE("strategy integer encoding") {
    CHECK(to_int(AgentStrategy::Cooperate) == -1);
    CHECK(to_int(AgentStrategy::Ignore) == 0);
    CHECK(to_int(AgentStrategy::Defect) == 1);
    for (int v : {-1, 0, 1}) CHECK(to_int(strategy_from_int(v)) == v);
    CHECK_THROWS_AS(strategy_from_int(2), std::out_of_range);
}

TEST_CASE("topology labels round-trip") {
    for (const char* label : {"ring", "ws:4:0.5", "ws:6:1", "ba:2", "ba:4"}) {
        CHECK(topology_label(parse_topology_label(label)) == label);
    }
    CHECK_THROWS_AS(parse_topology_label("star"), ValidationError);
    CHECK_THROWS_AS(parse_topology_label("ws:4"), ValidationError);
    CHECK_THROWS_AS(parse_topology_label("ba:x"), ValidationError);
}

TEST_CASE("real formatting is round-trip exact") {
    for (double x : {0.1, 1.0 / 3.0, 5e-5, 123456.789, 0.0005}) CHECK(parse_real(format_real(x), "x") == x);
    for (double x : {1e-300, -2.5e20, 0.0}) CHECK(parse_real(format_real(x), "x") == x);
    CHECK(format_real(0.0005) == "0.0005");
    CHECK(format_real(100.0) == "100");
    CHECK_THROWS_AS(parse_real("1.0x", "x"), ValidationError);
    CHECK_THROWS_AS(parse_integer("", "n"), ValidationError);
    CHECK(parse_seed("18446744073709551615") == 18446744073709551615ULL);
}
