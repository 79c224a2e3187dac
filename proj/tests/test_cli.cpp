#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "varreg/cli.hpp"
#include "varreg/io.hpp"
#include "test_support.hpp"

using namespace varreg;
using ojson = nlohmann::ordered_json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

// independent canonical re-emitter used to check the round-trip contract
void reemit(const ojson& j, std::string& s) {
    if (j.is_object()) {
        s += '{';
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first)
                s += ',';
            first = false;
            s += '"' + it.key() + "\":";
            reemit(it.value(), s);
        }
        s += '}';
    } else if (j.is_array()) {
        s += '[';
        bool first = true;
        for (const auto& item : j) {
            if (!first)
                s += ',';
            first = false;
            reemit(item, s);
        }
        s += ']';
    } else if (j.is_string()) {
        s += '"' + j.get<std::string>() + '"';
    } else if (j.is_boolean()) {
        s += j.get<bool>() ? "true" : "false";
    } else if (j.is_number_integer()) {
        s += std::to_string(j.get<std::int64_t>());
    } else if (j.is_number_unsigned()) {
        s += std::to_string(j.get<std::uint64_t>());
    } else if (j.is_number_float()) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
        s += buf;
    } else {
        s += "null";
    }
}

std::string canonical(const std::string& text) {
    std::string s;
    reemit(ojson::parse(text), s);
    s += '\n';
    return s;
}

} // namespace

TEST_CASE("complex literal parsing") {
    CHECK(parse_complex("0.5") == Complex{0.5, 0.0});
    CHECK(parse_complex("-0.3+0.2i") == Complex{-0.3, 0.2});
    CHECK(parse_complex("0.2i") == Complex{0.0, 0.2});
    CHECK(parse_complex("-i") == Complex{0.0, -1.0});
    CHECK(parse_complex("+i") == Complex{0.0, 1.0});
    CHECK(parse_complex("1-i") == Complex{1.0, -1.0});
    CHECK(parse_complex("1e-3+2.5e-4i") == Complex{1e-3, 2.5e-4});
    CHECK(parse_complex("[0.5,0.25]") == Complex{0.5, 0.25});
    CHECK(parse_complex(" [ 1 , -2 ] ") == Complex{1.0, -2.0});
    CHECK_THROWS_AS(parse_complex("abc"), InvalidInput);
    CHECK_THROWS_AS(parse_complex("[1,2,3]"), InvalidInput);
    CHECK_THROWS_AS(parse_complex(""), InvalidInput);

    const auto list = parse_complex_list("0.5,[0.1,0.2],-i");
    REQUIRE(list.size() == 3);
    CHECK(list[1] == Complex{0.1, 0.2});
    CHECK(parse_complex_list("").empty());
}

TEST_CASE("disk command on first-order data at the origin") {
    const CliRun r = run({"disk", "--z0", "0", "--gammas", "0", "--n", "1"});
    CHECK(r.code == 0);
    const ojson j = ojson::parse(r.out);
    CHECK(j["center"][0].get<double>() == 0.0);
    CHECK(j["center"][1].get<double>() == 0.0);
    CHECK(j["radius"].get<double>() == 1.0);
    CHECK(j["branch"].get<std::string>() == "interior");
}

TEST_CASE("dieudonne command reproduces the classical radius") {
    const CliRun r = run({"dieudonne", "--z0", "0.5", "--w0", "0", "--n", "1"});
    CHECK(r.code == 0);
    const ojson j = ojson::parse(r.out);
    CHECK(j["radius"].get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(j["gammas"].size() == 0);
}

TEST_CASE("validation failures exit with code 1 and a machine-readable kind") {
    const CliRun r = run({"disk", "--z0", "0.3", "--gammas", "1.5", "--n", "1"});
    CHECK(r.code == 1);
    const ojson j = ojson::parse(r.out);
    CHECK(j["error"]["kind"].get<std::string>() == "modulus_out_of_range");
    CHECK_FALSE(r.err.empty());

    CHECK(run({"disk", "--z0", "0.3", "--gammas", "0.1,0.2", "--n", "5"}).code == 1);
    CHECK(run({"nonsense"}).code == 1);
    CHECK(run({"disk", "--z0", "0.3"}).code == 1);
}

TEST_CASE("infeasible prescriptions carry index and excess") {
    const CliRun r =
        run({"dieudonne", "--z0", "0.5", "--w0", "0.1", "--ws", "5.0", "--n", "2"});
    CHECK(r.code == 1);
    const ojson j = ojson::parse(r.out);
    CHECK(j["error"]["kind"].get<std::string>() == "infeasible");
    CHECK(j["error"]["index"].get<int>() == 1);
    CHECK(j["error"]["excess"].get<double>() > 0.0);
}

TEST_CASE("extremal command emits series JSON") {
    SUBCASE("identity collapse") {
        const CliRun r =
            run({"extremal", "--z0", "0", "--gammas", "0", "--epsilon", "1", "--order", "3"});
        CHECK(r.code == 0);
        const ojson j = ojson::parse(r.out);
        CHECK(j["center"][0].get<double>() == 0.0);
        REQUIRE(j["coeffs"].size() == 4);
        CHECK(j["coeffs"][0][0].get<double>() == 0.0);
        CHECK(j["coeffs"][1][0].get<double>() == 1.0);
        CHECK(j["coeffs"][2][0].get<double>() == 0.0);
        CHECK(j["coeffs"][3][0].get<double>() == 0.0);
    }
    SUBCASE("monomial collapse at second order") {
        const CliRun r =
            run({"extremal", "--z0", "0", "--gammas", "0,0", "--epsilon", "1", "--order", "4"});
        CHECK(r.code == 0);
        const ojson j = ojson::parse(r.out);
        CHECK(j["coeffs"][2][0].get<double>() == 1.0);
        CHECK(j["coeffs"][1][0].get<double>() == 0.0);
    }
    SUBCASE("epsilon = 0 reproduces the disk center") {
        const CliRun series =
            run({"extremal", "--z0", "0.3", "--gammas", "0.2,0.4", "--epsilon", "0"});
        const CliRun disk = run({"disk", "--z0", "0.3", "--gammas", "0.2,0.4"});
        REQUIRE(series.code == 0);
        REQUIRE(disk.code == 0);
        const ojson js = ojson::parse(series.out);
        const ojson jd = ojson::parse(disk.out);
        const double c2 = 2.0 * js["coeffs"][2][0].get<double>();
        CHECK(c2 == doctest::Approx(jd["center"][0].get<double>()).epsilon(1e-12));
    }
    SUBCASE("h form evaluates z times the map") {
        const CliRun r = run({"extremal", "--z0", "0.5", "--gammas", "0", "--epsilon", "1",
                              "--order", "3", "--h-form"});
        CHECK(r.code == 0);
        const ojson j = ojson::parse(r.out);
        // h(z) = z (z - 1/2)/(1 - z/2) at z0 = 1/2: h(1/2) = 0, h'(1/2) = 2/3
        CHECK(j["coeffs"][0][0].get<double>() == doctest::Approx(0.0));
        CHECK(j["coeffs"][1][0].get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
    }
}

TEST_CASE("hyperbolic command reports parameters and degeneracy") {
    const CliRun r = run({"hyperbolic", "--theta", "0", "--zeros", "0,0.5", "--z0", "0.25",
                          "--n", "3"});
    CHECK(r.code == 0);
    const ojson j = ojson::parse(r.out);
    CHECK(j["degenerate_at"].get<int>() == 2);
    CHECK(j["gammas"].size() == 2);

    const CliRun interior =
        run({"hyperbolic", "--theta", "0.5", "--zeros", "0.1,0.2,0.3,0.4", "--z0", "0.2", "--n",
             "3"});
    CHECK(interior.code == 0);
    CHECK(ojson::parse(interior.out)["degenerate_at"].is_null());
}

TEST_CASE("verify runs are byte-identical for a fixed seed") {
    const std::vector<std::string> args{"verify", "--seed", "42", "--trials", "60", "--n-max",
                                        "3"};
    const CliRun a = run(args);
    const CliRun b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
}

TEST_CASE("VARREGION_SEED overrides the seed flag") {
    const CliRun base = run({"verify", "--seed", "7", "--trials", "40", "--n-max", "2"});
    setenv("VARREGION_SEED", "7", 1);
    const CliRun via_env = run({"verify", "--seed", "9999", "--trials", "40", "--n-max", "2"});
    unsetenv("VARREGION_SEED");
    CHECK(base.out == via_env.out);

    setenv("VARREGION_SEED", "not-a-number", 1);
    const CliRun bad = run({"verify", "--trials", "40", "--n-max", "2"});
    unsetenv("VARREGION_SEED");
    CHECK(bad.code == 1);
}

TEST_CASE("JSON outputs re-emit byte-identically through the schema") {
    const std::vector<std::vector<std::string>> commands = {
        {"disk", "--z0", "0.31", "--gammas", "0.2+0.1i,-0.4"},
        {"dieudonne", "--z0", "0.5", "--w0", "0.1+0.05i", "--gammas", "0.3"},
        {"extremal", "--z0", "0.2", "--gammas", "0.1,0.2", "--epsilon", "0.5+0.5i"},
        {"hyperbolic", "--theta", "1.0", "--zeros", "0.3,0.1-0.2i", "--z0", "0.15", "--n", "2"},
        {"verify", "--trials", "30", "--n-max", "2"},
    };
    for (const auto& args : commands) {
        const CliRun r = run(args);
        REQUIRE(r.code == 0);
        CHECK(canonical(r.out) == r.out);
    }
}

TEST_CASE("only JSON reaches standard output") {
    const CliRun ok = run({"disk", "--z0", "0.1", "--gammas", "0.2"});
    CHECK_NOTHROW(ojson::parse(ok.out));
    const CliRun bad = run({"disk", "--z0", "oops", "--gammas", "0.2"});
    CHECK_NOTHROW(ojson::parse(bad.out));
}
