#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include <sofdyck/cli.hpp>

using namespace sofdyck;
using Json = nlohmann::json;

namespace
{

struct Run {
    int code = 0;
    std::string out;
    std::string err;

    Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::filesystem::path write_temp(const std::string &name, const std::string &text)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST_CASE("zeta command")
{
    const auto r = run({"zeta", "--family", "dyck", "--n", "2", "--order", "4", "--json"});
    REQUIRE(r.code == exit_code::ok);
    const auto j = r.json();
    const auto c = j["zeta"]["coefficients"];
    REQUIRE(c.size() == 5);
    CHECK(c[0] == "1");
    CHECK(c[1] == "4");
    CHECK(c[2] == "14");
    CHECK(j["zeta"]["source"] == "closed-form");
    CHECK(j["periodic_counts"][1] == "12");

    const auto s = run({"zeta", "--family", "schroeder", "--n", "2", "--order", "0", "--json"});
    REQUIRE(s.code == exit_code::ok);
    CHECK(s.json()["zeta"]["coefficients"] == Json::array({"1"}));

    const auto xi = run({"zeta", "--family", "xi", "--n", "2", "--j", "1", "--xi-omega", "1:1", "--xi-gamma", "1:1;2:1",
                         "--order", "8", "--json"});
    const auto mr = run({"zeta", "--family", "motzkin-restricted", "--n", "2", "--order", "8", "--json"});
    REQUIRE(xi.code == exit_code::ok);
    REQUIRE(mr.code == exit_code::ok);
    CHECK(xi.json()["zeta"]["coefficients"] == mr.json()["zeta"]["coefficients"]);

    // Non-uniform psi falls back to enumerated periodic points.
    const auto nu = run({"zeta", "--family", "psi", "--n", "2", "--psi", "1:1,2;2:1", "--order", "4", "--json"});
    REQUIRE(nu.code == exit_code::ok);
    CHECK(nu.json()["zeta"]["source"] == "oracle");
}

TEST_CASE("entropy command")
{
    const auto d = run({"entropy", "--family", "dyck", "--n", "3", "--json"});
    REQUIRE(d.code == exit_code::ok);
    CHECK(std::fabs(d.json()["entropy"]["value"].get<double>() - std::log(4.0)) < 1e-10);
    CHECK(d.json()["entropy"]["method"] == "root-equation");

    const auto s = run({"entropy", "--family", "schroeder", "--n", "2", "--json"});
    REQUIRE(s.code == exit_code::ok);
    CHECK(std::fabs(s.json()["entropy"]["value"].get<double>() - 1.44363) < 1e-5);

    const auto b = run({"entropy", "--family", "bouquet", "--n", "2", "--j", "1", "--q", "2", "--json"});
    REQUIRE(b.code == exit_code::ok);
    CHECK(std::fabs(b.json()["entropy"]["value"].get<double>() - 1.19476) < 1e-5);

    const auto t = run({"entropy", "--family", "dyck", "--n", "2"});
    CHECK(t.code == exit_code::ok);
    CHECK(t.out.find("1.098612") != std::string::npos);
}

TEST_CASE("count command")
{
    auto count = [](std::vector<std::string> args) {
        args.insert(args.begin(), "count");
        args.push_back("--json");
        const auto r = run(args);
        REQUIRE(r.code == exit_code::ok);
        return r.json()["count"].get<std::uint64_t>();
    };
    CHECK(count({"--family", "dyck", "--n", "2", "--length", "2"}) == 14);
    CHECK(count({"--family", "dyck", "--n", "2", "--length", "2", "--periodic"}) == 12);
    CHECK(count({"--family", "motzkin", "--n", "2", "--length", "1", "--periodic"}) == 5);
    CHECK(count({"--family", "dyck", "--n", "2", "--length", "6", "--threads", "3"}) ==
          count({"--family", "dyck", "--n", "2", "--length", "6"}));

    const auto guard = run({"count", "--family", "dyck", "--n", "2", "--length", "20"});
    CHECK(guard.code == exit_code::resource_guard);
    CHECK_FALSE(guard.err.empty());
    CHECK(guard.out.empty());
}

TEST_CASE("verify command")
{
    for (const auto &args : std::vector<std::vector<std::string>>{
             {"--family", "dyck", "--n", "2", "--max-n", "8"},
             {"--family", "triple", "--n", "2", "--max-n", "8"},
             {"--family", "psi", "--n", "2", "--k", "1", "--psi", "1:1;2:2", "--max-n", "8"},
             {"--family", "bouquet", "--n", "2", "--j", "2", "--q", "1", "--max-n", "6"},
             {"--family", "even-odd", "--n", "2", "--k-minus", "2", "--max-n", "5"},
         }) {
        std::vector<std::string> full{"verify"};
        full.insert(full.end(), args.begin(), args.end());
        full.push_back("--json");
        const auto r = run(full);
        CAPTURE(r.err);
        CHECK(r.code == exit_code::ok);
        CHECK(r.json()["verification"]["all_match"] == true);
    }

    const auto printed = run({"verify", "--family", "triple", "--n", "2", "--max-n", "3", "--as-printed", "--json"});
    CHECK(printed.code == exit_code::mismatch);
    const auto j = printed.json();
    CHECK(j["verification"]["all_match"] == false);
    CHECK(j["verification"]["rows"][1]["closed_form"] == "8");
    CHECK(j["verification"]["rows"][1]["oracle"] == "12");
    CHECK(j["verification"]["rows"][1]["match"] == false);
    CHECK(run({"verify", "--family", "dyck", "--n", "2", "--as-printed"}).code == exit_code::bad_input);
}

TEST_CASE("classify command")
{
    const auto r = run({"classify", "--n", "3", "--psi", "1:1,2,3;2:1,3;3:3", "--json"});
    REQUIRE(r.code == exit_code::ok);
    const auto j = r.json();
    CHECK(j["delta_gamma"] == Json::array({1}));
    CHECK(j["delta_setminus"] == Json::array({2}));
    CHECK(j["delta_bullet"] == Json::array({3}));

    const auto s = run({"classify", "--n", "2", "--psi", "1:2;2:1", "--json"});
    REQUIRE(s.code == exit_code::ok);
    CHECK(s.json()["delta_setminus"] == Json::array({1, 2}));
    CHECK(s.json()["symmetries"].size() == 2);

    const auto bad = run({"classify", "--n", "2", "--psi", "1:2;;x"});
    CHECK(bad.code == exit_code::bad_input);
    CHECK_FALSE(bad.err.empty());
}

TEST_CASE("bad input")
{
    CHECK(run({}).code == exit_code::bad_input);
    CHECK(run({"zeta", "--family", "nope"}).code == exit_code::bad_input);
    CHECK(run({"zeta", "--family", "dyck", "--n", "1"}).code == exit_code::bad_input);
    CHECK(run({"zeta", "--family", "psi", "--n", "2", "--psi", "1:1"}).code == exit_code::bad_input);
    CHECK(run({"zeta", "--family", "psi", "--n", "2", "--k", "2", "--psi", "1:1;2:2"}).code == exit_code::bad_input);
    CHECK(run({"count", "--family", "dyck", "--n", "2"}).code == exit_code::bad_input);
    CHECK(run({"zeta", "--spec-file", "/nonexistent/spec.json"}).code == exit_code::bad_input);
    CHECK(run({"zeta", "--spec-file", write_temp("sofdyck_bad.json", "{ nope").string()}).code ==
          exit_code::bad_input);
}

TEST_CASE("letter set grammar")
{
    CHECK(parse_letter_sets("1:1,2;2:1", 2) == LetterSets{{1, 2}, {1}});
    CHECK(parse_letter_sets("2:1;1:2,1", 2) == LetterSets{{1, 2}, {1}});
    CHECK(format_letter_sets({{1, 2}, {1}}) == "1:1,2;2:1");
    CHECK_THROWS_AS(parse_letter_sets("1:1", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_letter_sets("1:1;1:2", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_letter_sets("1:a;2:1", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_letter_sets("3:1;2:1", 2), std::invalid_argument);
}

TEST_CASE("determinism and timing")
{
    const std::vector<std::string> args{"verify", "--family", "motzkin", "--n", "2", "--max-n", "6", "--json"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.json().contains("timing"));
    auto timed = args;
    timed.push_back("--timing");
    CHECK(run(timed).json().contains("timing"));
}

TEST_CASE("spec files")
{
    const auto path = write_temp("sofdyck_even.json", R"({
        "family": "section2",
        "n": 2,
        "graph": {
            "vertices": 2,
            "distinguished": 0,
            "edges": [
                {"from": 0, "to": 0, "label": "1"},
                {"from": 0, "to": 1, "label": "0"},
                {"from": 1, "to": 0, "label": "0"}
            ]
        }
    })");
    const auto v = run({"verify", "--spec-file", path.string(), "--max-n", "6", "--json"});
    CAPTURE(v.err);
    REQUIRE(v.code == exit_code::ok);
    const auto z = run({"zeta", "--spec-file", path.string(), "--order", "8", "--json"});
    const auto s = run({"zeta", "--family", "schroeder", "--n", "2", "--order", "8", "--json"});
    CHECK(z.json()["zeta"]["coefficients"] == s.json()["zeta"]["coefficients"]);

    const auto psi = write_temp("sofdyck_psi.json", R"({"family": "psi", "n": 2, "psi": [[2], [1]]})");
    const auto p = run({"classify", "--spec-file", psi.string(), "--json"});
    REQUIRE(p.code == exit_code::ok);
    CHECK(p.json()["delta_setminus"] == Json::array({1, 2}));

    // Not right-resolving.
    const auto bad = write_temp("sofdyck_nondet.json", R"({
        "family": "section2", "n": 2,
        "graph": {"vertices": 2, "distinguished": 0,
                  "edges": [{"from": 0, "to": 0, "label": "x"}, {"from": 0, "to": 1, "label": "x"},
                            {"from": 1, "to": 0, "label": "y"}]}
    })");
    CHECK(run({"zeta", "--spec-file", bad.string()}).code == exit_code::bad_input);
}
