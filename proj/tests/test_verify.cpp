#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "doctest.h"
#include "fsdist/csv.hpp"
#include "fsdist/verify.hpp"

using namespace fsdist;

TEST_CASE("format_double round-trips exactly") {
    for (double x : {0.0, 1.0, -2.5e17, 1.0 / 3.0, 1e-300, 6.626e-34,
                     0.1 + 0.2, -0.0, 1.7976931348623157e308}) {
        std::string s = csv::format_double(x);
        double back = std::strtod(s.c_str(), nullptr);
        CHECK(back == x);
    }
}

TEST_CASE("row join and split invert each other") {
    std::vector<std::string> fields = {"a", "1.25", "", "true", "x=1;y=2"};
    std::string row = csv::join_row(fields);
    CHECK(csv::split_row(row) == fields);
    CHECK(csv::split_row("single") == std::vector<std::string>{"single"});
}

TEST_CASE("bool formatting") {
    CHECK(csv::format_bool(true) == std::string("true"));
    CHECK(csv::format_bool(false) == std::string("false"));
    CHECK(csv::parse_bool("true"));
    CHECK_FALSE(csv::parse_bool("false"));
    CHECK_THROWS_AS(csv::parse_bool("yes"), std::invalid_argument);
}

TEST_CASE("report CSV round-trip is lossless") {
    VerificationReport rep;
    rep.suite = "demo";
    CheckRecord r1;
    r1.suite = "demo";
    r1.id = "first";
    r1.inputs = "t=0.10000000000000001;k=3";
    r1.route_a = "series";
    r1.route_b = "quad";
    r1.value_a = 1.0 / 3.0;
    r1.value_b = 0.33333333333333337;
    r1.discrepancy = 5.5511151231257827e-17;
    r1.tolerance = 1e-12;
    r1.pass = true;
    CheckRecord r2 = r1;
    r2.id = "second";
    r2.value_a = -1e-300;
    r2.pass = false;
    rep.records = {r1, r2};

    VerificationReport back = report_from_csv(report_to_csv(rep));
    REQUIRE(back.records.size() == 2);
    CHECK(back.suite == "demo");
    for (size_t i = 0; i < 2; i++) {
        const CheckRecord& a = rep.records[i];
        const CheckRecord& b = back.records[i];
        CHECK(a.suite == b.suite);
        CHECK(a.id == b.id);
        CHECK(a.inputs == b.inputs);
        CHECK(a.route_a == b.route_a);
        CHECK(a.route_b == b.route_b);
        CHECK(a.value_a == b.value_a);
        CHECK(a.value_b == b.value_b);
        CHECK(a.discrepancy == b.discrepancy);
        CHECK(a.tolerance == b.tolerance);
        CHECK(a.pass == b.pass);
    }
    // serialization is stable: a second pass is byte-identical
    CHECK(report_to_csv(back) == report_to_csv(rep));
}

TEST_CASE("report_from_csv rejects malformed input") {
    CHECK_THROWS_AS(report_from_csv(""), std::invalid_argument);
    CHECK_THROWS_AS(report_from_csv("not,the,header\n"), std::invalid_argument);
    std::string good = "suite,id,inputs,route_a,route_b,value_a,value_b,"
                       "discrepancy,tolerance,pass\n";
    CHECK_NOTHROW(report_from_csv(good));
    CHECK_THROWS_AS(report_from_csv(good + "s,i,in,a,b,1,2\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        report_from_csv(good + "s,i,in,a,b,oops,2,0,1,true\n"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        report_from_csv(good + "s,i,in,a,b,1,2,0,1,maybe\n"),
        std::invalid_argument);
}

TEST_CASE("pass flag mirrors discrepancy against tolerance") {
    VerificationReport rep;
    CheckRecord r;
    r.discrepancy = 2.0;
    r.tolerance = 1.0;
    r.pass = false;
    rep.records = {r};
    CHECK(rep.failed() == 1);
    CHECK(rep.passed() == 0);
    CHECK_FALSE(rep.all_passed());
    rep.records[0].pass = true;
    CHECK(rep.all_passed());
}

TEST_CASE("run_suite validates the suite name") {
    CHECK_THROWS_AS(run_suite("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(run_suite(""), std::invalid_argument);
}

TEST_CASE("specfun suite passes and serializes deterministically") {
    VerificationReport rep = run_suite("specfun");
    CHECK(rep.records.size() > 50);
    for (const auto& r : rep.records) {
        if (!r.pass) {
            CAPTURE(r.id);
            CAPTURE(r.inputs);
            CAPTURE(r.discrepancy);
            CHECK(r.pass);
        }
    }
    VerificationReport rep2 = run_suite("specfun");
    CHECK(report_to_csv(rep) == report_to_csv(rep2));
}

TEST_CASE("quadrature suite passes") {
    VerificationReport rep = run_suite("quadrature");
    CHECK(rep.all_passed());
}
