#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "qperm/verify.hpp"

// Full acceptance suite: runs every criterion at its stated tolerance and
// prints one pass/fail line per criterion.
TEST_CASE("acceptance criteria") {
    qperm::VerifyOptions opts;
    opts.seed = 0;
    opts.jobs = 1;
    const auto results = qperm::run_verification(opts);
    REQUIRE(results.size() == 15);
    for (const auto& r : results) {
        std::puts(qperm::format_criterion(r).c_str());
        CHECK_MESSAGE(r.passed, r.name, ": ", r.detail);
    }
}
