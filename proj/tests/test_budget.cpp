#include <doctest.h>

#include "spsim/budget.hpp"

using namespace spsim;

TEST_CASE("budget identities at the four published operating points") {
    struct Point {
        double cr_raw, eta, g2, rep, cr_end, eta_end;
    };
    const Point pts[] = {
        {6.50, 0.768, 0.076, 152.0, 8.14, 0.0536},
        {7.36, 0.768, 0.069, 152.0, 9.25, 0.0609},
        {0.58, 0.768, 0.026, 152.0, 0.75, 0.0049},
        {1.12, 0.768, 0.014, 152.0, 1.45, 0.0095},
    };
    for (const auto& p : pts) {
        EfficiencyBudget b = efficiency_budget(p.cr_raw, p.eta, p.g2, p.rep);
        CHECK(b.cr_end_mhz == doctest::Approx(p.cr_end).epsilon(0.01));
        CHECK(b.eta_end == doctest::Approx(p.eta_end).epsilon(0.01));
        // internal identity
        CHECK(b.eta_end == doctest::Approx(b.cr_end_mhz / p.rep).epsilon(1e-12));
    }
}

TEST_CASE("budget input validation") {
    CHECK_THROWS_AS(efficiency_budget(-1.0, 0.768, 0.05, 152.0), std::domain_error);
    CHECK_THROWS_AS(efficiency_budget(1.0, 0.0, 0.05, 152.0), std::domain_error);
    CHECK_THROWS_AS(efficiency_budget(1.0, 1.2, 0.05, 152.0), std::domain_error);
    CHECK_THROWS_AS(efficiency_budget(1.0, 0.768, 1.0, 152.0), std::domain_error);
    CHECK_THROWS_AS(efficiency_budget(1.0, 0.768, -0.01, 152.0), std::domain_error);
    CHECK_THROWS_AS(efficiency_budget(1.0, 0.768, 0.05, 0.0), std::domain_error);
}
