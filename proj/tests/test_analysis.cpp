#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "singwell/analysis.hpp"

using namespace singwell;
using namespace singwell::analysis;

namespace {

bool has_parity(const std::vector<Parity>& ps, Parity p) {
    return std::find(ps.begin(), ps.end(), p) != ps.end();
}

}  // namespace

TEST_CASE("potential spec validation and evaluation") {
    CHECK_THROWS_AS(PotentialSpec::inverse_power(0.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(PotentialSpec::inverse_power(2.5, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(PotentialSpec::inverse_power(-1.0, -1.0), std::invalid_argument);

    const auto kratzer = PotentialSpec::kratzer(-10.0, 0.3);
    CHECK(kratzer.beta == 2.0);
    CHECK(kratzer(2.0) == doctest::Approx(-4.925).epsilon(1e-15));

    // the composite collapses to a pure Coulomb potential when g2 vanishes
    const auto coulombic = PotentialSpec::kratzer(-10.0, 0.0);
    CHECK(coulombic.beta == 1.0);
    CHECK(!coulombic.g1.has_value());
    CHECK(coulombic(0.5) == doctest::Approx(-20.0).epsilon(1e-15));
}

TEST_CASE("critical coupling") {
    CHECK(critical_coupling() == -0.125);
    // the Figure-1 parameter -0.124999 sits just above the threshold
    CHECK_NOTHROW(indicial_roots(PotentialSpec::inverse_square(-0.124999)));
    CHECK_THROWS_AS(indicial_roots(PotentialSpec::inverse_square(-0.2)), supercritical_error);
}

TEST_CASE("indicial roots: spec examples") {
    SUBCASE("beta=2, g=1 gives (2, -1), admissible {2}") {
        const auto r = indicial_roots(PotentialSpec::inverse_square(1.0));
        CHECK(r.s_plus == 2.0);  // sqrt(9) = 3 exactly
        CHECK(r.s_minus == -1.0);
        REQUIRE(r.admissible_s.size() == 1);
        CHECK(r.admissible_s[0] == 2.0);
    }
    SUBCASE("beta=1 gives (1, 0), admissible {1}, independent of strength") {
        const auto r = indicial_roots(PotentialSpec::coulomb(-10.0));
        CHECK(r.s_plus == 1.0);
        CHECK(r.s_minus == 0.0);
        REQUIRE(r.admissible_s.size() == 1);
        CHECK(r.admissible_s[0] == 1.0);
    }
    SUBCASE("beta<1 keeps both branches") {
        const auto r = indicial_roots(PotentialSpec::inverse_power(0.5, -3.0));
        REQUIRE(r.admissible_s.size() == 2);
        CHECK(r.admissible_s[0] == 0.0);
        CHECK(r.admissible_s[1] == 1.0);
    }
    SUBCASE("double root at the critical coupling is supercritical") {
        CHECK_THROWS_AS(indicial_roots(PotentialSpec::inverse_square(-0.125)),
                        supercritical_error);
        try {
            indicial_roots(PotentialSpec::inverse_square(-0.2));
        } catch (const supercritical_error& e) {
            CHECK(e.coupling() == -0.2);
        }
    }
}

TEST_CASE("indicial root identity s(s-1) = 2g and admissibility threshold") {
    std::vector<double> gs = {-0.1249999, -0.124, -0.1, -0.01, 0.0,
                              0.01,       0.3,    1.0,  4.0,   10.0};
    double prev_s = 0.0;
    for (double g : gs) {
        CAPTURE(g);
        const auto r = indicial_roots(PotentialSpec::inverse_square(g));
        const double s = r.s_plus;
        CHECK(std::abs(s * (s - 1.0) - 2.0 * g) <= 1e-12 * std::max(1.0, std::abs(2.0 * g)));
        CHECK(s > 0.5);          // Hermiticity keeps only s > 1/2
        CHECK(s > prev_s);       // monotone in g
        prev_s = s;
    }
    // s -> 1/2+ as g -> (-1/8)+
    const auto near = indicial_roots(PotentialSpec::inverse_square(-0.125 + 1e-12));
    CHECK(near.s_plus > 0.5);
    CHECK(near.s_plus - 0.5 < 1e-5);
}

TEST_CASE("classification: spec examples") {
    SUBCASE("beta=2, g=0.3") {
        const auto c = classify_boundary(PotentialSpec::inverse_square(0.3));
        CHECK(c.psi_at_origin() == OriginValue::zero);
        CHECK(c.dpsi_at_origin() == OriginDerivative::zero);
        CHECK(has_parity(c.allowed_parities, Parity::even));
        CHECK(has_parity(c.allowed_parities, Parity::odd));
        CHECK(c.degeneracy == Degeneracy::twofold);
    }
    SUBCASE("beta=2, attractive subcritical has an infinite derivative") {
        const auto c = classify_boundary(PotentialSpec::inverse_square(-0.1));
        CHECK(c.psi_at_origin() == OriginValue::zero);
        CHECK(c.dpsi_at_origin() == OriginDerivative::infinite);
        CHECK(c.degeneracy == Degeneracy::twofold);
    }
    SUBCASE("beta=1.5") {
        const auto c = classify_boundary(PotentialSpec::inverse_power(1.5, -2.0));
        CHECK(c.psi_at_origin() == OriginValue::zero);
        CHECK(c.dpsi_at_origin() == OriginDerivative::finite);
        REQUIRE(c.allowed_parities.size() == 1);
        CHECK(c.allowed_parities[0] == Parity::odd);
        CHECK(c.degeneracy == Degeneracy::nondegenerate);
    }
    SUBCASE("beta=1 belongs to the 1<=beta<2 row") {
        const auto c = classify_boundary(PotentialSpec::coulomb(-10.0));
        REQUIRE(c.allowed_parities.size() == 1);
        CHECK(c.allowed_parities[0] == Parity::odd);
        CHECK(c.degeneracy == Degeneracy::nondegenerate);
    }
    SUBCASE("beta=0.5 carries both branches") {
        const auto c = classify_boundary(PotentialSpec::inverse_power(0.5, -1.0));
        REQUIRE(c.branches.size() == 2);
        CHECK(c.branches[0].s == 0.0);
        CHECK(c.branches[0].psi_at_origin == OriginValue::finite);
        CHECK(c.branches[0].dpsi_at_origin == OriginDerivative::zero);
        REQUIRE(c.branches[0].parities.size() == 1);
        CHECK(c.branches[0].parities[0] == Parity::even);
        CHECK(c.branches[1].s == 1.0);
        CHECK(c.branches[1].psi_at_origin == OriginValue::zero);
        CHECK(c.branches[1].dpsi_at_origin == OriginDerivative::finite);
        REQUIRE(c.branches[1].parities.size() == 1);
        CHECK(c.branches[1].parities[0] == Parity::odd);
        CHECK(c.degeneracy == Degeneracy::nondegenerate);
    }
    SUBCASE("supercritical classification is refused") {
        CHECK_THROWS_AS(classify_boundary(PotentialSpec::inverse_square(-0.2)),
                        supercritical_error);
    }
}

TEST_CASE("classification sweep reproduces both tables exactly once") {
    using Row = std::tuple<OriginValue, OriginDerivative, double>;  // + s to key the row

    // the five origin-behavior rows
    std::multiset<Row> table1;
    auto collect = [&](const PotentialSpec& spec) {
        for (const auto& b : classify_boundary(spec).branches)
            table1.insert({b.psi_at_origin, b.dpsi_at_origin, b.s});
    };
    collect(PotentialSpec::inverse_square(0.3));   // beta=2, g>0
    collect(PotentialSpec::inverse_square(-0.1));  // beta=2, g<0
    collect(PotentialSpec::inverse_power(1.5, -1.0));
    collect(PotentialSpec::inverse_power(0.5, -1.0));  // contributes two rows

    CHECK(table1.size() == 5);
    const double s_pos = 0.5 * (1.0 + std::sqrt(1.0 + 8.0 * 0.3));
    const double s_neg = 0.5 * (1.0 + std::sqrt(1.0 + 8.0 * -0.1));
    CHECK(table1.count({OriginValue::zero, OriginDerivative::zero, s_pos}) == 1);
    CHECK(table1.count({OriginValue::zero, OriginDerivative::infinite, s_neg}) == 1);
    CHECK(table1.count({OriginValue::zero, OriginDerivative::finite, 1.0}) == 2);  // rows 3 and 5
    CHECK(table1.count({OriginValue::finite, OriginDerivative::zero, 0.0}) == 1);

    // the four parity-extension rows
    std::vector<std::vector<Parity>> table2;
    table2.push_back(classify_boundary(PotentialSpec::inverse_square(0.3)).allowed_parities);
    table2.push_back(classify_boundary(PotentialSpec::inverse_power(1.5, -1.0)).allowed_parities);
    const auto below = classify_boundary(PotentialSpec::inverse_power(0.5, -1.0));
    table2.push_back(below.branches[0].parities);
    table2.push_back(below.branches[1].parities);

    CHECK(table2[0] == std::vector<Parity>{Parity::even, Parity::odd});
    CHECK(table2[1] == std::vector<Parity>{Parity::odd});
    CHECK(table2[2] == std::vector<Parity>{Parity::even});
    CHECK(table2[3] == std::vector<Parity>{Parity::odd});

    // degeneracy is twofold exactly when beta = 2
    for (double beta : {2.0}) {
        CHECK(classify_boundary(PotentialSpec::inverse_power(beta, 0.05)).degeneracy ==
              Degeneracy::twofold);
    }
    for (double beta : {1.99, 1.5, 1.0, 0.5, 0.1}) {
        CAPTURE(beta);
        CHECK(classify_boundary(PotentialSpec::inverse_power(beta, -1.0)).degeneracy ==
              Degeneracy::nondegenerate);
    }
}

TEST_CASE("full-line extension") {
    const int n = 101;
    std::vector<double> zeta(n), decaying(n), node_at_zero(n);
    for (int i = 0; i < n; ++i) {
        zeta[i] = 5.0 * i / (n - 1);
        node_at_zero[i] = zeta[i] * std::exp(-zeta[i]);
        decaying[i] = std::exp(-zeta[i]);
    }

    SUBCASE("odd mirror of zeta e^-zeta") {
        const auto cls = classify_boundary(PotentialSpec::coulomb(-1.0));
        const auto full = extend_to_full_line(zeta, node_at_zero, Parity::odd, cls);
        REQUIRE(full.zeta.size() == 2 * n - 1);
        CHECK(full.value[n - 1] == 0.0);
        for (int i = 0; i < n - 1; ++i) {
            CHECK(full.zeta[i] == -full.zeta[2 * n - 2 - i]);
            CHECK(full.value[i] == -full.value[2 * n - 2 - i]);
        }
    }
    SUBCASE("odd extension of psi(0) != 0 is a forbidden jump") {
        const auto cls = classify_boundary(PotentialSpec::coulomb(-1.0));
        CHECK_THROWS_AS(extend_to_full_line(zeta, decaying, Parity::odd, cls), parity_error);
    }
    SUBCASE("even extension accepted for the beta<1 s=0 branch") {
        const auto cls = classify_boundary(PotentialSpec::inverse_power(0.5, -1.0));
        const auto full = extend_to_full_line(zeta, decaying, Parity::even, cls);
        for (int i = 0; i < n - 1; ++i) CHECK(full.value[i] == full.value[2 * n - 2 - i]);
    }
    SUBCASE("even extension refused for 1 <= beta < 2") {
        const auto cls = classify_boundary(PotentialSpec::inverse_power(1.5, -1.0));
        CHECK_THROWS_AS(extend_to_full_line(zeta, node_at_zero, Parity::even, cls),
                        parity_error);
    }
    SUBCASE("samples must start at the origin") {
        const auto cls = classify_boundary(PotentialSpec::coulomb(-1.0));
        std::vector<double> shifted(zeta.begin() + 1, zeta.end());
        std::vector<double> vals(node_at_zero.begin() + 1, node_at_zero.end());
        CHECK_THROWS_AS(extend_to_full_line(shifted, vals, Parity::odd, cls), grid_error);
    }
}

TEST_CASE("3D effective coupling") {
    CHECK(effective_coupling_3d(0.3, 0) == 0.3);
    CHECK(effective_coupling_3d(0.0, 1) == 1.0);
    CHECK(effective_coupling_3d(-0.1, 2) == doctest::Approx(2.9).epsilon(1e-15));
    CHECK_THROWS_AS(effective_coupling_3d(0.0, -1), std::invalid_argument);
}
