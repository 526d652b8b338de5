#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "fracsplit/errors.hpp"
#include "fracsplit/mlf.hpp"
#include "helpers.hpp"
#include "oracle_values.hpp"

using namespace fracsplit;
using namespace fracsplit::mlf;
using testutil::Q;
using testutil::rel_gap;

TEST_CASE("ml1 basics") {
    CHECK(ml1(Q("1/2"), 0.0) == 1.0);
    CHECK(rel_gap(ml1(Q("1"), 1.0), oracle::kE) < 1e-13);
    CHECK(rel_gap(ml1(Q("2"), 1.0), oracle::kCosh1) < 1e-13);
}

TEST_CASE("ml2 basics") {
    CHECK(rel_gap(ml2(Q("1"), Q("2"), 1.0), oracle::kEm1) < 1e-13);
    CHECK(rel_gap(ml2(Q("1/4"), Q("3/4"), 1.0), oracle::kMl2_1_4_3_4_at_1) < 1e-12);
}

TEST_CASE("ml2 with beta = 1 collapses to ml1") {
    const EvalControl ctrl;
    for (const char* a : {"1/4", "1/2", "3/4", "1", "3/2", "2"}) {
        for (double z = -5.0; z <= 5.0; z += 1.25) {
            const double one = ml1(Q(a), z, ctrl);
            const double two = ml2(Q(a), Q("1"), z, ctrl);
            CHECK(std::abs(one - two) <= 2 * ctrl.rtol * std::abs(one) + 1e-300);
        }
    }
}

TEST_CASE("ml1 at alpha = 1 tracks the exponential") {
    const EvalControl ctrl;
    for (double z = -5.0; z <= 5.0; z += 0.5)
        CHECK(std::abs(ml1(Q("1"), z, ctrl) - std::exp(z)) <= 10 * ctrl.rtol * std::exp(std::abs(z)));
}

TEST_CASE("canned oracle points at 1e-10") {
    for (const auto& p : oracle::kMlPoints) {
        const double v = ml2(Q(p.alpha), Q(p.beta), p.z);
        CHECK_MESSAGE(rel_gap(v, p.value) < 1e-10,
                      "alpha=", p.alpha, " beta=", p.beta, " z=", p.z);
        if (Q(p.beta) == 1) CHECK(rel_gap(ml1(Q(p.alpha), p.z), p.value) < 1e-10);
    }
}

TEST_CASE("multinomial with one slot equals ml2") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> tdist(0.0, 1.2);
    for (int i = 0; i < 20; ++i) {
        MLSpec spec;
        spec.a = {testutil::rand_fraction(rng) * 2};
        spec.b = testutil::rand_fraction(rng) * 2;
        spec.scales = {testutil::rand_nonzero_rational(rng, -2, 2, 8)};
        spec.power_exponents = {testutil::rand_fraction(rng) * 2};
        const double t = tdist(rng);
        const double z = to_double(spec.scales[0]) * std::pow(t, to_double(spec.power_exponents[0]));
        const double via_multi = ml_multi(spec, t);
        const double via_ml2 = ml2(spec.a[0], spec.b, z);
        CHECK(std::abs(via_multi - via_ml2) <=
              2e-12 * std::max(std::abs(via_multi), std::abs(via_ml2)) + 1e-300);
    }
}

TEST_CASE("multinomial trivial values") {
    MLSpec spec;
    spec.a = {Q("1"), Q("3/2")};
    spec.b = 1;
    spec.scales = {Q("-1"), Q("-1")};
    spec.power_exponents = {Q("1"), Q("3/2")};
    CHECK(ml_multi(spec, 0.0) == 1.0);
    // two-slot spec with one zero scale reduces to the other slot
    MLSpec degenerate = spec;
    degenerate.scales = {Q("0"), Q("-1")};
    const double direct = ml2(Q("3/2"), Q("1"), -std::pow(0.5, 1.5));
    CHECK(rel_gap(ml_multi(degenerate, 0.5), direct) < 1e-12);
}

TEST_CASE("prabhakar reduces to ml2 at gamma = 1 and hits the oracle") {
    for (double z : {-2.0, -0.5, 0.5, 2.0})
        CHECK(rel_gap(ml_prabhakar(Q("3/4"), Q("5/4"), Q("1"), z), ml2(Q("3/4"), Q("5/4"), z)) <
              1e-13);
    CHECK(ml_prabhakar(Q("1"), Q("1"), Q("2"), 0.0) == 1.0);
    for (const auto& p : oracle::kPrabhakarPoints)
        CHECK(rel_gap(ml_prabhakar(Q(p.alpha), Q(p.beta), Q(p.gamma), p.z), p.value) < 1e-12);
}

TEST_CASE("shrinking rtol never moves the value away from the oracle") {
    struct Probe {
        const char* alpha;
        const char* beta;
        double z;
        double value;
    };
    // positive arguments: partial sums increase monotonically to the limit
    const Probe probes[] = {
        {"1/2", "1", 1.0, oracle::kMlPoints[3].value},
        {"3/4", "1", 3.0, oracle::kMlPoints[6].value},
        {"1/4", "3/4", 1.0, oracle::kMl2_1_4_3_4_at_1},
    };
    for (const auto& p : probes) {
        double prev = 1e300;
        for (double rtol : {1e-2, 1e-4, 1e-6, 1e-8, 1e-10, 1e-12}) {
            EvalControl ctrl;
            ctrl.rtol = rtol;
            const double dev = std::abs(ml2(Q(p.alpha), Q(p.beta), p.z, ctrl) - p.value);
            CHECK(dev <= prev);
            prev = dev;
        }
    }
}

TEST_CASE("domain guards") {
    CHECK_THROWS_AS(ml1(Q("0"), 1.0), DomainError);
    CHECK_THROWS_AS(ml1(Q("-1/2"), 1.0), DomainError);
    CHECK_THROWS_AS(ml1(Q("1/2"), 51.0), DomainError);
    CHECK_THROWS_AS(ml2(Q("1/2"), Q("0"), 1.0), DomainError);
    CHECK_THROWS_AS(ml_prabhakar(Q("1"), Q("1"), Q("0"), 1.0), DomainError);

    MLSpec bad;
    bad.a = {Q("1"), Q("2")};
    bad.b = 1;
    bad.scales = {Q("1")};
    bad.power_exponents = {Q("1"), Q("2")};
    CHECK_THROWS_AS(ml_multi(bad, 1.0), DomainError);

    MLSpec ok;
    ok.a = {Q("1")};
    ok.b = 1;
    ok.scales = {Q("1")};
    ok.power_exponents = {Q("1")};
    CHECK_THROWS_AS(ml_multi(ok, -1.0), DomainError);
}

TEST_CASE("k_max cap raises NonConvergence") {
    EvalControl tight;
    tight.k_max = 50;
    CHECK_THROWS_AS(ml1(Q("1/4"), 40.0, tight), NonConvergence);
}
