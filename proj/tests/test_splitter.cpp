#include <doctest.h>

#include <random>

#include "fracsplit/errors.hpp"
#include "fracsplit/sdomain.hpp"
#include "fracsplit/splitter.hpp"
#include "helpers.hpp"

using namespace fracsplit;
using namespace fracsplit::splitter;
using testutil::Q;

namespace {

MultiTermFDE fde_2_24(const char* alpha, const char* beta) {
    MultiTermFDE fde;
    fde.coeffs = {Q("1"), Q("1"), Q("1")};  // a_2 x + a_1 D^beta x + D^alpha x
    fde.orders = {Q(beta), Q(alpha)};
    fde.ics = {Q("1"), Q("2")};
    return fde;
}

}  // namespace

TEST_CASE("proper two-term split matches the known three-equation system") {
    const MultiTermFDE fde = fde_2_24("3/2", "1/2");
    const SplitSystem sys = build_split_2m1(fde);
    REQUIRE(sys.equations.size() == 3);
    CHECK(sys.equations[0].order == Q("1/2"));
    CHECK(sys.equations[1].order == Q("1/2"));
    CHECK(sys.equations[2].order == Q("1/2"));
    // closing equation: -a_2 x - a_1 y_1 over a_m = 1
    REQUIRE(sys.equations[2].rhs.size() == 2);
    CHECK(sys.equations[2].rhs[0] == std::pair{Q("-1"), std::size_t{0}});
    CHECK(sys.equations[2].rhs[1] == std::pair{Q("-1"), std::size_t{1}});
    CHECK(sys.init[0] == std::vector{Q("1")});
    CHECK(sys.init[1] == std::vector{Q("0")});
    CHECK(sys.init[2] == std::vector{Q("2")});
}

TEST_CASE("link orders and initial data follow the construction rules") {
    MultiTermFDE fde;
    fde.coeffs = {Q("1"), Q("1"), Q("1")};
    fde.orders = {Q("1/2"), Q("3/2")};
    fde.ics = {Q("1"), Q("2")};
    const SplitSystem sys = build_split_2m1(fde);
    CHECK(sys.equations[0].order == Q("1/2"));
    CHECK(sys.equations[1].order == Q("1/2"));
    CHECK(sys.equations[2].order == Q("1/2"));
    CHECK(sys.init[1][0] == 0);
    CHECK(sys.init[2][0] == Q("2"));
}

TEST_CASE("m = 1 splits through an interior point") {
    MultiTermFDE fde;
    fde.coeffs = {Q("1"), Q("1")};
    fde.orders = {Q("1/2")};
    fde.ics = {Q("1")};
    const SplitSystem sys = build_split_2m1(fde);  // default cut alpha/2
    REQUIRE(sys.equations.size() == 2);
    CHECK(sys.equations[0].order == Q("1/4"));
    CHECK(sys.equations[1].order == Q("1/4"));
    CHECK(sys.init[1] == std::vector{Q("0")});
    CHECK(srational_equal(sdomain::split_laplace(sys), sdomain::fde_laplace(fde)));

    const SplitSystem pick = build_split_2m1(fde, Q("1/5"));
    CHECK(pick.equations[0].order == Q("1/5"));
    CHECK(pick.equations[1].order == Q("3/10"));
    CHECK_THROWS_AS(build_split_2m1(fde, Q("1/2")), DegenerateOrder);
    CHECK_THROWS_AS(build_split_2m1(fde, Q("0")), DegenerateOrder);
}

TEST_CASE("telescoping partial sums recover the original orders") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 50; ++rep) {
        std::uniform_int_distribution<std::size_t> mdist(2, 4);
        const std::size_t m = mdist(rng);
        const MultiTermFDE fde = testutil::rand_fde_2m1(rng, m);
        const SplitSystem sys = build_split_2m1(fde);
        REQUIRE(sys.equations.size() == 2 * m - 1);
        Rational partial = 0;
        std::size_t k = 0;
        for (std::size_t j = 0; j < sys.equations.size(); ++j) {
            const Rational& b = sys.equations[j].order;
            CHECK(b > 0);
            CHECK(b <= 1);
            partial += b;
            if (j % 2 == 0) {  // through beta_{2k-2}: equals alpha_k
                CHECK(partial == fde.orders[k]);
                ++k;
            }
        }
        CHECK(partial == fde.orders.back());
    }
}

TEST_CASE("cell and degeneracy guards") {
    MultiTermFDE outside;
    outside.coeffs = {Q("1"), Q("1"), Q("1")};
    outside.orders = {Q("1/2"), Q("5/2")};
    outside.ics = {Q("1"), Q("2"), Q("3")};
    CHECK_THROWS_AS(build_split_2m1(outside), OrderCellViolation);

    MultiTermFDE degenerate;
    degenerate.coeffs = {Q("1"), Q("1"), Q("1"), Q("1")};
    degenerate.orders = {Q("1/2"), Q("2"), Q("5/2")};
    degenerate.ics = {Q("1"), Q("2"), Q("3")};
    CHECK_THROWS_AS(build_split_2m1(degenerate), DegenerateOrder);

    // alpha_m = m is fine: no odd link follows the last order
    MultiTermFDE boundary;
    boundary.coeffs = {Q("1"), Q("1"), Q("1")};
    boundary.orders = {Q("1/2"), Q("2")};
    boundary.ics = {Q("1"), Q("2")};
    const SplitSystem sys = build_split_2m1(boundary);
    CHECK(sys.equations[2].order == 1);
    CHECK(srational_equal(sdomain::split_laplace(sys), sdomain::fde_laplace(boundary)));
}

TEST_CASE("same-cell chain split") {
    MultiTermFDE fde;
    fde.coeffs = {Q("1"), Q("1"), Q("1")};
    fde.orders = {Q("1/3"), Q("2/3")};
    fde.ics = {Q("1")};
    const SplitSystem sys = build_split_chain(fde);
    REQUIRE(sys.equations.size() == 2);
    CHECK(sys.equations[0].order == Q("1/3"));
    CHECK(sys.equations[1].order == Q("1/3"));
    REQUIRE(sys.equations[1].rhs.size() == 2);
    CHECK(sys.equations[1].rhs[0] == std::pair{Q("-1"), std::size_t{0}});
    CHECK(sys.equations[1].rhs[1] == std::pair{Q("-1"), std::size_t{1}});
    CHECK(sys.init[1] == std::vector{Q("0")});
    CHECK(srational_equal(sdomain::split_laplace(sys), sdomain::fde_laplace(fde)));

    // higher cell: the head keeps both initial values
    MultiTermFDE high;
    high.coeffs = {Q("1"), Q("1"), Q("1")};
    high.orders = {Q("5/4"), Q("3/2")};
    high.ics = {Q("1"), Q("2")};
    const SplitSystem head = build_split_chain(high);
    CHECK(head.equations[0].order == Q("5/4"));
    CHECK(head.equations[1].order == Q("1/4"));
    CHECK(head.init[0] == std::vector{Q("1"), Q("2")});
    CHECK(srational_equal(sdomain::split_laplace(head), sdomain::fde_laplace(high)));

    // m = 1 collapses to the unsplit equation
    MultiTermFDE single;
    single.coeffs = {Q("2"), Q("3")};
    single.orders = {Q("3/4")};
    single.ics = {Q("1")};
    const SplitSystem unsplit = build_split_chain(single);
    REQUIRE(unsplit.equations.size() == 1);
    CHECK(unsplit.equations[0].order == Q("3/4"));
    CHECK(srational_equal(sdomain::split_laplace(unsplit), sdomain::fde_laplace(single)));

    MultiTermFDE spread;
    spread.coeffs = {Q("1"), Q("1"), Q("1")};
    spread.orders = {Q("1/2"), Q("3/2")};
    spread.ics = {Q("1"), Q("2")};
    CHECK_THROWS_AS(build_split_chain(spread), CellViolation);
}

TEST_CASE("chain split transform equality on random same-cell equations") {
    std::mt19937_64 rng(61);
    for (int rep = 0; rep < 50; ++rep) {
        std::uniform_int_distribution<std::size_t> mdist(1, 4);
        const MultiTermFDE fde = testutil::rand_fde_same_cell(rng, mdist(rng), rep % 2);
        const SplitSystem sys = build_split_chain(fde);
        for (std::size_t j = 1; j < sys.init.size(); ++j) CHECK(sys.init[j] == std::vector{Q("0")});
        CHECK(srational_equal(sdomain::fde_laplace(fde), sdomain::split_laplace(sys)));
    }
}

TEST_CASE("naive pair covers the three order-gap cases") {
    // 1 < alpha - beta < 2: the second link carries two zero initial values
    const SplitSystem wide = build_naive_split(fde_2_24("9/5", "3/10"), NaiveVariant::two_term_pair);
    CHECK(wide.equations[1].order == Q("3/2"));
    CHECK(wide.init[1] == std::vector{Q("0"), Q("0")});

    const SplitSystem mid = build_naive_split(fde_2_24("6/5", "7/10"), NaiveVariant::two_term_pair);
    CHECK(mid.equations[1].order == Q("1/2"));
    CHECK(mid.init[1] == std::vector{Q("0")});

    const SplitSystem one = build_naive_split(fde_2_24("3/2", "1/2"), NaiveVariant::two_term_pair);
    CHECK(one.equations[1].order == 1);

    MultiTermFDE three;
    three.coeffs = {Q("1"), Q("1"), Q("1"), Q("1")};
    three.orders = {Q("1/2"), Q("3/2"), Q("5/2")};
    three.ics = {Q("1"), Q("1"), Q("1")};
    CHECK_THROWS_AS(build_naive_split(three, NaiveVariant::two_term_pair), MalformedFDE);

    // the merged cut agrees with the pair at m = 2
    const SplitSystem cut = build_naive_split(fde_2_24("3/2", "1/2"), NaiveVariant::cut_2m2);
    CHECK(cut.equations.size() == one.equations.size());
    for (std::size_t j = 0; j < cut.equations.size(); ++j) {
        CHECK(cut.equations[j].order == one.equations[j].order);
        CHECK(cut.equations[j].rhs == one.equations[j].rhs);
    }
}

TEST_CASE("refinement keeps the transform and rejects bad cuts") {
    const MultiTermFDE fde = fde_2_24("3/2", "1/2");
    const SplitSystem sys = build_split_2m1(fde);
    const sdomain::SRational before = sdomain::split_laplace(sys);

    const SplitSystem finer = refine_split(sys, 0, Q("1/4"));
    REQUIRE(finer.equations.size() == 4);
    CHECK(finer.equations[0].order == Q("1/4"));
    CHECK(finer.equations[1].order == Q("1/4"));
    CHECK(finer.init[1] == std::vector{Q("0")});
    CHECK(srational_equal(sdomain::split_laplace(finer), before));

    // cutting the closing equation also works
    const SplitSystem tail = refine_split(sys, 2, Q("1/3"));
    CHECK(srational_equal(sdomain::split_laplace(tail), before));

    CHECK_THROWS_AS(refine_split(sys, 0, Q("1/2")), InvalidRefinement);
    CHECK_THROWS_AS(refine_split(sys, 0, Q("0")), InvalidRefinement);
    CHECK_THROWS_AS(refine_split(sys, 9, Q("1/4")), InvalidRefinement);

    MultiTermFDE high;
    high.coeffs = {Q("1"), Q("1"), Q("1")};
    high.orders = {Q("5/4"), Q("3/2")};
    high.ics = {Q("1"), Q("2")};
    const SplitSystem head = build_split_chain(high);
    CHECK_THROWS_AS(refine_split(head, 0, Q("1/2")), InvalidRefinement);

    std::mt19937_64 rng(53);
    for (int rep = 0; rep < 10; ++rep) {
        std::uniform_int_distribution<std::size_t> mdist(1, 4);
        const MultiTermFDE f = testutil::rand_fde_2m1(rng, mdist(rng));
        const SplitSystem s = build_split_2m1(f);
        std::uniform_int_distribution<std::size_t> pick(0, s.equations.size() - 1);
        const std::size_t idx = pick(rng);
        const Rational gamma = s.equations[idx].order * testutil::rand_fraction(rng);
        if (gamma == 0 || gamma == s.equations[idx].order) continue;
        CHECK(srational_equal(sdomain::split_laplace(refine_split(s, idx, gamma)),
                              sdomain::split_laplace(s)));
    }
}
