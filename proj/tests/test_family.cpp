#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "doctest.h"
#include "limideal/family.hpp"
#include "limideal/parse.hpp"
#include "oracle.hpp"

using namespace limideal;

static PointFamily pts2(std::initializer_list<std::pair<EpsPoly, EpsPoly>> rows) {
    PointFamily pf;
    pf.nvars = 2;
    for (auto& [a, b] : rows) pf.points.push_back({a, b});
    return pf;
}

static QIdeal mk(int n, const std::vector<std::string>& gens) {
    std::vector<QPoly> ps;
    for (auto& s : gens) ps.push_back(parse_qpoly(s, n));
    return QIdeal(n, ps);
}

static const EpsPoly E = EpsPoly::eps();
static const EpsPoly Z = EpsPoly(Rational(0));

TEST_CASE("three generic points: limits, lengths, strictness") {
    FamilyContext ctx = prepare_family(pts2({{Z, Z}, {E, Z}, {Z, E}}));
    CHECK(ctx.collides_at_origin);
    CHECK(ctx.from_points);
    CHECK(ctx.point_count == 3);
    CHECK(ctx.dilation.has_value());

    LimitTower tw = limit_tower(ctx, 3);
    check_tower_invariants(tw);
    CHECK(tw.generic_lengths == std::vector<long>{3, 9, 18});
    CHECK(tw.limits[0].canonicalized() == mk(2, {"z1^2", "z1*z2", "z2^2"}).canonicalized());
    QIdeal want2 = mk(2, {"z1^4", "z1^3*z2", "z1^2*z2^2", "z1*z2^3", "z2^4",
                          "z1^2*z2 + z1*z2^2"});
    CHECK(tw.limits[1].canonicalized() == want2.canonicalized());

    // the limit of the square strictly exceeds the square of the limit
    QPoly cubic = parse_qpoly("z1^2*z2 + z1*z2^2", 2);
    QIdeal sq = tw.limits[0].power(2);
    CHECK(tw.limits[1].contains(cubic));
    CHECK(!sq.contains(cubic));
    CHECK(tw.limits[1].contains_ideal(sq));

    // limit lengths match the Macaulay oracle
    CHECK(oracle::macaulay_colength(tw.limits[0].groebner(), 2, 8) == 3);
    CHECK(oracle::macaulay_colength(tw.limits[1].groebner(), 2, 12) == 9);
}

TEST_CASE("general saturation route agrees with the dilation route") {
    FamilyContext ctx = prepare_family(pts2({{Z, Z}, {E, Z}, {Z, E}}));
    REQUIRE(ctx.dilation.has_value());
    LimitTower fast = limit_tower(ctx, 2);
    FamilyContext general = ctx;
    general.dilation.reset();
    LimitTower slow = limit_tower(general, 2);
    for (int p = 0; p < 2; ++p) {
        CHECK(fast.limits[p].canonicalized() == slow.limits[p].canonicalized());
        CHECK(fast.generic_lengths[p] == slow.generic_lengths[p]);
    }
}

TEST_CASE("limits ignore parameter rescaling of the generators") {
    FamilyContext ctx = prepare_family(pts2({{Z, Z}, {E, Z}, {Z, E}}));
    IdealFamily scaled = ctx.ideal_family;
    MonomialOrder ord = scaled.generators[0].order();
    scaled.generators[0] =
        scaled.generators[0] * EPoly::monomial(ord, ExpVec(2), EpsPoly::eps(2));
    scaled.generators.back() =
        scaled.generators.back() * EPoly::monomial(ord, ExpVec(2), EpsPoly(Rational(7)));
    CHECK(flat_limit(scaled) == flat_limit(ctx.ideal_family));
}

TEST_CASE("a moving base point is recorded and does not change the limits") {
    PointFamily gen3 = pts2({{Z, Z}, {E, Z}, {Z, E}});
    PointFamily shifted;
    shifted.nvars = 2;
    for (auto& row : gen3.points)
        shifted.points.push_back({row[0] + EpsPoly(Rational(1)), row[1] + EpsPoly(Rational(-2))});
    FamilyContext a = prepare_family(gen3), b = prepare_family(shifted);
    CHECK(b.collides_at_origin);
    CHECK(b.base_translation == std::vector<Rational>{Rational(1), Rational(-2)});
    CHECK(power_limit(a, 1) == power_limit(b, 1));
    CHECK(power_limit(a, 2) == power_limit(b, 2));
}

TEST_CASE("families that do not merge keep their point count in the limit") {
    FamilyContext ctx = prepare_family(pts2({{Z, Z}, {EpsPoly(Rational(1)) + E, Z}}));
    CHECK(!ctx.collides_at_origin);
    CHECK(!ctx.dilation.has_value());
    QIdeal I = power_limit(ctx, 1);
    CHECK(I.colength() == 2);
    // both limit positions are zeros of the limit ideal
    CHECK(I.contains(parse_qpoly("z2", 2)));
    CHECK(I.contains(parse_qpoly("z1^2 - z1", 2)));
}

TEST_CASE("duplicate points are rejected") {
    CHECK_THROWS_AS(prepare_family(pts2({{Z, Z}, {Z, Z}, {E, Z}})), user_error);
    try {
        prepare_family(pts2({{E, Z}, {E, Z}}));
    } catch (const user_error& e) {
        CHECK(e.code == errc::duplicate_points);
    }
}

TEST_CASE("unequal collision speeds leave the dilation route") {
    // (0,0), (e^2,0), (0,e) approaches the origin at two different rates
    FamilyContext ctx = prepare_family(pts2({{Z, Z}, {EpsPoly::eps(2), Z}, {Z, E}}));
    CHECK(ctx.collides_at_origin);
    CHECK(!ctx.dilation.has_value());
    LimitTower tw = limit_tower(ctx, 2);
    check_tower_invariants(tw);
    CHECK(tw.limits[1].is_monomial());
    CHECK(tw.limits[1].contains(parse_qpoly("z1^2*z2", 2)));
    // the limit of the square is the monomial ideal m^4 + <z1^2 z2>
    QIdeal want = mk(2, {"z1^4", "z1^3*z2", "z1^2*z2^2", "z1*z2^3", "z2^4", "z1^2*z2"});
    CHECK(tw.limits[1].canonicalized() == want.canonicalized());
    CHECK(tw.generic_lengths[1] ==
          oracle::macaulay_colength(tw.limits[1].groebner(), 2, 12));
}

TEST_CASE("curved collision with tangency weights") {
    // (0,0), (e^2,0), (e^2+e^3, e^4+e^5): second order tangency forces the
    // weighted limit <z2^3, z1^2 z2^2, z1^3 z2, z1^4>
    FamilyContext ctx = prepare_family(
        pts2({{Z, Z},
              {EpsPoly::eps(2), Z},
              {EpsPoly::eps(2) + EpsPoly::eps(3), EpsPoly::eps(4) + EpsPoly::eps(5)}}));
    CHECK(ctx.collides_at_origin);
    LimitTower tw = limit_tower(ctx, 2);
    check_tower_invariants(tw);
    CHECK(tw.limits[1].contains(parse_qpoly("z2^3", 2)));
    QIdeal want = mk(2, {"z2^3", "z1^2*z2^2", "z1^3*z2", "z1^4"});
    CHECK(tw.limits[1].canonicalized() == want.canonicalized());
}

TEST_CASE("limit towers exist for generator families") {
    IdealFamily fam;
    fam.nvars = 2;
    fam.generators = {parse_poly("z1^2 - e*z2", 2), parse_poly("z2^2", 2)};
    FamilyContext ctx = prepare_family(fam);
    CHECK(!ctx.from_points);
    LimitTower tw = limit_tower(ctx, 2);
    check_tower_invariants(tw);
    CHECK(tw.limits[0].canonicalized() == mk(2, {"z1^2", "z2^2"}).canonicalized());
    CHECK(tw.generic_lengths[0] == 4);
}

TEST_CASE("membership queries against single limits") {
    FamilyContext ctx = prepare_family(pts2({{Z, Z}, {E, Z}, {Z, E}}));
    CHECK(membership_in_limit(parse_qpoly("z1^2*z2 + z1*z2^2", 2), ctx, 2));
    CHECK(!membership_in_limit(parse_qpoly("z1*z2", 2), ctx, 2));
    CHECK(membership_in_limit(parse_qpoly("z1*z2", 2), ctx, 1));
    CHECK(!membership_in_limit(parse_qpoly("z1", 2), ctx, 1));
    CHECK_THROWS_AS(membership_in_limit(parse_qpoly("z1", 2), ctx, 0), user_error);
}

TEST_CASE("four points in a square collapse to a complete intersection") {
    FamilyContext ctx =
        prepare_family(pts2({{Z, Z}, {E, Z}, {Z, E}, {E, E}}));
    CHECK(ctx.point_count == 4);
    QIdeal I = power_limit(ctx, 1);
    CHECK(I.canonicalized() == mk(2, {"z1^2", "z2^2"}).canonicalized());
    CHECK(I.colength() == 4);
}

TEST_CASE("simplex points in three variables") {
    PointFamily pf;
    pf.nvars = 3;
    pf.points = {{Z, Z, Z}, {E, Z, Z}, {Z, E, Z}, {Z, Z, E}};
    FamilyContext ctx = prepare_family(pf);
    CHECK(ctx.dilation.has_value());
    LimitTower tw = limit_tower(ctx, 3);
    check_tower_invariants(tw);
    // N * C(p+2, 3) section counts
    CHECK(tw.generic_lengths == std::vector<long>{4, 16, 40});
    CHECK(tw.limits[2].contains(parse_qpoly("(z1+z2+z3)*z1*z2*z3", 3)));
    CHECK(!tw.limits[2].contains(parse_qpoly("z1*z2*z3", 3)));
}
