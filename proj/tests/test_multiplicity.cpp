#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "doctest.h"
#include "limideal/multiplicity.hpp"
#include "limideal/parse.hpp"
#include "oracle.hpp"

using namespace limideal;

static QIdeal mk(int n, const std::vector<std::string>& gens) {
    std::vector<QPoly> ps;
    for (auto& s : gens) ps.push_back(parse_qpoly(s, n));
    return QIdeal(n, ps);
}

static const EpsPoly E = EpsPoly::eps();
static const EpsPoly Z = EpsPoly(Rational(0));

TEST_CASE("length tables of powers") {
    auto t = samuel_table(mk(2, {"z1", "z2"}), 4);
    CHECK(t.entries == std::vector<std::pair<int, long>>{{1, 1}, {2, 3}, {3, 6}, {4, 10}});
    auto t2 = samuel_table(mk(2, {"z1^2", "z1*z2", "z2^2"}), 4);
    CHECK(t2.entries == std::vector<std::pair<int, long>>{{1, 3}, {2, 10}, {3, 21}, {4, 36}});
    // supported at three points: lengths triple the one-point counts
    std::vector<std::vector<Rational>> pts = {{Rational(0), Rational(0)},
                                              {Rational(1), Rational(0)},
                                              {Rational(0), Rational(1)}};
    auto t3 = samuel_table(intersect_point_ideals(pts), 4);
    CHECK(t3.entries == std::vector<std::pair<int, long>>{{1, 3}, {2, 9}, {3, 18}, {4, 30}});
    CHECK_THROWS_AS(samuel_table(mk(2, {"z1", "z2"}), 3), user_error);
}

TEST_CASE("monomial power lengths take the fast path and stay exact") {
    QIdeal I = mk(2, {"z1^3", "z1*z2", "z2^2"});
    auto t = samuel_table(I, 5);
    for (int k = 1; k <= 5; ++k) {
        CHECK(t.entries[k - 1].second == I.power(k).colength());
        std::vector<ExpVec> exps;
        for (auto& m : I.power(k).minimal_monomial_generators()) exps.push_back(m);
        CHECK(t.entries[k - 1].second == oracle::monomial_colength_brute(exps, 2));
    }
}

TEST_CASE("multiplicity catalogue with independently known values") {
    struct Row {
        QIdeal I;
        long ell, e;
        bool ci;
    };
    std::vector<Row> cat;
    cat.push_back({mk(2, {"z1", "z2"}), 1, 1, true});
    cat.push_back({mk(2, {"z1^2", "z2^2"}), 4, 4, true});
    cat.push_back({mk(2, {"z1^2", "z1*z2", "z2^2"}), 3, 4, false});
    cat.push_back({mk(2, {"z1^4 + z2^4", "z1*z2*(z1+z2)"}), 12, 12, true});
    cat.push_back({mk(2, {"z1^2", "z1*z2", "z2^4"}), 5, 6, false});
    cat.push_back({mk(2, {"z1^2 - z2", "z2^3"}), 6, 6, true});
    cat.push_back({mk(2, {"z1^3", "z2^2"}), 6, 6, true});
    for (auto& row : cat) {
        auto r = hs_multiplicity(row.I);
        CHECK(r.length == row.ell);
        CHECK(r.multiplicity == row.e);
        CHECK(r.complete_intersection == row.ci);
        CHECK(r.multiplicity >= r.length);
        // deterministic under the default seed
        auto r2 = hs_multiplicity(row.I);
        CHECK(r2.multiplicity == r.multiplicity);
        CHECK(r2.method == r.method);
    }
}

TEST_CASE("multiplicity at a fat point away from a reduced one") {
    // origin is not the whole zero set, so sections are skipped and the
    // Samuel differences carry alone
    std::vector<std::vector<Rational>> pts = {{Rational(0), Rational(0)},
                                              {Rational(1), Rational(0)},
                                              {Rational(0), Rational(1)}};
    auto r = hs_multiplicity(intersect_point_ideals(pts));
    CHECK(r.length == 3);
    CHECK(r.multiplicity == 3);
    CHECK(r.method == "finite-differences");
}

TEST_CASE("three variable sections with the difference gate closed") {
    QIdeal I = mk(3, {"z1^2", "z1*z2", "z1*z3", "z2^2", "z2*z3", "z3^2"});
    auto r = hs_multiplicity(I);
    CHECK(r.length == 4);
    CHECK(r.multiplicity == 8);
    CHECK(r.method == "generic-sections");
    CHECK(r.trials_used >= 1);

    MultiplicityPolicy wide;
    wide.fd_work_cap = 100000;
    wide.force_full_trials = true;
    auto rf = hs_multiplicity(I, wide);
    CHECK(rf.method == "cross-checked");
    CHECK(rf.multiplicity == 8);
}

TEST_CASE("structured section certificate on a homogeneous pair") {
    MultiplicityPolicy pol;
    pol.fd_work_cap = 0;
    pol.lower_bound_hint = 12;
    auto r = hs_multiplicity(mk(2, {"z1^2*z2+z1*z2^2", "z2^4", "z1*z2^3", "z1^4"}), pol);
    CHECK(r.multiplicity == 12);
    CHECK(r.method == "generic-sections");
    CHECK(r.certified);
}

TEST_CASE("multiplicity scales like k^n along powers") {
    std::vector<QIdeal> cat = {mk(2, {"z1", "z2"}), mk(2, {"z1^2", "z1*z2", "z2^2"}),
                               mk(2, {"z1^2", "z2^2"}), mk(2, {"z1^3", "z2^2"}),
                               mk(2, {"z1^2", "z1*z2", "z2^4"})};
    MultiplicityPolicy pol;
    pol.exact_trial_gate = 0;  // big powers: keep section trials on the modular lane
    for (auto& I : cat) {
        long e1 = hs_multiplicity(I, pol).multiplicity;
        for (int k = 2; k <= 3; ++k) {
            QIdeal Ik = I.power(k).canonicalized();
            CHECK(hs_multiplicity(Ik, pol).multiplicity == e1 * k * k);
        }
    }
}

TEST_CASE("origin support detection") {
    CHECK(supported_only_at_origin(mk(2, {"z1^2", "z2^3"})));
    CHECK(supported_only_at_origin(mk(2, {"z1^2 - z2", "z2^3"})));
    CHECK(!supported_only_at_origin(mk(2, {"z1*(z1-1)", "z2"})));
    std::vector<std::vector<Rational>> pts = {{Rational(0), Rational(0)},
                                              {Rational(1), Rational(0)}};
    CHECK(!supported_only_at_origin(intersect_point_ideals(pts)));
}

TEST_CASE("tower multiplicities, scaled volume rows, stabilization") {
    PointFamily pf;
    pf.nvars = 2;
    pf.points = {{Z, Z}, {E, Z}, {Z, E}};
    FamilyContext ctx = prepare_family(pf);
    LimitTower tw = limit_tower(ctx, 2);
    auto reps = tower_multiplicities(tw, 3);
    REQUIRE(reps.size() == 2);
    CHECK(reps[0].multiplicity == 4);
    CHECK(reps[1].multiplicity == 12);

    VolumeBounds vb = graded_volume(tw, reps);
    CHECK(std::get<2>(vb.per_p[0]) == Rational(4));
    CHECK(std::get<2>(vb.per_p[1]) == Rational(3));
    CHECK(vb.upper_bound == Rational(3));
    // running minimum never increases
    Rational run = std::get<2>(vb.per_p[0]);
    for (auto& [p, e, scaled] : vb.per_p) {
        run = std::min(run, scaled);
        CHECK(vb.upper_bound <= scaled);
    }
    CHECK(vb.upper_bound == run);
    // factorial-normalized length estimators: 2 * 3 / 1 and 2 * 9 / 4
    CHECK(vb.length_estimator[0].second == Rational(6));
    CHECK(vb.length_estimator[1].second == Rational(9, 2));

    auto p = stabilization_index(tw, 3, reps);
    REQUIRE(p.has_value());
    CHECK(*p == 2);
}

TEST_CASE("an immediately stabilizing pair of points") {
    PointFamily pf;
    pf.nvars = 2;
    pf.points = {{Z, Z}, {E, Z}};
    FamilyContext ctx = prepare_family(pf);
    LimitTower tw = limit_tower(ctx, 2);
    auto reps = tower_multiplicities(tw, 2);
    CHECK(reps[0].length == 2);
    CHECK(reps[0].multiplicity == 2);
    auto p = stabilization_index(tw, 2, reps);
    REQUIRE(p.has_value());
    CHECK(*p == 1);
}

TEST_CASE("stabilization refuses families away from a single point") {
    PointFamily pf;
    pf.nvars = 2;
    pf.points = {{Z, Z}, {EpsPoly(Rational(1)), Z}};
    FamilyContext ctx = prepare_family(pf);
    LimitTower tw = limit_tower(ctx, 1);
    try {
        stabilization_index(tw, 2);
        CHECK(false);
    } catch (const user_error& e) {
        CHECK(e.code == errc::not_single_point);
    }
}

TEST_CASE("unit and non zero dimensional inputs are rejected") {
    CHECK_THROWS_AS(hs_multiplicity(mk(2, {"z1*z2"})), user_error);
    CHECK_THROWS_AS(samuel_table(mk(2, {"1"}), 4), user_error);
}
