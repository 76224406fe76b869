#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace toric;

namespace {

void expect_findings_well_formed(const AnalysisReport& r)
{
    if (!r.findings.empty()) {
        EXPECT_FALSE(r.x_projective);
        EXPECT_TRUE(r.xt_projective);
    }
    for (const auto& f : r.findings) {
        EXPECT_EQ(f.e_dot_omega, f.kind == Phenomenon::ForbiddenFlip ? -1 : 1);
        EXPECT_TRUE(validate(f.y).ok());
        EXPECT_TRUE(is_projective(f.y).projective);
        EXPECT_TRUE(f.y.is_face(f.y_center));
        // the blow-up of Y along its center is the blow-up of X along C
        EXPECT_TRUE(same_up_to_ray_order(star_subdivision(f.y, f.y_center).result, r.xt));
        if (f.x_prime)
            EXPECT_TRUE(validate(*f.x_prime).ok());
    }
}

Fan trivial_reduction_base()
{
    // blow up the Oda fan at the fixed point <n1, n3, n'3> on the curve <n1, n'3>
    return star_subdivision(get_fan("oda3").fan, {1, 3, 6}).result;
}

} // namespace

TEST(Analyzer, OdaCurvesGiveForbiddenFlips)
{
    const auto entry = get_fan("oda3");
    for (const auto& c : entry.notes.distinguished) {
        const auto r = analyze_pair(entry.fan, c);
        EXPECT_FALSE(r.x_projective);
        EXPECT_TRUE(r.xt_projective);
        EXPECT_EQ(r.exceptional_ray, 7u);
        ASSERT_FALSE(r.findings.empty());
        for (const auto& f : r.findings) {
            EXPECT_EQ(f.kind, Phenomenon::ForbiddenFlip);
            EXPECT_EQ(f.z_normal_degrees, (std::vector<Integer>{-1, -1}));
            EXPECT_TRUE(cone_contains(f.witness_wall.rays, r.exceptional_ray));
        }
        expect_findings_well_formed(r);
    }
}

TEST(Analyzer, XabGivesElementaryTransformations)
{
    const Fan target = get_fan("xab", {0, 0}).fan;
    for (std::int64_t a : {1, -1}) {
        const auto entry = get_fan("xab", {a, 0});
        const auto r = analyze_pair(entry.fan, entry.notes.distinguished.front());
        std::size_t transformations = 0;
        for (const auto& f : r.findings) {
            if (f.kind != Phenomenon::ElementaryTransformation)
                continue;
            ++transformations;
            EXPECT_TRUE(find_lattice_isomorphism(f.y, target));
        }
        EXPECT_GT(transformations, 0u);
        expect_findings_well_formed(r);
    }
}

TEST(Analyzer, PointBlowupOfOdaGivesTrivialReduction)
{
    const Fan x = trivial_reduction_base();
    const Wall c = find_wall(x, {1, 6});
    const auto r = analyze_pair(x, c);
    ASSERT_FALSE(r.findings.empty());
    for (const auto& f : r.findings) {
        EXPECT_EQ(f.kind, Phenomenon::TrivialReduction);
        ASSERT_TRUE(f.x_prime && f.x_prime_point && f.x_prime_curve);
        EXPECT_EQ(*f.x_prime, get_fan("oda3").fan);
        EXPECT_EQ(star_subdivision(*f.x_prime, *f.x_prime_point).result, x);
        EXPECT_EQ(blow_up_curve(*f.x_prime, *f.x_prime_curve).result, f.y);
    }
    expect_findings_well_formed(r);
}

TEST(Analyzer, ProjectiveInputStopsEarly)
{
    const Fan p3 = get_fan("pn", {3}).fan;
    const auto r = analyze_pair(p3, find_wall(p3, {0, 1}));
    EXPECT_TRUE(r.x_projective);
    EXPECT_TRUE(r.findings.empty());
    EXPECT_TRUE(r.unclassified.empty());
}

TEST(Analyzer, NonProjectiveBlowupStopsEarly)
{
    const auto entry = get_fan("oda3");
    for (const auto& w : walls(entry.fan)) {
        const auto r = analyze_pair(entry.fan, w);
        if (!r.xt_projective)
            EXPECT_TRUE(r.findings.empty());
    }
}

TEST(Analyzer, FiberClassExtremality)
{
    const auto oda = get_fan("oda3");
    EXPECT_FALSE(fiber_class_extremal(blow_up_curve(oda.fan, oda.notes.distinguished.front())));
    const Fan p3 = get_fan("pn", {3}).fan;
    EXPECT_TRUE(fiber_class_extremal(blow_up_curve(p3, find_wall(p3, {0, 1}))));
    EXPECT_TRUE(fiber_class_extremal(star_subdivision(p3, {0, 1, 2})));

    BlowupRecord empty = star_subdivision(p3, {0, 1});
    empty.exceptional_walls.clear();
    EXPECT_THROW(fiber_class_extremal(empty), NoFiberWall);
}

TEST(Analyzer, FiberClassExtremalityOnGalleryBlowups)
{
    for (const Fan& x : {get_fan("oda3").fan, get_fan("xab", {1, 0}).fan, get_fan("xab", {0, 1}).fan}) {
        const bool base_projective = is_projective(x).projective;
        for (const auto& w : walls(x)) {
            const auto rec = blow_up_curve(x, w);
            if (is_projective(rec.result).projective)
                EXPECT_EQ(fiber_class_extremal(rec), base_projective);
        }
    }
}

TEST(Analyzer, HypothesisGuarantee)
{
    const Fan p3 = get_fan("pn", {3}).fan;
    const auto fano = hypothesis_guarantee(blow_up_curve(p3, find_wall(p3, {0, 1})));
    EXPECT_TRUE(fano.guaranteed);
    EXPECT_EQ(fano.reason, GuaranteeReason::Fano);

    const auto f2 = star_subdivision(get_fan("hirzebruch", {2}).fan, {0, 1});
    ASSERT_FALSE(is_fano(f2.result));
    const auto enough = hypothesis_guarantee(f2);
    EXPECT_TRUE(enough.guaranteed);
    EXPECT_EQ(enough.reason, GuaranteeReason::EnoughMoriRays);
    EXPECT_GE(enough.mori_extremal_rays, 2u);

    const auto oda = get_fan("oda3");
    const auto none = hypothesis_guarantee(blow_up_curve(oda.fan, oda.notes.distinguished.front()));
    EXPECT_FALSE(none.guaranteed);
    EXPECT_EQ(none.reason, GuaranteeReason::None);
    EXPECT_LT(none.mori_extremal_rays, 4u);
}

TEST(Analyzer, TrichotomyOnGalleryPairs)
{
    std::vector<Fan> bases{get_fan("oda3").fan, trivial_reduction_base()};
    for (std::int64_t a : {-1, 1})
        for (std::int64_t b : {-2, 0, 2})
            bases.push_back(get_fan("xab", {a, b}).fan);
    bases.push_back(get_fan("xab", {2, 0}).fan);
    std::size_t analyzed = 0;
    for (const auto& x : bases) {
        for (const auto& w : walls(x)) {
            const auto r = analyze_pair(x, w);
            expect_findings_well_formed(r);
            if (r.x_projective || !r.xt_projective)
                continue;
            ++analyzed;
            const auto rec = blow_up_curve(x, w);
            if (hypothesis_guarantee(rec).guaranteed)
                EXPECT_FALSE(r.findings.empty());
            // no Mori-extremal curve with E.omega >= 0 lies in E
            const MoriCone mc(r.xt);
            for (std::size_t i = 0; i < mc.walls.size(); ++i)
                if (cone_contains(mc.walls[i].rays, r.exceptional_ray) && is_mori_extremal(mc, mc.walls[i]))
                    EXPECT_LT(mc.relations[i].coeffs[r.exceptional_ray], 0);
            if (x.dim() == 3)
                EXPECT_FALSE(is_fano(r.xt));
        }
    }
    EXPECT_GT(analyzed, 10u);
}

TEST(Analyzer, ReportSerialization)
{
    const auto oda = get_fan("oda3");
    const json j = report_to_json(analyze_pair(oda.fan, oda.notes.distinguished.front()));
    EXPECT_FALSE(j["x_projective"].get<bool>());
    EXPECT_TRUE(j["xt_projective"].get<bool>());
    EXPECT_EQ(j["exceptional_ray"].get<std::size_t>(), 7u);
    ASSERT_FALSE(j["findings"].empty());
    EXPECT_EQ(j["findings"][0]["kind"], "ForbiddenFlip");
    EXPECT_EQ(j["findings"][0]["e_dot_omega"], -1);
    EXPECT_NO_THROW(fan_from_json(j["findings"][0]["y"]));
}
