#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"

using namespace cr;
using namespace crtest;

TEST_CASE("validate accepts the corpus and the basepoints") {
    for (const auto& s : full_corpus()) {
        CAPTURE(s.name);
        CHECK_NOTHROW(validate(s));
    }
}

TEST_CASE("validate rejects a non-real system") {
    auto s = make_spec("BAD", {"Z1"});
    s.rho = {V("Z1") - GQ(2) * Zc("Z1")};
    CHECK_THROWS_WITH_AS(validate(s), doctest::Contains("reality violated"),
                         std::invalid_argument);
}

TEST_CASE("validate rejects a basepoint off the set") {
    auto s = lewy();
    s.basepoint = PointQ{{GQ(1), GQ(1)}};
    CHECK_THROWS_WITH_AS(validate(s), doctest::Contains("basepoint not on set"),
                         std::invalid_argument);
}

TEST_CASE("sharp involution and diagonal") {
    Sampler rng(3);
    for (int t = 0; t < 20; ++t) {
        PointQ a{{rng.gq(50), rng.gq(50)}};
        PointQ b{{rng.gq(50), rng.gq(50)}};
        PointPair pr{a, b};
        CHECK(sharp(sharp(pr)).first.coords == pr.first.coords);
        CHECK(sharp(sharp(pr)).second.coords == pr.second.coords);
        PointPair diag{a, a.conj()};
        auto im = sharp(diag);
        CHECK(im.first.coords == a.coords);
        CHECK(im.second.coords == a.conj().coords);
    }
}

TEST_CASE("rho at a sharp image equals the conjugate of rho (all specs)") {
    // evaluation form of the reality identity behind sharp-invariance
    Sampler rng(19);
    for (const auto& s : full_corpus()) {
        CAPTURE(s.name);
        for (int t = 0; t < 50; ++t) {
            std::map<std::string, GQ> env, sh;
            for (const auto& v : s.zvars) {
                env[v] = rng.gq(30);
                env[ManifoldSpec::zeta_name(v)] = rng.gq(30);
            }
            for (const auto& v : s.zvars) {
                sh[v] = env.at(ManifoldSpec::zeta_name(v)).conj();
                sh[ManifoldSpec::zeta_name(v)] = env.at(v).conj();
            }
            for (const auto& r : s.rho) CHECK(r.eval(sh) == r.eval(env).conj());
        }
    }
}

TEST_CASE("the complexification is sharp-invariant on 50 random points per spec") {
    Sampler rng(17);
    // specs whose complexification solves as an exact polynomial graph
    for (const auto& s : {lewy(), ex223(), ex315(), ex317(), r142(), rline(),
                          degen3(), wgraph()}) {
        CAPTURE(s.name);
        for (int t = 0; t < 50; ++t) {
            auto pt = random_complexification_point(s, *s.basepoint, 12, rng);
            REQUIRE(pt.has_value());
            auto [env, exact] = *pt;
            REQUIRE(exact);
            // rho vanishes at the point itself
            for (const auto& r : s.rho) CHECK(r.eval(env).is_zero());
            // ... and at its sharp image (conj zeta, conj Z)
            std::map<std::string, GQ> sh;
            for (const auto& v : s.zvars) {
                sh[v] = env.at(ManifoldSpec::zeta_name(v)).conj();
                sh[ManifoldSpec::zeta_name(v)] = env.at(v).conj();
            }
            for (const auto& r : s.rho) CHECK(r.eval(sh).is_zero());
        }
    }
}

TEST_CASE("star of complex-analytic sets") {
    auto s = lewy();
    // {Z: z = 0} -> {zeta: z.c = 0}
    auto st = star(s, {V("z")});
    CHECK(st[0] == Zc("z"));
    // {Z: z = i} -> {zeta: z.c = -i}
    auto st2 = star(s, {V("z") - Poly::constant(I())});
    CHECK(st2[0] == Zc("z") + Poly::constant(I()));
    // star of Lewy N1 = {w = 0} is {tau = 0}
    auto st3 = star(s, {V("w")});
    CHECK(st3[0] == Zc("w"));
    // applying star twice returns the original
    std::map<std::string, std::string> back;
    for (const auto& v : s.zvars) back[ManifoldSpec::zeta_name(v)] = v;
    CHECK(st3[0].bar().rename(back) == V("w"));
}

TEST_CASE("classify: generic corpus basepoints") {
    Sampler rng(23);
    for (const auto& s : {lewy(), ex223(), ex224(), ex315(), degen3()}) {
        CAPTURE(s.name);
        auto pc = classify_point(s, *s.basepoint, 2, rng);
        CHECK(pc.on_set);
        CHECK(pc.regular);
        CHECK(pc.cr);
        CHECK(pc.generic);
        CHECK(pc.cr_dim + pc.codim == s.N);
    }
}

TEST_CASE("classify: the 3.5 example manifold") {
    Sampler rng(29);
    auto s = ex35();
    // generic at a point with Z1 != 0 (off the bad set {Z1 = 0})
    PointQ p{{GQ(1), GQ(1), I(), I()}};
    REQUIRE(s.on_set(p));
    auto pc = classify_point(s, p, 2, rng);
    CHECK(pc.regular);
    CHECK(pc.generic);
    CHECK(pc.cr);
    CHECK(pc.cr_dim == 1);
    // at the origin M is regular but neither generic nor CR
    auto pc0 = classify_point(s, origin(4), 2, rng);
    CHECK(pc0.regular);
    CHECK_FALSE(pc0.generic);
    CHECK_FALSE(pc0.cr);
}

TEST_CASE("classify: remark-1.4.2 manifold is CR away from Z1=Z3=0") {
    Sampler rng(31);
    auto s = r142();
    auto pc = classify_point(s, *s.basepoint, 2, rng);
    CHECK(pc.regular);
    CHECK(pc.cr);
    CHECK(pc.generic);
    CHECK(pc.cr_dim == 1);
}

TEST_CASE("classify: generic implies cr on every corpus basepoint") {
    Sampler rng(37);
    for (const auto& s : full_corpus()) {
        CAPTURE(s.name);
        auto pc = classify_point(s, *s.basepoint, 2, rng);
        if (pc.generic) {
            CHECK(pc.cr);
            CHECK(pc.cr_dim + pc.codim == s.N);
        }
    }
}

TEST_CASE("real chart parametrizes the manifold exactly on graph examples") {
    Sampler rng(41);
    for (const auto& s : {lewy(), ex223(), ex315(), ex35(), degen3(), wgraph()}) {
        CAPTURE(s.name);
        auto ch = solve_real_chart(s, *s.basepoint, 6);
        CHECK(ch.exact);
        for (int t = 0; t < 10; ++t) {
            PointQ p = ch.random_point(rng);
            CHECK(s.on_set(p));
        }
    }
}

TEST_CASE("classify rejects off-set points") {
    Sampler rng(43);
    auto s = lewy();
    CHECK_THROWS_AS(classify_point(s, PointQ{{GQ(1), GQ(1)}}, 2, rng),
                    std::invalid_argument);
}
