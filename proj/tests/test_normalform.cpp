#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "cr/normalform.hpp"

using namespace cr;
using namespace crtest;

static Poly ZV(int i) { return Poly::var(NormalModel::zv(i)); }
static Poly CHI(int i) { return Poly::var(NormalModel::chiv(i)); }
static Poly TAU(int j) { return Poly::var(NormalModel::tauv(j)); }

static NormalModel lewy_model() {
    return from_rigid({ZV(1) * CHI(1)}, 1);
}
static NormalModel ex223_model() {
    return from_rigid({ZV(1) * CHI(1), ZV(1).pow(2) * CHI(1).pow(2)}, 1);
}
static NormalModel flat_model(int n, int d) {
    return from_rigid(std::vector<Poly>(d, Poly()), n);
}

TEST_CASE("from_rigid: pinned models") {
    auto lm = lewy_model();
    CHECK(lm.exact());
    CHECK(lm.Q()[0].poly() == TAU(1) + GQ(2) * I() * ZV(1) * CHI(1));

    auto em = ex223_model();
    CHECK(em.Q()[0].poly() == TAU(1) + GQ(2) * I() * ZV(1) * CHI(1));
    CHECK(em.Q()[1].poly() == TAU(2) + GQ(2) * I() * ZV(1).pow(2) * CHI(1).pow(2));

    auto fm = flat_model(2, 2);
    CHECK(fm.Q()[0].poly() == TAU(1));
    CHECK(fm.Q()[1].poly() == TAU(2));
}

TEST_CASE("from_rigid rejects non-normal and non-Hermitian input") {
    CHECK_THROWS_WITH_AS(from_rigid({ZV(1) + ZV(1) * CHI(1)}, 1),
                         doctest::Contains("row 1"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(from_rigid({I() * ZV(1) * CHI(1)}, 1),
                         doctest::Contains("Hermitian"), std::invalid_argument);
}

TEST_CASE("verify_normal accepts corpus models, reports tampering") {
    for (auto& m : {lewy_model(), ex223_model(), flat_model(1, 1)})
        CHECK(verify_normal(m).ok);
    // tampered: Q = tau + 2 i z chi + z^2 violates Q(z,0,tau)=tau at z^2
    Series bad = Series::exact(TAU(1) + GQ(2) * I() * ZV(1) * CHI(1) + ZV(1).pow(2));
    NormalModel tampered(1, 1, {bad});
    auto res = verify_normal(tampered);
    CHECK_FALSE(res.ok);
    CHECK(res.failure.find("z.1^2") != std::string::npos);
}

TEST_CASE("solve_normal on Lewy matches from_rigid exactly") {
    auto m = solve_normal(lewy(), origin(2), 8);
    CHECK(m.exact());
    CHECK(m.Q()[0].poly() == lewy_model().Q()[0].poly());
    CHECK(verify_normal(m).ok);
}

TEST_CASE("solve_normal: flat manifold") {
    auto s = make_spec("FLAT", {"w"});
    s.rho = {im_part(s, V("w"))};
    s.basepoint = origin(1);
    auto m = solve_normal(s, origin(1), 8);
    CHECK(m.exact());
    CHECK(m.Q()[0].poly() == TAU(1));
}

TEST_CASE("solve_normal on the 2.2.4 example against the hand series") {
    // second row solves to Q2 = tau2 (1 + i z^2 chi^2)/(1 - i z^2 chi^2)
    //                         = tau2 (1 + 2i z^2 chi^2 - 2 z^4 chi^4 - ...)
    auto m = solve_normal(ex224(), origin(3), 12);
    CHECK_FALSE(m.exact());
    CHECK(verify_normal(m).ok);
    CHECK(m.Q()[0].poly() == TAU(1) + GQ(2) * I() * ZV(1) * CHI(1));
    Poly zc2 = ZV(1).pow(2) * CHI(1).pow(2);
    Poly expect2 = TAU(2) + GQ(2) * I() * TAU(2) * zc2 - GQ(2) * TAU(2) * zc2.pow(2);
    CHECK(m.Q()[1].poly() == expect2.truncated(12));
}

TEST_CASE("solve_normal at a skewed presentation still lands in normal form") {
    // Im w = |z - w|^2 : not in normal form as given
    auto s = make_spec("SKEW", {"z", "w"});
    Poly diff = V("z") - V("w");
    s.rho = {im_part(s, V("w")) - diff * s.bar_swap(diff)};
    s.basepoint = origin(2);
    validate(s);
    auto m = solve_normal(s, origin(2), 8);
    CHECK(verify_normal(m).ok);
    CHECK(m.n() == 1);
    CHECK(m.d() == 1);
}

TEST_CASE("solve_normal rejects non-generic points and tiny orders") {
    Sampler rng(1);
    CHECK_THROWS_AS(solve_normal(ex35(), origin(4), 8), std::domain_error);
    CHECK_THROWS_AS(solve_normal(lewy(), origin(2), 1), std::invalid_argument);
}

TEST_CASE("solve_normal at a non-origin generic basepoint") {
    for (const auto& s : {ex35(), r142(), ex317(), ex316()}) {
        CAPTURE(s.name);
        auto m = solve_normal(s, *s.basepoint, 6);
        CHECK(verify_normal(m).ok);
        CHECK(m.d() == s.codim());
    }
}

TEST_CASE("q_alpha tables") {
    auto lm = lewy_model();
    auto tab = q_alpha(lm, 3);
    // Qbar = w - 2 i chi z: q_0 = w, q_(1) = -2 i z, nothing else
    CHECK(tab.at(Mono{0})[0].poly() == Poly::var(NormalModel::wv(1)));
    CHECK(tab.at(Mono{1})[0].poly() == GQ(-2) * I() * ZV(1));
    CHECK(tab.size() == 2);

    auto fm = flat_model(1, 1);
    auto ftab = q_alpha(fm, 3);
    CHECK(ftab.size() == 1);
    CHECK(ftab.at(Mono{0})[0].poly() == Poly::var(NormalModel::wv(1)));

    auto em = ex223_model();
    auto etab = q_alpha(em, 3);
    CHECK(etab.at(Mono{1})[0].poly() == GQ(-2) * I() * ZV(1));
    CHECK(etab.at(Mono{1})[1].is_zero());
    CHECK(etab.at(Mono{2})[0].is_zero());
    CHECK(etab.at(Mono{2})[1].poly() == GQ(-2) * I() * ZV(1).pow(2));
}

TEST_CASE("q_alpha reconstructs Qbar") {
    for (auto& m : {lewy_model(), ex223_model(), flat_model(2, 1)}) {
        int A = 6;
        auto tab = q_alpha(m, A);
        auto chis = m.chivars();
        std::vector<Series> rebuilt(m.d(), Series::exact(Poly()));
        for (const auto& [alpha, tuple] : tab) {
            Poly chimono = Poly::constant(GQ(1));
            for (std::size_t i = 0; i < chis.size(); ++i)
                chimono *= var_pow(chis[i], alpha[i]);
            for (int j = 0; j < m.d(); ++j)
                rebuilt[j] += tuple[j] * Series::exact(chimono);
        }
        auto qb = m.Qbar();
        for (int j = 0; j < m.d(); ++j)
            CHECK((rebuilt[j] - qb[j]).truncated(A).is_zero());
    }
}

TEST_CASE("rigid corpus inputs: solve_normal agrees with from_rigid to order") {
    struct Row { ManifoldSpec spec; NormalModel rigid; };
    std::vector<Row> rows;
    rows.push_back({lewy(), lewy_model()});
    rows.push_back({ex223(), ex223_model()});
    rows.push_back({degen3(), from_rigid({ZV(1) * CHI(1)}, 2)});
    for (auto& r : rows) {
        CAPTURE(r.spec.name);
        auto m = solve_normal(r.spec, origin(r.spec.N), 8);
        REQUIRE(m.d() == r.rigid.d());
        for (int j = 0; j < m.d(); ++j)
            CHECK((m.Q()[j] - r.rigid.Q()[j]).truncated(8).is_zero());
    }
}

TEST_CASE("model as_spec round trip: points and validation") {
    Sampler rng(12);
    for (auto& m : {lewy_model(), ex223_model()}) {
        auto spec = m.as_spec();
        CHECK_NOTHROW(validate(spec));
        auto env = random_on_m_point(m, spec, rng);
        // w = Q(z, conj z, conj w) at the sampled point
        for (int j = 0; j < m.d(); ++j) {
            GQ w = env.at(NormalModel::wv(j + 1));
            CHECK(m.Q()[j].eval(env) == w);
        }
    }
}

TEST_CASE("random graph points satisfy w = Q") {
    Sampler rng(13);
    auto m = ex223_model();
    for (int t = 0; t < 5; ++t) {
        auto env = random_graph_point(m, rng);
        for (int j = 0; j < m.d(); ++j)
            CHECK(m.Q()[j].eval(env) == env.at(NormalModel::wv(j + 1)));
    }
}
