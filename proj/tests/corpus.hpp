// Programmatic constructions of the bundled example manifolds, used by the
// module test suites (the CLI corpus files mirror these; test_dsl checks
// that parsing the files reproduces them).
#pragma once

#include "cr/geometry.hpp"

namespace crtest {

using namespace cr;

inline GQ I() { return GQ::i(); }
inline Poly V(const std::string& v) { return Poly::var(v); }
inline Poly Zc(const std::string& v) { return Poly::var(ManifoldSpec::zeta_name(v)); }

// (f - bar-swap f)/2i and (f + bar-swap f)/2 for a holomorphic polynomial f
// expressed in the Z variables of `spec`.
inline Poly im_part(const ManifoldSpec& spec, const Poly& f) {
    return (f - spec.bar_swap(f)) * (GQ(Rat(-1, 2)) * I());
}
inline Poly re_part(const ManifoldSpec& spec, const Poly& f) {
    return (f + spec.bar_swap(f)) * GQ(Rat(1, 2));
}

inline ManifoldSpec make_spec(const std::string& name,
                              std::vector<std::string> vars) {
    ManifoldSpec s;
    s.name = name;
    s.zvars = std::move(vars);
    s.N = int(s.zvars.size());
    return s;
}

inline PointQ origin(int n) { return PointQ{std::vector<GQ>(n, GQ(0))}; }

inline ManifoldSpec lewy() {
    auto s = make_spec("LEWY", {"z", "w"});
    s.rho = {im_part(s, V("w")) - V("z") * Zc("z")};
    s.basepoint = origin(2);
    return s;
}

inline ManifoldSpec ex223() {
    auto s = make_spec("EX223", {"z", "w1", "w2"});
    s.rho = {im_part(s, V("w1")) - V("z") * Zc("z"),
             im_part(s, V("w2")) - V("z").pow(2) * Zc("z").pow(2)};
    s.weights = WeightVector{{{"z", 1}, {"z.c", 1}, {"w1", 2}, {"w1.c", 2},
                              {"w2", 4}, {"w2.c", 4}}};
    s.basepoint = origin(3);
    return s;
}

inline ManifoldSpec ex224() {
    auto s = make_spec("EX224", {"z", "w1", "w2"});
    s.rho = {im_part(s, V("w1")) - V("z") * Zc("z"),
             im_part(s, V("w2")) -
                 re_part(s, V("w2")) * V("z").pow(2) * Zc("z").pow(2)};
    s.basepoint = origin(3);
    return s;
}

inline ManifoldSpec ex315() {
    auto s = make_spec("EX315", {"z", "w1", "w2", "w3"});
    Poly zz = V("z") * Zc("z");
    s.rho = {im_part(s, V("w1")) - zz - re_part(s, V("w2")) * zz,
             im_part(s, V("w2")) - re_part(s, V("w3")) * zz.pow(2),
             im_part(s, V("w3"))};
    s.weights = WeightVector{{{"z", 1}, {"z.c", 1}, {"w1", 2}, {"w1.c", 2},
                              {"w2", 4}, {"w2.c", 4}, {"w3", 5}, {"w3.c", 5}}};
    s.basepoint = origin(4);
    return s;
}

inline ManifoldSpec ex316() {
    auto s = make_spec("EX316", {"z1", "z2", "w1", "w2"});
    Poly zz = V("z1") * Zc("z1") + V("z2") * Zc("z2");
    s.rho = {im_part(s, V("w1")).pow(2) - re_part(s, V("w2")) * zz,
             im_part(s, V("w2"))};
    s.basepoint = PointQ{{GQ(1), GQ(0), I(), GQ(1)}};
    return s;
}

inline ManifoldSpec ex317() {
    auto s = make_spec("EX317", {"z1", "z2", "w1", "w2"});
    s.rho = {re_part(s, V("w1")) - V("z1") * Zc("z1"),
             im_part(s, V("w1")) - V("z2") * Zc("z2"),
             im_part(s, V("w2"))};
    s.basepoint = PointQ{{GQ(1), GQ(1), GQ(Rat(1), Rat(1)), GQ(0)}};
    return s;
}

inline ManifoldSpec ex35() {
    auto s = make_spec("EX35", {"Z1", "Z2", "Z3", "Z4"});
    s.rho = {re_part(s, V("Z3")),
             im_part(s, V("Z3")) - V("Z1") * Zc("Z1"),
             im_part(s, V("Z4")) - V("Z2") * Zc("Z2")};
    s.basepoint = PointQ{{I(), GQ(0), I(), GQ(0)}};
    return s;
}

inline ManifoldSpec r142() {
    auto s = make_spec("R142", {"Z1", "Z2", "Z3", "Z4"});
    Poly E = V("Z3") - Zc("Z1").pow(2);
    s.rho = {re_part(s, Poly()) + (E + s.bar_swap(E)) * GQ(Rat(1, 2)),
             (E - s.bar_swap(E)) * (GQ(Rat(-1, 2)) * I()),
             re_part(s, V("Z4")) - V("Z1") * Zc("Z2") - V("Z2") * Zc("Z1")};
    s.basepoint = PointQ{{GQ(1), GQ(0), GQ(1), GQ(0)}};
    s.notes = {"holomorphic vector fields tangent at CR points are multiples of "
               "d/dZ2 + 2 Z3^(1/2) d/dZ4; the witness is multivalued, not "
               "polynomial"};
    return s;
}

inline ManifoldSpec rline() {
    auto s = make_spec("RLINE", {"Z"});
    s.rho = {im_part(s, V("Z"))};
    s.basepoint = origin(1);
    return s;
}

inline ManifoldSpec degen3() {
    auto s = make_spec("DEGEN3", {"z1", "z2", "w"});
    s.rho = {im_part(s, V("w")) - V("z1") * Zc("z1")};
    s.basepoint = origin(3);
    return s;
}

inline ManifoldSpec wgraph() {
    auto s = make_spec("WGRAPH", {"z", "w1", "w2"});
    s.rho = {im_part(s, V("w1")) - V("z") * Zc("z"),
             im_part(s, V("w2") - V("w1").pow(2))};
    s.weights = WeightVector{{{"z", 1}, {"z.c", 1}, {"w1", 2}, {"w1.c", 2},
                              {"w2", 4}, {"w2.c", 4}}};
    s.basepoint = origin(3);
    return s;
}

inline std::vector<ManifoldSpec> full_corpus() {
    return {lewy(), ex223(), ex224(), ex315(), ex316(), ex317(),
            ex35(), r142(), rline(), degen3(), wgraph()};
}

}  // namespace crtest
