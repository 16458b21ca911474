#pragma once

#include "cr/normalform.hpp"

namespace cr {

/// Parametrization of the j-th Segre set: Lambda -> (z, v^j(Lambda)).
struct SegreParam {
    int level = 0;
    std::vector<std::string> params;  // z.1..z.n followed by the level params
    std::vector<Series> comps;        // N components (z, v^j)
};

SegreParam segre_param(const NormalModel& m, int j);

struct SegreChain {
    std::vector<int> dims;            // d_0, d_1, ..., through j0+1 (capped)
    int j0 = 1;
    int orbit_dim = 0;                // d_{j0}
    bool truncated = false;           // ranks computed on jets
    std::vector<SegreParam> params;   // levels 1..dims.size()-1
};

/// Generic dimensions by randomized/symbolic Jacobian rank, chain depth
/// capped one past the stabilization bound d+1.
SegreChain segre_dims(const NormalModel& m, Sampler& rng);

bool minimal_via_segre(const NormalModel& m, Sampler& rng);

struct Implicitized {
    std::vector<Poly> equations;  // in (z, w) model variables; empty = dense
};

/// Eliminates the chain parameters of the level-j parametrization by
/// iterated resultants (CR dimension 1, exact models only).  Returns the
/// defining polynomials of the Zariski closure off the discriminant locus,
/// or the skip reason.
std::variant<Implicitized, std::string> implicitize(const NormalModel& m, int j);

}  // namespace cr
