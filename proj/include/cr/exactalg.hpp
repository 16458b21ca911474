#pragma once

#include <optional>
#include <variant>

#include "cr/linalg.hpp"
#include "cr/series.hpp"

namespace cr {

/// Coefficient-wise conjugation (an involutive ring automorphism fixing
/// the rationals).  Same as Poly::bar, exported under the operation name.
inline Poly bar(const Poly& p) { return p.bar(); }

/// Determinant of the Sylvester matrix with the rows of p listed first.
/// Throws if either polynomial has degree 0 in the eliminated variable.
Poly resultant(const Poly& p, const Poly& q, const std::string& var);

std::vector<std::vector<Poly>> sylvester_matrix(const Poly& p, const Poly& q,
                                                const std::string& var);

/// Positive per-variable weights.  Variables not listed get weight 1.
struct WeightVector {
    std::map<std::string, int> w;
    int weight_of(const std::string& v) const {
        auto it = w.find(v);
        return it == w.end() ? 1 : it->second;
    }
    int weighted_degree(const Mono& m, const std::vector<std::string>& vars) const;
};

struct NotHomogeneous {
    int deg_a, deg_b;       // two witness weighted degrees
    std::string witness_a, witness_b;  // printable witness monomials
};

/// Weighted degree of a weighted-homogeneous polynomial, or the witness
/// pair showing inhomogeneity.  Zero polynomial throws.
std::variant<int, NotHomogeneous> weighted_degree(const Poly& p,
                                                  const WeightVector& w);

struct RankOptions {
    int retries = 3;
    long coeff_bound = 1000000;
    // deterministic symbolic elimination when rows*cols is small
    int symbolic_threshold = 16;
};

/// Generic rank of the Jacobian of `components` with respect to `vars`:
/// exact rank at random Gaussian-rational points, maximized over retries,
/// with a deterministic fraction-free symbolic path for small systems.
std::size_t generic_rank(const std::vector<Series>& components,
                         const std::vector<std::string>& vars, Sampler& rng,
                         const RankOptions& opts = {});

std::size_t generic_rank(const std::vector<Poly>& components,
                         const std::vector<std::string>& vars, Sampler& rng,
                         const RankOptions& opts = {});

/// Generic rank of an explicit polynomial matrix (random evaluation with
/// retries, symbolic fallback under the same threshold).
std::size_t generic_matrix_rank(const std::vector<std::vector<Poly>>& m,
                                Sampler& rng, const RankOptions& opts = {});

/// gcd in one variable `var` over GQ(other vars), computed by a primitive
/// pseudo-remainder sequence.  Result is primitive up to monomial content.
Poly gcd_in_var(Poly a, Poly b, const std::string& var);

struct GraphSolution {
    std::vector<std::string> pivots;       // solved variables
    std::vector<std::string> params;       // remaining variables
    std::map<std::string, Series> solved;  // pivot -> series in params
    bool exact = false;                    // residual exactly zero
};

/// Solve eqs = 0 (all vanishing at the origin) for k = #eqs variables as
/// series in the rest, by Newton iteration with exact arithmetic.  Pivot
/// variables are chosen greedily from `pivot_order` (falling back to any
/// remaining variable) so that the linear part is invertible; throws
/// std::domain_error when no invertible pivot set exists.
GraphSolution solve_graph(const std::vector<Poly>& eqs,
                          const std::vector<std::string>& vars,
                          const std::vector<std::string>& pivot_order,
                          int order);

/// True iff substituting the (exact polynomial) environment into every
/// equation yields exactly zero.  Cheap staged truncations reject inexact
/// solutions before the full product is formed.
bool substitution_vanishes_exactly(const std::vector<Poly>& eqs,
                                   const std::map<std::string, Series>& env,
                                   int stage_order);

/// Pivot ordering that favors exact graph solves: variables occurring only
/// linearly with a constant cofactor first, then other linear-only
/// variables, then the rest (in the given order within each class).
std::vector<std::string> pivot_preference(const std::vector<Poly>& eqs,
                                          const std::vector<std::string>& vars);

}  // namespace cr
