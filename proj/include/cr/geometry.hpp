#pragma once

#include "cr/exactalg.hpp"

namespace cr {

/// A point with exact Gaussian-rational coordinates; its diagonal image in
/// the complexification is (p, conj p).
struct PointQ {
    std::vector<GQ> coords;
    PointQ conj() const {
        PointQ q;
        for (const auto& c : coords) q.coords.push_back(c.conj());
        return q;
    }
    std::string str() const;
};

/// Real algebraic subset of C^N by complexified defining polynomials
/// rho_j(Z, zeta).  The zeta partner of ambient variable "v" is "v.c".
struct ManifoldSpec {
    std::string name;
    int N = 0;
    std::vector<std::string> zvars;  // ambient variable names, user order
    std::vector<Poly> rho;           // d polynomials in (Z, zeta)
    std::optional<WeightVector> weights;
    std::optional<PointQ> basepoint;
    std::vector<std::string> notes;

    int codim() const { return int(rho.size()); }
    static std::string zeta_name(const std::string& v) { return v + ".c"; }
    std::vector<std::string> zetavars() const;
    std::map<std::string, std::string> swap_names() const;

    /// conjugate coefficients and swap Z <-> zeta
    Poly bar_swap(const Poly& p) const;

    /// Evaluation environment of the diagonal point (p, conj p).
    std::map<std::string, GQ> diag_env(const PointQ& p) const;
    bool on_set(const PointQ& p) const;
};

/// Checks the reality identity rho_j(Z,zeta) = conj-swap rho_j exactly and
/// the basepoint (when present).  Throws std::invalid_argument with the
/// offending row / monomial on failure.
void validate(const ManifoldSpec& spec);

using PointPair = std::pair<PointQ, PointQ>;

/// The antiholomorphic involution #(Z,zeta) = (conj zeta, conj Z).
PointPair sharp(const PointPair& zp);

/// *S for S = {h_1 = ... = h_k = 0} in the Z variables: the set in the
/// zeta variables cut out by the conjugated equations.
std::vector<Poly> star(const ManifoldSpec& spec, const std::vector<Poly>& hs);

struct PointClass {
    bool on_set = false;
    bool regular = false;
    int codim = 0;       // rank of the real differentials at p
    bool cr = false;
    bool generic = false;
    int cr_dim = 0;      // N - dbar-rank, meaningful when cr
    int jet_order = 0;   // order of the perturbation family used
    bool exact_chart = false;
};

/// A real parametrization of M near a chart center: the d solved real
/// coordinates as series in the 2N-d free ones.  Exact when the solved
/// graph closes with zero residual, an order-k jet otherwise.
struct RealChart {
    const ManifoldSpec* spec = nullptr;
    PointQ base;
    std::vector<std::string> params;        // free real coordinate names
    std::map<std::string, Series> solved;   // solved real coords
    int order = 0;
    bool exact = false;

    /// Series of each real coordinate (free ones are themselves).
    Series coord(const std::string& rv) const;
    /// Ambient Z_k as Series over the chart parameters.
    std::vector<Series> z_series() const;
    std::vector<Series> zeta_series() const;
    /// Exact rational point of M (or an order-k jet point when not exact).
    PointQ point_at(const std::map<std::string, GQ>& pvals) const;
    PointQ random_point(Sampler& rng, long bound = 7) const;
};

/// Names of the shifted real coordinates of ambient variable v.
std::string re_name(const std::string& v);
std::string im_name(const std::string& v);

/// rho in shifted real coordinates around p: polynomials in the variables
/// re.v / im.v with rational coefficients, vanishing at 0.
std::vector<Poly> real_equations(const ManifoldSpec& spec, const PointQ& p);

/// Solve the real equations for d pivot coordinates around p.
/// Requires the real differentials to have rank d at p.
RealChart solve_real_chart(const ManifoldSpec& spec, const PointQ& p, int order);

/// Pointwise classification with a jet-perturbation family of the given
/// order backing the "locally constant rank" half of the answer.
PointClass classify_point(const ManifoldSpec& spec, const PointQ& p,
                          int jet_order, Sampler& rng);

/// A random point of the complexification: (z-side, zeta-side) values with
/// zeta independent of conj(Z).  Built from a graph solve of rho in the
/// zeta-pivot directions; exact when the graph closes.
std::optional<std::pair<std::map<std::string, GQ>, bool>> random_complexification_point(
    const ManifoldSpec& spec, const PointQ& center, int order, Sampler& rng);

}  // namespace cr
