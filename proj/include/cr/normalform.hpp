#pragma once

#include <memory>

#include "cr/geometry.hpp"

namespace cr {

/// Coordinate record tying model coordinates (z, w) to the ambient spec:
///   Z = base + A * (z_1..z_n, g_1(z,w)..g_d(z,w))
/// where g is the identity when `wchange` is empty.
struct Frame {
    PointQ base;
    Mat A;                        // N x N, column blocks (z | w)
    std::vector<Series> wchange;  // old-w in terms of (z, new-w); empty = id
    bool trivial() const { return wchange.empty(); }
};

/// Normal coordinates for a generic manifold: M given by w = Q(z, zbar, wbar)
/// with Q(z,0,tau) = Q(0,chi,tau) = tau, exactly or to a truncation order.
///
/// Model variable names are fixed: z.1..z.n, chi.1..chi.n, w.1..w.d,
/// tau.1..tau.d.
class NormalModel {
  public:
    NormalModel(int n, int d, std::vector<Series> Q, Frame frame = {});

    int n() const { return n_; }
    int d() const { return d_; }
    int N() const { return n_ + d_; }
    bool exact() const;
    int order() const;  // kExact when exact
    const std::vector<Series>& Q() const { return Q_; }
    const Frame& frame() const { return frame_; }

    static std::string zv(int i);    // 1-based
    static std::string chiv(int i);
    static std::string wv(int j);
    static std::string tauv(int j);
    std::vector<std::string> zvars() const;
    std::vector<std::string> chivars() const;
    std::vector<std::string> wvars() const;
    std::vector<std::string> tauvars() const;

    /// Qbar_j(chi, z, w): conjugated coefficients, slots swapped.
    std::vector<Series> Qbar() const;
    /// q = Q - tau (vanishes when z or chi does).
    std::vector<Series> q() const;

    /// The model as a ManifoldSpec over ambient variables z.i, w.j with
    /// real-valued rows Im(w_j - Q_j); truncated rows when the model is.
    ManifoldSpec as_spec() const;

  private:
    int n_, d_;
    std::vector<Series> Q_;
    Frame frame_;
};

struct VerifyResult {
    bool ok = true;
    std::string failure;  // first failing identity/monomial when !ok
};

/// Exact model from a rigid Hermitian form: Q_j = tau_j + 2i phi_j(z, chi).
/// Preconditions phi(z,0) = phi(0,chi) = 0 and Hermitian symmetry are
/// enforced (std::invalid_argument names the row and monomial).
NormalModel from_rigid(const std::vector<Poly>& phi, int n);

/// Normal coordinates at a generic point by exact Newton solving plus the
/// normalizing changes of coordinates; order >= 2.
NormalModel solve_normal(const ManifoldSpec& spec, const PointQ& p, int order);

/// Checks normality (1.1.4-style) and the reality involution identity,
/// exactly for exact models and to the model order otherwise.
VerifyResult verify_normal(const NormalModel& m);

/// Coefficients of Qbar(chi, z, w) in powers of chi, |alpha| <= A.
/// Key = chi exponent vector, value = d-tuple in (z, w).
std::map<Mono, std::vector<Series>> q_alpha(const NormalModel& m, int A);

/// Random point of the complexified model graph: values for all model
/// variables with w = Q(z, chi, tau).
std::map<std::string, GQ> random_graph_point(const NormalModel& m, Sampler& rng,
                                             long bound = 5);

/// Random point of M itself in model coordinates (z0, w0) with the
/// diagonal identity w0 = Q(z0, conj z0, conj w0); exact for exact models.
std::map<std::string, GQ> random_on_m_point(const NormalModel& m,
                                            const ManifoldSpec& model_spec,
                                            Sampler& rng, long bound = 5);

/// Reusable on-manifold sampler: solves the model's real chart once and
/// draws diagonal points from it.
class OnManifoldSampler {
  public:
    OnManifoldSampler(const NormalModel& m, int chart_order);
    std::map<std::string, GQ> sample(Sampler& rng, long bound = 5) const;
    bool exact() const { return chart_.exact; }

  private:
    int n_, d_;
    std::shared_ptr<ManifoldSpec> spec_;
    RealChart chart_;
};

}  // namespace cr
