#pragma once

#include "cr/normalform.hpp"

namespace cr {

/// Complex vector field on the complexified model, components indexed by
/// the coordinate list model_coords(m) = (z.., w.., chi.., tau..).
struct ModelField {
    std::vector<Series> comp;
    std::string label;
};

std::vector<std::string> model_coords(const NormalModel& m);

/// CR basis L_j = d/dchi_j + sum_k dQbar_k/dchi_j d/dtau_k.
std::vector<ModelField> cr_basis(const NormalModel& m);
/// Conjugate basis Lbar_j = d/dz_j + sum_k dQ_k/dz_j d/dw_k.
std::vector<ModelField> cr_basis_conj(const NormalModel& m);

/// Applies the field to a function of the model variables.
Series apply_field(const NormalModel& m, const ModelField& X, const Series& f);

/// Checks that a field annihilates the graph equations w - Q modulo the
/// complexification ideal (substituting tau = Qbar), to working order.
bool field_tangent_to_complexification(const NormalModel& m, const ModelField& X);

struct VJet {
    int j;        // defining-row index, 1-based
    Mono alpha;   // chi multi-index
    Vec vec;      // value in C^N  (gradient slots z.., w..)
};

/// All V_{j,alpha} = -dQbar_j /(dchi^alpha dZ) at the given diagonal point,
/// |alpha| <= kmax.
std::vector<VJet> v_vectors(const NormalModel& m,
                            const std::map<std::string, GQ>& at, int kmax);

/// Least k <= kmax with span{V_{j,alpha}: |alpha| <= k} = C^N, if any.
std::optional<int> k_nondeg_order(const NormalModel& m,
                                  const std::map<std::string, GQ>& at, int kmax);

/// Generic k-nondegeneracy order over sampled on-manifold points;
/// nullopt means degenerate (no finite order <= kmax at any sample).
std::optional<int> levi_number(const NormalModel& m, Sampler& rng, int trials,
                               int kmax);

/// Holomorphic vector field sum a_j(z,w) d/dz_j tangent to M.
struct Witness {
    std::vector<Poly> a;  // n coefficient polynomials in (z, w)
    std::string str(const NormalModel& m) const;
};

/// Bounded search for a tangency witness: coefficient degree <= D against
/// the jet equations |alpha| <= A.  A returned witness is re-verified
/// tangent; nullopt is the bounded claim "none within (D, A)".
std::optional<Witness> degeneracy_witness(const NormalModel& m, int D, int A);

/// Residual of the tangency identity of a witness at a diagonal point env:
/// all d values of (X + conj X)(w_k - Q_k) reduced through the graph.
Vec witness_tangency_residual(const NormalModel& m, const Witness& X,
                              const std::map<std::string, GQ>& at);

enum class EssFinite { Yes, No, Undetermined };

struct EssFiniteResult {
    EssFinite verdict = EssFinite::Undetermined;
    std::string detail;
};

/// Decides whether the common zero set of the chi-coefficients of
/// Q(z, chi, 0) is {0} near the model origin: gcd route for n = 1,
/// axis tests plus iterated-resultant certificates for n >= 2.
EssFiniteResult essentially_finite(const NormalModel& m, int A);

}  // namespace cr
