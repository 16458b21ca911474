#include "cr/normalform.hpp"

#include <algorithm>
#include <sstream>

namespace cr {

NormalModel::NormalModel(int n, int d, std::vector<Series> Q, Frame frame)
    : n_(n), d_(d), Q_(std::move(Q)), frame_(std::move(frame)) {
    if ((int)Q_.size() != d_) throw std::invalid_argument("NormalModel: |Q| != d");
}

bool NormalModel::exact() const {
    for (const auto& s : Q_)
        if (!s.is_exact()) return false;
    return true;
}

int NormalModel::order() const {
    int o = kExact;
    for (const auto& s : Q_) o = std::min(o, s.order());
    return o;
}

std::string NormalModel::zv(int i) { return "z." + std::to_string(i); }
std::string NormalModel::chiv(int i) { return "chi." + std::to_string(i); }
std::string NormalModel::wv(int j) { return "w." + std::to_string(j); }
std::string NormalModel::tauv(int j) { return "tau." + std::to_string(j); }

static std::vector<std::string> name_range(std::string (*f)(int), int k) {
    std::vector<std::string> out;
    for (int i = 1; i <= k; ++i) out.push_back(f(i));
    return out;
}

std::vector<std::string> NormalModel::zvars() const { return name_range(&zv, n_); }
std::vector<std::string> NormalModel::chivars() const { return name_range(&chiv, n_); }
std::vector<std::string> NormalModel::wvars() const { return name_range(&wv, d_); }
std::vector<std::string> NormalModel::tauvars() const { return name_range(&tauv, d_); }

std::vector<Series> NormalModel::Qbar() const {
    std::map<std::string, std::string> swap;
    for (int i = 1; i <= n_; ++i) { swap[zv(i)] = chiv(i); swap[chiv(i)] = zv(i); }
    for (int j = 1; j <= d_; ++j) swap[tauv(j)] = wv(j);
    std::vector<Series> out;
    for (const auto& s : Q_) out.push_back(s.bar().rename(swap));
    return out;
}

std::vector<Series> NormalModel::q() const {
    std::vector<Series> out;
    for (int j = 0; j < d_; ++j)
        out.push_back(Q_[j] - Series::exact(Poly::var(tauv(j + 1))));
    return out;
}

ManifoldSpec NormalModel::as_spec() const {
    ManifoldSpec spec;
    spec.name = "model";
    spec.N = N();
    for (int i = 1; i <= n_; ++i) spec.zvars.push_back(zv(i));
    for (int j = 1; j <= d_; ++j) spec.zvars.push_back(wv(j));
    // Im(w_j - Q_j) with chi/tau renamed to the spec's zeta partners;
    // equal to M as a germ at 0.
    std::map<std::string, std::string> to_zeta;
    for (int i = 1; i <= n_; ++i) to_zeta[chiv(i)] = ManifoldSpec::zeta_name(zv(i));
    for (int j = 1; j <= d_; ++j) to_zeta[tauv(j)] = ManifoldSpec::zeta_name(wv(j));
    auto qb = Qbar();
    for (int j = 0; j < d_; ++j) {
        Poly F = Poly::var(wv(j + 1)) - Q_[j].poly();
        Poly Fbar = Poly::var(tauv(j + 1)) - qb[j].poly();
        spec.rho.push_back((F - Fbar).rename(to_zeta) *
                           (GQ(Rat(-1, 2)) * GQ::i()));
    }
    spec.basepoint = PointQ{std::vector<GQ>(N(), GQ(0))};
    return spec;
}

NormalModel from_rigid(const std::vector<Poly>& phi, int n) {
    const int d = int(phi.size());
    std::map<std::string, std::string> swap;
    for (int i = 1; i <= n; ++i) {
        swap[NormalModel::zv(i)] = NormalModel::chiv(i);
        swap[NormalModel::chiv(i)] = NormalModel::zv(i);
    }
    std::map<std::string, GQ> z_zero, chi_zero;
    for (int i = 1; i <= n; ++i) {
        z_zero[NormalModel::zv(i)] = GQ(0);
        chi_zero[NormalModel::chiv(i)] = GQ(0);
    }
    for (int j = 0; j < d; ++j) {
        for (const auto* bad : {&z_zero, &chi_zero}) {
            Poly r = phi[j].eval_partial(*bad);
            if (!r.is_zero()) {
                auto [m, c] = r.leading_term();
                std::ostringstream os;
                os << "rigid form not normal at row " << (j + 1) << " (monomial "
                   << Poly::term(c, r.vars(), m).str() << ")";
                throw std::invalid_argument(os.str());
            }
        }
        if (phi[j].bar().rename(swap) != phi[j])
            throw std::invalid_argument("rigid form row " + std::to_string(j + 1) +
                                        " is not Hermitian-symmetric");
    }
    std::vector<Series> Q;
    for (int j = 0; j < d; ++j)
        Q.push_back(Series::exact(Poly::var(NormalModel::tauv(j + 1)) +
                                  GQ(2) * GQ::i() * phi[j]));
    return NormalModel(n, d, std::move(Q));
}

VerifyResult verify_normal(const NormalModel& m) {
    VerifyResult out;
    auto fail = [&](const std::string& what, const Poly& residual) {
        out.ok = false;
        auto [mono, c] = residual.leading_term();
        out.failure = what + " fails at monomial " +
                      Poly::term(c, residual.vars(), mono).str();
    };
    std::map<std::string, Series> z_zero, chi_zero;
    for (int i = 1; i <= m.n(); ++i) {
        z_zero[NormalModel::zv(i)] = Series::exact(Poly());
        chi_zero[NormalModel::chiv(i)] = Series::exact(Poly());
    }
    for (int j = 0; j < m.d(); ++j) {
        Poly tau = Poly::var(NormalModel::tauv(j + 1));
        Series a = m.Q()[j].subst(chi_zero) - tau;
        if (!a.is_zero()) { fail("normality Q(z,0,tau)=tau", a.poly()); return out; }
        Series b = m.Q()[j].subst(z_zero) - tau;
        if (!b.is_zero()) { fail("normality Q(0,chi,tau)=tau", b.poly()); return out; }
    }
    // involution: Q(z, chi, Qbar(chi,z,w)) = w
    auto qb = m.Qbar();
    std::map<std::string, Series> env;
    for (int j = 0; j < m.d(); ++j) env[NormalModel::tauv(j + 1)] = qb[j];
    for (int j = 0; j < m.d(); ++j) {
        Series r = m.Q()[j].subst(env) - Series::exact(Poly::var(NormalModel::wv(j + 1)));
        if (!r.is_zero()) { fail("reality Q(z,chi,Qbar(chi,z,w))=w", r.poly()); return out; }
    }
    return out;
}

std::map<Mono, std::vector<Series>> q_alpha(const NormalModel& m, int A) {
    auto qb = m.Qbar();
    auto chis = m.chivars();
    std::map<Mono, std::vector<Series>> table;
    for (int j = 0; j < m.d(); ++j) {
        auto parts = qb[j].poly().collect(chis);
        for (auto& [alpha, cof] : parts) {
            if (mono_degree(alpha) > A) continue;
            auto it = table.find(alpha);
            if (it == table.end()) {
                std::vector<Series> tuple(m.d(), Series::zero(qb[j].order()));
                it = table.emplace(alpha, std::move(tuple)).first;
            }
            int ord = qb[j].is_exact() ? kExact : qb[j].order();
            it->second[j] = Series(cof, ord);
        }
    }
    return table;
}

// ---- solve_normal -------------------------------------------------------

// inverse of tau -> phi(params, tau) in the tau variables, parametrically
static std::vector<Series> parametric_inverse(const std::vector<Series>& phi,
                                              const std::vector<std::string>& tauvars,
                                              const std::vector<std::string>& out_of,
                                              int order) {
    // solve phi_j(params, t) - s_j = 0 for t in terms of (params, s)
    // where s_j are fresh slot names, then rename s -> out_of.
    std::vector<std::string> slots;
    std::vector<Poly> eqs;
    for (std::size_t j = 0; j < phi.size(); ++j) {
        std::string s = "slot." + std::to_string(j + 1);
        slots.push_back(s);
        eqs.push_back(phi[j].poly() - Poly::var(s));
    }
    std::vector<std::string> vars;
    for (const auto& p : phi)
        for (const auto& v : p.poly().vars())
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    for (const auto& s : slots) vars.push_back(s);
    auto sol = solve_graph(eqs, vars, tauvars, order);
    for (const auto& t : tauvars)
        if (sol.solved.find(t) == sol.solved.end())
            throw std::domain_error("parametric_inverse: pivot escaped tau block");
    bool inputs_exact = true;
    for (const auto& p : phi)
        if (!p.is_exact()) inputs_exact = false;
    std::map<std::string, std::string> ren;
    for (std::size_t j = 0; j < slots.size(); ++j) ren[slots[j]] = out_of[j];
    std::vector<Series> out;
    for (const auto& t : tauvars) {
        Series s = sol.solved.at(t).rename(ren);
        if (!inputs_exact) s = Series(s.poly(), order);
        out.push_back(s);
    }
    return out;
}

NormalModel solve_normal(const ManifoldSpec& spec, const PointQ& p, int order) {
    if (order < 2) throw std::invalid_argument("order must be >= 2");
    const int d = spec.codim();
    const int N = spec.N;
    const int n = N - d;
    auto env = spec.diag_env(p);
    if (!spec.on_set(p)) throw std::invalid_argument("point not on set");

    // holomorphic differential and pivot (w-direction) selection; prefer
    // directions with constant linear cofactors so graphs solve exactly
    Mat dz(d, Vec(N));
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < N; ++k)
            dz[j][k] = spec.rho[j].derivative(spec.zvars[k]).eval(env);
    std::vector<int> scan_order;
    {
        std::map<std::string, Poly> shift_only;
        for (int k = 0; k < N; ++k) {
            shift_only[spec.zvars[k]] =
                Poly::constant(p.coords[k]) + Poly::var(spec.zvars[k]);
            shift_only[ManifoldSpec::zeta_name(spec.zvars[k])] =
                Poly::constant(p.coords[k].conj()) +
                Poly::var(ManifoldSpec::zeta_name(spec.zvars[k]));
        }
        std::vector<Poly> shifted;
        for (const auto& r : spec.rho) shifted.push_back(r.subst(shift_only));
        for (const auto& v : pivot_preference(shifted, spec.zvars)) {
            auto it = std::find(spec.zvars.begin(), spec.zvars.end(), v);
            scan_order.push_back(int(it - spec.zvars.begin()));
        }
    }
    std::vector<int> wpos;
    for (int k : scan_order) {
        if ((int)wpos.size() >= d) break;
        std::vector<int> trial = wpos;
        trial.push_back(k);
        Mat sub(d, Vec(trial.size()));
        for (int i = 0; i < d; ++i)
            for (std::size_t t = 0; t < trial.size(); ++t) sub[i][t] = dz[i][trial[t]];
        if (mat_rank(sub) == trial.size()) wpos = trial;
    }
    std::sort(wpos.begin(), wpos.end());
    if ((int)wpos.size() != d)
        throw std::domain_error("implicit solve failed: drho/dw singular at p (point not generic)");
    std::vector<int> zpos;
    for (int k = 0; k < N; ++k)
        if (std::find(wpos.begin(), wpos.end(), k) == wpos.end()) zpos.push_back(k);

    // shift to p and rename into model variables
    std::map<std::string, Poly> sub;
    for (int i = 0; i < n; ++i) {
        const auto& v = spec.zvars[zpos[i]];
        sub[v] = Poly::constant(p.coords[zpos[i]]) + Poly::var(NormalModel::zv(i + 1));
        sub[ManifoldSpec::zeta_name(v)] = Poly::constant(p.coords[zpos[i]].conj()) +
                                          Poly::var(NormalModel::chiv(i + 1));
    }
    for (int j = 0; j < d; ++j) {
        const auto& v = spec.zvars[wpos[j]];
        sub[v] = Poly::constant(p.coords[wpos[j]]) + Poly::var(NormalModel::wv(j + 1));
        sub[ManifoldSpec::zeta_name(v)] = Poly::constant(p.coords[wpos[j]].conj()) +
                                          Poly::var(NormalModel::tauv(j + 1));
    }
    std::vector<Poly> eqs;
    for (const auto& r : spec.rho) eqs.push_back(r.subst(sub));

    // solve w = W(z, chi, tau)
    std::vector<std::string> allvars, wnames;
    for (int i = 1; i <= n; ++i) allvars.push_back(NormalModel::zv(i));
    for (int j = 1; j <= d; ++j) {
        allvars.push_back(NormalModel::wv(j));
        wnames.push_back(NormalModel::wv(j));
    }
    for (int i = 1; i <= n; ++i) allvars.push_back(NormalModel::chiv(i));
    for (int j = 1; j <= d; ++j) allvars.push_back(NormalModel::tauv(j));
    auto sol = solve_graph(eqs, allvars, wnames, order);
    for (const auto& w : wnames)
        if (sol.solved.find(w) == sol.solved.end())
            throw std::domain_error("implicit solve failed: drho/dw singular at p");
    std::vector<Series> W;
    for (const auto& w : wnames) W.push_back(sol.solved.at(w));

    std::vector<std::string> tnames, znames;
    for (int j = 1; j <= d; ++j) tnames.push_back(NormalModel::tauv(j));
    for (int i = 1; i <= n; ++i) znames.push_back(NormalModel::zv(i));
    std::map<std::string, Series> z_zero, chi_zero, zchi_zero;
    for (int i = 1; i <= n; ++i) {
        z_zero[NormalModel::zv(i)] = Series::exact(Poly());
        chi_zero[NormalModel::chiv(i)] = Series::exact(Poly());
        zchi_zero[NormalModel::zv(i)] = Series::exact(Poly());
        zchi_zero[NormalModel::chiv(i)] = Series::exact(Poly());
    }
    std::map<std::string, std::string> tau_to_w, bar_swap_zchi;
    for (int j = 1; j <= d; ++j) tau_to_w[NormalModel::tauv(j)] = NormalModel::wv(j);
    for (int i = 1; i <= n; ++i) {
        bar_swap_zchi[NormalModel::zv(i)] = NormalModel::chiv(i);
        bar_swap_zchi[NormalModel::chiv(i)] = NormalModel::zv(i);
    }

    // identity-as-series of the tau block
    auto tau_identity = [&]() {
        std::vector<Series> id;
        for (int j = 1; j <= d; ++j) id.push_back(Series::exact(Poly::var(NormalModel::tauv(j))));
        return id;
    };
    auto is_identity = [&](const std::vector<Series>& f) {
        for (int j = 0; j < d; ++j)
            if (!(f[j] - Series::exact(Poly::var(NormalModel::tauv(j + 1)))).is_zero())
                return false;
        return true;
    };

    // running change of the w coordinate: old-w as series in (z, new-w)
    std::vector<Series> wchange;  // empty = identity

    // Step 1: straighten a(tau) = W(0,0,tau) to the identity.
    {
        std::vector<Series> a;
        for (int j = 0; j < d; ++j) a.push_back(W[j].subst(zchi_zero));
        if (!is_identity(a)) {
            std::vector<Series> abar;
            for (auto& s : a) abar.push_back(s.bar());
            // reality of the solved graph forces abar to invert a
            {
                std::map<std::string, Series> comp;
                for (int j = 0; j < d; ++j) comp[NormalModel::tauv(j + 1)] = a[j];
                for (int j = 0; j < d; ++j) {
                    Series r = abar[j].subst(comp) -
                               Series::exact(Poly::var(NormalModel::tauv(j + 1)));
                    if (!r.is_zero())
                        throw std::logic_error(
                            "solve_normal: graph reality identity failed");
                }
            }
            // psi0 = lam*id + (1-lam)*abar with conj(psi0) = psi0 o a;
            // lam = 1/2 + i s, s chosen to keep the linear part invertible
            std::vector<Series> psi0, psi0bar;
            bool ok = false;
            for (long sshift = 0; sshift < 8 && !ok; ++sshift) {
                GQ lam = GQ(Rat(1, 2), Rat(sshift));
                psi0.clear();
                psi0bar.clear();
                Mat lin(d, Vec(d));
                for (int j = 0; j < d; ++j) {
                    Series tj = Series::exact(Poly::var(NormalModel::tauv(j + 1)));
                    psi0.push_back(tj * lam + abar[j] * (GQ(1) - lam));
                    psi0bar.push_back(tj * lam.conj() + a[j] * (GQ(1) - lam.conj()));
                    for (int k = 0; k < d; ++k)
                        lin[j][k] = psi0[j].poly().coeff({NormalModel::tauv(k + 1)}, {1});
                }
                try { mat_inverse(lin); ok = true; } catch (const std::domain_error&) {}
            }
            if (!ok) throw std::domain_error("normalization: no invertible straightening");
            auto psi0bar_inv = parametric_inverse(psi0bar, tnames, tnames, order);
            std::map<std::string, Series> tau_env;
            for (int j = 0; j < d; ++j) tau_env[NormalModel::tauv(j + 1)] = psi0bar_inv[j];
            std::map<std::string, Series> slot;
            for (int k = 0; k < d; ++k)
                slot[NormalModel::tauv(k + 1)] = W[k].subst(tau_env);
            std::vector<Series> Wn;
            for (int j = 0; j < d; ++j) Wn.push_back(psi0[j].subst(slot));
            W = Wn;
            // frame: old-w = psi0^{-1}(new-w)
            auto psi0_inv = parametric_inverse(psi0, tnames, tnames, order);
            wchange.clear();
            for (int j = 0; j < d; ++j) wchange.push_back(psi0_inv[j].rename(tau_to_w));
        }
    }

    // Step 2: straighten phi_z(tau) = W(z,0,tau) to the identity.
    {
        std::vector<Series> phi;
        for (int j = 0; j < d; ++j) phi.push_back(W[j].subst(chi_zero));
        if (!is_identity(phi)) {
            std::vector<Series> phibar;  // phibar_chi(tau): conj coeffs, z->chi
            for (auto& s : phi) phibar.push_back(s.bar().rename(bar_swap_zchi));
            std::map<std::string, Series> tau_env;
            for (int j = 0; j < d; ++j) tau_env[NormalModel::tauv(j + 1)] = phibar[j];
            std::vector<Series> inner(d);
            for (int j = 0; j < d; ++j) inner[j] = W[j].subst(tau_env);
            // apply phi_z^{-1}: solve phi(z, t) = inner
            auto phi_inv = parametric_inverse(phi, tnames, tnames, order);
            std::map<std::string, Series> slot;
            for (int k = 0; k < d; ++k) slot[NormalModel::tauv(k + 1)] = inner[k];
            std::vector<Series> Wn;
            for (int j = 0; j < d; ++j) Wn.push_back(phi_inv[j].subst(slot));
            W = Wn;
            // frame: old-w = phi_z(z, new-w)
            std::vector<Series> step;
            for (int j = 0; j < d; ++j) step.push_back(phi[j].rename(tau_to_w));
            if (wchange.empty()) {
                wchange = step;
            } else {
                std::map<std::string, Series> chain;
                for (int j = 0; j < d; ++j) chain[NormalModel::wv(j + 1)] = step[j];
                for (auto& s : wchange) s = s.subst(chain);
            }
        }
    }

    // exactness: re-check the solved+normalized graph against exact rho
    std::map<std::string, Series> wenv;
    for (int j = 0; j < d; ++j)
        wenv[NormalModel::wv(j + 1)] = Series::exact(W[j].poly());
    bool exact_model = substitution_vanishes_exactly(eqs, wenv, order);
    std::vector<Series> Q;
    for (int j = 0; j < d; ++j)
        Q.push_back(exact_model ? Series::exact(W[j].poly()) : Series(W[j].poly(), order));

    Frame frame;
    frame.base = p;
    frame.A = Mat(N, Vec(N, GQ(0)));
    for (int i = 0; i < n; ++i) frame.A[zpos[i]][i] = GQ(1);
    for (int j = 0; j < d; ++j) frame.A[wpos[j]][n + j] = GQ(1);
    frame.wchange = wchange;

    NormalModel model(n, d, Q, frame);
    auto ver = verify_normal(model);
    if (!ver.ok)
        throw std::logic_error("solve_normal: normalization failed: " + ver.failure);
    return model;
}

std::map<std::string, GQ> random_graph_point(const NormalModel& m, Sampler& rng,
                                             long bound) {
    std::map<std::string, GQ> env;
    for (int i = 1; i <= m.n(); ++i) {
        env[NormalModel::zv(i)] = rng.small_gq(bound);
        env[NormalModel::chiv(i)] = rng.small_gq(bound);
    }
    for (int j = 1; j <= m.d(); ++j) env[NormalModel::tauv(j)] = rng.small_gq(bound);
    for (int j = 1; j <= m.d(); ++j)
        env[NormalModel::wv(j)] = m.Q()[j - 1].eval(env);
    return env;
}

std::map<std::string, GQ> random_on_m_point(const NormalModel& m,
                                            const ManifoldSpec& model_spec,
                                            Sampler& rng, long bound) {
    auto ch = solve_real_chart(model_spec, *model_spec.basepoint,
                               m.exact() ? 6 : std::min(m.order(), 4));
    PointQ p = ch.random_point(rng, bound);
    std::map<std::string, GQ> env;
    for (int i = 0; i < m.n(); ++i) {
        env[NormalModel::zv(i + 1)] = p.coords[i];
        env[NormalModel::chiv(i + 1)] = p.coords[i].conj();
    }
    for (int j = 0; j < m.d(); ++j) {
        env[NormalModel::wv(j + 1)] = p.coords[m.n() + j];
        env[NormalModel::tauv(j + 1)] = p.coords[m.n() + j].conj();
    }
    return env;
}

OnManifoldSampler::OnManifoldSampler(const NormalModel& m, int chart_order)
    : n_(m.n()), d_(m.d()), spec_(std::make_shared<ManifoldSpec>(m.as_spec())) {
    chart_ = solve_real_chart(*spec_, *spec_->basepoint, chart_order);
    chart_.spec = spec_.get();
}

std::map<std::string, GQ> OnManifoldSampler::sample(Sampler& rng, long bound) const {
    PointQ p = chart_.random_point(rng, bound);
    std::map<std::string, GQ> env;
    for (int i = 0; i < n_; ++i) {
        env[NormalModel::zv(i + 1)] = p.coords[i];
        env[NormalModel::chiv(i + 1)] = p.coords[i].conj();
    }
    for (int j = 0; j < d_; ++j) {
        env[NormalModel::wv(j + 1)] = p.coords[n_ + j];
        env[NormalModel::tauv(j + 1)] = p.coords[n_ + j].conj();
    }
    return env;
}

}  // namespace cr
