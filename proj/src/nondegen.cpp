#include "cr/nondegen.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cr {

std::vector<std::string> model_coords(const NormalModel& m) {
    std::vector<std::string> out;
    for (int i = 1; i <= m.n(); ++i) out.push_back(NormalModel::zv(i));
    for (int j = 1; j <= m.d(); ++j) out.push_back(NormalModel::wv(j));
    for (int i = 1; i <= m.n(); ++i) out.push_back(NormalModel::chiv(i));
    for (int j = 1; j <= m.d(); ++j) out.push_back(NormalModel::tauv(j));
    return out;
}

std::vector<ModelField> cr_basis(const NormalModel& m) {
    auto qb = m.Qbar();
    const int n = m.n(), d = m.d();
    std::vector<ModelField> out;
    for (int j = 1; j <= n; ++j) {
        ModelField f;
        f.label = "L" + std::to_string(j);
        f.comp.assign(2 * m.N(), Series::exact(Poly()));
        f.comp[n + d + (j - 1)] = Series::exact(Poly::constant(GQ(1)));  // d/dchi_j
        for (int k = 1; k <= d; ++k)
            f.comp[n + d + n + (k - 1)] = qb[k - 1].derivative(NormalModel::chiv(j));
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<ModelField> cr_basis_conj(const NormalModel& m) {
    const int n = m.n(), d = m.d();
    std::vector<ModelField> out;
    for (int j = 1; j <= n; ++j) {
        ModelField f;
        f.label = "Lbar" + std::to_string(j);
        f.comp.assign(2 * m.N(), Series::exact(Poly()));
        f.comp[j - 1] = Series::exact(Poly::constant(GQ(1)));  // d/dz_j
        for (int k = 1; k <= d; ++k)
            f.comp[n + (k - 1)] = m.Q()[k - 1].derivative(NormalModel::zv(j));
        out.push_back(std::move(f));
    }
    return out;
}

Series apply_field(const NormalModel& m, const ModelField& X, const Series& f) {
    auto coords = model_coords(m);
    Series acc = Series::zero(f.order());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (X.comp[i].is_zero()) continue;
        acc += X.comp[i] * f.derivative(coords[i]);
    }
    return acc;
}

bool field_tangent_to_complexification(const NormalModel& m, const ModelField& X) {
    auto qb = m.Qbar();
    std::map<std::string, Series> tau_env;
    for (int j = 1; j <= m.d(); ++j) tau_env[NormalModel::tauv(j)] = qb[j - 1];
    for (int k = 0; k < m.d(); ++k) {
        Series g = Series::exact(Poly::var(NormalModel::wv(k + 1))) - m.Q()[k];
        Series r = apply_field(m, X, g).subst(tau_env);
        if (!r.is_zero()) return false;
    }
    return true;
}

std::vector<VJet> v_vectors(const NormalModel& m,
                            const std::map<std::string, GQ>& at, int kmax) {
    const int n = m.n(), d = m.d();
    auto qb = m.Qbar();
    std::vector<std::string> grad_vars;
    for (int i = 1; i <= n; ++i) grad_vars.push_back(NormalModel::zv(i));
    for (int j = 1; j <= d; ++j) grad_vars.push_back(NormalModel::wv(j));

    // enumerate chi multi-indices of weight <= kmax, by weight
    std::vector<Mono> alphas;
    Mono cur(n, 0);
    std::function<void(int, int)> gen = [&](int pos, int rem) {
        if (pos == n) { alphas.push_back(cur); return; }
        for (int e = 0; e <= rem; ++e) {
            cur[pos] = e;
            gen(pos + 1, rem - e);
        }
        cur[pos] = 0;
    };
    if (n > 0) gen(0, kmax);
    else alphas.push_back(Mono{});
    std::sort(alphas.begin(), alphas.end(), [](const Mono& a, const Mono& b) {
        return GradedLex()(a, b);
    });

    std::vector<VJet> out;
    for (const auto& alpha : alphas) {
        for (int j = 0; j < d; ++j) {
            Series der = qb[j];
            for (int i = 0; i < n; ++i)
                for (int e = 0; e < alpha[i]; ++e)
                    der = der.derivative(NormalModel::chiv(i + 1));
            VJet jet;
            jet.j = j + 1;
            jet.alpha = alpha;
            for (const auto& gv : grad_vars)
                jet.vec.push_back(-der.derivative(gv).eval(at));
            out.push_back(std::move(jet));
        }
    }
    return out;
}

std::optional<int> k_nondeg_order(const NormalModel& m,
                                  const std::map<std::string, GQ>& at, int kmax) {
    auto jets = v_vectors(m, at, kmax);
    IncrementalSpan<int> span;
    int reached = -1;
    for (const auto& jet : jets) {
        int k = mono_degree(jet.alpha);
        std::map<int, GQ> v;
        for (int i = 0; i < m.N(); ++i)
            if (!jet.vec[i].is_zero()) v[i] = jet.vec[i];
        span.add(std::move(v));
        if ((int)span.dim() == m.N()) { reached = k; break; }
    }
    if (reached < 0) return std::nullopt;
    return reached;
}

std::optional<int> levi_number(const NormalModel& m, Sampler& rng, int trials,
                               int kmax) {
    OnManifoldSampler sampler(m, m.exact() ? 6 : m.order());
    std::optional<int> best;
    for (int t = 0; t < trials; ++t) {
        auto env = sampler.sample(rng);
        auto k = k_nondeg_order(m, env, kmax);
        if (k && (!best || *k < *best)) best = k;
    }
    return best;
}

std::string Witness::str(const NormalModel& m) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << a[j].str() << ") d/d" << NormalModel::zv(int(j + 1));
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

// monomials in vars of total degree <= D
static std::vector<Mono> monomials_up_to(int nvars, int D) {
    std::vector<Mono> out;
    Mono cur(nvars, 0);
    std::function<void(int, int)> gen = [&](int pos, int rem) {
        if (pos == nvars) { out.push_back(cur); return; }
        for (int e = 0; e <= rem; ++e) {
            cur[pos] = e;
            gen(pos + 1, rem - e);
        }
        cur[pos] = 0;
    };
    gen(0, D);
    return out;
}

std::optional<Witness> degeneracy_witness(const NormalModel& m, int D, int A) {
    const int n = m.n(), d = m.d();
    if (n == 0) return std::nullopt;
    auto table = q_alpha(m, A);

    std::vector<std::string> zw;
    for (int i = 1; i <= n; ++i) zw.push_back(NormalModel::zv(i));
    for (int j = 1; j <= d; ++j) zw.push_back(NormalModel::wv(j));
    auto basis = monomials_up_to(int(zw.size()), D);

    // unknowns: coefficient of basis monomial b in a_j
    const std::size_t cols = std::size_t(n) * basis.size();
    // rows: for every (alpha, component, target monomial) the coefficient of
    // sum_j a_j * d(q_alpha_k)/dz_j must vanish
    std::map<std::pair<std::string, Mono>, std::size_t> row_of;
    std::vector<std::map<std::size_t, GQ>> rows;
    auto row_index = [&](const std::string& tag, const Mono& mono) {
        auto key = std::make_pair(tag, mono);
        auto it = row_of.find(key);
        if (it == row_of.end()) {
            it = row_of.emplace(key, rows.size()).first;
            rows.emplace_back();
        }
        return it->second;
    };
    for (const auto& [alpha, tuple] : table) {
        std::string atag;
        for (int e : alpha) atag += std::to_string(e) + ",";
        for (int k = 0; k < d; ++k) {
            for (int j = 0; j < n; ++j) {
                Poly dq = tuple[k].poly().derivative(NormalModel::zv(j + 1));
                if (dq.is_zero()) continue;
                for (std::size_t b = 0; b < basis.size(); ++b) {
                    Poly prod = dq * Poly::term(GQ(1), zw, basis[b]);
                    std::size_t col = j * basis.size() + b;
                    for (const auto& [mono, c] : prod.terms()) {
                        Mono full(zw.size(), 0);
                        // remap prod's monomial onto the canonical zw order
                        const auto& pv = prod.vars();
                        for (std::size_t q = 0; q < pv.size(); ++q) {
                            if (mono[q] == 0) continue;
                            auto pos = std::find(zw.begin(), zw.end(), pv[q]);
                            full[pos - zw.begin()] = mono[q];
                        }
                        std::size_t r =
                            row_index(atag + "#" + std::to_string(k), full);
                        rows[r][col] += c;
                        if (rows[r][col].is_zero()) rows[r].erase(col);
                    }
                }
            }
        }
    }
    Mat sys(rows.size(), Vec(cols, GQ(0)));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) sys[r][c] = v;
    auto kernel = mat_kernel(sys);
    if (kernel.empty()) return std::nullopt;

    auto qbar = m.Qbar();
    std::map<std::string, Series> tau_env;
    for (int j = 1; j <= m.d(); ++j) tau_env[NormalModel::tauv(j)] = qbar[j - 1];
    std::map<std::string, std::string> conj_names;
    for (int i = 1; i <= n; ++i) conj_names[NormalModel::zv(i)] = NormalModel::chiv(i);
    for (int j = 1; j <= d; ++j) conj_names[NormalModel::wv(j)] = NormalModel::tauv(j);

    for (const auto& kv : kernel) {
        Witness w;
        w.a.assign(n, Poly());
        for (int j = 0; j < n; ++j)
            for (std::size_t b = 0; b < basis.size(); ++b) {
                const GQ& c = kv[j * basis.size() + b];
                if (!c.is_zero()) w.a[j] += Poly::term(c, zw, basis[b]);
            }
        // re-verify: (X + conj X)(w_k - Q_k) vanishes through the graph
        bool tangent = true;
        for (int k = 0; k < d && tangent; ++k) {
            Series resid = Series::zero(m.order());
            for (int j = 0; j < n; ++j) {
                resid -= Series::exact(w.a[j]) *
                         m.Q()[k].derivative(NormalModel::zv(j + 1));
                Poly abar = w.a[j].bar().rename(conj_names);
                resid -= Series::exact(abar) *
                         m.Q()[k].derivative(NormalModel::chiv(j + 1));
            }
            if (!resid.subst(tau_env).is_zero()) tangent = false;
        }
        if (tangent) return w;
    }
    return std::nullopt;
}

Vec witness_tangency_residual(const NormalModel& m, const Witness& X,
                              const std::map<std::string, GQ>& at) {
    const int n = m.n(), d = m.d();
    std::map<std::string, std::string> conj_names;
    for (int i = 1; i <= n; ++i) conj_names[NormalModel::zv(i)] = NormalModel::chiv(i);
    for (int j = 1; j <= d; ++j) conj_names[NormalModel::wv(j)] = NormalModel::tauv(j);
    Vec out;
    for (int k = 0; k < d; ++k) {
        GQ acc(0);
        for (int j = 0; j < n; ++j) {
            acc -= X.a[j].eval(at) *
                   m.Q()[k].derivative(NormalModel::zv(j + 1)).eval(at);
            acc -= X.a[j].bar().rename(conj_names).eval(at) *
                   m.Q()[k].derivative(NormalModel::chiv(j + 1)).eval(at);
        }
        out.push_back(acc);
    }
    return out;
}

// nonzero chi-coefficient polynomials of Q(z, chi, 0) in the z variables
static std::vector<Poly> coefficient_family(const NormalModel& m, int A) {
    std::map<std::string, Series> tau0;
    for (int j = 1; j <= m.d(); ++j)
        tau0[NormalModel::tauv(j)] = Series::exact(Poly());
    std::vector<Poly> fam;
    for (int j = 0; j < m.d(); ++j) {
        Series q0 = m.Q()[j].subst(tau0);
        for (auto& [alpha, cof] : q0.poly().collect(m.chivars())) {
            if (mono_degree(alpha) > A || cof.is_zero()) continue;
            fam.push_back(cof);
        }
    }
    return fam;
}

EssFiniteResult essentially_finite(const NormalModel& m, int A) {
    EssFiniteResult out;
    const int n = m.n();
    if (n == 0) {
        out.verdict = EssFinite::Yes;
        out.detail = "no CR directions";
        return out;
    }
    auto fam = coefficient_family(m, A);
    if (fam.empty()) {
        out.verdict = EssFinite::No;
        out.detail = m.exact() ? "Q(z,chi,0) vanishes identically"
                               : "Q(z,chi,0) vanishes to the model order";
        return out;
    }
    if (n == 1) {
        // common zeros of nonzero univariate polynomials are isolated
        out.verdict = EssFinite::Yes;
        Poly g = fam[0];
        for (std::size_t i = 1; i < fam.size(); ++i)
            g = gcd_in_var(g, fam[i], NormalModel::zv(1));
        out.detail = "gcd of the coefficient family: " + g.str();
        return out;
    }
    std::vector<std::string> zs;
    for (int i = 1; i <= n; ++i) zs.push_back(NormalModel::zv(i));

    // axis witnesses: if the family vanishes on a coordinate axis, the
    // variety is positive-dimensional
    for (int i = 0; i < n; ++i) {
        std::map<std::string, GQ> kill;
        for (int k = 0; k < n; ++k)
            if (k != i) kill[zs[k]] = GQ(0);
        bool all_zero = true;
        for (const auto& f : fam)
            if (!f.eval_partial(kill).is_zero()) { all_zero = false; break; }
        if (all_zero) {
            out.verdict = EssFinite::No;
            out.detail = "family vanishes on the " + zs[i] + " axis";
            return out;
        }
    }
    if (n != 2) {
        out.detail = "elimination implemented for n <= 2";
        return out;
    }
    // As a germ at 0: a nonzero eliminant in one variable confines the
    // locus to the opposite coordinate hyperplane, and the axis tests
    // above already rule that hyperplane out of the locus.
    for (int i = 0; i < 2; ++i) {
        const std::string& keep = zs[i];
        const std::string& kill = zs[1 - i];
        for (const auto& f : fam)
            if (!f.depends_on(kill)) {
                // univariate member: its germ zero set is {keep = 0}
                out.verdict = EssFinite::Yes;
                out.detail = "univariate member " + f.str() + " pins " + keep;
                return out;
            }
        std::vector<Poly> cands;
        for (const auto& f : fam)
            if (f.degree_in(kill) > 0) cands.push_back(f);
        for (std::size_t a = 0; a < cands.size(); ++a)
            for (std::size_t b = a + 1; b < cands.size(); ++b) {
                Poly r = resultant(cands[a], cands[b], kill);
                if (!r.is_zero()) {
                    out.verdict = EssFinite::Yes;
                    out.detail = "eliminant in " + keep + " is nonzero";
                    return out;
                }
            }
    }
    out.detail = "all eliminants vanished at bound " + std::to_string(A);
    return out;
}

}  // namespace cr
