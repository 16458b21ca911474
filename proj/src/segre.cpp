#include "cr/segre.hpp"

#include <algorithm>

#include "cr/exactalg.hpp"

namespace cr {

namespace {

std::string zp(int level, int i) {
    return "zp." + std::to_string(level) + "." + std::to_string(i);
}
std::string chp(int level, int i) {
    return "chp." + std::to_string(level) + "." + std::to_string(i);
}

// q(a, b, c) and qbar(a, b, c) with the slots substituted
std::vector<Series> subst_tuple(const std::vector<Series>& f,
                                const std::vector<std::string>& zs,
                                const std::vector<std::string>& chis,
                                const std::vector<std::string>& taus,
                                const std::vector<Series>& za,
                                const std::vector<Series>& chia,
                                const std::vector<Series>& taua) {
    std::map<std::string, Series> env;
    for (std::size_t i = 0; i < zs.size(); ++i) env[zs[i]] = za[i];
    for (std::size_t i = 0; i < chis.size(); ++i) env[chis[i]] = chia[i];
    for (std::size_t i = 0; i < taus.size(); ++i) env[taus[i]] = taua[i];
    std::vector<Series> out;
    for (const auto& s : f) out.push_back(s.subst(env));
    return out;
}

std::vector<Series> vars_as_series(const std::vector<std::string>& names) {
    std::vector<Series> out;
    for (const auto& v : names) out.push_back(Series::exact(Poly::var(v)));
    return out;
}

std::vector<Series> zeros(int k) {
    return std::vector<Series>(k, Series::exact(Poly()));
}

}  // namespace

SegreParam segre_param(const NormalModel& m, int j) {
    if (j < 1) throw std::invalid_argument("segre level must be >= 1");
    const int n = m.n(), d = m.d();
    auto q = m.q();
    // qbar as a tuple in the same (z, chi, tau) slots: conj coefficients
    std::map<std::string, std::string> swap;
    for (int i = 1; i <= n; ++i) {
        swap[NormalModel::zv(i)] = NormalModel::chiv(i);
        swap[NormalModel::chiv(i)] = NormalModel::zv(i);
    }
    std::vector<Series> qbar;
    for (const auto& s : q) qbar.push_back(s.bar().rename(swap));
    // qbar now takes (chi-slot, z-slot, tau-slot) arguments positionally the
    // same way q does; callers pass the right values per the recursions.

    auto zs = m.zvars();
    auto chis = m.chivars();
    auto taus = m.tauvars();

    SegreParam out;
    out.level = j;
    for (int i = 1; i <= n; ++i) out.params.push_back(NormalModel::zv(i));

    std::vector<Series> v;
    if (j % 2 == 1) {
        const int k = (j - 1) / 2;
        for (int l = 1; l <= k; ++l)
            for (int i = 1; i <= n; ++i) out.params.push_back(zp(l, i));
        for (int l = 1; l <= k; ++l)
            for (int i = 1; i <= n; ++i) out.params.push_back(chp(l, i));
        if (k == 0) {
            v = zeros(d);
        } else {
            std::vector<Series> w_l, tau_l;
            for (int l = 1; l <= k; ++l) {
                std::vector<Series> zl, chl;
                for (int i = 1; i <= n; ++i) {
                    zl.push_back(Series::exact(Poly::var(zp(l, i))));
                    chl.push_back(Series::exact(Poly::var(chp(l, i))));
                }
                if (l == 1) w_l = zeros(d);
                else {
                    // w^l = tau^{l-1} + q(z^l, chi^{l-1}, tau^{l-1})
                    std::vector<Series> chprev;
                    for (int i = 1; i <= n; ++i)
                        chprev.push_back(Series::exact(Poly::var(chp(l - 1, i))));
                    auto qq = subst_tuple(q, zs, chis, taus, zl, chprev, tau_l);
                    w_l.clear();
                    for (int t = 0; t < d; ++t) w_l.push_back(tau_l[t] + qq[t]);
                }
                // tau^l = w^l + qbar(chi^l, z^l, w^l); in the renamed qbar
                // the chi variables carry the first (chi) slot
                auto qb = subst_tuple(qbar, zs, chis, taus, zl, chl, w_l);
                tau_l.clear();
                for (int t = 0; t < d; ++t) tau_l.push_back(w_l[t] + qb[t]);
            }
            // v = tau^k + q(z, chi^k, tau^k)
            std::vector<Series> chk;
            for (int i = 1; i <= n; ++i)
                chk.push_back(Series::exact(Poly::var(chp(k, i))));
            auto qq = subst_tuple(q, zs, chis, taus, vars_as_series(zs), chk, tau_l);
            for (int t = 0; t < d; ++t) v.push_back(tau_l[t] + qq[t]);
        }
    } else {
        const int k = j / 2;
        for (int l = 1; l <= k - 1; ++l)
            for (int i = 1; i <= n; ++i) out.params.push_back(zp(l, i));
        for (int l = 1; l <= k; ++l)
            for (int i = 1; i <= n; ++i) out.params.push_back(chp(l, i));
        // tau^1 = 0; tau^{l+1} = w^l + qbar(chi^{l+1}, z^l, w^l) with
        // w^l = tau^l + q(z^l, chi^l, tau^l)
        std::vector<Series> tau_l = zeros(d);
        for (int l = 1; l <= k - 1; ++l) {
            std::vector<Series> zl, chl, chnext;
            for (int i = 1; i <= n; ++i) {
                zl.push_back(Series::exact(Poly::var(zp(l, i))));
                chl.push_back(Series::exact(Poly::var(chp(l, i))));
                chnext.push_back(Series::exact(Poly::var(chp(l + 1, i))));
            }
            auto qq = subst_tuple(q, zs, chis, taus, zl, chl, tau_l);
            std::vector<Series> w_l;
            for (int t = 0; t < d; ++t) w_l.push_back(tau_l[t] + qq[t]);
            auto qb = subst_tuple(qbar, zs, chis, taus, zl, chnext, w_l);
            tau_l.clear();
            for (int t = 0; t < d; ++t) tau_l.push_back(w_l[t] + qb[t]);
        }
        std::vector<Series> chk;
        for (int i = 1; i <= n; ++i)
            chk.push_back(Series::exact(Poly::var(chp(k, i))));
        auto qq = subst_tuple(q, zs, chis, taus, vars_as_series(zs), chk, tau_l);
        for (int t = 0; t < d; ++t) v.push_back(tau_l[t] + qq[t]);
    }

    for (int i = 1; i <= n; ++i)
        out.comps.push_back(Series::exact(Poly::var(NormalModel::zv(i))));
    for (auto& s : v) out.comps.push_back(std::move(s));
    return out;
}

SegreChain segre_dims(const NormalModel& m, Sampler& rng) {
    SegreChain chain;
    chain.dims.push_back(0);  // d_0
    chain.truncated = !m.exact();
    const int cap = m.d() + 2;
    int last = 0;
    for (int j = 1; j <= cap; ++j) {
        auto par = segre_param(m, j);
        int dj = int(generic_rank(par.comps, par.params, rng));
        chain.dims.push_back(dj);
        chain.params.push_back(std::move(par));
        if (dj > last) {
            chain.j0 = j;
            last = dj;
        } else if (j > chain.j0) {
            break;  // witnessed stabilization one level past j0
        }
    }
    chain.orbit_dim = last;
    return chain;
}

bool minimal_via_segre(const NormalModel& m, Sampler& rng) {
    return segre_dims(m, rng).orbit_dim == m.N();
}

std::variant<Implicitized, std::string> implicitize(const NormalModel& m, int j) {
    if (m.n() != 1) return std::string("skipped: CR dimension is not 1");
    if (!m.exact()) return std::string("skipped: model is not exact");
    auto par = segre_param(m, j);
    const int d = m.d();
    // equations w_k - v_k over (z, level params, w)
    std::vector<Poly> sys;
    for (int k = 0; k < d; ++k)
        sys.push_back(Poly::var(NormalModel::wv(k + 1)) - par.comps[1 + k].poly());
    // eliminate the level parameters one at a time
    for (std::size_t pi = 1; pi < par.params.size(); ++pi) {
        const std::string& lam = par.params[pi];
        std::vector<Poly> with, without;
        for (const auto& f : sys)
            (f.depends_on(lam) ? with : without).push_back(f);
        if (with.empty()) continue;
        if (with.size() == 1) {
            sys = without;  // lone occurrence: the parameter is free
            continue;
        }
        std::sort(with.begin(), with.end(), [&](const Poly& a, const Poly& b) {
            if (a.degree_in(lam) != b.degree_in(lam))
                return a.degree_in(lam) < b.degree_in(lam);
            return a.term_count() < b.term_count();
        });
        std::vector<Poly> next = without;
        for (std::size_t t = 1; t < with.size(); ++t) {
            Poly r = resultant(with[0], with[t], lam);
            if (r.is_zero()) {
                Poly g = gcd_in_var(with[0], with[t], lam);
                return std::string("resultant vanished identically (common factor " +
                                   g.str() + ")");
            }
            // monomial factors cut only the discriminant locus
            Poly rr = r.div_monomial_content();
            if (!rr.is_constant()) next.push_back(rr);
        }
        sys = next;
    }
    // normalize and drop duplicates / zero rows; sanity: every equation
    // vanishes on the parametrized image
    Implicitized out;
    std::map<std::string, Series> image;
    image.emplace(NormalModel::zv(1), Series::exact(Poly::var(NormalModel::zv(1))));
    for (int k = 0; k < d; ++k)
        image.emplace(NormalModel::wv(k + 1), par.comps[1 + k]);
    for (auto f : sys) {
        if (f.is_zero()) continue;
        f = f.monic();
        if (f.is_constant())
            throw std::logic_error("implicitize: inconsistent elimination");
        if (!Series::exact(f).subst(image).is_zero())
            throw std::logic_error("implicitize: spurious equation survived");
        if (std::find(out.equations.begin(), out.equations.end(), f) ==
            out.equations.end())
            out.equations.push_back(f);
    }
    return out;
}

}  // namespace cr
