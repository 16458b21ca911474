#include "cr/exactalg.hpp"

#include <algorithm>
#include <set>

namespace cr {

// Coefficients of p as a univariate polynomial in var, degree 0..deg.
static std::vector<Poly> coeffs_in(const Poly& p, const std::string& var, int deg) {
    std::vector<Poly> out(deg + 1, Poly());
    for (const auto& [key, cof] : p.collect({var})) {
        out[key[0]] = cof;
    }
    return out;
}

std::vector<std::vector<Poly>> sylvester_matrix(const Poly& p, const Poly& q,
                                                const std::string& var) {
    int dp = p.degree_in(var), dq = q.degree_in(var);
    if (dp <= 0 || dq <= 0)
        throw std::invalid_argument("not a polynomial in elimination variable");
    auto pc = coeffs_in(p, var, dp);
    auto qc = coeffs_in(q, var, dq);
    std::size_t n = dp + dq;
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly()));
    for (int r = 0; r < dq; ++r)            // rows of p first
        for (int k = 0; k <= dp; ++k) m[r][r + dp - k] = pc[k];
    for (int r = 0; r < dp; ++r)
        for (int k = 0; k <= dq; ++k) m[dq + r][r + dq - k] = qc[k];
    return m;
}

Poly resultant(const Poly& p, const Poly& q, const std::string& var) {
    if (p.is_zero() || q.is_zero())
        throw std::invalid_argument("resultant of zero polynomial");
    return poly_det(sylvester_matrix(p, q, var));
}

int WeightVector::weighted_degree(const Mono& m,
                                  const std::vector<std::string>& vars) const {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * weight_of(vars[i]);
    return d;
}

static std::string mono_str(const Mono& m, const std::vector<std::string>& vars) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

std::variant<int, NotHomogeneous> weighted_degree(const Poly& p,
                                                  const WeightVector& w) {
    if (p.is_zero()) throw std::domain_error("zero polynomial has no degree");
    std::optional<int> deg;
    Mono first;
    for (const auto& [m, c] : p.terms()) {
        int d = w.weighted_degree(m, p.vars());
        if (!deg) { deg = d; first = m; continue; }
        if (d != *deg)
            return NotHomogeneous{*deg, d, mono_str(first, p.vars()),
                                  mono_str(m, p.vars())};
    }
    return *deg;
}

static std::size_t rank_at_random_point(const std::vector<std::vector<Poly>>& jac,
                                        const std::set<std::string>& vars,
                                        Sampler& rng, long bound) {
    std::map<std::string, GQ> pt;
    for (const auto& v : vars) pt.emplace(v, rng.gq(bound));
    Mat m(jac.size(), Vec(jac.empty() ? 0 : jac[0].size()));
    for (std::size_t i = 0; i < jac.size(); ++i)
        for (std::size_t j = 0; j < jac[i].size(); ++j)
            m[i][j] = jac[i][j].eval(pt);
    return mat_rank(m);
}

std::size_t generic_matrix_rank(const std::vector<std::vector<Poly>>& m,
                                Sampler& rng, const RankOptions& opts) {
    if (m.empty() || m[0].empty()) return 0;
    if ((int)(m.size() * m[0].size()) <= opts.symbolic_threshold)
        return poly_rank(m);
    std::set<std::string> vars;
    for (const auto& row : m)
        for (const auto& e : row)
            for (const auto& v : e.vars())
                if (e.depends_on(v)) vars.insert(v);
    std::size_t best = 0;
    for (int t = 0; t < opts.retries; ++t)
        best = std::max(best, rank_at_random_point(m, vars, rng, opts.coeff_bound));
    return best;
}

std::size_t generic_rank(const std::vector<Series>& components,
                         const std::vector<std::string>& vars, Sampler& rng,
                         const RankOptions& opts) {
    std::vector<std::vector<Poly>> jac(components.size(),
                                       std::vector<Poly>(vars.size()));
    for (std::size_t i = 0; i < components.size(); ++i)
        for (std::size_t j = 0; j < vars.size(); ++j)
            jac[i][j] = components[i].derivative(vars[j]).poly();
    return generic_matrix_rank(jac, rng, opts);
}

std::size_t generic_rank(const std::vector<Poly>& components,
                         const std::vector<std::string>& vars, Sampler& rng,
                         const RankOptions& opts) {
    std::vector<Series> s;
    s.reserve(components.size());
    for (const auto& p : components) s.push_back(Series::exact(p));
    return generic_rank(s, vars, rng, opts);
}

// Pseudo-remainder of a by b in var (both degree >= 0 in var, b nonzero).
static Poly pseudo_rem(Poly a, const Poly& b, const std::string& var) {
    int db = b.degree_in(var);
    auto bc = coeffs_in(b, var, db);
    Poly lead_b = bc[db];
    int da = a.degree_in(var);
    while (!a.is_zero() && (da = a.degree_in(var)) >= db) {
        auto ac = coeffs_in(a, var, da);
        Poly lead_a = ac[da];
        a = a * lead_b - b * lead_a * var_pow(var, da - db);
    }
    return a;
}

GraphSolution solve_graph(const std::vector<Poly>& eqs,
                          const std::vector<std::string>& vars,
                          const std::vector<std::string>& pivot_order,
                          int order) {
    const std::size_t k = eqs.size();
    for (const auto& e : eqs)
        if (!e.constant_term().is_zero())
            throw std::invalid_argument("solve_graph: equation not vanishing at 0");

    // candidate column order: pivot_order first, then the rest
    std::vector<std::string> cand = pivot_order;
    for (const auto& v : vars)
        if (std::find(cand.begin(), cand.end(), v) == cand.end())
            cand.push_back(v);

    // linear part of each equation w.r.t. every candidate
    Mat lin(k, Vec(cand.size(), GQ(0)));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < cand.size(); ++j)
            lin[i][j] = eqs[i].coeff({cand[j]}, {1});

    // greedy pivot selection: keep columns that increase the rank
    std::vector<std::string> pivots;
    std::vector<std::size_t> pivcols;
    for (std::size_t j = 0; j < cand.size() && pivots.size() < k; ++j) {
        std::vector<std::size_t> trial = pivcols;
        trial.push_back(j);
        Mat sub(k, Vec(trial.size()));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t t = 0; t < trial.size(); ++t)
                sub[i][t] = lin[i][trial[t]];
        if (mat_rank(sub) == trial.size()) {
            pivcols = trial;
            pivots.push_back(cand[j]);
        }
    }
    if (pivots.size() != k)
        throw std::domain_error("solve_graph: linear part has deficient rank");

    Mat L(k, Vec(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t t = 0; t < k; ++t) L[i][t] = lin[i][pivcols[t]];
    Mat Linv = mat_inverse(L);

    GraphSolution out;
    out.pivots = pivots;
    for (const auto& v : vars)
        if (std::find(pivots.begin(), pivots.end(), v) == pivots.end())
            out.params.push_back(v);

    // Newton iteration s <- s - Linv * F(s, t); the working order ramps up
    // one degree per pass so early passes stay cheap
    std::vector<Series> s(k, Series::zero(order));
    for (int pass = 0; pass <= order + 1; ++pass) {
        int wo = std::min(order, pass + 2);
        std::map<std::string, Series> env;
        for (std::size_t t = 0; t < k; ++t)
            env.emplace(pivots[t], Series(s[t].poly(), wo));
        std::vector<Series> f(k);
        bool clean = true;
        for (std::size_t i = 0; i < k; ++i) {
            f[i] = Series(eqs[i], wo).subst(env);
            if (!f[i].is_zero()) clean = false;
        }
        if (clean && wo == order) break;
        for (std::size_t i = 0; i < k; ++i) {
            Series corr = Series::zero(wo);
            for (std::size_t j = 0; j < k; ++j) corr += f[j] * Linv[i][j];
            s[i] = Series((s[i] - corr).poly().truncated(wo), order);
        }
    }

    // exactness: plug the truncated solution into the exact equations
    std::map<std::string, Series> exenv;
    for (std::size_t t = 0; t < k; ++t)
        exenv.emplace(pivots[t], Series::exact(s[t].poly()));
    bool exact = substitution_vanishes_exactly(eqs, exenv, order);
    out.exact = exact;
    for (std::size_t t = 0; t < k; ++t)
        out.solved.emplace(pivots[t],
                           exact ? Series::exact(s[t].poly()) : Series(s[t].poly(), order));
    return out;
}

bool substitution_vanishes_exactly(const std::vector<Poly>& eqs,
                                   const std::map<std::string, Series>& env,
                                   int stage_order) {
    for (int cap : {stage_order + 1, stage_order + 2}) {
        if (stage_order >= kExact) break;
        for (const auto& e : eqs)
            if (!Series(e, cap).subst(env).is_zero()) return false;
    }
    for (const auto& e : eqs)
        if (!Series::exact(e).subst(env).is_zero()) return false;
    return true;
}

std::vector<std::string> pivot_preference(const std::vector<Poly>& eqs,
                                          const std::vector<std::string>& vars) {
    auto classify = [&](const std::string& v) {
        bool appears = false, constant_cof = true;
        for (const auto& e : eqs) {
            int dg = e.degree_in(v);
            if (dg > 1) return 2;  // genuinely nonlinear occurrence
            if (dg == 1) {
                appears = true;
                auto parts = e.collect({v});
                auto it = parts.find(Mono{1});
                if (it != parts.end() && !it->second.is_constant())
                    constant_cof = false;
            }
        }
        if (!appears) return 2;
        return constant_cof ? 0 : 1;
    };
    std::vector<std::string> out;
    for (int klass = 0; klass <= 2; ++klass)
        for (const auto& v : vars)
            if (classify(v) == klass) out.push_back(v);
    return out;
}

Poly gcd_in_var(Poly a, Poly b, const std::string& var) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    while (!b.is_zero() && b.degree_in(var) > 0) {
        if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
        Poly r = pseudo_rem(a, b, var);
        a = b;
        b = r.is_zero() ? Poly() : r.div_monomial_content();
    }
    if (!b.is_zero()) return Poly::constant(GQ(1));  // unit in var
    return a.div_monomial_content().monic();
}

}  // namespace cr
