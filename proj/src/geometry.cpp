#include "cr/geometry.hpp"

#include <algorithm>
#include <sstream>

namespace cr {

std::string PointQ::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ", ";
        s += coords[i].str();
    }
    return s + ")";
}

std::vector<std::string> ManifoldSpec::zetavars() const {
    std::vector<std::string> out;
    for (const auto& v : zvars) out.push_back(zeta_name(v));
    return out;
}

std::map<std::string, std::string> ManifoldSpec::swap_names() const {
    std::map<std::string, std::string> m;
    for (const auto& v : zvars) {
        m[v] = zeta_name(v);
        m[zeta_name(v)] = v;
    }
    return m;
}

Poly ManifoldSpec::bar_swap(const Poly& p) const {
    return p.bar().rename(swap_names());
}

std::map<std::string, GQ> ManifoldSpec::diag_env(const PointQ& p) const {
    std::map<std::string, GQ> env;
    for (int k = 0; k < N; ++k) {
        env[zvars[k]] = p.coords[k];
        env[zeta_name(zvars[k])] = p.coords[k].conj();
    }
    return env;
}

bool ManifoldSpec::on_set(const PointQ& p) const {
    auto env = diag_env(p);
    for (const auto& r : rho)
        if (!r.eval(env).is_zero()) return false;
    return true;
}

void validate(const ManifoldSpec& spec) {
    if (spec.rho.empty()) throw std::invalid_argument("no defining polynomials");
    for (std::size_t j = 0; j < spec.rho.size(); ++j) {
        if (spec.rho[j].is_zero())
            throw std::invalid_argument("rho_" + std::to_string(j + 1) + " is zero");
        Poly diff = spec.bar_swap(spec.rho[j]) - spec.rho[j];
        if (!diff.is_zero()) {
            auto [m, c] = diff.leading_term();
            std::ostringstream os;
            os << "reality violated at j=" << (j + 1) << " (monomial "
               << Poly::term(c, diff.vars(), m).str() << ")";
            throw std::invalid_argument(os.str());
        }
    }
    if (spec.basepoint && !spec.on_set(*spec.basepoint))
        throw std::invalid_argument("basepoint not on set");
}

PointPair sharp(const PointPair& zp) {
    return {zp.second.conj(), zp.first.conj()};
}

std::vector<Poly> star(const ManifoldSpec& spec, const std::vector<Poly>& hs) {
    std::vector<Poly> out;
    std::map<std::string, std::string> z_to_zeta;
    for (const auto& v : spec.zvars) z_to_zeta[v] = ManifoldSpec::zeta_name(v);
    for (const auto& h : hs) out.push_back(h.bar().rename(z_to_zeta));
    return out;
}

std::string re_name(const std::string& v) { return "re." + v; }
std::string im_name(const std::string& v) { return "im." + v; }

std::vector<Poly> real_equations(const ManifoldSpec& spec, const PointQ& p) {
    std::map<std::string, Poly> sub;
    for (int k = 0; k < spec.N; ++k) {
        Poly x = Poly::var(re_name(spec.zvars[k]));
        Poly y = Poly::var(im_name(spec.zvars[k]));
        sub[spec.zvars[k]] = Poly::constant(p.coords[k]) + x + GQ::i() * y;
        sub[ManifoldSpec::zeta_name(spec.zvars[k])] =
            Poly::constant(p.coords[k].conj()) + x - GQ::i() * y;
    }
    std::vector<Poly> out;
    for (const auto& r : spec.rho) {
        Poly q = r.subst(sub);
        for (const auto& [m, c] : q.terms())
            if (c.im != 0)
                throw std::invalid_argument(
                    "defining polynomial is not real-valued on R^{2N}");
        out.push_back(q);
    }
    return out;
}

Series RealChart::coord(const std::string& rv) const {
    auto it = solved.find(rv);
    if (it != solved.end()) return it->second;
    return exact ? Series::exact(Poly::var(rv)) : Series(Poly::var(rv), order);
}

std::vector<Series> RealChart::z_series() const {
    std::vector<Series> out;
    for (int k = 0; k < spec->N; ++k) {
        Series x = coord(re_name(spec->zvars[k]));
        Series y = coord(im_name(spec->zvars[k]));
        out.push_back(Series::exact(Poly::constant(base.coords[k])) + x +
                      y * GQ::i());
    }
    return out;
}

std::vector<Series> RealChart::zeta_series() const {
    std::vector<Series> out;
    for (int k = 0; k < spec->N; ++k) {
        Series x = coord(re_name(spec->zvars[k]));
        Series y = coord(im_name(spec->zvars[k]));
        out.push_back(Series::exact(Poly::constant(base.coords[k].conj())) + x -
                      y * GQ::i());
    }
    return out;
}

PointQ RealChart::point_at(const std::map<std::string, GQ>& pvals) const {
    PointQ q;
    for (const auto& s : z_series()) q.coords.push_back(s.eval(pvals));
    return q;
}

PointQ RealChart::random_point(Sampler& rng, long bound) const {
    std::map<std::string, GQ> pv;
    for (const auto& t : params) pv.emplace(t, GQ(rng.small_rat(bound)));
    return point_at(pv);
}

RealChart solve_real_chart(const ManifoldSpec& spec, const PointQ& p, int order) {
    if (!spec.on_set(p)) throw std::invalid_argument("point not on set");
    auto eqs = real_equations(spec, p);
    std::vector<std::string> vars;
    for (const auto& v : spec.zvars) vars.push_back(im_name(v));
    for (const auto& v : spec.zvars) vars.push_back(re_name(v));
    auto sol = solve_graph(eqs, vars, pivot_preference(eqs, vars), order);
    RealChart ch;
    ch.spec = &spec;
    ch.base = p;
    ch.params = sol.params;
    ch.solved = sol.solved;
    ch.order = order;
    ch.exact = sol.exact;
    return ch;
}

// rank of a matrix of (Z, zeta) polynomials pulled back along the chart
static std::size_t chart_rank(const std::vector<std::vector<Poly>>& entries,
                              const RealChart& ch, Sampler& rng) {
    std::map<std::string, Series> env;
    auto zs = ch.z_series();
    auto zetas = ch.zeta_series();
    for (int k = 0; k < ch.spec->N; ++k) {
        env.emplace(ch.spec->zvars[k], zs[k]);
        env.emplace(ManifoldSpec::zeta_name(ch.spec->zvars[k]), zetas[k]);
    }
    std::vector<std::vector<Poly>> m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (const auto& e : entries[i])
            m[i].push_back(Series::exact(e).subst(env).poly());
    return generic_matrix_rank(m, rng);
}

PointClass classify_point(const ManifoldSpec& spec, const PointQ& p,
                          int jet_order, Sampler& rng) {
    PointClass out;
    out.jet_order = jet_order;
    out.on_set = spec.on_set(p);
    if (!out.on_set) throw std::invalid_argument("point not on set");

    const int d = spec.codim();
    auto env = spec.diag_env(p);
    Mat dr(d, Vec(2 * spec.N));
    Mat dz(d, Vec(spec.N));
    std::vector<std::vector<Poly>> dz_polys(d), dr_polys(d);
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < spec.N; ++k) {
            Poly pz = spec.rho[j].derivative(spec.zvars[k]);
            Poly pzeta =
                spec.rho[j].derivative(ManifoldSpec::zeta_name(spec.zvars[k]));
            GQ vz = pz.eval(env), vzeta = pzeta.eval(env);
            dr[j][2 * k] = vz + vzeta;                  // d/dx
            dr[j][2 * k + 1] = GQ::i() * (vz - vzeta);  // d/dy
            dz[j][k] = vz;
            dz_polys[j].push_back(pz);
            dr_polys[j].push_back(pz + pzeta);
            dr_polys[j].push_back(GQ::i() * (pz - pzeta));
        }
    }
    out.codim = int(mat_rank(dr));
    std::size_t dbar_rank_at_p = mat_rank(dz);
    out.generic = (dbar_rank_at_p == std::size_t(d)) && out.codim == d;
    out.cr_dim = spec.N - int(dbar_rank_at_p);

    if (out.codim < d) {
        // defining functions dependent at p: no chart from this system
        out.regular = false;
        return out;
    }
    RealChart ch = solve_real_chart(spec, p, jet_order);
    out.exact_chart = ch.exact;

    std::size_t dr_generic = chart_rank(dr_polys, ch, rng);
    out.regular = (dr_generic == std::size_t(d));
    std::size_t dz_generic = chart_rank(dz_polys, ch, rng);
    out.cr = out.regular && (dz_generic == dbar_rank_at_p);
    return out;
}

std::optional<std::pair<std::map<std::string, GQ>, bool>>
random_complexification_point(const ManifoldSpec& spec, const PointQ& center,
                              int order, Sampler& rng) {
    // shift to the diagonal point of `center` and solve rho as a graph over
    // some d of the 2N complex coordinates
    std::map<std::string, Poly> shift;
    std::vector<std::string> vars;
    for (int k = 0; k < spec.N; ++k) {
        const auto& v = spec.zvars[k];
        shift[v] = Poly::constant(center.coords[k]) + Poly::var(v);
        shift[ManifoldSpec::zeta_name(v)] = Poly::constant(center.coords[k].conj()) +
                                            Poly::var(ManifoldSpec::zeta_name(v));
        vars.push_back(v);
        vars.push_back(ManifoldSpec::zeta_name(v));
    }
    std::vector<Poly> eqs;
    for (const auto& r : spec.rho) eqs.push_back(r.subst(shift));
    GraphSolution sol;
    try {
        sol = solve_graph(eqs, vars, pivot_preference(eqs, vars), order);
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
    std::map<std::string, GQ> pv;
    for (const auto& t : sol.params) pv.emplace(t, rng.small_gq(5));
    std::map<std::string, GQ> env = pv;
    for (const auto& [v, s] : sol.solved) env[v] = s.eval(pv);
    for (int k = 0; k < spec.N; ++k) {
        env[spec.zvars[k]] += center.coords[k];
        env[ManifoldSpec::zeta_name(spec.zvars[k])] += center.coords[k].conj();
    }
    return std::make_pair(env, sol.exact);
}

}  // namespace cr
