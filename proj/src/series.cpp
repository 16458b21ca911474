#include "cr/series.hpp"

#include "cr/linalg.hpp"

namespace cr {

Series Series::pow(int k) const {
    Series r = Series::exact(Poly::constant(GQ(1)));
    Series base = *this;
    int e = k;
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

Series Series::subst(const std::map<std::string, Series>& map) const {
    int ord = order_;
    bool need_zero_const = !is_exact();
    for (const auto& [v, s] : map) {
        if (!p_.depends_on(v)) continue;
        ord = std::min(ord, s.order());
        if (need_zero_const && !s.constant_term().is_zero())
            throw std::domain_error("composition not supported: nonzero constant "
                                    "term substituted into a truncated series");
    }
    // group the terms by their exponents in the substituted variables so
    // each exponent pattern costs one series product
    std::vector<std::string> replaced;
    for (const auto& v : p_.vars())
        if (map.count(v) && p_.depends_on(v)) replaced.push_back(v);
    if (replaced.empty()) return Series(p_, ord);

    std::map<std::size_t, std::vector<Series>> pows;
    auto power = [&](std::size_t i, int k) -> const Series& {
        auto& v = pows[i];
        if (v.empty()) v.push_back(Series::exact(Poly::constant(GQ(1))));
        while ((int)v.size() <= k) {
            Series nxt = v.back() * map.at(replaced[i]);
            v.push_back(ord == kExact ? nxt : nxt.truncated(ord));
        }
        return v[k];
    };
    Series acc = Series::zero(ord);
    for (const auto& [beta, cof] : p_.collect(replaced)) {
        Series t = Series::exact(cof);
        for (std::size_t i = 0; i < replaced.size(); ++i) {
            if (beta[i] == 0) continue;
            t *= power(i, beta[i]);
            if (ord != kExact) t = t.truncated(ord);
        }
        acc += t;
    }
    return Series(acc.poly(), ord);
}

Series compose(const Series& f, const std::map<std::string, Series>& subs) {
    return f.subst(subs);
}

Series Series::inverse(int order) const {
    GQ c = constant_term();
    if (c.is_zero()) throw std::domain_error("inverse of series with zero constant term");
    // 1/(c + u) = (1/c) sum (-u/c)^k,  u = this - c
    Series u = (*this - Series::exact(Poly::constant(c))) * c.inverse();
    Series acc = Series::exact(Poly::constant(GQ(1)));
    Series upow = Series::exact(Poly::constant(GQ(1)));
    int ord = std::min(order, order_);
    for (int k = 1; k <= ord; ++k) {
        upow = (upow * u).truncated(ord);
        if (upow.is_zero()) break;
        acc += (k % 2 ? -upow : upow);
    }
    return Series((acc * c.inverse()).poly(), ord);
}

Series Series::exp(int order) const {
    if (!constant_term().is_zero())
        throw std::domain_error("exp of series with nonzero constant term");
    int ord = std::min(order, order_);
    Series acc = Series::exact(Poly::constant(GQ(1)));
    Series upow = Series::exact(Poly::constant(GQ(1)));
    Rat fact(1);
    for (int k = 1; k <= ord; ++k) {
        upow = (upow * *this).truncated(ord);
        if (upow.is_zero()) break;
        fact *= k;
        acc += upow * GQ(Rat(1) / fact);
    }
    return Series(acc.poly(), ord);
}

std::string Series::str() const {
    if (is_exact()) return p_.str();
    return p_.str() + " + O(" + std::to_string(order_ + 1) + ")";
}

std::vector<Series> invert_map(const std::vector<Series>& comps,
                               const std::vector<std::string>& vars,
                               int order) {
    const std::size_t k = vars.size();
    if (comps.size() != k) throw std::invalid_argument("invert_map: size mismatch");
    // linear part L, must be invertible
    Mat L(k, std::vector<GQ>(k, GQ(0)));
    for (std::size_t i = 0; i < k; ++i) {
        if (!comps[i].constant_term().is_zero())
            throw std::domain_error("invert_map: nonzero constant term");
        for (std::size_t j = 0; j < k; ++j)
            L[i][j] = comps[i].poly().coeff({vars[j]}, {1});
    }
    Mat Linv = mat_inverse(L);  // throws if singular
    // Newton: psi <- psi - Linv (phi(psi) - id), doubling correct order
    std::vector<Series> psi(k);
    for (std::size_t i = 0; i < k; ++i) {
        Poly lin;
        for (std::size_t j = 0; j < k; ++j)
            lin += Poly::var(vars[j]) * Linv[i][j];
        psi[i] = Series(lin, order);
    }
    // fixed-point correction gains at least one order per pass
    for (int pass = 0; pass <= order; ++pass) {
        std::map<std::string, Series> sub;
        for (std::size_t j = 0; j < k; ++j) sub.emplace(vars[j], psi[j]);
        std::vector<Series> defect(k);
        bool clean = true;
        for (std::size_t i = 0; i < k; ++i) {
            defect[i] = comps[i].subst(sub) - Series::exact(Poly::var(vars[i]));
            defect[i] = defect[i].truncated(order);
            if (!defect[i].is_zero()) clean = false;
        }
        if (clean) break;
        for (std::size_t i = 0; i < k; ++i) {
            Series corr = Series::zero(order);
            for (std::size_t j = 0; j < k; ++j)
                corr += defect[j] * Linv[i][j];
            psi[i] = (psi[i] - corr).truncated(order);
        }
    }
    for (auto& s : psi) s = Series(s.poly(), order);
    return psi;
}

}  // namespace cr
