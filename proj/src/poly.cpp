#include "cr/poly.hpp"

#include <algorithm>
#include <sstream>

namespace cr {

int mono_degree(const Mono& m) {
    int s = 0;
    for (int e : m) s += e;
    return s;
}

bool GradedLex::operator()(const Mono& a, const Mono& b) const {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    return a < b;
}

void Poly::insert_term(const Mono& m, const GQ& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::constant(const GQ& c) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace(Mono{}, c);
    return p;
}

Poly Poly::var(const std::string& name) {
    Poly p;
    p.vars_ = {name};
    p.terms_.emplace(Mono{1}, GQ(1));
    return p;
}

Poly Poly::term(const GQ& c, const std::vector<std::string>& vars,
                const Mono& exps) {
    if (vars.size() != exps.size())
        throw std::invalid_argument("term: vars/exps mismatch");
    Poly p = constant(c);
    for (std::size_t i = 0; i < vars.size(); ++i)
        p *= var_pow(vars[i], exps[i]);
    return p;
}

Poly var_pow(const std::string& name, int k) {
    if (k == 0) return Poly::constant(GQ(1));
    return Poly::var(name).pow(k);
}

bool Poly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
}

GQ Poly::constant_term() const {
    Mono z(vars_.size(), 0);
    auto it = terms_.find(z);
    return it == terms_.end() ? GQ(0) : it->second;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return mono_degree(terms_.rbegin()->first);
}

int Poly::low_degree() const {
    if (terms_.empty()) return -1;
    return mono_degree(terms_.begin()->first);
}

int Poly::degree_in(const std::string& v) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) return 0;
    std::size_t idx = it - vars_.begin();
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[idx]);
    return d;
}

bool Poly::depends_on(const std::string& v) const { return degree_in(v) > 0; }

GQ Poly::coeff(const std::vector<std::string>& vars, const Mono& exps) const {
    Mono m(vars_.size(), 0);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (exps[i] == 0) continue;
        auto it = std::find(vars_.begin(), vars_.end(), vars[i]);
        if (it == vars_.end()) return GQ(0);
        m[it - vars_.begin()] = exps[i];
    }
    auto it = terms_.find(m);
    return it == terms_.end() ? GQ(0) : it->second;
}

// Rewrites both polynomials over the union of their variable lists.
std::pair<Poly, Poly> align(const Poly& a, const Poly& b) {
    if (a.vars_ == b.vars_) return {a, b};
    std::vector<std::string> u;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(),
                   b.vars_.end(), std::back_inserter(u));
    return {a.with_vars(u), b.with_vars(u)};
}

Poly Poly::with_vars(const std::vector<std::string>& vars) const {
    // position of each old variable inside the new list
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::lower_bound(vars.begin(), vars.end(), vars_[i]);
        if (it == vars.end() || *it != vars_[i])
            throw std::invalid_argument("with_vars: missing variable " + vars_[i]);
        pos[i] = it - vars.begin();
    }
    Poly r;
    r.vars_ = vars;
    for (const auto& [m, c] : terms_) {
        Mono nm(vars.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) nm[pos[i]] = m[i];
        r.terms_.emplace(std::move(nm), c);
    }
    return r;
}

Poly Poly::compress() const {
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) used[i] = true;
    std::vector<std::string> nv;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) { nv.push_back(vars_[i]); keep.push_back(i); }
    Poly r;
    r.vars_ = nv;
    for (const auto& [m, c] : terms_) {
        Mono nm(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i) nm[i] = m[keep[i]];
        r.terms_.emplace(std::move(nm), c);
    }
    return r;
}

Poly merge_apply(const Poly& a, const Poly& b, bool subtract) {
    auto [x, y] = align(a, b);
    Poly r = x;
    for (const auto& [m, c] : y.terms_) r.insert_term(m, subtract ? -c : c);
    return r;
}

Poly Poly::operator+(const Poly& o) const { return merge_apply(*this, o, false); }

Poly& Poly::add_in_place(const Poly& o, bool subtract) {
    if (vars_ == o.vars_) {
        for (const auto& [m, c] : o.terms_) insert_term(m, subtract ? -c : c);
        return *this;
    }
    *this = merge_apply(*this, o, subtract);
    return *this;
}
Poly Poly::operator-(const Poly& o) const { return merge_apply(*this, o, true); }
Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly Poly::operator*(const GQ& c) const {
    if (c.is_zero()) return Poly();
    Poly r = *this;
    for (auto& [m, k] : r.terms_) k *= c;
    return r;
}

Poly Poly::mul_truncated(const Poly& o, int cap) const {
    auto [x, y] = align(*this, o);
    Poly r;
    r.vars_ = x.vars_;
    for (const auto& [ma, ca] : x.terms_) {
        int da = mono_degree(ma);
        if (cap >= 0 && da > cap) break;  // graded order: no smaller follows
        for (const auto& [mb, cb] : y.terms_) {
            if (cap >= 0 && da + mono_degree(mb) > cap) break;
            Mono m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.insert_term(m, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const Poly& o) const { return mul_truncated(o, -1); }

Poly Poly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    Poly r = Poly::constant(GQ(1));
    Poly base = *this;
    while (k > 0) {
        if (k & 1) r *= base;
        base = (k >>= 1) ? base * base : base;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    auto [x, y] = align(*this, o);
    return x.terms_ == y.terms_;
}

Poly Poly::truncated(int cap) const {
    Poly r;
    r.vars_ = vars_;
    for (const auto& [m, c] : terms_) {
        if (mono_degree(m) > cap) break;
        r.terms_.emplace(m, c);
    }
    return r;
}

Poly Poly::homogeneous_part(int k) const {
    Poly r;
    r.vars_ = vars_;
    for (const auto& [m, c] : terms_)
        if (mono_degree(m) == k) r.terms_.emplace(m, c);
    return r;
}

Poly Poly::derivative(const std::string& v) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) return Poly();
    std::size_t idx = it - vars_.begin();
    Poly r;
    r.vars_ = vars_;
    for (const auto& [m, c] : terms_) {
        if (m[idx] == 0) continue;
        Mono nm = m;
        nm[idx] -= 1;
        r.insert_term(nm, GQ(Rat(m[idx])) * c);
    }
    return r;
}

Poly Poly::bar() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = c.conj();
    return r;
}

Poly Poly::subst(const std::map<std::string, Poly>& map) const {
    // split variables into substituted and kept
    std::vector<const Poly*> repl(vars_.size(), nullptr);
    bool any = false;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = map.find(vars_[i]);
        if (it != map.end()) { repl[i] = &it->second; any = true; }
    }
    if (!any) return *this;
    Poly acc;
    // power cache per substituted variable
    std::map<std::size_t, std::vector<Poly>> pows;
    auto power = [&](std::size_t i, int k) -> const Poly& {
        auto& v = pows[i];
        if (v.empty()) v.push_back(Poly::constant(GQ(1)));
        while ((int)v.size() <= k) v.push_back(v.back() * (*repl[i]));
        return v[k];
    };
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (repl[i]) t *= power(i, m[i]);
            else t *= var_pow(vars_[i], m[i]);
        }
        acc += t;
    }
    return acc;
}

Poly Poly::eval_partial(const std::map<std::string, GQ>& point) const {
    std::map<std::string, Poly> m;
    for (const auto& [k, v] : point) m.emplace(k, Poly::constant(v));
    return subst(m);
}

GQ Poly::eval(const std::map<std::string, GQ>& point) const {
    GQ acc(0);
    for (const auto& [m, c] : terms_) {
        GQ t = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto it = point.find(vars_[i]);
            GQ v = it == point.end() ? GQ(0) : it->second;
            for (int k = 0; k < m[i]; ++k) t *= v;
            if (t.is_zero()) break;
        }
        acc += t;
    }
    return acc;
}

Poly Poly::rename(const std::map<std::string, std::string>& names) const {
    std::map<std::string, Poly> m;
    for (const auto& [from, to] : names) m.emplace(from, Poly::var(to));
    return subst(m);
}

std::pair<Mono, GQ> Poly::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

Poly Poly::monic() const {
    if (terms_.empty()) return *this;
    return *this * leading_term().second.inverse();
}

Poly Poly::exact_div(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    auto [num0, den] = align(*this, d);
    Poly num = num0, quot;
    quot.vars_ = num.vars_;
    auto [lm, lc] = den.leading_term();
    GQ lci = lc.inverse();
    while (!num.terms_.empty()) {
        auto [nm, nc] = num.leading_term();
        Mono q(nm.size());
        for (std::size_t i = 0; i < nm.size(); ++i) {
            q[i] = nm[i] - lm[i];
            if (q[i] < 0) throw std::domain_error("exact_div: not divisible");
        }
        GQ qc = nc * lci;
        Poly qt;
        qt.vars_ = num.vars_;
        qt.terms_.emplace(q, qc);
        quot += qt;
        num -= qt * den;
    }
    return quot;
}

Poly Poly::monomial_content() const {
    if (terms_.empty()) return Poly::constant(GQ(1));
    Mono g = terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], m[i]);
    Poly r;
    r.vars_ = vars_;
    r.terms_.emplace(g, GQ(1));
    return r;
}

Poly Poly::div_monomial_content() const {
    if (terms_.empty()) return *this;
    return exact_div(monomial_content());
}

std::map<Mono, Poly> Poly::collect(const std::vector<std::string>& sub) const {
    std::vector<int> subidx;  // index in vars_ for each sub variable; -1 absent
    for (const auto& s : sub) {
        auto it = std::find(vars_.begin(), vars_.end(), s);
        subidx.push_back(it == vars_.end() ? -1 : int(it - vars_.begin()));
    }
    std::vector<std::string> rest;
    std::vector<std::size_t> restidx;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (std::find(sub.begin(), sub.end(), vars_[i]) == sub.end()) {
            rest.push_back(vars_[i]);
            restidx.push_back(i);
        }
    }
    std::map<Mono, Poly> out;
    for (const auto& [m, c] : terms_) {
        Mono key(sub.size(), 0);
        for (std::size_t i = 0; i < sub.size(); ++i)
            if (subidx[i] >= 0) key[i] = m[subidx[i]];
        Mono rm(rest.size());
        for (std::size_t i = 0; i < rest.size(); ++i) rm[i] = m[restidx[i]];
        auto it = out.find(key);
        if (it == out.end()) {
            Poly p;
            p.vars_ = rest;
            p.terms_.emplace(rm, c);
            out.emplace(key, std::move(p));
        } else {
            it->second.insert_term(rm, c);
        }
    }
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print high degree first for readability
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = c.str();
        if (!first) os << " + ";
        bool unit = (cs == "1") && mono_degree(m) > 0;
        bool negunit = (cs == "-1") && mono_degree(m) > 0;
        if (negunit) os << "-";
        else if (!unit) {
            if (c.im != 0 && c.re != 0) os << "(" << cs << ")";
            else os << cs;
            if (mono_degree(m) > 0) os << "*";
        }
        bool firstv = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!firstv) os << "*";
            os << vars_[i];
            if (m[i] > 1) os << "^" << m[i];
            firstv = false;
        }
        first = false;
    }
    return os.str();
}

}  // namespace cr
