#pragma once

#include "cr/poly.hpp"

namespace cr {

/// Order marker for exact (untruncated polynomial) data.
inline constexpr int kExact = 1 << 28;

/// A polynomial jet: terms of total degree <= order are known, higher
/// degrees are unknown (not zero).  order == kExact means the carried
/// polynomial is exact and no information is missing.
///
/// Arithmetic propagates the minimum order of the operands; results never
/// report coefficients beyond what the inputs determine.
class Series {
  public:
    Series() : order_(kExact) {}
    Series(const Poly& p, int order) : p_(p.truncated(std::min(order, kExact))),
                                       order_(order) {
        if (order_ >= kExact) { order_ = kExact; p_ = p; }
    }
    static Series exact(const Poly& p) { return Series(p, kExact); }
    static Series zero(int order) { return Series(Poly(), order); }

    const Poly& poly() const { return p_; }
    int order() const { return order_; }
    bool is_exact() const { return order_ == kExact; }
    bool is_zero() const { return p_.is_zero(); }
    GQ constant_term() const { return p_.constant_term(); }

    Series operator-() const { return Series(-p_, order_); }
    Series operator+(const Series& o) const {
        return Series(p_ + o.p_, std::min(order_, o.order_));
    }
    Series operator-(const Series& o) const {
        return Series(p_ - o.p_, std::min(order_, o.order_));
    }
    Series operator*(const Series& o) const {
        int ord = std::min(order_, o.order_);
        return Series(ord == kExact ? p_ * o.p_ : p_.mul_truncated(o.p_, ord),
                      ord);
    }
    Series operator*(const GQ& c) const { return Series(p_ * c, order_); }
    Series operator+(const Poly& o) const { return *this + Series::exact(o); }
    Series operator-(const Poly& o) const { return *this - Series::exact(o); }
    Series operator*(const Poly& o) const { return *this * Series::exact(o); }
    Series& operator+=(const Series& o) {
        int ord = std::min(order_, o.order());
        p_ += o.p_;
        if (ord != order_) { order_ = ord; p_ = p_.truncated(ord); }
        return *this;
    }
    Series& operator-=(const Series& o) {
        int ord = std::min(order_, o.order());
        p_ -= o.p_;
        if (ord != order_) { order_ = ord; p_ = p_.truncated(ord); }
        return *this;
    }
    Series& operator*=(const Series& o) { *this = *this * o; return *this; }

    Series pow(int k) const;
    Series truncated(int cap) const {
        return Series(p_.truncated(cap), std::min(order_, cap));
    }
    Series derivative(const std::string& v) const {
        // degree <= order known  =>  derivative known to order-1
        return Series(p_.derivative(v), is_exact() ? kExact : order_ - 1);
    }
    Series bar() const { return Series(p_.bar(), order_); }
    Series rename(const std::map<std::string, std::string>& n) const {
        return Series(p_.rename(n), order_);
    }

    /// Composition.  Every substituted series must either have zero
    /// constant term or this series must be exact (finite polynomial).
    Series subst(const std::map<std::string, Series>& map) const;
    Series eval_partial(const std::map<std::string, GQ>& point) const {
        return Series(p_.eval_partial(point), order_);
    }
    GQ eval(const std::map<std::string, GQ>& point) const {
        return p_.eval(point);
    }

    /// 1/this; constant term must be nonzero.
    Series inverse(int order) const;
    /// exp(this); constant term must be zero.
    Series exp(int order) const;

    /// Agreement up to the common order.
    bool agrees(const Series& o) const {
        int ord = std::min(order_, o.order_);
        return (p_ - o.p_).truncated(ord == kExact ? p_.degree() + o.p_.degree() + 1
                                                   : ord).is_zero();
    }

    std::string str() const;

  private:
    Poly p_;
    int order_;
};

inline Series operator*(const GQ& c, const Series& s) { return s * c; }

/// compose(f, {var -> g}) with the truncation-correctness contract.
Series compose(const Series& f, const std::map<std::string, Series>& subs);

/// Invert a formal self-map of C^k given by `comps` in variables `vars`
/// (zero constant terms, invertible linear part): returns the series of the
/// inverse map in the same variables, to order `order`.
std::vector<Series> invert_map(const std::vector<Series>& comps,
                               const std::vector<std::string>& vars,
                               int order);

}  // namespace cr
