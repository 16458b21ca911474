#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cr/rational.hpp"

namespace cr {

/// Exponent vector, parallel to the owning polynomial's variable list.
using Mono = std::vector<int>;

/// Graded lexicographic order: total degree first, then lex on exponents.
/// Keeping terms sorted by degree lets truncated multiplication cut early.
struct GradedLex {
    bool operator()(const Mono& a, const Mono& b) const;
};

int mono_degree(const Mono& m);

/// Sparse multivariate polynomial over the Gaussian rationals.
///
/// Each Poly owns an ordered (lexicographically sorted) list of variable
/// names; binary operations merge the two lists and remap exponents, so
/// polynomials over different variable sets combine freely.  No zero
/// coefficient is ever stored.
class Poly {
  public:
    using Terms = std::map<Mono, GQ, GradedLex>;

    Poly() = default;
    static Poly constant(const GQ& c);
    static Poly var(const std::string& name);
    /// c * prod vars[i]^exps[i]
    static Poly term(const GQ& c, const std::vector<std::string>& vars,
                     const Mono& exps);

    const std::vector<std::string>& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GQ constant_term() const;
    std::size_t term_count() const { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    int degree_in(const std::string& v) const;
    int low_degree() const;  // minimal total degree of a term; -1 if zero

    GQ coeff(const std::vector<std::string>& vars, const Mono& exps) const;
    bool depends_on(const std::string& v) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const GQ& c) const;
    Poly pow(int k) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly& operator+=(const Poly& o) { return add_in_place(o, false); }
    Poly& operator-=(const Poly& o) { return add_in_place(o, true); }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    /// Multiplication dropping every product term of total degree > cap.
    Poly mul_truncated(const Poly& o, int cap) const;
    /// Drop all terms of total degree > cap.
    Poly truncated(int cap) const;
    /// Keep only terms of total degree == k.
    Poly homogeneous_part(int k) const;

    Poly derivative(const std::string& v) const;
    /// Coefficient-wise complex conjugation; exponents untouched.
    Poly bar() const;

    /// Substitute variables by polynomials; unmapped variables persist.
    Poly subst(const std::map<std::string, Poly>& map) const;
    /// Substitute variables by values; unmapped variables persist.
    Poly eval_partial(const std::map<std::string, GQ>& point) const;
    /// Full evaluation; missing variables default to 0.
    GQ eval(const std::map<std::string, GQ>& point) const;
    Poly rename(const std::map<std::string, std::string>& names) const;

    /// Restrict the variable list to those actually appearing.
    Poly compress() const;
    /// View this polynomial over a larger variable set.
    Poly with_vars(const std::vector<std::string>& vars) const;

    /// Divide exactly; throws if the division leaves a remainder.
    Poly exact_div(const Poly& d) const;
    /// Largest monomial dividing every term (content in the monomial sense).
    Poly monomial_content() const;
    Poly div_monomial_content() const;
    /// Leading term under graded lex (largest).
    std::pair<Mono, GQ> leading_term() const;
    /// Scale so the graded-lex leading coefficient becomes 1.
    Poly monic() const;

    /// Collect coefficients by the exponents of a subset of variables:
    /// returns map from that subset's exponent vector to the cofactor poly.
    std::map<Mono, Poly> collect(const std::vector<std::string>& sub) const;

    std::string str() const;

  private:
    std::vector<std::string> vars_;  // sorted
    Terms terms_;

    void insert_term(const Mono& m, const GQ& c);
    Poly& add_in_place(const Poly& o, bool subtract);
    friend Poly merge_apply(const Poly& a, const Poly& b, bool subtract);
    friend std::pair<Poly, Poly> align(const Poly& a, const Poly& b);
};

inline Poly operator*(const GQ& c, const Poly& p) { return p * c; }

/// Convenience: x^k as a Poly in one variable.
Poly var_pow(const std::string& name, int k);

}  // namespace cr
