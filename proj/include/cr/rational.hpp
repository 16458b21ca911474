#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace cr {

using Rat = mpq_class;

Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& r);

/// Gaussian rational a + b*i with exact components.  GMP keeps every
/// component in lowest terms with positive denominator.
struct GQ {
    Rat re, im;

    GQ() : re(0), im(0) {}
    GQ(long n) : re(n), im(0) {}
    GQ(const Rat& r) : re(r), im(0) { re.canonicalize(); }
    GQ(const Rat& r, const Rat& i) : re(r), im(i) {
        re.canonicalize();
        im.canonicalize();
    }
    GQ(long n, long d) : re(Rat(n, d)), im(0) { re.canonicalize(); }

    static GQ i() { return GQ(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GQ conj() const { return GQ(re, -im); }
    Rat norm2() const { return re * re + im * im; }

    GQ operator-() const { return GQ(-re, -im); }
    GQ operator+(const GQ& o) const { return GQ(re + o.re, im + o.im); }
    GQ operator-(const GQ& o) const { return GQ(re - o.re, im - o.im); }
    GQ operator*(const GQ& o) const {
        return GQ(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    GQ inverse() const {
        if (is_zero()) throw std::domain_error("division by zero");
        Rat n = norm2();
        return GQ(re / n, -im / n);
    }
    GQ operator/(const GQ& o) const { return *this * o.inverse(); }

    GQ& operator+=(const GQ& o) { re += o.re; im += o.im; return *this; }
    GQ& operator-=(const GQ& o) { re -= o.re; im -= o.im; return *this; }
    GQ& operator*=(const GQ& o) { *this = *this * o; return *this; }

    bool operator==(const GQ& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GQ& o) const { return !(*this == o); }
    // ordering is structural (re, then im); used for map keys only
    bool operator<(const GQ& o) const {
        int c = cmp(re, o.re);
        if (c != 0) return c < 0;
        return cmp(im, o.im) < 0;
    }

    std::string str() const;
};

inline GQ operator*(const Rat& r, const GQ& g) { return GQ(r) * g; }
inline GQ operator*(long n, const GQ& g) { return GQ(n) * g; }

/// Parses "3", "-1/2", "i", "-2i", "1/2i" (the latter meaning (1/2)*i).
GQ gq_from_string(const std::string& s);

/// Deterministic source of random rationals and points.  Every sampling
/// decision in the library flows through one of these, seeded once at the
/// CLI boundary, so reports are reproducible.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    /// Uniform numerator in [-bound, bound], denominator in [1, bound].
    Rat rat(long bound = 1000000);
    /// Small rational, handy for series jets where blowup matters.
    Rat small_rat(long bound = 7);
    GQ gq(long bound = 1000000);
    GQ small_gq(long bound = 7);
    std::uint64_t raw() { return eng_(); }

  private:
    std::mt19937_64 eng_;
};

}  // namespace cr
