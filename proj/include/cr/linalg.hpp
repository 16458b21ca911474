#pragma once

#include <vector>

#include "cr/poly.hpp"

namespace cr {

using Mat = std::vector<std::vector<GQ>>;
using Vec = std::vector<GQ>;

std::size_t mat_rank(Mat m);
GQ mat_det(Mat m);
Mat mat_inverse(const Mat& m);  // throws std::domain_error if singular
Mat mat_mul(const Mat& a, const Mat& b);

/// Basis of the solution space of m x = 0 (columns = unknowns).
std::vector<Vec> mat_kernel(const Mat& m);

/// One solution of m x = b, if any.
std::optional<Vec> mat_solve(const Mat& m, const Vec& b);

/// Incremental exact span over sparse vectors with ordered keys.
/// add() reduces against the held basis and keeps the vector when it is
/// independent; contains() tests membership without inserting.
template <typename Key>
class IncrementalSpan {
  public:
    using SVec = std::map<Key, GQ>;

    bool contains(SVec v) const { return reduce(v).empty(); }
    bool add(SVec v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        const auto& [k, c] = *v.begin();
        GQ inv = c.inverse();
        for (auto& [key, val] : v) val *= inv;
        basis_.emplace(v.begin()->first, std::move(v));
        return true;
    }
    std::size_t dim() const { return basis_.size(); }

  private:
    // basis rows keyed by leading key, leading coefficient 1
    std::map<Key, SVec> basis_;

    SVec reduce(SVec v) const {
        for (auto it = v.begin(); it != v.end();) {
            auto b = basis_.find(it->first);
            if (b == basis_.end()) { ++it; continue; }
            GQ f = it->second;
            for (const auto& [k, c] : b->second) {
                auto [pos, fresh] = v.try_emplace(k, GQ(0));
                pos->second -= f * c;
                if (pos->second.is_zero()) v.erase(pos);
            }
            it = v.begin();  // leading entries may have shifted
        }
        return v;
    }
};

/// Fraction-free (Bareiss) determinant of a polynomial matrix.
Poly poly_det(std::vector<std::vector<Poly>> m);

/// Rank of a polynomial matrix over the fraction field, by fraction-free
/// elimination with full pivoting.  Exact.
std::size_t poly_rank(std::vector<std::vector<Poly>> m);

}  // namespace cr
