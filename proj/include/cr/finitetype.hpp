#pragma once

#include "cr/nondegen.hpp"

namespace cr {

struct TypeReport {
    std::vector<int> dims_by_length;          // span dim at lengths 1..cap
    std::vector<std::pair<int, int>> hormander;  // (mu_j, ell_j)
    std::vector<int> with_multiplicity;       // m_1 <= ... <= m_r
    int r = 0;
    bool minimal = false;
    int bracket_bound = 0;
    bool truncated = false;                   // neither full nor stabilized
    std::vector<std::string> certificate;     // bracket words that grew the span
};

/// Hormander filtration at a diagonal point of the model, from iterated
/// brackets of the CR basis and its conjugate up to the given length.
/// Optional `recombine` replaces the generators L_j by an invertible
/// constant recombination (the conjugates get the conjugate matrix).
TypeReport hormander(const NormalModel& m, const std::map<std::string, GQ>& at,
                     int length_max, const std::optional<Mat>& recombine = {});

enum class Minimality { Minimal, NotMinimal, Truncated };

struct MinimalVerdict {
    Minimality verdict = Minimality::Truncated;
    std::vector<std::string> certificate;  // spanning bracket words if minimal
    int stable_dim = 0;                    // dim of the stabilized span
};

MinimalVerdict is_minimal(const NormalModel& m, const std::map<std::string, GQ>& at,
                          int length_max);

/// Diagonal environment of the model origin.
std::map<std::string, GQ> model_origin(const NormalModel& m);

}  // namespace cr
