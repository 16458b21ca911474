#include "cr/finitetype.hpp"

#include <algorithm>

namespace cr {

std::map<std::string, GQ> model_origin(const NormalModel& m) {
    std::map<std::string, GQ> env;
    for (const auto& v : model_coords(m)) env[v] = GQ(0);
    return env;
}

namespace {

struct Word {
    ModelField field;
    int length;
    std::string word;
};

using JetKey = std::pair<int, Mono>;  // (component index, monomial)

// jet fingerprint of a field over a shared variable ordering
std::map<JetKey, GQ> jet_of(const ModelField& f,
                            const std::vector<std::string>& sorted_vars) {
    std::map<JetKey, GQ> jet;
    for (std::size_t i = 0; i < f.comp.size(); ++i) {
        Poly q = f.comp[i].poly().with_vars(sorted_vars);
        for (const auto& [mono, c] : q.terms()) jet[{int(i), mono}] = c;
    }
    return jet;
}

ModelField bracket(const NormalModel& m, const ModelField& X, const ModelField& Y) {
    auto coords = model_coords(m);
    ModelField out;
    out.comp.assign(coords.size(), Series::zero(kExact));
    for (std::size_t i = 0; i < coords.size(); ++i) {
        Series acc = Series::zero(kExact);
        for (std::size_t j = 0; j < coords.size(); ++j) {
            if (!X.comp[j].is_zero() && !Y.comp[i].is_zero())
                acc += X.comp[j] * Y.comp[i].derivative(coords[j]);
            if (!Y.comp[j].is_zero() && !X.comp[i].is_zero())
                acc -= Y.comp[j] * X.comp[i].derivative(coords[j]);
        }
        out.comp[i] = acc;
    }
    return out;
}

std::map<int, GQ> value_at(const ModelField& f, const std::map<std::string, GQ>& at) {
    std::map<int, GQ> v;
    for (std::size_t i = 0; i < f.comp.size(); ++i) {
        if (f.comp[i].order() < 0)
            throw std::domain_error("bracket jet exhausted: raise the model order");
        GQ val = f.comp[i].eval(at);
        if (!val.is_zero()) v[int(i)] = val;
    }
    return v;
}

}  // namespace

TypeReport hormander(const NormalModel& m, const std::map<std::string, GQ>& at,
                     int length_max, const std::optional<Mat>& recombine) {
    TypeReport rep;
    rep.bracket_bound = length_max;
    const int n = m.n(), d = m.d();

    std::vector<ModelField> gen_l = cr_basis(m);
    std::vector<ModelField> gen_lbar = cr_basis_conj(m);
    if (recombine) {
        const Mat& C = *recombine;
        std::vector<ModelField> rl(n), rlb(n);
        for (int i = 0; i < n; ++i) {
            rl[i].label = "L'" + std::to_string(i + 1);
            rlb[i].label = "Lbar'" + std::to_string(i + 1);
            rl[i].comp.assign(2 * m.N(), Series::exact(Poly()));
            rlb[i].comp.assign(2 * m.N(), Series::exact(Poly()));
            for (int j = 0; j < n; ++j)
                for (int c = 0; c < 2 * m.N(); ++c) {
                    rl[i].comp[c] += gen_l[j].comp[c] * C[i][j];
                    rlb[i].comp[c] += gen_lbar[j].comp[c] * C[i][j].conj();
                }
        }
        gen_l = rl;
        gen_lbar = rlb;
    }
    std::vector<Word> gens;
    for (int j = 0; j < n; ++j) gens.push_back({gen_l[j], 1, gen_l[j].label});
    for (int j = 0; j < n; ++j) gens.push_back({gen_lbar[j], 1, gen_lbar[j].label});

    auto allvars = model_coords(m);
    std::sort(allvars.begin(), allvars.end());
    IncrementalSpan<JetKey> jets;      // prunes redundant bracket words
    IncrementalSpan<int> values;       // span of values at the point
    std::vector<Word> kept;
    const int full = 2 * n + d;

    auto consider = [&](Word w) {
        if (!jets.add(jet_of(w.field, allvars))) return;
        if (values.add(value_at(w.field, at))) rep.certificate.push_back(w.word);
        kept.push_back(std::move(w));
    };
    bool order_exhausted = false;
    auto consider_safe = [&](Word w) {
        try {
            consider(std::move(w));
        } catch (const std::domain_error&) {
            order_exhausted = true;  // value unknown at the model order
        }
    };
    for (const auto& g : gens) consider_safe(g);
    rep.dims_by_length.push_back(int(values.dim()));

    // value closure of the kept words under one more bracket
    auto value_closed = [&]() {
        for (std::size_t a = 0; a < kept.size(); ++a)
            for (std::size_t b = a + 1; b < kept.size(); ++b) {
                if (kept[a].length + kept[b].length > length_max + 1) continue;
                ModelField br = bracket(m, kept[a].field, kept[b].field);
                try {
                    if (!values.contains(value_at(br, at))) return false;
                } catch (const std::domain_error&) {
                    return false;  // order exhausted: cannot certify
                }
            }
        return true;
    };

    bool stabilized = false;
    for (int len = 2; len <= length_max; ++len) {
        std::size_t end = kept.size();
        std::vector<Word> fresh;
        for (const auto& g : gens) {
            for (std::size_t i = 0; i < end; ++i) {
                if (kept[i].length != len - 1) continue;
                Word w;
                w.length = len;
                w.word = "[" + g.word + "," + kept[i].word + "]";
                w.field = bracket(m, g.field, kept[i].field);
                fresh.push_back(std::move(w));
            }
        }
        for (auto& w : fresh) consider_safe(std::move(w));
        rep.dims_by_length.push_back(int(values.dim()));
        if ((int)values.dim() == full) break;
        std::size_t L = rep.dims_by_length.size();
        bool flat = L >= 3 && rep.dims_by_length[L - 1] == rep.dims_by_length[L - 2] &&
                    rep.dims_by_length[L - 2] == rep.dims_by_length[L - 3];
        if (flat && value_closed()) { stabilized = true; break; }
    }

    // jumps -> Hormander numbers
    int prev = rep.dims_by_length[0];
    for (std::size_t i = 1; i < rep.dims_by_length.size(); ++i) {
        int cur = rep.dims_by_length[i];
        if (cur > prev) {
            rep.hormander.emplace_back(int(i) + 1, cur - prev);
            for (int t = 0; t < cur - prev; ++t)
                rep.with_multiplicity.push_back(int(i) + 1);
        }
        prev = cur;
    }
    rep.r = int(values.dim()) - 2 * n;
    rep.minimal = (rep.r == d) && !order_exhausted;

    if (!rep.minimal) rep.truncated = !stabilized;
    return rep;
}

MinimalVerdict is_minimal(const NormalModel& m, const std::map<std::string, GQ>& at,
                          int length_max) {
    auto rep = hormander(m, at, length_max);
    MinimalVerdict v;
    v.stable_dim = rep.dims_by_length.back();
    if (rep.minimal) {
        v.verdict = Minimality::Minimal;
        v.certificate = rep.certificate;
    } else if (!rep.truncated) {
        v.verdict = Minimality::NotMinimal;
    } else {
        v.verdict = Minimality::Truncated;
    }
    return v;
}

}  // namespace cr
