#pragma once

// Builders for the Dyson product F_n and its q-analog, single-coefficient
// extraction through the pruned product engine, and the naive
// whole-expansion oracle used as ground truth on small instances.

#include <cstddef>
#include <string>
#include <vector>

#include "qdyson/errors.hpp"
#include "qdyson/laurent.hpp"
#include "qdyson/qpoly.hpp"

namespace qdyson {

enum class Mode { classical, q };

// Size caps are configuration, not constants. Defaults give headroom
// past the n = 6 experiments while keeping runaway jobs bounded.
struct ExpansionLimits {
    int max_n = 8;
    int max_sigma = 30;
    size_t max_frontier_terms = 5'000'000;
    size_t brute_force_term_bound = 1'000'000;
};

struct DysonSpec {
    int n = 0;
    std::vector<int> a;
    Mode mode = Mode::q;

    DysonSpec() = default;
    DysonSpec(int n_, std::vector<int> a_, Mode m) : n(n_), a(std::move(a_)), mode(m) {
        validate();
    }

    int sigma() const {
        int s = 0;
        for (int ai : a) s += ai;
        return s;
    }

    void validate() const {
        if (n < 1) throw InvalidInput("DysonSpec: need n >= 1");
        if (static_cast<int>(a.size()) != n)
            throw InvalidInput("DysonSpec: length of a must equal n");
        for (int ai : a)
            if (ai < 0) throw InvalidInput("DysonSpec: entries of a must be nonnegative");
    }

    void check_limits(const ExpansionLimits& lim) const {
        if (n > lim.max_n)
            throw SizeLimitExceeded("DysonSpec: n = " + std::to_string(n) + " exceeds cap " +
                                    std::to_string(lim.max_n));
        if (sigma() > lim.max_sigma)
            throw SizeLimitExceeded("DysonSpec: sigma = " + std::to_string(sigma()) +
                                    " exceeds cap " + std::to_string(lim.max_sigma));
    }
};

// q mode, pair i<j: (x_i q/x_j; q)_{a_j} contributes (1 - q^e x_i/x_j)
// for e = 1..a_j and (x_j/x_i; q)_{a_i} contributes (1 - q^e x_j/x_i)
// for e = 0..a_i-1 -- the second symbol starts at the q-free factor.
// Classical mode keeps the same multiset with every qexp = 0.
inline std::vector<BinomialFactor> build_factors(const DysonSpec& spec) {
    spec.validate();
    std::vector<BinomialFactor> factors;
    for (int i = 1; i <= spec.n; ++i) {
        for (int j = i + 1; j <= spec.n; ++j) {
            const int ai = spec.a[static_cast<size_t>(i - 1)];
            const int aj = spec.a[static_cast<size_t>(j - 1)];
            if (spec.mode == Mode::q) {
                for (int e = 1; e <= aj; ++e) factors.emplace_back(i, j, e);
                for (int e = 0; e < ai; ++e) factors.emplace_back(j, i, e);
            } else {
                for (int e = 0; e < aj; ++e) factors.emplace_back(i, j, 0);
                for (int e = 0; e < ai; ++e) factors.emplace_back(j, i, 0);
            }
        }
    }
    return factors;
}

// Exact coefficient of x^b in the (q-)Dyson product.
inline QPoly dyson_coeff(const DysonSpec& spec, const ExponentVector& b,
                         const ExpansionLimits& lim = {}) {
    spec.validate();
    spec.check_limits(lim);
    if (b.size() != spec.n) throw InvalidInput("dyson_coeff: length of b must equal n");
    PrunedProductOptions opts;
    opts.max_frontier_terms = lim.max_frontier_terms;
    return pruned_product(spec.n, build_factors(spec), b, opts);
}

// Constant term: extracted, not shortcut through the Dyson theorems --
// the theorems are what the test suites check it against.
inline QPoly constant_term(const DysonSpec& spec, const ExpansionLimits& lim = {}) {
    return dyson_coeff(spec, ExponentVector(spec.n), lim);
}

// Full expansion by naive sequential multiplication, no pruning. Guarded
// by the product of per-pair support sizes, so only small instances run.
inline LaurentPoly brute_force_expand(const DysonSpec& spec, const ExpansionLimits& lim = {}) {
    spec.validate();
    spec.check_limits(lim);
    double estimate = 1.0;
    for (int i = 1; i <= spec.n; ++i)
        for (int j = i + 1; j <= spec.n; ++j) {
            estimate *= 1.0 + spec.a[static_cast<size_t>(i - 1)] + spec.a[static_cast<size_t>(j - 1)];
            if (estimate > static_cast<double>(lim.brute_force_term_bound))
                throw SizeLimitExceeded("brute_force_expand: estimated term count exceeds " +
                                        std::to_string(lim.brute_force_term_bound));
        }
    LaurentPoly p = LaurentPoly::constant(spec.n, QPoly::one());
    for (const auto& f : build_factors(spec)) {
        p *= LaurentPoly::from_factor(spec.n, f);
        if (p.term_count() > lim.max_frontier_terms)
            throw SizeLimitExceeded("brute_force_expand: expansion exceeds term cap");
    }
    return p;
}

}  // namespace qdyson
