#pragma once

// Sparse multivariate Laurent polynomials in x_1..x_n over QPoly
// coefficients, and the target-directed pruned product that makes
// single-coefficient extraction cheap enough for n = 6 work.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "qdyson/errors.hpp"
#include "qdyson/qpoly.hpp"

namespace qdyson {

// Exponent vector of a monomial x_1^{e_1} ... x_n^{e_n}.
struct ExponentVector {
    std::vector<int> e;

    ExponentVector() = default;
    explicit ExponentVector(int n) : e(static_cast<size_t>(n), 0) {}
    ExponentVector(std::initializer_list<int> init) : e(init) {}
    explicit ExponentVector(std::vector<int> v) : e(std::move(v)) {}

    int size() const { return static_cast<int>(e.size()); }
    int operator[](int i) const { return e[static_cast<size_t>(i)]; }
    int& operator[](int i) { return e[static_cast<size_t>(i)]; }

    int sum() const {
        int s = 0;
        for (int v : e) s += v;
        return s;
    }

    bool operator==(const ExponentVector& o) const { return e == o.e; }
    bool operator!=(const ExponentVector& o) const { return e != o.e; }
    bool operator<(const ExponentVector& o) const { return e < o.e; }

    friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
        if (a.e.size() != b.e.size())
            throw InvalidInput("ExponentVector: mismatched lengths");
        ExponentVector r = a;
        for (size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
        return r;
    }

    // "x1^2*x2^-1"; empty string for the constant monomial.
    std::string monomial_str() const {
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first) os << '*';
            os << 'x' << (i + 1);
            if (e[i] != 1) os << '^' << e[i];
            first = false;
        }
        return os.str();
    }
};

struct ExponentVectorHash {
    size_t operator()(const ExponentVector& v) const {
        // FNV-1a over the exponent words
        uint64_t h = 1469598103934665603ull;
        for (int x : v.e) {
            h ^= static_cast<uint64_t>(static_cast<uint32_t>(x));
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

// One factor (1 - q^qexp * x_num/x_den) of a Dyson-style product.
// Variables are 1-based; qexp is 0 throughout in classical mode.
struct BinomialFactor {
    int num_var;
    int den_var;
    int qexp;

    BinomialFactor(int num, int den, int e) : num_var(num), den_var(den), qexp(e) {
        if (num == den) throw InvalidInput("BinomialFactor: num_var == den_var");
        if (num < 1 || den < 1) throw InvalidInput("BinomialFactor: variables are 1-based");
        if (e < 0) throw InvalidInput("BinomialFactor: qexp must be nonnegative");
    }
};

class LaurentPoly {
public:
    using TermMap = std::map<ExponentVector, QPoly>;

    explicit LaurentPoly(int n) : n_(n) {
        if (n < 1) throw InvalidInput("LaurentPoly: need n >= 1");
    }

    static LaurentPoly constant(int n, QPoly c) {
        LaurentPoly p(n);
        if (!c.is_zero()) p.terms_.emplace(ExponentVector(n), std::move(c));
        return p;
    }

    static LaurentPoly from_factor(int n, const BinomialFactor& f) {
        if (f.num_var > n || f.den_var > n)
            throw InvalidInput("from_factor: variable index exceeds n");
        LaurentPoly p = constant(n, QPoly::one());
        ExponentVector v(n);
        v[f.num_var - 1] = 1;
        v[f.den_var - 1] = -1;
        p.terms_.emplace(std::move(v), QPoly::monomial(-1, f.qexp));
        return p;
    }

    int n() const { return n_; }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const ExponentVector& v, const QPoly& c) {
        if (v.size() != n_) throw InvalidInput("add_term: exponent vector length != n");
        if (c.is_zero()) return;
        auto it = terms_.find(v);
        if (it == terms_.end()) {
            terms_.emplace(v, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    QPoly coeff(const ExponentVector& v) const {
        if (v.size() != n_) throw InvalidInput("coeff: exponent vector length != n");
        auto it = terms_.find(v);
        return it == terms_.end() ? QPoly() : it->second;
    }

    LaurentPoly operator*(const LaurentPoly& o) const {
        if (n_ != o.n_) throw InvalidInput("LaurentPoly multiplication: mismatched n");
        LaurentPoly r(n_);
        for (const auto& [va, ca] : terms_)
            for (const auto& [vb, cb] : o.terms_) r.add_term(va + vb, ca * cb);
        return r;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) {
        *this = *this * o;
        return *this;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.n_ != b.n_) throw InvalidInput("LaurentPoly addition: mismatched n");
        LaurentPoly r = a;
        for (const auto& [v, c] : b.terms_) r.add_term(v, c);
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [v, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            const std::string mono = v.monomial_str();
            const bool simple = c.term_count() == 1 && c.coeff(c.low_degree()) > 0;
            if (mono.empty()) {
                os << (simple ? c.str() : "(" + c.str() + ")");
            } else if (c == QPoly::one()) {
                os << mono;
            } else if (simple) {
                os << c.str() << '*' << mono;
            } else {
                os << '(' << c.str() << ")*" << mono;
            }
        }
        return os.str();
    }

private:
    int n_;
    TermMap terms_;
};

// Per-variable min/max total exponent deltas achievable by the factors:
// each factor contributes 0 or (+1 to num_var, -1 to den_var).
struct VarBounds {
    std::vector<int> lo, hi;
};

inline VarBounds support_bounds(int n, const std::vector<BinomialFactor>& factors) {
    VarBounds b;
    b.lo.assign(static_cast<size_t>(n), 0);
    b.hi.assign(static_cast<size_t>(n), 0);
    for (const auto& f : factors) {
        if (f.num_var > n || f.den_var > n)
            throw InvalidInput("support_bounds: variable index exceeds n");
        b.hi[static_cast<size_t>(f.num_var - 1)] += 1;
        b.lo[static_cast<size_t>(f.den_var - 1)] -= 1;
    }
    return b;
}

struct PrunedProductOptions {
    // Group factors by variable pair, pairs in lexicographic order, so
    // variables are retired as early as possible. Correctness does not
    // depend on the order; this only shrinks the live frontier.
    bool retire_order = true;
    size_t max_frontier_terms = 5'000'000;
};

// Coefficient of x^target in prod factors, computed factor by factor
// with infeasible partial terms deleted after every step. A partial
// exponent vector u survives step k iff for every variable the residual
// target - u is attainable from the factors not yet consumed.
inline QPoly pruned_product(int n, std::vector<BinomialFactor> factors,
                            const ExponentVector& target,
                            const PrunedProductOptions& opts = {}) {
    if (target.size() != n) throw InvalidInput("pruned_product: target length != n");
    if (opts.retire_order) {
        std::stable_sort(factors.begin(), factors.end(),
                         [](const BinomialFactor& a, const BinomialFactor& b) {
                             const auto key = [](const BinomialFactor& f) {
                                 return std::tuple(std::min(f.num_var, f.den_var),
                                                   std::max(f.num_var, f.den_var), f.qexp);
                             };
                             return key(a) < key(b);
                         });
    }
    const size_t m = factors.size();

    // suffix bounds: what factors k..m-1 can still contribute per variable
    std::vector<VarBounds> suffix(m + 1);
    suffix[m].lo.assign(static_cast<size_t>(n), 0);
    suffix[m].hi.assign(static_cast<size_t>(n), 0);
    for (size_t k = m; k-- > 0;) {
        suffix[k] = suffix[k + 1];
        suffix[k].hi[static_cast<size_t>(factors[k].num_var - 1)] += 1;
        suffix[k].lo[static_cast<size_t>(factors[k].den_var - 1)] -= 1;
    }

    const auto feasible = [&](const ExponentVector& u, size_t k) {
        const VarBounds& b = suffix[k];
        for (int v = 0; v < n; ++v) {
            const int need = target[v] - u[v];
            if (need < b.lo[static_cast<size_t>(v)] || need > b.hi[static_cast<size_t>(v)])
                return false;
        }
        return true;
    };

    using Frontier = std::unordered_map<ExponentVector, QPoly, ExponentVectorHash>;
    Frontier cur;
    if (!feasible(ExponentVector(n), 0)) return QPoly();
    cur.emplace(ExponentVector(n), QPoly::one());

    for (size_t k = 0; k < m; ++k) {
        const BinomialFactor& f = factors[k];
        if (f.num_var > n || f.den_var > n)
            throw InvalidInput("pruned_product: variable index exceeds n");
        Frontier next;
        next.reserve(cur.size() * 2);
        for (auto& [u, c] : cur) {
            ExponentVector u2 = u;
            u2[f.num_var - 1] += 1;
            u2[f.den_var - 1] -= 1;
            if (feasible(u2, k + 1)) {
                auto [it, fresh] = next.try_emplace(std::move(u2));
                it->second.add_shifted_negated(c, f.qexp);
                if (it->second.is_zero()) next.erase(it);
            }
            if (feasible(u, k + 1)) {
                auto [it, fresh] = next.try_emplace(u);
                if (fresh) {
                    it->second = std::move(c);
                } else {
                    it->second += c;
                    if (it->second.is_zero()) next.erase(it);
                }
            }
        }
        cur = std::move(next);
        if (cur.size() > opts.max_frontier_terms)
            throw SizeLimitExceeded("pruned_product: frontier exceeds " +
                                    std::to_string(opts.max_frontier_terms) + " terms");
        if (cur.empty()) return QPoly();
    }
    auto it = cur.find(target);
    return it == cur.end() ? QPoly() : it->second;
}

}  // namespace qdyson
