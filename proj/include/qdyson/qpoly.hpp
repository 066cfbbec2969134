#pragma once

// Exact univariate polynomials in q over arbitrary-precision integers,
// plus the q-combinatorial constructors ([a]_q, [a]_q!, q-multinomial,
// generalized q-Pochhammer) and the (1-q^c)-product factorizer.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qdyson/errors.hpp"

namespace qdyson {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Sparse polynomial in q with Int coefficients. Canonical: zero
// coefficients are never stored, so operator== on the term map is
// polynomial equality. All arithmetic is exact.
class QPoly {
public:
    QPoly() = default;
    QPoly(Int c) {  // NOLINT: implicit constants are convenient
        if (c != 0) terms_[0] = std::move(c);
    }
    QPoly(int c) : QPoly(Int(c)) {}

    static QPoly monomial(Int c, int exp) {
        if (exp < 0) throw InvalidInput("QPoly exponent must be nonnegative");
        QPoly p;
        if (c != 0) p.terms_[exp] = std::move(c);
        return p;
    }
    static QPoly one() { return QPoly(1); }

    bool is_zero() const { return terms_.empty(); }

    // -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
    int low_degree() const { return terms_.empty() ? -1 : terms_.begin()->first; }

    size_t term_count() const { return terms_.size(); }

    Int coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Int(0) : it->second;
    }

    const std::map<int, Int>& terms() const { return terms_; }

    void add_term(int exp, const Int& c) {
        if (c == 0) return;
        if (exp < 0) throw InvalidInput("QPoly exponent must be nonnegative");
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            terms_.emplace(exp, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    QPoly& operator+=(const QPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    QPoly& operator-=(const QPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    QPoly& operator*=(const QPoly& o) {
        *this = *this * o;
        return *this;
    }

    friend QPoly operator+(QPoly a, const QPoly& b) { a += b; return a; }
    friend QPoly operator-(QPoly a, const QPoly& b) { a -= b; return a; }
    friend QPoly operator-(const QPoly& a) {
        QPoly r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return QPoly();
        // Dense schoolbook multiplication; extracted coefficients and
        // multinomials here have degrees in the hundreds at most.
        const int da = a.degree(), db = b.degree();
        std::vector<Int> acc(static_cast<size_t>(da + db + 1));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) acc[static_cast<size_t>(ea + eb)] += ca * cb;
        QPoly r;
        for (size_t e = 0; e < acc.size(); ++e)
            if (acc[e] != 0) r.terms_.emplace(static_cast<int>(e), std::move(acc[e]));
        return r;
    }

    bool operator==(const QPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    // Multiply by q^shift. Into allows in-place accumulation: the hot
    // path of the product engine only ever multiplies by -q^e.
    QPoly shifted(int shift) const {
        QPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + shift, c);
        return r;
    }
    void add_shifted_negated(const QPoly& src, int shift) {
        for (const auto& [e, c] : src.terms_) add_term(e + shift, -c);
    }

    // Sum of coefficients: the only substitution the library needs.
    Int eval_at_one() const {
        Int s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    // Canonical rendering, ascending exponents: "-1 + 2*q^3 - q^5".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            const bool neg = c < 0;
            Int mag = neg ? Int(-c) : c;
            if (first) {
                if (neg) os << '-';
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            if (e == 0) {
                os << mag;
            } else {
                if (mag != 1) os << mag << '*';
                os << 'q';
                if (e != 1) os << '^' << e;
            }
        }
        return os.str();
    }

private:
    std::map<int, Int> terms_;
};

// [a]_q = 1 + q + ... + q^{a-1}; [0]_q = 0.
inline QPoly q_int(int a) {
    if (a < 0) throw InvalidInput("q_int: a must be nonnegative");
    QPoly p;
    for (int e = 0; e < a; ++e) p.add_term(e, 1);
    return p;
}

// [a]_q! = prod_{j=1}^{a} [j]_q; empty product for a = 0.
inline QPoly q_factorial(int a) {
    if (a < 0) throw InvalidInput("q_factorial: a must be nonnegative");
    QPoly p = QPoly::one();
    for (int j = 2; j <= a; ++j) p *= q_int(j);
    return p;
}

// prod_{i=0}^{count-1} (1 - q^{offset + step*i}). Covers (q;q)_n,
// (q^a;q^a)_tau and (q;q^a)_n with the appropriate offset and step.
inline QPoly q_pochhammer(int offset, int step, int count) {
    if (offset < 0) throw InvalidInput("q_pochhammer: offset must be nonnegative");
    if (step <= 0) throw InvalidInput("q_pochhammer: step must be positive");
    if (count < 0) throw InvalidInput("q_pochhammer: count must be nonnegative");
    QPoly p = QPoly::one();
    for (int i = 0; i < count; ++i) {
        QPoly f = QPoly::one();
        f.add_term(offset + step * i, -1);
        p *= f;
    }
    return p;
}

// Exact quotient num/den; throws NonExactDivision (with the nonzero
// residual attached) when the division does not come out exact.
inline QPoly exact_div(const QPoly& num, const QPoly& den) {
    if (den.is_zero()) throw InvalidInput("exact_div: division by zero polynomial");
    if (num.is_zero()) return QPoly();
    QPoly rem = num;
    QPoly quot;
    const int dd = den.degree();
    const Int& lead_den = den.terms().rbegin()->second;
    while (!rem.is_zero() && rem.degree() >= dd) {
        const Int& lead_rem = rem.terms().rbegin()->second;
        Int c = lead_rem / lead_den;
        if (c * lead_den != lead_rem) break;  // leading coefficient does not divide
        const int shift = rem.degree() - dd;
        quot.add_term(shift, c);
        // rem -= den * c*q^shift
        for (const auto& [e, dc] : den.terms()) rem.add_term(e + shift, -c * dc);
    }
    if (!rem.is_zero())
        throw NonExactDivision("exact_div: non-exact division, remainder " + rem.str(), rem.str());
    return quot;
}

// Gaussian binomial [m over k]_q, always a polynomial.
inline QPoly q_binomial(int m, int k) {
    if (k < 0 || m < 0 || k > m) throw InvalidInput("q_binomial: need 0 <= k <= m");
    return exact_div(q_factorial(m), q_factorial(k) * q_factorial(m - k));
}

// [sigma]_q! / prod [a_i]_q!, built as an iterated product of Gaussian
// binomials so every intermediate value is a polynomial.
inline QPoly q_multinomial(const std::vector<int>& a) {
    QPoly p = QPoly::one();
    int partial = 0;
    for (int ai : a) {
        if (ai < 0) throw InvalidInput("q_multinomial: entries must be nonnegative");
        partial += ai;
        p *= q_binomial(partial, ai);
    }
    return p;
}

// Succeeds iff p = sign * q^L; the log_q step of the one-term ansatz.
inline std::pair<int, int> as_signed_q_power(const QPoly& p) {
    if (p.term_count() != 1) throw NotAMonomial("not a signed power of q: " + p.str());
    const auto& [e, c] = *p.terms().begin();
    if (c == 1) return {+1, e};
    if (c == -1) return {-1, e};
    throw NotAMonomial("not a signed power of q: " + p.str());
}

// sign * q^qpower * prod (1 - q^{c_i}), the tractable presentation form.
struct QFactorization {
    int sign = +1;
    int qpower = 0;
    std::vector<int> factors;  // ascending multiset of the c_i

    QPoly expand() const {
        QPoly p = QPoly::monomial(sign, qpower);
        for (int c : factors) {
            QPoly f = QPoly::one();
            f.add_term(c, -1);
            p *= f;
        }
        return p;
    }

    std::string str() const {
        std::ostringstream os;
        if (sign < 0) os << '-';
        bool need_mul = false;
        if (qpower > 0) {
            os << 'q';
            if (qpower != 1) os << '^' << qpower;
            need_mul = true;
        }
        for (int c : factors) {
            if (need_mul) os << '*';
            os << "(1-q";
            if (c != 1) os << '^' << c;
            os << ')';
            need_mul = true;
        }
        if (!need_mul) os << '1';
        return os.str();
    }
};

// Greedy factorization into +-q^L * prod (1 - q^{c_i}): strip the q^L
// content, normalize the constant term to +1, then repeatedly divide by
// (1 - q^k) at the lowest remaining nonconstant exponent. Returns
// nullopt when p is not of the pure-product form.
inline std::optional<QFactorization> qfactor(const QPoly& p) {
    if (p.is_zero()) throw InvalidInput("qfactor: zero polynomial");
    QFactorization f;
    f.qpower = p.low_degree();
    QPoly core;
    for (const auto& [e, c] : p.terms()) core.add_term(e - f.qpower, c);
    Int c0 = core.coeff(0);
    if (c0 < 0) {
        f.sign = -1;
        core = -core;
        c0 = -c0;
    }
    if (c0 != 1) return std::nullopt;
    while (!(core == QPoly::one())) {
        const int k = std::next(core.terms().begin())->first;  // lowest nonconstant exponent
        QPoly div = QPoly::one();
        div.add_term(k, -1);
        try {
            core = exact_div(core, div);
        } catch (const NonExactDivision&) {
            return std::nullopt;
        }
        f.factors.push_back(k);
    }
    std::sort(f.factors.begin(), f.factors.end());
    return f;
}

}  // namespace qdyson
