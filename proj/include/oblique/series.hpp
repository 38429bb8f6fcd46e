#pragma once

// Exact-coefficient truncated formal power series: univariate in q and
// multivariate with a weighted total-degree truncation.  Coefficients are
// arbitrary-precision integers; there is no floating point anywhere.

#include <gmpxx.h>

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace oblique {

using Int = mpz_class;

/// Power series in one variable, exact modulo q^{N+1}.
class UniSeries {
  public:
    explicit UniSeries(int trunc) : coeffs_(static_cast<std::size_t>(trunc) + 1, Int(0)) {
        if (trunc < 0) throw std::invalid_argument("UniSeries: negative truncation");
    }

    static UniSeries one(int trunc) {
        UniSeries s(trunc);
        s.coeffs_[0] = 1;
        return s;
    }

    static UniSeries monomial(int trunc, int deg, Int c = Int(1)) {
        UniSeries s(trunc);
        if (deg < 0) throw std::invalid_argument("UniSeries: negative degree");
        if (deg <= trunc) s.coeffs_[static_cast<std::size_t>(deg)] = std::move(c);
        return s;
    }

    int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Int& coeff(int deg) const {
        static const Int zero(0);
        if (deg < 0 || deg > trunc()) return zero;
        return coeffs_[static_cast<std::size_t>(deg)];
    }

    Int& at(int deg) { return coeffs_.at(static_cast<std::size_t>(deg)); }

    bool operator==(const UniSeries&) const = default;

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    UniSeries& operator+=(const UniSeries& o) {
        check_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }

    UniSeries& operator-=(const UniSeries& o) {
        check_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }

    friend UniSeries operator+(UniSeries a, const UniSeries& b) { return a += b; }
    friend UniSeries operator-(UniSeries a, const UniSeries& b) { return a -= b; }

    friend UniSeries operator*(const UniSeries& a, const UniSeries& b) {
        a.check_same(b);
        UniSeries r(a.trunc());
        for (int i = 0; i <= a.trunc(); ++i) {
            if (a.coeffs_[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; i + j <= a.trunc(); ++j) {
                if (b.coeffs_[static_cast<std::size_t>(j)] == 0) continue;
                r.coeffs_[static_cast<std::size_t>(i + j)] +=
                    a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
            }
        }
        return r;
    }

    UniSeries& operator*=(const UniSeries& o) { return *this = *this * o; }

    /// Multiply by c * q^deg.
    UniSeries shifted(int deg, const Int& c = Int(1)) const {
        if (deg < 0) throw std::invalid_argument("UniSeries::shifted: negative degree");
        UniSeries r(trunc());
        for (int i = 0; i + deg <= trunc(); ++i)
            r.coeffs_[static_cast<std::size_t>(i + deg)] = c * coeffs_[static_cast<std::size_t>(i)];
        return r;
    }

    /// Multiplicative inverse; requires constant term +-1.
    UniSeries inverse() const {
        if (coeffs_[0] != 1 && coeffs_[0] != -1)
            throw std::invalid_argument("UniSeries::inverse: constant term must be +-1");
        UniSeries r(trunc());
        r.coeffs_[0] = coeffs_[0];  // 1/(+-1)
        for (int n = 1; n <= trunc(); ++n) {
            Int acc(0);
            for (int k = 1; k <= n; ++k)
                acc += coeffs_[static_cast<std::size_t>(k)] * r.coeffs_[static_cast<std::size_t>(n - k)];
            r.coeffs_[static_cast<std::size_t>(n)] = -acc * coeffs_[0];
        }
        return r;
    }

    /// Sum_{k>=0} q^{k*deg}, i.e. 1/(1-q^deg); deg >= 1.
    static UniSeries geometric(int trunc, int deg) {
        if (deg < 1) throw std::invalid_argument("UniSeries::geometric: degree must be >= 1");
        UniSeries s(trunc);
        for (int k = 0; k * deg <= trunc; ++k) s.coeffs_[static_cast<std::size_t>(k * deg)] = 1;
        return s;
    }

    /// Retruncate to a smaller order.
    UniSeries truncated(int new_trunc) const {
        if (new_trunc > trunc()) throw std::invalid_argument("UniSeries::truncated: cannot extend");
        UniSeries r(new_trunc);
        for (int i = 0; i <= new_trunc; ++i) r.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)];
        return r;
    }

    /// Value at q=1 (only meaningful when the series is a polynomial).
    Int value_at_one() const {
        Int s(0);
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    /// True when the top `margin` coefficients all vanish, the cheap signal
    /// that the series is a polynomial rather than a growing expansion.
    bool looks_polynomial(int margin) const {
        if (margin > trunc() + 1) margin = trunc() + 1;
        for (int i = trunc(); i > trunc() - margin; --i)
            if (coeffs_[static_cast<std::size_t>(i)] != 0) return false;
        return true;
    }

    std::string to_string(const std::string& var = "q") const {
        std::string s;
        for (int d = 0; d <= trunc(); ++d) {
            const Int& c = coeffs_[static_cast<std::size_t>(d)];
            if (c == 0) continue;
            Int a = abs(c);
            if (s.empty())
                s += (c < 0) ? "-" : "";
            else
                s += (c < 0) ? " - " : " + ";
            bool unit = (a == 1);
            if (d == 0)
                s += a.get_str();
            else {
                if (!unit) s += a.get_str() + "*";
                s += var;
                if (d > 1) s += "^" + std::to_string(d);
            }
        }
        return s.empty() ? "0" : s;
    }

    const std::vector<Int>& coeffs() const { return coeffs_; }

  private:
    void check_same(const UniSeries& o) const {
        if (trunc() != o.trunc())
            throw std::invalid_argument("UniSeries: mismatched truncation");
    }

    std::vector<Int> coeffs_;
};

/// Monomial in a fixed variable list: exponent vector.
using Exponents = std::vector<int>;

/// Multivariate series truncated by weighted total degree.  Each variable
/// carries a truncation weight (default 1); weight-0 variables are markers
/// that do not count against the bound (their exponents must stay bounded
/// by the graded part, which holds for every use in this library).
class MultiSeries {
  public:
    MultiSeries(std::vector<std::string> vars, int trunc)
        : MultiSeries(std::move(vars), std::vector<int>{}, trunc) {}

    MultiSeries(std::vector<std::string> vars, std::vector<int> weights, int trunc)
        : vars_(std::move(vars)), weights_(std::move(weights)), trunc_(trunc) {
        if (trunc < 0) throw std::invalid_argument("MultiSeries: negative truncation");
        if (weights_.empty()) weights_.assign(vars_.size(), 1);
        if (weights_.size() != vars_.size())
            throw std::invalid_argument("MultiSeries: weights/vars size mismatch");
    }

    static MultiSeries one(std::vector<std::string> vars, std::vector<int> weights, int trunc) {
        MultiSeries s(std::move(vars), std::move(weights), trunc);
        s.terms_[Exponents(s.vars_.size(), 0)] = 1;
        return s;
    }

    static MultiSeries one(std::vector<std::string> vars, int trunc) {
        return one(std::move(vars), {}, trunc);
    }

    int trunc() const { return trunc_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<int>& weights() const { return weights_; }
    const std::map<Exponents, Int>& terms() const { return terms_; }

    int weighted_degree(const Exponents& e) const {
        int d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += weights_[i] * e[i];
        return d;
    }

    void add_term(const Exponents& e, const Int& c) {
        if (e.size() != vars_.size()) throw std::invalid_argument("MultiSeries: bad exponent size");
        for (int x : e)
            if (x < 0) throw std::invalid_argument("MultiSeries: negative exponent");
        if (weighted_degree(e) > trunc_ || c == 0) return;
        Int& slot = terms_[e];
        slot += c;
        if (slot == 0) terms_.erase(e);
    }

    bool operator==(const MultiSeries& o) const {
        return vars_ == o.vars_ && weights_ == o.weights_ && trunc_ == o.trunc_ && terms_ == o.terms_;
    }

    MultiSeries& operator+=(const MultiSeries& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    MultiSeries& operator-=(const MultiSeries& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
    friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }

    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
        a.check_same(b);
        MultiSeries r(a.vars_, a.weights_, a.trunc_);
        Exponents e(a.vars_.size());
        for (const auto& [ea, ca] : a.terms_) {
            int da = a.weighted_degree(ea);
            for (const auto& [eb, cb] : b.terms_) {
                if (da + b.weighted_degree(eb) > a.trunc_) continue;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    MultiSeries& operator*=(const MultiSeries& o) { return *this = *this * o; }

    /// Multiply by c * x^e.
    MultiSeries shifted(const Exponents& e, const Int& c = Int(1)) const {
        MultiSeries r(vars_, weights_, trunc_);
        Exponents f(vars_.size());
        for (const auto& [ea, ca] : terms_) {
            for (std::size_t i = 0; i < f.size(); ++i) f[i] = ea[i] + e[i];
            r.add_term(f, ca * c);
        }
        return r;
    }

    /// Sum_{k>=0} (x^e)^k = 1/(1 - x^e); the monomial must have weighted
    /// degree >= 1 so that the expansion terminates under truncation.
    static MultiSeries geometric(const std::vector<std::string>& vars,
                                 const std::vector<int>& weights, int trunc,
                                 const Exponents& e) {
        MultiSeries s(vars, weights, trunc);
        int d = s.weighted_degree(e);
        if (d < 1)
            throw std::invalid_argument("MultiSeries::geometric: monomial of weighted degree 0");
        Exponents cur(vars.size(), 0);
        for (int k = 0; k * d <= trunc; ++k) {
            s.add_term(cur, 1);
            for (std::size_t i = 0; i < cur.size(); ++i) cur[i] += e[i];
        }
        return s;
    }

    /// Multiplicative inverse; requires constant term +-1.
    MultiSeries inverse() const {
        Exponents zero(vars_.size(), 0);
        auto it = terms_.find(zero);
        if (it == terms_.end() || (it->second != 1 && it->second != -1))
            throw std::invalid_argument("MultiSeries::inverse: constant term must be +-1");
        Int c0 = it->second;
        MultiSeries rem = *this;  // r = 1 - s/c0, all terms of weighted degree >= 1
        rem.terms_.erase(zero);
        if (c0 == -1)
            for (auto& [e, c] : rem.terms_) c = -c;
        MultiSeries acc = one(vars_, weights_, trunc_);
        MultiSeries power = one(vars_, weights_, trunc_);
        for (int k = 1; k <= trunc_; ++k) {
            power = power * rem;
            if (power.terms_.empty()) break;
            if (k % 2 == 1) acc -= power;
            else acc += power;
        }
        if (c0 == -1)
            for (auto& [e, c] : acc.terms_) c = -c;
        return acc;
    }

    /// Substitute variable i -> q^{q_powers[i]}; markers typically map to
    /// power 0.  Result truncation is the same bound.
    UniSeries specialize(const std::vector<int>& q_powers) const {
        if (q_powers.size() != vars_.size())
            throw std::invalid_argument("MultiSeries::specialize: bad power list");
        UniSeries r(trunc_);
        for (const auto& [e, c] : terms_) {
            long long d = 0;
            for (std::size_t i = 0; i < e.size(); ++i)
                d += static_cast<long long>(q_powers[i]) * e[i];
            if (d < 0) throw std::invalid_argument("MultiSeries::specialize: negative degree");
            if (d <= trunc_) r.at(static_cast<int>(d)) += c;
        }
        return r;
    }

    /// Substitute every variable to q (markers included, power 1 each).
    UniSeries specialize_all_to_q() const {
        return specialize(std::vector<int>(vars_.size(), 1));
    }

    std::string to_string() const {
        std::string s;
        for (const auto& [e, c] : terms_) {
            Int a = abs(c);
            if (s.empty())
                s += (c < 0) ? "-" : "";
            else
                s += (c < 0) ? " - " : " + ";
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty())
                s += a.get_str();
            else {
                if (a != 1) s += a.get_str() + "*";
                s += mono;
            }
        }
        return s.empty() ? "0" : s;
    }

  private:
    void check_same(const MultiSeries& o) const {
        if (vars_ != o.vars_ || weights_ != o.weights_ || trunc_ != o.trunc_)
            throw std::invalid_argument("MultiSeries: mismatched variables or truncation");
    }

    std::vector<std::string> vars_;
    std::vector<int> weights_;
    int trunc_;
    std::map<Exponents, Int> terms_;
};

/// phi_{i,j}(x) = 1+x when j-i is odd, 1/(1-x) when j-i is even; the
/// argument is a monomial given by its exponent vector.
inline MultiSeries phi_factor(int i, int j, const std::vector<std::string>& vars,
                              const std::vector<int>& weights, int trunc, const Exponents& m) {
    if (i == j) throw std::invalid_argument("phi_factor: i == j");
    int d = (j - i) % 2;
    if (d < 0) d = -d;
    if (d == 1) {
        MultiSeries s = MultiSeries::one(vars, weights, trunc);
        s.add_term(m, 1);
        return s;
    }
    return MultiSeries::geometric(vars, weights, trunc, m);
}

/// Univariate phi: argument q^deg.
inline UniSeries phi_factor_q(int i, int j, int trunc, int deg) {
    if (i == j) throw std::invalid_argument("phi_factor_q: i == j");
    int d = (j - i) % 2;
    if (d < 0) d = -d;
    if (d == 1) {
        UniSeries s = UniSeries::one(trunc);
        if (deg <= trunc) s.at(deg) += 1;
        return s;
    }
    return UniSeries::geometric(trunc, deg);
}

}  // namespace oblique
