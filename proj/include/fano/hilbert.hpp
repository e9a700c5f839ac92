#pragma once

#include "fano/groebner.hpp"

#include <stdexcept>
#include <vector>

namespace fano {

struct NonHomogeneousInput : std::runtime_error {
    NonHomogeneousInput() : std::runtime_error("hilbert series requires a homogeneous ideal") {}
};

struct NotACurve : std::runtime_error {
    NotACurve() : std::runtime_error("arithmetic genus requires a projective dimension 1 quotient") {}
};

/// Integer univariate polynomial, coefficients low-to-high.
using IntPoly = std::vector<BigInt>;

inline IntPoly intpoly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline void intpoly_add_scaled(IntPoly& a, const IntPoly& b, const BigInt& c, std::size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, BigInt(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += c * b[i];
}

inline BigInt intpoly_eval_one(const IntPoly& a) {
    BigInt s = 0;
    for (const auto& c : a) s += c;
    return s;
}

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^arity of k[x]/I for a
/// monomial ideal given by generators. Divide and conquer on a pivot variable.
namespace hilbert_detail {

inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j) continue;
            if (gens[j].divides(gens[i]) && !(gens[i].divides(gens[j]) && j > i)) redundant = true;
        }
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

inline IntPoly numerator(std::vector<Monomial> gens, std::size_t arity) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {BigInt(1)};
    if (gens.size() == 1 && gens[0].is_one()) return {BigInt(0)};
    bool pairwise_coprime = true;
    for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size() && pairwise_coprime; ++j)
            if (!gens[i].coprime(gens[j])) pairwise_coprime = false;
    if (pairwise_coprime) {
        IntPoly out{BigInt(1)};
        for (const auto& g : gens) {
            IntPoly f(g.degree() + 1, BigInt(0));
            f[0] = 1;
            f[g.degree()] = -1;
            out = intpoly_mul(out, f);
        }
        return out;
    }
    // pivot: most frequent variable among the minimal generators
    std::size_t pivot = 0, best = 0;
    for (std::size_t v = 0; v < arity; ++v) {
        std::size_t cnt = 0;
        for (const auto& g : gens)
            if (g[v] > 0) ++cnt;
        if (cnt > best) {
            best = cnt;
            pivot = v;
        }
    }
    Monomial xv = Monomial::variable(arity, pivot);
    // colon by x_pivot
    std::vector<Monomial> colon;
    for (const auto& g : gens) {
        if (g[pivot] > 0)
            colon.push_back(g / xv);
        else
            colon.push_back(g);
    }
    // plus x_pivot
    std::vector<Monomial> plus{xv};
    for (const auto& g : gens)
        if (g[pivot] == 0) plus.push_back(g);
    // N(I) = N(I + (x)) + t * N(I : x)
    IntPoly a = numerator(std::move(plus), arity);
    IntPoly b = numerator(std::move(colon), arity);
    intpoly_add_scaled(a, b, BigInt(1), 1);
    return a;
}

}  // namespace hilbert_detail

/// Series of the quotient ring, as numerator over (1-t)^denominator_exponent.
struct HilbertSeries {
    IntPoly numerator;
    std::size_t denominator_exponent = 0;

    /// Cancel (1-t) factors: N(1) != 0 afterwards.
    HilbertSeries cancelled() const {
        HilbertSeries out = *this;
        while (!out.numerator.empty() && out.numerator.back() == 0) out.numerator.pop_back();
        if (out.numerator.empty()) return HilbertSeries{{}, 0};
        while (!out.numerator.empty() && intpoly_eval_one(out.numerator) == 0 && out.denominator_exponent > 0) {
            // divide by (1-t): synthetic division, N(t) = (1-t) Q(t)
            IntPoly q(out.numerator.size() - 1, BigInt(0));
            BigInt carry = 0;
            for (std::size_t i = 0; i < q.size(); ++i) {
                q[i] = out.numerator[i] + carry;
                carry = q[i];
            }
            out.numerator = std::move(q);
            out.denominator_exponent -= 1;
        }
        while (!out.numerator.empty() && out.numerator.back() == 0) out.numerator.pop_back();
        return out;
    }

    /// Coefficient of t^k in the expanded series.
    BigInt coefficient(std::size_t k) const {
        BigInt s = 0;
        for (std::size_t j = 0; j < numerator.size() && j <= k; ++j) {
            // C(k - j + n - 1, n - 1)
            std::size_t m = k - j;
            BigInt binom = 1;
            if (denominator_exponent == 0) {
                binom = (m == 0) ? 1 : 0;
            } else {
                for (std::size_t i = 1; i < denominator_exponent; ++i) binom = binom * BigInt(m + i) / BigInt(i);
            }
            s += numerator[j] * binom;
        }
        return s;
    }
};

/// Rational univariate polynomial, coefficients low-to-high.
using RatPoly = std::vector<BigRational>;

inline BigRational ratpoly_eval(const RatPoly& p, const BigRational& x) {
    BigRational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

struct HilbertData {
    long projective_dimension = -1;  // -1: empty (quotient of finite length)
    BigInt degree = 0;               // N-bar(1)
    RatPoly hilbert_polynomial;      // P(t), zero polynomial when empty
};

template <class K>
HilbertSeries hilbert_series(const Ideal<K>& I, const Budget& budget = Budget()) {
    for (const auto& g : I.generators())
        if (!g.is_homogeneous()) throw NonHomogeneousInput();
    const auto& gb = I.groebner(MonomialOrder::grevlex(), budget);
    std::vector<Monomial> lts = gb.leading_terms();
    return HilbertSeries{hilbert_detail::numerator(std::move(lts), I.ring()->arity()), I.ring()->arity()};
}

inline HilbertData hilbert_data_from_series(const HilbertSeries& series) {
    HilbertSeries c = series.cancelled();
    HilbertData out;
    std::size_t d = c.denominator_exponent;
    out.projective_dimension = static_cast<long>(d) - 1;
    out.degree = intpoly_eval_one(c.numerator);
    if (d == 0) return out;  // P = 0
    // P(m) = sum_j N_j * C(m - j + d - 1, d - 1), expanded in m
    RatPoly P;
    for (std::size_t j = 0; j < c.numerator.size(); ++j) {
        if (c.numerator[j] == 0) continue;
        RatPoly term{BigRational(1)};
        BigInt fact = 1;
        for (std::size_t i = 1; i < d; ++i) {
            // multiply by (m - j + i)
            RatPoly lin{BigRational(BigInt(i) - BigInt(j)), BigRational(1)};
            RatPoly next(term.size() + 1, BigRational(0));
            for (std::size_t a = 0; a < term.size(); ++a) {
                next[a] += term[a] * lin[0];
                next[a + 1] += term[a] * lin[1];
            }
            term = std::move(next);
            fact *= BigInt(i);
        }
        for (auto& coeff : term) coeff = coeff * BigRational(c.numerator[j]) / BigRational(fact);
        if (P.size() < term.size()) P.resize(term.size(), BigRational(0));
        for (std::size_t a = 0; a < term.size(); ++a) P[a] += term[a];
    }
    while (!P.empty() && P.back() == 0) P.pop_back();
    out.hilbert_polynomial = std::move(P);
    return out;
}

/// Projective dimension, degree, Hilbert polynomial of V(I).
template <class K>
HilbertData dimension_degree(const Ideal<K>& I, const Budget& budget = Budget()) {
    return hilbert_data_from_series(hilbert_series(I, budget));
}

/// p_a = 1 - P(0) for a projective curve.
template <class K>
BigInt arithmetic_genus(const Ideal<K>& I, const Budget& budget = Budget()) {
    HilbertData data = dimension_degree(I, budget);
    if (data.projective_dimension != 1) throw NotACurve();
    BigRational p0 = ratpoly_eval(data.hilbert_polynomial, BigRational(0));
    BigRational genus = BigRational(1) - p0;
    return boost::multiprecision::numerator(genus);  // denominator is 1 for a curve
}

}  // namespace fano
