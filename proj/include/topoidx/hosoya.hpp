#pragma once

#include <cstdint>
#include <vector>

#include "topoidx/checked.hpp"
#include "topoidx/distance.hpp"
#include "topoidx/graph.hpp"
#include "topoidx/rational.hpp"

namespace topoidx {

// Distance (Hosoya) polynomial with exact integer coefficients. coeffs[l-1]
// is the coefficient of t^l; there is structurally no constant term, and
// trailing zero coefficients are trimmed so degree() is tight.
struct DistancePolynomial {
    std::vector<std::int64_t> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()); }
    bool empty() const { return coeffs.empty(); }
    friend bool operator==(const DistancePolynomial& a, const DistancePolynomial& b) = default;
};

inline DistancePolynomial normalized(std::vector<std::int64_t> coeffs) {
    for (std::int64_t c : coeffs)
        if (c < 0) throw InvalidParameterError("distance polynomial coefficients must be >= 0");
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return DistancePolynomial{std::move(coeffs)};
}

// H(G, t): coefficient of t^l is the number of vertex pairs at distance l.
inline DistancePolynomial hosoya_polynomial(const Graph& g, unsigned threads = 1) {
    return DistancePolynomial{distance_distribution(g, threads).counts};
}

// Exact evaluation by Horner's scheme: H(t) = t*(c1 + t*(c2 + ...)).
inline Rational evaluate(const DistancePolynomial& p, const Rational& t) {
    Rational result = 0;
    for (std::size_t i = p.coeffs.size(); i > 0; --i)
        result = (result + Rational(p.coeffs[i - 1])) * t;
    return result;
}

// Wiener index as the derivative of H at t = 1: sum of l * coeffs[l-1].
inline std::int64_t wiener_from_polynomial(const DistancePolynomial& p) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        total = checked_add(total, checked_mul(static_cast<std::int64_t>(i + 1), p.coeffs[i]));
    return total;
}

}  // namespace topoidx
