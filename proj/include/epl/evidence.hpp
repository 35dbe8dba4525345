#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

namespace epl {

// A pair of nonnegative evidence weights. `positive` counts observations
// supporting a statement, `negative` counts observations against it.
// <0,0> means "no evidence": the statement is unknown, and sparse
// containers never store it.
struct EvidenceTuple {
    double positive = 0.0;
    double negative = 0.0;

    bool is_zero() const { return positive == 0.0 && negative == 0.0; }

    // Weights must be finite and >= 0.
    bool is_valid() const {
        return std::isfinite(positive) && std::isfinite(negative) &&
               positive >= 0.0 && negative >= 0.0;
    }

    friend bool operator==(const EvidenceTuple&, const EvidenceTuple&) = default;
};

// No evidence; additive identity and multiplicative annihilator.
inline constexpr EvidenceTuple kNoEvidence{0.0, 0.0};
// One unit of positive evidence; multiplicative identity.
inline constexpr EvidenceTuple kUnitEvidence{1.0, 0.0};

// Evidence from independent experiences is summed componentwise.
constexpr EvidenceTuple operator+(EvidenceTuple a, EvidenceTuple b) {
    return {a.positive + b.positive, a.negative + b.negative};
}

// Evidence along a path is multiplied: positive evidence compounds, and
// any combination touching negative evidence counts as negative.
//   <w1+,w1-> . <w2+,w2-> = <w1+ w2+, w1+ w2- + w1- w2+ + w1- w2->
constexpr EvidenceTuple operator*(EvidenceTuple a, EvidenceTuple b) {
    return {a.positive * b.positive,
            a.positive * b.negative + a.negative * b.positive +
                a.negative * b.negative};
}

constexpr EvidenceTuple& operator+=(EvidenceTuple& a, EvidenceTuple b) {
    a = a + b;
    return a;
}

constexpr EvidenceTuple& operator*=(EvidenceTuple& a, EvidenceTuple b) {
    a = a * b;
    return a;
}

inline bool approx_equal(EvidenceTuple a, EvidenceTuple b, double tol = 1e-9) {
    return std::fabs(a.positive - b.positive) <= tol &&
           std::fabs(a.negative - b.negative) <= tol;
}

// Default for the system constant k used by truth_value().
inline constexpr double kDefaultEvidenceConstant = 1.0;

// Normalized view of an evidence tuple. `frequency` is empty exactly when
// the tuple is <0,0>: with no evidence the statement is unknown.
struct TruthValue {
    std::optional<double> frequency;
    double confidence = 0.0;

    friend bool operator==(const TruthValue&, const TruthValue&) = default;
};

// f = w+ / (w+ + w-), undefined when there is no evidence.
// c = (w+ + w-) / (w+ + w- + k), the stability of f over k more
// observations; zero evidence gives zero confidence (also for k = 0,
// where the formula itself is 0/0).
inline TruthValue truth_value(EvidenceTuple e,
                              double k = kDefaultEvidenceConstant) {
    if (!e.is_valid())
        throw std::invalid_argument("truth_value: invalid evidence tuple");
    if (!(k >= 0.0) || !std::isfinite(k))
        throw std::invalid_argument("truth_value: k must be finite and >= 0");
    const double total = e.positive + e.negative;
    if (total == 0.0) return TruthValue{std::nullopt, 0.0};
    return TruthValue{e.positive / total, total / (total + k)};
}

}  // namespace epl
