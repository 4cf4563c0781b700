#pragma once

#include <optional>
#include <string>

#include "cremona/birmap.hpp"
#include "cremona/rational.hpp"

namespace cremona {

enum class GrowthKind {
  Elliptic,
  JonquieresTwist,
  HalphenTwist,
  Hyperbolic,
  Undetermined,
};

std::string to_string(GrowthKind k);

/// The pattern that matched: period for bounded tails, the constant first or
/// second difference for linear/quadratic growth, the tail ratio for
/// exponential growth.
struct GrowthEvidence {
  std::optional<int> period;
  std::optional<int> difference_order;
  std::optional<BigInt> difference_value;
  std::optional<double> tail_ratio;
  std::string summary;
};

struct GrowthClass {
  GrowthKind kind = GrowthKind::Undetermined;
  GrowthEvidence evidence;
};

/// Classify a degree sequence by the behaviour of its final half: eventually
/// periodic, eventually constant first differences, eventually constant
/// second differences, or ratios bounded away from 1. Any finite-length
/// decision is a heuristic; sequences matching nothing report Undetermined.
/// Needs at least 6 entries (TooShort).
GrowthClass classify_growth(const DegreeSequence &seq, double delta = 0.1);

struct LambdaEstimate {
  double value = 1.0;
  int n_used = 0;
  enum class Method { Root, Ratio, ExactSpectral } method = Method::Root;
};

std::string to_string(LambdaEstimate::Method m);

/// Dynamical-degree estimate from a degree sequence. The two-step tail ratio
/// sqrt(d_n / d_{n-2}) converges fast for exponential growth and is used when
/// it indicates growth; the n-th root estimate (clamped to >= 1) is used
/// otherwise.
LambdaEstimate estimate_lambda(const DegreeSequence &seq);

/// Smallest real root > 1 of X^10+X^9-X^7-X^6-X^5-X^4-X^3+X+1, isolated by
/// exact rational bisection on (1,2); accurate to well past 12 digits.
double lehmer_root();

/// |P(x)| for the polynomial above, for residual checks.
double lehmer_residual(double x);

struct LehmerDiagnostic {
  enum class Status {
    ConsistentEllipticOrParabolic,
    ConsistentHyperbolic,
    GapViolationSuspected,
  };
  Status status;
  double lehmer_value;
  double epsilon;
};

std::string to_string(LehmerDiagnostic::Status s);

/// Compare an estimate against the spectral gap: estimates near 1 and
/// estimates at or above the Lehmer number are consistent; anything strictly
/// between suggests the sequence is too short.
LehmerDiagnostic lehmer_gap_check(const LambdaEstimate &est,
                                  double epsilon = 0.05);

/// log(lambda); the displacement of the induced isometry. 0 at lambda = 1.
double translation_length(const LambdaEstimate &est);

} // namespace cremona
