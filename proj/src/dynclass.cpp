#include "cremona/dynclass.hpp"

#include <cmath>
#include <vector>

namespace cremona {

std::string to_string(GrowthKind k) {
  switch (k) {
  case GrowthKind::Elliptic:
    return "elliptic";
  case GrowthKind::JonquieresTwist:
    return "jonquieres-twist";
  case GrowthKind::HalphenTwist:
    return "halphen-twist";
  case GrowthKind::Hyperbolic:
    return "hyperbolic";
  case GrowthKind::Undetermined:
    return "undetermined";
  }
  return "?";
}

std::string to_string(LambdaEstimate::Method m) {
  switch (m) {
  case LambdaEstimate::Method::Root:
    return "root";
  case LambdaEstimate::Method::Ratio:
    return "ratio";
  case LambdaEstimate::Method::ExactSpectral:
    return "exact-spectral";
  }
  return "?";
}

std::string to_string(LehmerDiagnostic::Status s) {
  switch (s) {
  case LehmerDiagnostic::Status::ConsistentEllipticOrParabolic:
    return "consistent-elliptic-or-parabolic";
  case LehmerDiagnostic::Status::ConsistentHyperbolic:
    return "consistent-hyperbolic";
  case LehmerDiagnostic::Status::GapViolationSuspected:
    return "gap-violation-suspected: refine N";
  }
  return "?";
}

GrowthClass classify_growth(const DegreeSequence &seq, double delta) {
  const auto &e = seq.entries;
  const int n = static_cast<int>(e.size());
  if (n < 6)
    throw TooShort("classification needs at least 6 degrees, got " +
                   std::to_string(n));
  const int window = (n + 1) / 2;

  // Eventually periodic tail.
  for (int period = 1; period <= window / 2; ++period) {
    bool ok = true;
    for (int i = n - window; i + period < n; ++i)
      if (e[i] != e[i + period]) {
        ok = false;
        break;
      }
    if (ok) {
      GrowthClass r;
      r.kind = GrowthKind::Elliptic;
      r.evidence.period = period;
      r.evidence.summary =
          "tail periodic with period " + std::to_string(period);
      return r;
    }
  }

  auto diffs = [](const std::vector<BigInt> &v) {
    std::vector<BigInt> d;
    for (std::size_t i = 1; i < v.size(); ++i)
      d.push_back(v[i] - v[i - 1]);
    return d;
  };
  auto constant_positive_tail = [&](const std::vector<BigInt> &d) {
    int m = static_cast<int>(d.size());
    int from = std::max(0, m - window);
    for (int i = from + 1; i < m; ++i)
      if (d[i] != d[from])
        return false;
    return d[m - 1] > 0;
  };

  std::vector<BigInt> d1 = diffs(e);
  if (constant_positive_tail(d1)) {
    GrowthClass r;
    r.kind = GrowthKind::JonquieresTwist;
    r.evidence.difference_order = 1;
    r.evidence.difference_value = d1.back();
    r.evidence.summary =
        "first differences settle at " + d1.back().get_str();
    return r;
  }

  std::vector<BigInt> d2 = diffs(d1);
  if (constant_positive_tail(d2)) {
    GrowthClass r;
    r.kind = GrowthKind::HalphenTwist;
    r.evidence.difference_order = 2;
    r.evidence.difference_value = d2.back();
    r.evidence.summary =
        "second differences settle at " + d2.back().get_str();
    return r;
  }

  // Exponential: tail ratios stay above 1 + delta and do not slide downward.
  std::vector<double> ratios;
  for (int i = 1; i < n; ++i)
    ratios.push_back(e[i].get_d() / e[i - 1].get_d());
  int m = static_cast<int>(ratios.size());
  int from = std::max(0, m - window);
  bool above = true;
  for (int i = from; i < m; ++i)
    if (!(ratios[i] >= 1.0 + delta))
      above = false;
  if (above && ratios[m - 1] >= 0.9 * ratios[from]) {
    GrowthClass r;
    r.kind = GrowthKind::Hyperbolic;
    r.evidence.tail_ratio = ratios[m - 1];
    r.evidence.summary = "tail ratios stay above " +
                         std::to_string(1.0 + delta) + ", last " +
                         std::to_string(ratios[m - 1]);
    return r;
  }

  GrowthClass r;
  r.kind = GrowthKind::Undetermined;
  r.evidence.summary = "no growth pattern held over the final window";
  return r;
}

LambdaEstimate estimate_lambda(const DegreeSequence &seq) {
  const auto &e = seq.entries;
  const int n = static_cast<int>(e.size());
  if (n == 0)
    throw TooShort("lambda estimate needs a nonempty sequence");

  LambdaEstimate est;
  est.n_used = n;

  double root = std::exp(std::log(e[n - 1].get_d()) / n);
  double ratio = 1.0;
  if (n >= 3)
    ratio = std::sqrt(e[n - 1].get_d() / e[n - 3].get_d());
  else if (n == 2)
    ratio = e[1].get_d() / e[0].get_d();

  if (n >= 2 && ratio >= 1.05) {
    est.value = ratio;
    est.method = LambdaEstimate::Method::Ratio;
  } else {
    est.value = std::max(root, 1.0);
    est.method = LambdaEstimate::Method::Root;
  }
  return est;
}

namespace {

// X^10 + X^9 - X^7 - X^6 - X^5 - X^4 - X^3 + X + 1
const int kLehmerCoeffs[11] = {1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};

Rational lehmer_eval(const Rational &x) {
  Rational acc(0);
  for (int k = 10; k >= 0; --k) {
    acc = acc * x;
    if (kLehmerCoeffs[10 - k] != 0)
      acc += Rational(kLehmerCoeffs[10 - k]);
  }
  return acc;
}

} // namespace

double lehmer_root() {
  static const double root = [] {
    Rational lo(1), hi(2); // P(1) = -1 < 0 < 1291 = P(2)
    for (int i = 0; i < 64; ++i) {
      Rational mid = (lo + hi) / Rational(2);
      if (lehmer_eval(mid).sign() < 0)
        lo = mid;
      else
        hi = mid;
    }
    return ((lo + hi) / Rational(2)).to_double();
  }();
  return root;
}

double lehmer_residual(double x) {
  long double acc = 0;
  for (int i = 0; i < 11; ++i)
    acc = acc * static_cast<long double>(x) + kLehmerCoeffs[i];
  return static_cast<double>(std::abs(acc));
}

LehmerDiagnostic lehmer_gap_check(const LambdaEstimate &est, double epsilon) {
  LehmerDiagnostic d;
  d.lehmer_value = lehmer_root();
  d.epsilon = epsilon;
  if (est.value <= 1.0 + epsilon)
    d.status = LehmerDiagnostic::Status::ConsistentEllipticOrParabolic;
  else if (est.value >= d.lehmer_value - epsilon)
    d.status = LehmerDiagnostic::Status::ConsistentHyperbolic;
  else
    d.status = LehmerDiagnostic::Status::GapViolationSuspected;
  return d;
}

double translation_length(const LambdaEstimate &est) {
  if (est.value < 1.0)
    throw Error("translation length needs lambda >= 1");
  return std::log(est.value);
}

} // namespace cremona
