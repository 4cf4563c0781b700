#pragma once

#include <json.hpp>

#include "cremona/birmap.hpp"
#include "cremona/dynclass.hpp"
#include "cremona/groupexplore.hpp"
#include "cremona/toric.hpp"

namespace cremona {

/// Ordered JSON keeps key order stable so reports are byte-identical across
/// runs.
using Json = nlohmann::ordered_json;

inline constexpr const char *kToolVersion = "0.1.0";

/// Canonical serialized polynomial: graded-lex list of
/// [i, j, k, numerator, denominator] with the integers as decimal strings.
Json to_json(const HomogPoly &p);

/// Canonical serialized map: list of its three polynomials.
Json to_json(const BirMap &f);

Json to_json(const DegreeSequence &seq);

Json to_json(const LambdaEstimate &est);

/// {sequence, class, evidence, lambda, translation_length, lehmer_status}
Json growth_report(const DegreeSequence &seq, const GrowthClass &cls,
                   const LambdaEstimate &est, const LehmerDiagnostic &gap);

Json to_json(const SpectralData &sd);

Json to_json(const QuadExtElem &e);

/// {bound, witness_word, level_trace, caps}
Json certificate_json(const Presentation &pres,
                      const LowerBoundCertificate &cert);

Json to_json(const BsReport &rep);

/// Envelope shared by every CLI command.
Json report_envelope(const std::string &command, Json inputs, Json caps,
                     Json results);

} // namespace cremona
