#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geobench/querygen/catalog.hpp"
#include "geobench/refeval/results.hpp"

namespace geobench {

enum class Verdict { Match, Mismatch, Unverifiable };
std::string_view to_string(Verdict v);

struct VerificationReport {
  std::string query_id;
  std::optional<std::size_t> oracle_cardinality;  // absent when unverifiable
  std::size_t endpoint_cardinality = 0;
  std::vector<std::string> missing;   // in the oracle answer only
  std::vector<std::string> spurious;  // in the endpoint answer only
  Verdict verdict = Verdict::Unverifiable;
  std::string note;
};

/// Tolerance for coordinates of constructed geometries.
inline constexpr double kConstructTolerance = 1e-9;

/// Compares an endpoint answer with the oracle answer under `mode`.
/// Rows are multisets keyed by the oracle's variables; IRIs are compared
/// without angle brackets. Construct answers match cells that parse as WKT
/// by geometry equality within kConstructTolerance after normalization.
/// Without an oracle answer, or in mode None, the verdict is Unverifiable.
VerificationReport verify(std::string query_id, const std::optional<ResultTable>& oracle,
                          const ResultTable& endpoint, AnswerMode mode);

}  // namespace geobench
