#pragma once

#include "symsum/descriptor.hpp"
#include "symsum/geography.hpp"

#include <json.hpp>

#include <string>

namespace symsum {

using json = nlohmann::ordered_json;

/// Deterministic renderers: identical inputs and configuration produce
/// byte-identical text and JSON, independent of worker count.

std::string render_class(const HomologyClass& c);

json invariants_json(const ParsedManifold& pm);
std::string invariants_text(const ParsedManifold& pm);

json knef_json(const KnefCertificate& cert, const OracleResult* oracle, bool agree);
std::string knef_text(const KnefCertificate& cert, const OracleResult* oracle, bool agree);

json sum_json(const MinimalityDecision& dec, const SplittingEnumeration* splittings);
std::string sum_text(const MinimalityDecision& dec, const SplittingEnumeration* splittings);

json blocks_json(const std::vector<BuildingBlock>& blocks);
std::string blocks_text(const std::vector<BuildingBlock>& blocks);

json region_json(const std::vector<std::pair<i64, i64>>& pts, i64 r);
std::string region_text(const std::vector<std::pair<i64, i64>>& pts, i64 r);

json chain_json(const ChainReport& rep);
std::string chain_text(const ChainReport& rep);

} // namespace symsum
