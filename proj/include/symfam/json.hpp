#pragma once

#include "symfam/constructions.hpp"
#include "symfam/measures.hpp"
#include "symfam/search.hpp"

#include <json.hpp>

namespace symfam {

using Json = nlohmann::ordered_json;

// Big integers and exact fractions are emitted as decimal strings
// ("37", "37/512").
std::string exact_string(const Dyadic& value);

Json to_json(const BiasedMeasureValue& value);
Json to_json(const SizeReport& report);
Json to_json(const ThresholdWindow& window);
Json to_json(const CrossLemmaReport& report);
Json to_json(const LemmaIntReport& report);
Json to_json(const ProofChainReport& report);
Json to_json(const SearchResult& result, bool exact);
Json to_json(const FrSearchResult& result);
Json to_json(const CertificationReport& report);
Json to_json(const ProjectiveGeometry& geometry);

// Lists of sets, each as an ascending list of 1-based elements.
Json sets_to_json(const std::vector<Mask>& sets);

}  // namespace symfam
