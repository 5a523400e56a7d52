#pragma once

#include <string>

#include <json.hpp>

#include "algser/chains.hpp"
#include "algser/construction.hpp"
#include "algser/groebner.hpp"
#include "algser/langkit.hpp"
#include "algser/series.hpp"

namespace algser {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "algser/1";

Json to_json(const Alphabet& a);
Alphabet alphabet_from_json(const Json& j);

Json to_json(const Word& w, const Alphabet& a);
Word word_from_json(const Json& j, const Alphabet& a);

// Terms listed from the leading monomial down.
Json to_json(const NcPoly& f, const MonomialOrder& o);
NcPoly poly_from_json(const Json& j, const Alphabet& a);

Json to_json(const Homomorphism& h);
Homomorphism homomorphism_from_json(const Json& j);

// Relations sorted by leading monomial.
Json to_json(const PresentationSpec& p);
PresentationSpec presentation_from_json(const Json& j);

Json to_json(const TruncatedGB& gb);

Json to_json(const ChainTable& t, const Alphabet& a, bool include_words);

Json to_json(const RatSeries& s);
RatSeries series_from_json(const Json& j);

Json to_json(const Grammar& g);
Grammar grammar_from_json(const Json& j);

struct ObstructionFile {
  Alphabet alphabet;
  ObstructionSet obstructions;
};
ObstructionFile obstructions_from_json(const Json& j);
Json obstructions_to_json(const ObstructionSet& obs, const Alphabet& a);

Json read_json_file(const std::string& path);

}  // namespace algser
