#pragma once

#include <string>

#include <json.hpp>

#include "topolab/convergence.hpp"
#include "topolab/enumerate.hpp"
#include "topolab/filter.hpp"
#include "topolab/omega.hpp"
#include "topolab/space.hpp"

namespace topolab {

using Json = nlohmann::json;

// Spaces: {"n": int, "opens": [[int,...],...]}, each open ascending and the
// opens sorted lexicographically. This is the interchange format everywhere.
Json space_to_json(const FiniteSpace& space);
FiniteSpace space_from_json(const Json& j);

Json pointset_to_json(Mask m);
Mask pointset_from_json(const Json& j, int n);

Json catalogue_to_json(const SpaceCatalogue& cat);
SpaceCatalogue catalogue_from_json(const Json& j);

Json indexset_to_json(const IndexSet& index);
IndexSet indexset_from_json(const Json& j);

Json indexsubset_to_json(Mask m, const IndexSet& index);
Mask indexsubset_from_json(const Json& j, const IndexSet& index);

// Filters: canonical principal form {"index": [labels], "core": [labels]}.
Json filter_to_json(const FiniteFilter& f);
FiniteFilter filter_from_json(const Json& j);

Json family_to_json(const FilterFamily& p);
FilterFamily family_from_json(const Json& j);

Json epset_to_json(const EventuallyPeriodicSet& z);
EventuallyPeriodicSet epset_from_json(const Json& j);

// {"kind": "frechet", "Z": {"prefix": [bits], "cycle": [bits]}}
Json omega_filter_to_json(const OmegaFilter& f);
OmegaFilter omega_filter_from_json(const Json& j);

Json sequence_to_json(const IndexedSequence& s);
IndexedSequence sequence_from_json(const Json& j);

Json omega_sequence_to_json(const OmegaSequence& s);
OmegaSequence omega_sequence_from_json(const Json& j);

Json set_sequence_to_json(const SetSequence& s);
SetSequence set_sequence_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);

// Parses text as JSON, wrapping parse failures into InputError with the
// parser's position message.
Json parse_json_text(const std::string& text);

}  // namespace topolab
