#include "topolab/json_io.hpp"

#include <algorithm>

namespace topolab {
namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int require_int(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) {
    throw InputError(std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<int>();
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) {
      throw InputError(std::string(what) + " must hold integers");
    }
    out.push_back(e.get<int>());
  }
  return out;
}

std::vector<bool> bit_list(const Json& j, const char* what) {
  std::vector<bool> out;
  for (int b : int_list(j, what)) {
    if (b != 0 && b != 1) throw InputError(std::string(what) + " must hold bits");
    out.push_back(b == 1);
  }
  return out;
}

Json bits_json(const std::vector<bool>& bits) {
  Json out = Json::array();
  for (bool b : bits) out.push_back(b ? 1 : 0);
  return out;
}

}  // namespace

Json pointset_to_json(Mask m) { return Json(mask_points(m)); }

Mask pointset_from_json(const Json& j, int n) {
  return points_mask(int_list(j, "point set"), n);
}

Json space_to_json(const FiniteSpace& space) {
  std::vector<std::vector<int>> opens;
  opens.reserve(space.opens().size());
  for (Mask o : space.opens()) opens.push_back(mask_points(o));
  std::sort(opens.begin(), opens.end());
  return Json{{"n", space.points()}, {"opens", opens}};
}

FiniteSpace space_from_json(const Json& j) {
  const int n = require_int(j, "n");
  const Json& opens = require(j, "opens");
  if (!opens.is_array()) throw InputError("\"opens\" must be an array");
  std::vector<Mask> masks;
  for (const auto& o : opens) masks.push_back(points_mask(int_list(o, "open set"), n));
  return FiniteSpace::from_opens(n, std::move(masks));
}

Json catalogue_to_json(const SpaceCatalogue& cat) {
  Json spaces = Json::array();
  for (const auto& s : cat.spaces) spaces.push_back(space_to_json(s));
  return Json{{"dedup", cat.dedup == DedupMode::Labeled ? "labeled"
                                                        : "up-to-homeomorphism"},
              {"spaces", spaces}};
}

SpaceCatalogue catalogue_from_json(const Json& j) {
  SpaceCatalogue cat;
  const Json& dedup = require(j, "dedup");
  if (dedup == "labeled") {
    cat.dedup = DedupMode::Labeled;
  } else if (dedup == "up-to-homeomorphism") {
    cat.dedup = DedupMode::UpToHomeomorphism;
  } else {
    throw InputError("\"dedup\" must be labeled or up-to-homeomorphism");
  }
  const Json& spaces = require(j, "spaces");
  if (!spaces.is_array()) throw InputError("\"spaces\" must be an array");
  for (const auto& s : spaces) cat.spaces.push_back(space_from_json(s));
  return cat;
}

Json indexset_to_json(const IndexSet& index) { return Json(index.labels); }

IndexSet indexset_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("index set must be an array of labels");
  std::vector<std::string> labels;
  for (const auto& e : j) {
    if (!e.is_string()) throw InputError("index labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  return IndexSet::of(std::move(labels));
}

Json indexsubset_to_json(Mask m, const IndexSet& index) {
  Json out = Json::array();
  for (int i : mask_points(m)) out.push_back(index.labels[i]);
  return out;
}

Mask indexsubset_from_json(const Json& j, const IndexSet& index) {
  if (!j.is_array()) throw InputError("index subset must be an array of labels");
  Mask m = 0;
  for (const auto& e : j) {
    if (!e.is_string()) throw InputError("index labels must be strings");
    m |= Mask{1} << index.position(e.get<std::string>());
  }
  return m;
}

Json filter_to_json(const FiniteFilter& f) {
  return Json{{"index", indexset_to_json(f.index())},
              {"core", indexsubset_to_json(f.core(), f.index())}};
}

FiniteFilter filter_from_json(const Json& j) {
  IndexSet index = indexset_from_json(require(j, "index"));
  Mask core = indexsubset_from_json(require(j, "core"), index);
  return FiniteFilter::principal(std::move(index), core);
}

Json family_to_json(const FilterFamily& p) {
  Json filters = Json::array();
  for (const auto& f : p.filters) filters.push_back(filter_to_json(f));
  return Json{{"index", indexset_to_json(p.index)}, {"filters", filters}};
}

FilterFamily family_from_json(const Json& j) {
  const Json& filters = require(j, "filters");
  if (!filters.is_array()) throw InputError("\"filters\" must be an array");
  std::vector<FiniteFilter> fs;
  for (const auto& f : filters) fs.push_back(filter_from_json(f));
  FilterFamily family = FilterFamily::of(std::move(fs));
  if (j.contains("index")) {
    IndexSet declared = indexset_from_json(j.at("index"));
    if (!(declared == family.index)) {
      throw InputError("family index does not match its filters");
    }
  }
  return family;
}

Json epset_to_json(const EventuallyPeriodicSet& z) {
  return Json{{"prefix", bits_json(z.prefix())}, {"cycle", bits_json(z.cycle())}};
}

EventuallyPeriodicSet epset_from_json(const Json& j) {
  return EventuallyPeriodicSet(bit_list(require(j, "prefix"), "\"prefix\""),
                               bit_list(require(j, "cycle"), "\"cycle\""));
}

Json omega_filter_to_json(const OmegaFilter& f) {
  return Json{{"kind", "frechet"}, {"Z", epset_to_json(f.z)}};
}

OmegaFilter omega_filter_from_json(const Json& j) {
  if (require(j, "kind") != "frechet") {
    throw InputError("omega filter kind must be \"frechet\"");
  }
  return OmegaFilter::frechet_on(epset_from_json(require(j, "Z")));
}

Json sequence_to_json(const IndexedSequence& s) {
  return Json{{"index", indexset_to_json(s.index)}, {"points", s.points}};
}

IndexedSequence sequence_from_json(const Json& j) {
  IndexedSequence s;
  s.index = indexset_from_json(require(j, "index"));
  s.points = int_list(require(j, "points"), "\"points\"");
  if (s.points.size() != static_cast<std::size_t>(s.index.size())) {
    throw InputError("sequence length does not match its index set");
  }
  return s;
}

Json omega_sequence_to_json(const OmegaSequence& s) {
  return Json{{"prefix", s.prefix}, {"cycle", s.cycle}};
}

OmegaSequence omega_sequence_from_json(const Json& j) {
  OmegaSequence s;
  s.prefix = int_list(require(j, "prefix"), "\"prefix\"");
  s.cycle = int_list(require(j, "cycle"), "\"cycle\"");
  if (s.cycle.empty()) throw InputError("omega-sequence needs a nonempty cycle");
  return s;
}

Json set_sequence_to_json(const SetSequence& s) {
  Json sets = Json::array();
  for (Mask m : s.sets) sets.push_back(mask_points(m));
  return Json{{"index", indexset_to_json(s.index)}, {"sets", sets}};
}

SetSequence set_sequence_from_json(const Json& j) {
  SetSequence s;
  s.index = indexset_from_json(require(j, "index"));
  const Json& sets = require(j, "sets");
  if (!sets.is_array()) throw InputError("\"sets\" must be an array");
  for (const auto& e : sets) {
    s.sets.push_back(points_mask(int_list(e, "set"), kMaxPoints));
  }
  if (s.sets.size() != static_cast<std::size_t>(s.index.size())) {
    throw InputError("set sequence length does not match its index set");
  }
  return s;
}

Json verdict_to_json(const Verdict& v) {
  return Json{{"value", v.value},
              {"witness", v.witness},
              {"method", v.method},
              {"checked", v.checked}};
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace topolab
