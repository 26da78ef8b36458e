#include "posdiag/json_io.hpp"

#include <charconv>
#include <limits>

#include "posdiag/error.hpp"

namespace posdiag::json {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw_parse(std::string("expected an object holding \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) throw_parse(std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw_parse(std::string("field \"") + key + "\" must be an array");
  return v;
}

std::int64_t small_int(const Json& j, const char* what) {
  const Integer v = integer_from_json(j);
  if (!v.fits_slong_p()) throw_parse(std::string(what) + " is out of range");
  return v.get_si();
}

int int_value(const Json& j, const char* what) {
  const auto v = small_int(j, what);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw_parse(std::string(what) + " is out of range");
  return static_cast<int>(v);
}

std::vector<CrossingId> id_list(const Json& j) {
  if (!j.is_array()) throw_parse("a curve must be an array of crossing ids");
  std::vector<CrossingId> out;
  for (const auto& v : j) out.push_back(small_int(v, "crossing id"));
  return out;
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw_parse(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(int_value(v, what));
  return out;
}

}  // namespace

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start) throw_parse("empty integer string");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw_parse("not an integer: \"" + s + "\"");
    return Integer(s);
  }
  throw_parse("expected an integer, got " + j.dump());
}

Json to_json(const SeifertData& s) {
  Json j;
  j["base_genus"] = integer_to_json(s.base_genus);
  j["mode"] = s.mode == InvariantMode::Normalized ? "normalized" : "non_normalized";
  Json fibers = Json::array();
  for (const auto& f : s.fibers)
    fibers.push_back(Json{{"alpha", integer_to_json(f.alpha)}, {"beta", integer_to_json(f.beta)}});
  j["fibers"] = std::move(fibers);
  if (s.euler) j["euler"] = integer_to_json(*s.euler);
  return j;
}

SeifertData seifert_from_json(const Json& j) {
  SeifertData s;
  s.base_genus = integer_from_json(field(j, "base_genus"));
  const Json& mode = field(j, "mode");
  if (mode == "normalized")
    s.mode = InvariantMode::Normalized;
  else if (mode == "non_normalized")
    s.mode = InvariantMode::NonNormalized;
  else
    throw_parse("mode must be \"normalized\" or \"non_normalized\"");
  for (const auto& f : array_field(j, "fibers"))
    s.fibers.push_back({integer_from_json(field(f, "alpha")), integer_from_json(field(f, "beta"))});
  if (const auto it = j.find("euler"); it != j.end() && !it->is_null())
    s.euler = integer_from_json(*it);
  return s;
}

Json to_json(const Presentation& p) {
  Json rel = Json::array();
  for (const auto& w : p.relators) rel.push_back(w);
  return Json{{"generators", p.n_generators}, {"relators", std::move(rel)}};
}

Presentation presentation_from_json(const Json& j) {
  Presentation p;
  p.n_generators = int_value(field(j, "generators"), "generator count");
  for (const auto& w : array_field(j, "relators")) p.relators.push_back(int_list(w, "relator"));
  return p;
}

Json to_json(const Diagram& dg) {
  Json xs = Json::array(), ys = Json::array();
  for (const auto& c : dg.x_curves) xs.push_back(c);
  for (const auto& c : dg.y_curves) ys.push_back(c);
  Json signs = Json::object();
  for (const auto& [id, sign] : dg.crossing_signs) signs[std::to_string(id)] = sign;
  return Json{{"genus", dg.declared_genus},
              {"x_curves", std::move(xs)},
              {"y_curves", std::move(ys)},
              {"signs", std::move(signs)}};
}

Diagram diagram_from_json(const Json& j) {
  Diagram dg;
  dg.declared_genus = small_int(field(j, "genus"), "genus");
  for (const auto& c : array_field(j, "x_curves")) dg.x_curves.push_back(id_list(c));
  for (const auto& c : array_field(j, "y_curves")) dg.y_curves.push_back(id_list(c));
  const Json& signs = field(j, "signs");
  if (!signs.is_object()) throw_parse("signs must be an object keyed by crossing id");
  for (const auto& [key, value] : signs.items()) {
    CrossingId id = 0;
    const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), id);
    if (ec != std::errc() || ptr != key.data() + key.size())
      throw_parse("sign key \"" + key + "\" is not a crossing id");
    dg.crossing_signs[id] = int_value(value, "sign");
  }
  return dg;
}

Json to_json(const PermutationPair& p) {
  return Json{{"sigma_x", p.sigma_x}, {"sigma_y", p.sigma_y}};
}

PermutationPair permutations_from_json(const Json& j) {
  return {int_list(field(j, "sigma_x"), "sigma_x"), int_list(field(j, "sigma_y"), "sigma_y")};
}

Json to_json(const CoverSpec& c) {
  Json parts = Json::array();
  for (const auto& part : c.partitions) {
    Json row = Json::array();
    for (const auto& b : part) row.push_back(integer_to_json(b));
    parts.push_back(std::move(row));
  }
  return Json{{"lambda", integer_to_json(c.lambda)}, {"partitions", std::move(parts)}};
}

CoverSpec cover_spec_from_json(const Json& j) {
  CoverSpec c;
  c.lambda = integer_from_json(field(j, "lambda"));
  for (const auto& part : array_field(j, "partitions")) {
    if (!part.is_array()) throw_parse("each partition must be an array");
    std::vector<Integer> row;
    for (const auto& b : part) row.push_back(integer_from_json(b));
    c.partitions.push_back(std::move(row));
  }
  return c;
}

Json to_json(const SnfResult& r) {
  Json factors = Json::array();
  for (const auto& f : r.invariant_factors) factors.push_back(integer_to_json(f));
  const AbelianGroup g = r.group();
  Json torsion = Json::array();
  for (const auto& t : g.torsion) torsion.push_back(integer_to_json(t));
  return Json{{"invariant_factors", std::move(factors)},
              {"free_rank", r.free_rank},
              {"torsion", std::move(torsion)},
              {"group", g.to_string()}};
}

Json to_json(const GenusReport& r) {
  Json j;
  j["hg"] = integer_to_json(r.hg);
  j["phg"] = Json::array({integer_to_json(r.phg_lo), integer_to_json(r.phg_hi)});
  j["exact"] = r.exact;
  j["case"] = to_string(r.case_tag);
  if (r.family)
    j["family"] = Json{{"id", to_string(r.family->id)},
                       {"n", integer_to_json(r.family->n)},
                       {"sign", r.family->sign}};
  if (r.horizontal_positive != HorizontalPositivity::Unknown)
    j["horizontal_positive"] = to_string(r.horizontal_positive);
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

Json to_json(const BaseCover& b) {
  return Json{{"lambda", integer_to_json(b.lambda)},
              {"base", to_json(b.base)},
              {"cover", to_json(b.spec)}};
}

BetaStarInput beta_star_input_from_json(const Json& j) {
  BetaStarInput in;
  in.lambda = integer_from_json(field(j, "lambda"));
  for (const auto& p : array_field(j, "pairs"))
    in.pairs.push_back({integer_from_json(field(p, "alpha")), integer_from_json(field(p, "beta"))});
  return in;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw_parse(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace posdiag::json
