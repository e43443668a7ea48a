#include "ybp/codec.hpp"

#include <fstream>

#include "ybp/error.hpp"

namespace ybp {

using nlohmann::json;

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
  fail(Errc::SchemaError, "at " + path + ": " + what);
}

void require_keys(const json& obj, const std::string& path,
                  std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) { ok = true; break; }
    if (!ok) schema_fail(path + "/" + it.key(), "unknown field");
  }
}

Index read_index(const json& v, const std::string& path) {
  if (!v.is_number_unsigned()) schema_fail(path, "expected a natural number");
  return v.get<Index>();
}

std::vector<PartialBijection> read_family(const json& arr, const std::string& path,
                                          Index n) {
  if (!arr.is_array()) schema_fail(path, "expected an array");
  Carrier c = Carrier::finite(n);
  std::vector<bool> present(n, false);
  std::vector<PartialBijection> fam(n, PartialBijection::empty(c));
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string here = path + "/" + std::to_string(i);
    const json& entry = arr[i];
    if (!entry.is_object()) schema_fail(here, "expected an object");
    require_keys(entry, here, {"x", "map"});
    if (!entry.contains("x")) schema_fail(here, "missing field x");
    if (!entry.contains("map")) schema_fail(here, "missing field map");
    Index x = read_index(entry["x"], here + "/x");
    if (x >= n) schema_fail(here + "/x", "generator index beyond carrier size");
    if (present[x]) schema_fail(here + "/x", "duplicate entry for this generator");
    present[x] = true;
    const json& map = entry["map"];
    if (!map.is_array()) schema_fail(here + "/map", "expected an array of pairs");
    std::vector<std::pair<Index, Index>> pairs;
    for (std::size_t k = 0; k < map.size(); ++k) {
      std::string at = here + "/map/" + std::to_string(k);
      const json& pr = map[k];
      if (!pr.is_array() || pr.size() != 2) schema_fail(at, "expected a pair [a,b]");
      Index a = read_index(pr[0], at + "/0");
      Index b = read_index(pr[1], at + "/1");
      if (a >= n || b >= n) schema_fail(at, "index beyond carrier size");
      for (const auto& [a0, _] : pairs)
        if (a0 == a) schema_fail(at, "duplicate domain point");
      pairs.emplace_back(a, b);
    }
    try {
      fam[x] = PartialBijection::from_pairs(c, pairs);
    } catch (const Error& e) {
      if (e.code() == Errc::NotInjective)
        fail(Errc::NonInjectiveSigma,
             "at " + here + ": map is not injective");
      throw;
    }
  }
  return fam;
}

}  // namespace

json save_solution(const PartialSolution& S) {
  json doc = json::object();
  if (S.carrier().countable()) {
    doc["carrier"] = {{"kind", "countable"}, {"family", "thompson"}};
    return doc;
  }
  Index n = S.carrier().size();
  doc["carrier"] = {{"kind", "finite"}, {"size", n}};
  for (const char* fam : {"sigma", "gamma"}) {
    json arr = json::array();
    for (Index x = 0; x < n; ++x) {
      PartialBijection m = fam[0] == 's' ? S.sigma(x) : S.gamma(x);
      json map = json::array();
      for (Index k : m.domain().members_below(n))
        map.push_back(json::array({k, *m.apply(k)}));
      arr.push_back({{"x", x}, {"map", map}});
    }
    doc[fam] = arr;
  }
  return doc;
}

PartialSolution load_solution(const json& doc) {
  if (!doc.is_object()) schema_fail("/", "expected an object");
  require_keys(doc, "", {"carrier", "sigma", "gamma"});
  if (!doc.contains("carrier")) schema_fail("/", "missing field carrier");
  const json& car = doc["carrier"];
  if (!car.is_object()) schema_fail("/carrier", "expected an object");
  if (!car.contains("kind")) schema_fail("/carrier", "missing field kind");
  if (!car["kind"].is_string()) schema_fail("/carrier/kind", "expected a string");
  std::string kind = car["kind"].get<std::string>();

  if (kind == "countable") {
    require_keys(car, "/carrier", {"kind", "family"});
    if (!car.contains("family")) schema_fail("/carrier", "missing field family");
    if (!car["family"].is_string())
      schema_fail("/carrier/family", "expected a string");
    std::string family = car["family"].get<std::string>();
    if (family != "thompson")
      schema_fail("/carrier/family", "unknown family '" + family + "'");
    if (doc.contains("sigma") || doc.contains("gamma"))
      schema_fail("/", "countable carriers take no explicit map lists");
    return PartialSolution::thompson();
  }
  if (kind != "finite") schema_fail("/carrier/kind", "expected finite or countable");

  require_keys(car, "/carrier", {"kind", "size"});
  if (!car.contains("size")) schema_fail("/carrier", "missing field size");
  Index n = read_index(car["size"], "/carrier/size");
  if (!doc.contains("sigma")) schema_fail("/", "missing field sigma");
  if (!doc.contains("gamma")) schema_fail("/", "missing field gamma");
  auto sigma = read_family(doc["sigma"], "/sigma", n);
  auto gamma = read_family(doc["gamma"], "/gamma", n);
  return PartialSolution::finite(std::move(sigma), std::move(gamma));
}

PartialSolution load_solution_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::SchemaError, "cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    fail(Errc::SchemaError, "cannot parse " + path + ": " + e.what());
  }
  return load_solution(doc);
}

void save_solution_file(const PartialSolution& S, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::SchemaError, "cannot open " + path + " for writing");
  out << save_solution(S).dump(2) << "\n";
}

}  // namespace ybp
