#include "boolefock/json_io.hpp"

#include <charconv>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace boolefock {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw std::invalid_argument(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return *it;
}

Index index_from_key(const std::string& key) {
  if (key == "#") return Index::vacuum();
  Site n = 0;
  const auto* end = key.data() + key.size();
  auto [ptr, ec] = std::from_chars(key.data(), end, n);
  if (key.empty() || ec != std::errc{} || ptr != end || n == 0) {
    throw std::invalid_argument("bad index '" + key + "': expected \"#\" or a positive integer");
  }
  return Index::site(n);
}

Site site_from_json(const json& j) {
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() == 0 ||
      j.get<std::uint64_t>() > std::numeric_limits<Site>::max()) {
    throw std::invalid_argument("bad site " + j.dump() + ": expected a positive integer");
  }
  return j.get<Site>();
}

}  // namespace

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument("bad complex " + j.dump() + ": expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace boolefock

namespace nlohmann {

using boolefock::complex_from_json;
using boolefock::complex_to_json;

void adl_serializer<boolefock::Index>::to_json(json& j, const boolefock::Index& x) {
  if (x.is_vacuum()) {
    j = "#";
  } else {
    j = x.site_label();
  }
}

boolefock::Index adl_serializer<boolefock::Index>::from_json(const json& j) {
  if (j.is_string()) return boolefock::index_from_key(j.get<std::string>());
  return boolefock::Index::site(boolefock::site_from_json(j));
}

void adl_serializer<boolefock::BooleanElement>::to_json(json& j, const boolefock::BooleanElement& x) {
  json compact = json::array();
  for (const auto& [rc, amp] : x.compact()) {
    compact.push_back({{"row", rc.first}, {"col", rc.second}, {"amp", complex_to_json(amp)}});
  }
  j = {{"scalar", complex_to_json(x.scalar())}, {"compact", std::move(compact)}};
}

boolefock::BooleanElement adl_serializer<boolefock::BooleanElement>::from_json(const json& j) {
  const json& compact = boolefock::field(j, "compact");
  if (!compact.is_array()) throw std::invalid_argument("'compact' must be an array");
  boolefock::BooleanElement::Entries entries;
  for (const auto& e : compact) {
    const boolefock::IndexPair rc{boolefock::field(e, "row").get<boolefock::Index>(),
                                  boolefock::field(e, "col").get<boolefock::Index>()};
    if (!entries.emplace(rc, complex_from_json(boolefock::field(e, "amp"))).second) {
      throw std::invalid_argument("duplicate compact entry (" + rc.first.to_string() + ", " +
                                  rc.second.to_string() + ")");
    }
  }
  return boolefock::BooleanElement{std::move(entries), complex_from_json(boolefock::field(j, "scalar"))};
}

void adl_serializer<boolefock::FockVector>::to_json(json& j, const boolefock::FockVector& x) {
  j = json::object();
  for (const auto& [i, amp] : x.amplitudes()) j[i.to_string()] = complex_to_json(amp);
}

boolefock::FockVector adl_serializer<boolefock::FockVector>::from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("a Fock vector must be an object");
  boolefock::FockVector::Amplitudes amps;
  for (const auto& [key, value] : j.items()) amps.emplace(boolefock::index_from_key(key), complex_from_json(value));
  return boolefock::FockVector{std::move(amps)};
}

void adl_serializer<boolefock::TestAlgebraElement>::to_json(json& j, const boolefock::TestAlgebraElement& x) {
  j = {{"a", complex_to_json(x.a)},
       {"b", complex_to_json(x.b)},
       {"c", complex_to_json(x.c)},
       {"d", complex_to_json(x.d)},
       {"beta", complex_to_json(x.beta)}};
}

boolefock::TestAlgebraElement adl_serializer<boolefock::TestAlgebraElement>::from_json(const json& j) {
  using boolefock::field;
  return {complex_from_json(field(j, "a")), complex_from_json(field(j, "b")), complex_from_json(field(j, "c")),
          complex_from_json(field(j, "d")), complex_from_json(field(j, "beta"))};
}

void adl_serializer<boolefock::FinitePermutation>::to_json(json& j, const boolefock::FinitePermutation& x) {
  json map = json::object();
  for (const auto& [from, to] : x.mapping()) map[std::to_string(from)] = to;
  j = {{"map", std::move(map)}};
}

boolefock::FinitePermutation adl_serializer<boolefock::FinitePermutation>::from_json(const json& j) {
  const json& map = boolefock::field(j, "map");
  if (!map.is_object()) throw std::invalid_argument("'map' must be an object");
  std::map<boolefock::Site, boolefock::Site> mapping;
  for (const auto& [key, value] : map.items()) {
    const boolefock::Index from = boolefock::index_from_key(key);
    if (from.is_vacuum()) throw std::invalid_argument("permutations act on sites only");
    mapping.emplace(from.site_label(), boolefock::site_from_json(value));
  }
  return boolefock::FinitePermutation{std::move(mapping)};
}

void adl_serializer<boolefock::TraceClassOperator>::to_json(json& j, const boolefock::TraceClassOperator& x) {
  json pairs = json::array();
  for (const auto& p : x.eigenpairs()) pairs.push_back({{"weight", p.weight}, {"vector", p.vector}});
  j = {{"eigenpairs", std::move(pairs)}};
}

boolefock::TraceClassOperator adl_serializer<boolefock::TraceClassOperator>::from_json(const json& j) {
  const json& pairs = boolefock::field(j, "eigenpairs");
  if (!pairs.is_array()) throw std::invalid_argument("'eigenpairs' must be an array");
  std::vector<boolefock::Eigenpair> out;
  for (const auto& p : pairs) {
    out.push_back({boolefock::field(p, "weight").get<double>(),
                   boolefock::field(p, "vector").get<boolefock::FockVector>()});
  }
  return boolefock::TraceClassOperator{std::move(out)};
}

void adl_serializer<boolefock::BooleanState>::to_json(json& j, const boolefock::BooleanState& x) {
  j = {{"gamma", x.gamma()}, {"T", x.density()}};
}

boolefock::BooleanState adl_serializer<boolefock::BooleanState>::from_json(const json& j) {
  const double gamma = boolefock::field(j, "gamma").get<double>();
  if (gamma == 0.0 && !j.contains("T")) return boolefock::infinity_state();
  return boolefock::BooleanState{gamma, boolefock::field(j, "T").get<boolefock::TraceClassOperator>()};
}

void adl_serializer<boolefock::TailElement>::to_json(json& j, const boolefock::TailElement& x) {
  j = {{"x", complex_to_json(x.x)}, {"y", complex_to_json(x.y)}};
}

boolefock::TailElement adl_serializer<boolefock::TailElement>::from_json(const json& j) {
  return {complex_from_json(boolefock::field(j, "x")), complex_from_json(boolefock::field(j, "y"))};
}

void adl_serializer<boolefock::PhiState>::to_json(json& j, const boolefock::PhiState& x) {
  if (x.is_singular()) {
    j = {{"kind", "singular"}};
  } else {
    j = {{"kind", "normal"}, {"S", x.density()}};
  }
}

boolefock::PhiState adl_serializer<boolefock::PhiState>::from_json(const json& j) {
  const auto kind = boolefock::field(j, "kind").get<std::string>();
  if (kind == "singular") return boolefock::PhiState::singular();
  if (kind == "normal") {
    return boolefock::PhiState::normal(boolefock::field(j, "S").get<boolefock::TraceClassOperator>());
  }
  throw std::invalid_argument("unknown phi kind '" + kind + "'");
}

void adl_serializer<boolefock::Letter>::to_json(json& j, const boolefock::Letter& x) {
  j = {{"site", x.site}, {"A", x.value}};
}

boolefock::Letter adl_serializer<boolefock::Letter>::from_json(const json& j) {
  return {boolefock::site_from_json(boolefock::field(j, "site")),
          boolefock::field(j, "A").get<boolefock::TestAlgebraElement>()};
}

}  // namespace nlohmann
