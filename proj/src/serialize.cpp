#include "spinbar/serialize.hpp"

namespace spinbar {

void to_json(json& j, const Partition& x) { j = x.parts(); }
void from_json(const json& j, Partition& x) { x = Partition(j.get<std::vector<int>>()); }
void to_json(json& j, const BarPartition& x) { j = x.parts(); }
void from_json(const json& j, BarPartition& x) { x = BarPartition(j.get<std::vector<int>>()); }

void to_json(json& j, const BarAbacus& x) { j = json{{"t", x.t}, {"runners", x.runners}}; }

void from_json(const json& j, BarAbacus& x) {
  x.t = j.at("t").get<int>();
  x.runners = j.at("runners").get<std::vector<std::vector<int>>>();
}

void to_json(json& j, const TwistedBarAbacus& x) {
  json shifted = json::array();
  for (const auto& r : x.shifted) shifted.push_back({{"above", r.black_above}, {"below", r.white_below}});
  j = json{{"t", x.t}, {"runner0", x.runner0}, {"shifted", shifted}};
}

void from_json(const json& j, TwistedBarAbacus& x) {
  x.t = j.at("t").get<int>();
  x.runner0 = j.at("runner0").get<std::vector<int>>();
  x.shifted.clear();
  for (const auto& r : j.at("shifted"))
    x.shifted.push_back({r.at("above").get<std::vector<int>>(), r.at("below").get<std::vector<int>>()});
}

void to_json(json& j, const BarLittlewood& x) {
  j = json{{"t", x.t},         {"core", x.core},     {"quotient", x.quotient}, {"charvec", x.charvec},
           {"weight", x.weight}, {"cocore", x.cocore}, {"d", x.d}};
}

void from_json(const json& j, BarLittlewood& x) {
  x.t = j.at("t").get<int>();
  x.core = j.at("core").get<BarPartition>();
  x.quotient = j.at("quotient").get<std::vector<Partition>>();
  x.charvec = j.at("charvec").get<std::vector<int>>();
  x.weight = j.at("weight").get<int>();
  x.cocore = j.at("cocore").get<BarPartition>();
  x.d = j.at("d").get<int>();
}

void to_json(json& j, const OrdinaryLittlewood& x) {
  j = json{{"p", x.p},           {"core", x.core},     {"quotient", x.quotient}, {"charvec", x.charvec},
           {"weight", x.weight}, {"cocore", x.cocore}, {"d", nullptr}};
  if (x.d) j["d"] = *x.d;
}

void from_json(const json& j, OrdinaryLittlewood& x) {
  x.p = j.at("p").get<int>();
  x.core = j.at("core").get<Partition>();
  x.quotient = j.at("quotient").get<std::vector<Partition>>();
  x.charvec = j.at("charvec").get<std::vector<int>>();
  x.weight = j.at("weight").get<int>();
  x.cocore = j.at("cocore").get<Partition>();
  x.d.reset();
  if (!j.at("d").is_null()) x.d = j.at("d").get<int>();
}

void to_json(json& j, const GaloisElement& x) { j = json{{"p", x.p}, {"e", x.e}, {"s", x.s}}; }

GaloisElement galois_from_json(const json& j) {
  return {j.at("p").get<int>(), j.at("e").get<int>(), j.at("s").get<int>()};
}

void to_json(json& j, const CharLabel& x) {
  j = json{{"partition", x.partition},
           {"group", to_string(x.group)},
           {"flavor", to_string(x.flavor)},
           {"variant", to_string(x.variant)}};
}

void from_json(const json& j, CharLabel& x) {
  x.partition = j.at("partition").get<Partition>();
  x.group = parse_group(j.at("group").get<std::string>());
  x.flavor = parse_flavor(j.at("flavor").get<std::string>());
  x.variant = parse_variant(j.at("variant").get<std::string>());
}

void to_json(json& j, const GCharLabel& x) {
  j = json{{"mu", x.mu}, {"nu", x.nu}, {"group", to_string(x.group)}, {"variant", to_string(x.variant)}};
}

void from_json(const json& j, GCharLabel& x) {
  x.mu = j.at("mu").get<BarPartition>();
  x.nu = j.at("nu").get<BarPartition>();
  x.group = parse_group(j.at("group").get<std::string>());
  x.variant = parse_variant(j.at("variant").get<std::string>());
}

void to_json(json& j, const VerificationReport& x) {
  j = json{{"suite", x.suite},           {"p", x.p},         {"bound", x.bound},
           {"cases", x.cases},           {"violations", x.violations}, {"notes", x.notes}};
}

void from_json(const json& j, VerificationReport& x) {
  x.suite = j.at("suite").get<std::string>();
  x.p = j.at("p").get<int>();
  x.bound = j.at("bound").get<int>();
  x.cases = j.at("cases").get<long long>();
  x.violations = j.at("violations");
  x.notes = j.value("notes", json::object());
}

}  // namespace spinbar
