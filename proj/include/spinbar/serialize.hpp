#pragma once

#include <json.hpp>

#include "spinbar/abacus.hpp"
#include "spinbar/blocks.hpp"
#include "spinbar/characters.hpp"
#include "spinbar/galois.hpp"
#include "spinbar/humphreys.hpp"
#include "spinbar/littlewood.hpp"
#include "spinbar/partition.hpp"

namespace spinbar {

using nlohmann::json;

void to_json(json& j, const Partition& x);
void from_json(const json& j, Partition& x);
void to_json(json& j, const BarPartition& x);
void from_json(const json& j, BarPartition& x);

void to_json(json& j, const BarAbacus& x);
void from_json(const json& j, BarAbacus& x);
void to_json(json& j, const TwistedBarAbacus& x);
void from_json(const json& j, TwistedBarAbacus& x);

void to_json(json& j, const BarLittlewood& x);
void from_json(const json& j, BarLittlewood& x);
void to_json(json& j, const OrdinaryLittlewood& x);
void from_json(const json& j, OrdinaryLittlewood& x);

void to_json(json& j, const GaloisElement& x);
GaloisElement galois_from_json(const json& j);

void to_json(json& j, const CharLabel& x);
void from_json(const json& j, CharLabel& x);
void to_json(json& j, const GCharLabel& x);
void from_json(const json& j, GCharLabel& x);

void to_json(json& j, const VerificationReport& x);
void from_json(const json& j, VerificationReport& x);

}  // namespace spinbar
