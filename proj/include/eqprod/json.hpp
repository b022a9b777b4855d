#pragma once

#include "eqprod/product_side.hpp"
#include "eqprod/sum_side.hpp"
#include "eqprod/thresholds.hpp"

#include <json.hpp>

namespace eqprod {

// 128-bit values are written as JSON numbers when they fit in 64 bits and
// as decimal strings otherwise; both forms are accepted on input.
nlohmann::json u128_to_json(u128 v);
u128 u128_from_json(const nlohmann::json& j);

nlohmann::json multiset_to_json(const PartitionMultiset& m);
PartitionMultiset multiset_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const Triple& t);
void from_json(const nlohmann::json& j, Triple& t);

void to_json(nlohmann::json& j, const Family& f);
void from_json(const nlohmann::json& j, Family& f);

void to_json(nlohmann::json& j, const WitnessPair& w);
void from_json(const nlohmann::json& j, WitnessPair& w);

void to_json(nlohmann::json& j, const ChiCertificate& c);
void from_json(const nlohmann::json& j, ChiCertificate& c);

void to_json(nlohmann::json& j, const ThresholdRecord& r);
void from_json(const nlohmann::json& j, ThresholdRecord& r);

void to_json(nlohmann::json& j, const AdmissibilityReport& r);
void to_json(nlohmann::json& j, const ConjectureRow& row);

} // namespace eqprod

// WitnessPair has no empty state, so it is read through a non-default serializer.
template <>
struct nlohmann::adl_serializer<eqprod::WitnessPair> {
    static eqprod::WitnessPair from_json(const nlohmann::json& j);
    static void to_json(nlohmann::json& j, const eqprod::WitnessPair& w) { eqprod::to_json(j, w); }
};
