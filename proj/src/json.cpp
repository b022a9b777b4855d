#include "eqprod/json.hpp"

#include "eqprod/error.hpp"

#include <limits>

namespace eqprod {

using nlohmann::json;

json u128_to_json(u128 v)
{
    if (v <= std::numeric_limits<std::uint64_t>::max())
        return static_cast<std::uint64_t>(v);
    return to_string(v);
}

u128 u128_from_json(const json& j)
{
    if (j.is_number_unsigned())
        return j.get<std::uint64_t>();
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
        return static_cast<u128>(j.get<std::int64_t>());
    if (j.is_string()) {
        if (auto v = parse_u128(j.get<std::string>()))
            return *v;
    }
    throw Error(ErrorCode::InvalidArgument, "expected a nonnegative integer, got " + j.dump());
}

json multiset_to_json(const PartitionMultiset& m)
{
    return m.parts();
}

PartitionMultiset multiset_from_json(const json& j)
{
    return PartitionMultiset::canonicalize(j.get<std::vector<std::int64_t>>());
}

void to_json(json& j, const Triple& t)
{
    j = json{{"s", t.s}, {"p", u128_to_json(t.p)}, {"n", t.n}};
}

void from_json(const json& j, Triple& t)
{
    t.s = j.at("s").get<std::uint64_t>();
    t.p = u128_from_json(j.at("p"));
    t.n = j.at("n").get<std::uint64_t>();
}

void to_json(json& j, const Family& f)
{
    json members = json::array();
    for (const auto& m : f.members)
        members.push_back(multiset_to_json(m));
    j = json{{"s", f.triple.s}, {"n", f.triple.n}, {"product", u128_to_json(f.triple.p)}, {"members", members}};
}

void from_json(const json& j, Family& f)
{
    std::vector<PartitionMultiset> members;
    for (const auto& m : j.at("members"))
        members.push_back(multiset_from_json(m));
    f = Family::make(std::move(members));
}

void to_json(json& j, const WitnessPair& w)
{
    j = json{{"X", multiset_to_json(w.X)}, {"Y", multiset_to_json(w.Y)}, {"triple", w.triple()}};
}

void from_json(const json& j, WitnessPair& w)
{
    w = WitnessPair::make(multiset_from_json(j.at("X")), multiset_from_json(j.at("Y")));
}

void to_json(json& j, const ChiCertificate& c)
{
    json terms = json::array();
    for (const auto& [e, coef] : c.chi.terms())
        terms.push_back(json{{"exponents", e}, {"coefficient", coef}});
    j = json{{"primes", c.primes}, {"exponents", c.exponents}, {"terms", terms}, {"polynomial", to_string(c.chi)}};
}

void from_json(const json& j, ChiCertificate& c)
{
    c.primes = j.at("primes").get<std::vector<std::uint64_t>>();
    c.exponents = j.at("exponents").get<std::vector<unsigned>>();
    if (c.primes.empty())
        throw Error(ErrorCode::InvalidArgument, "certificate needs at least one prime");
    IntPolynomial chi(c.primes.size());
    for (const auto& t : j.at("terms"))
        chi.add_term(t.at("exponents").get<Exponents>(), t.at("coefficient").get<std::int64_t>());
    c.chi = std::move(chi);
}

namespace {

template <class T>
json optional_to_json(const std::optional<T>& v)
{
    return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from_json(const json& j, const char* key)
{
    if (!j.contains(key) || j.at(key).is_null())
        return std::nullopt;
    return j.at(key).get<T>();
}

} // namespace

void to_json(json& j, const ThresholdRecord& r)
{
    j = json{{"n", r.n},
             {"r", r.r},
             {"s0", optional_to_json(r.s0)},
             {"sstar", optional_to_json(r.sstar)},
             {"witness", optional_to_json(r.witness)},
             {"certified_to", optional_to_json(r.certified_to)}};
}

void from_json(const json& j, ThresholdRecord& r)
{
    r.n = j.at("n").get<std::uint64_t>();
    r.r = j.at("r").get<std::uint64_t>();
    r.s0 = optional_from_json<std::uint64_t>(j, "s0");
    r.sstar = optional_from_json<std::uint64_t>(j, "sstar");
    r.witness = optional_from_json<Family>(j, "witness");
    r.certified_to = optional_from_json<std::uint64_t>(j, "certified_to");
}

void to_json(json& j, const AdmissibilityReport& r)
{
    json witnesses = json::object();
    for (const auto& [n, fam] : r.witnesses)
        witnesses[std::to_string(n)] = fam;
    j = json{{"s", r.s}, {"F", r.F}, {"f", r.f}, {"witnesses", witnesses}};
}

void to_json(json& j, const ConjectureRow& row)
{
    j = json{{"conjecture", row.conjecture}, {"n", row.n},     {"r", row.r},
             {"lhs", row.lhs},               {"rhs", row.rhs}, {"status", row.hold ? "HOLD" : "FAIL"}};
}

} // namespace eqprod

eqprod::WitnessPair nlohmann::adl_serializer<eqprod::WitnessPair>::from_json(const nlohmann::json& j)
{
    return eqprod::WitnessPair::make(eqprod::multiset_from_json(j.at("X")), eqprod::multiset_from_json(j.at("Y")));
}
