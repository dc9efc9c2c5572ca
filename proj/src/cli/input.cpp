#include "hkmult/cli/input.hpp"

#include "hkmult/error.hpp"

namespace hkm::cli {

using nlohmann::json;

namespace {

LatticePoint pointFromJson(const json& value) {
    if (!value.is_array() || value.size() != 2)
        throw Error(Errc::BadInput, "expected an integer pair, got " + value.dump());
    return {bigIntFromJson(value[0]), bigIntFromJson(value[1])};
}

const json& member(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key))
        throw Error(Errc::BadInput, std::string("missing field '") + key + "'");
    return obj.at(key);
}

RepTypeInput repTypeFromJson(const json& value) {
    RepTypeInput in;
    for (const json& x : member(value, "u")) in.u.u.push_back(bigIntFromJson(x));
    for (const BigInt& x : in.u.u)
        if (x < 0)
            throw Error(Errc::BadInput, "stable CM type entries must be nonnegative");
    if (value.contains("r")) {
        BigInt r = bigIntFromJson(value.at("r"));
        if (r < 2 || r > 100000)
            throw Error(Errc::BadInput, "reptype.r must lie in [2, 100000]");
        in.r = r.convert_to<long>();
    }
    if (value.contains("torTable")) {
        std::vector<std::vector<BigInt>> rows;
        for (const json& row : value.at("torTable")) {
            if (!row.is_array())
                throw Error(Errc::BadInput, "torTable must be a matrix");
            auto& out = rows.emplace_back();
            for (const json& x : row) out.push_back(bigIntFromJson(x));
        }
        in.table = TorTable::fromRows(rows);
    }
    if (value.contains("v")) {
        SplittingVector v;
        for (const json& x : value.at("v")) v.v.push_back(ratFromJson(x));
        in.v = std::move(v);
    }
    if (in.r.has_value() == in.table.has_value())
        throw Error(Errc::BadInput, "reptype needs exactly one of 'r' or 'torTable'");
    if (in.table && !in.v)
        throw Error(Errc::BadInput, "a user-supplied torTable needs a splitting vector 'v'");
    return in;
}

} // namespace

BigInt bigIntFromJson(const json& value) {
    if (value.is_number_integer())
        return value.is_number_unsigned() ? BigInt(value.get<std::uint64_t>()) : BigInt(value.get<std::int64_t>());
    if (value.is_string())
        return parseBigInt(value.get<std::string>());
    throw Error(Errc::BadInput, "expected an integer, got " + value.dump());
}

Rat ratFromJson(const json& value) {
    if (value.is_string())
        return parseRat(value.get<std::string>());
    if (value.is_object() && value.contains("exact"))
        return ratFromJson(value.at("exact"));
    return Rat(bigIntFromJson(value));
}

InputDocument parseInputDocument(const json& doc) {
    if (!doc.is_object())
        throw Error(Errc::BadInput, "input document must be a JSON object");
    InputDocument in;
    in.echo = doc;
    if (doc.contains("family")) {
        if (!doc.at("family").is_string())
            throw Error(Errc::BadInput, "'family' must be a string");
        in.family = doc.at("family").get<std::string>();
    }
    if (doc.contains("cone") || doc.contains("ideal")) {
        const json& rays = member(member(doc, "cone"), "rays");
        if (!rays.is_array() || rays.size() != 2)
            throw Error(Errc::BadInput, "cone.rays must hold exactly two integer pairs");
        ExplicitToric ex{pointFromJson(rays[0]), pointFromJson(rays[1]), {}};
        const json& gens = member(member(doc, "ideal"), "generators");
        if (!gens.is_array())
            throw Error(Errc::BadInput, "ideal.generators must be a list of integer pairs");
        for (const json& g : gens) ex.generators.push_back(pointFromJson(g));
        in.explicitToric = std::move(ex);
    }
    if (in.family && in.explicitToric)
        throw Error(Errc::BadInput, "give either 'family' or 'cone'+'ideal', not both");
    if (doc.contains("reptype"))
        in.reptype = repTypeFromJson(doc.at("reptype"));
    return in;
}

ToricInstance resolveToric(const InputDocument& doc) {
    if (doc.family)
        return parseFamily(*doc.family);
    if (doc.explicitToric)
        return explicitInstance(doc.explicitToric->ray1, doc.explicitToric->ray2, doc.explicitToric->generators);
    throw Error(Errc::BadInput, "no toric input: give 'family' or 'cone'+'ideal'");
}

Rat evaluateRepType(const RepTypeInput& input) {
    if (input.r) {
        if (input.v) {
            TorTable table = aTorTable(*input.r);
            return egHKFromType(input.u, *input.v, table);
        }
        return egHK_A(*input.r, input.u);
    }
    return egHKFromType(input.u, *input.v, *input.table);
}

} // namespace hkm::cli
