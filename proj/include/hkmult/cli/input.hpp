#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "hkmult/families.hpp"
#include "hkmult/reptype.hpp"

namespace hkm::cli {

struct ExplicitToric {
    LatticePoint ray1, ray2;
    std::vector<LatticePoint> generators;
};

/// Either an A_{r-1} default (r set) or a user-supplied table with splitting vector.
struct RepTypeInput {
    std::optional<long> r;
    std::optional<TorTable> table;
    StableCMType u;
    std::optional<SplittingVector> v;
};

/// Declarative input. Integers may be JSON numbers or decimal strings;
/// rationals may also be "p/q" strings.
///
///   {"family": "a:3,1"}
///   {"cone": {"rays": [[1,0],[1,3]]}, "ideal": {"generators": [[1,0],[1,1]]}}
///   {"reptype": {"r": 3, "u": [1,0]}}
///   {"reptype": {"torTable": [[1,1],[1,1]], "u": [1,0], "v": ["1/3","1/3"]}}
struct InputDocument {
    nlohmann::json echo;
    std::optional<std::string> family;
    std::optional<ExplicitToric> explicitToric;
    std::optional<RepTypeInput> reptype;
};

InputDocument parseInputDocument(const nlohmann::json& doc);

/// The toric instance named by the document. Errc::BadInput unless exactly one
/// of family / explicit cone+ideal is present.
ToricInstance resolveToric(const InputDocument& doc);

Rat evaluateRepType(const RepTypeInput& input);

BigInt bigIntFromJson(const nlohmann::json& value);
Rat ratFromJson(const nlohmann::json& value);

} // namespace hkm::cli
