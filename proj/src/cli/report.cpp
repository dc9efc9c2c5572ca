#include "hkmult/cli/report.hpp"

#include <limits>

namespace hkm::cli {

using nlohmann::json;

json ratJson(const Rat& value) {
    return {{"exact", toString(value)}, {"decimal", std::stod(toDecimal(value, 12))}};
}

json countJson(const BigInt& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
        return value.convert_to<std::int64_t>();
    return value.str();
}

json countsJson(std::span<const BigInt> values) {
    json out = json::array();
    for (const BigInt& v : values) out.push_back(countJson(v));
    return out;
}

json pointJson(const LatticePoint& p) { return json::array({countJson(p.x1), countJson(p.x2)}); }

json instanceJson(const ToricInstance& instance) {
    const Cone2& cone = instance.cone;
    json gens = json::array();
    for (const LatticePoint& g : instance.ideal.generators()) gens.push_back(pointJson(g));
    json corners = json::array();
    for (const Corner& c : instance.ideal.staircase().corners())
        corners.push_back(json::array({countJson(c.s), countJson(c.t)}));
    const Thresholds th = lcThresholds(instance.ideal);
    json out = {
        {"label", describe(instance.label)},
        {"cone",
         {{"rays", json::array({pointJson(cone.ray1()), pointJson(cone.ray2())})},
          {"normals", json::array({pointJson(cone.normal1()), pointJson(cone.normal2())})},
          {"detAbs", countJson(cone.detAbs())}}},
        {"generators", gens},
        {"staircase", corners},
        {"thresholds", json::array({countJson(th.c1), countJson(th.c2)})},
    };
    return out;
}

json quasiPolynomialJson(const QuasiPolynomial& qp) {
    json classes = json::array();
    for (const auto& c : qp.perClassCoefficients)
        classes.push_back({{"a2", ratJson(c[0])}, {"a1", ratJson(c[1])}, {"a0", ratJson(c[2])}});
    return {{"period", qp.period}, {"onsetIndex", qp.onsetIndex}, {"leading", ratJson(qp.leading())},
            {"classes", classes}};
}

} // namespace hkm::cli
