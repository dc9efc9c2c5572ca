#include "hkmult/families.hpp"

#include <cctype>

#include "hkmult/error.hpp"

namespace hkm {

namespace {

void requireRange(long r, long m) {
    if (r < 2 || m < 1 || m > r - 1)
        throw Error(Errc::BadParameters, "need r >= 2 and 1 <= m <= r-1, got r=" + std::to_string(r) +
                                             ", m=" + std::to_string(m));
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

long parseLong(std::string_view text) {
    BigInt v = parseBigInt(trim(text));
    if (v > 1000000 || v < -1000000)
        throw Error(Errc::BadInput, "family parameter out of range: " + std::string(text));
    return v.convert_to<long>();
}

std::pair<long, long> parseRM(std::string_view args) {
    auto comma = args.find(',');
    if (comma == std::string_view::npos)
        throw Error(Errc::BadInput, "expected 'r,m', got '" + std::string(args) + "'");
    return {parseLong(args.substr(0, comma)), parseLong(args.substr(comma + 1))};
}

LatticePoint parsePair(std::string_view text) {
    text = trim(text);
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw Error(Errc::BadInput, "expected '(a,b)', got '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
    auto comma = text.find(',');
    if (comma == std::string_view::npos)
        throw Error(Errc::BadInput, "expected '(a,b)', got '(" + std::string(text) + ")'");
    return {parseBigInt(trim(text.substr(0, comma))), parseBigInt(trim(text.substr(comma + 1)))};
}

} // namespace

ToricInstance veronese(long r, long m) {
    requireRange(r, m);
    Cone2 cone = makeCone({1, 0}, {1, r});
    std::vector<LatticePoint> gens;
    for (long k = 0; k <= m; ++k) gens.push_back({1, k});
    MonomialIdeal ideal(cone, std::move(gens));
    return {cone, std::move(ideal), {"veronese", r, m}, Rat(m * (m + 1), 2 * r)};
}

ToricInstance aSingularity(long r, long m) {
    requireRange(r, m);
    Cone2 cone = makeCone({0, 1}, {r, -1});
    MonomialIdeal ideal(cone, {{r, -1}, {m, 0}});
    return {cone, std::move(ideal), {"a", r, m}, Rat(m * (r - m), r)};
}

ToricInstance quadrant(std::vector<LatticePoint> gens) {
    Cone2 cone = makeCone({1, 0}, {0, 1});
    MonomialIdeal ideal(cone, std::move(gens));
    return {cone, std::move(ideal), {"quadrant", 0, 0}, std::nullopt};
}

ToricInstance explicitInstance(LatticePoint ray1, LatticePoint ray2, std::vector<LatticePoint> gens) {
    Cone2 cone = makeCone(std::move(ray1), std::move(ray2));
    MonomialIdeal ideal(cone, std::move(gens));
    return {cone, std::move(ideal), {"explicit", 0, 0}, std::nullopt};
}

ToricInstance parseFamily(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw Error(Errc::BadInput, "family string '" + std::string(text) + "' lacks ':'");
    std::string_view name = trim(text.substr(0, colon));
    std::string_view args = text.substr(colon + 1);
    if (name == "veronese") {
        auto [r, m] = parseRM(args);
        return veronese(r, m);
    }
    if (name == "a") {
        auto [r, m] = parseRM(args);
        return aSingularity(r, m);
    }
    if (name == "quadrant") {
        std::vector<LatticePoint> gens;
        while (!trim(args).empty()) {
            auto semi = args.find(';');
            gens.push_back(parsePair(args.substr(0, semi)));
            if (semi == std::string_view::npos)
                break;
            args.remove_prefix(semi + 1);
        }
        return quadrant(std::move(gens));
    }
    throw Error(Errc::BadInput, "unknown family '" + std::string(name) + "'");
}

std::string describe(const FamilyLabel& label) {
    if (label.family == "veronese" || label.family == "a")
        return label.family + ":" + std::to_string(label.r) + "," + std::to_string(label.m);
    return label.family;
}

} // namespace hkm
