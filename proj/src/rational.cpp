#include "hkmult/rational.hpp"

#include <cctype>

#include "hkmult/error.hpp"

namespace hkm {

const char* errcName(Errc code) noexcept {
    switch (code) {
    case Errc::CollinearRays: return "CollinearRays";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::UnboundedRegion: return "UnboundedRegion";
    case Errc::NotNested: return "NotNested";
    case Errc::GeneratorOutsideCone: return "GeneratorOutsideCone";
    case Errc::NotSaturated: return "NotSaturated";
    case Errc::NotMPrimary: return "NotMPrimary";
    case Errc::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case Errc::NoStabilization: return "NoStabilization";
    case Errc::BadParameters: return "BadParameters";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::AsymmetricTable: return "AsymmetricTable";
    case Errc::BadInput: return "BadInput";
    }
    return "Unknown";
}

bool isContractViolation(Errc code) noexcept {
    return code == Errc::UnboundedRegion || code == Errc::NotNested ||
           code == Errc::NonIntegralMultiplicity;
}

BigInt floorDiv(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

BigInt ceilDiv(const BigInt& a, const BigInt& b) { return -floorDiv(-a, b); }

BigInt floorMod(const BigInt& a, const BigInt& b) { return a - b * floorDiv(a, b); }

BigInt ipow(const BigInt& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

std::string toString(const BigInt& n) { return n.str(); }

std::string toString(const Rat& r) {
    if (denom(r) == 1)
        return numer(r).str();
    return numer(r).str() + "/" + denom(r).str();
}

BigInt parseBigInt(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
    if (digits.empty())
        throw Error(Errc::BadInput, "empty integer literal '" + std::string(text) + "'");
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw Error(Errc::BadInput, "malformed integer literal '" + std::string(text) + "'");
    BigInt value{std::string(digits)};
    return text.front() == '-' ? BigInt(-value) : value;
}

Rat parseRat(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rat(parseBigInt(text));
    BigInt num = parseBigInt(text.substr(0, slash));
    BigInt den = parseBigInt(text.substr(slash + 1));
    if (den == 0)
        throw Error(Errc::BadInput, "zero denominator in '" + std::string(text) + "'");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

std::string toDecimal(const Rat& r, int digits) {
    if (r == 0)
        return "0";
    BigInt a = abs(numer(r));
    BigInt b = denom(r);

    // Find shift k with 10^(digits-1) <= a*10^k/b < 10^digits.
    const BigInt lo = ipow(10, static_cast<unsigned>(digits - 1));
    const BigInt hi = lo * 10;
    long k = 0;
    auto scaled = [&](long shift) {
        return shift >= 0 ? BigInt(a * ipow(10, static_cast<unsigned>(shift)) / b)
                          : BigInt(a / (b * ipow(10, static_cast<unsigned>(-shift))));
    };
    while (scaled(k) >= hi) --k;
    while (scaled(k) < lo) ++k;

    // Round half up at the last kept digit.
    BigInt n;
    if (k >= 0) {
        BigInt num = a * ipow(10, static_cast<unsigned>(k));
        n = (2 * num + b) / (2 * b);
    } else {
        BigInt den = b * ipow(10, static_cast<unsigned>(-k));
        n = (2 * a + den) / (2 * den);
    }
    if (n == hi) {
        n /= 10;
        --k;
    }

    std::string body = n.str();
    std::string out;
    if (k <= 0) {
        out = body + std::string(static_cast<size_t>(-k), '0');
    } else {
        auto len = static_cast<long>(body.size());
        if (k >= len)
            body = std::string(static_cast<size_t>(k - len + 1), '0') + body;
        out = body.substr(0, body.size() - static_cast<size_t>(k)) + "." +
              body.substr(body.size() - static_cast<size_t>(k));
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return r < 0 ? "-" + out : out;
}

} // namespace hkm
