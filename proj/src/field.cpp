#include "srlab/field.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include "srlab/errors.hpp"

namespace srlab {

FieldSpec parse_field(const std::string& text) {
    if (text == "q" || text == "Q") return RationalField{};
    if (text.rfind("fp:", 0) != 0) throw Error(ErrorCode::InvalidField, "expected 'q' or 'fp:<prime>', got '" + text + "'");
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.size() > 19 || digits.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorCode::InvalidField, "bad prime '" + digits + "'");
    const unsigned long long p = std::stoull(digits);
    if (p < 2 || p >= (1ULL << 63)) throw Error(ErrorCode::InvalidField, "prime must lie in [2, 2^63)");
    std::mt19937_64 rng(p);
    if (!boost::multiprecision::miller_rabin_test(Integer(p), 32, rng))
        throw Error(ErrorCode::InvalidField, digits + " is not prime");
    return PrimeField{p};
}

std::string field_name(const FieldSpec& field) {
    return std::visit([](const auto& f) { return f.name(); }, field);
}

}  // namespace srlab
