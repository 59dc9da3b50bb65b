#include "sgm/algebra/coefficients.hpp"

#include <algorithm>
#include <cctype>

#include "sgm/error.hpp"
#include "sgm/integer.hpp"

namespace sgm {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::coefficient_mismatch: return "coefficient mismatch";
    case ErrorKind::degree_cap: return "degree cap exceeded";
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::precondition: return "precondition violated";
    case ErrorKind::structural: return "structural error";
    case ErrorKind::syntax: return "syntax error";
    case ErrorKind::grammar: return "grammar violation";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::internal: return "internal error";
    }
    return "error";
}

bool is_prime(std::int64_t p)
{
    if (p < 2) return false;
    for (std::int64_t d = 2; d <= p / d; ++d)
        if (p % d == 0) return false;
    return true;
}

Coefficients Coefficients::mod_p(std::int64_t p)
{
    if (!is_prime(p)) fail(ErrorKind::invalid_argument, "Z/" + std::to_string(p) + ": modulus is not prime");
    return Coefficients(Kind::mod_p, p);
}

Coefficients Coefficients::parse(const std::string& text)
{
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t == "Z") return integers();
    if (t == "Q") return rationals();
    std::string digits;
    if (t.rfind("Zp:", 0) == 0) digits = t.substr(3);
    else if (t.rfind("Z/", 0) == 0) digits = t.substr(2);
    else fail(ErrorKind::invalid_argument, "unknown coefficient ring '" + text + "' (expected Z, Q or Zp:<p>)");
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        digits.size() > 18)
        fail(ErrorKind::invalid_argument, "bad modulus in '" + text + "'");
    return mod_p(std::stoll(digits));
}

std::string Coefficients::name() const
{
    switch (kind_) {
    case Kind::integers: return "Z";
    case Kind::rationals: return "Q";
    case Kind::mod_p: return "Zp:" + std::to_string(p_);
    }
    return "?";
}

std::int64_t Coefficients::reduce(std::int64_t v) const
{
    if (kind_ != Kind::mod_p) return v;
    std::int64_t r = v % p_;
    return r < 0 ? r + p_ : r;
}

}  // namespace sgm
