#pragma once

#include <cstdint>
#include <string>

namespace sgm {

/// The coefficient ring: the integers, the rationals, or a prime field.
class Coefficients {
  public:
    enum class Kind { integers, rationals, mod_p };

    static Coefficients integers() { return Coefficients(Kind::integers, 0); }
    static Coefficients rationals() { return Coefficients(Kind::rationals, 0); }
    /// Throws if `p` is not prime.
    static Coefficients mod_p(std::int64_t p);
    /// Accepts "Z", "Q", "Zp:<p>" (also "Z/<p>").
    static Coefficients parse(const std::string& text);

    Kind kind() const { return kind_; }
    std::int64_t prime() const { return p_; }
    bool is_field() const { return kind_ != Kind::integers; }
    std::string name() const;

    /// Reduces an integer into canonical form: identity over Z and Q,
    /// representative in [0, p) over Z/p.
    std::int64_t reduce(std::int64_t v) const;

    friend bool operator==(const Coefficients& a, const Coefficients& b)
    {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }

  private:
    Coefficients(Kind kind, std::int64_t p) : kind_(kind), p_(p) {}
    Kind kind_;
    std::int64_t p_;
};

}  // namespace sgm
