#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace boxdim {

/// Exact nonnegative distances and weights throughout the library.
using Rat = boost::rational<long long>;

inline std::string to_string(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        long long p = std::stoll(s.substr(0, slash));
        long long q = std::stoll(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator: " + s);
        return Rat(p, q);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("not a rational: " + s);
    }
}

/// Raised when a computation would exceed a configured cap. Carries how far
/// the computation got before giving up.
class ResourceError : public std::runtime_error {
  public:
    ResourceError(const std::string& what, Rat attained)
        : std::runtime_error(what), attained_radius(attained) {}
    Rat attained_radius;
};

}  // namespace boxdim
