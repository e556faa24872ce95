#ifndef SUPERCOHOM_SCALAR_HPP
#define SUPERCOHOM_SCALAR_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace supercohom {

/// Exact rational number, always canonical (lowest terms, positive denominator).
using Scalar = mpq_class;
using Integer = mpz_class;

/// Z/2 grading of a homogeneous element.
enum class Parity : unsigned char { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b)
{
    return static_cast<Parity>(static_cast<unsigned>(a) ^ static_cast<unsigned>(b));
}

inline Parity& operator+=(Parity& a, Parity b) { return a = a + b; }

inline bool is_odd(Parity p) { return p == Parity::Odd; }

/// (-1)^{|a||b|}
inline int koszul(Parity a, Parity b) { return (is_odd(a) && is_odd(b)) ? -1 : 1; }

inline const char* parity_name(Parity p) { return is_odd(p) ? "odd" : "even"; }

// ---------------------------------------------------------------------------
// Error taxonomy. The CLI maps each class to a distinct exit code.

/// Malformed input: bad index, zero denominator, unknown name, bad JSON.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computation would exceed a configured size guard.
class ResourceCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The requested structure is outside what the algorithms decide.
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent computations that must agree did not.
class MismatchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses "p", "-p" or "p/q". Throws InputError on malformed text or q = 0.
Scalar parse_scalar(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Scalar& s);

} // namespace supercohom

#endif
