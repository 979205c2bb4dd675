#ifndef SOFDYCK_MONOID_HPP
#define SOFDYCK_MONOID_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sofdyck
{

// Arithmetic in the Dyck inverse monoid D_N.
//
// Generators are gamma(-) and gamma(+) for letters gamma in 1..N, subject to
//
//   gamma(-) gamma'(+) = 1   if gamma == gamma'
//   gamma(-) gamma'(+) = 0   otherwise.
//
// Every nonzero element has a unique reduced form P * M in which all
// plus-signed letters precede all minus-signed letters. The ambient N is
// carried by the caller; elements never store it.

enum class Sign : std::uint8_t { minus, plus };

struct Generator {
    int letter = 1;
    Sign sign = Sign::minus;

    friend auto operator<=>(const Generator &, const Generator &) = default;
};

enum class Multiplier : std::uint8_t { negative, neutral, positive, mixed, zero };

const char *to_string(Multiplier m);

class MonoidElement
{
public:
    // Identity.
    MonoidElement() = default;

    static MonoidElement identity() { return {}; }
    static MonoidElement zero();
    static MonoidElement generator(Generator g);
    static MonoidElement from_parts(std::vector<int> plus_part, std::vector<int> minus_part);

    bool is_zero() const { return zero_; }
    bool is_identity() const { return !zero_ && plus_.empty() && minus_.empty(); }

    // Letters of the gamma(+) prefix, left to right. Empty for zero.
    const std::vector<int> &plus_part() const { return plus_; }
    // Letters of the gamma(-) suffix, left to right. Empty for zero.
    const std::vector<int> &minus_part() const { return minus_; }

    std::size_t length() const { return plus_.size() + minus_.size(); }

    // "0", "1", or the reduced word, e.g. "a(+)b(-)".
    std::string to_string() const;

    friend bool operator==(const MonoidElement &, const MonoidElement &) = default;

private:
    bool zero_ = false;
    std::vector<int> plus_;
    std::vector<int> minus_;
};

// Product in reduced form. Boundary letters of a's minus part cancel against
// b's plus part pairwise; the first mismatch gives zero.
MonoidElement mul(const MonoidElement &a, const MonoidElement &b);

inline MonoidElement operator*(const MonoidElement &a, const MonoidElement &b) { return mul(a, b); }

// Left-to-right product of images[symbol] over the word. Throws
// std::domain_error on a symbol outside images.
MonoidElement word_product(std::span<const std::size_t> word, std::span<const MonoidElement> images);

// Product of a word written directly in generators.
MonoidElement word_product(std::span<const Generator> word);

// True iff e^k != 0 for every k >= 1.
bool powers_never_vanish(const MonoidElement &e);

Multiplier multiplier_class(const MonoidElement &e);

// Letter display name: 1 -> "a", 2 -> "b", ... past 26 the decimal index.
std::string letter_name(int letter);

} // namespace sofdyck

#endif
