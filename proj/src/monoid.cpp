#include <sofdyck/monoid.hpp>

#include <algorithm>
#include <stdexcept>

namespace sofdyck
{

const char *to_string(Multiplier m)
{
    switch (m) {
    case Multiplier::negative:
        return "negative";
    case Multiplier::neutral:
        return "neutral";
    case Multiplier::positive:
        return "positive";
    case Multiplier::mixed:
        return "mixed";
    case Multiplier::zero:
        return "zero";
    }
    return "?";
}

std::string letter_name(int letter)
{
    if (letter >= 1 && letter <= 26) {
        return std::string(1, static_cast<char>('a' + letter - 1));
    }
    return "[" + std::to_string(letter) + "]";
}

MonoidElement MonoidElement::zero()
{
    MonoidElement e;
    e.zero_ = true;
    return e;
}

MonoidElement MonoidElement::generator(Generator g)
{
    MonoidElement e;
    if (g.sign == Sign::plus) {
        e.plus_.push_back(g.letter);
    } else {
        e.minus_.push_back(g.letter);
    }
    return e;
}

MonoidElement MonoidElement::from_parts(std::vector<int> plus_part, std::vector<int> minus_part)
{
    MonoidElement e;
    e.plus_ = std::move(plus_part);
    e.minus_ = std::move(minus_part);
    return e;
}

std::string MonoidElement::to_string() const
{
    if (zero_) {
        return "0";
    }
    if (is_identity()) {
        return "1";
    }
    std::string out;
    for (int l : plus_) {
        out += letter_name(l) + "(+)";
    }
    for (int l : minus_) {
        out += letter_name(l) + "(-)";
    }
    return out;
}

MonoidElement mul(const MonoidElement &a, const MonoidElement &b)
{
    if (a.is_zero() || b.is_zero()) {
        return MonoidElement::zero();
    }
    const auto &am = a.minus_part();
    const auto &bp = b.plus_part();
    const std::size_t k = std::min(am.size(), bp.size());
    // am's last letter meets bp's first, then inward.
    for (std::size_t i = 0; i < k; ++i) {
        if (am[am.size() - 1 - i] != bp[i]) {
            return MonoidElement::zero();
        }
    }
    std::vector<int> plus = a.plus_part();
    std::vector<int> minus;
    if (am.size() > k) {
        minus.assign(am.begin(), am.end() - static_cast<std::ptrdiff_t>(k));
    } else {
        plus.insert(plus.end(), bp.begin() + static_cast<std::ptrdiff_t>(k), bp.end());
    }
    minus.insert(minus.end(), b.minus_part().begin(), b.minus_part().end());
    return MonoidElement::from_parts(std::move(plus), std::move(minus));
}

MonoidElement word_product(std::span<const std::size_t> word, std::span<const MonoidElement> images)
{
    MonoidElement e;
    for (std::size_t s : word) {
        if (s >= images.size()) {
            throw std::domain_error("word_product: symbol " + std::to_string(s) + " has no image");
        }
        e = mul(e, images[s]);
        if (e.is_zero()) {
            break;
        }
    }
    return e;
}

MonoidElement word_product(std::span<const Generator> word)
{
    MonoidElement e;
    for (const auto &g : word) {
        e = mul(e, MonoidElement::generator(g));
        if (e.is_zero()) {
            break;
        }
    }
    return e;
}

// Write e = P M in reduced form. Then e^k = P (M P)^(k-1) M. If e^2 != 0 the
// middle product M P reduces to a pure plus word, a pure minus word, or 1
// (one side cancels completely into the other). Powers of a pure-sign word
// never vanish, and P (pure plus)^j M or P (pure minus)^j M is already in
// reduced form, so every e^k is nonzero. Hence the k <= 2 check suffices.
bool powers_never_vanish(const MonoidElement &e)
{
    return !e.is_zero() && !mul(e, e).is_zero();
}

Multiplier multiplier_class(const MonoidElement &e)
{
    if (e.is_zero()) {
        return Multiplier::zero;
    }
    const bool has_plus = !e.plus_part().empty();
    const bool has_minus = !e.minus_part().empty();
    if (has_plus && has_minus) {
        return Multiplier::mixed;
    }
    if (has_plus) {
        return Multiplier::positive;
    }
    if (has_minus) {
        return Multiplier::negative;
    }
    return Multiplier::neutral;
}

} // namespace sofdyck
