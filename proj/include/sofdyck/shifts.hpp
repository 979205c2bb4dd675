#ifndef SOFDYCK_SHIFTS_HPP
#define SOFDYCK_SHIFTS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

#include <sofdyck/graphs.hpp>
#include <sofdyck/monoid.hpp>

namespace sofdyck
{

// Entry i lists the (1-based, sorted) letters assigned to letter i+1.
using LetterSets = std::vector<std::vector<int>>;

struct Dyck {
    int n = 2;
};

struct Motzkin {
    int n = 2;
};

// A right-resolving irreducible labeled graph with K^-_gamma and K^+_gamma
// bracket loops attached at its distinguished vertex.
struct SectionTwo {
    LabeledGraph graph;
    std::vector<int> k_minus;
    std::vector<int> k_plus;
};

// Dyck shift without the words beta(+)alpha(+), beta not in psi(alpha).
struct PsiExclusion {
    int n = 2;
    LetterSets psi;
};

// Dyck shift without gamma'(+)gamma(+)gamma''(+), gamma' != gamma''.
struct TripleExclusion {
    int n = 2;
};

// Motzkin shift without gamma(+)gamma'(-), gamma(+)gamma'(+), 11gamma(+) and
// gamma(-)1gamma(+).
struct MotzkinRestricted {
    int n = 2;
};

// The J-loop bouquet construction with the exclusions governed by xi_omega
// (on the J loop symbols) and xi_gamma (bracket letter -> loop symbols).
struct XiExclusion {
    int n = 2;
    int j = 1;
    LetterSets xi_omega;
    LetterSets xi_gamma;
};

using ShiftSpec =
    std::variant<Dyck, Motzkin, SectionTwo, PsiExclusion, TripleExclusion, MotzkinRestricted, XiExclusion>;

// Number N of bracket letters.
int bracket_count(const ShiftSpec &spec);
std::string family_name(const ShiftSpec &spec);

SectionTwo make_section_two(LabeledGraph graph, int n, int k_minus = 1, int k_plus = 1);

enum class ValidationMode {
    strict,
    // Admits N = 1; meant for small oracle cross-checks in tests.
    allow_single_letter,
};

// Throws std::invalid_argument when a family invariant fails.
void validate(const ShiftSpec &spec, ValidationMode mode = ValidationMode::strict);

// Sorted, deduplicated, nonempty, within 1..bound.
bool is_letter_subset(const std::vector<int> &set, int bound);
// Uniform cardinality of every entry, or -1.
int uniform_size(const LetterSets &sets);

enum class SymbolKind : std::uint8_t { minus, plus, neutral };

struct Symbol {
    SymbolKind kind = SymbolKind::neutral;
    int letter = 0; // bracket letter; loop index for neutral loop symbols
    std::string name;
};

// Indices into a shift's alphabet.
using Word = std::vector<std::size_t>;

// A validated shift specification compiled for enumeration.
//
// Admissibility of a word w:
//   (i)   the monoid product of the bracket images of w is nonzero;
//   (ii)  for SectionTwo, some path in the carrier graph is labeled w;
//   (iii) no factor of w is a forbidden word.
//
// w^inf is a point of the shift iff
//   (a) powers_never_vanish on the image of w (exact by the power lemma);
//   (b) for SectionTwo, the vertex relation R_w contains a directed cycle,
//       since R_{w^k} = (R_w)^k and all powers of a finite relation are
//       nonempty iff its digraph has a cycle;
//   (c) every factor of w^m with m = ceil(F/|w|) + 1 avoids the forbidden
//       words of length <= F, since every short factor of w^inf lies in w^m.
class Shift
{
public:
    explicit Shift(ShiftSpec spec, ValidationMode mode = ValidationMode::strict);

    const ShiftSpec &spec() const { return spec_; }
    int bracket_count() const { return n_; }
    const std::vector<Symbol> &alphabet() const { return alphabet_; }
    const std::vector<Word> &forbidden_words() const { return forbidden_; }
    std::size_t max_forbidden_length() const { return max_forbidden_; }

    // Throws std::domain_error for unknown names.
    std::size_t symbol_index(std::string_view name) const;
    // Whitespace-separated symbol names.
    Word parse_word(std::string_view text) const;
    std::string format_word(std::span<const std::size_t> w) const;

    MonoidElement image(std::span<const std::size_t> w) const;

    bool is_admissible(std::span<const std::size_t> w) const;
    bool is_periodic_point(std::span<const std::size_t> w) const;

    // card L_n, by depth-first extension with prefix pruning.
    std::uint64_t count_words(std::size_t n, unsigned threads = 1) const;
    // Number of words w of length n with w^inf in the shift (sigma^n-fixed
    // points, not only least period n).
    std::uint64_t count_periodic(std::size_t n, unsigned threads = 1) const;
    std::vector<std::uint64_t> periodic_counts(std::size_t max_n, unsigned threads = 1) const;

private:
    using Relation = std::vector<std::uint64_t>; // row bitmasks

    struct State;
    friend struct State;

    void check_symbols(std::span<const std::size_t> w) const;
    bool extend(const State &from, std::size_t symbol, State &to, std::span<const std::size_t> word) const;
    bool window_forbidden(std::span<const std::size_t> window) const;
    bool relation_has_cycle(const Relation &r) const;
    bool periodic_from_state(const State &s, std::span<const std::size_t> word) const;
    template <class Leaf>
    std::uint64_t enumerate(std::size_t n, unsigned threads, Leaf leaf) const;

    ShiftSpec spec_;
    int n_ = 0;
    std::vector<Symbol> alphabet_;
    std::vector<MonoidElement> images_;
    std::vector<Word> forbidden_;
    std::size_t max_forbidden_ = 0;
    std::vector<std::unordered_set<std::uint64_t>> forbidden_keys_; // by length
    bool has_graph_ = false;
    std::size_t vertices_ = 0;
    std::vector<Relation> relations_; // per symbol
};

std::vector<Symbol> alphabet(const ShiftSpec &spec);
std::vector<Word> forbidden_words(const ShiftSpec &spec);

struct GrowthEstimate {
    double value = 0.0; // (1/n_max) log card L_{n_max}
    std::vector<std::uint64_t> counts; // card L_n, n = 1..n_max
    std::vector<double> sequence;      // (1/n) log card L_n
};

GrowthEstimate entropy_estimate(const Shift &shift, std::size_t n_max, unsigned threads = 1);

} // namespace sofdyck

#endif
