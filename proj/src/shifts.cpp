#include <sofdyck/shifts.hpp>

#include <algorithm>
#include <cmath>
#include <future>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sofdyck
{

namespace
{

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

constexpr std::size_t max_graph_vertices = 64;

std::string bracket_name(int letter, SymbolKind kind)
{
    return letter_name(letter) + (kind == SymbolKind::minus ? "-" : "+");
}

void push_brackets(std::vector<Symbol> &out, int n)
{
    for (int g = 1; g <= n; ++g) {
        out.push_back({SymbolKind::minus, g, bracket_name(g, SymbolKind::minus)});
    }
    for (int g = 1; g <= n; ++g) {
        out.push_back({SymbolKind::plus, g, bracket_name(g, SymbolKind::plus)});
    }
}

void validate_letter_sets(const LetterSets &sets, std::size_t count, int bound, const char *what)
{
    if (sets.size() != count) {
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(count) + " entries, got " +
                                    std::to_string(sets.size()));
    }
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (!is_letter_subset(sets[i], bound)) {
            throw std::invalid_argument(std::string(what) + "(" + std::to_string(i + 1) +
                                        ") must be a nonempty subset of 1.." + std::to_string(bound));
        }
    }
}

bool contains(const std::vector<int> &set, int x)
{
    return std::binary_search(set.begin(), set.end(), x);
}

AdjacencyMatrix xi_matrix(const XiExclusion &x)
{
    AdjacencyMatrix a(static_cast<std::size_t>(x.j));
    for (int w = 1; w <= x.j; ++w) {
        for (int v : x.xi_omega[static_cast<std::size_t>(w - 1)]) {
            a(static_cast<std::size_t>(w - 1), static_cast<std::size_t>(v - 1)) = 1;
        }
    }
    return a;
}

} // namespace

bool is_letter_subset(const std::vector<int> &set, int bound)
{
    if (set.empty() || !std::is_sorted(set.begin(), set.end())) {
        return false;
    }
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
        return false;
    }
    return set.front() >= 1 && set.back() <= bound;
}

int uniform_size(const LetterSets &sets)
{
    if (sets.empty()) {
        return -1;
    }
    const std::size_t k = sets.front().size();
    for (const auto &s : sets) {
        if (s.size() != k) {
            return -1;
        }
    }
    return static_cast<int>(k);
}

int bracket_count(const ShiftSpec &spec)
{
    return std::visit(overloaded{
                          [](const SectionTwo &s) { return static_cast<int>(s.k_minus.size()); },
                          [](const auto &s) { return s.n; },
                      },
                      spec);
}

std::string family_name(const ShiftSpec &spec)
{
    return std::visit(overloaded{
                          [](const Dyck &) { return std::string("dyck"); },
                          [](const Motzkin &) { return std::string("motzkin"); },
                          [](const SectionTwo &) { return std::string("section2"); },
                          [](const PsiExclusion &) { return std::string("psi"); },
                          [](const TripleExclusion &) { return std::string("triple"); },
                          [](const MotzkinRestricted &) { return std::string("motzkin-restricted"); },
                          [](const XiExclusion &) { return std::string("xi"); },
                      },
                      spec);
}

SectionTwo make_section_two(LabeledGraph graph, int n, int k_minus, int k_plus)
{
    if (n < 1) {
        throw std::invalid_argument("section2: N must be positive");
    }
    return SectionTwo{std::move(graph), std::vector<int>(static_cast<std::size_t>(n), k_minus),
                      std::vector<int>(static_cast<std::size_t>(n), k_plus)};
}

void validate(const ShiftSpec &spec, ValidationMode mode)
{
    const int n = bracket_count(spec);
    const int min_n = mode == ValidationMode::allow_single_letter ? 1 : 2;
    if (n < min_n) {
        throw std::invalid_argument("N must be at least " + std::to_string(min_n) + ", got " + std::to_string(n));
    }
    std::visit(overloaded{
                   [](const Dyck &) {},
                   [](const Motzkin &) {},
                   [](const TripleExclusion &) {},
                   [](const MotzkinRestricted &) {},
                   [&](const SectionTwo &s) {
                       if (s.k_plus.size() != s.k_minus.size()) {
                           throw std::invalid_argument("section2: K- and K+ must have one entry per letter");
                       }
                       for (std::size_t i = 0; i < s.k_minus.size(); ++i) {
                           if (s.k_minus[i] < 1 || s.k_plus[i] < 1) {
                               throw std::invalid_argument("section2: loop counts must be at least 1");
                           }
                       }
                       const auto &g = s.graph;
                       if (!g.distinguished()) {
                           throw std::invalid_argument("section2: graph needs a distinguished vertex");
                       }
                       if (g.vertex_count() > max_graph_vertices) {
                           throw std::invalid_argument("section2: at most 64 vertices supported");
                       }
                       if (!g.is_degenerate()) {
                           if (!is_irreducible(adjacency(g))) {
                               throw std::invalid_argument("section2: graph must be irreducible");
                           }
                           if (!g.is_right_resolving()) {
                               throw std::invalid_argument("section2: labeling must be 1-right-resolving");
                           }
                       }
                   },
                   [&](const PsiExclusion &p) {
                       validate_letter_sets(p.psi, static_cast<std::size_t>(n), n, "psi");
                   },
                   [&](const XiExclusion &x) {
                       if (x.j < 1) {
                           throw std::invalid_argument("xi: J must be at least 1");
                       }
                       validate_letter_sets(x.xi_omega, static_cast<std::size_t>(x.j), x.j, "xi_omega");
                       validate_letter_sets(x.xi_gamma, static_cast<std::size_t>(n), x.j, "xi_gamma");
                       if (uniform_size(x.xi_omega) < 0) {
                           throw std::invalid_argument("xi: every xi_omega set must have the same size K");
                       }
                       if (uniform_size(x.xi_gamma) < 0) {
                           throw std::invalid_argument("xi: every xi_gamma set must have the same size L");
                       }
                       if (!is_irreducible(xi_matrix(x))) {
                           throw std::invalid_argument("xi: transition matrix of xi_omega must be irreducible");
                       }
                   },
               },
               spec);
}

// ---------------------------------------------------------------- Shift

struct Shift::State {
    MonoidElement e;
    Relation r;
};

Shift::Shift(ShiftSpec spec, ValidationMode mode) : spec_(std::move(spec))
{
    validate(spec_, mode);
    n_ = sofdyck::bracket_count(spec_);

    auto sym = [&](std::string_view name) { return symbol_index(name); };
    auto minus = [&](int g) { return sym(bracket_name(g, SymbolKind::minus)); };
    auto plus = [&](int g) { return sym(bracket_name(g, SymbolKind::plus)); };

    std::visit(overloaded{
                   [&](const Dyck &) { push_brackets(alphabet_, n_); },
                   [&](const PsiExclusion &p) {
                       push_brackets(alphabet_, n_);
                       for (int a = 1; a <= n_; ++a) {
                           for (int b = 1; b <= n_; ++b) {
                               if (!contains(p.psi[static_cast<std::size_t>(a - 1)], b)) {
                                   forbidden_.push_back({plus(b), plus(a)});
                               }
                           }
                       }
                   },
                   [&](const TripleExclusion &) {
                       push_brackets(alphabet_, n_);
                       for (int mid = 1; mid <= n_; ++mid) {
                           for (int l = 1; l <= n_; ++l) {
                               for (int r = 1; r <= n_; ++r) {
                                   if (l != r) {
                                       forbidden_.push_back({plus(l), plus(mid), plus(r)});
                                   }
                               }
                           }
                       }
                   },
                   [&](const Motzkin &) {
                       push_brackets(alphabet_, n_);
                       alphabet_.push_back({SymbolKind::neutral, 0, "1"});
                   },
                   [&](const MotzkinRestricted &) {
                       push_brackets(alphabet_, n_);
                       alphabet_.push_back({SymbolKind::neutral, 0, "1"});
                       const std::size_t one = sym("1");
                       for (int g = 1; g <= n_; ++g) {
                           for (int h = 1; h <= n_; ++h) {
                               forbidden_.push_back({plus(g), minus(h)});
                               forbidden_.push_back({plus(g), plus(h)});
                           }
                       }
                       for (int g = 1; g <= n_; ++g) {
                           forbidden_.push_back({one, one, plus(g)});
                           forbidden_.push_back({minus(g), one, plus(g)});
                       }
                   },
                   [&](const XiExclusion &x) {
                       push_brackets(alphabet_, n_);
                       for (int w = 1; w <= x.j; ++w) {
                           alphabet_.push_back({SymbolKind::neutral, w, "w" + std::to_string(w)});
                       }
                       auto loop = [&](int w) { return sym("w" + std::to_string(w)); };
                       for (int g = 1; g <= n_; ++g) {
                           for (int h = 1; h <= n_; ++h) {
                               forbidden_.push_back({plus(g), minus(h)});
                               forbidden_.push_back({plus(g), plus(h)});
                           }
                       }
                       for (int g = 1; g <= n_; ++g) {
                           for (int w = 1; w <= x.j; ++w) {
                               for (int v = 1; v <= x.j; ++v) {
                                   forbidden_.push_back({loop(w), loop(v), plus(g)});
                               }
                               forbidden_.push_back({minus(g), loop(w), plus(g)});
                               for (int v = 1; v <= x.j; ++v) {
                                   if (!contains(x.xi_omega[static_cast<std::size_t>(w - 1)], v)) {
                                       forbidden_.push_back({loop(w), plus(g), loop(v)});
                                   }
                               }
                               if (!contains(x.xi_gamma[static_cast<std::size_t>(g - 1)], w)) {
                                   forbidden_.push_back({minus(g), plus(g), loop(w)});
                               }
                           }
                       }
                   },
                   [&](const SectionTwo &s) {
                       has_graph_ = true;
                       vertices_ = s.graph.vertex_count();
                       const std::size_t v0 = *s.graph.distinguished();
                       for (const auto &label : s.graph.labels()) {
                           alphabet_.push_back({SymbolKind::neutral, 0, label});
                           Relation r(vertices_, 0);
                           for (const auto &e : s.graph.edges()) {
                               if (e.label == label) {
                                   r[e.from] |= std::uint64_t{1} << e.to;
                               }
                           }
                           relations_.push_back(std::move(r));
                       }
                       auto loops = [&](const std::vector<int> &counts, SymbolKind kind) {
                           for (int g = 1; g <= n_; ++g) {
                               const int k = counts[static_cast<std::size_t>(g - 1)];
                               for (int i = 1; i <= k; ++i) {
                                   std::string name = bracket_name(g, kind);
                                   if (k > 1) {
                                       name += "#" + std::to_string(i);
                                   }
                                   alphabet_.push_back({kind, g, std::move(name)});
                                   Relation r(vertices_, 0);
                                   r[v0] = std::uint64_t{1} << v0;
                                   relations_.push_back(std::move(r));
                               }
                           }
                       };
                       loops(s.k_minus, SymbolKind::minus);
                       loops(s.k_plus, SymbolKind::plus);
                   },
               },
               spec_);

    // Names must be unique for parse_word to be well defined.
    std::set<std::string> names;
    for (const auto &s : alphabet_) {
        if (!names.insert(s.name).second) {
            throw std::invalid_argument("duplicate symbol name '" + s.name + "'");
        }
    }

    images_.reserve(alphabet_.size());
    for (const auto &s : alphabet_) {
        switch (s.kind) {
        case SymbolKind::minus:
            images_.push_back(MonoidElement::generator({s.letter, Sign::minus}));
            break;
        case SymbolKind::plus:
            images_.push_back(MonoidElement::generator({s.letter, Sign::plus}));
            break;
        case SymbolKind::neutral:
            images_.push_back(MonoidElement::identity());
            break;
        }
    }

    for (const auto &f : forbidden_) {
        max_forbidden_ = std::max(max_forbidden_, f.size());
    }
    forbidden_keys_.resize(max_forbidden_ + 1);
    const std::uint64_t base = alphabet_.size();
    for (const auto &f : forbidden_) {
        std::uint64_t key = 0;
        for (std::size_t s : f) {
            key = key * base + s;
        }
        forbidden_keys_[f.size()].insert(key);
    }
}

std::size_t Shift::symbol_index(std::string_view name) const
{
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
        if (alphabet_[i].name == name) {
            return i;
        }
    }
    throw std::domain_error("unknown symbol '" + std::string(name) + "'");
}

Word Shift::parse_word(std::string_view text) const
{
    Word w;
    std::istringstream is{std::string(text)};
    std::string tok;
    while (is >> tok) {
        w.push_back(symbol_index(tok));
    }
    return w;
}

std::string Shift::format_word(std::span<const std::size_t> w) const
{
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) {
            out += ' ';
        }
        out += w[i] < alphabet_.size() ? alphabet_[w[i]].name : "?";
    }
    return out;
}

void Shift::check_symbols(std::span<const std::size_t> w) const
{
    for (std::size_t s : w) {
        if (s >= alphabet_.size()) {
            throw std::domain_error("symbol index " + std::to_string(s) + " is not in the alphabet");
        }
    }
}

MonoidElement Shift::image(std::span<const std::size_t> w) const
{
    return word_product(w, images_);
}

bool Shift::window_forbidden(std::span<const std::size_t> window) const
{
    const std::size_t len = window.size();
    if (len >= forbidden_keys_.size() || forbidden_keys_[len].empty()) {
        return false;
    }
    const std::uint64_t base = alphabet_.size();
    std::uint64_t key = 0;
    for (std::size_t s : window) {
        key = key * base + s;
    }
    return forbidden_keys_[len].contains(key);
}

// word ends with symbol; from is the state of word minus its last symbol.
bool Shift::extend(const State &from, std::size_t symbol, State &to, std::span<const std::size_t> word) const
{
    to.e = mul(from.e, images_[symbol]);
    if (to.e.is_zero()) {
        return false;
    }
    if (has_graph_) {
        const Relation &step = relations_[symbol];
        bool any = false;
        to.r.assign(vertices_, 0);
        for (std::size_t u = 0; u < vertices_; ++u) {
            std::uint64_t row = from.r[u];
            std::uint64_t out = 0;
            while (row) {
                const int v = __builtin_ctzll(row);
                row &= row - 1;
                out |= step[static_cast<std::size_t>(v)];
            }
            to.r[u] = out;
            any = any || out != 0;
        }
        if (!any) {
            return false;
        }
    }
    for (std::size_t len = 1; len <= max_forbidden_ && len <= word.size(); ++len) {
        if (window_forbidden(word.subspan(word.size() - len))) {
            return false;
        }
    }
    return true;
}

bool Shift::relation_has_cycle(const Relation &r) const
{
    std::uint64_t alive = vertices_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << vertices_) - 1;
    bool changed = true;
    while (changed && alive) {
        changed = false;
        for (std::size_t u = 0; u < vertices_; ++u) {
            const std::uint64_t bit = std::uint64_t{1} << u;
            if ((alive & bit) && (r[u] & alive) == 0) {
                alive &= ~bit;
                changed = true;
            }
        }
    }
    return alive != 0;
}

bool Shift::periodic_from_state(const State &s, std::span<const std::size_t> word) const
{
    if (!powers_never_vanish(s.e)) {
        return false;
    }
    if (has_graph_ && !relation_has_cycle(s.r)) {
        return false;
    }
    if (max_forbidden_ > 0) {
        const std::size_t len = word.size();
        const std::size_t reps = (max_forbidden_ + len - 1) / len + 1;
        std::vector<std::size_t> rep;
        rep.reserve(reps * len);
        for (std::size_t k = 0; k < reps; ++k) {
            rep.insert(rep.end(), word.begin(), word.end());
        }
        const std::span<const std::size_t> all(rep);
        for (std::size_t flen = 1; flen <= max_forbidden_; ++flen) {
            for (std::size_t i = 0; i + flen <= all.size(); ++i) {
                if (window_forbidden(all.subspan(i, flen))) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool Shift::is_admissible(std::span<const std::size_t> w) const
{
    check_symbols(w);
    State cur{MonoidElement::identity(), Relation{}};
    if (has_graph_) {
        cur.r.assign(vertices_, 0);
        for (std::size_t u = 0; u < vertices_; ++u) {
            cur.r[u] = std::uint64_t{1} << u;
        }
    }
    State next;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!extend(cur, w[i], next, w.first(i + 1))) {
            return false;
        }
        std::swap(cur, next);
    }
    return true;
}

bool Shift::is_periodic_point(std::span<const std::size_t> w) const
{
    if (w.empty()) {
        throw std::invalid_argument("is_periodic_point: word must be nonempty");
    }
    check_symbols(w);
    State cur{MonoidElement::identity(), Relation{}};
    if (has_graph_) {
        cur.r.assign(vertices_, 0);
        for (std::size_t u = 0; u < vertices_; ++u) {
            cur.r[u] = std::uint64_t{1} << u;
        }
    }
    State next;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!extend(cur, w[i], next, w.first(i + 1))) {
            return false;
        }
        std::swap(cur, next);
    }
    return periodic_from_state(cur, w);
}

template <class Leaf>
std::uint64_t Shift::enumerate(std::size_t n, unsigned threads, Leaf leaf) const
{
    if (n == 0) {
        throw std::invalid_argument("enumeration length must be at least 1");
    }
    State root{MonoidElement::identity(), Relation{}};
    if (has_graph_) {
        root.r.assign(vertices_, 0);
        for (std::size_t u = 0; u < vertices_; ++u) {
            root.r[u] = std::uint64_t{1} << u;
        }
    }

    // Counts the subtree below the given first symbols.
    auto run = [&](std::vector<std::size_t> first_symbols) {
        std::vector<State> states(n + 1);
        states[0] = root;
        Word word(n);
        std::uint64_t count = 0;
        auto dfs = [&](auto &&self, std::size_t depth) -> void {
            if (depth == n) {
                count += leaf(states[n], std::span<const std::size_t>(word)) ? 1 : 0;
                return;
            }
            for (std::size_t s = 0; s < alphabet_.size(); ++s) {
                word[depth] = s;
                if (extend(states[depth], s, states[depth + 1],
                           std::span<const std::size_t>(word).first(depth + 1))) {
                    self(self, depth + 1);
                }
            }
        };
        for (std::size_t s : first_symbols) {
            word[0] = s;
            if (extend(states[0], s, states[1], std::span<const std::size_t>(word).first(1))) {
                dfs(dfs, 1);
            }
        }
        return count;
    };

    const std::size_t a = alphabet_.size();
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(a)));
    std::vector<std::vector<std::size_t>> parts(threads);
    for (std::size_t s = 0; s < a; ++s) {
        parts[s % threads].push_back(s);
    }
    if (threads == 1) {
        return run(parts[0]);
    }
    std::vector<std::future<std::uint64_t>> jobs;
    for (auto &p : parts) {
        jobs.push_back(std::async(std::launch::async, run, p));
    }
    std::uint64_t total = 0;
    for (auto &j : jobs) {
        total += j.get();
    }
    return total;
}

std::uint64_t Shift::count_words(std::size_t n, unsigned threads) const
{
    return enumerate(n, threads, [](const State &, std::span<const std::size_t>) { return true; });
}

std::uint64_t Shift::count_periodic(std::size_t n, unsigned threads) const
{
    return enumerate(n, threads,
                     [this](const State &s, std::span<const std::size_t> w) { return periodic_from_state(s, w); });
}

std::vector<std::uint64_t> Shift::periodic_counts(std::size_t max_n, unsigned threads) const
{
    std::vector<std::uint64_t> out;
    out.reserve(max_n);
    for (std::size_t n = 1; n <= max_n; ++n) {
        out.push_back(count_periodic(n, threads));
    }
    return out;
}

std::vector<Symbol> alphabet(const ShiftSpec &spec)
{
    return Shift(spec).alphabet();
}

std::vector<Word> forbidden_words(const ShiftSpec &spec)
{
    return Shift(spec).forbidden_words();
}

GrowthEstimate entropy_estimate(const Shift &shift, std::size_t n_max, unsigned threads)
{
    if (n_max < 2) {
        throw std::invalid_argument("entropy_estimate: n_max must be at least 2");
    }
    GrowthEstimate g;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const std::uint64_t c = shift.count_words(n, threads);
        g.counts.push_back(c);
        g.sequence.push_back(c == 0 ? 0.0 : std::log(static_cast<double>(c)) / static_cast<double>(n));
    }
    g.value = g.sequence.back();
    return g;
}

} // namespace sofdyck
