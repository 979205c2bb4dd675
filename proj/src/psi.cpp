#include <sofdyck/psi.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace sofdyck
{

namespace
{

void check_psi(int n, const LetterSets &psi)
{
    if (n < 1) {
        throw std::invalid_argument("psi: N must be positive");
    }
    if (psi.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("psi: expected " + std::to_string(n) + " entries");
    }
    for (std::size_t i = 0; i < psi.size(); ++i) {
        if (!is_letter_subset(psi[i], n)) {
            throw std::invalid_argument("psi(" + std::to_string(i + 1) + ") must be a nonempty subset of 1.." +
                                        std::to_string(n));
        }
    }
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[static_cast<std::size_t>(x)] != x) {
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

int intersection_size(const std::vector<int> &a, const std::vector<int> &b)
{
    int c = 0;
    for (int x : a) {
        c += std::binary_search(b.begin(), b.end(), x) ? 1 : 0;
    }
    return c;
}

bool contains(const std::vector<int> &s, int x)
{
    return std::binary_search(s.begin(), s.end(), x);
}

} // namespace

PsiClassification classify_psi(int n, const LetterSets &psi)
{
    if (n > max_classify_n) {
        throw CapabilityError("classify_psi: symmetry search supports N <= " + std::to_string(max_classify_n));
    }
    check_psi(n, psi);
    const auto un = static_cast<std::size_t>(n);

    PsiClassification out;
    out.n = n;

    std::vector<int> perm(un);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        bool ok = true;
        for (std::size_t g = 0; g < un && ok; ++g) {
            std::vector<int> image;
            for (int x : psi[g]) {
                image.push_back(perm[static_cast<std::size_t>(x - 1)]);
            }
            std::sort(image.begin(), image.end());
            ok = image == psi[static_cast<std::size_t>(perm[g] - 1)];
        }
        if (ok) {
            out.symmetries.push_back(perm);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    UnionFind uf(n);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (psi[static_cast<std::size_t>(a)] == psi[static_cast<std::size_t>(b)]) {
                uf.unite(a, b);
            }
        }
    }
    for (const auto &p : out.symmetries) {
        for (int a = 0; a < n; ++a) {
            uf.unite(a, p[static_cast<std::size_t>(a)] - 1);
        }
    }
    std::map<int, std::vector<int>> by_root;
    for (int a = 0; a < n; ++a) {
        by_root[uf.find(a)].push_back(a + 1);
    }
    for (auto &[root, members] : by_root) {
        out.classes.push_back(members);
    }
    std::sort(out.classes.begin(), out.classes.end());

    std::vector<int> full(un);
    std::iota(full.begin(), full.end(), 1);
    auto class_has = [&](const std::vector<int> &cls, auto pred) {
        return std::any_of(cls.begin(), cls.end(), [&](int g) { return pred(g, psi[static_cast<std::size_t>(g - 1)]); });
    };
    for (const auto &cls : out.classes) {
        const bool is_gamma = class_has(cls, [&](int, const std::vector<int> &s) { return s == full; });
        const bool is_setminus = class_has(cls, [&](int g, const std::vector<int> &s) {
            return s.size() + 1 == un && !contains(s, g);
        });
        const bool is_bullet =
            class_has(cls, [&](int g, const std::vector<int> &s) { return s.size() == 1 && s.front() == g; });
        std::vector<int> *target = is_gamma      ? &out.delta_gamma
                                   : is_setminus ? &out.delta_setminus
                                   : is_bullet   ? &out.delta_bullet
                                                 : &out.delta_circ;
        target->insert(target->end(), cls.begin(), cls.end());
        if (target == &out.delta_circ) {
            out.circ_classes.push_back(cls);
        }
    }
    for (auto *s : {&out.delta_gamma, &out.delta_setminus, &out.delta_bullet, &out.delta_circ}) {
        std::sort(s->begin(), s->end());
    }

    for (const auto &cls : out.circ_classes) {
        std::vector<ClassConstants> per_member;
        for (int alpha : cls) {
            const auto &s = psi[static_cast<std::size_t>(alpha - 1)];
            ClassConstants c;
            c.k_gamma = intersection_size(s, out.delta_gamma);
            c.k_setminus = intersection_size(s, out.delta_setminus);
            c.k_bullet = intersection_size(s, out.delta_bullet);
            for (const auto &b : out.circ_classes) {
                c.k_class.push_back(intersection_size(s, b));
            }
            per_member.push_back(std::move(c));
        }
        for (const auto &c : per_member) {
            const auto &f = per_member.front();
            if (c.k_gamma != f.k_gamma || c.k_setminus != f.k_setminus || c.k_bullet != f.k_bullet ||
                c.k_class != f.k_class) {
                throw std::logic_error("classify_psi: class constant depends on the representative");
            }
        }
        out.constants.push_back(per_member.front());
    }
    return out;
}

PsiSystem solve_psi_system(int n, const LetterSets &psi, std::size_t order)
{
    check_psi(n, psi);
    const auto un = static_cast<std::size_t>(n);
    std::vector<PowerSeries> g(un, PowerSeries::zero(order));
    auto xi_of = [&](const std::vector<PowerSeries> &gs) {
        PowerSeries xi = PowerSeries::one(order);
        for (const auto &s : gs) {
            xi -= s;
        }
        return xi;
    };
    for (std::size_t sweep = 0; sweep <= order; ++sweep) {
        const PowerSeries inv = inverse(xi_of(g));
        std::vector<PowerSeries> next;
        next.reserve(un);
        for (std::size_t a = 0; a < un; ++a) {
            PowerSeries sum = PowerSeries::zero(order);
            for (int b : psi[a]) {
                sum += g[static_cast<std::size_t>(b - 1)];
            }
            next.push_back((1 + inv * sum).shift(2));
        }
        g = std::move(next);
    }
    PowerSeries xi = xi_of(g);
    return {std::move(g), std::move(xi)};
}

std::vector<PowerSeries> psi_residuals(const LetterSets &psi, const PsiSystem &s)
{
    const PowerSeries inv = inverse(s.xi);
    std::vector<PowerSeries> out;
    for (std::size_t a = 0; a < psi.size(); ++a) {
        PowerSeries sum = PowerSeries::zero(s.xi.order());
        for (int b : psi[a]) {
            sum += s.g[static_cast<std::size_t>(b - 1)];
        }
        out.push_back(s.g[a] - (1 + inv * sum).shift(2));
    }
    return out;
}

PowerSeries gf_uniform(int n, int k, std::size_t order)
{
    const PowerSeries z = PowerSeries::variable(order);
    const PowerSeries b = 1 + Rational(n - k) * z * z;
    return Rational(1, 2L * n) * (b - sqrt(b * b - Rational(4L * n) * z * z));
}

PowerSeries gf_delta_gamma(const PowerSeries &xi)
{
    return PowerSeries::one(xi.order()).shift(2) / xi;
}

PowerSeries gf_delta_setminus(const PowerSeries &xi)
{
    const PowerSeries z2 = PowerSeries::one(xi.order()).shift(2);
    return z2 / (xi + z2);
}

PowerSeries gf_delta_bullet(const PowerSeries &xi)
{
    const PowerSeries z2 = PowerSeries::one(xi.order()).shift(2);
    return z2 * xi / (xi - z2);
}

PowerSeries gf_delta_circ_single(const ClassConstants &c, const PowerSeries &xi)
{
    if (c.k_class.size() != 1) {
        throw std::domain_error("gf_delta_circ_single: Delta_circ must be a single class");
    }
    const PowerSeries z2 = PowerSeries::one(xi.order()).shift(2);
    const PowerSeries inner = xi + Rational(c.k_gamma) * z2 / xi + Rational(c.k_bullet) * z2 * xi / (xi - z2) +
                              Rational(c.k_setminus) * z2 / (xi + z2);
    return z2 / (xi - Rational(c.k_class.front()) * z2) * inner;
}

std::vector<GeneratorWord> code_words(int n, const LetterSets &psi, int alpha, std::size_t length)
{
    check_psi(n, psi);
    std::vector<GeneratorWord> out;
    if (alpha < 1 || alpha > n || length < 2 || length % 2 != 0) {
        return out;
    }
    GeneratorWord w{{alpha, Sign::minus}};
    std::vector<int> open{alpha};
    auto dfs = [&](auto &&self) -> void {
        if (w.size() == length) {
            if (open.empty()) {
                out.push_back(w);
            }
            return;
        }
        if (open.empty() || open.size() > length - w.size()) {
            return;
        }
        for (int g = 1; g <= n; ++g) {
            w.push_back({g, Sign::minus});
            open.push_back(g);
            self(self);
            open.pop_back();
            w.pop_back();
        }
        const int top = open.back();
        const Generator &prev = w.back();
        if (prev.sign == Sign::plus && !contains(psi[static_cast<std::size_t>(top - 1)], prev.letter)) {
            return;
        }
        w.push_back({top, Sign::plus});
        open.pop_back();
        self(self);
        open.push_back(top);
        w.pop_back();
    };
    dfs(dfs);
    return out;
}

bool is_code_word(const LetterSets &psi, int alpha, const GeneratorWord &d)
{
    if (d.size() < 2 || d.front().letter != alpha || d.front().sign != Sign::minus) {
        return false;
    }
    const int n = static_cast<int>(psi.size());
    std::vector<int> open;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const Generator &s = d[i];
        if (s.letter < 1 || s.letter > n) {
            return false;
        }
        if (i > 0 && open.empty()) {
            return false; // returned to height 0 early
        }
        if (s.sign == Sign::minus) {
            open.push_back(s.letter);
            continue;
        }
        if (open.back() != s.letter) {
            return false;
        }
        if (i > 0 && d[i - 1].sign == Sign::plus &&
            !contains(psi[static_cast<std::size_t>(s.letter - 1)], d[i - 1].letter)) {
            return false;
        }
        open.pop_back();
    }
    return open.empty();
}

namespace
{

GeneratorWord eta_rec(const LetterSets &psi, int alpha, int beta, const GeneratorWord &d)
{
    // Split the interior where the height returns to zero.
    std::vector<GeneratorWord> parts;
    int height = 0;
    for (std::size_t i = 1; i + 1 < d.size(); ++i) {
        if (height == 0) {
            parts.emplace_back();
        }
        parts.back().push_back(d[i]);
        height += d[i].sign == Sign::minus ? 1 : -1;
    }
    GeneratorWord out{{beta, Sign::minus}};
    if (!parts.empty()) {
        for (std::size_t l = 0; l + 1 < parts.size(); ++l) {
            out.insert(out.end(), parts[l].begin(), parts[l].end());
        }
        const GeneratorWord &last = parts.back();
        const int gamma = last.front().letter;
        const auto &from = psi[static_cast<std::size_t>(alpha - 1)];
        const auto &to = psi[static_cast<std::size_t>(beta - 1)];
        const auto idx = static_cast<std::size_t>(std::lower_bound(from.begin(), from.end(), gamma) - from.begin());
        const GeneratorWord mapped = eta_rec(psi, gamma, to[idx], last);
        out.insert(out.end(), mapped.begin(), mapped.end());
    }
    out.push_back({beta, Sign::plus});
    return out;
}

} // namespace

GeneratorWord eta_bijection(const LetterSets &psi, int alpha, int beta, const GeneratorWord &d)
{
    const int n = static_cast<int>(psi.size());
    check_psi(n, psi);
    if (uniform_size(psi) < 0) {
        throw std::domain_error("eta_bijection: psi must be uniform");
    }
    if (beta < 1 || beta > n) {
        throw std::domain_error("eta_bijection: beta out of range");
    }
    if (!is_code_word(psi, alpha, d)) {
        throw std::domain_error("eta_bijection: word is not an admissible code word beginning with alpha(-)");
    }
    return eta_rec(psi, alpha, beta, d);
}

} // namespace sofdyck
