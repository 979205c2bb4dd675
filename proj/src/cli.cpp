#include <sofdyck/cli.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <sofdyck/entropy.hpp>
#include <sofdyck/formulas.hpp>
#include <sofdyck/psi.hpp>

namespace sofdyck
{

using Json = nlohmann::ordered_json;

namespace
{

class GuardError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string family;
    int n = 2;
    int j = 1;
    int q = 1;
    int k = 0; // 0: not given
    int k_minus = 1;
    int k_plus = 1;
    std::string psi;
    std::string xi_omega;
    std::string xi_gamma;
    std::string spec_file;
    std::size_t order = 16;
    std::size_t max_n = 8;
    std::size_t length = 0;
    bool periodic = false;
    double tol = root_residual_tol;
    bool json = false;
    bool timing = false;
    bool force = false;
    unsigned threads = 1;
    bool verbose = false;
    bool as_printed = false;
};

const std::vector<std::string> section_two_families{"dyck", "motzkin", "bouquet", "schroeder", "even-odd"};
const std::vector<std::string> all_families{"dyck",   "motzkin", "bouquet",            "schroeder", "even-odd",
                                            "psi",    "triple",  "motzkin-restricted", "xi",        "section2"};

struct Family {
    std::string name;
    ShiftSpec spec;
    // Set for the families assembled from a carrier graph.
    std::optional<SectionTwo> section2;
    bool unit_loops = true;
    int j = 1;
    int q = 1;
    Json params;
};

std::vector<int> sorted_unique(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

int parse_int(const std::string &s, const std::string &what)
{
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception &) {
        throw std::invalid_argument("malformed " + what + ": '" + s + "'");
    }
    if (used != s.size()) {
        throw std::invalid_argument("malformed " + what + ": '" + s + "'");
    }
    return v;
}

std::string trim(const std::string &s)
{
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) {
        out.push_back(trim(cur));
    }
    return out;
}

LetterSets letter_sets_from_json(const Json &j, int count, const std::string &what)
{
    if (j.is_string()) {
        return parse_letter_sets(j.get<std::string>(), count);
    }
    if (!j.is_array()) {
        throw std::invalid_argument(what + " must be a string or an array of arrays");
    }
    LetterSets out;
    for (const auto &row : j) {
        out.push_back(sorted_unique(row.get<std::vector<int>>()));
    }
    if (out.size() != static_cast<std::size_t>(count)) {
        throw std::invalid_argument(what + ": expected " + std::to_string(count) + " entries");
    }
    return out;
}

std::vector<int> loop_counts_from_json(const Json &j, int n, const std::string &what)
{
    if (j.is_number_integer()) {
        return std::vector<int>(static_cast<std::size_t>(n), j.get<int>());
    }
    auto v = j.get<std::vector<int>>();
    if (v.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument(what + ": expected " + std::to_string(n) + " entries");
    }
    return v;
}

Family section_two_family(const std::string &name, LabeledGraph graph, int n, std::vector<int> km,
                          std::vector<int> kp)
{
    Family f;
    f.name = name;
    f.unit_loops = std::all_of(km.begin(), km.end(), [](int x) { return x == 1; }) &&
                   std::all_of(kp.begin(), kp.end(), [](int x) { return x == 1; });
    SectionTwo s{std::move(graph), km, kp};
    f.section2 = s;
    if (f.unit_loops && name == "dyck") {
        f.spec = Dyck{n};
    } else if (f.unit_loops && name == "motzkin") {
        f.spec = Motzkin{n};
    } else {
        f.spec = s;
    }
    f.params["n"] = n;
    f.params["k_minus"] = km;
    f.params["k_plus"] = kp;
    return f;
}

LabeledGraph carrier_graph(const std::string &name, int j, int q)
{
    if (name == "dyck") {
        return build_degenerate();
    }
    if (name == "motzkin") {
        return build_bouquet(1, 1);
    }
    if (name == "bouquet") {
        return build_bouquet(j, q);
    }
    if (name == "schroeder") {
        return build_even_automaton(EvenVertex::even);
    }
    return build_even_automaton(EvenVertex::odd);
}

Family make_family(const std::string &name, int n, int j, int q, std::vector<int> km, std::vector<int> kp,
                   const std::optional<LetterSets> &psi, const std::optional<LetterSets> &xo,
                   const std::optional<LetterSets> &xg, std::optional<LabeledGraph> graph)
{
    if (std::find(all_families.begin(), all_families.end(), name) == all_families.end()) {
        throw std::invalid_argument("unknown family '" + name + "'");
    }
    Family f;
    if (std::find(section_two_families.begin(), section_two_families.end(), name) != section_two_families.end()) {
        f = section_two_family(name, carrier_graph(name, j, q), n, std::move(km), std::move(kp));
        if (name == "bouquet") {
            f.params["j"] = j;
            f.params["q"] = q;
        }
    } else if (name == "section2") {
        if (!graph) {
            throw std::invalid_argument("section2 needs a graph in --spec-file");
        }
        f = section_two_family(name, *graph, n, std::move(km), std::move(kp));
        f.params["vertices"] = graph->vertex_count();
        f.params["edges"] = graph->edges().size();
    } else if (name == "psi") {
        if (!psi) {
            throw std::invalid_argument("psi family needs --psi");
        }
        f.name = name;
        f.spec = PsiExclusion{n, *psi};
        f.params["n"] = n;
        f.params["psi"] = format_letter_sets(*psi);
    } else if (name == "triple") {
        f.name = name;
        f.spec = TripleExclusion{n};
        f.params["n"] = n;
    } else if (name == "motzkin-restricted") {
        f.name = name;
        f.spec = MotzkinRestricted{n};
        f.params["n"] = n;
    } else {
        if (!xo || !xg) {
            throw std::invalid_argument("xi family needs --xi-omega and --xi-gamma");
        }
        f.name = name;
        f.spec = XiExclusion{n, j, *xo, *xg};
        f.params["n"] = n;
        f.params["j"] = j;
        f.params["xi_omega"] = format_letter_sets(*xo);
        f.params["xi_gamma"] = format_letter_sets(*xg);
    }
    f.j = j;
    f.q = q;
    validate(f.spec);
    if (f.section2) {
        validate(*f.section2);
    }
    return f;
}

Family family_from_options(const Options &o)
{
    if (!o.spec_file.empty()) {
        std::ifstream in(o.spec_file);
        if (!in) {
            throw std::invalid_argument("cannot open spec file '" + o.spec_file + "'");
        }
        Json j;
        try {
            j = Json::parse(in);
        } catch (const Json::exception &e) {
            throw std::invalid_argument(std::string("spec file: ") + e.what());
        }
        try {
            const std::string name = j.at("family").get<std::string>();
            const int n = j.value("n", 2);
            const int jj = j.value("j", 1);
            const int q = j.value("q", 1);
            std::optional<LetterSets> psi, xo, xg;
            if (j.contains("psi")) {
                psi = letter_sets_from_json(j["psi"], n, "psi");
            }
            if (j.contains("xi_omega")) {
                xo = letter_sets_from_json(j["xi_omega"], jj, "xi_omega");
            }
            if (j.contains("xi_gamma")) {
                xg = letter_sets_from_json(j["xi_gamma"], n, "xi_gamma");
            }
            std::optional<LabeledGraph> graph;
            if (j.contains("graph")) {
                const auto &g = j["graph"];
                std::vector<Edge> edges;
                for (const auto &e : g.at("edges")) {
                    edges.push_back({e.at("from").get<std::size_t>(), e.at("to").get<std::size_t>(),
                                     e.at("label").get<std::string>()});
                }
                graph = LabeledGraph(g.at("vertices").get<std::size_t>(), std::move(edges),
                                     g.at("distinguished").get<std::size_t>());
            }
            auto km = j.contains("k_minus") ? loop_counts_from_json(j["k_minus"], n, "k_minus")
                                            : std::vector<int>(static_cast<std::size_t>(n), 1);
            auto kp = j.contains("k_plus") ? loop_counts_from_json(j["k_plus"], n, "k_plus")
                                           : std::vector<int>(static_cast<std::size_t>(n), 1);
            return make_family(name, n, jj, q, std::move(km), std::move(kp), psi, xo, xg, std::move(graph));
        } catch (const Json::exception &e) {
            throw std::invalid_argument(std::string("spec file: ") + e.what());
        }
    }
    if (o.family.empty()) {
        throw std::invalid_argument("--family or --spec-file is required");
    }
    if (o.n < 1) {
        throw std::invalid_argument("--n must be positive");
    }
    std::optional<LetterSets> psi, xo, xg;
    if (!o.psi.empty()) {
        psi = parse_letter_sets(o.psi, o.n);
        if (o.k > 0 && uniform_size(*psi) != o.k) {
            throw std::invalid_argument("--k " + std::to_string(o.k) + " does not match |psi(gamma)|");
        }
    }
    if (!o.xi_omega.empty()) {
        xo = parse_letter_sets(o.xi_omega, o.j);
    }
    if (!o.xi_gamma.empty()) {
        xg = parse_letter_sets(o.xi_gamma, o.n);
    }
    const auto un = static_cast<std::size_t>(o.n);
    return make_family(o.family, o.n, o.j, o.q, std::vector<int>(un, o.k_minus), std::vector<int>(un, o.k_plus),
                       psi, xo, xg, std::nullopt);
}

std::optional<PowerSeries> family_zeta(const Family &f, std::size_t order)
{
    if (f.section2) {
        if (!f.unit_loops || f.name == "section2") {
            return zeta_section2(*f.section2, order);
        }
        const int n = bracket_count(f.spec);
        if (f.name == "dyck") {
            return zeta_dyck(n, order);
        }
        if (f.name == "motzkin") {
            return zeta_motzkin(n, order);
        }
        if (f.name == "bouquet") {
            return zeta_bouquet(n, f.j, f.q, order);
        }
        if (f.name == "schroeder") {
            return zeta_schroeder(n, order);
        }
        return zeta_even_odd(n, order);
    }
    return closed_form_zeta(f.spec, order);
}

// --as-printed swaps in the displayed triple-exclusion form, which is
// known to disagree with the periodic counts.
std::optional<PowerSeries> selected_zeta(const Options &o, const Family &f, std::size_t order)
{
    if (!o.as_printed) {
        return family_zeta(f, order);
    }
    if (f.name != "triple") {
        throw std::invalid_argument("--as-printed applies to the triple family only");
    }
    return zeta_triple_exclusion_as_printed(bracket_count(f.spec), order);
}

void check_guard(const Shift &shift, std::size_t length, bool force)
{
    const double work = std::pow(static_cast<double>(shift.alphabet().size()), static_cast<double>(length));
    if (!force && work > enumeration_guard) {
        std::ostringstream msg;
        msg << "enumeration guard: " << shift.alphabet().size() << "^" << length
            << " exceeds 1e9 candidate words; pass --force to run anyway";
        throw GuardError(msg.str());
    }
}

Json fraction_list(std::span<const Rational> v)
{
    Json out = Json::array();
    for (const auto &c : v) {
        out.push_back(to_string(c));
    }
    return out;
}

Json entropy_json(const EntropyResult &e)
{
    Json j;
    j["value"] = e.value;
    j["root"] = e.root;
    j["residual"] = e.residual;
    j["bracket"] = {e.bracket_lo, e.bracket_hi};
    j["method"] = to_string(e.method);
    j["degenerate_fallback"] = e.degenerate_fallback;
    if (!e.note.empty()) {
        j["note"] = e.note;
    }
    return j;
}

Json report_head(const std::string &command, const Family &f)
{
    Json r;
    r["command"] = command;
    r["family"] = f.name;
    r["params"] = f.params;
    return r;
}

int cmd_zeta(const Options &o, Json &r, std::ostream &err)
{
    const Family f = family_from_options(o);
    r = report_head("zeta", f);
    r["order"] = o.order;
    std::optional<PowerSeries> z = selected_zeta(o, f, o.order);
    std::string source = o.as_printed ? "as-printed" : "closed-form";
    if (!z) {
        const Shift shift(f.spec);
        check_guard(shift, o.order, o.force);
        if (o.verbose) {
            err << "[info] no closed form; enumerating periodic points up to n=" << o.order << "\n";
        }
        const auto counts = shift.periodic_counts(o.order, o.threads);
        z = zeta_from_counts(std::span<const std::uint64_t>(counts), o.order);
        source = "oracle";
    }
    r["zeta"]["source"] = source;
    r["zeta"]["coefficients"] = fraction_list(z->coeffs());
    const auto p = counts_from_zeta(*z);
    r["periodic_counts"] = fraction_list(p);
    return all_nonnegative_integers(p) ? exit_code::ok : exit_code::numeric_failure;
}

int cmd_entropy(const Options &o, Json &r)
{
    const Family f = family_from_options(o);
    r = report_head("entropy", f);
    const int n = bracket_count(f.spec);
    EntropyResult e;
    Json cross = Json::array();
    if (f.section2) {
        e = entropy_section2(*f.section2);
        if (f.unit_loops) {
            auto add = [&](const std::string &name, const EntropyResult &c) {
                Json j = entropy_json(c);
                j["formula"] = name;
                cross.push_back(j);
            };
            if (f.name == "bouquet" || f.name == "motzkin") {
                add("bouquet-root", entropy_bouquet(n, f.j, f.q));
                if (f.j == 1 && f.q == 2) {
                    add(to_string(ClosedEntropy::bouquet_n12), entropy_closed(ClosedEntropy::bouquet_n12, n));
                }
            } else if (f.name == "schroeder") {
                add(to_string(ClosedEntropy::schroeder), entropy_closed(ClosedEntropy::schroeder, n));
            } else if (f.name == "even-odd") {
                add(to_string(ClosedEntropy::even_odd), entropy_closed(ClosedEntropy::even_odd, n));
            }
        }
    } else if (const auto *p = std::get_if<PsiExclusion>(&f.spec); p && uniform_size(p->psi) > 0) {
        e = entropy_closed(ClosedEntropy::psi_uniform, n, uniform_size(p->psi));
    } else {
        const Shift shift(f.spec);
        check_guard(shift, o.max_n, o.force);
        e = entropy_growth_check(shift, o.max_n, o.threads);
    }
    r["entropy"] = entropy_json(e);
    if (!cross.empty()) {
        r["cross_checks"] = cross;
    }
    if (e.method == EntropyMethod::root_equation && e.residual > o.tol) {
        throw NumericFailure("root residual " + std::to_string(e.residual) + " above --tol");
    }
    return exit_code::ok;
}

int cmd_count(const Options &o, Json &r)
{
    const Family f = family_from_options(o);
    r = report_head("count", f);
    if (o.length < 1) {
        throw std::invalid_argument("--length must be at least 1");
    }
    const Shift shift(f.spec);
    check_guard(shift, o.length, o.force);
    r["length"] = o.length;
    r["periodic"] = o.periodic;
    r["alphabet"] = shift.alphabet().size();
    r["count"] = o.periodic ? shift.count_periodic(o.length, o.threads) : shift.count_words(o.length, o.threads);
    return exit_code::ok;
}

int cmd_verify(const Options &o, Json &r, std::ostream &err)
{
    const Family f = family_from_options(o);
    r = report_head("verify", f);
    if (o.max_n < 1) {
        throw std::invalid_argument("--max-n must be at least 1");
    }
    const std::size_t order = std::max(o.order, o.max_n);
    const auto z = selected_zeta(o, f, order);
    if (!z) {
        throw std::invalid_argument("family '" + f.name + "' has no closed form with these parameters");
    }
    const Shift shift(f.spec);
    check_guard(shift, o.max_n, o.force);
    const auto closed = counts_from_zeta(*z);
    Json rows = Json::array();
    bool all = true;
    for (std::size_t n = 1; n <= o.max_n; ++n) {
        if (o.verbose) {
            err << "[info] n=" << n << "\n";
        }
        const std::uint64_t oracle = shift.count_periodic(n, o.threads);
        const bool match = closed[n - 1] == Rational(Integer(std::to_string(oracle)));
        all = all && match;
        Json row;
        row["n"] = n;
        row["closed_form"] = to_string(closed[n - 1]);
        row["oracle"] = std::to_string(oracle);
        row["match"] = match;
        rows.push_back(row);
    }
    r["verification"]["max_n"] = o.max_n;
    r["verification"]["order"] = order;
    r["verification"]["all_match"] = all;
    r["verification"]["rows"] = rows;
    if (!all) {
        err << "verification mismatch for family " << f.name << "\n";
    }
    return all ? exit_code::ok : exit_code::mismatch;
}

int cmd_classify(const Options &o, Json &r)
{
    int n = o.n;
    LetterSets psi;
    if (!o.spec_file.empty()) {
        const Family f = family_from_options(o);
        const auto *p = std::get_if<PsiExclusion>(&f.spec);
        if (!p) {
            throw std::invalid_argument("classify needs a psi spec");
        }
        n = p->n;
        psi = p->psi;
    } else {
        if (o.psi.empty()) {
            throw std::invalid_argument("classify needs --psi");
        }
        psi = parse_letter_sets(o.psi, n);
    }
    const PsiClassification c = classify_psi(n, psi);
    r["command"] = "classify";
    r["params"]["n"] = n;
    r["params"]["psi"] = format_letter_sets(psi);
    r["symmetries"] = c.symmetries;
    r["classes"] = c.classes;
    r["delta_gamma"] = c.delta_gamma;
    r["delta_setminus"] = c.delta_setminus;
    r["delta_bullet"] = c.delta_bullet;
    r["delta_circ"] = c.delta_circ;
    Json circ = Json::array();
    for (std::size_t i = 0; i < c.circ_classes.size(); ++i) {
        Json a;
        a["members"] = c.circ_classes[i];
        a["k_gamma"] = c.constants[i].k_gamma;
        a["k_setminus"] = c.constants[i].k_setminus;
        a["k_bullet"] = c.constants[i].k_bullet;
        a["k_class"] = c.constants[i].k_class;
        circ.push_back(a);
    }
    r["circ_classes"] = circ;
    return exit_code::ok;
}

std::string scalar_text(const Json &v)
{
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_number_float()) {
        std::ostringstream s;
        s << std::setprecision(15) << v.get<double>();
        return s.str();
    }
    return v.dump();
}

bool all_scalars(const Json &arr)
{
    return std::all_of(arr.begin(), arr.end(), [](const Json &x) { return x.is_primitive(); });
}

std::string inline_text(const Json &v)
{
    if (v.is_primitive()) {
        return scalar_text(v);
    }
    if (v.is_array()) {
        std::string s = "[";
        bool first = true;
        for (const auto &x : v) {
            s += (first ? "" : " ") + inline_text(x);
            first = false;
        }
        return s + "]";
    }
    std::string s;
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
        s += (first ? "" : "  ") + it.key() + "=" + inline_text(it.value());
        first = false;
    }
    return s;
}

void render_text(const Json &j, std::ostream &out, int indent)
{
    std::size_t width = 0;
    for (auto it = j.begin(); it != j.end(); ++it) {
        width = std::max(width, it.key().size());
    }
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        const Json &v = it.value();
        out << pad << std::left << std::setw(static_cast<int>(width) + 2) << it.key();
        if (v.is_object()) {
            out << "\n";
            render_text(v, out, indent + 2);
        } else if (v.is_array() && !all_scalars(v)) {
            out << "\n";
            for (const auto &x : v) {
                out << pad << "  " << inline_text(x) << "\n";
            }
        } else {
            out << inline_text(v) << "\n";
        }
    }
}

void add_family_options(CLI::App *sub, Options &o)
{
    sub->add_option("--family", o.family, "dyck | motzkin | bouquet | schroeder | even-odd | psi | triple | "
                                          "motzkin-restricted | xi | section2 (spec file only)");
    sub->add_option("--n", o.n, "number N of bracket letters");
    sub->add_option("--j", o.j, "bouquet circles / xi loop symbols");
    sub->add_option("--q", o.q, "bouquet circle length");
    sub->add_option("--k", o.k, "expected |psi(gamma)| (checked)");
    sub->add_option("--k-minus", o.k_minus, "minus loops per letter");
    sub->add_option("--k-plus", o.k_plus, "plus loops per letter");
    sub->add_option("--psi", o.psi, "psi map, e.g. \"1:1,2;2:1\"");
    sub->add_option("--xi-omega", o.xi_omega, "xi_omega map on loop symbols");
    sub->add_option("--xi-gamma", o.xi_gamma, "xi_gamma map from letters to loop symbols");
    sub->add_option("--spec-file", o.spec_file, "JSON family specification");
}

void add_output_options(CLI::App *sub, Options &o)
{
    sub->add_flag("--json", o.json, "emit one JSON document");
    sub->add_flag("--timing", o.timing, "include wall time");
    sub->add_flag("--force", o.force, "bypass the enumeration guard");
    sub->add_option("--threads", o.threads, "enumeration threads");
    sub->add_flag("--verbose", o.verbose, "progress on standard error");
}

} // namespace

LetterSets parse_letter_sets(const std::string &text, int count)
{
    if (count < 1) {
        throw std::invalid_argument("letter map: count must be positive");
    }
    LetterSets out(static_cast<std::size_t>(count));
    std::vector<bool> seen(static_cast<std::size_t>(count), false);
    for (const auto &entry : split(text, ';')) {
        if (entry.empty()) {
            continue;
        }
        const auto colon = entry.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("malformed letter map entry '" + entry + "' (expected letter:list)");
        }
        const int key = parse_int(trim(entry.substr(0, colon)), "letter");
        if (key < 1 || key > count) {
            throw std::invalid_argument("letter " + std::to_string(key) + " outside 1.." + std::to_string(count));
        }
        if (seen[static_cast<std::size_t>(key - 1)]) {
            throw std::invalid_argument("letter " + std::to_string(key) + " given twice");
        }
        seen[static_cast<std::size_t>(key - 1)] = true;
        std::vector<int> values;
        for (const auto &v : split(entry.substr(colon + 1), ',')) {
            values.push_back(parse_int(v, "letter"));
        }
        out[static_cast<std::size_t>(key - 1)] = sorted_unique(std::move(values));
    }
    for (int i = 0; i < count; ++i) {
        if (!seen[static_cast<std::size_t>(i)]) {
            throw std::invalid_argument("letter map has no entry for " + std::to_string(i + 1));
        }
    }
    return out;
}

std::string format_letter_sets(const LetterSets &sets)
{
    std::string s;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (i) {
            s += ';';
        }
        s += std::to_string(i + 1) + ':';
        for (std::size_t k = 0; k < sets[i].size(); ++k) {
            s += (k ? "," : "") + std::to_string(sets[i][k]);
        }
    }
    return s;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Options o;
    CLI::App app{"Zeta functions and entropy of Dyck-type subshifts", "sofdyck"};
    app.require_subcommand(1);

    auto *zeta = app.add_subcommand("zeta", "closed-form zeta function as exact coefficients");
    add_family_options(zeta, o);
    zeta->add_option("--order", o.order, "truncation order");
    zeta->add_flag("--as-printed", o.as_printed, "triple family: use the displayed closed form verbatim");
    add_output_options(zeta, o);

    auto *entropy = app.add_subcommand("entropy", "topological entropy");
    add_family_options(entropy, o);
    entropy->add_option("--tol", o.tol, "maximal root residual");
    entropy->add_option("--max-n", o.max_n, "word length for growth estimates");
    add_output_options(entropy, o);

    auto *count = app.add_subcommand("count", "enumerate admissible words or periodic points");
    add_family_options(count, o);
    count->add_option("--length", o.length, "word length")->required();
    count->add_flag("--periodic", o.periodic, "count periodic points");
    add_output_options(count, o);

    auto *verify = app.add_subcommand("verify", "compare closed-form periodic counts with enumeration");
    add_family_options(verify, o);
    verify->add_option("--order", o.order, "truncation order");
    verify->add_option("--max-n", o.max_n, "largest period checked");
    verify->add_flag("--as-printed", o.as_printed, "triple family: use the displayed closed form verbatim");
    add_output_options(verify, o);

    auto *classify = app.add_subcommand("classify", "symmetries and delta classes of psi");
    classify->add_option("--n", o.n, "number N of letters");
    classify->add_option("--psi", o.psi, "psi map, e.g. \"1:1,2;2:1\"");
    classify->add_option("--spec-file", o.spec_file, "JSON psi specification");
    add_output_options(classify, o);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_code::ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return exit_code::bad_input;
    }

    const auto start = std::chrono::steady_clock::now();
    Json report;
    int code = exit_code::ok;
    try {
        if (*zeta) {
            code = cmd_zeta(o, report, err);
        } else if (*entropy) {
            code = cmd_entropy(o, report);
        } else if (*count) {
            code = cmd_count(o, report);
        } else if (*verify) {
            code = cmd_verify(o, report, err);
        } else {
            code = cmd_classify(o, report);
        }
    } catch (const GuardError &e) {
        err << "error: " << e.what() << "\n";
        return exit_code::resource_guard;
    } catch (const NumericFailure &e) {
        err << "error: " << e.what() << "\n";
        return exit_code::numeric_failure;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return exit_code::bad_input;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code::bad_input;
    } catch (const CapabilityError &e) {
        err << "error: " << e.what() << "\n";
        return exit_code::bad_input;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return exit_code::numeric_failure;
    }
    if (o.timing) {
        report["timing"]["seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    if (o.json) {
        out << report.dump(2) << "\n";
    } else {
        render_text(report, out, 0);
    }
    return code;
}

} // namespace sofdyck
