// nfbtool: command-line front end for the finite-monoid identity toolkit.
//
// Verbs: build, check-identity, isoterm, class, subwords, jm, nfb, scheme.
// Exit codes: 0 holds/isoterm/pass, 1 fails/not-isoterm/check failed,
// 2 bounded-only verdict, 64 usage, 65 cap exceeded, 66 i/o.
//
// All state flows through flags and files: no network, no environment
// variables.  --json <path> writes a structured report that carries the
// tool version, the full command line, and every bound in effect.

#include "CLI11.hpp"

#include "nfb/conditions.hpp"
#include "nfb/decide.hpp"
#include "nfb/error.hpp"
#include "nfb/monoid_io.hpp"
#include "nfb/monoids.hpp"
#include "nfb/presets.hpp"
#include "nfb/report.hpp"
#include "nfb/schemes.hpp"
#include "nfb/words.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr const char* kToolName = "nfbtool";
constexpr const char* kToolVersion = "0.1.0";

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitBounded = 2;
constexpr int kExitUsage = 64;
constexpr int kExitCap = 65;
constexpr int kExitIo = 66;

using nfb::CheckReport;
using nfb::ConditionReport;
using nfb::FiniteMonoid;
using nfb::Identity;
using nfb::IsotermVerdict;
using nfb::SatisfyOptions;
using nfb::Verdict;
using nfb::Word;
using nlohmann::ordered_json;

unsigned default_workers() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

// One word per line; '#' starts a comment; blank lines ignored.
std::vector<Word> read_word_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw nfb::IoError("cannot open word list: " + path);
    std::vector<Word> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        out.push_back(nfb::parse_word(line.substr(b, e - b + 1)));
    }
    return out;
}

void write_report(const std::string& path, const ordered_json& payload) {
    std::ofstream out(path);
    if (!out) throw nfb::IoError("cannot open report for writing: " + path);
    out << payload.dump(2) << "\n";
    if (!out) throw nfb::IoError("failed while writing report: " + path);
}

// Common report envelope: identification, full command line, bounds.
ordered_json envelope(const std::vector<std::string>& argv, const std::string& verb) {
    ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = argv;
    j["verb"] = verb;
    return j;
}

ordered_json bounds_json(const SatisfyOptions& opts, std::optional<std::size_t> bound) {
    ordered_json j;
    j["budget"] = opts.budget;
    j["workers"] = opts.workers;
    j["bound"] = bound ? ordered_json(*bound) : ordered_json(nullptr);
    return j;
}

std::string render_assignment(const nfb::Assignment& a, const FiniteMonoid& M) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [var, elem] : a) {
        if (!first) os << ", ";
        first = false;
        os << var.name << " -> " << M.elem_name(elem);
    }
    return os.str();
}

// Shortlex for stable listings (std::set<Word> orders purely lexically).
std::vector<Word> shortlex_sorted(const std::set<Word>& ws) {
    std::vector<Word> out(ws.begin(), ws.end());
    std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

// ---- per-verb settings ----

struct BuildArgs {
    std::string preset;
    std::string dilworth_file;
    std::size_t reflexive = 0;
    std::size_t triangular = 0;
    bool free_diagonal = false;
    std::vector<std::string> product_files;
    std::string flatten_file;
    std::string out;
};

struct MonoidWordArgs {
    std::string monoid_file;
    std::string word;
    std::optional<std::size_t> bound;
};

struct NfbArgs {
    std::string monoid_file;
    std::string check;
    std::size_t k = 2;
    std::optional<std::size_t> m;
    int row = 0;
    std::size_t n_lo = 2;
    std::size_t n_hi = 0; // 0 = checker default
    std::optional<std::size_t> bound;
    std::string words_file;
};

int run_build(const BuildArgs& a, const std::vector<std::string>& argv,
              const std::string& json_path) {
    int sources = (!a.preset.empty()) + (!a.dilworth_file.empty()) + (a.reflexive > 0) +
                  (a.triangular > 0) + (!a.product_files.empty()) + (!a.flatten_file.empty());
    if (sources != 1)
        throw nfb::ValidationError("build needs exactly one of --preset, --dilworth, "
                                   "--reflexive, --triangular, --product, --flatten");
    FiniteMonoid M;
    if (!a.preset.empty()) {
        M = nfb::preset(a.preset);
    } else if (!a.dilworth_file.empty()) {
        M = nfb::dilworth(read_word_list(a.dilworth_file));
    } else if (a.reflexive > 0) {
        M = nfb::reflexive_relations(a.reflexive);
    } else if (a.triangular > 0) {
        M = nfb::triangular_boolean(a.triangular, !a.free_diagonal);
    } else if (!a.product_files.empty()) {
        if (a.product_files.size() != 2)
            throw nfb::ValidationError("--product needs exactly two monoid files");
        M = nfb::direct_product(nfb::load_monoid(a.product_files[0]),
                                nfb::load_monoid(a.product_files[1]));
    } else {
        M = nfb::flattened(nfb::load_monoid(a.flatten_file));
    }
    nfb::save_monoid(M, a.out);
    std::cout << M.name << ": order " << M.order << ", saved to " << a.out << "\n";
    if (!json_path.empty()) {
        ordered_json j = envelope(argv, "build");
        j["result"]["name"] = M.name;
        j["result"]["order"] = M.order;
        j["result"]["out"] = a.out;
        write_report(json_path, j);
    }
    return kExitHolds;
}

int run_check_identity(const std::string& monoid_file, const std::string& identity_text,
                       const SatisfyOptions& opts, const std::vector<std::string>& argv,
                       const std::string& json_path) {
    FiniteMonoid M = nfb::load_monoid(monoid_file);
    Identity id = nfb::parse_identity(identity_text);
    Verdict v = nfb::satisfies(M, id, opts);
    if (v.holds()) {
        std::cout << "holds (route " << v.route << ")";
    } else {
        std::cout << "fails (route " << v.route << ")";
        if (v.witness) std::cout << ": " << render_assignment(*v.witness, M);
    }
    if (!v.note.empty()) std::cout << "\n  note: " << v.note;
    std::cout << "\n";
    if (!json_path.empty()) {
        ordered_json j = envelope(argv, "check-identity");
        j["monoid"] = M.name;
        j["identity"] = identity_text;
        j["bounds"] = bounds_json(opts, std::nullopt);
        j["result"] = nfb::verdict_json(v, M);
        write_report(json_path, j);
    }
    return v.holds() ? kExitHolds : kExitFails;
}

int run_isoterm(const MonoidWordArgs& a, const SatisfyOptions& opts,
                const std::vector<std::string>& argv, const std::string& json_path) {
    FiniteMonoid M = nfb::load_monoid(a.monoid_file);
    Word u = nfb::parse_word(a.word);
    IsotermVerdict v = nfb::is_isoterm(M, u, a.bound, opts);
    int code = kExitHolds;
    switch (v.status) {
    case IsotermVerdict::Status::Isoterm:
        std::cout << "isoterm (exact): " << v.certificate << "\n";
        code = kExitHolds;
        break;
    case IsotermVerdict::Status::NotIsoterm:
        std::cout << "not an isoterm";
        if (v.witness)
            std::cout << ": the monoid satisfies " << nfb::render(u) << " = "
                      << nfb::render(*v.witness);
        std::cout << "\n";
        code = kExitFails;
        break;
    case IsotermVerdict::Status::IsotermUpToBound:
        std::cout << "isoterm up to bound " << (v.bound ? *v.bound : 0) << "\n";
        code = kExitBounded;
        break;
    }
    if (!json_path.empty()) {
        ordered_json j = envelope(argv, "isoterm");
        j["monoid"] = M.name;
        j["word"] = nfb::render(u);
        j["bounds"] = bounds_json(opts, a.bound);
        j["result"] = nfb::isoterm_json(v);
        write_report(json_path, j);
    }
    return code;
}

int run_class(const MonoidWordArgs& a, const SatisfyOptions& opts,
              const std::vector<std::string>& argv, const std::string& json_path) {
    if (!a.bound) throw nfb::ValidationError("class needs --bound");
    FiniteMonoid M = nfb::load_monoid(a.monoid_file);
    Word u = nfb::parse_word(a.word);
    auto members = shortlex_sorted(nfb::equivalence_class(M, u, *a.bound, opts));
    for (const Word& w : members) std::cout << nfb::render(w) << "\n";
    if (!json_path.empty()) {
        ordered_json j = envelope(argv, "class");
        j["monoid"] = M.name;
        j["word"] = nfb::render(u);
        j["bounds"] = bounds_json(opts, a.bound);
        ordered_json list = ordered_json::array();
        for (const Word& w : members) list.push_back(nfb::render(w));
        j["result"]["members"] = std::move(list);
        write_report(json_path, j);
    }
    return kExitHolds;
}

int run_subwords(const std::string& word, std::size_t m, std::size_t cap,
                 const std::vector<std::string>& argv, const std::string& json_path) {
    Word u = nfb::parse_word(word);
    auto prof = nfb::scattered_subwords(u, m, cap);
    auto sorted = shortlex_sorted(prof.subwords);
    for (const Word& w : sorted) std::cout << nfb::render(w) << "\n";
    if (!json_path.empty()) {
        ordered_json j = envelope(argv, "subwords");
        j["word"] = nfb::render(u);
        j["m"] = m;
        j["cap"] = cap;
        ordered_json list = ordered_json::array();
        for (const Word& w : sorted) list.push_back(nfb::render(w));
        j["result"]["count"] = sorted.size();
        j["result"]["subwords"] = std::move(list);
        write_report(json_path, j);
    }
    return kExitHolds;
}

int run_jm(const std::string& ustr, const std::string& vstr, std::size_t m, std::size_t cap,
           const std::vector<std::string>& argv, const std::string& json_path) {
    Word u = nfb::parse_word(ustr);
    Word v = nfb::parse_word(vstr);
    bool eq = nfb::jm_equivalent(u, v, m, cap);
    std::optional<Word> distinguishing;
    if (!eq) {
        auto pu = nfb::scattered_subwords(u, m, cap).subwords;
        auto pv = nfb::scattered_subwords(v, m, cap).subwords;
        std::set<Word> diff;
        for (const Word& w : pu)
            if (!pv.count(w)) diff.insert(w);
        for (const Word& w : pv)
            if (!pu.count(w)) diff.insert(w);
        auto sorted = shortlex_sorted(diff);
        if (!sorted.empty()) distinguishing = sorted.front();
    }
    if (eq) {
        std::cout << "equivalent: equal scattered-subword sets up to length " << m << "\n";
    } else {
        std::cout << "not equivalent";
        if (distinguishing)
            std::cout << ": subword " << nfb::render(*distinguishing)
                      << " occurs in exactly one side";
        std::cout << "\n";
    }
    if (!json_path.empty()) {
        ordered_json j = envelope(argv, "jm");
        j["u"] = nfb::render(u);
        j["v"] = nfb::render(v);
        j["m"] = m;
        j["cap"] = cap;
        j["result"]["equivalent"] = eq;
        j["result"]["distinguishing_subword"] =
            distinguishing ? ordered_json(nfb::render(*distinguishing)) : ordered_json(nullptr);
        write_report(json_path, j);
    }
    return eq ? kExitHolds : kExitFails;
}

int condition_exit(const ConditionReport& rep) {
    bool bounded = false;
    for (const auto& h : rep.hypotheses) {
        if (!h.passed()) return kExitFails;
        if (h.status == CheckReport::Status::BoundedPass) bounded = true;
    }
    return bounded ? kExitBounded : kExitHolds;
}

void print_condition(const ConditionReport& rep, const FiniteMonoid& M) {
    std::cout << "condition: " << rep.condition << "\n";
    std::cout << "monoid: " << rep.monoid << " (order " << M.order << ")\n";
    std::size_t width = 0;
    for (const auto& h : rep.hypotheses) width = std::max(width, h.id.size());
    for (const auto& h : rep.hypotheses) {
        const char* status = h.status == CheckReport::Status::Pass          ? "pass        "
                             : h.status == CheckReport::Status::BoundedPass ? "bounded-pass"
                                                                            : "FAIL        ";
        std::cout << "  " << h.id << std::string(width - h.id.size() + 2, ' ') << status << "  "
                  << h.detail << "\n";
    }
    if (rep.all_pass()) {
        std::cout << "overall: pass\n";
    } else {
        std::cout << "overall: fail (first failure " << rep.first_failure()->id << ")\n";
    }
    std::cout << "note: " << rep.scale_note << "\n";
}

int run_nfb(const NfbArgs& a, const SatisfyOptions& opts, const std::vector<std::string>& argv,
            const std::string& json_path) {
    // The word-list checker is purely syntactic: no monoid involved.
    if (a.check == "corollary") {
        if (a.words_file.empty())
            throw nfb::ValidationError("nfb --check corollary needs --words <file>");
        if (!a.m) throw nfb::ValidationError("nfb --check corollary needs --m");
        CheckReport r = nfb::check_corollary_alg(read_word_list(a.words_file), *a.m);
        std::cout << (r.passed() ? "pass" : "FAIL") << ": " << r.detail << "\n";
        if (!json_path.empty()) {
            ordered_json j = envelope(argv, "nfb");
            j["check"] = a.check;
            j["m"] = *a.m;
            j["words"] = a.words_file;
            j["result"] = nfb::check_json(r);
            write_report(json_path, j);
        }
        return r.passed() ? kExitHolds : kExitFails;
    }

    if (a.monoid_file.empty()) throw nfb::ValidationError("nfb needs --monoid <file>");
    FiniteMonoid M = nfb::load_monoid(a.monoid_file);
    ConditionReport rep;
    if (a.check == "sl1") {
        nfb::NRange ns{a.n_lo, a.n_hi ? a.n_hi : 5};
        rep = nfb::check_sl1(M, ns, a.bound ? *a.bound : 8, opts);
    } else if (a.check.rfind("row", 0) == 0 || a.check == "table-row") {
        int row = a.row;
        if (a.check.size() == 4 && a.check.rfind("row", 0) == 0) row = a.check[3] - '0';
        nfb::SchemeParams p;
        p.m = a.m;
        nfb::NRange ns{a.n_lo, a.n_hi ? a.n_hi : 3};
        rep = nfb::check_table_row(M, row, p, ns, a.bound, opts);
    } else if (a.check == "psc") {
        nfb::NRange ns{a.n_lo, a.n_hi ? a.n_hi : 4};
        rep = nfb::check_psc(M, ns, a.bound ? *a.bound : 7, opts);
    } else if (a.check == "el") {
        nfb::NRange ns{a.n_lo, a.n_hi ? a.n_hi : 5};
        rep = nfb::check_el(M, a.k, ns, opts);
    } else if (a.check == "bsnew") {
        if (!a.m) throw nfb::ValidationError("nfb --check bsnew needs --m");
        nfb::NRange ns{a.n_lo, a.n_hi ? a.n_hi : 5};
        rep = nfb::check_bsnew(M, *a.m, ns, a.bound, opts);
    } else if (a.check == "bsnew1") {
        if (!a.m) throw nfb::ValidationError("nfb --check bsnew1 needs --m");
        nfb::NRange ns{a.n_lo, a.n_hi ? a.n_hi : 4};
        rep = nfb::check_bsnew1(M, *a.m, ns, a.bound, opts);
    } else {
        throw nfb::ValidationError("unknown check '" + a.check +
                                   "' (expected sl1, row1..row8, psc, el, bsnew, bsnew1, "
                                   "or corollary)");
    }
    print_condition(rep, M);
    if (!json_path.empty()) {
        ordered_json j = envelope(argv, "nfb");
        j["check"] = a.check;
        j["bounds"] = bounds_json(opts, a.bound);
        j["result"] = nfb::condition_json(rep, M);
        write_report(json_path, j);
    }
    return condition_exit(rep);
}

int run_scheme(const std::string& name, const nfb::SchemeParams& params, bool words,
               const std::vector<std::string>& argv, const std::string& json_path) {
    nfb::SchemeName scheme = nfb::parse_scheme_name(name);
    if (words) {
        ordered_json list = ordered_json::array();
        for (const Word& w : nfb::isoterm_words(scheme, params)) {
            std::cout << nfb::render(w) << "\n";
            list.push_back(nfb::render(w));
        }
        if (!json_path.empty()) {
            ordered_json j = envelope(argv, "scheme");
            j["scheme"] = name;
            j["result"]["words"] = std::move(list);
            write_report(json_path, j);
        }
        return kExitHolds;
    }
    auto out = nfb::generate(scheme, params);
    std::string text = nfb::render(out.identity.lhs) + " = " + nfb::render(out.identity.rhs);
    std::cout << text << "\n";
    if (!json_path.empty()) {
        ordered_json j = envelope(argv, "scheme");
        j["scheme"] = name;
        j["result"]["identity"] = text;
        write_report(json_path, j);
    }
    return kExitHolds;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> argv_vec(argv, argv + argc);

    CLI::App app{std::string(kToolName) + " " + kToolVersion +
                 " — finite-monoid identity toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

    SatisfyOptions opts;
    opts.workers = default_workers();
    std::string json_path;

    // build
    BuildArgs build;
    auto* cb = app.add_subcommand("build", "construct a monoid and save it as JSON");
    cb->add_option("--preset", build.preset, "named monoid: " + [] {
        std::string s;
        for (const auto& n : nfb::preset_names()) s += (s.empty() ? "" : ", ") + n;
        return s;
    }());
    cb->add_option("--dilworth", build.dilworth_file, "word-list file for S(W)");
    cb->add_option("--reflexive", build.reflexive, "reflexive Boolean relations on k points");
    cb->add_option("--triangular", build.triangular, "upper-triangular Boolean k x k matrices");
    cb->add_flag("--free-diagonal", build.free_diagonal,
                 "with --triangular: leave the diagonal free instead of all-ones");
    cb->add_option("--product", build.product_files, "two monoid files for the direct product")
        ->expected(2);
    cb->add_option("--flatten", build.flatten_file,
                   "monoid file: strip structure tags, keep the raw table");
    cb->add_option("--out", build.out, "output path")->required();
    cb->add_option("--json", json_path, "write a JSON report here");

    // check-identity
    std::string monoid_file, identity_text;
    auto* cc = app.add_subcommand("check-identity", "decide whether a monoid satisfies u = v");
    cc->add_option("--monoid", monoid_file, "monoid JSON file")->required();
    cc->add_option("--identity", identity_text, "identity, e.g. \"x^2 = x^3\"")->required();
    cc->add_option("--budget", opts.budget, "search-node budget");
    cc->add_option("--workers", opts.workers, "parallel search fan-out");
    cc->add_option("--json", json_path, "write a JSON report here");

    // isoterm
    MonoidWordArgs iso;
    auto* ci = app.add_subcommand("isoterm", "decide whether a word is an isoterm");
    ci->add_option("--monoid", iso.monoid_file, "monoid JSON file")->required();
    ci->add_option("--word", iso.word, "word, e.g. \"x t x\"")->required();
    ci->add_option("--bound", iso.bound, "class window (default |u|+2 when bounded)");
    ci->add_option("--budget", opts.budget, "search-node budget");
    ci->add_option("--workers", opts.workers, "parallel search fan-out");
    ci->add_option("--json", json_path, "write a JSON report here");

    // class
    MonoidWordArgs cls;
    auto* cl = app.add_subcommand("class", "list words the monoid cannot tell apart from u");
    cl->add_option("--monoid", cls.monoid_file, "monoid JSON file")->required();
    cl->add_option("--word", cls.word, "word u")->required();
    cl->add_option("--bound", cls.bound, "maximum candidate length")->required();
    cl->add_option("--budget", opts.budget, "search-node budget");
    cl->add_option("--workers", opts.workers, "parallel search fan-out");
    cl->add_option("--json", json_path, "write a JSON report here");

    // subwords
    std::string sw_word;
    std::size_t sw_m = 1;
    std::size_t sw_cap = 10'000'000;
    auto* cs = app.add_subcommand("subwords", "list scattered subwords up to a length");
    cs->add_option("--word", sw_word, "word")->required();
    cs->add_option("--m", sw_m, "maximum subword length")->required();
    cs->add_option("--cap", sw_cap, "maximum number of distinct subwords");
    cs->add_option("--json", json_path, "write a JSON report here");

    // jm
    std::string jm_u, jm_v;
    std::size_t jm_m = 1;
    std::size_t jm_cap = 10'000'000;
    auto* cj = app.add_subcommand("jm", "compare scattered-subword sets of two words");
    cj->add_option("--u", jm_u, "left word")->required();
    cj->add_option("--v", jm_v, "right word")->required();
    cj->add_option("--m", jm_m, "maximum subword length")->required();
    cj->add_option("--cap", jm_cap, "maximum number of distinct subwords");
    cj->add_option("--json", json_path, "write a JSON report here");

    // nfb
    NfbArgs nfbargs;
    auto* cn = app.add_subcommand("nfb", "run a structural condition checker");
    cn->add_option("--monoid", nfbargs.monoid_file, "monoid JSON file");
    cn->add_option("--check", nfbargs.check,
                   "sl1, row1..row8, psc, el, bsnew, bsnew1, or corollary")
        ->required();
    cn->add_option("--k", nfbargs.k, "power parameter for el");
    cn->add_option("--m", nfbargs.m, "power parameter (row8, bsnew, bsnew1, corollary)");
    cn->add_option("--row", nfbargs.row, "row number for --check table-row");
    cn->add_option("--n-lo", nfbargs.n_lo, "smallest scheme instance (default 2)");
    cn->add_option("--n-hi", nfbargs.n_hi, "largest scheme instance (checker default)");
    cn->add_option("--bound", nfbargs.bound, "class window for the bounded sub-checks");
    cn->add_option("--words", nfbargs.words_file, "word-list file for --check corollary");
    cn->add_option("--budget", opts.budget, "search-node budget");
    cn->add_option("--workers", opts.workers, "parallel search fan-out");
    cn->add_option("--json", json_path, "write a JSON report here");

    // scheme
    std::string scheme_name;
    nfb::SchemeParams scheme_params;
    bool scheme_words = false;
    auto* cg = app.add_subcommand("scheme", "print a parametric identity instance");
    cg->add_option("--scheme", scheme_name, "one of: " + [] {
        std::string s;
        for (const auto& n : nfb::scheme_names()) s += (s.empty() ? "" : ", ") + n;
        return s;
    }())->required();
    std::optional<std::size_t> pn, pm, pk, pd;
    cg->add_option("--n", pn, "block length");
    cg->add_option("--m", pm, "power parameter");
    cg->add_option("--k", pk, "power parameter");
    cg->add_option("--d", pd, "split parameter");
    cg->add_flag("--words", scheme_words, "print the scheme's isoterm words instead");
    cg->add_option("--json", json_path, "write a JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    scheme_params.n = pn;
    scheme_params.m = pm;
    scheme_params.k = pk;
    scheme_params.d = pd;

    try {
        if (cb->parsed()) return run_build(build, argv_vec, json_path);
        if (cc->parsed())
            return run_check_identity(monoid_file, identity_text, opts, argv_vec, json_path);
        if (ci->parsed()) return run_isoterm(iso, opts, argv_vec, json_path);
        if (cl->parsed()) return run_class(cls, opts, argv_vec, json_path);
        if (cs->parsed()) return run_subwords(sw_word, sw_m, sw_cap, argv_vec, json_path);
        if (cj->parsed()) return run_jm(jm_u, jm_v, jm_m, jm_cap, argv_vec, json_path);
        if (cn->parsed()) return run_nfb(nfbargs, opts, argv_vec, json_path);
        if (cg->parsed())
            return run_scheme(scheme_name, scheme_params, scheme_words, argv_vec, json_path);
    } catch (const nfb::CapError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const nfb::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const nfb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
