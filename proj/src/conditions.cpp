#include "nfb/conditions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <utility>

#include "nfb/error.hpp"

namespace nfb {

bool ConditionReport::all_pass() const {
    return std::all_of(hypotheses.begin(), hypotheses.end(),
                       [](const HypothesisReport& h) { return h.passed(); });
}

const HypothesisReport* ConditionReport::first_failure() const {
    for (const auto& h : hypotheses)
        if (!h.passed()) return &h;
    return nullptr;
}

namespace {

void require_range(const NRange& ns) {
    if (ns.lo < 2 || ns.hi < ns.lo)
        throw ValidationError("n-range must satisfy 2 <= lo <= hi");
}

void require_monoid(const FiniteMonoid& M, const char* who) {
    if (!M.identity)
        throw ValidationError(std::string(who) + " needs a monoid (identity element present)");
}

// Compact label: letters joined when every name is one character, spaced
// rendering otherwise.  Deterministic either way.
std::string word_label(const Word& w) {
    bool single = std::all_of(w.begin(), w.end(),
                              [](const Variable& v) { return v.name.size() == 1; });
    if (!single) return render(w);
    std::string s;
    for (const Variable& v : w) s += v.name;
    return s.empty() ? "1" : s;
}

Word power_word(const Variable& v, std::size_t p) {
    Word w;
    for (std::size_t i = 0; i < p; ++i) w.push_back(v);
    return w;
}

// x^m t x^c and friends, built letter by letter.
Word sandwich(const Variable& outer, std::size_t m, const Variable& mid, std::size_t inner_occ,
              std::size_t c) {
    Word w = power_word(outer, m);
    for (std::size_t i = 0; i < inner_occ; ++i) w.push_back(mid);
    return concat(w, power_word(outer, c));
}

HypothesisReport from_satisfies(std::string id, const FiniteMonoid& M, const Identity& idty,
                                bool must_hold, const SatisfyOptions& opts) {
    HypothesisReport h;
    h.id = std::move(id);
    h.identity = idty;
    Verdict v = satisfies(M, idty, opts);
    bool ok = must_hold == v.holds();
    h.status = ok ? CheckReport::Status::Pass : CheckReport::Status::Fail;
    std::ostringstream d;
    if (v.holds())
        d << (must_hold ? "holds" : "unexpectedly holds");
    else
        d << (must_hold ? "fails" : "fails as required");
    d << " (route " << v.route << ")";
    if (!v.note.empty()) d << "; " << v.note;
    h.detail = d.str();
    if (!v.holds() && v.witness) h.witness_assignment = v.witness;
    return h;
}

HypothesisReport from_isoterm(std::string id, const Word& u, const IsotermVerdict& v) {
    HypothesisReport h;
    h.id = std::move(id);
    switch (v.status) {
    case IsotermVerdict::Status::Isoterm:
        h.status = CheckReport::Status::Pass;
        h.detail = "isoterm (exact): " + v.certificate;
        break;
    case IsotermVerdict::Status::IsotermUpToBound:
        h.status = CheckReport::Status::BoundedPass;
        h.bound = v.bound;
        h.detail = "isoterm across the class window";
        break;
    case IsotermVerdict::Status::NotIsoterm:
        h.status = CheckReport::Status::Fail;
        h.witness_word = v.witness;
        if (v.witness) {
            h.identity = Identity{u, *v.witness};
            h.detail = "not an isoterm: the monoid satisfies " + render(u) + " = " +
                       render(*v.witness);
        } else {
            h.detail = "not an isoterm";
        }
        break;
    }
    return h;
}

HypothesisReport from_check(std::string id, const CheckReport& r) {
    HypothesisReport h;
    h.id = std::move(id);
    h.status = r.status;
    if (r.bound > 0) h.bound = r.bound;
    h.witness_word = r.witness;
    h.detail = r.detail;
    return h;
}

HypothesisReport from_power(std::string id, const FiniteMonoid& M, std::size_t c) {
    Word u = power_word(make_variable("x"), c);
    return from_isoterm(std::move(id), u, power_isoterm(M, c));
}

ShapeTemplate power_pair_template() {
    ShapeTemplate t;
    t.kind = ShapeTemplate::Kind::PowerPair;
    t.x = make_variable("x");
    t.y = make_variable("y");
    return t;
}

} // namespace

ConditionReport check_sl1(const FiniteMonoid& M, NRange ns, std::size_t bound,
                          const SatisfyOptions& opts) {
    require_range(ns);
    require_monoid(M, "check_sl1");
    ConditionReport rep;
    rep.condition = "sl1";
    rep.monoid = M.name;

    for (std::size_t n = ns.lo; n <= ns.hi; ++n) {
        SchemeParams p;
        p.n = n;
        rep.hypotheses.push_back(from_satisfies("i:n=" + std::to_string(n), M,
                                                generate(SchemeName::Sl1, p).identity, true,
                                                opts));
    }

    const Variable vx = make_variable("x");
    const Variable vt = make_variable("t");
    const Variable vy = make_variable("y");

    constexpr std::array<std::pair<std::size_t, std::size_t>, 4> grid2 = {
        {{1, 1}, {1, 2}, {2, 1}, {2, 2}}};
    for (auto [m, c] : grid2) {
        Word w = sandwich(vx, m, vt, 1, c);
        std::vector<OccRef> X = {OccRef{vx, 1}, OccRef{vt, 1}};
        std::ostringstream id;
        id << "ii:m=" << m << ",c=" << c;
        rep.hypotheses.push_back(from_check(id.str(), l_stable_wrt(M, w, X, bound, opts)));
    }

    constexpr std::array<std::pair<std::size_t, std::size_t>, 3> grid3 = {
        {{2, 2}, {2, 3}, {3, 2}}};
    for (auto [m, c] : grid3) {
        Word u = concat(power_word(vx, m), power_word(vy, c));
        std::ostringstream id;
        id << "iii:x^" << m << "y^" << c;
        rep.hypotheses.push_back(
            from_check(id.str(), class_shape(M, u, power_pair_template(), bound, opts)));
    }

    constexpr std::array<std::array<std::size_t, 3>, 3> grid4 = {{{1, 2, 1}, {1, 2, 2}, {2, 2, 1}}};
    for (auto [m, d, c] : grid4) {
        Word u = sandwich(vx, m, vy, d, c);
        ShapeTemplate t;
        t.kind = ShapeTemplate::Kind::PowerSandwich;
        t.x = vx;
        t.y = vy;
        std::ostringstream id;
        id << "iv:x^" << m << "y^" << d << "x^" << c;
        rep.hypotheses.push_back(from_check(id.str(), class_shape(M, u, t, bound, opts)));
    }
    return rep;
}

ConditionReport check_table_row(const FiniteMonoid& M, int row, const SchemeParams& params,
                                NRange ns, std::optional<std::size_t> bound,
                                const SatisfyOptions& opts) {
    require_range(ns);
    require_monoid(M, "check_table_row");
    if (row < 1 || row > 8) throw ValidationError("row must be between 1 and 8");
    SchemeName name = parse_scheme_name("row" + std::to_string(row));

    ConditionReport rep;
    {
        std::ostringstream c;
        c << "row" << row;
        if (params.m) c << " m=" << *params.m;
        rep.condition = c.str();
    }
    rep.monoid = M.name;

    for (const Word& w : isoterm_words(name, params))
        rep.hypotheses.push_back(
            from_isoterm("a:" + word_label(w), w, is_isoterm(M, w, bound, opts)));

    for (std::size_t n = ns.lo; n <= ns.hi; ++n) {
        SchemeParams p = params;
        p.n = n;
        rep.hypotheses.push_back(from_satisfies("b:n=" + std::to_string(n), M,
                                                generate(name, p).identity, true, opts));
    }
    return rep;
}

ConditionReport check_psc(const FiniteMonoid& M, NRange ns, std::size_t bound,
                          const SatisfyOptions& opts) {
    require_range(ns);
    require_monoid(M, "check_psc");
    ConditionReport rep;
    rep.condition = "psc";
    rep.monoid = M.name;

    for (std::size_t n = ns.lo; n <= ns.hi; ++n) {
        SchemeParams p;
        p.n = n;
        rep.hypotheses.push_back(from_satisfies("i:n=" + std::to_string(n), M,
                                                generate(SchemeName::Psc, p).identity, true,
                                                opts));
    }

    rep.hypotheses.push_back(from_satisfies("ii:not(xyxy=xyyx)", M,
                                            parse_identity("x y x y = x y y x"), false, opts));

    for (const Word& w : isoterm_words(SchemeName::Psc, {}))
        rep.hypotheses.push_back(
            from_isoterm("iii:" + word_label(w), w, is_isoterm(M, w, bound, opts)));
    return rep;
}

ConditionReport check_el(const FiniteMonoid& M, std::size_t k, NRange ns,
                         const SatisfyOptions& opts) {
    require_range(ns);
    if (k < 2) throw ValidationError("check_el needs k >= 2");
    ConditionReport rep;
    rep.condition = "el k=" + std::to_string(k);
    rep.monoid = M.name;

    for (std::size_t n = ns.lo; n <= ns.hi; ++n) {
        SchemeParams p;
        p.n = n;
        p.k = k;
        rep.hypotheses.push_back(from_satisfies("i:n=" + std::to_string(n), M,
                                                generate(SchemeName::El, p).identity, true,
                                                opts));
    }

    {
        SchemeParams p;
        p.k = k;
        rep.hypotheses.push_back(
            from_satisfies("ii:e1", M, generate(SchemeName::ElE1, p).identity, false, opts));
    }

    const Variable vx = make_variable("x");
    const Variable vy = make_variable("y");
    SchemeParams p;
    p.k = k;
    Identity squares = generate(SchemeName::ElE2, p).identity;
    Word xyx = sandwich(vx, 1, vy, 1, 1);
    Identity left{concat(power_word(vx, k + 1), concat(power_word(vy, 1), power_word(vx, 1))),
                  xyx};
    Identity right{concat(power_word(vx, 1), concat(power_word(vy, 1), power_word(vx, k + 1))),
                   xyx};
    rep.hypotheses.push_back(from_satisfies("iii:e2a", M, squares, true, opts));
    rep.hypotheses.push_back(from_satisfies("iii:e2b", M, left, true, opts));
    rep.hypotheses.push_back(from_satisfies("iii:e2c", M, right, true, opts));
    return rep;
}

ConditionReport check_bsnew(const FiniteMonoid& M, std::size_t m, NRange ns,
                            std::optional<std::size_t> bound, const SatisfyOptions& opts) {
    require_range(ns);
    require_monoid(M, "check_bsnew");
    if (m < 3) throw ValidationError("check_bsnew needs m >= 3");
    ConditionReport rep;
    rep.condition = "bsnew m=" + std::to_string(m);
    rep.monoid = M.name;

    for (std::size_t n = ns.lo; n <= ns.hi; ++n) {
        SchemeParams p;
        p.n = n;
        p.m = m;
        rep.hypotheses.push_back(from_satisfies("i:n=" + std::to_string(n), M,
                                                generate(SchemeName::Bsnew, p).identity, true,
                                                opts));
    }

    if (M.jm_theory_level) {
        // The oracle leans on the theory tag; verify one feasible instance
        // against plain exhaustive search on an untagged copy.
        constexpr std::uint64_t kCrossCap = 20'000'000;
        std::optional<std::size_t> pick;
        for (std::size_t n = ns.hi;; --n) {
            std::uint64_t est = 1;
            bool over = false;
            for (std::size_t i = 0; i < n + 1 && !over; ++i) {
                if (est > kCrossCap / M.order) over = true;
                else est *= M.order;
            }
            if (!over) {
                pick = n;
                break;
            }
            if (n == ns.lo) break;
        }
        HypothesisReport h;
        h.id = "i:cross-check";
        if (!pick) {
            h.status = CheckReport::Status::BoundedPass;
            h.detail = "no n in range fits the exhaustive cross-check cap; "
                       "oracle verdicts stand on the theory tag alone";
        } else {
            SchemeParams p;
            p.n = *pick;
            p.m = m;
            Identity idty = generate(SchemeName::Bsnew, p).identity;
            h.identity = idty;
            bool oracle = satisfies(M, idty, opts).holds();
            std::ostringstream d;
            try {
                bool brute = satisfies(flattened(M), idty, opts).holds();
                if (brute == oracle) {
                    h.status = CheckReport::Status::Pass;
                    d << "oracle and exhaustive search agree at n=" << *pick;
                } else {
                    h.status = CheckReport::Status::Fail;
                    d << "oracle and exhaustive search disagree at n=" << *pick;
                }
            } catch (const CapError& e) {
                h.status = CheckReport::Status::BoundedPass;
                d << "exhaustive cross-check hit its budget: " << e.what();
            }
            h.detail = d.str();
        }
        rep.hypotheses.push_back(std::move(h));
    }

    const Variable vx = make_variable("x");
    const Variable vy = make_variable("y");
    Word xyyx = sandwich(vx, 1, vy, 2, 1);
    rep.hypotheses.push_back(from_isoterm("ii:xyyx", xyyx, is_isoterm(M, xyyx, bound, opts)));
    rep.hypotheses.push_back(from_power("ii:x^" + std::to_string(m - 1), M, m - 1));

    Word w3 = power_word(vx, m - 2);
    w3.push_back(make_variable("t1"));
    w3.push_back(vx);
    w3.push_back(make_variable("t2"));
    w3.push_back(vx);
    rep.hypotheses.push_back(
        from_isoterm("iii:" + word_label(w3), w3, is_isoterm(M, w3, bound, opts)));

    Word w4 = power_word(vx, m - 2);
    w4.push_back(vy);
    w4.push_back(vx);
    w4.push_back(vy);
    w4.push_back(vx);
    ShapeTemplate t;
    t.kind = ShapeTemplate::Kind::ExactAtOcc;
    t.x = vx;
    rep.hypotheses.push_back(
        from_check("iv:" + word_label(w4), class_shape(M, w4, t, bound, opts)));
    return rep;
}

ConditionReport check_bsnew1(const FiniteMonoid& M, std::size_t m, NRange ns,
                             std::optional<std::size_t> bound, const SatisfyOptions& opts) {
    require_range(ns);
    require_monoid(M, "check_bsnew1");
    if (m < 1) throw ValidationError("check_bsnew1 needs m >= 1");
    ConditionReport rep;
    rep.condition = "bsnew1 m=" + std::to_string(m);
    rep.monoid = M.name;

    for (std::size_t n = ns.lo; n <= ns.hi; ++n) {
        SchemeParams p;
        p.n = n;
        p.m = m;
        rep.hypotheses.push_back(from_satisfies("i:n=" + std::to_string(n), M,
                                                generate(SchemeName::Bsnew1, p).identity, true,
                                                opts));
    }

    const Variable vx = make_variable("x");
    const Variable vt = make_variable("t");
    const Variable vy = make_variable("y");
    for (std::size_t d = 1; d <= m; ++d) {
        Word w = sandwich(vx, m + 1 - d, vt, 1, d);
        rep.hypotheses.push_back(from_check("ii:d=" + std::to_string(d),
                                            var_stable_wrt(M, w, vx, bound, opts)));
    }

    constexpr std::array<std::pair<std::size_t, std::size_t>, 3> grid3 = {
        {{2, 2}, {2, 3}, {3, 2}}};
    for (auto [p, c] : grid3) {
        Word u = concat(power_word(vx, p), power_word(vy, c));
        std::ostringstream id;
        id << "iii:x^" << p << "y^" << c;
        rep.hypotheses.push_back(
            from_check(id.str(), class_shape(M, u, power_pair_template(), bound, opts)));
    }
    return rep;
}

CheckReport check_corollary_alg(const std::vector<Word>& W, std::size_t m) {
    if (W.empty()) throw ValidationError("check_corollary_alg needs a nonempty word list");
    for (const Word& w : W)
        if (w.empty()) throw ValidationError("check_corollary_alg: every word must be nonempty");
    if (m < 1) throw ValidationError("check_corollary_alg needs m >= 1");
    CheckReport r;
    r.status = CheckReport::Status::Pass;
    r.bound = 0;

    // (a) adjacency: consecutive occurrences of distinct non-linear
    // variables must pair a first occurrence with a last occurrence.
    for (const Word& w : W) {
        WordProfile prof = profile(w);
        for (const auto& [c, d] : adjacent_pairs(w, ocs(w))) {
            if (c.var == d.var) continue;
            std::size_t oc = prof.occ.at(c.var);
            std::size_t od = prof.occ.at(d.var);
            if (oc < 2 || od < 2) continue;
            bool first_last = (c.index == 1 && d.index == od) || (d.index == 1 && c.index == oc);
            if (!first_last) {
                r.status = CheckReport::Status::Fail;
                r.witness = w;
                std::ostringstream os;
                os << "(a) fails in " << render(w) << ": adjacent occurrences _" << c.index
                   << c.var.name << ", _" << d.index << d.var.name
                   << " do not pair a first occurrence with a last occurrence";
                r.detail = os.str();
                return r;
            }
        }
    }

    // (b) split factors: m must be the maximal power of a letter occurring
    // as a factor, and each split b^(m+1-d) T b^d (T nonempty, b-free) must
    // occur as a factor of some word.
    std::size_t max_power = 0;
    for (const Word& w : W) {
        std::size_t i = 0;
        while (i < w.size()) {
            std::size_t j = i;
            while (j < w.size() && w.at(j) == w.at(i)) ++j;
            max_power = std::max(max_power, j - i);
            i = j;
        }
    }
    if (max_power != m) {
        r.status = CheckReport::Status::Fail;
        std::ostringstream os;
        os << "(b) fails: m=" << m << " but the maximal letter power occurring as a factor is "
           << max_power;
        r.detail = os.str();
        return r;
    }
    for (std::size_t d = 1; d <= m; ++d) {
        bool found = false;
        for (const Word& w : W) {
            // maximal runs per variable, in order; consecutive runs of the
            // same variable are separated by a nonempty gap free of it
            std::map<Variable, std::vector<std::size_t>> runs;
            std::size_t i = 0;
            while (i < w.size()) {
                std::size_t j = i;
                while (j < w.size() && w.at(j) == w.at(i)) ++j;
                runs[w.at(i)].push_back(j - i);
                i = j;
            }
            for (const auto& [v, lens] : runs) {
                for (std::size_t q = 0; q + 1 < lens.size(); ++q)
                    if (lens[q] >= m + 1 - d && lens[q + 1] >= d) {
                        found = true;
                        break;
                    }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) {
            r.status = CheckReport::Status::Fail;
            std::ostringstream os;
            os << "(b) fails: no word contains a factor b^" << (m + 1 - d) << " T b^" << d
               << " with T nonempty and b-free";
            r.detail = os.str();
            return r;
        }
    }
    std::ostringstream os;
    os << "(a) holds and (b) holds for every split at m=" << m;
    r.detail = os.str();
    return r;
}

} // namespace nfb
