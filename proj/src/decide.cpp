#include "nfb/decide.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <memory>
#include <numeric>
#include <sstream>
#include <thread>

namespace nfb {

namespace {

// Variables in order of first occurrence in lhs·rhs; this is the assignment
// order used for witness minimality.
std::vector<Variable> assignment_order(const Identity& id) {
    std::vector<Variable> vars;
    auto take = [&](const Word& w) {
        for (const auto& v : w)
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    };
    take(id.lhs);
    take(id.rhs);
    return vars;
}

// One side of an identity compiled to per-letter variable slots.
struct SideProgram {
    std::vector<std::size_t> slot_of; // letter -> index into the variable order

    SideProgram(const Word& w, const std::vector<Variable>& vars) {
        slot_of.reserve(w.size());
        for (const auto& letter : w) {
            auto it = std::find(vars.begin(), vars.end(), letter);
            slot_of.push_back(static_cast<std::size_t>(it - vars.begin()));
        }
    }
};

// Prefix evaluation state for one side at one search depth.
struct Prefix {
    std::size_t pos = 0; // letters [0, pos) are folded into val
    Elem val = 0;
    bool nonempty = false;

    bool dead(const std::optional<Elem>& zero) const {
        return nonempty && zero && val == *zero;
    }
};

// Depth-first scan over assignments with optional zero-collapse pruning.
// Visits values of the root variable in [root_lo, root_hi); cooperates with
// a shared abort marker holding the lowest chunk index that found a witness.
class Search {
  public:
    Search(const FiniteMonoid& m, const Identity& id, const std::vector<Variable>& vars,
           std::uint64_t budget, std::atomic<int>* winner, int chunk)
        : m_(m),
          lhs_(id.lhs),
          rhs_(id.rhs),
          left_(id.lhs, vars),
          right_(id.rhs, vars),
          k_(vars.size()),
          budget_(budget),
          winner_(winner),
          chunk_(chunk) {
        values_.assign(k_, 0);
        lstate_.assign(k_ + 1, Prefix{});
        rstate_.assign(k_ + 1, Prefix{});
    }

    // Returns true when a counterexample was found (stored in values()).
    bool run(Elem root_lo, Elem root_hi) {
        if (k_ == 0) return leaf_differs(0);
        return dfs(0, root_lo, root_hi);
    }

    bool capped() const { return capped_; }
    std::uint64_t explored() const { return explored_; }
    const std::vector<Elem>& values() const { return values_; }

  private:
    Elem fold(Prefix& p, const Word& w, const SideProgram& prog, std::size_t depth) {
        while (p.pos < w.size() && prog.slot_of[p.pos] <= depth) {
            Elem e = values_[prog.slot_of[p.pos]];
            p.val = p.nonempty ? m_.mul(p.val, e) : e;
            p.nonempty = true;
            ++p.pos;
        }
        return p.val;
    }

    Elem finish(const Prefix& p) const {
        // all letters folded; an empty side means the identity element
        return p.nonempty ? p.val : *m_.identity;
    }

    bool leaf_differs(std::size_t depth) {
        return finish(lstate_[depth]) != finish(rstate_[depth]);
    }

    bool dfs(std::size_t depth, Elem lo, Elem hi) {
        for (Elem val = lo; val < hi; ++val) {
            if (winner_ && winner_->load(std::memory_order_relaxed) < chunk_) return false;
            if (explored_ == budget_) {
                capped_ = true;
                return false;
            }
            ++explored_;
            values_[depth] = val;
            lstate_[depth + 1] = lstate_[depth];
            rstate_[depth + 1] = rstate_[depth];
            fold(lstate_[depth + 1], lhs_, left_, depth);
            fold(rstate_[depth + 1], rhs_, right_, depth);
            // both sides collapsed: every extension evaluates 0 = 0
            if (lstate_[depth + 1].dead(m_.zero) && rstate_[depth + 1].dead(m_.zero)) continue;
            if (depth + 1 == k_) {
                if (leaf_differs(depth + 1)) return true;
            } else if (dfs(depth + 1, 0, static_cast<Elem>(m_.order))) {
                return true;
            }
            if (capped_) return false;
        }
        return false;
    }

    const FiniteMonoid& m_;
    const Word& lhs_;
    const Word& rhs_;
    SideProgram left_, right_;
    std::size_t k_;
    std::uint64_t budget_;
    std::uint64_t explored_ = 0;
    bool capped_ = false;
    std::atomic<int>* winner_;
    int chunk_;
    std::vector<Elem> values_;
    std::vector<Prefix> lstate_, rstate_;
};

Assignment to_assignment(const std::vector<Variable>& vars, const std::vector<Elem>& values) {
    Assignment a;
    for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = values[i];
    return a;
}

Verdict run_search(const FiniteMonoid& m, const Identity& id, const SatisfyOptions& opts) {
    auto vars = assignment_order(id);
    Verdict out;
    out.route = "search";

    unsigned workers = std::max(1u, opts.workers);
    if (workers == 1 || vars.empty() || m.order < 2) {
        Search s(m, id, vars, opts.budget, nullptr, 0);
        if (s.run(0, static_cast<Elem>(vars.empty() ? 1 : m.order))) {
            out.status = Verdict::Status::Fails;
            out.witness = to_assignment(vars, s.values());
        } else if (s.capped()) {
            std::ostringstream os;
            os << "assignment search exceeded the node budget (" << opts.budget << ")";
            throw CapError(os.str());
        }
        return out;
    }

    // Root variable values are split into contiguous chunks; the witness of
    // the lowest failing chunk is the lexicographically least overall.
    workers = std::min<unsigned>(workers, m.order);
    std::atomic<int> winner{std::numeric_limits<int>::max()};
    std::vector<std::unique_ptr<Search>> searches;
    std::vector<char> found(workers, 0);
    std::vector<std::thread> threads;
    std::uint64_t share = std::max<std::uint64_t>(1, opts.budget / workers);
    for (unsigned w = 0; w < workers; ++w)
        searches.push_back(
            std::make_unique<Search>(m, id, vars, share, &winner, static_cast<int>(w)));
    for (unsigned w = 0; w < workers; ++w) {
        Elem lo = static_cast<Elem>(std::uint32_t(m.order) * w / workers);
        Elem hi = static_cast<Elem>(std::uint32_t(m.order) * (w + 1) / workers);
        threads.emplace_back([&, w, lo, hi] {
            if (searches[w]->run(lo, hi)) {
                found[w] = 1;
                int self = static_cast<int>(w);
                int cur = winner.load();
                while (self < cur && !winner.compare_exchange_weak(cur, self)) {
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    for (unsigned w = 0; w < workers; ++w) {
        if (searches[w]->capped()) {
            std::ostringstream os;
            os << "assignment search exceeded the node budget (" << share << " per worker)";
            throw CapError(os.str());
        }
        if (found[w]) {
            out.status = Verdict::Status::Fails;
            out.witness = to_assignment(vars, searches[w]->values());
            return out;
        }
    }
    return out;
}

// First scattered subword (shortlex) on which the two sides disagree.
std::string distinguishing_subword(const Identity& id, std::size_t level) {
    auto lp = scattered_subwords(id.lhs, level);
    auto rp = scattered_subwords(id.rhs, level);
    std::vector<Word> diff;
    std::set_symmetric_difference(lp.subwords.begin(), lp.subwords.end(), rp.subwords.begin(),
                                  rp.subwords.end(), std::back_inserter(diff));
    return diff.empty() ? std::string{} : render(diff.front());
}

Verdict satisfies_impl(const FiniteMonoid& m, const Identity& id, const SatisfyOptions& opts,
                       bool want_witness) {
    if ((id.lhs.empty() || id.rhs.empty()) && !m.identity)
        throw ValidationError("empty identity side needs an identity element in " + m.name);

    if (id.lhs == id.rhs) {
        Verdict out;
        out.route = "syntactic";
        out.note = "sides are equal as words";
        return out;
    }

    if (m.jm_theory_level) {
        std::size_t level = *m.jm_theory_level;
        Verdict out;
        out.route = "jm-oracle";
        if (jm_equivalent(id.lhs, id.rhs, level)) {
            std::ostringstream os;
            os << "equal scattered-subword sets up to length " << level;
            out.note = os.str();
            return out;
        }
        out.status = Verdict::Status::Fails;
        std::ostringstream os;
        os << "distinguishing subword of length <= " << level << ": "
           << distinguishing_subword(id, level);
        out.note = os.str();
        if (want_witness) {
            SatisfyOptions probe = opts;
            probe.budget = std::min<std::uint64_t>(opts.budget, 2'000'000);
            probe.workers = 1;
            try {
                Verdict direct = run_search(m, id, probe);
                out.witness = direct.witness; // guaranteed present: theory is exact
            } catch (const CapError&) {
                out.note += "; witness search exceeded its probe budget";
            }
        }
        return out;
    }

    if (!m.factors.empty()) {
        Verdict out;
        out.route = "factored";
        std::size_t offset_scale = m.order;
        for (std::size_t i = 0; i < m.factors.size(); ++i) {
            const FiniteMonoid& f = *m.factors[i];
            offset_scale /= f.order;
            Verdict sub = satisfies_impl(f, id, opts, want_witness);
            if (sub.holds()) continue;
            out.status = Verdict::Status::Fails;
            std::ostringstream os;
            os << "factor " << i << " (" << f.name << ") fails via " << sub.route;
            out.note = os.str();
            if (sub.witness) {
                // coordinates of the other factors padded with element 0
                Assignment lifted;
                for (const auto& [var, e] : *sub.witness)
                    lifted[var] = static_cast<Elem>(e * offset_scale);
                out.witness = lifted;
            }
            return out;
        }
        out.note = "all factors satisfy the identity";
        return out;
    }

    return run_search(m, id, opts);
}

} // namespace

Elem eval_word(const FiniteMonoid& m, const Word& u, const Assignment& a) {
    std::vector<Elem> seq;
    seq.reserve(u.size());
    for (const auto& v : u) {
        auto it = a.find(v);
        if (it == a.end())
            throw ValidationError("assignment misses variable " + v.name);
        if (it->second >= m.order)
            throw ValidationError("assignment value out of range for " + v.name);
        seq.push_back(it->second);
    }
    return m.eval(seq);
}

Verdict satisfies(const FiniteMonoid& m, const Identity& id, const SatisfyOptions& opts) {
    return satisfies_impl(m, id, opts, /*want_witness=*/true);
}

std::set<Word> equivalence_class(const FiniteMonoid& m, const Word& u, std::size_t bound,
                                 const SatisfyOptions& opts) {
    constexpr std::size_t kSpaceCap = 10'000'000;
    auto letters_of_u = content(u);
    std::vector<Variable> alphabet(letters_of_u.begin(), letters_of_u.end());

    std::size_t total = 1; // the empty word
    std::size_t layer = 1;
    for (std::size_t len = 1; len <= bound && !alphabet.empty(); ++len) {
        if (layer > kSpaceCap / alphabet.size()) throw CapError("candidate space exceeds cap");
        layer *= alphabet.size();
        total += layer;
        if (total > kSpaceCap) throw CapError("candidate space exceeds cap");
    }

    // Without an identity element the empty word is not a candidate: u = 1 is
    // not expressible over a plain semigroup.
    const std::size_t min_len = m.identity ? 0 : 1;
    if (u.empty() && !m.identity)
        throw ValidationError("the empty word has no class over a semigroup without identity");

    std::set<Word> out;
    std::vector<std::size_t> digits;
    for (std::size_t len = min_len; len <= bound; ++len) {
        if (len > 0 && alphabet.empty()) break;
        digits.assign(len, 0);
        for (;;) {
            std::vector<Variable> letters;
            letters.reserve(len);
            for (std::size_t d : digits) letters.push_back(alphabet[d]);
            Word v{std::move(letters)};
            if (v == u || satisfies_impl(m, Identity{u, v}, opts, false).holds()) out.insert(v);
            // odometer: rightmost digit advances first
            std::size_t i = len;
            while (i > 0 && ++digits[i - 1] == alphabet.size()) {
                digits[i - 1] = 0;
                --i;
            }
            if (i == 0) break;
        }
    }
    return out;
}

IsotermVerdict power_isoterm(const FiniteMonoid& m, std::size_t c) {
    if (c == 0) throw ValidationError("power must be positive");
    if (!m.identity) throw ValidationError("power_isoterm needs an identity element");

    std::size_t max_index = 1;
    Elem deep = *m.identity;
    std::uint64_t period_lcm = 1;
    constexpr std::uint64_t kLcmCap = 1'000'000;
    for (Elem e = 0; e < m.order; ++e) {
        PowerCycle pc = power_cycle(m, e);
        if (pc.index > max_index) {
            max_index = pc.index;
            deep = e;
        }
        std::uint64_t g = std::gcd(period_lcm, static_cast<std::uint64_t>(pc.period));
        period_lcm = period_lcm / g * pc.period;
        if (period_lcm > kLcmCap) throw CapError("power-period lcm exceeds cap");
    }

    IsotermVerdict out;
    if (c < max_index) {
        out.status = IsotermVerdict::Status::Isoterm;
        std::ostringstream os;
        os << "element " << m.elem_name(deep) << " reaches its power cycle only at exponent "
           << max_index << " > " << c << ", refuting x^" << c << " = x^j (j != " << c
           << "); the same element has no power equal to 1, refuting 1 = y^j";
        out.certificate = os.str();
        return out;
    }

    // c reaches every cycle, so x^c = x^(c + lcm of periods) holds; scan for
    // the least exponent that works.
    std::vector<Elem> target(m.order), pw(m.order);
    for (Elem e = 0; e < m.order; ++e) {
        Elem acc = e;
        for (std::size_t i = 1; i < c; ++i) acc = m.mul(acc, e);
        target[e] = acc;
        pw[e] = e;
    }
    std::size_t limit = c + static_cast<std::size_t>(period_lcm);
    for (std::size_t j = 1; j <= limit; ++j) {
        if (j > 1)
            for (Elem e = 0; e < m.order; ++e) pw[e] = m.mul(pw[e], e);
        if (j == c) continue;
        if (std::equal(pw.begin(), pw.end(), target.begin())) {
            out.status = IsotermVerdict::Status::NotIsoterm;
            std::vector<Variable> letters(j, Variable{"x"});
            out.witness = Word{std::move(letters)};
            return out;
        }
    }
    throw ValidationError("power scan failed to locate a matching exponent");
}

IsotermVerdict is_isoterm(const FiniteMonoid& m, const Word& u, std::optional<std::size_t> bound,
                          const SatisfyOptions& opts) {
    constexpr std::size_t kPermCap = 10'000'000;
    WordProfile prof = profile(u);
    std::size_t max_occ = 0;
    for (const auto& [v, c] : prof.occ) max_occ = std::max(max_occ, c);

    if (max_occ > 0 && m.identity) {
        IsotermVerdict single = power_isoterm(m, 1);
        IsotermVerdict top = max_occ == 1 ? single : power_isoterm(m, max_occ);
        if (single.status == IsotermVerdict::Status::Isoterm &&
            top.status == IsotermVerdict::Status::Isoterm) {
            // every equivalent word is a permutation of u's letters
            std::vector<Variable> letters(u.begin(), u.end());
            std::sort(letters.begin(), letters.end());
            std::size_t candidates = 0;
            do {
                if (++candidates > kPermCap) throw CapError("permutation space exceeds cap");
                Word v{letters};
                if (v == u) continue;
                if (satisfies_impl(m, Identity{u, v}, opts, false).holds()) {
                    IsotermVerdict out;
                    out.status = IsotermVerdict::Status::NotIsoterm;
                    out.witness = v;
                    return out;
                }
            } while (std::next_permutation(letters.begin(), letters.end()));
            IsotermVerdict out;
            out.status = IsotermVerdict::Status::Isoterm;
            std::ostringstream os;
            os << "single letter is an isoterm (" << single.certificate << "); x^" << max_occ
               << " is an isoterm (" << top.certificate << "); " << candidates
               << " letter-multiset permutations enumerated, all non-identical ones refuted";
            out.certificate = os.str();
            return out;
        }
    }

    std::size_t window = bound.value_or(u.size() + 2);
    IsotermVerdict out;
    for (const Word& v : equivalence_class(m, u, window, opts)) {
        if (v == u) continue;
        out.status = IsotermVerdict::Status::NotIsoterm;
        out.witness = v;
        return out;
    }
    out.status = IsotermVerdict::Status::IsotermUpToBound;
    out.bound = window;
    return out;
}

namespace {

// Shared sweep: apply a per-member predicate over the bounded class window.
template <typename Check>
CheckReport sweep_class(const FiniteMonoid& m, const Word& u, std::optional<std::size_t> bound,
                        const SatisfyOptions& opts, const std::string& what, Check&& check) {
    std::size_t window = bound.value_or(u.size() + 2);
    CheckReport out;
    out.bound = window;
    for (const Word& v : equivalence_class(m, u, window, opts)) {
        if (v == u) continue;
        if (!check(v)) {
            out.status = CheckReport::Status::Fail;
            out.witness = v;
            out.detail = what + " violated by class member " + render(v);
            return out;
        }
    }
    out.status = CheckReport::Status::BoundedPass;
    std::ostringstream os;
    os << what << " holds across the class window at bound " << window;
    out.detail = os.str();
    return out;
}

} // namespace

CheckReport l_stable_wrt(const FiniteMonoid& m, const Word& u, const std::vector<OccRef>& X,
                         std::optional<std::size_t> bound, const SatisfyOptions& opts) {
    for (const OccRef& r : X) position_of(u, r); // validates X ⊆ ocs(u)
    return sweep_class(m, u, bound, opts, "l-stability", [&](const Word& v) {
        if (X.empty()) return true;
        std::set<Variable> shared;
        auto cu = content(u), cv = content(v);
        std::set_intersection(cu.begin(), cu.end(), cv.begin(), cv.end(),
                              std::inserter(shared, shared.begin()));
        if (shared.empty()) return false; // l-map undefined on every reference
        return occ_set_stable(l_map(u, v), X, u, v);
    });
}

CheckReport var_stable_wrt(const FiniteMonoid& m, const Word& u, const Variable& x,
                           std::optional<std::size_t> bound, const SatisfyOptions& opts) {
    return sweep_class(m, u, bound, opts, "occurrence count of " + x.name,
                       [&](const Word& v) { return var_stable(u, v, x); });
}

CheckReport varset_stable_wrt(const FiniteMonoid& m, const Word& u, const std::set<Variable>& X,
                              std::optional<std::size_t> bound, const SatisfyOptions& opts) {
    return sweep_class(m, u, bound, opts, "projection to the variable set",
                       [&](const Word& v) { return varset_stable(u, v, X); });
}

bool matches_shape(const Word& v, const ShapeTemplate& tmpl, const Word& u) {
    auto run_of = [&](const Variable& x, std::size_t from) {
        std::size_t i = from;
        while (i < v.size() && v[i] == x) ++i;
        return i - from;
    };
    switch (tmpl.kind) {
        case ShapeTemplate::Kind::PowerPair: {
            std::size_t i = run_of(tmpl.x, 0);
            std::size_t j = run_of(tmpl.y, i);
            return i > 1 && j > 1 && i + j == v.size();
        }
        case ShapeTemplate::Kind::PowerSandwich: {
            std::size_t i = run_of(tmpl.x, 0);
            std::size_t j = run_of(tmpl.y, i);
            std::size_t k = run_of(tmpl.x, i + j);
            return i > 0 && j > 1 && k > 0 && i + j + k == v.size();
        }
        case ShapeTemplate::Kind::ExactAtOcc:
            return occ(v, tmpl.x) != occ(u, tmpl.x) || v == u;
    }
    throw ValidationError("unhandled shape template");
}

CheckReport class_shape(const FiniteMonoid& m, const Word& u, const ShapeTemplate& tmpl,
                        std::optional<std::size_t> bound, const SatisfyOptions& opts) {
    return sweep_class(m, u, bound, opts, "shape template",
                       [&](const Word& v) { return matches_shape(v, tmpl, u); });
}

} // namespace nfb
