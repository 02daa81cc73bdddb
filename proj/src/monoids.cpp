#include "nfb/monoids.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace nfb {

namespace {

// Render a normal-form word as an element name: single-letter alphabets
// concatenate ("bab"), otherwise tokens are space-separated.
std::string element_label(const Word& w, bool compact) {
    if (w.size() == 0) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i && !compact) os << ' ';
        os << w[i].name;
    }
    return os.str();
}

bool all_single_letter(const std::vector<Word>& ws) {
    for (const auto& w : ws)
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i].name.size() != 1) return false;
    return true;
}

void check_associativity(const FiniteMonoid& M) {
    const std::size_t n = M.order;
    auto bad = [&](Elem a, Elem b, Elem c) {
        return M.mul(M.mul(a, b), c) != M.mul(a, M.mul(b, c));
    };
    auto fail = [&](Elem a, Elem b, Elem c) {
        std::ostringstream os;
        os << M.name << ": associativity fails at (" << M.elem_name(a) << ", "
           << M.elem_name(b) << ", " << M.elem_name(c) << ")";
        throw ValidationError(os.str());
    };
    if (n <= 512) {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                for (Elem c = 0; c < n; ++c)
                    if (bad(a, b, c)) fail(a, b, c);
        return;
    }
    // Too big for the cubic check: all generator triples, then a fixed
    // seeded sample of one million random triples.
    std::vector<Elem> gens;
    for (const auto& [_, g] : M.generators) gens.push_back(g);
    for (Elem a : gens)
        for (Elem b : gens)
            for (Elem c : gens)
                if (bad(a, b, c)) fail(a, b, c);
    std::mt19937 rng(123456789u);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int i = 0; i < 1'000'000; ++i) {
        Elem a = static_cast<Elem>(pick(rng));
        Elem b = static_cast<Elem>(pick(rng));
        Elem c = static_cast<Elem>(pick(rng));
        if (bad(a, b, c)) fail(a, b, c);
    }
}

} // namespace

Elem FiniteMonoid::eval(const std::vector<Elem>& seq) const {
    if (seq.empty()) {
        if (!identity) throw ValidationError(name + ": empty product in a semigroup without identity");
        return *identity;
    }
    Elem acc = seq[0];
    for (std::size_t i = 1; i < seq.size(); ++i) acc = mul(acc, seq[i]);
    return acc;
}

void validate(const FiniteMonoid& M) {
    const std::size_t n = M.order;
    if (n == 0) throw ValidationError(M.name + ": empty carrier");
    if (n > kMaxOrder) {
        std::ostringstream os;
        os << M.name << ": order " << n << " exceeds the materialized-table cap " << kMaxOrder;
        throw CapError(os.str());
    }
    if (M.table.size() != n * n) throw ValidationError(M.name + ": table size != order^2");
    for (Elem v : M.table)
        if (v >= n) throw ValidationError(M.name + ": table entry out of range");
    if (M.names.size() != n) throw ValidationError(M.name + ": names size != order");
    {
        std::set<std::string> seen(M.names.begin(), M.names.end());
        if (seen.size() != n) throw ValidationError(M.name + ": element names are not distinct");
    }
    if (M.identity) {
        Elem e = *M.identity;
        if (e >= n) throw ValidationError(M.name + ": identity index out of range");
        for (Elem x = 0; x < n; ++x)
            if (M.mul(e, x) != x || M.mul(x, e) != x)
                throw ValidationError(M.name + ": claimed identity is not neutral");
    }
    if (M.zero) {
        Elem z = *M.zero;
        if (z >= n) throw ValidationError(M.name + ": zero index out of range");
        for (Elem x = 0; x < n; ++x)
            if (M.mul(z, x) != z || M.mul(x, z) != z)
                throw ValidationError(M.name + ": claimed zero is not absorbing");
    }
    for (const auto& [letter, g] : M.generators) {
        if (g >= n) throw ValidationError(M.name + ": generator '" + letter + "' out of range");
    }
    if (!M.grades.empty()) {
        if (M.grades.size() != n) throw ValidationError(M.name + ": grades size != order");
        if (!M.zero) throw ValidationError(M.name + ": grading requires a zero element");
        if (M.grades[*M.zero] != kGradeZero)
            throw ValidationError(M.name + ": zero must carry the sentinel grade");
        if (M.identity && M.grades[*M.identity] != 0)
            throw ValidationError(M.name + ": identity must have grade 0");
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) {
                Elem c = M.mul(a, b);
                if (M.grades[a] == kGradeZero || M.grades[b] == kGradeZero) {
                    if (c != *M.zero)
                        throw ValidationError(M.name + ": product with zero-graded element is not zero");
                } else if (c != *M.zero &&
                           M.grades[c] != M.grades[a] + M.grades[b]) {
                    throw ValidationError(M.name + ": grading is not additive");
                }
            }
    }
    if (!M.factors.empty()) {
        if (M.factors.size() != 2 || !M.factors[0] || !M.factors[1])
            throw ValidationError(M.name + ": factor list must hold exactly two monoids");
        if (M.factors[0]->order * M.factors[1]->order != n)
            throw ValidationError(M.name + ": factor orders do not multiply to the order");
        // The factored decision route answers from these tables, so they
        // must agree with the product table (exhaustively when affordable,
        // sampled above that, like the associativity check).
        const FiniteMonoid& A = *M.factors[0];
        const FiniteMonoid& B = *M.factors[1];
        const std::size_t nb = B.order;
        auto expected = [&](std::size_t p, std::size_t q) {
            return static_cast<Elem>(
                A.mul(static_cast<Elem>(p / nb), static_cast<Elem>(q / nb)) * nb +
                B.mul(static_cast<Elem>(p % nb), static_cast<Elem>(q % nb)));
        };
        auto check_pair = [&](std::size_t p, std::size_t q) {
            if (M.table[p * n + q] != expected(p, q))
                throw ValidationError(M.name + ": table disagrees with the factor tables");
        };
        if (n <= 2048) {
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) check_pair(p, q);
        } else {
            std::mt19937 rng(0x9e3779b9u);
            std::uniform_int_distribution<std::size_t> pick(0, n - 1);
            for (int t = 0; t < 1'000'000; ++t) check_pair(pick(rng), pick(rng));
        }
    }
    check_associativity(M);
}

FiniteMonoid flattened(const FiniteMonoid& M) {
    FiniteMonoid out = M;
    out.factors.clear();
    out.grades.clear();
    out.jm_theory_level.reset();
    return out;
}

// ---- factor-word monoid ----

FiniteMonoid dilworth(const std::vector<Word>& W) {
    if (W.empty()) throw ValidationError("dilworth: empty word set");
    for (const auto& w : W)
        if (w.size() == 0) throw ValidationError("dilworth: words must be non-empty");

    std::set<Word> factor_set;
    for (const auto& w : W)
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::vector<Variable> buf;
            for (std::size_t j = i; j < w.size(); ++j) {
                buf.push_back(w[j]);
                factor_set.insert(Word(buf));
            }
        }

    std::vector<Word> factors(factor_set.begin(), factor_set.end()); // shortlex
    const std::size_t n = factors.size() + 2;
    if (n > kMaxOrder) {
        std::ostringstream os;
        os << "dilworth: " << n << " elements exceed the cap " << kMaxOrder;
        throw CapError(os.str());
    }

    FiniteMonoid M;
    {
        std::ostringstream os;
        bool compact = all_single_letter(W);
        os << "S({";
        for (std::size_t i = 0; i < W.size(); ++i)
            os << (i ? ", " : "") << element_label(W[i], compact);
        os << "})";
        M.name = os.str();
    }
    M.order = n;
    const Elem one = 0;
    const Elem zero = static_cast<Elem>(n - 1);
    M.identity = one;
    M.zero = zero;

    std::map<Word, Elem> index;
    for (std::size_t i = 0; i < factors.size(); ++i)
        index[factors[i]] = static_cast<Elem>(i + 1);

    bool compact = all_single_letter(factors);
    M.names.assign(n, {});
    M.names[one] = "1";
    M.names[zero] = "0";
    for (std::size_t i = 0; i < factors.size(); ++i)
        M.names[i + 1] = element_label(factors[i], compact);

    M.grades.assign(n, 0);
    M.grades[zero] = kGradeZero;
    for (std::size_t i = 0; i < factors.size(); ++i)
        M.grades[i + 1] = static_cast<std::uint32_t>(factors[i].size());

    for (const auto& [w, e] : index)
        if (w.size() == 1) M.generators[w[0].name] = e;

    M.table.assign(n * n, zero);
    auto set = [&](Elem a, Elem b, Elem c) { M.table[a * n + b] = c; };
    for (Elem x = 0; x < n; ++x) {
        set(one, x, x);
        set(x, one, x);
        set(zero, x, zero);
        set(x, zero, zero);
    }
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = 0; j < factors.size(); ++j) {
            Word cat = concat(factors[i], factors[j]);
            auto it = index.find(cat);
            set(static_cast<Elem>(i + 1), static_cast<Elem>(j + 1),
                it == index.end() ? zero : it->second);
        }

    validate(M);
    return M;
}

// ---- rewrite presentations ----

bool RewriteRule::reducing() const {
    if (lhs.size() == 0) return false;
    if (to_zero) return true;
    if (rhs.size() < lhs.size()) return true;
    if (rhs.size() > lhs.size()) return false;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (rhs[i] < lhs[i]) return true;
        if (lhs[i] < rhs[i]) return false;
    }
    return false; // identical sides
}

RewriteRule parse_rule(const std::string& text) {
    auto pos = text.find("->");
    if (pos == std::string::npos)
        throw ParseError("rule '" + text + "': expected 'lhs -> rhs'");
    auto trim = [](std::string s) {
        auto a = s.find_first_not_of(" \t");
        auto b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
    };
    std::string ls = trim(text.substr(0, pos));
    std::string rs = trim(text.substr(pos + 2));
    RewriteRule r;
    r.lhs = parse_word(ls);
    if (r.lhs.size() == 0)
        throw ParseError("rule '" + text + "': left side must be a non-empty word");
    if (rs == "0") {
        r.to_zero = true;
    } else {
        r.rhs = parse_word(rs);
    }
    if (!r.reducing())
        throw ValidationError("rule '" + text +
                              "' is not reducing (length, then lexicographic)");
    return r;
}

namespace {

// Normal form of a word under leftmost-first rewriting, rules tried in
// declaration order at each position.  zero = true marks the absorbing
// element; its word is meaningless.
struct NormalForm {
    bool zero = false;
    Word w;
};

bool matches_at(const Word& w, std::size_t pos, const Word& pat) {
    if (pos + pat.size() > w.size()) return false;
    for (std::size_t i = 0; i < pat.size(); ++i)
        if (!(w[pos + i] == pat[i])) return false;
    return true;
}

NormalForm normalize(Word w, const std::vector<RewriteRule>& rules) {
    for (std::size_t steps = 0;; ++steps) {
        if (steps > 100'000)
            throw ValidationError("rewriting exceeded the step cap; system is not reducing");
        bool rewrote = false;
        for (std::size_t pos = 0; pos < w.size() && !rewrote; ++pos)
            for (const auto& r : rules) {
                if (!matches_at(w, pos, r.lhs)) continue;
                if (r.to_zero) return {true, {}};
                std::vector<Variable> buf;
                buf.reserve(w.size() - r.lhs.size() + r.rhs.size());
                for (std::size_t i = 0; i < pos; ++i) buf.push_back(w[i]);
                for (std::size_t i = 0; i < r.rhs.size(); ++i) buf.push_back(r.rhs[i]);
                for (std::size_t i = pos + r.lhs.size(); i < w.size(); ++i) buf.push_back(w[i]);
                w = Word(std::move(buf));
                rewrote = true;
                break;
            }
        if (!rewrote) return {false, std::move(w)};
    }
}

} // namespace

FiniteMonoid from_rules(const std::vector<RewriteRule>& rules,
                        const std::vector<std::string>& extra_generators,
                        std::size_t element_cap) {
    for (const auto& r : rules)
        if (!r.reducing())
            throw ValidationError("from_rules: non-reducing rule '" +
                                  render(r.lhs) + " -> " +
                                  (r.to_zero ? "0" : render(r.rhs)) + "'");

    std::set<Variable> alphabet;
    for (const auto& r : rules) {
        for (std::size_t i = 0; i < r.lhs.size(); ++i) alphabet.insert(r.lhs[i]);
        for (std::size_t i = 0; i < r.rhs.size(); ++i) alphabet.insert(r.rhs[i]);
    }
    for (const auto& g : extra_generators) {
        Word w = parse_word(g);
        if (w.size() != 1)
            throw ValidationError("from_rules: generator '" + g + "' must be a single letter");
        alphabet.insert(w[0]);
    }
    if (alphabet.empty()) throw ValidationError("from_rules: no generators");

    // Element store: zero (if reachable) is tracked separately from words.
    std::vector<NormalForm> elems;
    std::map<Word, Elem> by_word;
    std::optional<Elem> zero_idx;
    auto intern = [&](NormalForm nf) -> Elem {
        if (nf.zero) {
            if (!zero_idx) {
                zero_idx = static_cast<Elem>(elems.size());
                elems.push_back({true, {}});
            }
            return *zero_idx;
        }
        auto it = by_word.find(nf.w);
        if (it != by_word.end()) return it->second;
        if (elems.size() >= element_cap) {
            std::ostringstream os;
            os << "from_rules: element cap " << element_cap
               << " exceeded; presentation may be infinite";
            throw CapError(os.str());
        }
        Elem e = static_cast<Elem>(elems.size());
        by_word[nf.w] = e;
        elems.push_back(std::move(nf));
        return e;
    };

    for (const auto& a : alphabet)
        intern(normalize(Word(std::vector<Variable>{a}), rules));

    auto product_nf = [&](Elem a, Elem b) -> NormalForm {
        if (elems[a].zero || elems[b].zero) return {true, {}};
        return normalize(concat(elems[a].w, elems[b].w), rules);
    };

    // Close under products: each pass multiplies every pair with at least
    // one member from the previous frontier.
    std::size_t known = 0;
    while (known < elems.size()) {
        std::size_t frontier = known;
        known = elems.size();
        for (std::size_t a = 0; a < known; ++a)
            for (std::size_t b = 0; b < known; ++b) {
                if (a < frontier && b < frontier) continue;
                intern(product_nf(static_cast<Elem>(a), static_cast<Elem>(b)));
            }
    }

    const std::size_t n = elems.size();
    if (n > kMaxOrder) {
        std::ostringstream os;
        os << "from_rules: order " << n << " exceeds the cap " << kMaxOrder;
        throw CapError(os.str());
    }

    FiniteMonoid M;
    {
        std::ostringstream os;
        os << "<";
        bool first = true;
        for (const auto& a : alphabet) {
            os << (first ? "" : ",") << a.name;
            first = false;
        }
        os << " | ";
        for (std::size_t i = 0; i < rules.size(); ++i) {
            os << (i ? ", " : "") << render(rules[i].lhs) << " = "
               << (rules[i].to_zero ? "0" : rules[i].rhs.size() == 0 ? "1" : render(rules[i].rhs));
        }
        os << ">";
        M.name = os.str();
    }
    M.order = n;
    M.zero = zero_idx;
    M.table.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            NormalForm nf = product_nf(static_cast<Elem>(a), static_cast<Elem>(b));
            Elem c;
            if (nf.zero) {
                if (!zero_idx) throw ValidationError("from_rules: closure missed the zero");
                c = *zero_idx;
            } else {
                auto it = by_word.find(nf.w);
                if (it == by_word.end())
                    throw ValidationError("from_rules: closure missed element '" + render(nf.w) + "'");
                c = it->second;
            }
            M.table[a * n + b] = c;
        }

    {
        std::vector<Word> words;
        for (const auto& e : elems)
            if (!e.zero) words.push_back(e.w);
        bool compact = all_single_letter(words);
        M.names.assign(n, {});
        for (std::size_t i = 0; i < n; ++i)
            M.names[i] = elems[i].zero ? "0" : element_label(elems[i].w, compact);
    }

    auto empty_it = by_word.find(Word{});
    if (empty_it != by_word.end()) M.identity = empty_it->second;

    for (const auto& a : alphabet) {
        NormalForm nf = normalize(Word(std::vector<Variable>{a}), rules);
        M.generators[a.name] = nf.zero ? *zero_idx : by_word.at(nf.w);
    }

    // Each defining relation must hold when evaluated through the table.
    for (const auto& r : rules) {
        auto eval_side = [&](const Word& w) -> Elem {
            std::vector<Elem> seq;
            for (std::size_t i = 0; i < w.size(); ++i) seq.push_back(M.generators.at(w[i].name));
            return M.eval(seq);
        };
        Elem l = eval_side(r.lhs);
        Elem rv;
        if (r.to_zero) {
            if (!zero_idx)
                throw ValidationError("from_rules: rule maps to 0 but no zero was reached");
            rv = *zero_idx;
        } else if (r.rhs.size() == 0) {
            if (!M.identity)
                throw ValidationError("from_rules: rule maps to 1 but no identity was reached");
            rv = *M.identity;
        } else {
            rv = eval_side(r.rhs);
        }
        if (l != rv)
            throw ValidationError("from_rules: relation '" + render(r.lhs) +
                                  " = " + (r.to_zero ? "0" : r.rhs.size() == 0 ? "1" : render(r.rhs)) +
                                  "' does not hold in the quotient (earlier rules shadow it)");
    }

    validate(M);
    return M;
}

FiniteMonoid brandt() {
    std::vector<RewriteRule> rules = {
        parse_rule("aba -> a"),
        parse_rule("bab -> b"),
        parse_rule("aa -> 0"),
        parse_rule("bb -> 0"),
    };
    FiniteMonoid M = adjoin_identity(from_rules(rules));
    M.name = "B21";
    validate(M);
    return M;
}

// ---- Boolean matrix monoids ----

namespace {

// k x k Boolean matrices packed row-major into a uint32 (bit i*k+j).  Free
// positions list the bits that vary; the base mask holds the forced ones.
struct MatrixShape {
    std::size_t k = 0;
    std::uint32_t base = 0;
    std::vector<std::pair<std::size_t, std::size_t>> free_pos;

    std::uint32_t matrix_of(std::uint32_t freemask) const {
        std::uint32_t m = base;
        for (std::size_t b = 0; b < free_pos.size(); ++b)
            if (freemask >> b & 1u)
                m |= 1u << (free_pos[b].first * k + free_pos[b].second);
        return m;
    }
    std::uint32_t freemask_of(std::uint32_t m) const {
        std::uint32_t f = 0;
        for (std::size_t b = 0; b < free_pos.size(); ++b)
            if (m >> (free_pos[b].first * k + free_pos[b].second) & 1u) f |= 1u << b;
        return f;
    }
    std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const {
        const std::uint32_t rowmask = (1u << k) - 1;
        std::uint32_t c = 0;
        for (std::size_t i = 0; i < k; ++i) {
            std::uint32_t row_a = a >> (i * k) & rowmask;
            std::uint32_t row_c = 0;
            while (row_a) {
                std::size_t j = static_cast<std::size_t>(__builtin_ctz(row_a));
                row_a &= row_a - 1;
                row_c |= b >> (j * k) & rowmask;
            }
            c |= row_c << (i * k);
        }
        return c;
    }
};

FiniteMonoid matrix_monoid(const MatrixShape& shape, const std::string& name,
                           const std::string& prefix, std::uint32_t identity_matrix,
                           std::uint32_t zero_matrix,
                           std::optional<std::size_t> jm_level) {
    const std::size_t n = std::size_t{1} << shape.free_pos.size();
    if (n > kMaxOrder) {
        std::ostringstream os;
        os << name << ": " << n << " elements exceed the cap " << kMaxOrder;
        throw CapError(os.str());
    }
    FiniteMonoid M;
    M.name = name;
    M.order = n;
    M.table.assign(n * n, 0);

    const std::size_t k = shape.k;
    const std::uint32_t rowmask = (1u << k) - 1;
    std::vector<std::uint32_t> mats(n);
    for (std::size_t i = 0; i < n; ++i)
        mats[i] = shape.matrix_of(static_cast<std::uint32_t>(i));

    // rowor[ib * 2^k + s]: OR of the rows of matrix ib selected by the bit
    // set s.  Row i of a product a*b is then rowor_b at row i of a.
    const std::size_t nsub = std::size_t{1} << k;
    std::vector<std::uint32_t> rowor(n * nsub, 0);
    for (std::size_t ib = 0; ib < n; ++ib) {
        std::uint32_t* rb = rowor.data() + ib * nsub;
        for (std::size_t s = 1; s < nsub; ++s) {
            std::size_t j = static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(s)));
            rb[s] = rb[s & (s - 1)] | (mats[ib] >> (j * k) & rowmask);
        }
    }

    // Matrix-to-element lookup: a flat table when the packed matrix fits a
    // small address space, the per-bit extraction otherwise.
    constexpr Elem kNoElem = 0xFFFF;
    std::vector<Elem> lut;
    if (k * k <= 16) {
        lut.assign(std::size_t{1} << (k * k), kNoElem);
        for (std::size_t i = 0; i < n; ++i) lut[mats[i]] = static_cast<Elem>(i);
    }

    for (std::size_t ia = 0; ia < n; ++ia) {
        const std::uint32_t ma = mats[ia];
        Elem* out_row = M.table.data() + ia * n;
        for (std::size_t ib = 0; ib < n; ++ib) {
            const std::uint32_t* rb = rowor.data() + ib * nsub;
            std::uint32_t mc = 0;
            for (std::size_t i = 0; i < k; ++i)
                mc |= rb[ma >> (i * k) & rowmask] << (i * k);
            Elem e;
            if (!lut.empty()) {
                e = lut[mc];
            } else {
                std::uint32_t fc = shape.freemask_of(mc);
                e = shape.matrix_of(fc) == mc ? static_cast<Elem>(fc) : kNoElem;
            }
            if (e == kNoElem)
                throw ValidationError(name + ": product leaves the matrix shape");
            out_row[ib] = e;
        }
    }
    M.identity = static_cast<Elem>(shape.freemask_of(identity_matrix));
    M.zero = static_cast<Elem>(shape.freemask_of(zero_matrix));
    M.names.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        std::ostringstream os;
        os << prefix << i;
        M.names[i] = os.str();
    }
    M.jm_theory_level = jm_level;
    validate(M);
    return M;
}

} // namespace

FiniteMonoid reflexive_relations(std::size_t k) {
    if (k < 2 || k > 4)
        throw ValidationError("reflexive_relations: k must be in [2, 4]");
    MatrixShape shape;
    shape.k = k;
    for (std::size_t i = 0; i < k; ++i) shape.base |= 1u << (i * k + i);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i != j) shape.free_pos.emplace_back(i, j);
    std::uint32_t full = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) full |= 1u << (i * k + j);
    std::ostringstream nm;
    nm << "Refl" << k;
    return matrix_monoid(shape, nm.str(), "r", shape.base, full, k - 1);
}

FiniteMonoid triangular_boolean(std::size_t k, bool unit_diagonal) {
    if (unit_diagonal) {
        if (k < 2 || k > 5)
            throw ValidationError("triangular_boolean: unit-diagonal k must be in [2, 5]");
    } else {
        if (k < 2 || k > 4)
            throw ValidationError("triangular_boolean: free-diagonal k must be in [2, 4]");
    }
    MatrixShape shape;
    shape.k = k;
    std::uint32_t diag = 0;
    for (std::size_t i = 0; i < k; ++i) diag |= 1u << (i * k + i);
    std::uint32_t full_upper = diag;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) full_upper |= 1u << (i * k + j);
    if (unit_diagonal) {
        // Unitriangular matrices carry the subword-theory tag: every element
        // is I + S with S strictly upper (hence nilpotent of index < k), so
        // r^(k-1) = r^k for all r, and the equational theory is the level-
        // (k-1) subword equivalence.
        shape.base = diag;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) shape.free_pos.emplace_back(i, j);
        std::ostringstream nm;
        nm << "UT1_" << k;
        return matrix_monoid(shape, nm.str(), "u", diag, full_upper, k - 1);
    }
    // No theory tag for the free diagonal: the nilpotent shift N (ones on
    // the superdiagonal only) has N^(k-1) != N^k = 0, refuting the level-
    // (k-1) pair x^(k-1) = x^k, so this monoid's theory is strictly finer.
    shape.base = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) shape.free_pos.emplace_back(i, j);
    std::ostringstream nm;
    nm << "UT_" << k;
    return matrix_monoid(shape, nm.str(), "t", diag, 0, std::nullopt);
}

FiniteMonoid adjoin_identity(const FiniteMonoid& M) {
    const std::size_t n = M.order + 1;
    if (n > kMaxOrder) {
        std::ostringstream os;
        os << "adjoin_identity: order " << n << " exceeds the cap " << kMaxOrder;
        throw CapError(os.str());
    }
    FiniteMonoid out;
    out.name = M.name + "^1";
    out.order = n;
    out.identity = 0;
    if (M.zero) out.zero = static_cast<Elem>(*M.zero + 1);
    out.table.assign(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        out.table[0 * n + x] = static_cast<Elem>(x);
        out.table[x * n + 0] = static_cast<Elem>(x);
    }
    for (std::size_t a = 0; a < M.order; ++a)
        for (std::size_t b = 0; b < M.order; ++b)
            out.table[(a + 1) * n + (b + 1)] = static_cast<Elem>(M.table[a * M.order + b] + 1);
    std::string one = "1";
    {
        std::set<std::string> taken(M.names.begin(), M.names.end());
        while (taken.count(one)) one += "'";
    }
    out.names.push_back(one);
    for (const auto& s : M.names) out.names.push_back(s);
    for (const auto& [l, g] : M.generators) out.generators[l] = static_cast<Elem>(g + 1);
    if (!M.grades.empty()) {
        out.grades.push_back(0);
        for (auto g : M.grades) out.grades.push_back(g);
    }
    validate(out);
    return out;
}

FiniteMonoid direct_product(const FiniteMonoid& A, const FiniteMonoid& B) {
    const std::size_t n = A.order * B.order;
    if (n > kMaxOrder) {
        std::ostringstream os;
        os << "direct_product: order " << A.order << " * " << B.order << " = " << n
           << " exceeds the materialized-table cap " << kMaxOrder;
        throw CapError(os.str());
    }
    FiniteMonoid M;
    M.name = A.name + " x " + B.name;
    M.order = n;
    const std::size_t nb = B.order;
    M.table.assign(n * n, 0);
    for (std::size_t a1 = 0; a1 < A.order; ++a1)
        for (std::size_t b1 = 0; b1 < nb; ++b1) {
            const std::size_t p = a1 * nb + b1;
            for (std::size_t a2 = 0; a2 < A.order; ++a2) {
                const Elem pa = A.table[a1 * A.order + a2];
                for (std::size_t b2 = 0; b2 < nb; ++b2) {
                    const std::size_t q = a2 * nb + b2;
                    M.table[p * n + q] =
                        static_cast<Elem>(pa * nb + B.table[b1 * nb + b2]);
                }
            }
        }
    if (A.identity && B.identity)
        M.identity = static_cast<Elem>(*A.identity * nb + *B.identity);
    if (A.zero && B.zero) M.zero = static_cast<Elem>(*A.zero * nb + *B.zero);
    M.names.assign(n, {});
    for (std::size_t a = 0; a < A.order; ++a)
        for (std::size_t b = 0; b < nb; ++b)
            M.names[a * nb + b] = "(" + A.names[a] + "," + B.names[b] + ")";
    M.factors.push_back(std::make_shared<FiniteMonoid>(A));
    M.factors.push_back(std::make_shared<FiniteMonoid>(B));
    validate(M);
    return M;
}

// ---- power structure ----

PowerCycle power_cycle(const FiniteMonoid& M, Elem s) {
    if (s >= M.order) throw ValidationError(M.name + ": power_cycle element out of range");
    std::map<Elem, std::size_t> seen; // element -> first exponent
    Elem cur = s;
    std::size_t exp = 1;
    for (;;) {
        auto it = seen.find(cur);
        if (it != seen.end()) return {it->second, exp - it->second};
        seen[cur] = exp;
        cur = M.mul(cur, s);
        ++exp;
    }
}

bool is_aperiodic(const FiniteMonoid& M) {
    for (Elem s = 0; s < M.order; ++s)
        if (power_cycle(M, s).period != 1) return false;
    return true;
}

} // namespace nfb
