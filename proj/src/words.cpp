#include "nfb/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nfb {

long Variable::index_number() const {
    if (name.size() == 1) return -1;
    return std::stol(name.substr(1));
}

std::strong_ordering Variable::operator<=>(const Variable& o) const {
    if (auto c = letter() <=> o.letter(); c != 0) return c;
    return index_number() <=> o.index_number();
}

Variable make_variable(const std::string& text) {
    if (text.empty() || !std::isalpha(static_cast<unsigned char>(text[0])))
        throw ParseError("bad variable '" + text + "': expected letter[0-9]*");
    for (std::size_t i = 1; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("bad variable '" + text + "': expected letter[0-9]*");
    return Variable{text};
}

void Word::append(const Word& w) {
    letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
}

std::strong_ordering Word::operator<=>(const Word& o) const {
    if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (auto c = letters_[i] <=> o.letters_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.append(b);
    return r;
}

namespace {

// Appends "unit^k"; the unit is a single variable.
void append_repeated(std::vector<Variable>& out, const Variable& v, long k) {
    for (long i = 0; i < k; ++i) out.push_back(v);
}

// Parses the ^k suffix starting at i (just past the '^'); returns k and
// advances i past the digits.
long parse_exponent(const std::string& tok, std::size_t& i) {
    std::size_t start = i;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
    if (i == start) throw ParseError("missing exponent after '^' in '" + tok + "'");
    long k = std::stol(tok.substr(start, i - start));
    if (k < 1) throw ParseError("exponent must be >= 1 in '" + tok + "'");
    return k;
}

void parse_token(const std::string& tok, std::vector<Variable>& out) {
    // Full-token variable form: letter digits [^k].
    std::size_t i = 1;
    if (std::isalpha(static_cast<unsigned char>(tok[0]))) {
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
        if (i > 1) { // indexed variable, may only carry an exponent
            Variable v{tok.substr(0, i)};
            long k = 1;
            if (i < tok.size()) {
                if (tok[i] != '^')
                    throw ParseError("indexed variables are not allowed in letter runs: '" +
                                     tok + "'");
                ++i;
                k = parse_exponent(tok, i);
                if (i != tok.size())
                    throw ParseError("trailing characters after exponent in '" + tok + "'");
            }
            append_repeated(out, v, k);
            return;
        }
    }
    // Letter-run form: (letter [^k])+
    i = 0;
    while (i < tok.size()) {
        if (!std::isalpha(static_cast<unsigned char>(tok[i])))
            throw ParseError("bad token '" + tok + "'");
        Variable v{std::string(1, tok[i])};
        ++i;
        long k = 1;
        if (i < tok.size() && tok[i] == '^') {
            ++i;
            k = parse_exponent(tok, i);
        }
        append_repeated(out, v, k);
    }
}

} // namespace

Word parse_word(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> toks;
    for (std::string t; in >> t;) toks.push_back(t);
    if (toks.empty()) throw ParseError("empty input is not a word (use '1')");
    if (toks.size() == 1 && toks[0] == "1") return Word{};
    std::vector<Variable> letters;
    for (const auto& t : toks) {
        if (t == "1") throw ParseError("'1' (empty word) must stand alone");
        parse_token(t, letters);
    }
    return Word{std::move(letters)};
}

std::string render(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += w.at(i).name;
    }
    return s;
}

Identity parse_identity(const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos) throw ParseError("identity must contain '='");
    if (text.find('=', eq + 1) != std::string::npos)
        throw ParseError("identity must contain exactly one '='");
    return Identity{parse_word(text.substr(0, eq)), parse_word(text.substr(eq + 1))};
}

std::string render(const Identity& id) {
    return render(id.lhs) + " = " + render(id.rhs);
}

WordProfile profile(const Word& u) {
    WordProfile p;
    for (const auto& v : u) ++p.occ[v];
    for (const auto& [v, n] : p.occ) {
        p.content.insert(v);
        (n == 1 ? p.linear : p.non_linear).insert(v);
    }
    return p;
}

std::size_t occ(const Word& u, const Variable& x) {
    std::size_t n = 0;
    for (const auto& v : u)
        if (v == x) ++n;
    return n;
}

std::set<Variable> content(const Word& u) {
    std::set<Variable> s;
    for (const auto& v : u) s.insert(v);
    return s;
}

std::string render(const OccRef& r) {
    return "_" + std::to_string(r.index) + " " + r.var.name;
}

std::vector<OccRef> ocs(const Word& u) {
    std::map<Variable, std::size_t> seen;
    std::vector<OccRef> refs;
    refs.reserve(u.size());
    for (const auto& v : u) refs.push_back(OccRef{v, ++seen[v]});
    return refs;
}

std::size_t position_of(const Word& u, const OccRef& r) {
    std::size_t seen = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u.at(i) == r.var && ++seen == r.index) return i;
    }
    throw ValidationError("occurrence " + render(r) + " not found in '" + render(u) + "'");
}

OccRef occ_at(const Word& u, std::size_t p) {
    if (p >= u.size()) throw ValidationError("position out of range");
    std::size_t seen = 0;
    for (std::size_t i = 0; i <= p; ++i)
        if (u.at(i) == u.at(p)) ++seen;
    return OccRef{u.at(p), seen};
}

bool OccMap::defined_on(const OccRef& c) const {
    for (const auto& [a, b] : pairs)
        if (a == c) return true;
    return false;
}

OccRef OccMap::apply(const OccRef& c) const {
    for (const auto& [a, b] : pairs)
        if (a == c) return b;
    throw ValidationError("occurrence map undefined on " + render(c));
}

std::vector<OccRef> OccMap::domain() const {
    std::vector<OccRef> d;
    d.reserve(pairs.size());
    for (const auto& [a, b] : pairs) d.push_back(a);
    return d;
}

OccMap l_map(const Word& u, const Word& v) {
    auto pu = profile(u), pv = profile(v);
    OccMap f{OccMap::Kind::L, {}};
    bool shared = false;
    for (const auto& [x, nu] : pu.occ) {
        auto it = pv.occ.find(x);
        if (it == pv.occ.end()) continue;
        shared = true;
        std::size_t n = std::min(nu, it->second);
        for (std::size_t i = 1; i <= n; ++i)
            f.pairs.emplace_back(OccRef{x, i}, OccRef{x, i});
    }
    if (!shared)
        throw ValidationError("l_map: '" + render(u) + "' and '" + render(v) +
                              "' share no variable");
    return f;
}

OccMap e_map(const Word& u, const Word& v) {
    auto pu = profile(u), pv = profile(v);
    OccMap f{OccMap::Kind::E, {}};
    for (const auto& x : pu.non_linear) {
        if (!pv.non_linear.count(x)) continue;
        f.pairs.emplace_back(OccRef{x, 1}, OccRef{x, 1});
        f.pairs.emplace_back(OccRef{x, pu.occ[x]}, OccRef{x, pv.occ[x]});
    }
    if (f.pairs.empty())
        throw ValidationError("e_map: no variable is non-linear in both '" + render(u) +
                              "' and '" + render(v) + "'");
    return f;
}

bool occ_set_stable(const OccMap& f, const std::vector<OccRef>& X, const Word& u,
                    const Word& v) {
    std::vector<std::pair<std::size_t, std::size_t>> pos; // (pos in u, pos in v)
    pos.reserve(X.size());
    for (const auto& c : X) {
        std::size_t pu = position_of(u, c); // validates X subset of ocs(u)
        if (!f.defined_on(c)) return false;
        pos.emplace_back(pu, position_of(v, f.apply(c)));
    }
    std::sort(pos.begin(), pos.end());
    for (std::size_t i = 1; i < pos.size(); ++i)
        if (pos[i].second <= pos[i - 1].second) return false;
    return true;
}

bool var_stable(const Word& u, const Word& v, const Variable& x) {
    return occ(u, x) == occ(v, x);
}

bool varset_stable(const Word& u, const Word& v, const std::set<Variable>& X) {
    return project(u, X) == project(v, X);
}

std::vector<std::pair<OccRef, OccRef>> adjacent_pairs(const Word& u,
                                                      const std::vector<OccRef>& X) {
    std::vector<std::pair<std::size_t, OccRef>> pos;
    pos.reserve(X.size());
    for (const auto& c : X) pos.emplace_back(position_of(u, c), c);
    std::sort(pos.begin(), pos.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<OccRef, OccRef>> out;
    for (std::size_t i = 1; i < pos.size(); ++i)
        out.emplace_back(pos[i - 1].second, pos[i].second);
    return out;
}

Word project(const Word& u, const std::set<Variable>& X) {
    std::vector<Variable> kept;
    for (const auto& v : u)
        if (X.count(v)) kept.push_back(v);
    return Word{std::move(kept)};
}

Word erase(const Word& u, const std::set<Variable>& X) {
    std::set<Variable> keep = content(u);
    for (const auto& x : X) keep.erase(x);
    return project(u, keep);
}

Word apply_substitution(const Substitution& th, const Word& u) {
    Word out;
    for (const auto& v : u) {
        auto it = th.images.find(v);
        if (it == th.images.end())
            throw ValidationError("substitution undefined on variable '" + v.name + "'");
        if (th.mode == Substitution::Mode::Semigroup && it->second.empty())
            throw ValidationError("empty image for '" + v.name + "' in semigroup mode");
        out.append(it->second);
    }
    return out;
}

PositionInterval occ_image(const Substitution& th, const Word& u, const OccRef& c) {
    std::size_t target = position_of(u, c);
    std::size_t start = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        auto it = th.images.find(u.at(i));
        if (it == th.images.end())
            throw ValidationError("substitution undefined on variable '" + u.at(i).name +
                                  "'");
        if (th.mode == Substitution::Mode::Semigroup && it->second.empty())
            throw ValidationError("empty image for '" + u.at(i).name +
                                  "' in semigroup mode");
        std::size_t len = it->second.size();
        if (i == target) return PositionInterval{start, start + len};
        start += len;
    }
    throw ValidationError("unreachable: occurrence position out of range");
}

std::vector<OccRef> occurrences_in(const Word& U, const PositionInterval& iv) {
    if (iv.end > U.size()) throw ValidationError("interval out of range");
    std::vector<OccRef> out;
    out.reserve(iv.size());
    for (std::size_t p = iv.begin; p < iv.end; ++p) out.push_back(occ_at(U, p));
    return out;
}

OccRef occ_preimage(const Substitution& th, const Word& u, const OccRef& C) {
    Word U = apply_substitution(th, u);
    std::size_t p = position_of(U, C);
    std::size_t start = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        std::size_t len = th.images.at(u.at(i)).size();
        if (p >= start && p < start + len) return occ_at(u, i);
        start += len;
    }
    throw ValidationError("occurrence " + render(C) + " not covered by any image");
}

std::set<Variable> var_preimage(const Substitution& th, const std::set<Variable>& Y) {
    std::set<Variable> out;
    for (const auto& [x, img] : th.images)
        for (const auto& a : img)
            if (Y.count(a)) {
                out.insert(x);
                break;
            }
    return out;
}

SubwordProfile scattered_subwords(const Word& u, std::size_t m, std::size_t cap) {
    if (m < 1) throw ValidationError("scattered_subwords: m must be >= 1");
    SubwordProfile p;
    p.max_len = m;

    auto cont = content(u);
    std::vector<Variable> alpha(cont.begin(), cont.end());
    std::size_t n = u.size(), a = alpha.size();
    // next[i][j]: least position >= i holding alpha[j], or n.
    std::vector<std::size_t> next((n + 1) * std::max<std::size_t>(a, 1), n);
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = 0; j < a; ++j) next[i * a + j] = next[(i + 1) * a + j];
        auto it = std::lower_bound(alpha.begin(), alpha.end(), u.at(i));
        next[i * a + static_cast<std::size_t>(it - alpha.begin())] = i;
    }

    // DFS over greedy (leftmost) embeddings: one path per distinct subword.
    std::vector<Variable> cur;
    auto dfs = [&](auto&& self, std::size_t state) -> void {
        if (cur.size() == m) return;
        for (std::size_t j = 0; j < a; ++j) {
            std::size_t pos = next[state * a + j];
            if (pos == n) continue;
            cur.push_back(alpha[j]);
            if (p.subwords.size() >= cap)
                throw CapError("scattered_subwords: more than " + std::to_string(cap) +
                               " subwords");
            p.subwords.insert(Word{cur});
            self(self, pos + 1);
            cur.pop_back();
        }
    };
    if (n > 0) dfs(dfs, 0);
    return p;
}

bool jm_equivalent(const Word& u, const Word& v, std::size_t m, std::size_t cap) {
    return scattered_subwords(u, m, cap) == scattered_subwords(v, m, cap);
}

} // namespace nfb
