#include "nfb/schemes.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nfb {

namespace {

Variable plain(const std::string& name) { return Variable{name}; }

Variable indexed(const std::string& base, std::size_t i) {
    std::ostringstream os;
    os << base << i;
    return Variable{os.str()};
}

void append(std::vector<Variable>& buf, const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i) buf.push_back(w[i]);
}

void repeat(std::vector<Variable>& buf, const Variable& v, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) buf.push_back(v);
}

Word mk(std::vector<Variable> buf) { return Word(std::move(buf)); }

} // namespace

Word block_ascending(const std::string& base, std::size_t n) {
    if (n == 0) throw ValidationError("block width must be positive");
    std::vector<Variable> buf;
    for (std::size_t i = 1; i <= n; ++i) buf.push_back(indexed(base, i));
    return mk(std::move(buf));
}

Word block_descending(const std::string& base, std::size_t n) {
    if (n == 0) throw ValidationError("block width must be positive");
    std::vector<Variable> buf;
    for (std::size_t i = n; i >= 1; --i) buf.push_back(indexed(base, i));
    return mk(std::move(buf));
}

Word block_interleave(const std::string& first, const std::string& second, std::size_t n) {
    if (n == 0) throw ValidationError("block width must be positive");
    std::vector<Variable> buf;
    for (std::size_t i = 1; i <= n; ++i) {
        buf.push_back(indexed(first, i));
        buf.push_back(indexed(second, i));
    }
    return mk(std::move(buf));
}

Word decorate(const Word& u, bool after, std::size_t& counter) {
    if (u.size() == 0) throw ValidationError("decorate: empty word");
    auto cont = content(u);
    auto fresh = [&]() {
        for (;;) {
            Variable t = indexed("t", counter++);
            if (!cont.count(t)) return t;
        }
    };
    std::vector<Variable> buf;
    buf.reserve(2 * u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!after) buf.push_back(fresh());
        buf.push_back(u[i]);
        if (after) buf.push_back(fresh());
    }
    return mk(std::move(buf));
}

Word decorate(const Word& u, bool after) {
    std::size_t counter = 1;
    return decorate(u, after, counter);
}

Word zimin(std::size_t k) {
    if (k == 0) throw ValidationError("zimin: depth must be positive");
    std::vector<Variable> buf{indexed("x", 1)};
    for (std::size_t i = 2; i <= k; ++i) {
        std::vector<Variable> next = buf;
        next.push_back(indexed("x", i));
        next.insert(next.end(), buf.begin(), buf.end());
        buf = std::move(next);
    }
    return mk(std::move(buf));
}

// ---- scheme table ----

namespace {

struct SchemeInfo {
    const char* text;
    bool needs_n, needs_m, needs_k;
    std::size_t min_m; // 0 when m unused
};

const std::map<SchemeName, SchemeInfo>& scheme_table() {
    static const std::map<SchemeName, SchemeInfo> table = {
        {SchemeName::Row1, {"row1", true, false, false, 0}},
        {SchemeName::Row2, {"row2", true, false, false, 0}},
        {SchemeName::Row3, {"row3", true, false, false, 0}},
        {SchemeName::Row4, {"row4", true, false, false, 0}},
        {SchemeName::Row5, {"row5", true, false, false, 0}},
        {SchemeName::Row6, {"row6", true, false, false, 0}},
        {SchemeName::Row7, {"row7", true, false, false, 0}},
        {SchemeName::Row8, {"row8", true, true, false, 3}},
        {SchemeName::Sl1, {"sl1", true, false, false, 0}},
        {SchemeName::Trahtman, {"trahtman", true, false, false, 0}},
        {SchemeName::JacksonAlt, {"jackson_alt", true, false, false, 0}},
        {SchemeName::Psc, {"psc", true, false, false, 0}},
        {SchemeName::El, {"el", true, false, true, 0}},
        {SchemeName::ElE1, {"el_e1", false, false, true, 0}},
        {SchemeName::ElE2, {"el_e2", false, false, true, 0}},
        {SchemeName::Bsnew, {"bsnew", true, true, false, 3}},
        {SchemeName::Bsnew1, {"bsnew1", true, true, false, 1}},
        {SchemeName::BlanchetSadri, {"blanchet_sadri", true, true, false, 2}},
        {SchemeName::Zimin, {"zimin", false, false, true, 0}},
    };
    return table;
}

// Validates presence, absence and ranges; returns (n, m, k) with zeros for
// unused slots.
struct CheckedParams {
    std::size_t n = 0, m = 0, k = 0;
};

CheckedParams check_params(SchemeName name, const SchemeParams& p, bool allow_d) {
    const SchemeInfo& info = scheme_table().at(name);
    CheckedParams out;
    auto bad = [&](const std::string& msg) {
        throw ValidationError(std::string(info.text) + ": " + msg);
    };
    if (info.needs_n) {
        if (!p.n) bad("parameter n is required");
        if (*p.n < 2) bad("n must be at least 2");
        out.n = *p.n;
    } else if (p.n) {
        bad("parameter n is not used");
    }
    if (info.needs_m) {
        if (!p.m) bad("parameter m is required");
        if (*p.m < info.min_m) {
            std::ostringstream os;
            os << "m must be at least " << info.min_m;
            bad(os.str());
        }
        out.m = *p.m;
    } else if (p.m) {
        bad("parameter m is not used");
    }
    if (info.needs_k) {
        std::size_t min_k = name == SchemeName::Zimin ? 1 : 2;
        if (!p.k) bad("parameter k is required");
        if (*p.k < min_k) bad(min_k == 1 ? "k must be at least 1" : "k must be at least 2");
        out.k = *p.k;
    } else if (p.k) {
        bad("parameter k is not used");
    }
    if (p.d) {
        if (!allow_d) bad("parameter d is not used");
        std::size_t limit = name == SchemeName::Row8 ? out.m : out.m + 1;
        if (*p.d == 0 || *p.d >= limit) bad("d must satisfy 0 < d < " + std::to_string(limit));
    }
    return out;
}

VarRole role_of(const Variable& v) {
    char c = v.name[0];
    bool has_index = v.name.size() > 1;
    if (c == 't') return VarRole::LinearT;
    if (!has_index) return VarRole::XLike;
    switch (c) {
        case 'y': return VarRole::YIndexed;
        case 'z': return VarRole::ZIndexed;
        case 'p': return VarRole::PIndexed;
        case 'q': return VarRole::QIndexed;
        case 'r': return VarRole::RIndexed;
        default: return VarRole::XLike;
    }
}

SchemeOutput finish(Word lhs, Word rhs) {
    SchemeOutput out;
    out.identity = Identity{std::move(lhs), std::move(rhs)};
    for (const auto& side : {out.identity.lhs, out.identity.rhs})
        for (const auto& v : content(side)) out.roles.emplace(v, role_of(v));
    return out;
}

} // namespace

SchemeName parse_scheme_name(const std::string& text) {
    for (const auto& [name, info] : scheme_table())
        if (text == info.text) return name;
    std::ostringstream os;
    os << "unknown scheme '" << text << "'; known:";
    for (const auto& [_, info] : scheme_table()) os << ' ' << info.text;
    throw ValidationError(os.str());
}

std::string to_string(SchemeName name) { return scheme_table().at(name).text; }

std::vector<std::string> scheme_names() {
    std::vector<std::string> out;
    for (const auto& [_, info] : scheme_table()) out.push_back(info.text);
    std::sort(out.begin(), out.end());
    return out;
}

SchemeOutput generate(SchemeName name, const SchemeParams& params) {
    const Variable x = plain("x"), y = plain("y"), z = plain("z"), t = plain("t");
    CheckedParams p = check_params(name, params, /*allow_d=*/false);
    const std::size_t n = p.n, m = p.m, k = p.k;

    switch (name) {
        case SchemeName::Row1: {
            Word yn = block_ascending("y", n), ny = block_descending("y", n);
            std::vector<Variable> l, r;
            repeat(l, x, 2), append(l, yn), append(l, ny);
            append(r, yn), append(r, ny), repeat(r, x, 2);
            return finish(mk(l), mk(r));
        }
        case SchemeName::Row2: {
            Word zt = decorate(block_ascending("z", n), /*after=*/true);
            Word zn = block_ascending("z", n);
            std::vector<Variable> l, r;
            append(l, zt), l.push_back(y), repeat(l, x, 2), append(l, zn), l.push_back(y);
            append(r, zt), repeat(r, x, 2), r.push_back(y), append(r, zn), r.push_back(y);
            return finish(mk(l), mk(r));
        }
        case SchemeName::Row3: {
            std::size_t counter = 1;
            Word zpt = decorate(block_interleave("z", "p", n), /*after=*/true, counter);
            Word zq = block_interleave("z", "q", n);
            Word pr = block_interleave("p", "r", n);
            Word tqr = decorate(block_interleave("q", "r", n), /*after=*/false, counter);
            auto side = [&](bool xy) {
                std::vector<Variable> b;
                append(b, zpt), b.push_back(x), append(b, zq);
                if (xy) b.push_back(x), b.push_back(y);
                else b.push_back(y), b.push_back(x);
                append(b, pr), b.push_back(y), append(b, tqr);
                return mk(b);
            };
            return finish(side(true), side(false));
        }
        case SchemeName::Row4: {
            auto side = [&](bool xy) {
                std::vector<Variable> b;
                if (xy) b.push_back(x), b.push_back(y);
                else b.push_back(y), b.push_back(x);
                b.push_back(t), b.push_back(y);
                for (std::size_t i = 1; i <= n; ++i) repeat(b, indexed("z", i), 2);
                b.push_back(x);
                return mk(b);
            };
            return finish(side(true), side(false));
        }
        case SchemeName::Row5:
        case SchemeName::Row6: {
            Word zn = block_ascending("z", n), nz = block_descending("z", n);
            bool second_flipped = name == SchemeName::Row5;
            auto side = [&](bool xy) {
                std::vector<Variable> b;
                b.push_back(xy ? x : y), b.push_back(xy ? y : x);
                append(b, zn);
                bool inner = second_flipped ? !xy : xy;
                b.push_back(inner ? x : y), b.push_back(inner ? y : x);
                b.push_back(t);
                append(b, nz);
                return mk(b);
            };
            return finish(side(true), side(false));
        }
        case SchemeName::Row7: {
            Word xs = block_ascending("x", n), sx = block_descending("x", n);
            Word ys = block_ascending("y", n), sy = block_descending("y", n);
            std::vector<Variable> l, r;
            append(l, xs), append(l, sx), append(l, ys), append(l, sy);
            append(r, ys), append(r, sy), append(r, xs), append(r, sx);
            return finish(mk(l), mk(r));
        }
        case SchemeName::Row8: {
            const Variable t1 = plain("t1"), t2 = plain("t2");
            auto side = [&](bool with_middle_x) {
                std::vector<Variable> b;
                b.push_back(y), b.push_back(t1);
                repeat(b, x, with_middle_x ? m - 1 : m);
                b.push_back(y);
                for (std::size_t i = 1; i <= n; ++i) repeat(b, indexed("p", i), 2);
                b.push_back(z);
                if (with_middle_x) b.push_back(x);
                b.push_back(t2), b.push_back(z);
                return mk(b);
            };
            return finish(side(true), side(false));
        }
        case SchemeName::Sl1: {
            Word xs = block_ascending("x", n), sx = block_descending("x", n);
            Word ys = block_ascending("y", n), sy = block_descending("y", n);
            std::vector<Variable> l, r;
            append(l, xs), append(l, ys), append(l, sx), append(l, sy);
            append(r, ys), append(r, xs), append(r, sy), append(r, sx);
            return finish(mk(l), mk(r));
        }
        case SchemeName::Trahtman: {
            Word xs = block_ascending("x", n), sx = block_descending("x", n);
            std::vector<Variable> l, r;
            append(l, xs), l.push_back(y), append(l, sx), l.push_back(y), append(l, xs);
            r = l;
            r.push_back(y), append(r, sx), r.push_back(y), append(r, xs);
            return finish(mk(l), mk(r));
        }
        case SchemeName::JacksonAlt: {
            Word ys = block_ascending("y", n), sy = block_descending("y", n);
            std::vector<Variable> l, r;
            l.push_back(x), append(l, ys), l.push_back(t), l.push_back(x), append(l, sy);
            append(r, ys), r.push_back(x), r.push_back(t), append(r, sy), r.push_back(x);
            return finish(mk(l), mk(r));
        }
        case SchemeName::Psc: {
            Word ys = block_ascending("y", n), sy = block_descending("y", n);
            std::vector<Variable> l, r;
            l.push_back(x), append(l, ys), l.push_back(x), append(l, sy);
            r.push_back(x), append(r, sy), r.push_back(x), append(r, ys);
            return finish(mk(l), mk(r));
        }
        case SchemeName::El: {
            auto side = [&](bool up) {
                std::vector<Variable> b;
                b.push_back(x);
                for (std::size_t i = 1; i <= n; ++i)
                    repeat(b, indexed("y", up ? i : n + 1 - i), k);
                b.push_back(x);
                return mk(b);
            };
            return finish(side(true), side(false));
        }
        case SchemeName::ElE1: {
            std::vector<Variable> l, r;
            repeat(l, x, k), repeat(l, y, k), repeat(l, x, k);
            repeat(r, x, k);
            for (std::size_t i = 0; i <= k; ++i) repeat(r, y, k), repeat(r, x, k);
            return finish(mk(l), mk(r));
        }
        case SchemeName::ElE2: {
            std::vector<Variable> l, r;
            repeat(l, x, k + 2), repeat(r, x, 2);
            return finish(mk(l), mk(r));
        }
        case SchemeName::Bsnew: {
            Word ys = block_ascending("y", n), sy = block_descending("y", n);
            auto side = [&](std::size_t head) {
                std::vector<Variable> b;
                repeat(b, x, head);
                append(b, ys), b.push_back(x), append(b, sy), b.push_back(x);
                return mk(b);
            };
            return finish(side(m - 2), side(m - 1));
        }
        case SchemeName::Bsnew1: {
            auto side = [&](std::size_t head) {
                std::vector<Variable> b;
                repeat(b, x, head);
                for (std::size_t i = 1; i <= n; ++i) repeat(b, indexed("y", i), 2);
                b.push_back(x);
                return mk(b);
            };
            return finish(side(m), side(m + 1));
        }
        case SchemeName::BlanchetSadri: {
            Word zy = block_interleave("z", "y", n);
            Word ys = block_ascending("y", n), zs = block_ascending("z", n);
            auto side = [&](std::size_t head) {
                std::vector<Variable> b;
                repeat(b, x, head);
                append(b, zy), b.push_back(x), append(b, ys), append(b, zs), b.push_back(x);
                return mk(b);
            };
            return finish(side(m - 2), side(m - 1));
        }
        case SchemeName::Zimin:
            throw ValidationError("zimin names a word family, not an identity; "
                                  "use isoterm_words or the zimin builder");
    }
    throw ValidationError("unhandled scheme");
}

std::vector<Word> isoterm_words(SchemeName name, const SchemeParams& params) {
    CheckedParams p{};
    switch (name) {
        case SchemeName::Row8:
        case SchemeName::Bsnew1: {
            // n is irrelevant to the word families; accept it if present
            // (callers often hold one SchemeParams for both outputs).
            SchemeParams q = params;
            if (!q.n) q.n = 2;
            p = check_params(name, q, /*allow_d=*/true);
            break;
        }
        case SchemeName::Bsnew: {
            SchemeParams q = params;
            if (!q.n) q.n = 2;
            p = check_params(name, q, /*allow_d=*/false);
            break;
        }
        case SchemeName::Zimin:
            p = check_params(name, params, /*allow_d=*/false);
            break;
        default: {
            SchemeParams q = params;
            if (!q.n) q.n = 2;
            // Word sets for the fixed rows ignore n entirely.
            p = check_params(name, q, /*allow_d=*/false);
            break;
        }
    }
    const std::size_t m = p.m, k = p.k;

    auto w = [](const char* text) { return parse_word(text); };
    switch (name) {
        case SchemeName::Row1: return {w("xyyx")};
        case SchemeName::Row2: return {w("yxxty"), w("ytxxy")};
        case SchemeName::Row3: return {w("x t1 x y t2 y")};
        case SchemeName::Row4: return {w("xxyy"), w("x y t1 y t2 x")};
        case SchemeName::Row5:
        case SchemeName::Row6: return {w("x t1 y x t2 y"), w("xytxy"), w("xytyx")};
        case SchemeName::Row7: return {w("x t1 x y t2 y"), w("xyyx")};
        case SchemeName::Row8: {
            std::vector<Word> out;
            auto push_pair = [&](std::size_t d) {
                std::vector<Variable> a{plain("y"), plain("t1"), plain("y")};
                repeat(a, plain("x"), d);
                a.push_back(plain("t2"));
                repeat(a, plain("x"), m - d);
                out.push_back(mk(a));
            };
            auto push_mirror = [&](std::size_t d) {
                std::vector<Variable> a;
                repeat(a, plain("x"), m - d);
                a.push_back(plain("t1"));
                repeat(a, plain("x"), d);
                a.push_back(plain("y")), a.push_back(plain("t2")), a.push_back(plain("y"));
                out.push_back(mk(a));
            };
            if (params.d) {
                push_pair(*params.d);
                push_mirror(*params.d);
                return out;
            }
            out.push_back(w("xxyy"));
            for (std::size_t d = 1; d < m; ++d) push_pair(d);
            for (std::size_t d = 1; d < m; ++d) push_mirror(d);
            return out;
        }
        case SchemeName::Psc: return {w("xytyx"), w("xtyxy")};
        case SchemeName::Bsnew: {
            std::vector<Word> out{w("xyyx")};
            std::vector<Variable> power;
            repeat(power, plain("x"), m - 1);
            out.push_back(mk(power));
            std::vector<Variable> gap;
            repeat(gap, plain("x"), m - 2);
            gap.push_back(plain("t1")), gap.push_back(plain("x"));
            gap.push_back(plain("t2")), gap.push_back(plain("x"));
            out.push_back(mk(gap));
            return out;
        }
        case SchemeName::Bsnew1: {
            std::vector<Word> out;
            auto push = [&](std::size_t d) {
                std::vector<Variable> a;
                repeat(a, plain("x"), m + 1 - d);
                a.push_back(plain("t"));
                repeat(a, plain("x"), d);
                out.push_back(mk(a));
            };
            if (params.d) {
                push(*params.d);
                return out;
            }
            for (std::size_t d = 1; d <= m; ++d) push(d);
            return out;
        }
        case SchemeName::Zimin: return {zimin(k)};
        default:
            throw ValidationError(to_string(name) + " has no designated word set");
    }
}

} // namespace nfb
