#ifndef AUTALG_PERM_HPP
#define AUTALG_PERM_HPP

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"

namespace autalg {

/// 0-based internally; all text I/O is 1-based.
struct Permutation {
    std::vector<std::size_t> img;  // img[i] = σ(i)

    std::size_t degree() const { return img.size(); }
    bool operator==(const Permutation& o) const { return img == o.img; }
    bool operator<(const Permutation& o) const { return img < o.img; }
};

inline Permutation perm_identity(std::size_t n) {
    Permutation p;
    p.img.resize(n);
    for (std::size_t i = 0; i < n; ++i) p.img[i] = i;
    return p;
}

/// (a∘b)(i) = a(b(i))
inline Permutation perm_compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) fail("InvalidPermutation", "composing different degrees");
    Permutation c;
    c.img.resize(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) c.img[i] = a.img[b.img[i]];
    return c;
}

inline Permutation perm_inverse(const Permutation& a) {
    Permutation c;
    c.img.resize(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) c.img[a.img[i]] = i;
    return c;
}

namespace detail {
inline void perm_check(const std::vector<std::size_t>& img) {
    std::vector<bool> seen(img.size(), false);
    for (auto v : img) {
        if (v >= img.size() || seen[v]) fail("InvalidPermutation", "images do not form a permutation");
        seen[v] = true;
    }
}
} // namespace detail

/// Accepts disjoint cycle notation "(1 2 3)(4 5)" or a one-line image list
/// "2 3 1", both 1-based on {1..n}.
inline Permutation parse_permutation(const std::string& s, std::size_t n) {
    Permutation p = perm_identity(n);
    std::size_t at = 0;
    auto skip_ws = [&] {
        while (at < s.size() && (std::isspace((unsigned char)s[at]) || s[at] == ',')) ++at;
    };
    auto read_int = [&]() -> std::size_t {
        if (at >= s.size() || !std::isdigit((unsigned char)s[at]))
            fail("InvalidPermutation", "expected a point in '" + s + "'");
        std::size_t v = 0;
        while (at < s.size() && std::isdigit((unsigned char)s[at])) v = v * 10 + (s[at++] - '0');
        if (v < 1 || v > n)
            fail("InvalidPermutation", "point " + std::to_string(v) + " outside 1.." + std::to_string(n));
        return v - 1;
    };
    skip_ws();
    if (at < s.size() && s[at] == '(') {
        std::vector<bool> used(n, false);
        while (true) {
            skip_ws();
            if (at >= s.size()) break;
            if (s[at] != '(') fail("InvalidPermutation", "unexpected text in '" + s + "'");
            ++at;
            std::vector<std::size_t> cyc;
            skip_ws();
            while (at < s.size() && s[at] != ')') {
                std::size_t v = read_int();
                if (used[v]) fail("InvalidPermutation", "point repeated across cycles in '" + s + "'");
                used[v] = true;
                cyc.push_back(v);
                skip_ws();
            }
            if (at >= s.size()) fail("InvalidPermutation", "unclosed cycle in '" + s + "'");
            ++at;  // ')'
            for (std::size_t t = 0; t < cyc.size(); ++t) p.img[cyc[t]] = cyc[(t + 1) % cyc.size()];
        }
        skip_ws();
        if (at != s.size()) fail("InvalidPermutation", "trailing text in '" + s + "'");
        return p;
    }
    // one-line
    std::vector<std::size_t> img;
    while (at < s.size()) {
        img.push_back(read_int());
        skip_ws();
    }
    if (img.size() != n)
        fail("InvalidPermutation", "one-line form needs exactly " + std::to_string(n) + " images");
    detail::perm_check(img);
    p.img = std::move(img);
    return p;
}

/// Disjoint cycles, 1-based, fixed points omitted; identity prints "()".
inline std::string perm_to_string(const Permutation& p) {
    std::string s;
    std::vector<bool> seen(p.degree(), false);
    for (std::size_t i = 0; i < p.degree(); ++i) {
        if (seen[i] || p.img[i] == i) continue;
        s += "(";
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) s += " ";
            first = false;
            s += std::to_string(j + 1);
            j = p.img[j];
        }
        s += ")";
    }
    return s.empty() ? "()" : s;
}

struct PermGroup {
    std::size_t degree = 0;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;  // sorted; the identity comes first

    std::size_t order() const { return elements.size(); }
};

inline PermGroup group_from_generators(std::size_t degree, const std::vector<Permutation>& gens,
                                       std::size_t cap = 20000) {
    for (const auto& g : gens) {
        if (g.degree() != degree) fail("InvalidPermutation", "generator degree mismatch");
        detail::perm_check(g.img);
    }
    PermGroup G;
    G.degree = degree;
    G.generators = gens;
    std::set<Permutation> seen{perm_identity(degree)};
    std::vector<Permutation> work{perm_identity(degree)};
    while (!work.empty()) {
        Permutation x = std::move(work.back());
        work.pop_back();
        for (const auto& g : gens) {
            Permutation y = perm_compose(x, g);
            if (seen.insert(y).second) {
                if (seen.size() > cap)
                    fail("GroupTooLarge", "group order exceeds " + std::to_string(cap));
                work.push_back(std::move(y));
            }
        }
    }
    G.elements.assign(seen.begin(), seen.end());
    return G;
}

/// All of S_n, sorted; guarded because the list is materialized.
inline std::vector<Permutation> all_permutations(std::size_t n, std::size_t cap = 50000) {
    std::size_t count = 1;
    for (std::size_t t = 2; t <= n; ++t) {
        count *= t;
        if (count > cap) fail("GroupTooLarge", "n! exceeds " + std::to_string(cap));
    }
    std::vector<std::size_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = i;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation{img});
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

/// Column i is e_{σ(i)}, so the matrix sends e_i to e_{σ(i)} and
/// matrices multiply like the permutations compose.
template <class F>
Mat<F> perm_matrix(const F& K, const Permutation& p) {
    Mat<F> m = mat_zero(K, p.degree(), p.degree());
    for (std::size_t i = 0; i < p.degree(); ++i) m.at(p.img[i], i) = K.one();
    return m;
}

/// "n=<degree>; gens=<perm>,<perm>,..." with cycle or one-line notation per
/// generator; commas split generators only outside parentheses.
inline PermGroup parse_group(const std::string& s, std::size_t cap = 20000) {
    std::size_t degree = 0;
    bool have_n = false;
    std::vector<std::string> gen_texts;
    std::size_t at = 0;
    auto trim = [](std::string t) {
        std::size_t a = 0, b = t.size();
        while (a < b && std::isspace((unsigned char)t[a])) ++a;
        while (b > a && std::isspace((unsigned char)t[b - 1])) --b;
        return t.substr(a, b - a);
    };
    while (at <= s.size()) {
        std::size_t semi = s.find(';', at);
        std::string part = trim(s.substr(at, semi == std::string::npos ? semi : semi - at));
        at = semi == std::string::npos ? s.size() + 1 : semi + 1;
        if (part.empty()) continue;
        std::size_t eq = part.find('=');
        if (eq == std::string::npos) fail("InvalidPermutation", "expected key=value in '" + part + "'");
        std::string key = trim(part.substr(0, eq)), val = trim(part.substr(eq + 1));
        if (key == "n") {
            try {
                degree = std::stoul(val);
            } catch (...) {
                fail("InvalidPermutation", "bad degree '" + val + "'");
            }
            have_n = true;
        } else if (key == "gens") {
            int depth = 0;
            std::string cur;
            for (char c : val) {
                if (c == '(') ++depth;
                if (c == ')') --depth;
                if (c == ',' && depth == 0) {
                    gen_texts.push_back(trim(cur));
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            if (!trim(cur).empty()) gen_texts.push_back(trim(cur));
        } else {
            fail("InvalidPermutation", "unknown key '" + key + "' in group description");
        }
    }
    if (!have_n || degree == 0) fail("InvalidPermutation", "group description needs n=<degree>");
    std::vector<Permutation> gens;
    for (const auto& t : gen_texts)
        if (!t.empty()) gens.push_back(parse_permutation(t, degree));
    return group_from_generators(degree, gens, cap);
}

/// The same abstract group acting on itself by left translation.  Points are
/// indexed by the sorted element list of the input group.
inline PermGroup regular_representation(const PermGroup& G) {
    std::size_t m = G.order();
    auto pos = [&](const Permutation& x) -> std::size_t {
        auto it = std::lower_bound(G.elements.begin(), G.elements.end(), x);
        if (it == G.elements.end() || !(*it == x))
            fail("InvalidPermutation", "element missing from the group listing");
        return static_cast<std::size_t>(it - G.elements.begin());
    };
    std::vector<Permutation> gens;
    for (const auto& g : G.generators) {
        Permutation t;
        t.img.resize(m);
        for (std::size_t h = 0; h < m; ++h) t.img[h] = pos(perm_compose(g, G.elements[h]));
        gens.push_back(std::move(t));
    }
    return group_from_generators(m, gens, m > 0 ? m : 1);
}

} // namespace autalg

#endif
