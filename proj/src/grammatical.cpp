#include <cstddef>
#include <vector>

#include "s2c/grammar.hpp"

namespace s2c {

namespace {

// Interval table: full[i][j] says whether t[i..j) contracts away entirely.
std::vector<std::vector<char>> full_contraction_table(
    const std::vector<TypeFactor>& t) {
    const std::size_t n = t.size();
    std::vector<std::vector<char>> full(n + 1,
                                        std::vector<char>(n + 1, false));
    for (std::size_t i = 0; i <= n; ++i) full[i][i] = true;
    for (std::size_t len = 2; len <= n; len += 2) {
        for (std::size_t i = 0; i + len <= n; ++i) {
            const std::size_t j = i + len;
            for (std::size_t k = i + 1; k < j && !full[i][j]; ++k)
                if (contractible(t[i], t[k]) && full[i + 1][k] &&
                    full[k + 1][j])
                    full[i][j] = true;
        }
    }
    return full;
}

struct Matcher {
    const std::vector<TypeFactor>& t;
    const std::vector<TypeFactor>& s;
    const std::vector<std::vector<char>>& full;
    std::vector<std::vector<signed char>> memo;  // -1 unknown, 0 no, 1 yes

    Matcher(const std::vector<TypeFactor>& t_, const std::vector<TypeFactor>& s_,
            const std::vector<std::vector<char>>& full_)
        : t(t_), s(s_), full(full_),
          memo(t_.size() + 1,
               std::vector<signed char>(s_.size() + 1, -1)) {}

    // Does t[i..) reduce to exactly s[u..)?
    bool matches(std::size_t i, std::size_t u) {
        if (memo[i][u] >= 0) return memo[i][u] != 0;
        bool ok = false;
        if (i == t.size()) {
            ok = u == s.size();
        } else {
            if (u < s.size() && t[i] == s[u] && matches(i + 1, u + 1))
                ok = true;
            for (std::size_t k = i + 1; k < t.size() && !ok; ++k)
                if (contractible(t[i], t[k]) && full[i + 1][k] &&
                    matches(k + 1, u))
                    ok = true;
        }
        memo[i][u] = ok ? 1 : 0;
        return ok;
    }

    void emit_full(std::size_t i, std::size_t j, GrammaticalityResult& out) {
        if (i == j) return;
        for (std::size_t k = i + 1; k < j; ++k) {
            if (contractible(t[i], t[k]) && full[i + 1][k] && full[k + 1][j]) {
                out.contractions.push_back({i, k});
                emit_full(i + 1, k, out);
                emit_full(k + 1, j, out);
                return;
            }
        }
    }

    void emit(GrammaticalityResult& out) {
        std::size_t i = 0;
        std::size_t u = 0;
        while (i < t.size()) {
            if (u < s.size() && t[i] == s[u] && matches(i + 1, u + 1)) {
                out.sentence_positions.push_back(i);
                ++i;
                ++u;
                continue;
            }
            for (std::size_t k = i + 1; k < t.size(); ++k) {
                if (contractible(t[i], t[k]) && full[i + 1][k] &&
                    matches(k + 1, u)) {
                    out.contractions.push_back({i, k});
                    emit_full(i + 1, k, out);
                    i = k + 1;
                    break;
                }
            }
        }
    }
};

}  // namespace

GrammaticalityResult check_grammatical(const Diagram& diagram,
                                       const PregroupGrammarSpec& spec) {
    // Each box contributes the right adjoint of its inputs followed by its
    // outputs; for a transposed word this restores the original word type.
    std::vector<TypeFactor> t;
    for (const Layer& l : diagram.layers()) {
        if (is_cup(l.box) || is_cap(l.box)) continue;
        const PregroupType contrib =
            l.box.dom.right_adjoint().tensor(l.box.cod);
        for (std::size_t i = 0; i < contrib.size(); ++i)
            t.push_back(contrib[i]);
    }
    const std::vector<TypeFactor> s{TypeFactor{spec.sentence_base, 0}};

    GrammaticalityResult result;
    const auto full = full_contraction_table(t);
    Matcher m(t, s, full);
    result.grammatical = m.matches(0, 0);
    if (result.grammatical) m.emit(result);
    return result;
}

}  // namespace s2c
