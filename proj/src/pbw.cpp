#include "ich/pbw.hpp"

#include <stdexcept>

namespace ich::pbw {

Config rowmajor_config(int n, unsigned long p) {
    Config c;
    c.n = n;
    c.p = p;
    c.rank_of_rm.resize(static_cast<std::size_t>(n) * n);
    c.pair_of_rank.resize(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int rm = (i - 1) * n + (j - 1);
            c.rank_of_rm[rm] = rm;
            c.pair_of_rank[rm] = {i, j};
        }
    return c;
}

Config triangular_config(int n, unsigned long p) {
    Config c;
    c.n = n;
    c.p = p;
    c.rank_of_rm.resize(static_cast<std::size_t>(n) * n);
    c.pair_of_rank.resize(static_cast<std::size_t>(n) * n);
    int rank = 0;
    auto put = [&](int i, int j) {
        c.rank_of_rm[(i - 1) * n + (j - 1)] = rank;
        c.pair_of_rank[rank] = {i, j};
        ++rank;
    };
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j) put(i, j);  // strictly lower
    for (int i = 1; i <= n; ++i) put(i, i);     // diagonal
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) put(i, j);  // strictly upper
    return c;
}

namespace {

bool pair_bad(const Config& cfg, const Gen& a, const Gen& b) {
    if (a.kind != b.kind) return a.kind > b.kind;
    switch (a.kind) {
        case GenKind::X:
        case GenKind::Y: return a.i > b.i;
        case GenKind::G: return cfg.rank(a) > cfg.rank(b);
    }
    return false;
}

int find_violation(const Config& cfg, const Word& w) {
    if (w.size() < 2) return -1;
    if (cfg.strategy == Strategy::Leftmost) {
        for (std::size_t k = 0; k + 1 < w.size(); ++k)
            if (pair_bad(cfg, w[k], w[k + 1])) return static_cast<int>(k);
    } else {
        for (std::size_t k = w.size() - 1; k-- > 0;)
            if (pair_bad(cfg, w[k], w[k + 1])) return static_cast<int>(k);
    }
    return -1;
}

Word splice(const Word& w, std::size_t k, std::initializer_list<Gen> repl) {
    Word r;
    r.reserve(w.size() - 2 + repl.size());
    r.insert(r.end(), w.begin(), w.begin() + k);
    r.insert(r.end(), repl.begin(), repl.end());
    r.insert(r.end(), w.begin() + k + 2, w.end());
    return r;
}

TriExp key_of(const Config& cfg, const Word& w) {
    TriExp m;
    m.x.assign(cfg.n, 0);
    m.g.assign(static_cast<std::size_t>(cfg.n) * cfg.n, 0);
    m.y.assign(cfg.n, 0);
    for (const Gen& g : w) switch (g.kind) {
            case GenKind::X: ++m.x[g.i - 1]; break;
            case GenKind::G: ++m.g[cfg.rank(g)]; break;
            case GenKind::Y: ++m.y[g.i - 1]; break;
        }
    return m;
}

}  // namespace

void add_into(Elem& acc, const TriExp& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = acc.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

void normal_form_into(const Config& cfg, const Word& w0, const Scalar& c0, Elem& acc) {
    if (c0.is_zero()) return;
    const Scalar minus_one = Scalar::integer(-1, cfg.p);
    std::map<Word, Scalar> frontier;
    frontier.emplace(w0, c0);
    std::uint64_t steps = 0;
    while (!frontier.empty()) {
        if (++steps > (1ull << 27)) throw std::runtime_error("pbw: rewrite budget exceeded");
        auto it = frontier.begin();
        Word w = it->first;
        Scalar c = std::move(it->second);
        frontier.erase(it);
        int k = find_violation(cfg, w);
        if (k < 0) {
            add_into(acc, key_of(cfg, w), c);
            continue;
        }
        const Gen a = w[k], b = w[k + 1];
        auto push = [&](Word&& nw, const Scalar& nc) {
            if (nc.is_zero()) return;
            auto jt = frontier.find(nw);
            if (jt == frontier.end()) {
                frontier.emplace(std::move(nw), nc);
            } else {
                jt->second += nc;
                if (jt->second.is_zero()) frontier.erase(jt);
            }
        };
        {
            Word sw = w;
            std::swap(sw[k], sw[k + 1]);
            push(std::move(sw), c);
        }
        if (a.kind == b.kind) {
            if (a.kind == GenKind::G) {
                // [e_ij, e_kl] = d_jk e_il - d_li e_kj
                if (a.j == b.i) push(splice(w, k, {Gen::g(a.i, b.j)}), c);
                if (b.j == a.i) push(splice(w, k, {Gen::g(b.i, a.j)}), c * minus_one);
            }
        } else if (a.kind == GenKind::G && b.kind == GenKind::X) {
            // e_ij x_k = x_k e_ij - d_ik x_j
            if (a.i == b.i) push(splice(w, k, {Gen::x(a.j)}), c * minus_one);
        } else if (a.kind == GenKind::Y && b.kind == GenKind::G) {
            // y_a e_kl = e_kl y_a - d_la y_k
            if (b.j == a.i) push(splice(w, k, {Gen::y(b.i)}), c * minus_one);
        } else if (a.kind == GenKind::Y && b.kind == GenKind::X) {
            if (!cfg.yx) throw std::logic_error("pbw: y-x swap without a bracket table");
            const UgData& br = (*cfg.yx)[a.i - 1][b.i - 1];
            for (const auto& [gexp, bc] : br) {
                Word nw;
                nw.reserve(w.size() + 6);
                nw.insert(nw.end(), w.begin(), w.begin() + k);
                for (int rm = 0; rm < cfg.n * cfg.n; ++rm)
                    for (std::uint32_t rep = 0; rep < gexp[rm]; ++rep)
                        nw.push_back(Gen::g(rm / cfg.n + 1, rm % cfg.n + 1));
                nw.insert(nw.end(), w.begin() + k + 2, w.end());
                push(std::move(nw), c * bc);
            }
        }
    }
}

Elem normal_form(const Config& cfg, const Word& w, const Scalar& coeff) {
    Elem acc;
    normal_form_into(cfg, w, coeff, acc);
    return acc;
}

Word word_of(const Config& cfg, const TriExp& m) {
    Word w;
    for (int i = 0; i < cfg.n; ++i)
        for (std::uint32_t k = 0; k < m.x[i]; ++k) w.push_back(Gen::x(i + 1));
    for (std::size_t rank = 0; rank < m.g.size(); ++rank) {
        auto [i, j] = cfg.pair_of_rank[rank];
        for (std::uint32_t k = 0; k < m.g[rank]; ++k) w.push_back(Gen::g(i, j));
    }
    for (int i = 0; i < cfg.n; ++i)
        for (std::uint32_t k = 0; k < m.y[i]; ++k) w.push_back(Gen::y(i + 1));
    return w;
}

}  // namespace ich::pbw
