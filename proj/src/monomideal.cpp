#include "monocurve/monomideal.hpp"

#include <algorithm>
#include <sstream>

namespace monocurve {

void ipoly_trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly ipoly_add(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    ipoly_trim(r);
    return r;
}

IntPoly ipoly_shift_add(const IntPoly& a, const IntPoly& b, std::int32_t k) {
    IntPoly r(std::max(a.size(), b.size() + static_cast<std::size_t>(k)), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i + static_cast<std::size_t>(k)] += b[i];
    ipoly_trim(r);
    return r;
}

IntPoly ipoly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ipoly_trim(r);
    return r;
}

std::int64_t ipoly_eval1(const IntPoly& p) {
    std::int64_t s = 0;
    for (std::int64_t c : p) s += c;
    return s;
}

IntPoly ipoly_divide_by_one_minus_t(const IntPoly& p) {
    if (ipoly_eval1(p) != 0) throw Error("polynomial not divisible by 1 - t");
    if (p.empty()) return {};
    // (1-t) * q = p means q_k = q_{k-1} + ... : p_k = q_k - q_{k-1}
    IntPoly q(p.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        acc += p[k];
        q[k] = acc;
    }
    ipoly_trim(q);
    return q;
}

std::string ipoly_to_string(const IntPoly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        std::int64_t c = p[k];
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::int64_t a = c < 0 ? -c : c;
        if (a != 1 || k == 0) os << a;
        if (k > 0) {
            if (a != 1) os << "*";
            os << "t";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

namespace {

bool canonical_before(const Monomial& a, const Monomial& b, const MonomialOrder& o) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return o.less(a, b);
}

} // namespace

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> gens) : nvars_(nvars) {
    for (const Monomial& g : gens)
        if (g.nvars() != nvars) throw DimensionMismatchError("generator outside ambient ring");
    std::vector<Monomial> kept;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j) continue;
            if (divides(gens[j], gens[i]) && !(gens[i] == gens[j] && j > i)) redundant = true;
        }
        if (!redundant) kept.push_back(gens[i]);
    }
    MonomialOrder o = MonomialOrder::degrevlex(nvars);
    std::sort(kept.begin(), kept.end(),
              [&](const Monomial& a, const Monomial& b) { return canonical_before(a, b, o); });
    gens_ = std::move(kept);
}

bool MonomialIdeal::is_proper() const {
    for (const Monomial& g : gens_)
        if (g.is_one()) return false;
    return true;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const Monomial& g : gens_)
        if (divides(g, m)) return true;
    return false;
}

MonomialIdeal monomial_sum(const MonomialIdeal& L, const std::vector<Monomial>& extra) {
    std::vector<Monomial> gens = L.mingens();
    gens.insert(gens.end(), extra.begin(), extra.end());
    return MonomialIdeal(L.nvars(), std::move(gens));
}

namespace {

bool is_pure_power(const Monomial& m) {
    int support = 0;
    for (auto e : m.e)
        if (e) ++support;
    return support == 1;
}

IntPoly hilbert_numerator(const MonomialIdeal& L,
                          std::map<std::vector<Monomial>, IntPoly>& memo) {
    if (L.is_zero()) return {1};
    if (!L.is_proper()) return {};
    auto found = memo.find(L.mingens());
    if (found != memo.end()) return found->second;

    IntPoly result;
    bool all_pure = std::all_of(L.mingens().begin(), L.mingens().end(), is_pure_power);
    if (all_pure) {
        // complete intersection: N = prod (1 - t^deg)
        result = {1};
        for (const Monomial& g : L.mingens()) {
            IntPoly f(static_cast<std::size_t>(g.degree()) + 1, 0);
            f[0] = 1;
            f[static_cast<std::size_t>(g.degree())] = -1;
            result = ipoly_mul(result, f);
        }
    } else {
        // pivot x_v^e: v the variable meeting the most non-pure generators,
        // e the largest exponent of v among them; x_v^e is never in L
        std::vector<int> freq(static_cast<std::size_t>(L.nvars()), 0);
        for (const Monomial& g : L.mingens()) {
            if (is_pure_power(g)) continue;
            for (std::size_t v = 0; v < g.e.size(); ++v)
                if (g.e[v]) ++freq[v];
        }
        int v = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());
        std::int32_t e = 0;
        for (const Monomial& g : L.mingens())
            if (!is_pure_power(g)) e = std::max(e, g.e[static_cast<std::size_t>(v)]);
        Monomial p = variable(L.nvars(), v, e);
        IntPoly with_p = hilbert_numerator(monomial_sum(L, {p}), memo);
        IntPoly quot = hilbert_numerator(colon(L, p), memo);
        result = ipoly_shift_add(with_p, quot, p.degree());
    }
    memo.emplace(L.mingens(), result);
    return result;
}

} // namespace

HilbertData hilbert(const MonomialIdeal& L) {
    if (!L.is_proper()) throw InputError("hilbert series of the unit ideal quotient");
    std::map<std::vector<Monomial>, IntPoly> memo;
    HilbertData h;
    h.numerator = hilbert_numerator(L, memo);
    h.reduced = h.numerator;
    int cancelled = 0;
    while (ipoly_eval1(h.reduced) == 0) {
        h.reduced = ipoly_divide_by_one_minus_t(h.reduced);
        ++cancelled;
    }
    h.dim = L.nvars() - cancelled;
    h.multiplicity = ipoly_eval1(h.reduced);
    return h;
}

std::int64_t box_count(const Monomial& m, std::int32_t d) {
    std::int64_t formula = 1;
    double cells = 1;
    for (auto mu : m.e) {
        if (mu < 0 || mu > d) throw ParameterOutOfRangeError("box exponent outside 0..d");
        formula *= d - mu;
        cells *= d;
    }
    if (d > 0 && !m.e.empty() && cells <= 4e6) {
        // independent lattice-point walk over the whole box
        std::int64_t count = 0;
        std::vector<std::int32_t> gamma(m.e.size(), 0);
        for (;;) {
            bool inside = true;
            for (std::size_t j = 0; j < gamma.size(); ++j)
                if (gamma[j] < m.e[j]) {
                    inside = false;
                    break;
                }
            if (inside) ++count;
            std::size_t j = 0;
            while (j < gamma.size() && ++gamma[j] == d) gamma[j++] = 0;
            if (j == gamma.size()) break;
        }
        if (count != formula) throw Error("box count cross-check failed");
    }
    return formula;
}

MonomialIdeal colon(const MonomialIdeal& L, const Monomial& m) {
    std::vector<Monomial> out;
    out.reserve(L.mingens().size());
    for (const Monomial& g : L.mingens()) out.push_back(quotient(g, gcd(g, m)));
    return MonomialIdeal(L.nvars(), std::move(out));
}

std::int64_t sparse_rank(std::vector<std::map<std::int32_t, Rational>> rows) {
    std::int64_t rank = 0;
    std::vector<char> used(rows.size(), 0);
    for (;;) {
        // next pivot row: fewest surviving entries
        std::size_t best = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || rows[r].empty()) continue;
            if (best == rows.size() || rows[r].size() < rows[best].size()) best = r;
        }
        if (best == rows.size()) break;
        ++rank;
        used[best] = 1;
        auto [pcol, pval] = *rows[best].begin();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || rows[r].empty()) continue;
            auto it = rows[r].find(pcol);
            if (it == rows[r].end()) continue;
            Rational factor = it->second / pval;
            for (const auto& [c, v] : rows[best]) {
                auto jt = rows[r].find(c);
                if (jt == rows[r].end()) {
                    rows[r].emplace(c, -factor * v);
                } else {
                    jt->second -= factor * v;
                    if (jt->second == 0) rows[r].erase(jt);
                }
            }
        }
    }
    return rank;
}

namespace {

void finalize_totals(BettiTable& t) {
    int top = 0;
    for (const auto& [key, val] : t.graded)
        if (val) top = std::max(top, key.first);
    t.totals.assign(static_cast<std::size_t>(top) + 1, 0);
    for (auto it = t.graded.begin(); it != t.graded.end();) {
        if (it->second == 0) {
            it = t.graded.erase(it);
        } else {
            t.totals[static_cast<std::size_t>(it->first.first)] += it->second;
            ++it;
        }
    }
}

} // namespace

BettiTable betti_lcm(const MonomialIdeal& L, int max_gens) {
    if (!L.is_proper()) throw InputError("Betti table of the zero module");
    const auto& gens = L.mingens();
    int r = static_cast<int>(gens.size());
    if (r > max_gens) throw EffortCapExceeded("too many generators for the lcm-lattice method");
    BettiTable table;
    table.graded[{0, 0}] = 1;
    if (r == 0) {
        finalize_totals(table);
        return table;
    }

    // lcm of every subset, then group masks by that multidegree
    std::vector<Monomial> sub_lcm(static_cast<std::size_t>(1) << r, Monomial(L.nvars()));
    for (std::uint32_t mask = 1; mask < sub_lcm.size(); ++mask) {
        std::uint32_t low = mask & (mask - 1);
        int bit = __builtin_ctz(mask);
        sub_lcm[mask] = low ? lcm(sub_lcm[low], gens[static_cast<std::size_t>(bit)])
                            : gens[static_cast<std::size_t>(bit)];
    }
    std::map<Monomial, std::vector<std::uint32_t>> strands;
    for (std::uint32_t mask = 1; mask < sub_lcm.size(); ++mask)
        strands[sub_lcm[mask]].push_back(mask);

    for (const auto& [b, masks] : strands) {
        // chains of the Taylor strand in multidegree b, split by subset size
        std::map<std::uint32_t, std::int32_t> index_in_size;
        std::vector<std::vector<std::uint32_t>> by_size(static_cast<std::size_t>(r) + 1);
        for (std::uint32_t mask : masks) {
            int i = __builtin_popcount(mask);
            index_in_size[mask] = static_cast<std::int32_t>(by_size[static_cast<std::size_t>(i)].size());
            by_size[static_cast<std::size_t>(i)].push_back(mask);
        }
        // rank of the boundary C_i -> C_{i-1} inside the strand
        std::vector<std::int64_t> rank_d(static_cast<std::size_t>(r) + 2, 0);
        for (int i = 1; i <= r; ++i) {
            const auto& cols = by_size[static_cast<std::size_t>(i)];
            if (cols.empty()) continue;
            std::vector<std::map<std::int32_t, Rational>> rows; // transposed is fine for rank
            for (std::uint32_t mask : cols) {
                std::map<std::int32_t, Rational> row;
                int sign = 1;
                for (int bit = 0; bit < r; ++bit) {
                    if (!(mask & (1u << bit))) continue;
                    std::uint32_t face = mask ^ (1u << bit);
                    if (face && sub_lcm[face] == b) row[index_in_size[face]] = sign;
                    sign = -sign;
                }
                rows.push_back(std::move(row));
            }
            rank_d[static_cast<std::size_t>(i)] = sparse_rank(std::move(rows));
        }
        std::int32_t j = b.degree();
        for (int i = 1; i <= r; ++i) {
            std::int64_t cells = static_cast<std::int64_t>(by_size[static_cast<std::size_t>(i)].size());
            if (!cells) continue;
            std::int64_t beta = cells - rank_d[static_cast<std::size_t>(i)] -
                                rank_d[static_cast<std::size_t>(i) + 1];
            if (beta) table.graded[{i, j}] += beta;
        }
    }
    finalize_totals(table);
    return table;
}

BettiTable betti_koszul(const MonomialIdeal& L, std::int32_t max_degree) {
    if (!L.is_proper()) throw InputError("Betti table of the zero module");
    int n = L.nvars();
    if (max_degree < 0) {
        Monomial big(n);
        for (const Monomial& g : L.mingens()) big = lcm(big, g);
        max_degree = big.degree();
    }

    // standard monomials (not in L) by total degree
    std::vector<std::vector<Monomial>> std_mons(static_cast<std::size_t>(max_degree) + 1);
    std::vector<std::map<Monomial, std::int32_t>> std_index(static_cast<std::size_t>(max_degree) + 1);
    double ambient_count = 1;
    for (int k = 1; k <= n; ++k) ambient_count *= static_cast<double>(max_degree + k) / k;
    if (ambient_count > 2e6) throw EffortCapExceeded("Koszul strand basis too large");
    Monomial cur(n);
    auto visit = [&](auto&& self, int v, std::int32_t left) -> void {
        if (v == n) {
            Monomial m = cur;
            std::int32_t d = m.degree();
            if (!L.contains(m)) {
                std_index[static_cast<std::size_t>(d)][m] =
                    static_cast<std::int32_t>(std_mons[static_cast<std::size_t>(d)].size());
                std_mons[static_cast<std::size_t>(d)].push_back(std::move(m));
            }
            return;
        }
        for (std::int32_t a = 0; a <= left; ++a) {
            cur.e[static_cast<std::size_t>(v)] = a;
            self(self, v + 1, left - a);
        }
        cur.e[static_cast<std::size_t>(v)] = 0;
    };
    visit(visit, 0, max_degree);

    // wedge subsets by size
    std::vector<std::vector<std::uint32_t>> wedges(static_cast<std::size_t>(n) + 1);
    std::vector<std::int32_t> wedge_index(static_cast<std::size_t>(1) << n, 0);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int i = __builtin_popcount(mask);
        wedge_index[mask] = static_cast<std::int32_t>(wedges[static_cast<std::size_t>(i)].size());
        wedges[static_cast<std::size_t>(i)].push_back(mask);
    }

    auto dim_cell = [&](int i, std::int32_t j) -> std::int64_t {
        if (i < 0 || i > n || j < i || j > max_degree) return 0;
        return static_cast<std::int64_t>(wedges[static_cast<std::size_t>(i)].size()) *
               static_cast<std::int64_t>(std_mons[static_cast<std::size_t>(j - i)].size());
    };
    // rank of d: C_{i,j} -> C_{i-1,j}, (S,m) -> sum of signed (S-v, x_v m)
    auto rank_d = [&](int i, std::int32_t j) -> std::int64_t {
        if (i < 1 || dim_cell(i, j) == 0 || dim_cell(i - 1, j) == 0) return 0;
        const auto& src_m = std_mons[static_cast<std::size_t>(j - i)];
        const auto& dst_idx = std_index[static_cast<std::size_t>(j - i + 1)];
        std::int64_t dst_block = static_cast<std::int64_t>(std_mons[static_cast<std::size_t>(j - i + 1)].size());
        std::vector<std::map<std::int32_t, Rational>> rows; // one row per source cell
        rows.reserve(static_cast<std::size_t>(dim_cell(i, j)));
        for (std::uint32_t S : wedges[static_cast<std::size_t>(i)]) {
            for (const Monomial& m : src_m) {
                std::map<std::int32_t, Rational> row;
                int sign = 1;
                for (int v = 0; v < n; ++v) {
                    if (!(S & (1u << v))) continue;
                    Monomial image = m * variable(n, v);
                    auto it = dst_idx.find(image);
                    if (it != dst_idx.end()) {
                        std::int64_t col = wedge_index[S ^ (1u << v)] * dst_block + it->second;
                        row[static_cast<std::int32_t>(col)] = sign;
                    }
                    sign = -sign;
                }
                rows.push_back(std::move(row));
            }
        }
        return sparse_rank(std::move(rows));
    };

    BettiTable table;
    std::map<std::pair<int, std::int32_t>, std::int64_t> rank_cache;
    auto rank_at = [&](int i, std::int32_t j) {
        auto key = std::make_pair(i, j);
        auto it = rank_cache.find(key);
        if (it != rank_cache.end()) return it->second;
        std::int64_t v = rank_d(i, j);
        rank_cache.emplace(key, v);
        return v;
    };
    for (int i = 0; i <= n; ++i)
        for (std::int32_t j = i; j <= max_degree; ++j) {
            std::int64_t beta = dim_cell(i, j) - rank_at(i, j) - rank_at(i + 1, j);
            if (beta) table.graded[{i, j}] = beta;
        }
    finalize_totals(table);
    return table;
}

} // namespace monocurve
