#include "monocurve/order.hpp"

#include <algorithm>

namespace monocurve {

MonomialOrder MonomialOrder::lex(int nvars, const std::vector<int>& priority) {
    MonomialOrder o(OrderKind::Lex, nvars);
    if (priority.empty()) {
        for (int i = 0; i < nvars; ++i) o.priority_.push_back(i);
    } else {
        if (static_cast<int>(priority.size()) != nvars)
            throw DimensionMismatchError("priority permutation does not match ambient");
        o.priority_ = priority;
    }
    return o;
}

MonomialOrder MonomialOrder::degrevlex(int nvars) {
    MonomialOrder o(OrderKind::DegRevLex, nvars);
    for (int i = nvars - 1; i >= 0; --i) o.priority_.push_back(i);
    return o;
}

MonomialOrder MonomialOrder::degrevlex_with_least(int nvars, const std::vector<int>& least) {
    MonomialOrder o(OrderKind::DegRevLex, nvars);
    std::vector<char> is_least(static_cast<std::size_t>(nvars), 0);
    for (int v : least) is_least[static_cast<std::size_t>(v)] = 1;
    for (int i = nvars - 1; i >= 0; --i)
        if (!is_least[static_cast<std::size_t>(i)]) o.priority_.push_back(i);
    for (int v : least) o.priority_.push_back(v);
    return o;
}

MonomialOrder MonomialOrder::weighted_degrevlex(std::vector<std::int64_t> weights,
                                                const std::vector<int>& least) {
    int nvars = static_cast<int>(weights.size());
    for (std::int64_t w : weights)
        if (w <= 0) throw ParameterOutOfRangeError("weighted order requires positive weights");
    MonomialOrder o = degrevlex_with_least(nvars, least);
    o.kind_ = OrderKind::WeightedDegRevLex;
    o.weights_ = std::move(weights);
    return o;
}

MonomialOrder MonomialOrder::elim_block(int nvars, const std::vector<int>& block) {
    MonomialOrder o(OrderKind::ElimBlock, nvars);
    o.in_block_.assign(static_cast<std::size_t>(nvars), 0);
    for (int v : block) o.in_block_[static_cast<std::size_t>(v)] = 1;
    for (int i = nvars - 1; i >= 0; --i)
        if (o.in_block_[static_cast<std::size_t>(i)]) o.priority_.push_back(i);
    for (int i = nvars - 1; i >= 0; --i)
        if (!o.in_block_[static_cast<std::size_t>(i)]) o.priority_.push_back(i);
    return o;
}

int MonomialOrder::revlex_scan(const Monomial& a, const Monomial& b) const {
    // Scan from the least significant variable; at the first difference the
    // monomial with the smaller exponent is the larger one.
    for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
        auto v = static_cast<std::size_t>(*it);
        if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
    }
    return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != nvars_ || b.nvars() != nvars_)
        throw DimensionMismatchError("monomial does not match order ambient");
    switch (kind_) {
        case OrderKind::Lex: {
            for (int v : priority_) {
                auto i = static_cast<std::size_t>(v);
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
            }
            return 0;
        }
        case OrderKind::DegRevLex: {
            auto da = a.degree(), db = b.degree();
            if (da != db) return da > db ? 1 : -1;
            return revlex_scan(a, b);
        }
        case OrderKind::WeightedDegRevLex: {
            std::int64_t wa = 0, wb = 0;
            for (std::size_t i = 0; i < a.e.size(); ++i) {
                wa += weights_[i] * a.e[i];
                wb += weights_[i] * b.e[i];
            }
            if (wa != wb) return wa > wb ? 1 : -1;
            return revlex_scan(a, b);
        }
        case OrderKind::ElimBlock: {
            std::int32_t ba = 0, bb = 0;
            for (std::size_t i = 0; i < a.e.size(); ++i)
                if (in_block_[i]) {
                    ba += a.e[i];
                    bb += b.e[i];
                }
            if (ba != bb) return ba > bb ? 1 : -1;
            auto da = a.degree(), db = b.degree();
            if (da != db) return da > db ? 1 : -1;
            return revlex_scan(a, b);
        }
    }
    return 0;
}

} // namespace monocurve
