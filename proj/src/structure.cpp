#include "netmx/structure.hpp"

#include <algorithm>

namespace netmx {

BinaryMatrix build_adjacency(const Graph& g)
{
    BinaryMatrix a(g.n());
    for (const auto& [s, d] : g.edges())
        a.set(s, d, true);
    return a;
}

CountMatrix distance_matrix(const BinaryMatrix& a)
{
    const std::size_t n = a.n();
    CountMatrix p(n, INF);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (a(i, j))
                p(i, j) = 1;
        p(i, i) = 0;
    }

    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            const ExtendedCount ik = p(i, k);
            if (ik.is_inf())
                continue;
            for (std::size_t j = 0; j < n; ++j) {
                const ExtendedCount kj = p(k, j);
                if (kj.is_inf())
                    continue;
                const ExtendedCount via = checked_add(ik, kj);
                if (via < p(i, j))
                    p(i, j) = via;
            }
        }
    return p;
}

CountMatrix external_matrix(const CountMatrix& p, const BinaryMatrix& a)
{
    return ew_sub(p, a);
}

StructureBundle build_structure(const Graph& g)
{
    BinaryMatrix a = build_adjacency(g);
    CountMatrix p = distance_matrix(a);
    CountMatrix e = external_matrix(p, a);
    BinaryMatrix phat = binarize(p);
    BinaryMatrix ehat = binarize(e);
    return StructureBundle{std::move(a), std::move(p), std::move(phat), std::move(e), std::move(ehat)};
}

} // namespace netmx
