#include "finitetc/monotone_map.hpp"

namespace finitetc {

CombinatorialPath concatenate(const CombinatorialPath& g1, const CombinatorialPath& g2) {
    if (g1.target() != g2.target() && !(g1.target()->size() == g2.target()->size()))
        throw DomainMismatch("concatenate: paths live in different spaces");
    const int m1 = g1.length();
    const int m2 = g2.length();
    if (g1(m1) != g2(0))
        throw EndpointMismatch("concatenate: gamma1 ends at " + g1.target()->label(g1(m1)) +
                               " but gamma2 starts at " + g2.target()->label(g2(0)));
    std::vector<int> vals;
    if (m1 % 2 == 0) {
        vals.resize(m1 + m2 + 1);
        for (int i = 0; i <= m1; ++i) vals[i] = g1(i);
        for (int i = m1; i <= m1 + m2; ++i) vals[i] = g2(i - m1);
    } else {
        vals.resize(m1 + m2 + 2);
        for (int i = 0; i <= m1; ++i) vals[i] = g1(i);
        vals[m1 + 1] = g1(m1);
        for (int i = m1 + 1; i <= m1 + m2 + 1; ++i) vals[i] = g2(i - m1 - 1);
    }
    return CombinatorialPath(g1.target(), std::move(vals));
}

}  // namespace finitetc
