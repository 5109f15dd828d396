#include "symcoh/oracles.hpp"

#include <stdexcept>

namespace symcoh::oracles {

std::map<long long, long long> sym_m_of_sym2(int m) {
    if (m < 0) throw std::invalid_argument("sym_m_of_sym2: m >= 0");
    // Sym^2 k^2 has weights 2, 0, -2; a degree-m monomial (a, b, c) with
    // a + b + c = m contributes weight 2a - 2c.
    std::map<long long, long long> character;
    for (int a = 0; a <= m; ++a)
        for (int c = 0; a + c <= m; ++c) character[2LL * a - 2LL * c] += 1;

    std::map<long long, long long> decomposition;
    while (!character.empty()) {
        auto top = std::prev(character.end());
        const long long weight = top->first;
        const long long mult = top->second;
        if (weight < 0 || mult < 0) throw std::logic_error("sym_m_of_sym2: invalid character");
        decomposition[weight] += mult;
        for (long long w = -weight; w <= weight; w += 2) {
            character[w] -= mult;
            if (character[w] == 0) character.erase(w);
        }
    }
    return decomposition;
}

}  // namespace symcoh::oracles
