#pragma once

#include <string_view>
#include <vector>

#include "ggprel/io.hpp"
#include "ggprel/parameters.hpp"
#include "ggprel/relevance.hpp"

namespace ggprel::testing {

inline UnitaryParameter P(std::string_view text)
{
    return parse_parameter(text);
}

inline EtaSymbol E(std::string_view text)
{
    return parse_symbol(text);
}

/*
 * Definition-level oracle: try all 3^r role vectors over the instances of pi
 * one by one (no grouping into classes) and rebuild Ψ_σ with add/subtract.
 */
inline bool naive_relevant(const UnitaryParameter &pi, const UnitaryParameter &sigma)
{
    const auto inst = instances_of(pi);
    std::vector<int> roles(inst.size(), 0);
    while (true) {
        bool k_ok = true;
        std::vector<Block> image;
        for (std::size_t i = 0; i < inst.size(); ++i) {
            const auto &x = inst[i];
            if (roles[i] == 0)
                image.push_back({x.eta, x.d + 1, 1});
            else if (roles[i] == 1 && x.d > 1)
                image.push_back({x.eta, x.d - 1, 1});
            else if (roles[i] == 2) {
                if (!x.eta.is_complementary()) {
                    k_ok = false;
                    break;
                }
                image.push_back({dual(x.eta), x.d, 1});
            }
        }
        if (k_ok) {
            auto rest = subtract(sigma, UnitaryParameter(image));
            if (rest && is_generic(*rest))
                return true;
        }
        std::size_t pos = 0;
        while (pos < roles.size() && roles[pos] == 2)
            roles[pos++] = 0;
        if (pos == roles.size())
            return false;
        ++roles[pos];
    }
}

} // namespace ggprel::testing
