#pragma once

#include <cstdint>
#include <random>

namespace courtmix::detail {

// Fisher-Yates with explicit draws so certificate randomness does not depend
// on the standard library's std::shuffle implementation.
template <typename Container>
void portable_shuffle(Container& c, std::mt19937_64& rng) {
    for (std::size_t i = c.size() - 1; i > 0; --i) {
        const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
        std::swap(c[i], c[j]);
    }
}

}  // namespace courtmix::detail
