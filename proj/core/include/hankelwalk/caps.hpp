#pragma once

#include <cstddef>

namespace hankelwalk {

/// Size limits for the brute-force and dynamic-programming kernels.
struct Caps {
    std::size_t dyck_n = 12;        // Catalan(12) = 208012 paths
    std::size_t tuple_n = 6;
    std::size_t tuple_k = 4;
    std::size_t walk_n = 8;
    std::size_t lanczos_depth = 32;

    /// Same limit for every kernel (the CLI's --cap).
    static Caps uniform(std::size_t cap) noexcept { return {cap, cap, cap, cap, cap}; }
};

}  // namespace hankelwalk
