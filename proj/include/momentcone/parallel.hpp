#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace momentcone {

/// Serial is the reference path; Parallel runs the same kernel under OpenMP.
enum class Exec { Serial, Parallel };

/// Applies MOMENTCONE_THREADS if set. Returns the thread count in effect.
int configure_threads();
int thread_count();

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t v);
std::uint64_t hash_string(const std::string& s);

}  // namespace momentcone
