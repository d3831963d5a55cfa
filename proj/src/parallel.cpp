#include "momentcone/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <stdexcept>

namespace momentcone {

int configure_threads() {
  if (const char* env = std::getenv("MOMENTCONE_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || n < 1) throw std::invalid_argument("MOMENTCONE_THREADS must be a positive integer");
    omp_set_num_threads(static_cast<int>(n));
  }
  return thread_count();
}

int thread_count() { return omp_get_max_threads(); }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t v) { return splitmix64(seed ^ splitmix64(v)); }

std::uint64_t hash_string(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace momentcone
