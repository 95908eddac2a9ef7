#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>

#include <Eigen/Dense>

namespace nlg {

// All randomness flows from one user seed through named substreams, so results
// are reproducible no matter how callers are scheduled.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::mt19937_64 rng_stream(std::uint64_t seed, std::string_view name,
                                  std::uint64_t index = 0) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over the stream name
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return std::mt19937_64(splitmix64(seed ^ splitmix64(h ^ splitmix64(index))));
}

inline double uniform01(std::mt19937_64& rng) {
  // 53-bit mantissa draw in (0,1]; never returns 0 so log() below is safe.
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

// Box-Muller without caching; mt19937_64 output is pinned by the standard, so
// this stays bit-identical across platforms (std::normal_distribution is not).
inline double gaussian(std::mt19937_64& rng) {
  double u1 = uniform01(rng);
  double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

inline Eigen::VectorXd random_unit_vector(std::mt19937_64& rng, int dim) {
  Eigen::VectorXd v(dim);
  do {
    for (int i = 0; i < dim; ++i) v[i] = gaussian(rng);
  } while (v.norm() < 1e-8);
  return v / v.norm();
}

}  // namespace nlg
