#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "stabledeg/ring.hpp"

namespace stabledeg {

struct BenchRow {
  std::string op;  // "keygen" or "encrypt"
  std::size_t n = 0;
  std::size_t p = 0;  // walk length
  std::string ring;   // ring tag, e.g. "Z 256"
  double micros = 0.0;
};

// Median wall time of `runs` calls after one discarded warmup call.
double median_micros(const std::function<void()>& fn, int runs = 5);

// Public-key generation over the n x p grid. Caps: n <= 100, p <= 60.
std::vector<BenchRow> bench_keygen(std::span<const std::size_t> ns, std::span<const std::size_t> ps,
                                   const Ring& ring, std::uint64_t seed, int runs = 5);

// Encryption of `batch` plaintexts of n bytes. Over Z_{2^{8w}} a plaintext of
// n bytes is a vector of n / w residues, so the map dimension is n / w.
std::vector<BenchRow> bench_encrypt(std::span<const std::size_t> ns, std::span<const Ring> rings,
                                    std::uint64_t seed, std::size_t p = 60, std::size_t batch = 8,
                                    int runs = 5);

// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

// "op,n,p,ring,micros" lines with a header.
std::string to_csv(std::span<const BenchRow> rows);
// n rows; p columns (keygen) or ring columns (encrypt); milliseconds.
std::string keygen_table(std::span<const BenchRow> rows);
std::string encrypt_table(std::span<const BenchRow> rows);

struct ShapeCheck {
  bool pass = true;
  std::string detail;
};

// Strictly increasing in n at each p, non-decreasing in p at each n.
ShapeCheck check_keygen_shape(std::span<const BenchRow> rows);
// Log-log slope of encryption time against n for `ring_tag` within [lo, hi].
// Fewer than two points: passes with the slope check skipped.
ShapeCheck check_encrypt_slope(std::span<const BenchRow> rows, const std::string& ring_tag,
                               double lo = 3.0, double hi = 5.0);

}  // namespace stabledeg
