#include "stabledeg/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "stabledeg/error.hpp"
#include "stabledeg/public_rule.hpp"

namespace stabledeg {

double median_micros(const std::function<void()>& fn, int runs) {
  using clock = std::chrono::steady_clock;
  fn();  // warmup
  std::vector<double> times;
  for (int i = 0; i < runs; ++i) {
    const auto t0 = clock::now();
    fn();
    const auto t1 = clock::now();
    times.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
  }
  std::sort(times.begin(), times.end());
  const std::size_t m = times.size();
  return m % 2 == 1 ? times[m / 2] : 0.5 * (times[m / 2 - 1] + times[m / 2]);
}

std::vector<BenchRow> bench_keygen(std::span<const std::size_t> ns, std::span<const std::size_t> ps,
                                   const Ring& ring, std::uint64_t seed, int runs) {
  std::vector<BenchRow> rows;
  for (std::size_t n : ns) {
    for (std::size_t p : ps) {
      if (n > 100 || p > 60) {
        throw Error(Errc::too_large, "keygen bench is capped at n <= 100, p <= 60");
      }
      const double us = median_micros([&] { (void)make_public_rule(n, ring, p, seed); }, runs);
      rows.push_back({"keygen", n, p, ring.tag(), us});
    }
  }
  return rows;
}

namespace {

std::size_t bytes_per_residue(const Ring& ring) {
  const std::uint64_t m = ring.modulus();
  if ((m & (m - 1)) != 0) return 1;
  const unsigned bits = static_cast<unsigned>(std::log2(static_cast<double>(m)) + 0.5);
  return bits % 8 == 0 && bits > 0 ? bits / 8 : 1;
}

}  // namespace

std::vector<BenchRow> bench_encrypt(std::span<const std::size_t> ns, std::span<const Ring> rings,
                                    std::uint64_t seed, std::size_t p, std::size_t batch,
                                    int runs) {
  std::vector<BenchRow> rows;
  for (std::size_t n : ns) {
    if (n > 100) throw Error(Errc::too_large, "encrypt bench is capped at n <= 100");
    for (const Ring& ring : rings) {
      const std::size_t dim = std::max<std::size_t>(2, n / bytes_per_residue(ring));
      const PublicRule rule = make_public_rule(dim, ring, p, seed, KeygenRoute::compose);
      Rng rng(seed + n);
      std::vector<std::vector<RingElem>> plain(batch, std::vector<RingElem>(dim));
      for (auto& x : plain) {
        for (auto& c : x) c = ring.sample(rng);
      }
      const double us = median_micros(
          [&] {
            for (const auto& x : plain) (void)encrypt(rule.public_map, x);
          },
          runs);
      rows.push_back({"encrypt", n, p, ring.tag(), us});
    }
  }
  return rows;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  const std::size_t m = std::min(x.size(), y.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = static_cast<double>(m) * sxx - sx * sx;
  return denom == 0 ? 0.0 : (static_cast<double>(m) * sxy - sx * sy) / denom;
}

std::string to_csv(std::span<const BenchRow> rows) {
  std::ostringstream os;
  os << "op,n,p,ring,micros\n";
  for (const auto& r : rows) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f", r.micros);
    os << r.op << ',' << r.n << ',' << r.p << ',' << r.ring << ',' << buf << '\n';
  }
  return os.str();
}

namespace {

// rows x columns grid of milliseconds, first column the row key.
template <class ColKey>
std::string grid(std::span<const BenchRow> rows, const std::string& corner,
                 ColKey col_of, const std::vector<std::string>& cols) {
  std::map<std::size_t, std::map<std::string, double>> cells;
  for (const auto& r : rows) cells[r.n][col_of(r)] = r.micros / 1000.0;
  std::ostringstream os;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%-8s", corner.c_str());
  os << buf;
  for (const auto& c : cols) {
    std::snprintf(buf, sizeof buf, " | %12s", c.c_str());
    os << buf;
  }
  os << '\n';
  for (const auto& [n, row] : cells) {
    std::snprintf(buf, sizeof buf, "n=%-6zu", n);
    os << buf;
    for (const auto& c : cols) {
      auto it = row.find(c);
      if (it == row.end()) {
        std::snprintf(buf, sizeof buf, " | %12s", "-");
      } else {
        std::snprintf(buf, sizeof buf, " | %12.3f", it->second);
      }
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string keygen_table(std::span<const BenchRow> rows) {
  std::vector<std::size_t> ps;
  for (const auto& r : rows) ps.push_back(r.p);
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  std::vector<std::string> cols;
  for (std::size_t p : ps) cols.push_back("p=" + std::to_string(p));
  return grid(rows, "ms", [](const BenchRow& r) { return "p=" + std::to_string(r.p); }, cols);
}

std::string encrypt_table(std::span<const BenchRow> rows) {
  std::vector<std::string> cols;
  for (const auto& r : rows) {
    if (std::find(cols.begin(), cols.end(), r.ring) == cols.end()) cols.push_back(r.ring);
  }
  return grid(rows, "ms", [](const BenchRow& r) { return r.ring; }, cols);
}

ShapeCheck check_keygen_shape(std::span<const BenchRow> rows) {
  ShapeCheck c;
  std::map<std::size_t, std::map<std::size_t, double>> by_p, by_n;
  for (const auto& r : rows) {
    by_p[r.p][r.n] = r.micros;
    by_n[r.n][r.p] = r.micros;
  }
  auto fail = [&](const std::string& msg) {
    c.pass = false;
    c.detail += msg + "; ";
  };
  for (const auto& [p, series] : by_p) {
    for (auto it = series.begin(); std::next(it) != series.end(); ++it) {
      const auto nx = std::next(it);
      if (!(nx->second > it->second)) {
        fail("p=" + std::to_string(p) + ": n=" + std::to_string(nx->first) + " not slower than n=" +
             std::to_string(it->first));
      }
    }
  }
  for (const auto& [n, series] : by_n) {
    for (auto it = series.begin(); std::next(it) != series.end(); ++it) {
      const auto nx = std::next(it);
      if (nx->second < it->second) {
        fail("n=" + std::to_string(n) + ": p=" + std::to_string(nx->first) + " faster than p=" +
             std::to_string(it->first));
      }
    }
  }
  if (c.pass) c.detail = "monotone in n and p";
  return c;
}

ShapeCheck check_encrypt_slope(std::span<const BenchRow> rows, const std::string& ring_tag,
                               double lo, double hi) {
  std::vector<double> x, y;
  for (const auto& r : rows) {
    if (r.op == "encrypt" && r.ring == ring_tag) {
      x.push_back(static_cast<double>(r.n));
      y.push_back(std::max(r.micros, 1e-3));
    }
  }
  ShapeCheck c;
  if (x.size() < 2) {
    c.detail = "single n, slope check skipped";
    return c;
  }
  const double s = loglog_slope(x, y);
  char buf[96];
  std::snprintf(buf, sizeof buf, "log-log slope %.3f (allowed [%.1f, %.1f])", s, lo, hi);
  c.detail = buf;
  c.pass = s >= lo && s <= hi;
  return c;
}

}  // namespace stabledeg
