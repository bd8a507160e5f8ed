#ifndef PFOUR_TESTS_ORACLE_HPP
#define PFOUR_TESTS_ORACLE_HPP

// Plain-integer reference implementations used to cross-check the library.
// Nothing here calls into pfour.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oracle {

using I = std::int64_t;
using Vec = std::vector<I>;
using Mat = std::vector<std::vector<I>>;

inline I md(I a, I m) { return ((a % m) + m) % m; }

inline Vec apply(const Mat& m, const Vec& v, const Vec& moduli) {
  Vec out(v.size(), 0);
  for (std::size_t r = 0; r < m.size(); ++r) {
    I acc = 0;
    for (std::size_t c = 0; c < v.size(); ++c)
      acc += m[r][c] * v[c];
    out[r] = md(acc, moduli[r]);
  }
  return out;
}

inline Vec add(const Vec& a, const Vec& b, const Vec& moduli) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = md(a[i] + b[i], moduli[i]);
  return out;
}

inline Mat mul(const Mat& a, const Mat& b, const Vec& moduli) {
  const std::size_t n = a.size();
  Mat out(n, Vec(n, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      I acc = 0;
      for (std::size_t k = 0; k < n; ++k)
        acc += a[r][k] * b[k][c];
      out[r][c] = md(acc, moduli[r]);
    }
  return out;
}

inline Mat identity(std::size_t n) {
  Mat out(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    out[i][i] = 1;
  return out;
}

inline Mat power(const Mat& m, I k, const Vec& moduli) {
  Mat out = identity(m.size());
  for (I i = 0; i < k; ++i)
    out = mul(out, m, moduli);
  return out;
}

inline std::vector<Vec> elements(const Vec& moduli) {
  std::vector<Vec> out{Vec(moduli.size(), 0)};
  for (std::size_t i = moduli.size(); i-- > 0;) {
    std::vector<Vec> next;
    for (const auto& e : out)
      for (I k = 0; k < moduli[i]; ++k) {
        Vec f = e;
        f[i] = k;
        next.push_back(f);
      }
    out = next;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Extension group on pairs (x, i) using the two-case form of the product.
struct Extension {
  Vec moduli;
  I n;
  Mat tau;
  Vec v;

  struct El {
    Vec x;
    I i;
    bool operator==(const El&) const = default;
  };

  El mul(const El& g, const El& h) const {
    Vec y = h.x;
    for (I k = 0; k < g.i; ++k)
      y = apply(tau, y, moduli);
    Vec x = add(g.x, y, moduli);
    if (g.i + h.i < n)
      return {x, g.i + h.i};
    return {add(x, v, moduli), g.i + h.i - n};
  }

  El identity() const { return {Vec(moduli.size(), 0), 0}; }

  std::vector<El> all() const {
    std::vector<El> out;
    for (I i = 0; i < n; ++i)
      for (const auto& x : elements(moduli))
        out.push_back({x, i});
    return out;
  }

  I order_of(const El& g) const {
    El acc = g;
    I k = 1;
    while (!(acc == identity())) {
      acc = mul(acc, g);
      ++k;
    }
    return k;
  }

  /// Number of elements whose order divides k.
  I census(I k) const {
    I count = 0;
    for (const auto& g : all())
      if (k % order_of(g) == 0)
        ++count;
    return count;
  }
};

inline I euler_phi(I n) {
  I out = n;
  for (I q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      while (n % q == 0)
        n /= q;
      out -= out / q;
    }
  if (n > 1)
    out -= out / n;
  return out;
}

/// Legendre symbol test by Euler's criterion.
inline bool is_square_mod(I a, I p) {
  I r = 1, b = md(a, p), e = (p - 1) / 2;
  while (e) {
    if (e & 1)
      r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1;
}

/**
 * Order-p automorphisms of C_{p^2} x C_p found by trying every pair of
 * generator images and checking the induced map is well defined and
 * bijective. Returned as matrices with the images as columns.
 */
inline std::vector<Mat> order_p_automorphisms_c_p2_cp(I p) {
  const Vec moduli{p * p, p};
  const auto elems = elements(moduli);
  std::vector<Mat> out;
  for (const auto& gx : elems)
    for (const auto& gy : elems) {
      // y has order p, so its image must too.
      if (md(p * gy[0], p * p) != 0 || md(p * gy[1], p) != 0)
        continue;
      const Mat m{{gx[0], gy[0]}, {gx[1], gy[1]}};
      std::vector<char> hit(elems.size(), 0);
      bool bijective = true;
      for (const auto& e : elems) {
        const Vec img = add(Vec{md(gx[0] * e[0], p * p), md(gx[1] * e[0], p)},
                            Vec{md(gy[0] * e[1], p * p), md(gy[1] * e[1], p)}, moduli);
        const std::size_t idx = static_cast<std::size_t>(img[0] * p + img[1]);
        if (hit[idx]) {
          bijective = false;
          break;
        }
        hit[idx] = 1;
      }
      if (!bijective)
        continue;
      // Order of the map: least k with m^k fixing both generators.
      Vec a{1, 0}, b{0, 1};
      I k = 0;
      do {
        a = apply(m, a, moduli);
        b = apply(m, b, moduli);
        ++k;
      } while (!(a == Vec{1, 0} && b == Vec{0, 1}));
      if (k == p)
        out.push_back(m);
    }
  return out;
}

}  // namespace oracle

#endif
