#include "pfour/residue_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace pfour {

FpMatrix::FpMatrix(Int p, std::size_t n) : p_(p), n_(n), a_(n * n, 0) {}

FpMatrix::FpMatrix(Int p, const std::vector<std::vector<Int>>& rows) : FpMatrix(p, rows.size()) {
  for (std::size_t r = 0; r < n_; ++r) {
    if (rows[r].size() != n_)
      throw std::invalid_argument("FpMatrix: rows must form a square matrix");
    for (std::size_t c = 0; c < n_; ++c)
      set(r, c, rows[r][c]);
  }
}

FpMatrix FpMatrix::identity(Int p, std::size_t n) {
  FpMatrix m(p, n);
  for (std::size_t i = 0; i < n; ++i)
    m.set(i, i, 1);
  return m;
}

std::vector<std::vector<Int>> FpMatrix::rows() const {
  std::vector<std::vector<Int>> out(n_, std::vector<Int>(n_));
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c)
      out[r][c] = (*this)(r, c);
  return out;
}

std::string FpMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < n_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < n_; ++c)
      os << (c ? "," : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

FpMatrix fp_mul(const FpMatrix& a, const FpMatrix& b) {
  if (a.p() != b.p() || a.dim() != b.dim())
    throw std::invalid_argument("fp_mul: incompatible matrices");
  FpMatrix out(a.p(), a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) {
      Int acc = 0;
      for (std::size_t k = 0; k < a.dim(); ++k)
        acc += a(r, k) * b(k, c);
      out.set(r, c, acc);
    }
  return out;
}

FpMatrix fp_sub(const FpMatrix& a, const FpMatrix& b) {
  if (a.p() != b.p() || a.dim() != b.dim())
    throw std::invalid_argument("fp_sub: incompatible matrices");
  FpMatrix out(a.p(), a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      out.set(r, c, a(r, c) - b(r, c));
  return out;
}

FpMatrix fp_pow(const FpMatrix& a, Int k) {
  if (k < 0)
    return fp_pow(fp_inverse(a), -k);
  FpMatrix result = FpMatrix::identity(a.p(), a.dim());
  FpMatrix base = a;
  for (; k > 0; k >>= 1) {
    if (k & 1)
      result = fp_mul(result, base);
    base = fp_mul(base, base);
  }
  return result;
}

namespace {

// Row-reduces in place; returns the rank. If `aug` is given it receives the
// same row operations.
std::size_t row_reduce(std::vector<std::vector<Int>>& m, Int p,
                       std::vector<std::vector<Int>>* aug = nullptr) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    std::swap(m[pivot], m[rank]);
    if (aug)
      std::swap((*aug)[pivot], (*aug)[rank]);
    Int inv = inverse_mod(m[rank][c], p);
    for (auto& x : m[rank])
      x = mod(x * inv, p);
    if (aug)
      for (auto& x : (*aug)[rank])
        x = mod(x * inv, p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0)
        continue;
      Int f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k)
        m[r][k] = mod(m[r][k] - f * m[rank][k], p);
      if (aug)
        for (std::size_t k = 0; k < (*aug)[r].size(); ++k)
          (*aug)[r][k] = mod((*aug)[r][k] - f * (*aug)[rank][k], p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t fp_rank(const FpMatrix& a) {
  auto rows = a.rows();
  return row_reduce(rows, a.p());
}

FpMatrix fp_inverse(const FpMatrix& a) {
  auto rows = a.rows();
  auto aug = FpMatrix::identity(a.p(), a.dim()).rows();
  if (row_reduce(rows, a.p(), &aug) != a.dim())
    throw std::invalid_argument("fp_inverse: matrix is singular mod " + std::to_string(a.p()));
  return FpMatrix(a.p(), aug);
}

std::vector<Int> fp_apply(const FpMatrix& a, std::span<const Int> v) {
  std::vector<Int> out(a.dim(), 0);
  for (std::size_t r = 0; r < a.dim(); ++r) {
    Int acc = 0;
    for (std::size_t c = 0; c < a.dim(); ++c)
      acc += a(r, c) * v[c];
    out[r] = mod(acc, a.p());
  }
  return out;
}

FpMatrix reduce_mod_p(const MixedModulusMatrix& m) {
  FpMatrix out(m.profile().p(), m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      out.set(r, c, m(r, c));
  return out;
}

namespace {

std::vector<Int> vector_at(Int p, std::size_t n, Int index) {
  std::vector<Int> v(n);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = index % p;
    index /= p;
  }
  return v;
}

bool is_zero_vector(const std::vector<Int>& v) {
  for (Int x : v)
    if (x != 0)
      return false;
  return true;
}

FpMatrix from_columns(Int p, const std::vector<std::vector<Int>>& cols) {
  FpMatrix m(p, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < cols.size(); ++r)
      m.set(r, c, cols[c][r]);
  return m;
}

Int vector_count(Int p, std::size_t n) {
  Int total = 1;
  for (std::size_t i = 0; i < n; ++i)
    total *= p;
  return total;
}

}  // namespace

JordanForm jordan_reduce(const FpMatrix& a) {
  const Int p = a.p();
  const std::size_t n = a.dim();
  if (n != 2 && n != 3)
    throw std::invalid_argument("jordan_reduce: only 2x2 and 3x3 matrices are supported");
  const FpMatrix id = FpMatrix::identity(p, n);
  if (!(fp_pow(a, p) == id))
    throw std::invalid_argument("jordan_reduce: matrix does not have order dividing p");

  const FpMatrix nil = fp_sub(a, id);
  const std::size_t rank = fp_rank(nil);
  const Int count = vector_count(p, n);

  JordanForm out{id, id, {}};
  if (rank == 0) {
    out.blocks.assign(n, 1);
    return out;
  }

  if (rank == n - 1) {
    // Single block: basis N^(n-1)w, ..., Nw, w.
    const FpMatrix top = fp_pow(nil, static_cast<Int>(n - 1));
    std::vector<Int> w;
    for (Int idx = 1; idx < count; ++idx) {
      w = vector_at(p, n, idx);
      if (!is_zero_vector(fp_apply(top, w)))
        break;
    }
    std::vector<std::vector<Int>> cols(n);
    cols[n - 1] = w;
    for (std::size_t k = n - 1; k-- > 0;)
      cols[k] = fp_apply(nil, cols[k + 1]);
    const FpMatrix basis = from_columns(p, cols);
    out.conjugator = fp_inverse(basis);
    for (std::size_t i = 0; i + 1 < n; ++i)
      out.canonical.set(i, i + 1, 1);
    out.blocks = {n};
  } else {
    // n == 3, rank 1: blocks of sizes 2 and 1, basis Nw, w, u with u in ker N.
    std::vector<Int> w;
    for (Int idx = 1; idx < count; ++idx) {
      w = vector_at(p, n, idx);
      if (!is_zero_vector(fp_apply(nil, w)))
        break;
    }
    const std::vector<Int> nw = fp_apply(nil, w);
    std::vector<Int> u;
    for (Int idx = 1; idx < count; ++idx) {
      u = vector_at(p, n, idx);
      if (!is_zero_vector(fp_apply(nil, u)))
        continue;
      if (fp_rank(from_columns(p, {nw, w, u})) == 3)
        break;
    }
    const FpMatrix basis = from_columns(p, {nw, w, u});
    out.conjugator = fp_inverse(basis);
    out.canonical.set(0, 1, 1);
    out.blocks = {2, 1};
  }

  if (!(fp_mul(fp_mul(out.conjugator, a), fp_inverse(out.conjugator)) == out.canonical))
    throw std::logic_error("jordan_reduce: conjugator check failed for " + a.to_string());
  return out;
}

MixedReduction reduce_mixed_order_p(const MixedModulusMatrix& tau, Int epsilon) {
  const ModulusProfile& profile = tau.profile();
  const Int p = profile.p();
  if (profile.shape() != Shape::p2xp || p == 2)
    throw std::invalid_argument("reduce_mixed_order_p: requires C_p2 x C_p with p odd");
  if (!tau.is_automorphism() || mat_order(tau) != p)
    throw std::invalid_argument("reduce_mixed_order_p: tau must have order p");

  using Rows = MixedModulusMatrix::Rows;
  auto matrix = [&](const Rows& rows) { return MixedModulusMatrix(profile, rows); };
  const MixedModulusMatrix id = MixedModulusMatrix::identity(profile);
  const MixedModulusMatrix lower_shear = matrix({{1, 0}, {1, 1}});
  const MixedModulusMatrix upper_shift = matrix({{1, -p}, {0, 1}});

  // Order p forces tau = [[1+sp, rp], [b, 1]].
  const Int s = mod((tau(0, 0) - 1) / p, p);
  Int r = tau(0, 1) / p;
  const Int b = tau(1, 0);

  MixedModulusMatrix conj = id;
  Int power = 1;
  MixedModulusMatrix target = id;

  if (b == 0) {
    if (r != 0) {
      // s/r applications of [[1,0],[1,1]] clear the diagonal; the r-th root
      // power then normalises rp to p.
      const Int t = inverse_mod(r, p);
      conj = mat_pow(lower_shear, mod(t * s, p));
      power = t;
      target = matrix({{1, p}, {0, 1}});
    } else {
      power = inverse_mod(s, p);
      target = matrix({{1 + p, 0}, {0, 1}});
    }
  } else {
    const Int u = inverse_mod(b, p);
    conj = matrix({{1, 0}, {0, u}});
    r = mod(r * b, p);
    conj = mat_mul(mat_pow(upper_shift, s), conj);
    if (r == 0) {
      target = matrix({{1, 0}, {1, 1}});
    } else {
      Int q = 0;
      Int r_new = 0;
      for (Int cand = 1; cand < p && q == 0; ++cand)
        if (mod(r * cand * cand, p) == 1) {
          q = cand;
          r_new = 1;
        }
      for (Int cand = 1; cand < p && q == 0; ++cand)
        if (mod(r * cand * cand, p) == mod(epsilon, p)) {
          q = cand;
          r_new = epsilon;
        }
      if (q == 0)
        throw std::invalid_argument("reduce_mixed_order_p: epsilon is not a nonresidue");
      power = q;
      // tau^q = [[1+C(q,2)rp, qrp],[q,1]]: rescale the corner to 1, then clear C(q,2)rp.
      const Int binom = q * (q - 1) / 2;
      conj = mat_mul(matrix({{q, 0}, {0, 1}}), conj);
      conj = mat_mul(mat_pow(upper_shift, mod(binom * r, p)), conj);
      target = matrix({{1, r_new * p}, {1, 1}});
    }
  }

  MixedReduction out{power, conj, target};
  const auto check = mat_mul(mat_mul(conj, mat_pow(tau, power)), mat_inverse(conj));
  if (!(check == target))
    throw std::logic_error("reduce_mixed_order_p: reduction of " + tau.to_string() +
                           " produced " + check.to_string());
  return out;
}

}  // namespace pfour
