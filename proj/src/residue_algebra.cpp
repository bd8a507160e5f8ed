#include "pfour/residue_algebra.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace pfour {

bool is_prime(Int n) {
  if (n < 2)
    return false;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int lcm(Int a, Int b) { return std::lcm(a, b); }

Int inverse_mod(Int a, Int m) {
  Int old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1)
    throw std::invalid_argument("inverse_mod: " + std::to_string(a) + " is not a unit mod " +
                                std::to_string(m));
  return mod(old_s, m);
}

std::string_view to_string(Shape shape) { return shape == Shape::p2xp ? "p2xp" : "pxpxp"; }

Shape parse_shape(std::string_view text) {
  if (text == "p2xp")
    return Shape::p2xp;
  if (text == "pxpxp")
    return Shape::pxpxp;
  throw std::invalid_argument("unknown shape '" + std::string(text) + "' (expected p2xp or pxpxp)");
}

// ModulusProfile

ModulusProfile::ModulusProfile(Int p, Shape shape) : p_(p), shape_(shape) {
  if (!is_prime(p) || p > kMaxPrime)
    throw std::invalid_argument("p must be a prime <= " + std::to_string(kMaxPrime) + ", got " +
                                std::to_string(p));
  if (shape == Shape::p2xp) {
    dim_ = 2;
    moduli_ = {p * p, p, 0};
  } else {
    dim_ = 3;
    moduli_ = {p, p, p};
  }
}

Int ModulusProfile::order() const { return p_ * p_ * p_; }

// AbelianElement

AbelianElement::AbelianElement(const ModulusProfile& profile, std::span<const Int> coords)
    : profile_(profile) {
  if (coords.size() != profile.dim())
    throw std::invalid_argument("element has " + std::to_string(coords.size()) +
                                " coordinates, profile expects " + std::to_string(profile.dim()));
  for (std::size_t i = 0; i < coords.size(); ++i)
    coords_[i] = mod(coords[i], profile.modulus(i));
}

AbelianElement::AbelianElement(const ModulusProfile& profile, std::initializer_list<Int> coords)
    : AbelianElement(profile, std::span<const Int>(coords.begin(), coords.size())) {}

AbelianElement AbelianElement::zero(const ModulusProfile& profile) {
  std::array<Int, 3> z{};
  return AbelianElement(profile, std::span<const Int>(z.data(), profile.dim()));
}

AbelianElement AbelianElement::from_index(const ModulusProfile& profile, Int index) {
  if (index < 0 || index >= profile.order())
    throw std::out_of_range("element index out of range");
  std::array<Int, 3> c{};
  for (std::size_t i = profile.dim(); i-- > 0;) {
    c[i] = index % profile.modulus(i);
    index /= profile.modulus(i);
  }
  return AbelianElement(profile, std::span<const Int>(c.data(), profile.dim()));
}

Int AbelianElement::index() const {
  Int idx = 0;
  for (std::size_t i = 0; i < dim(); ++i)
    idx = idx * profile_.modulus(i) + coords_[i];
  return idx;
}

bool AbelianElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.begin() + dim(), [](Int c) { return c == 0; });
}

Int AbelianElement::order() const {
  Int ord = 1;
  for (std::size_t i = 0; i < dim(); ++i) {
    Int m = profile_.modulus(i);
    ord = lcm(ord, m / gcd(coords_[i], m));
  }
  return ord;
}

static void require_same_profile(const ModulusProfile& a, const ModulusProfile& b,
                                 const char* what) {
  if (!(a == b))
    throw std::invalid_argument(std::string(what) + ": profile mismatch");
}

AbelianElement AbelianElement::operator+(const AbelianElement& other) const {
  require_same_profile(profile_, other.profile_, "AbelianElement::operator+");
  AbelianElement r = *this;
  for (std::size_t i = 0; i < dim(); ++i)
    r.coords_[i] = (coords_[i] + other.coords_[i]) % profile_.modulus(i);
  return r;
}

AbelianElement AbelianElement::operator-(const AbelianElement& other) const {
  return *this + (-other);
}

AbelianElement AbelianElement::operator-() const {
  AbelianElement r = *this;
  for (std::size_t i = 0; i < dim(); ++i)
    r.coords_[i] = mod(-coords_[i], profile_.modulus(i));
  return r;
}

AbelianElement AbelianElement::scaled(Int k) const {
  AbelianElement r = *this;
  for (std::size_t i = 0; i < dim(); ++i) {
    Int m = profile_.modulus(i);
    r.coords_[i] = mod(mod(k, m) * coords_[i], m);
  }
  return r;
}

std::string AbelianElement::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < dim(); ++i)
    os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

std::vector<AbelianElement> all_elements(const ModulusProfile& profile) {
  std::vector<AbelianElement> out;
  out.reserve(static_cast<std::size_t>(profile.order()));
  for (Int i = 0; i < profile.order(); ++i)
    out.push_back(AbelianElement::from_index(profile, i));
  return out;
}

// MixedModulusMatrix

MixedModulusMatrix::MixedModulusMatrix(const ModulusProfile& profile, const Rows& rows)
    : profile_(profile) {
  const std::size_t n = profile.dim();
  if (rows.size() != n)
    throw std::invalid_argument("matrix must have " + std::to_string(n) + " rows");
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n)
      throw std::invalid_argument("matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    for (std::size_t c = 0; c < n; ++c)
      entries_[r][c] = mod(rows[r][c], profile.modulus(r));
  }
  if (profile.shape() == Shape::p2xp && entries_[0][1] % profile.p() != 0)
    throw std::invalid_argument("entry (1,2) = " + std::to_string(entries_[0][1]) +
                                " is not divisible by p; not an endomorphism of C_p2 x C_p");
}

MixedModulusMatrix MixedModulusMatrix::identity(const ModulusProfile& profile) {
  MixedModulusMatrix m(profile);
  for (std::size_t i = 0; i < profile.dim(); ++i)
    m.entries_[i][i] = 1;
  return m;
}

MixedModulusMatrix MixedModulusMatrix::zero(const ModulusProfile& profile) {
  return MixedModulusMatrix(profile);
}

MixedModulusMatrix::Rows MixedModulusMatrix::rows() const {
  Rows out(dim(), std::vector<Int>(dim()));
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < dim(); ++c)
      out[r][c] = entries_[r][c];
  return out;
}

bool MixedModulusMatrix::is_automorphism() const { return fp_rank(reduce_mod_p(*this)) == dim(); }

bool MixedModulusMatrix::is_identity() const { return *this == identity(profile_); }

std::string MixedModulusMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < dim(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < dim(); ++c)
      os << (c ? "," : "") << entries_[r][c];
    os << ']';
  }
  os << ']';
  return os.str();
}

AbelianElement mat_apply(const MixedModulusMatrix& m, const AbelianElement& v) {
  require_same_profile(m.profile(), v.profile(), "mat_apply");
  std::array<Int, 3> out{};
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Int acc = 0;
    for (std::size_t c = 0; c < m.dim(); ++c)
      acc += m(r, c) * v[c];
    out[r] = acc;
  }
  return AbelianElement(m.profile(), std::span<const Int>(out.data(), m.dim()));
}

MixedModulusMatrix mat_mul(const MixedModulusMatrix& a, const MixedModulusMatrix& b) {
  require_same_profile(a.profile(), b.profile(), "mat_mul");
  MixedModulusMatrix out(a.profile());
  const std::size_t n = a.dim();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Int acc = 0;
      for (std::size_t k = 0; k < n; ++k)
        acc += a.entries_[r][k] * b.entries_[k][c];
      out.entries_[r][c] = mod(acc, a.profile().modulus(r));
    }
  }
  return out;
}

MixedModulusMatrix mat_add(const MixedModulusMatrix& a, const MixedModulusMatrix& b) {
  require_same_profile(a.profile(), b.profile(), "mat_add");
  MixedModulusMatrix out(a.profile());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      out.entries_[r][c] = (a.entries_[r][c] + b.entries_[r][c]) % a.profile().modulus(r);
  return out;
}

MixedModulusMatrix mat_pow(const MixedModulusMatrix& m, Int k) {
  if (k < 0)
    return mat_pow(mat_inverse(m), -k);
  MixedModulusMatrix result = MixedModulusMatrix::identity(m.profile());
  MixedModulusMatrix base = m;
  while (k > 0) {
    if (k & 1)
      result = mat_mul(result, base);
    base = mat_mul(base, base);
    k >>= 1;
  }
  return result;
}

Int mat_order(const MixedModulusMatrix& m) {
  if (!m.is_automorphism())
    throw std::invalid_argument("mat_order: matrix is not an automorphism");
  const auto id = MixedModulusMatrix::identity(m.profile());
  MixedModulusMatrix cur = m;
  Int k = 1;
  while (!(cur == id)) {
    cur = mat_mul(cur, m);
    ++k;
  }
  return k;
}

MixedModulusMatrix mat_inverse(const MixedModulusMatrix& m) {
  Int ord = mat_order(m);
  MixedModulusMatrix result = MixedModulusMatrix::identity(m.profile());
  for (Int i = 1; i < ord; ++i)
    result = mat_mul(result, m);
  return result;
}

// Subgroups of N

bool AbelianSubgroup::contains(const AbelianElement& e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

static std::vector<AbelianElement> close_under_addition(const ModulusProfile& profile,
                                                        std::span<const AbelianElement> seeds) {
  std::vector<char> seen(static_cast<std::size_t>(profile.order()), 0);
  std::vector<AbelianElement> members{AbelianElement::zero(profile)};
  seen[0] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (const auto& s : seeds) {
      AbelianElement next = members[head] + s;
      auto idx = static_cast<std::size_t>(next.index());
      if (!seen[idx]) {
        seen[idx] = 1;
        members.push_back(next);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

AbelianSubgroup span_of(const ModulusProfile& profile, std::span<const AbelianElement> seeds) {
  return make_abelian_subgroup(profile, close_under_addition(profile, seeds));
}

AbelianSubgroup make_abelian_subgroup(const ModulusProfile& profile,
                                      std::vector<AbelianElement> elements) {
  std::sort(elements.begin(), elements.end());
  AbelianSubgroup s;
  s.elements = std::move(elements);

  std::vector<AbelianElement> by_order = s.elements;
  std::stable_sort(by_order.begin(), by_order.end(),
                   [](const AbelianElement& a, const AbelianElement& b) {
                     return a.order() > b.order();
                   });
  std::vector<AbelianElement> gens;
  std::size_t spanned = 1;
  AbelianSubgroup current;
  current.elements = {AbelianElement::zero(profile)};
  while (spanned < s.elements.size()) {
    for (const auto& cand : by_order) {
      if (current.contains(cand))
        continue;
      gens.push_back(cand);
      current.elements = close_under_addition(profile, gens);
      spanned = current.elements.size();
      break;
    }
  }
  std::sort(gens.begin(), gens.end(), std::greater<>());
  s.generators = std::move(gens);
  return s;
}

std::vector<Int> invariant_factors(const AbelianSubgroup& s) {
  if (s.elements.empty())
    return {};
  const Int p = s.elements.front().profile().p();
  // For an abelian p-group, #{x : p^k x = 0} = p^(sum_i min(k, e_i)).
  std::vector<Int> log_counts{0};
  Int total_log = 0;
  for (Int size = static_cast<Int>(s.order()); size > 1; size /= p)
    ++total_log;
  for (Int k = 1; log_counts.back() < total_log; ++k) {
    Int pk = 1;
    for (Int i = 0; i < k; ++i)
      pk *= p;
    Int count = 0;
    for (const auto& e : s.elements)
      count += (pk % e.order() == 0) ? 1 : 0;
    Int lg = 0;
    for (; count > 1; count /= p)
      ++lg;
    log_counts.push_back(lg);
  }
  // log_counts[k] - log_counts[k-1] = number of cyclic factors of order >= p^k
  std::vector<Int> at_least;
  for (std::size_t k = 1; k < log_counts.size(); ++k)
    at_least.push_back(log_counts[k] - log_counts[k - 1]);
  std::vector<Int> factors;
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    Int exactly = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
    Int pk = 1;
    for (std::size_t i = 0; i <= k; ++i)
      pk *= p;
    for (Int j = 0; j < exactly; ++j)
      factors.push_back(pk);
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

AbelianSubgroup fixed_points(const MixedModulusMatrix& m) {
  std::vector<AbelianElement> fixed;
  for (const auto& v : all_elements(m.profile()))
    if (mat_apply(m, v) == v)
      fixed.push_back(v);
  return make_abelian_subgroup(m.profile(), std::move(fixed));
}

MixedModulusMatrix norm_matrix(const MixedModulusMatrix& m, Int n) {
  if (n < 1)
    throw std::invalid_argument("norm_matrix: n must be positive");
  MixedModulusMatrix sum = MixedModulusMatrix::zero(m.profile());
  MixedModulusMatrix power = MixedModulusMatrix::identity(m.profile());
  for (Int k = 0; k < n; ++k) {
    sum = mat_add(sum, power);
    power = mat_mul(power, m);
  }
  return sum;
}

AbelianSubgroup image_subgroup(const MixedModulusMatrix& m) {
  const auto& profile = m.profile();
  std::vector<char> seen(static_cast<std::size_t>(profile.order()), 0);
  std::vector<AbelianElement> image;
  for (const auto& v : all_elements(profile)) {
    AbelianElement w = mat_apply(m, v);
    auto idx = static_cast<std::size_t>(w.index());
    if (!seen[idx]) {
      seen[idx] = 1;
      image.push_back(w);
    }
  }
  return make_abelian_subgroup(profile, std::move(image));
}

}  // namespace pfour
