#ifndef PFOUR_RESIDUE_ALGEBRA_HPP
#define PFOUR_RESIDUE_ALGEBRA_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

/**
 * @file residue_algebra.hpp
 * @brief Exact arithmetic on the two non-cyclic abelian groups of order p^3.
 *
 * N is either C_{p^2} x C_p (shape p2xp) or C_p x C_p x C_p (shape pxpxp).
 * Elements are coordinate tuples with per-coordinate moduli; endomorphisms
 * are integer matrices acting on column vectors, row i reduced modulo the
 * i-th modulus. Column j of a matrix is the image of the j-th generator.
 */

namespace pfour {

using Int = std::int64_t;

/// Largest prime accepted anywhere; keeps every intermediate product far below 2^63.
inline constexpr Int kMaxPrime = 97;

bool is_prime(Int n);
Int mod(Int a, Int m);
Int gcd(Int a, Int b);
Int lcm(Int a, Int b);
/// Inverse of a modulo m; a must be a unit.
Int inverse_mod(Int a, Int m);

enum class Shape { p2xp, pxpxp };

std::string_view to_string(Shape shape);
Shape parse_shape(std::string_view text);

class ModulusProfile {
 public:
  /// Throws std::invalid_argument unless p is a prime <= kMaxPrime.
  ModulusProfile(Int p, Shape shape);

  Int p() const { return p_; }
  Shape shape() const { return shape_; }
  std::size_t dim() const { return dim_; }
  Int modulus(std::size_t i) const { return moduli_[i]; }
  std::span<const Int> moduli() const { return {moduli_.data(), dim_}; }
  /// |N| = p^3 for both shapes.
  Int order() const;

  friend bool operator==(const ModulusProfile&, const ModulusProfile&) = default;

 private:
  Int p_;
  Shape shape_;
  std::size_t dim_;
  std::array<Int, 3> moduli_{};
};

/// Element of N, always stored reduced.
class AbelianElement {
 public:
  AbelianElement(const ModulusProfile& profile, std::span<const Int> coords);
  AbelianElement(const ModulusProfile& profile, std::initializer_list<Int> coords);

  static AbelianElement zero(const ModulusProfile& profile);
  /// Inverse of index(): coordinates in mixed radix, first coordinate most significant.
  static AbelianElement from_index(const ModulusProfile& profile, Int index);

  const ModulusProfile& profile() const { return profile_; }
  std::size_t dim() const { return profile_.dim(); }
  Int operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Int> coords() const { return {coords_.data(), profile_.dim()}; }

  Int index() const;
  bool is_zero() const;
  Int order() const;

  AbelianElement operator+(const AbelianElement& other) const;
  AbelianElement operator-(const AbelianElement& other) const;
  AbelianElement operator-() const;
  AbelianElement scaled(Int k) const;

  std::string to_string() const;

  friend bool operator==(const AbelianElement& a, const AbelianElement& b) {
    return a.profile_ == b.profile_ && a.coords_ == b.coords_;
  }
  /// Lexicographic on coordinates; only meaningful within one profile.
  friend std::strong_ordering operator<=>(const AbelianElement& a, const AbelianElement& b) {
    return a.coords_ <=> b.coords_;
  }

 private:
  ModulusProfile profile_;
  std::array<Int, 3> coords_{};
};

/// Every element of N in index order.
std::vector<AbelianElement> all_elements(const ModulusProfile& profile);

/**
 * Endomorphism of N as a square matrix. For shape p2xp the (1,2) entry must
 * be divisible by p, otherwise the second column would not be the image of
 * an element of order p. Invertibility is not required here; see
 * is_automorphism().
 */
class MixedModulusMatrix {
 public:
  using Rows = std::vector<std::vector<Int>>;

  /// Reduces rows; throws std::invalid_argument on bad shape or a non-homomorphism.
  MixedModulusMatrix(const ModulusProfile& profile, const Rows& rows);

  static MixedModulusMatrix identity(const ModulusProfile& profile);
  static MixedModulusMatrix zero(const ModulusProfile& profile);

  const ModulusProfile& profile() const { return profile_; }
  std::size_t dim() const { return profile_.dim(); }
  Int operator()(std::size_t row, std::size_t col) const { return entries_[row][col]; }
  Rows rows() const;

  /// True iff the reduction modulo p is invertible over F_p.
  bool is_automorphism() const;
  bool is_identity() const;

  std::string to_string() const;

  friend bool operator==(const MixedModulusMatrix& a, const MixedModulusMatrix& b) {
    return a.profile_ == b.profile_ && a.entries_ == b.entries_;
  }

 private:
  explicit MixedModulusMatrix(const ModulusProfile& profile) : profile_(profile) {}

  ModulusProfile profile_;
  std::array<std::array<Int, 3>, 3> entries_{};

  friend MixedModulusMatrix mat_mul(const MixedModulusMatrix&, const MixedModulusMatrix&);
  friend MixedModulusMatrix mat_add(const MixedModulusMatrix&, const MixedModulusMatrix&);
};

AbelianElement mat_apply(const MixedModulusMatrix& m, const AbelianElement& v);
MixedModulusMatrix mat_mul(const MixedModulusMatrix& a, const MixedModulusMatrix& b);
MixedModulusMatrix mat_add(const MixedModulusMatrix& a, const MixedModulusMatrix& b);
MixedModulusMatrix mat_pow(const MixedModulusMatrix& m, Int k);
/// Least k >= 1 with m^k = I. Throws std::invalid_argument if m is not an automorphism.
Int mat_order(const MixedModulusMatrix& m);
MixedModulusMatrix mat_inverse(const MixedModulusMatrix& m);

/// Subgroup of N: sorted element list plus a minimal generating set.
struct AbelianSubgroup {
  std::vector<AbelianElement> elements;
  std::vector<AbelianElement> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(const AbelianElement& e) const;
  bool operator==(const AbelianSubgroup& other) const { return elements == other.elements; }
};

/**
 * Builds the subgroup with the given (sorted, closed) element list. Generators
 * are chosen greedily: largest order first, lexicographically least among
 * equals, and listed in decreasing lexicographic order.
 */
AbelianSubgroup make_abelian_subgroup(const ModulusProfile& profile,
                                      std::vector<AbelianElement> elements);
AbelianSubgroup span_of(const ModulusProfile& profile, std::span<const AbelianElement> seeds);
/// Invariant factors d1 | d2 | ... of a subgroup of N, ascending.
std::vector<Int> invariant_factors(const AbelianSubgroup& s);

AbelianSubgroup fixed_points(const MixedModulusMatrix& m);
/// I + m + ... + m^(n-1); computes the norm map x * m(x) * ... * m^(n-1)(x).
MixedModulusMatrix norm_matrix(const MixedModulusMatrix& m, Int n);
AbelianSubgroup image_subgroup(const MixedModulusMatrix& m);

/// Square matrix over F_p, used for conjugacy classification of order-p elements.
class FpMatrix {
 public:
  FpMatrix(Int p, std::size_t n);
  FpMatrix(Int p, const std::vector<std::vector<Int>>& rows);

  static FpMatrix identity(Int p, std::size_t n);

  Int p() const { return p_; }
  std::size_t dim() const { return n_; }
  Int operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  void set(std::size_t r, std::size_t c, Int value) { a_[r * n_ + c] = mod(value, p_); }
  std::vector<std::vector<Int>> rows() const;
  std::string to_string() const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  Int p_;
  std::size_t n_;
  std::vector<Int> a_;
};

FpMatrix fp_mul(const FpMatrix& a, const FpMatrix& b);
FpMatrix fp_sub(const FpMatrix& a, const FpMatrix& b);
FpMatrix fp_pow(const FpMatrix& a, Int k);
std::size_t fp_rank(const FpMatrix& a);
/// Throws std::invalid_argument if a is singular.
FpMatrix fp_inverse(const FpMatrix& a);
std::vector<Int> fp_apply(const FpMatrix& a, std::span<const Int> v);
/// Reduction of every entry modulo p.
FpMatrix reduce_mod_p(const MixedModulusMatrix& m);

struct JordanForm {
  FpMatrix canonical;
  /// g with g * a * g^-1 == canonical.
  FpMatrix conjugator;
  /// Block sizes, largest first.
  std::vector<std::size_t> blocks;
};

/**
 * Conjugates an element of GL_m(F_p) of order dividing p (m = 2 or 3) into
 * upper unipotent Jordan form. Throws std::invalid_argument if a^p != I or
 * m is unsupported.
 */
JordanForm jordan_reduce(const FpMatrix& a);

/// conjugator * tau^power * conjugator^-1 == target.
struct MixedReduction {
  Int power;
  MixedModulusMatrix conjugator;
  MixedModulusMatrix target;
};

/**
 * Reduces an order-p automorphism of C_{p^2} x C_p to one of the five
 * representatives [[1,p],[0,1]], [[1+p,0],[0,1]], [[1,0],[1,1]],
 * [[1,p],[1,1]], [[1,eps*p],[1,1]] using the elementary conjugations
 * [[1,0],[1,1]], [[1,-p],[0,1]], diagonal scalings and prime-to-p powers.
 * p must be odd and eps a quadratic nonresidue.
 */
MixedReduction reduce_mixed_order_p(const MixedModulusMatrix& tau, Int epsilon);

}  // namespace pfour

#endif
