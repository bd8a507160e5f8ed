#ifndef PFOUR_EXTENSION_HPP
#define PFOUR_EXTENSION_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "pfour/group_core.hpp"
#include "pfour/residue_algebra.hpp"

/**
 * @file extension.hpp
 * @brief Cyclic extensions of an abelian group N by C_n.
 *
 * An extension type (N, n, tau, v) with tau^n = 1 and tau(v) = v defines a
 * group on pairs (x, a^i), x in N, 0 <= i < n, with
 *
 *   (x, a^i) * (y, a^j) = (x + tau^i(y) + floor((i+j)/n) v, a^((i+j) mod n)).
 *
 * N is written additively throughout.
 */

namespace pfour {

struct ExtensionType {
  ModulusProfile profile;
  Int n;
  MixedModulusMatrix tau;
  AbelianElement v;
};

enum class TypeDefect { none, not_an_automorphism, tau_power_not_identity, v_not_fixed };

/// Stable diagnostic token: "not-an-automorphism", "tau-power-not-identity", "v-not-fixed".
std::string_view to_string(TypeDefect defect);

struct TypeCheck {
  TypeDefect defect = TypeDefect::none;
  std::string message;

  bool ok() const { return defect == TypeDefect::none; }
  explicit operator bool() const { return ok(); }
};

TypeCheck validate_type(const ExtensionType& t);

class InvalidExtensionType : public std::invalid_argument {
 public:
  InvalidExtensionType(TypeDefect defect, const std::string& message)
      : std::invalid_argument(message), defect_(defect) {}
  TypeDefect defect() const { return defect_; }

 private:
  TypeDefect defect_;
};

struct ExtElement {
  AbelianElement x;
  Int i;

  friend bool operator==(const ExtElement&, const ExtElement&) = default;
};

/// "(x1,x2|a^i)"
std::string render_label(const ExtElement& g);

/// A validated extension type with the powers of tau cached.
class CyclicExtension {
 public:
  /// Throws InvalidExtensionType if validate_type fails.
  explicit CyclicExtension(ExtensionType t);

  const ExtensionType& type() const { return type_; }
  std::size_t order() const;

  ExtElement identity() const;
  ExtElement multiply(const ExtElement& g, const ExtElement& h) const;
  ExtElement inverse(const ExtElement& g) const;
  AbelianElement norm(const AbelianElement& x) const;
  const MixedModulusMatrix& tau_power(Int i) const;

  /// Index i * |N| + x.index(): ordered by coset exponent, then coordinates of x.
  ElementIndex index_of(const ExtElement& g) const;
  ExtElement element_at(ElementIndex index) const;

 private:
  void check_element(const ExtElement& g) const;

  ExtensionType type_;
  std::vector<MixedModulusMatrix> tau_powers_;
};

ExtElement multiply(const ExtensionType& t, const ExtElement& g, const ExtElement& h);
ExtElement ext_inverse(const ExtensionType& t, const ExtElement& g);
AbelianElement norm_apply(const ExtensionType& t, const AbelianElement& x);

/// Materializes the group; element indices follow CyclicExtension::index_of.
FiniteGroup build_group(const ExtensionType& t);

/// (tau, N(x) + v): the same group with a replaced by x*a.
ExtensionType shift_generator(const ExtensionType& t, const AbelianElement& x);
/// (tau^i, i*v) for gcd(i, n) = 1: the same group with a replaced by a^i.
ExtensionType power_substitute(const ExtensionType& t, Int i);
/// (tau, i*v) for gcd(i, |N|) = 1.
ExtensionType v_power(const ExtensionType& t, Int i);
/// (phi tau phi^-1, phi(v)) for an automorphism phi of N.
ExtensionType conjugate_type(const ExtensionType& t, const MixedModulusMatrix& phi);

}  // namespace pfour

#endif
