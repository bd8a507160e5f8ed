#include "pfour/extension.hpp"

namespace pfour {

std::string_view to_string(TypeDefect defect) {
  switch (defect) {
    case TypeDefect::none:
      return "ok";
    case TypeDefect::not_an_automorphism:
      return "not-an-automorphism";
    case TypeDefect::tau_power_not_identity:
      return "tau-power-not-identity";
    case TypeDefect::v_not_fixed:
      return "v-not-fixed";
  }
  return "unknown";
}

TypeCheck validate_type(const ExtensionType& t) {
  if (!(t.tau.profile() == t.profile) || !(t.v.profile() == t.profile))
    throw std::invalid_argument("validate_type: tau and v must use the type's profile");
  if (t.n < 1)
    throw std::invalid_argument("validate_type: n must be positive");
  if (!t.tau.is_automorphism())
    return {TypeDefect::not_an_automorphism,
            "not-an-automorphism: tau = " + t.tau.to_string() + " is singular mod p"};
  if (!mat_pow(t.tau, t.n).is_identity())
    return {TypeDefect::tau_power_not_identity,
            "tau-power-not-identity: tau^" + std::to_string(t.n) + " != I (tau has order " +
                std::to_string(mat_order(t.tau)) + ")"};
  if (!(mat_apply(t.tau, t.v) == t.v))
    return {TypeDefect::v_not_fixed, "v-not-fixed: tau" + t.v.to_string() + " = " +
                                         mat_apply(t.tau, t.v).to_string() + " != v"};
  return {};
}

std::string render_label(const ExtElement& g) {
  std::string x = g.x.to_string();
  x.pop_back();
  return x + "|a^" + std::to_string(g.i) + ")";
}

CyclicExtension::CyclicExtension(ExtensionType t) : type_(std::move(t)) {
  if (auto check = validate_type(type_); !check)
    throw InvalidExtensionType(check.defect, check.message);
  tau_powers_.push_back(MixedModulusMatrix::identity(type_.profile));
  for (Int i = 1; i < type_.n; ++i)
    tau_powers_.push_back(mat_mul(tau_powers_.back(), type_.tau));
}

std::size_t CyclicExtension::order() const {
  return static_cast<std::size_t>(type_.profile.order() * type_.n);
}

ExtElement CyclicExtension::identity() const {
  return {AbelianElement::zero(type_.profile), 0};
}

const MixedModulusMatrix& CyclicExtension::tau_power(Int i) const {
  return tau_powers_[static_cast<std::size_t>(mod(i, type_.n))];
}

void CyclicExtension::check_element(const ExtElement& g) const {
  if (!(g.x.profile() == type_.profile) || g.i < 0 || g.i >= type_.n)
    throw std::invalid_argument("extension element " + render_label(g) + " is not reduced");
}

ExtElement CyclicExtension::multiply(const ExtElement& g, const ExtElement& h) const {
  check_element(g);
  check_element(h);
  const Int sum = g.i + h.i;
  const Int carries = sum / type_.n;
  return {g.x + mat_apply(tau_power(g.i), h.x) + type_.v.scaled(carries), sum - type_.n * carries};
}

ExtElement CyclicExtension::inverse(const ExtElement& g) const {
  check_element(g);
  if (g.i == 0)
    return {-g.x, 0};
  return {mat_apply(tau_power(type_.n - g.i), -(type_.v + g.x)), type_.n - g.i};
}

AbelianElement CyclicExtension::norm(const AbelianElement& x) const {
  AbelianElement acc = AbelianElement::zero(type_.profile);
  for (const auto& power : tau_powers_)
    acc = acc + mat_apply(power, x);
  return acc;
}

ElementIndex CyclicExtension::index_of(const ExtElement& g) const {
  check_element(g);
  return static_cast<ElementIndex>(g.i * type_.profile.order() + g.x.index());
}

ExtElement CyclicExtension::element_at(ElementIndex index) const {
  if (index >= order())
    throw std::out_of_range("extension element index out of range");
  const Int n_order = type_.profile.order();
  return {AbelianElement::from_index(type_.profile, index % n_order),
          static_cast<Int>(index) / n_order};
}

ExtElement multiply(const ExtensionType& t, const ExtElement& g, const ExtElement& h) {
  return CyclicExtension(t).multiply(g, h);
}

ExtElement ext_inverse(const ExtensionType& t, const ExtElement& g) {
  return CyclicExtension(t).inverse(g);
}

AbelianElement norm_apply(const ExtensionType& t, const AbelianElement& x) {
  return CyclicExtension(t).norm(x);
}

FiniteGroup build_group(const ExtensionType& t) {
  const CyclicExtension ext(t);
  const auto n_order = static_cast<std::size_t>(t.profile.order());
  const auto n = static_cast<std::size_t>(t.n);
  const std::size_t size = ext.order();
  if (size > kMaxMaterializedOrder)
    throw std::length_error("build_group: group of order " + std::to_string(size) +
                            " exceeds the materialization limit " +
                            std::to_string(kMaxMaterializedOrder));

  const auto elements = all_elements(t.profile);
  std::vector<ElementIndex> add(n_order * n_order);
  for (std::size_t a = 0; a < n_order; ++a)
    for (std::size_t b = 0; b < n_order; ++b)
      add[a * n_order + b] = static_cast<ElementIndex>((elements[a] + elements[b]).index());
  // twisted[i][y] = index of tau^i(y)
  std::vector<std::vector<ElementIndex>> twisted(n, std::vector<ElementIndex>(n_order));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t y = 0; y < n_order; ++y)
      twisted[i][y] =
          static_cast<ElementIndex>(mat_apply(ext.tau_power(static_cast<Int>(i)), elements[y]).index());
  const auto v_index = static_cast<std::size_t>(t.v.index());

  std::vector<ElementIndex> table(size * size);
  for (std::size_t g = 0; g < size; ++g) {
    const std::size_t gi = g / n_order, gx = g % n_order;
    for (std::size_t h = 0; h < size; ++h) {
      const std::size_t hi = h / n_order, hx = h % n_order;
      std::size_t x = add[gx * n_order + twisted[gi][hx]];
      std::size_t i = gi + hi;
      if (i >= n) {
        i -= n;
        x = add[x * n_order + v_index];
      }
      table[g * size + h] = static_cast<ElementIndex>(i * n_order + x);
    }
  }

  std::vector<std::string> labels;
  labels.reserve(size);
  for (std::size_t g = 0; g < size; ++g)
    labels.push_back(render_label(ext.element_at(static_cast<ElementIndex>(g))));
  return FiniteGroup(size, std::move(table), 0, std::move(labels));
}

ExtensionType shift_generator(const ExtensionType& t, const AbelianElement& x) {
  const CyclicExtension ext(t);
  return {t.profile, t.n, t.tau, ext.norm(x) + t.v};
}

ExtensionType power_substitute(const ExtensionType& t, Int i) {
  if (gcd(mod(i, t.n), t.n) != 1)
    throw std::invalid_argument("power_substitute: " + std::to_string(i) + " is not prime to n = " +
                                std::to_string(t.n));
  const CyclicExtension ext(t);
  return {t.profile, t.n, ext.tau_power(i), t.v.scaled(i)};
}

ExtensionType v_power(const ExtensionType& t, Int i) {
  if (gcd(mod(i, t.profile.order()), t.profile.order()) != 1)
    throw std::invalid_argument("v_power: " + std::to_string(i) + " is not prime to |N| = " +
                                std::to_string(t.profile.order()));
  const CyclicExtension ext(t);
  return {t.profile, t.n, t.tau, t.v.scaled(i)};
}

ExtensionType conjugate_type(const ExtensionType& t, const MixedModulusMatrix& phi) {
  if (!(phi.profile() == t.profile))
    throw std::invalid_argument("conjugate_type: profile mismatch");
  if (!phi.is_automorphism())
    throw std::invalid_argument("conjugate_type: phi is not an automorphism of N");
  const CyclicExtension ext(t);
  return {t.profile, t.n, mat_mul(mat_mul(phi, t.tau), mat_inverse(phi)), mat_apply(phi, t.v)};
}

}  // namespace pfour
