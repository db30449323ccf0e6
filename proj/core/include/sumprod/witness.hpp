#ifndef SUMPROD_WITNESS_HPP
#define SUMPROD_WITNESS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "sumprod/coloring.hpp"

namespace sumprod {

/// Monochromatic {a, b, a+b} with a <= b.
struct SchurWitness {
  std::uint64_t a;
  std::uint64_t b;
  std::uint64_t sum;
  std::uint32_t color;

  friend bool operator==(const SchurWitness&, const SchurWitness&) = default;
  friend auto operator<=>(const SchurWitness&, const SchurWitness&) = default;
};

/// Monochromatic {x, y, xy} with 2 <= x <= y.
struct ProductWitness {
  std::uint64_t x;
  std::uint64_t y;
  std::uint64_t product;
  std::uint32_t color;

  friend bool operator==(const ProductWitness&, const ProductWitness&) = default;
  friend auto operator<=>(const ProductWitness&, const ProductWitness&) = default;
};

/// Monochromatic {a_1..a_n, x_1..x_m, v} with sum(addends) == prod(factors) == v.
/// Addends and factors are stored as sorted multisets. When `weak` is set the
/// common value itself is exempt from the membership and color constraints.
struct SumProductWitness {
  std::vector<std::uint64_t> addends;
  std::vector<std::uint64_t> factors;
  std::uint64_t value;
  std::uint32_t color;
  bool weak = false;

  /// A factor equal to 1 contributes nothing multiplicatively; flagged so
  /// downstream filters can reject such witnesses.
  bool has_degenerate_factor() const noexcept {
    for (auto f : factors)
      if (f == 1) return true;
    return false;
  }

  friend bool operator==(const SumProductWitness&, const SumProductWitness&) = default;
};

/// Two monochromatic Schur triples X, Y of one color whose nine pairwise
/// products all carry that color as well.
struct DoubleSchurProductWitness {
  SchurWitness x;
  SchurWitness y;
  std::array<std::uint64_t, 9> products;  // row-major over (elements of X) x (elements of Y)
  std::uint32_t color;

  friend bool operator==(const DoubleSchurProductWitness&,
                         const DoubleSchurProductWitness&) = default;
};

using Witness =
    std::variant<SchurWitness, ProductWitness, SumProductWitness, DoubleSchurProductWitness>;

enum class PredicateKind {
  AdditiveSchur,
  MultiplicativeSchur,
  SumProduct,
  SumProductWeak,
  DoubleSchurProduct,
};

/// Names one of the monochromatic configuration families, with its knobs.
struct PredicateId {
  PredicateKind kind;
  std::uint32_t n = 2;  // addend count, SumProduct only
  std::uint32_t m = 2;  // factor count, SumProduct only
  bool allow_equal = true;
  bool nontrivial = false;

  /// Canonical predicate with per-kind defaults: allow_equal is true for the
  /// triple predicates and false for DoubleSchurProduct; nontrivial defaults
  /// to true for the sum-product and double-Schur families.
  static PredicateId make(PredicateKind kind, std::uint32_t n = 2, std::uint32_t m = 2);

  /// Parse a CLI-style name: additive-schur, multiplicative-schur,
  /// sum-product, sum-product-weak, double-schur-product.
  static PredicateId parse(const std::string& name, std::uint32_t n = 2, std::uint32_t m = 2);

  std::string name() const;

  friend bool operator==(const PredicateId&, const PredicateId&) = default;
};

nlohmann::json to_json(const SchurWitness& w);
nlohmann::json to_json(const ProductWitness& w);
nlohmann::json to_json(const SumProductWitness& w);
nlohmann::json to_json(const DoubleSchurProductWitness& w);
nlohmann::json to_json(const PredicateId& p);
nlohmann::json to_json(const Witness& w);

SchurWitness schur_witness_from_json(const nlohmann::json& j);
ProductWitness product_witness_from_json(const nlohmann::json& j);
SumProductWitness sum_product_witness_from_json(const nlohmann::json& j);
DoubleSchurProductWitness double_schur_product_witness_from_json(const nlohmann::json& j);
PredicateId predicate_from_json(const nlohmann::json& j);

/// Self-contained certificate document: {kind, witness, coloring_digest}.
nlohmann::json witness_certificate(const Witness& w, const Coloring& c);

}  // namespace sumprod

#endif
