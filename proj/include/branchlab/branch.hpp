// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "branchlab/extnat.hpp"
#include "branchlab/poly.hpp"

namespace branchlab {

/// A branch through the origin given by a primitive polynomial parametrization.
class Branch {
 public:
  const UniPoly& x() const { return x_; }
  const UniPoly& y() const { return y_; }
  const FieldSpec& field() const { return x_.field(); }

  /// Branch with x and y exchanged.
  Branch swapped() const;

  std::string to_string() const;

  friend bool operator==(const Branch& a, const Branch& b) { return a.x_ == b.x_ && a.y_ == b.y_; }

 private:
  friend Branch make_branch(const UniPoly& x, const UniPoly& y, const FieldSpec& field);
  Branch(UniPoly x, UniPoly y) : x_(std::move(x)), y_(std::move(y)) {}
  UniPoly x_;
  UniPoly y_;
};

/// Validates the parametrization.
/// Errors: NotThroughOrigin, BothZero, NotPrimitive, FieldMismatch.
/// A coordinate axis must be given with its other coordinate of order 1; any other
/// input must not factor through a series of order > 1.
Branch make_branch(const UniPoly& x, const UniPoly& y, const FieldSpec& field);

/// True when the expansion of (x, y) reaches a column with coprime valuations, i.e. the
/// parametrization is not a composite through a series of order > 1. x and y vanish at 0.
bool is_locally_primitive(const UniPoly& x, const UniPoly& y);

/// Polynomial in x and y: a list of terms coef * x^i * y^j.
struct XYPoly {
  struct Term {
    std::uint32_t x_exp;
    std::uint32_t y_exp;
    FieldElement coef;
  };
  FieldSpec field;
  std::vector<Term> terms;
};

/// Grammar: term := [coef '*'] mono | coef, mono := var ['^' nat] ('*' var ['^' nat])*, var := x | y.
XYPoly parse_xy_poly(std::string_view text, const FieldSpec& field);

/// g(x(t), y(t)) as a polynomial in t.
UniPoly substitute(const Branch& b, const XYPoly& g);

/// ord_t g(x(t), y(t)); inf when g vanishes on the branch.
ExtNat branch_valuation(const Branch& b, const XYPoly& g);

struct RegularityClass {
  enum class Kind { XRegular, YRegular, Tangent, UnitTimesX, UnitTimesY };
  Kind kind;
  /// Tangent line lambda*x + mu*y = 0; set only for Tangent, with mu = 1.
  FieldElement lambda;
  FieldElement mu;
  /// Multiplicity of the branch; 1 for the degenerate kinds.
  std::int64_t multiplicity;
};

std::string to_string(RegularityClass::Kind kind);

RegularityClass regularity_class(const Branch& b);

}  // namespace branchlab
