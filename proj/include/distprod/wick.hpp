#pragma once

// Vertices of the coordinate-transformed oscillator and exhaustive Wick
// contraction into vacuum diagrams.
//
// The transformation x = q - g q^3/3 + g^2 a q^5/5 turns the free action
// into the free q action plus interaction vertices, and the path-measure
// Jacobian adds vertices proportional to d0. Contributions are reported as
// the g^n coefficient of -log(Z/Z_w) per unit time:
//   order 1:  <A_1>
//   order 2:  <A_2> - 1/2 <A_1 A_1>_connected
// For two-vertex contractions the first vertex sits at time tau and the
// second is pinned at 0, so lines become functions of tau alone:
//   <q q>       = D
//   <qdot q>    = +dD   (dotted leg on the tau vertex)
//   <q qdot>    = -dD   (dotted leg on the pinned vertex)
//   <qdot qdot> = -ddD
// Self-contractions use D(0), dD(0) = 0 and -ddD(0) = d0 - w/2.

#include "distprod/integrand.hpp"
#include "distprod/value_poly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace distprod {

enum class Leg { q, qdot };

struct Vertex {
  std::string name;
  std::vector<Leg> legs;
  /// Full coupling in the action, including the power of g.
  ValuePoly coupling;
  bool jacobian = false;
  /// Power of g carried by the coupling.
  std::uint32_t order = 0;
};

/// Vertices with coupling of order g^order. Throws std::invalid_argument
/// unless order is 1 or 2.
std::vector<Vertex> action_vertices(int order);

struct LoopCounts {
  std::uint32_t qq = 0;
  std::uint32_t dd = 0;  // <qdot qdot> at equal time
  std::uint32_t dq = 0;  // <qdot q> at equal time, which vanishes

  auto operator<=>(const LoopCounts&) const = default;
};

struct Contraction {
  /// Pairs of leg indices; legs of the second vertex follow those of the first.
  std::vector<std::pair<std::size_t, std::size_t>> pairing;
  bool connected = true;
  LoopCounts loops;
  std::uint32_t cross_lines = 0;
  /// Product of equal-time self-contractions.
  ValuePoly local_factor{1};
  /// Two-vertex case: the crossing lines as one monomial with coefficient
  /// +-1 from orientation and <qdot qdot> = -ddD. A disconnected pairing
  /// yields the bare Int dtau. Empty for a single vertex.
  IntegrandSum integrand;
};

/// Every perfect matching of the legs. Throws std::invalid_argument when the
/// total leg count is odd.
std::vector<Contraction> enumerate_contractions(const Vertex& v1, const std::optional<Vertex>& v2 = std::nullopt);

struct OrderContribution {
  ValuePoly local;
  IntegrandSum nonlocal;
};

/// Full order-g^n contribution, g^n included. Disconnected pairings are
/// dropped.
OrderContribution order_contribution(int n);

enum class DiagramGroup { local, jacobian_bubbles, three_bubbles, watermelons, vanishing };

std::string to_string(DiagramGroup g);

/// Contractions with the same vertices, loop content and crossing-line
/// monomial, summed. The diagram's value is
///   prefactor * coefficient * D(0)^qq * (-ddD(0))^dd * Int shape
/// with the crossing lines written in the basis D, dD, ddD.
struct DiagramClass {
  DiagramGroup group = DiagramGroup::local;
  std::string vertices;
  LoopCounts loops;
  Powers shape;
  /// Sum of coupling products times orientation signs, g removed.
  ValuePoly coefficient;
  /// 1 for single-vertex diagrams, -1/2 for the second cumulant.
  ValuePoly prefactor{1};
  std::size_t matchings = 0;

  bool nonlocal() const { return !shape.is_bare(); }
  /// Loop product D(0)^qq (-ddD(0))^dd (dq loops give zero).
  ValuePoly loop_value() const;
  /// prefactor * coefficient * loop_value(); multiplies Int shape.
  ValuePoly weight() const;
};

std::vector<DiagramClass> diagram_classes(int n);

}  // namespace distprod
