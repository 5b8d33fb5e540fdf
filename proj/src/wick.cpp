#include "distprod/wick.hpp"

#include "distprod/reducer.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace distprod {

namespace {

Vertex make_vertex(std::string name, std::uint32_t dots, std::uint32_t plain, ValuePoly coupling,
                   std::uint32_t order, bool jacobian = false) {
  Vertex v{std::move(name), {}, std::move(coupling), jacobian, order};
  v.legs.insert(v.legs.end(), dots, Leg::qdot);
  v.legs.insert(v.legs.end(), plain, Leg::q);
  return v;
}

ValuePoly r(int num, int den = 1) { return ValuePoly(Rational(num, den)); }

void enumerate_matchings(std::vector<std::size_t>& open, std::vector<std::pair<std::size_t, std::size_t>>& current,
                         std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& out) {
  if (open.empty()) {
    out.push_back(current);
    return;
  }
  const std::size_t first = open.front();
  for (std::size_t k = 1; k < open.size(); ++k) {
    const std::size_t partner = open[k];
    std::vector<std::size_t> rest;
    rest.reserve(open.size() - 2);
    for (std::size_t i = 1; i < open.size(); ++i)
      if (i != k) rest.push_back(open[i]);
    current.emplace_back(first, partner);
    enumerate_matchings(rest, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Vertex> action_vertices(int order) {
  const ValuePoly g = ValuePoly::symbol(Symbol::g);
  const ValuePoly a = ValuePoly::symbol(Symbol::a);
  const ValuePoly d0 = ValuePoly::symbol(Symbol::d0);
  const ValuePoly w2 = ValuePoly::omega(2);
  if (order == 1) {
    return {
        make_vertex("qdot^2 q^2", 2, 2, r(-1, 2) * g * r(2), 1),
        make_vertex("q^4", 0, 4, r(-1, 2) * g * r(2, 3) * w2, 1),
        make_vertex("jacobian q^2", 0, 2, g * d0, 1, true),
    };
  }
  if (order == 2) {
    const ValuePoly g2 = g.pow(2);
    return {
        make_vertex("qdot^2 q^4", 2, 4, r(1, 2) * g2 * (r(1) + r(2) * a), 2),
        make_vertex("q^6", 0, 6, r(1, 2) * g2 * w2 * (r(1, 9) + r(2, 5) * a), 2),
        make_vertex("jacobian q^4", 0, 4, -g2 * (a - r(1, 2)) * d0, 2, true),
    };
  }
  throw std::invalid_argument("action_vertices: order must be 1 or 2, got " + std::to_string(order));
}

std::vector<Contraction> enumerate_contractions(const Vertex& v1, const std::optional<Vertex>& v2) {
  std::vector<Leg> legs = v1.legs;
  const std::size_t split = legs.size();
  if (v2) legs.insert(legs.end(), v2->legs.begin(), v2->legs.end());
  if (legs.size() % 2 != 0)
    throw std::invalid_argument("enumerate_contractions: odd number of legs (" + std::to_string(legs.size()) + ")");

  std::vector<std::size_t> open(legs.size());
  for (std::size_t i = 0; i < legs.size(); ++i) open[i] = i;
  std::vector<std::pair<std::size_t, std::size_t>> current;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> matchings;
  enumerate_matchings(open, current, matchings);

  const ValuePoly dd_loop = -equal_time_ddD();
  std::vector<Contraction> out;
  out.reserve(matchings.size());
  for (auto& pairing : matchings) {
    Contraction c;
    Powers cross;
    Rational sign(1);
    for (auto [i, j] : pairing) {
      const bool i_first = i < split;
      const bool j_first = j < split;
      const Leg li = legs[i];
      const Leg lj = legs[j];
      if (i_first == j_first) {
        if (li == Leg::q && lj == Leg::q) {
          ++c.loops.qq;
          c.local_factor *= equal_time_D();
        } else if (li == Leg::qdot && lj == Leg::qdot) {
          ++c.loops.dd;
          c.local_factor *= dd_loop;
        } else {
          ++c.loops.dq;
          c.local_factor = ValuePoly();
        }
        continue;
      }
      ++c.cross_lines;
      // orient so that `tau_leg` is on the unpinned vertex
      const Leg tau_leg = i_first ? li : lj;
      const Leg pinned_leg = i_first ? lj : li;
      if (tau_leg == Leg::q && pinned_leg == Leg::q) {
        ++cross.m;
      } else if (tau_leg == Leg::qdot && pinned_leg == Leg::qdot) {
        ++cross.p;
        sign = -sign;
      } else {
        ++cross.n;
        if (pinned_leg == Leg::qdot) sign = -sign;
      }
    }
    c.pairing = std::move(pairing);
    if (v2) {
      c.connected = c.cross_lines > 0;
      c.integrand = IntegrandSum(IntegrandMonomial{cross, ValuePoly(sign)});
    }
    out.push_back(std::move(c));
  }
  return out;
}

OrderContribution order_contribution(int n) {
  if (n != 1 && n != 2)
    throw std::invalid_argument("order_contribution: order must be 1 or 2, got " + std::to_string(n));
  OrderContribution out;
  for (const auto& v : action_vertices(n)) {
    for (const auto& c : enumerate_contractions(v)) out.local += v.coupling * c.local_factor;
  }
  if (n == 2) {
    const auto first_order = action_vertices(1);
    const ValuePoly half = r(-1, 2);
    for (const auto& v1 : first_order) {
      for (const auto& v2 : first_order) {
        const ValuePoly couplings = half * v1.coupling * v2.coupling;
        for (const auto& c : enumerate_contractions(v1, v2)) {
          if (!c.connected || c.local_factor.is_zero()) continue;
          out.nonlocal += (couplings * c.local_factor) * c.integrand;
        }
      }
    }
    out.nonlocal = normalize(out.nonlocal);
  }
  return out;
}

std::string to_string(DiagramGroup g) {
  switch (g) {
    case DiagramGroup::local: return "local";
    case DiagramGroup::jacobian_bubbles: return "jacobian-bubbles";
    case DiagramGroup::three_bubbles: return "three-bubbles";
    case DiagramGroup::watermelons: return "watermelons";
    case DiagramGroup::vanishing: return "vanishing";
  }
  return "?";
}

ValuePoly DiagramClass::loop_value() const {
  if (loops.dq > 0) return {};
  return equal_time_D().pow(loops.qq) * (-equal_time_ddD()).pow(loops.dd);
}

ValuePoly DiagramClass::weight() const { return prefactor * coefficient * loop_value(); }

std::vector<DiagramClass> diagram_classes(int n) {
  if (n != 1 && n != 2)
    throw std::invalid_argument("diagram_classes: order must be 1 or 2, got " + std::to_string(n));

  using Key = std::tuple<DiagramGroup, std::string, LoopCounts, Powers>;
  std::map<Key, DiagramClass> classes;
  auto record = [&](DiagramClass proto, const ValuePoly& contribution) {
    Key key{proto.group, proto.vertices, proto.loops, proto.shape};
    auto [it, inserted] = classes.try_emplace(key, std::move(proto));
    it->second.coefficient += contribution;
    ++it->second.matchings;
  };

  for (const auto& v : action_vertices(n)) {
    const ValuePoly coupling = v.coupling.g_order(v.order);
    for (const auto& c : enumerate_contractions(v)) {
      DiagramClass proto;
      proto.group = c.loops.dq > 0 ? DiagramGroup::vanishing : DiagramGroup::local;
      proto.vertices = v.name;
      proto.loops = c.loops;
      record(std::move(proto), coupling);
    }
  }

  if (n == 2) {
    const auto first_order = action_vertices(1);
    for (std::size_t i = 0; i < first_order.size(); ++i) {
      for (std::size_t j = 0; j < first_order.size(); ++j) {
        const auto& v1 = first_order[i];
        const auto& v2 = first_order[j];
        const ValuePoly couplings = v1.coupling.g_order(1) * v2.coupling.g_order(1);
        const auto& lo = i <= j ? v1 : v2;
        const auto& hi = i <= j ? v2 : v1;
        for (const auto& c : enumerate_contractions(v1, v2)) {
          if (!c.connected) continue;
          DiagramClass proto;
          if (c.loops.dq > 0) {
            proto.group = DiagramGroup::vanishing;
          } else if (v1.jacobian || v2.jacobian) {
            proto.group = DiagramGroup::jacobian_bubbles;
          } else if (c.cross_lines == 4) {
            proto.group = DiagramGroup::watermelons;
          } else {
            proto.group = DiagramGroup::three_bubbles;
          }
          proto.vertices = lo.name + " x " + hi.name;
          proto.loops = c.loops;
          const auto& mono = c.integrand.terms().front();
          proto.shape = mono.powers;
          proto.prefactor = r(-1, 2);
          record(std::move(proto), couplings * mono.coeff);
        }
      }
    }
  }

  std::vector<DiagramClass> out;
  out.reserve(classes.size());
  for (auto& [key, cls] : classes) out.push_back(std::move(cls));
  return out;
}

}  // namespace distprod
