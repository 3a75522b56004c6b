#include "knotint/jsonio.hpp"

#include <chrono>

namespace knotint {

using nlohmann::json;

json poly_to_json(const InvariantPoly& p) {
  json arr = json::array();
  for (auto& [m, c] : p.terms) {
    arr.push_back({{"u", m.u}, {"x", m.x}, {"y", m.y}, {"d", m.d}, {"c", c.str()}});
  }
  return arr;
}

InvariantPoly poly_from_json(const json& j) {
  InvariantPoly p;
  for (auto& t : j) {
    Monomial4 m{t.at("u").get<int>(), t.at("x").get<int>(), t.at("y").get<int>(),
                t.at("d").get<int>()};
    p.add_term(m, Int(t.at("c").get<std::string>()));
  }
  return p;
}

json laurent_to_json(const LaurentPoly& p) {
  json arr = json::array();
  for (auto& [e, c] : p.terms) {
    json t;
    t[std::string(1, p.var)] = e;
    t["c"] = c.str();
    arr.push_back(t);
  }
  json out;
  out["terms"] = arr;
  out["var"] = std::string(1, p.var);
  out["half_exponents"] = p.half_exponents;
  return out;
}

json cyclotomic_to_json(const CyclotomicPoly& p) {
  json arr = json::array();
  for (auto& [ea, elt] : p.terms) {
    json coeffs = json::array();
    for (auto& c : elt) coeffs.push_back(c.str());
    arr.push_back({{"a", ea}, {"c", coeffs}});
  }
  json out;
  out["order"] = p.order;
  out["terms"] = arr;
  return out;
}

json invariant_record(const BraidWord& b, int N, const Caps& caps) {
  auto t0 = std::chrono::steady_clock::now();
  json out;
  out["braid"] = braid_to_string(b);
  out["strands"] = b.strands;
  out["N"] = N;

  GradedResult g = gamma_invariant(b, N, caps);
  out["gamma"] = poly_to_json(g.gamma);
  out["jones"] = laurent_to_json(specialize_jones(g.gamma, N));

  CyclotomicPoly ado = specialize_ado(g.gamma, N);
  out["ado"] = cyclotomic_to_json(ado);
  CyclotomicRing ring(2 * N);
  if (auto xform = ado.rewrite_in_x(ring)) out["ado"]["x_form"] = laurent_to_json(*xform);

  if (N == 2) {
    if (closure_components(b) == 1) {
      out["alexander"] = laurent_to_json(alexander_fast(b, caps));
    } else {
      LaurentPoly a = alexander_fast(b, caps);
      out["alexander"] = laurent_to_json(a);
      out["alexander"]["note"] =
          "multi-component closure: normalisation carries half-integer exponents";
    }
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out["timings"] = {{"total_sec", dt}, {"gamma_sec", g.elapsed_sec}};
  out["points"] = int(g.per_point.size());
  return out;
}

}  // namespace knotint
