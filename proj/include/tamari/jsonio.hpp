#pragma once

#include <json.hpp>

#include "tamari/bialg.hpp"
#include "tamari/colored.hpp"
#include "tamari/tree.hpp"

namespace tamari {

inline nlohmann::json tree_json(const Tree& t) { return {{"dyck", t.dyck()}}; }

inline Tree tree_from_json(const nlohmann::json& j) {
  return Tree::from_dyck(j.at("dyck").get<std::string>());
}

inline nlohmann::json tou_json(const TreeOrUnit& x) {
  if (!x) return {{"unit", true}};
  return tree_json(*x);
}

inline nlohmann::json colored_json(const ColoredTree& t,
                                   std::span<const std::string> names) {
  nlohmann::json colors = nlohmann::json::array();
  for (int c : t.colors)
    colors.push_back(c < static_cast<int>(names.size()) ? nlohmann::json(names[c])
                                                        : nlohmann::json(c));
  return {{"dyck", t.shape.dyck()}, {"colors", colors}};
}

/// LinComb as a list of {"basis": ..., "coeff": "<decimal>"} in basis order.
template <class B, class Enc>
nlohmann::json lincomb_json(const LinComb<B>& x, Enc&& encode_basis) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [b, c] : x.terms())
    out.push_back({{"basis", encode_basis(b)}, {"coeff", c.str()}});
  return out;
}

}  // namespace tamari
