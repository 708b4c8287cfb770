#include "sorder/json_io.hpp"

#include "sorder/errors.hpp"

namespace sorder::algebra {

nlohmann::json poly_to_json(const OrderedPoly& poly) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, c] : poly.terms()) {
    terms.push_back({{"p", key.p},
                     {"q", key.q},
                     {"re", c.real()},
                     {"im", c.imag()}});
  }
  return {{"order", poly.order().s}, {"terms", std::move(terms)}};
}

OrderedPoly poly_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("order") || !j.contains("terms"))
      throw error("polynomial JSON must carry \"order\" and \"terms\"");
    OrderedPoly poly(OrderParameter{j.at("order").get<double>()});
    for (const auto& t : j.at("terms")) {
      const int p = t.at("p").get<int>();
      const int q = t.at("q").get<int>();
      poly.add(p, q, {t.at("re").get<double>(), t.at("im").get<double>()});
    }
    return poly;
  } catch (const nlohmann::json::exception& e) {
    throw error(std::string("malformed polynomial JSON: ") + e.what());
  }
}

}  // namespace sorder::algebra
