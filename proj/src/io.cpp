#include "liecat/io.hpp"

#include "liecat/parse.hpp"

namespace liecat {

nlohmann::json terms_json(const LiePoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [k, c] : p.terms()) {
    out.push_back({{"word", p.table()->spelling(k)}, {"bracketing", p.table()->bracketing(k)}, {"coeff", c.to_string()}});
  }
  return out;
}

nlohmann::json assignment_json(std::span<const LiePoly> images, const TablePtr& source) {
  nlohmann::json out = nlohmann::json::object();
  for (std::size_t g = 0; g < images.size(); ++g) out[source->generator_names().at(g)] = format_expr(images[g]);
  return out;
}

nlohmann::json basis_json(const BasisTable& table) {
  nlohmann::json degrees = nlohmann::json::array();
  for (std::size_t d = 1; d <= table.cap(); ++d) {
    nlohmann::json words = nlohmann::json::array();
    for (const auto& hw : table.degree(d))
      words.push_back({{"index", hw.index}, {"word", table.spelling(hw.index)}, {"bracketing", table.bracketing(hw.index)}});
    degrees.push_back({{"degree", d}, {"dimension", words.size()}, {"words", std::move(words)}});
  }
  return {{"generators", table.generator_names()}, {"max_degree", table.cap()}, {"size", table.size()},
          {"degrees", std::move(degrees)}};
}

nlohmann::json point_json(const Point& nu) {
  return {{"domain", nu.domain.table()->generator_names()},
          {"h", nu.h->generator_names()},
          {"assignment", assignment_json(nu.images, nu.domain.table())}};
}

}  // namespace liecat
