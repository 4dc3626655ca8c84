#include "csf/json_io.hpp"

#include "csf/errors.hpp"

namespace csf {

Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer string '" + j.get<std::string>() + "'");
    return z;
  }
  throw ParseError("coefficient must be an integer or a decimal string");
}

Json partition_to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  if (j.is_string()) return parse_partition(j.get<std::string>());
  if (!j.is_array()) throw ParseError("partition must be a list or a string");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long>() < 1) throw ParseError("partition parts must be positive integers");
    parts.push_back(v.get<int>());
  }
  return Partition::from_sequence(parts);
}

Json expansion_to_json(const StarExpansion& x) {
  Json coeffs = Json::array();
  for (const auto& [p, c] : x.coeffs()) coeffs.push_back({{"partition", partition_to_json(p)}, {"c", integer_to_json(c)}});
  return Json{{"n", x.degree()}, {"coeffs", std::move(coeffs)}};
}

StarExpansion expansion_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("coeffs")) throw ParseError("expansion JSON needs a \"coeffs\" list");
    int n = -1;
    if (j.contains("n")) n = j.at("n").get<int>();
    std::vector<std::pair<Partition, Integer>> terms;
    for (const auto& term : j.at("coeffs")) {
      terms.emplace_back(partition_from_json(term.at("partition")), integer_from_json(term.at("c")));
    }
    if (n < 0) {
      if (terms.empty()) throw ParseError("expansion JSON without \"n\" and without terms");
      n = terms.front().first.size();
    }
    StarExpansion out(n);
    for (const auto& [p, c] : terms) out.add(p, c);
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed expansion JSON: ") + e.what());
  } catch (const SizeMismatchError& e) {
    throw ParseError(std::string("malformed expansion JSON: ") + e.what());
  }
}

StarExpansion parse_expansion(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return expansion_from_json(j);
}

Json report_to_json(const StructuralReport& rep) {
  Json kr = Json::array();
  for (const auto& c : rep.kr_candidates) kr.push_back({{"k", c.k}, {"r", c.r}});
  return Json{{"n", rep.n},
              {"cycle_size", rep.cycle_size},
              {"is_pure_cycle", rep.is_pure_cycle},
              {"longest_hook_m", rep.longest_hook_m},
              {"kr_candidates", std::move(kr)},
              {"leaf_count_candidates", rep.leaf_count_candidates},
              {"is_cuttlefish", rep.is_cuttlefish},
              {"leading_partition", partition_to_json(rep.leading)}};
}

}  // namespace csf
