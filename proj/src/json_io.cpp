#include "qnc/json_io.hpp"

namespace qnc {

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
  return v.get_str();
}

json vec_to_json(const IntVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(int_to_json(x));
  return a;
}

json mat_to_json(const IntMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

json support_to_json(const std::vector<std::size_t>& support) {
  json a = json::array();
  for (std::size_t s : support) a.push_back(s + 1);
  return a;
}

}  // namespace

json to_json(const CenterDescription& d) {
  json gens = json::array();
  for (const auto& g : d.generators)
    gens.push_back({{"n", vec_to_json(g.n)},
                    {"rendered", g.rendered},
                    {"z_exponents", vec_to_json(g.z_exps)}});
  return {{"schema", 1},
          {"dimension", d.dimension},
          {"support", support_to_json(d.support)},
          {"generators", gens}};
}

json to_json(const WCenterDescription& d) {
  json gens = json::array();
  for (const auto& g : d.generators)
    gens.push_back({{"n", vec_to_json(g.n)},
                    {"rendered", g.rendered},
                    {"delta_exponents", vec_to_json(g.delta_exps)}});
  return {{"schema", 1},
          {"dimension", d.dimension},
          {"support", support_to_json(d.support)},
          {"generators", gens}};
}

json to_json(const SchubertCenter& d) {
  json gens = json::array();
  for (const auto& g : d.generators)
    gens.push_back({{"n", vec_to_json(g.n)},
                    {"rendered", g.rendered},
                    {"window_exponents", vec_to_json(g.window_exps)},
                    {"weight", vec_to_json(g.weight.coords)}});
  json window = json::array();
  for (std::size_t p : d.window_positions) window.push_back(p + 1);
  return {{"schema", 1},
          {"prefix_length", d.prefix_len},
          {"window_positions", window},
          {"support", support_to_json(d.support)},
          {"dimension", d.dimension},
          {"generators", gens}};
}

json to_json(const std::vector<CovariantDatum>& d, const RootSystem& rs) {
  (void)rs;
  json items = json::array();
  for (const auto& c : d)
    items.push_back({{"s", c.s + 1},
                     {"weight", vec_to_json(c.weight.coords)},
                     {"z_exponents", vec_to_json(c.z_exps)}});
  return {{"schema", 1}, {"covariants", items}};
}

json to_json(const PIDegreeReport& r) {
  return {{"schema", 1},
          {"m", int_to_json(r.m)},
          {"divisors", vec_to_json(r.divisors)},
          {"block_contributions", vec_to_json(r.block_contributions)},
          {"h", int_to_json(r.h)},
          {"pi_degree", int_to_json(r.pi_degree)},
          {"warnings", r.warnings}};
}

json to_json(const BlockConfig& cfg) {
  return {{"a", cfg.a}, {"ea", cfg.ea}, {"b", cfg.b},
          {"eb", cfg.eb}, {"c", cfg.c}, {"ec", cfg.ec}};
}

}  // namespace qnc
