#include "crysalg/crystal_json.hpp"

#include <algorithm>
#include <sstream>

namespace crysalg {

static Json extint_to_json(ExtInt v) {
  if (!v.finite()) return "-inf";
  return v.value();
}

static ExtInt extint_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "-inf") return ExtInt::minus_inf();
    throw std::invalid_argument("crystal_from_json: bad eps/phi value");
  }
  if (!j.is_number_integer()) throw std::invalid_argument("crystal_from_json: bad eps/phi value");
  return ExtInt(j.get<std::int64_t>());
}

Json crystal_to_json(const Crystal& c) {
  Json j;
  j["cartan"]["index_set"] = c.cartan.index_set;
  j["cartan"]["matrix"] = c.cartan.pairing;

  std::vector<int> order(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return c.ids[a] < c.ids[b]; });

  j["nodes"] = Json::array();
  for (int k : order) j["nodes"].push_back({{"id", c.ids[k]}, {"wt", c.wt[k].coords}});

  j["edges"] = Json::array();
  for (std::size_t i = 0; i < c.ncolors(); ++i)
    for (int k : order)
      if (int v = c.f(i, k); v >= 0)
        j["edges"].push_back(
            {{"i", c.cartan.index_set[i]}, {"from", c.ids[k]}, {"to", c.ids[v]}});

  j["seminormal"] = c.seminormal;
  if (!c.seminormal) {
    j["eps_phi"] = Json::array();
    for (int k : order)
      for (std::size_t i = 0; i < c.ncolors(); ++i)
        j["eps_phi"].push_back({{"node", c.ids[k]},
                                {"i", c.cartan.index_set[i]},
                                {"eps", extint_to_json(c.eps[k][i])},
                                {"phi", extint_to_json(c.phi[k][i])}});
  }
  return j;
}

Crystal crystal_from_json(const Json& j) {
  Crystal c;
  try {
    c.cartan.index_set = j.at("cartan").at("index_set").get<std::vector<std::string>>();
    c.cartan.pairing =
        j.at("cartan").at("matrix").get<std::vector<std::vector<std::int64_t>>>();
    const std::size_t r = c.cartan.rank();
    c.fedge.resize(r);
    c.eedge.resize(r);
    std::vector<ExtInt> zeros(r, ExtInt(0));
    for (const auto& node : j.at("nodes")) {
      Weight w(node.at("wt").get<std::vector<std::int64_t>>());
      if (w.rank() != r) throw std::invalid_argument("crystal_from_json: bad weight length");
      if (c.index_of(node.at("id").get<std::string>()) >= 0)
        throw std::invalid_argument("crystal_from_json: duplicate node id");
      c.add_node(node.at("id").get<std::string>(), std::move(w), zeros, zeros);
    }
    for (const auto& edge : j.at("edges")) {
      const int color = c.cartan.color_index(edge.at("i").get<std::string>());
      const int from = c.index_of(edge.at("from").get<std::string>());
      const int to = c.index_of(edge.at("to").get<std::string>());
      if (color < 0 || from < 0 || to < 0)
        throw std::invalid_argument("crystal_from_json: edge references unknown node or color");
      if (c.fedge[color][from] >= 0 || c.eedge[color][to] >= 0)
        throw std::invalid_argument("crystal_from_json: duplicate edge endpoint");
      c.add_edge(color, from, to);
    }
    c.seminormal = j.value("seminormal", true);
    if (j.contains("eps_phi")) {
      for (const auto& row : j.at("eps_phi")) {
        const int node = c.index_of(row.at("node").get<std::string>());
        const int color = c.cartan.color_index(row.at("i").get<std::string>());
        if (node < 0 || color < 0)
          throw std::invalid_argument("crystal_from_json: eps_phi references unknown node");
        c.eps[node][color] = extint_from_json(row.at("eps"));
        c.phi[node][color] = extint_from_json(row.at("phi"));
      }
    } else if (c.seminormal) {
      c.make_seminormal();
    } else {
      throw std::invalid_argument("crystal_from_json: non-seminormal crystal needs eps_phi");
    }
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("crystal_from_json: ") + e.what());
  }
  return c;
}

std::string crystal_to_dot(const Crystal& c) {
  std::vector<int> order(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return c.ids[a] < c.ids[b]; });
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (int k : order)
    os << "  \"" << c.ids[k] << "\" [label=\"" << c.ids[k] << " | " << c.wt[k].str() << "\"];\n";
  for (std::size_t i = 0; i < c.ncolors(); ++i)
    for (int k : order)
      if (int v = c.f(i, k); v >= 0)
        os << "  \"" << c.ids[k] << "\" -> \"" << c.ids[v] << "\" [label=\""
           << c.cartan.index_set[i] << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace crysalg
