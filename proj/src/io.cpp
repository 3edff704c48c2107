#include "socle/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace socle {

Json partition_to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("partition must be a JSON array");
  try {
    return Partition(j.get<std::vector<int>>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad partition: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad partition: ") + e.what());
  }
}

Json tableau_to_json(const SkewTableau& t) {
  const auto alpha = t.alpha();
  if (!alpha) throw InvalidTableau("content is not of partition type");
  Json j;
  j["alpha"] = partition_to_json(*alpha);
  j["beta"] = partition_to_json(t.beta());
  j["gamma"] = partition_to_json(t.gamma());
  j["grid"] = t.rows();
  return j;
}

SkewTableau tableau_from_json(const Json& j) {
  try {
    const Partition beta = partition_from_json(j.at("beta"));
    const Partition gamma = partition_from_json(j.at("gamma"));
    SkewTableau t(beta, gamma, j.at("grid").get<std::vector<std::vector<int>>>());
    if (j.contains("alpha")) {
      const Partition alpha = partition_from_json(j.at("alpha"));
      const auto content = t.alpha();
      if (!content || !(*content == alpha)) throw InvalidTableau("entries do not match alpha");
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidTableau(std::string("bad tableau JSON: ") + e.what());
  }
}

Json embedding_to_json(const Embedding& x) {
  const auto& st = x.ambient().standard_type();
  if (!st) throw std::invalid_argument("embedding JSON needs a standard ambient module");
  Json gens = Json::array();
  for (std::size_t r = 0; r < x.sub().dim(); ++r) {
    Json g = Json::array();
    for (std::size_t j = 1; j <= st->length(); ++j) {
      std::vector<int> coeffs;
      for (int i = 0; i < (*st)[j]; ++i) coeffs.push_back(x.sub().basis()(r, basis_index(*st, j, i)));
      g.push_back(coeffs);
    }
    gens.push_back(g);
  }
  Json j;
  j["prime"] = x.prime();
  j["beta"] = partition_to_json(*st);
  j["generators"] = gens;
  return j;
}

Embedding embedding_from_json(const Json& j) {
  try {
    const int p = j.at("prime").get<int>();
    if (!supported_prime(p)) throw ParseError("unsupported prime " + std::to_string(p));
    const Partition beta = partition_from_json(j.at("beta"));
    return from_generators(p, beta, j.at("generators").get<GeneratorData>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad embedding JSON: ") + e.what());
  }
}

Json hom_to_json(const HomMatrix& h) {
  Json rows = Json::array();
  for (int l = 0; l <= h.L(); ++l) {
    Json row = Json::array();
    for (int m = 0; m <= h.M(); ++m) row.push_back(m < l ? Json(nullptr) : Json(h.at(l, m)));
    rows.push_back(row);
  }
  Json j;
  j["L"] = h.L();
  j["M"] = h.M();
  j["h"] = rows;
  return j;
}

HomMatrix hom_from_json(const Json& j) {
  try {
    HomMatrix h(j.at("L").get<int>(), j.at("M").get<int>());
    const Json& rows = j.at("h");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(h.L() + 1))
      throw ParseError("h needs L+1 rows");
    for (int l = 0; l <= h.L(); ++l) {
      const Json& row = rows[static_cast<std::size_t>(l)];
      if (!row.is_array() || row.size() != static_cast<std::size_t>(h.M() + 1)) throw ParseError("h row has wrong length");
      for (int m = l; m <= h.M(); ++m) h.set(l, m, row[static_cast<std::size_t>(m)].get<int>());
    }
    return h;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad Hom-matrix JSON: ") + e.what());
  } catch (const BadIndex& e) {
    throw ParseError(std::string("bad Hom-matrix JSON: ") + e.what());
  }
}

Json switch_state_to_json(const SwitchState& st) {
  Json values = Json::array(), owners = Json::array();
  for (const auto& row : st.grid) {
    Json v = Json::array(), o = Json::array();
    for (const auto& c : row) {
      v.push_back(c.value);
      o.push_back(std::string(1, static_cast<char>(c.owner)));
    }
    values.push_back(v);
    owners.push_back(o);
  }
  Json j;
  j["beta"] = partition_to_json(st.beta);
  j["grid"] = values;
  j["owner"] = owners;
  return j;
}

Json swap_to_json(const SwapRecord& s) {
  Json j;
  j["s_box"] = {s.s_box.row, s.s_box.col};
  j["t_box"] = {s.t_box.row, s.t_box.col};
  j["s_value"] = s.s_value;
  j["t_value"] = s.t_value;
  return j;
}

namespace {

std::string cell_text(int v) {
  if (v == 0) return ".";
  if (v < 10) return std::to_string(v);
  return "[" + std::to_string(v) + "]";
}

}  // namespace

std::vector<std::string> render_tableau(const SkewTableau& t) {
  std::vector<std::string> out;
  for (const auto& row : t.rows()) {
    std::string line;
    for (int v : row) line += cell_text(v);
    out.push_back(line);
  }
  if (out.empty()) out.push_back("()");
  return out;
}

std::vector<std::string> render_hom(const HomMatrix& h) {
  std::vector<std::string> out;
  std::size_t width = 1;
  for (int l = 0; l <= h.L(); ++l)
    for (int m = l; m <= h.M(); ++m) width = std::max(width, std::to_string(h.at(l, m)).size());
  for (int l = 0; l <= h.L(); ++l) {
    std::string line;
    for (int m = 0; m <= h.M(); ++m) {
      std::string cell = m < l ? "-" : std::to_string(h.at(l, m));
      line += std::string(width + 1 - cell.size(), ' ') + cell;
    }
    out.push_back(line);
  }
  return out;
}

std::vector<std::string> render_switch_state(const SwitchState& st) {
  std::vector<std::string> out;
  for (const auto& row : st.grid) {
    std::string line;
    for (const auto& c : row) {
      const std::string v = c.value < 10 ? std::to_string(c.value) : "[" + std::to_string(c.value) + "]";
      line += (c.owner == Owner::S ? std::string("s") : std::string("t")) + v + " ";
    }
    if (!line.empty()) line.pop_back();
    out.push_back(line);
  }
  return out;
}

std::string side_by_side(const std::vector<std::pair<std::string, std::vector<std::string>>>& blocks) {
  std::vector<std::size_t> widths;
  std::size_t height = 0;
  for (const auto& [title, lines] : blocks) {
    std::size_t w = title.size();
    for (const auto& l : lines) w = std::max(w, l.size());
    widths.push_back(w);
    height = std::max(height, lines.size());
  }
  std::ostringstream os;
  auto emit = [&](auto&& pick) {
    std::string line;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      std::string cell = pick(b);
      if (b + 1 < blocks.size()) cell += std::string(widths[b] - cell.size() + 3, ' ');
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  };
  emit([&](std::size_t b) { return blocks[b].first; });
  for (std::size_t r = 0; r < height; ++r)
    emit([&](std::size_t b) { return r < blocks[b].second.size() ? blocks[b].second[r] : std::string(); });
  return os.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace socle
