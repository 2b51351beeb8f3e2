#include "carpets/json_io.hpp"

#include <fstream>

#include "carpets/errors.hpp"

namespace carpets {

namespace {

Number number_from_json(const nlohmann::json &j) {
  if (j.is_string())
    return Number(parse_fraction(j.get<std::string>()));
  if (j.is_number())
    return Number(j.get<double>());
  throw ValidationError("expected a number or a \"p/q\" string");
}

nlohmann::json number_to_json(const Number &n) {
  if (n.exact)
    return std::to_string(n.exact->num) + "/" + std::to_string(n.exact->den);
  return n.value;
}

Word word_from_json(const nlohmann::json &j) {
  if (!j.is_array())
    throw ValidationError("expected an array of letters");
  Word w;
  for (const auto &l : j) {
    if (!l.is_number_integer())
      throw ValidationError("letters must be integers");
    w.letters.push_back(l.get<int>());
  }
  return w;
}

nlohmann::json load_json(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError("cannot open file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception &e) {
    throw ValidationError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

} // namespace

DiagonalIFS carpet_from_json(const nlohmann::json &j) {
  if (!j.is_object() || !j.contains("maps") || !j["maps"].is_array())
    throw ValidationError("carpet JSON needs a \"maps\" array");
  DiagonalIFS ifs;
  for (const auto &m : j["maps"]) {
    if (!m.is_object())
      throw ValidationError("each map must be an object");
    AffineMap map;
    map.a = number_from_json(m.at("a"));
    map.b = number_from_json(m.at("b"));
    map.dx = number_from_json(m.at("dx"));
    map.dy = number_from_json(m.at("dy"));
    ifs.maps.push_back(map);
  }
  return ifs;
}

nlohmann::json carpet_to_json(const DiagonalIFS &ifs) {
  nlohmann::json maps = nlohmann::json::array();
  for (const auto &m : ifs.maps)
    maps.push_back({{"a", number_to_json(m.a)},
                    {"b", number_to_json(m.b)},
                    {"dx", number_to_json(m.dx)},
                    {"dy", number_to_json(m.dy)}});
  return {{"maps", maps}};
}

SequenceSpec sequence_from_json(const nlohmann::json &j) {
  if (!j.is_object())
    throw ValidationError("sequence JSON must be an object");
  if (j.contains("blocks")) {
    std::vector<Block> blocks;
    for (const auto &b : j["blocks"]) {
      Block blk;
      blk.word = word_from_json(b.at("word"));
      const auto &rep = b.at("repeat");
      if (rep.is_string() && rep.get<std::string>() == "tail")
        blk.tail = true;
      else if (rep.is_number_integer())
        blk.repeat = rep.get<int>();
      else
        throw ValidationError("block repeat must be an integer or \"tail\"");
      blocks.push_back(std::move(blk));
    }
    return SequenceSpec::block_program(blocks);
  }
  if (j.contains("period"))
    return SequenceSpec::periodic(
        j.contains("preperiod") ? word_from_json(j["preperiod"]) : Word{},
        word_from_json(j["period"]));
  throw ValidationError("sequence JSON needs \"period\" or \"blocks\"");
}

nlohmann::json sequence_to_json(const SequenceSpec &spec) {
  return {{"preperiod", spec.preperiod.letters}, {"period", spec.period.letters}};
}

nlohmann::json classification_to_json(const ClassificationReport &rep) {
  return {{"schema", 1},
          {"kind", to_string(rep.kind)},
          {"interiors_disjoint", rep.interiors_disjoint},
          {"columns_aligned_or_disjoint_axis1", rep.columns_aligned_or_disjoint_axis1},
          {"columns_aligned_or_disjoint_axis2", rep.columns_aligned_or_disjoint_axis2},
          {"strict_domination", rep.strict_domination},
          {"proj_ssc_axis1", rep.proj_ssc_axis1},
          {"proj_ssc_axis2", rep.proj_ssc_axis2}};
}

nlohmann::json report_to_json(const DimensionReport &rep) {
  nlohmann::json j{{"schema", 1},
                   {"kind", to_string(rep.kind)},
                   {"dim_H", rep.dim_H},
                   {"dim_B", rep.dim_B},
                   {"dim_A", rep.dim_A},
                   {"dim_L", rep.dim_L},
                   {"dim_B_proj", {rep.dim_B_proj[0], rep.dim_B_proj[1]}},
                   {"t_class", {rep.t_class[0], rep.t_class[1]}},
                   {"optimizer_p", rep.optimizer_p}};
  if (rep.d_direction[0] >= 0.0 || rep.d_direction[1] >= 0.0) {
    j["d_direction"] = {rep.d_direction[0], rep.d_direction[1]};
    j["assouad_candidate"] = {rep.assouad_candidate[0], rep.assouad_candidate[1]};
    j["optimizer_p_direction"] = {rep.optimizer_p_direction[0],
                                  rep.optimizer_p_direction[1]};
  }
  if (rep.p0 >= 0.0)
    j["p0"] = rep.p0;
  nlohmann::json eqs = nlohmann::json::array();
  for (const auto &e : rep.equations)
    eqs.push_back({{"label", e.label},
                   {"value", e.value},
                   {"residual", e.residual},
                   {"bracket", {e.bracket_lo, e.bracket_hi}},
                   {"iterations", e.iterations}});
  j["equations"] = eqs;
  return j;
}

DiagonalIFS load_carpet(const std::string &path) { return carpet_from_json(load_json(path)); }

SequenceSpec load_sequence(const std::string &path) {
  return sequence_from_json(load_json(path));
}

} // namespace carpets
