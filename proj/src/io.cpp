#include "ddsim/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "ddsim/errors.hpp"

namespace ddsim::io {

using nlohmann::json;

namespace {

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

json rows_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string axis_name(Axis a) { return a == Axis::Row ? "row" : "column"; }

}  // namespace

RealMatrix parse_matrix_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(std::string("invalid JSON: ") + e.what(), line, column);
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    throw ParseError("expected an object with a \"rows\" array");
  }
  const auto& rows = doc["rows"];
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() || doc["n"].get<long>() != static_cast<long>(rows.size())) {
      throw ParseError("\"n\" does not match the number of rows");
    }
  }
  std::vector<std::vector<double>> values;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array()) throw ParseError("row " + std::to_string(i) + " is not an array");
    std::vector<double> row;
    for (const auto& v : rows[i]) {
      if (!v.is_number()) {
        throw ParseError("row " + std::to_string(i) + " contains a non-numeric entry");
      }
      row.push_back(v.get<double>());
    }
    values.push_back(std::move(row));
  }
  try {
    return RealMatrix::from_rows(values);
  } catch (const InvalidMatrix& e) {
    throw ParseError(e.what());
  }
}

RealMatrix parse_matrix_csv(std::string_view text) {
  std::vector<std::vector<double>> values;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (trim(line).empty()) {
      if (end == text.size()) break;
      // Only trailing blank lines are tolerated.
      if (trim(text.substr(std::min(pos, text.size()))).empty()) break;
      throw ParseError("blank line inside matrix", line_no, 1);
    }
    std::vector<double> row;
    std::size_t field_start = 0;
    while (true) {
      auto comma = line.find(',', field_start);
      const std::string_view raw =
          line.substr(field_start, comma == std::string_view::npos ? line.npos : comma - field_start);
      const std::string_view field = trim(raw);
      const auto lead = raw.find_first_not_of(" \t");
      const int column =
          static_cast<int>(field_start + (lead == std::string_view::npos ? 0 : lead) + 1);
      double v = 0.0;
      const char* first = field.data();
      const char* last = field.data() + field.size();
      if (!field.empty() && *first == '+') ++first;
      const auto [ptr, ec] = std::from_chars(first, last, v);
      if (field.empty() || ec != std::errc() || ptr != last) {
        throw ParseError("invalid number '" + std::string(field) + "'", line_no, column);
      }
      row.push_back(v);
      if (comma == std::string_view::npos) break;
      field_start = comma + 1;
    }
    values.push_back(std::move(row));
    if (end == text.size()) break;
  }
  if (values.empty()) throw ParseError("empty matrix");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].size() != values.size()) {
      throw ParseError("expected " + std::to_string(values.size()) + " entries, found " +
                           std::to_string(values[i].size()),
                       static_cast<int>(i + 1), 1);
    }
  }
  try {
    return RealMatrix::from_rows(values);
  } catch (const InvalidMatrix& e) {
    throw ParseError(e.what());
  }
}

MatrixFormat format_for_path(const std::string& path) {
  std::string lower = path;
  std::transform(lower.begin(), lower.end(), lower.begin(), ::tolower);
  return lower.size() >= 4 && lower.compare(lower.size() - 4, 4, ".csv") == 0 ? MatrixFormat::Csv
                                                                              : MatrixFormat::Json;
}

RealMatrix read_matrix_file(const std::string& path, std::optional<MatrixFormat> format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  return format.value_or(format_for_path(path)) == MatrixFormat::Csv ? parse_matrix_csv(text)
                                                                     : parse_matrix_json(text);
}

json to_json(const RealMatrix& m) { return rows_json(m.eigen()); }

json to_json(const SplitComplexMatrix& m) {
  return {{"re", rows_json(m.re.eigen())}, {"im", rows_json(m.im.eigen())}};
}

json to_json(const DominanceReport& r) {
  return {{"axis", axis_name(r.axis)},
          {"strict", r.strict},
          {"non_strict", r.non_strict},
          {"tol", r.tol},
          {"margins", r.margins}};
}

json to_json(const EigenStructure& es) {
  json real = json::array(), pairs = json::array();
  for (const auto& e : es.real_eigs) {
    real.push_back({{"value", e.value}, {"alg_mult", e.alg_mult}, {"geo_mult", e.geo_mult}});
  }
  for (const auto& p : es.complex_pairs) {
    pairs.push_back({{"alpha", p.alpha},
                     {"beta", p.beta},
                     {"alg_mult", p.alg_mult},
                     {"geo_mult", p.geo_mult}});
  }
  return {{"n", es.n}, {"real_eigs", real}, {"complex_pairs", pairs}};
}

json to_json(const DDClassification& c) {
  json evidence = json::array();
  for (const auto& e : c.evidence) {
    json item = {{"kind", e.is_pair ? "complex_pair" : "real"},
                 {"alg_mult", e.alg_mult},
                 {"geo_mult", e.geo_mult},
                 {"case", std::string(to_string(e.which))},
                 {"satisfied", e.satisfied},
                 {"condition", e.condition},
                 {"margin", e.margin}};
    if (e.is_pair) {
      item["alpha"] = e.re;
      item["beta"] = e.im;
    } else {
      item["value"] = e.re;
    }
    evidence.push_back(std::move(item));
  }
  json borderline = json::array();
  for (const auto& p : c.borderline_pairs) {
    borderline.push_back({{"alpha", p.alpha}, {"beta", p.beta}, {"alg_mult", p.alg_mult},
                          {"geo_mult", p.geo_mult}});
  }
  return {{"verdict", std::string(to_string(c.verdict))},
          {"evidence", evidence},
          {"borderline_pairs", borderline},
          {"eigenstructure", to_json(c.eigenstructure)}};
}

json to_json(const RealJordanForm& jf) {
  json blocks = json::array();
  for (const auto& b : jf.blocks) {
    if (const auto* rb = std::get_if<RealJordanBlock>(&b)) {
      blocks.push_back({{"kind", "real"}, {"lambda", rb->lambda}, {"size", rb->size}});
    } else {
      const auto& cb = std::get<ComplexJordanBlock>(b);
      blocks.push_back({{"kind", "complex"},
                        {"alpha", cb.alpha},
                        {"beta", cb.beta},
                        {"chain_length", cb.chain_length}});
    }
  }
  return {{"J", to_json(jf.J)}, {"P", to_json(jf.P)}, {"blocks", blocks},
          {"residual", jf.residual}};
}

json to_json(const SimilarityCertificate& c) {
  return {{"mode", "real"},
          {"target", c.target == Target::Strict ? "strict" : "nonstrict"},
          {"P", to_json(c.P)},
          {"B", to_json(c.B)},
          {"residual", c.residual},
          {"dominance", to_json(c.dominance)}};
}

json to_json(const ComplexSimilarityCertificate& c) {
  return {{"mode", "complex"},
          {"target", "strict"},
          {"P", to_json(c.P)},
          {"B", to_json(c.B)},
          {"residual", c.residual},
          {"dominance", to_json(c.dominance)}};
}

json to_json(const ScalingCertificate& c) {
  return {{"K", to_json(c.K)},
          {"B", to_json(c.B)},
          {"d", std::vector<double>(c.d.data(), c.d.data() + c.d.size())},
          {"dominance", to_json(c.dominance)},
          {"diagonal_sign", std::string(to_string(c.diagonal_sign))}};
}

json to_json(const RandomSearchResult& r) {
  json out = {{"found", r.found}, {"best_margin", r.best_margin}, {"samples", r.samples}};
  if (r.witness) out["witness"] = to_json(*r.witness);
  return out;
}

json to_json(const std::vector<GershgorinDisc>& discs) {
  json out = json::array();
  for (const auto& d : discs) {
    out.push_back({{"index", d.index},
                   {"axis", axis_name(d.axis)},
                   {"center", d.center},
                   {"radius", d.radius}});
  }
  return out;
}

RealMatrix matrix_from_json(const json& rows) {
  return RealMatrix::from_rows(rows.get<std::vector<std::vector<double>>>());
}

SplitComplexMatrix complex_matrix_from_json(const json& j) {
  return {matrix_from_json(j.at("re")), matrix_from_json(j.at("im"))};
}

}  // namespace ddsim::io
