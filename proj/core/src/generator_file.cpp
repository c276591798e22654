#include "starblock/generator_file.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace starblock::perm {

using nlohmann::json;

GeneratorFile parse_generator_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GeneratorFileError(std::string("generator file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw GeneratorFileError("generator file must hold a JSON object");
  if (doc.contains("format") && doc["format"] != kGeneratorFormat) {
    throw GeneratorFileError("unsupported generator format " + doc["format"].dump());
  }
  GeneratorFile out;
  if (!doc.contains("degree") || !doc["degree"].is_number_unsigned()) {
    throw GeneratorFileError("missing or invalid 'degree'");
  }
  out.degree = doc["degree"].get<std::size_t>();
  if (out.degree == 0) throw GeneratorFileError("'degree' must be positive");
  if (doc.contains("name")) out.name = doc["name"].get<std::string>();
  if (doc.contains("expected_order")) {
    const auto& eo = doc["expected_order"];
    if (!eo.is_string()) throw GeneratorFileError("'expected_order' must be a decimal string");
    try {
      out.expected_order = arith::parse_natural(eo.get<std::string>());
    } catch (const arith::ArithError& e) {
      throw GeneratorFileError(e.what());
    }
  }
  if (!doc.contains("generators") || !doc["generators"].is_array() || doc["generators"].empty()) {
    throw GeneratorFileError("'generators' must be a nonempty list");
  }
  std::size_t index = 0;
  for (const auto& g : doc["generators"]) {
    ++index;
    if (!g.is_array() || g.size() != out.degree) {
      throw GeneratorFileError("generator " + std::to_string(index) + " has wrong length");
    }
    std::vector<Point> img;
    for (const auto& v : g) {
      if (!v.is_number_unsigned() || v.get<std::size_t>() < 1 || v.get<std::size_t>() > out.degree) {
        throw GeneratorFileError("generator " + std::to_string(index) + " has an image out of range");
      }
      img.push_back(static_cast<Point>(v.get<std::size_t>() - 1));
    }
    try {
      out.generators.emplace_back(std::move(img));
    } catch (const PermError&) {
      throw GeneratorFileError("generator " + std::to_string(index) + " is not a permutation");
    }
  }
  return out;
}

std::string write_generator_file(const GeneratorFile& file) {
  json doc;
  doc["format"] = kGeneratorFormat;
  if (!file.name.empty()) doc["name"] = file.name;
  doc["degree"] = file.degree;
  if (file.expected_order) doc["expected_order"] = arith::to_decimal(*file.expected_order);
  json gens = json::array();
  for (const auto& g : file.generators) {
    json row = json::array();
    for (Point p : g.images()) row.push_back(p + 1);
    gens.push_back(std::move(row));
  }
  doc["generators"] = std::move(gens);
  return doc.dump();
}

GeneratorFile read_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GeneratorFileError("cannot open generator file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_generator_file(ss.str());
}

PermGroup load_generators(const std::string& path) {
  GeneratorFile f = read_generator_file(path);
  PermGroup g(f.degree, std::move(f.generators));
  if (f.expected_order && g.order().value() != *f.expected_order) {
    throw GeneratorFileError("chain order " + arith::to_decimal(g.order().value()) +
                             " differs from expected_order " + arith::to_decimal(*f.expected_order));
  }
  return g;
}

}  // namespace starblock::perm
