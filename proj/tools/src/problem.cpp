#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "vfkit/parse.hpp"
#include "vfkit_cli/cli.hpp"

namespace vfkit::cli {

namespace {

using nlohmann::json;

std::vector<std::string> string_list(const json& doc, const char* key) {
  std::vector<std::string> out;
  if (!doc.contains(key)) return out;
  const json& list = doc.at(key);
  if (!list.is_array()) throw InputError(std::string("/") + key + ": expected an array of names");
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (!list[i].is_string()) {
      throw InputError("/" + std::string(key) + "/" + std::to_string(i) + ": expected a string");
    }
    out.push_back(list[i].get<std::string>());
  }
  return out;
}

Polynomial polynomial_at(const json& value, const std::string& where, const VarContext& ctx) {
  std::string text;
  if (value.is_string()) {
    text = value.get<std::string>();
  } else if (value.is_number_integer()) {
    text = value.dump();
  } else {
    throw InputError(where + ": expected a polynomial string");
  }
  try {
    return parse_poly(text, ctx);
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.detail(), e.offset());
  } catch (const Error& e) {
    throw InputError(where + ": " + e.what());
  }
}

}  // namespace

Problem parse_problem(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError("/: malformed JSON (" + std::string(e.what()) + ")", e.byte == 0 ? 0 : e.byte - 1);
  }
  if (!doc.is_object()) throw InputError("/: expected a JSON object");

  static const std::set<std::string> known{"vars", "params", "h", "D", "ideal"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.contains(key)) throw InputError("/" + key + ": unknown field");
  }
  if (!doc.contains("vars")) throw InputError("/vars: missing field");

  std::optional<VarContext> ctx;
  try {
    ctx.emplace(string_list(doc, "vars"), string_list(doc, "params"));
  } catch (const DomainError& e) {
    throw InputError(std::string("/vars: ") + e.what());
  }
  Problem problem{*ctx, std::nullopt, std::nullopt, std::nullopt};

  if (doc.contains("h")) problem.h = polynomial_at(doc.at("h"), "/h", *ctx);

  if (doc.contains("D")) {
    const json& rows = doc.at("D");
    if (!rows.is_array()) throw InputError("/D: expected an array of rows");
    std::vector<std::vector<Polynomial>> entries;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string row_path = "/D/" + std::to_string(i);
      if (!rows[i].is_array()) throw InputError(row_path + ": expected an array of entries");
      entries.emplace_back();
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        const std::string entry_path = row_path + "/" + std::to_string(j);
        Polynomial entry = polynomial_at(rows[i][j], entry_path, *ctx);
        if (!entry.is_parameter_only()) throw InputError(entry_path + ": entry may only involve parameters");
        entries.back().push_back(std::move(entry));
      }
    }
    try {
      problem.d.emplace(*ctx, std::move(entries));
    } catch (const DomainError& e) {
      throw InputError(std::string("/D: ") + e.what());
    }
  }

  if (doc.contains("ideal")) {
    const json& list = doc.at("ideal");
    if (!list.is_array()) throw InputError("/ideal: expected an array of polynomial strings");
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < list.size(); ++i) {
      gens.push_back(polynomial_at(list[i], "/ideal/" + std::to_string(i), *ctx));
    }
    problem.ideal.emplace(*ctx, std::move(gens));
  }
  return problem;
}

Problem read_problem_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_problem(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + e.detail(), e.offset());
  } catch (const InputError& e) {
    throw InputError(path + ":" + e.what());
  }
}

}  // namespace vfkit::cli
