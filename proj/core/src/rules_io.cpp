#include "ltlcore/rules_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "ltlcore/parser.hpp"

namespace ltlcore {

RuleSet parse_rules_text(std::string_view text, FormulaArena& arena) {
  std::vector<std::pair<std::string, FormulaId>> rules;
  std::map<std::string, int> name_lines;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) {
      throw RulesFileError("line " + std::to_string(lineno) +
                           ": expected `name: formula`, no ':' found");
    }
    std::string name = line.substr(0, colon);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    if (name.empty()) {
      throw RulesFileError("line " + std::to_string(lineno) + ": empty rule name");
    }
    auto prev = name_lines.find(name);
    if (prev != name_lines.end()) {
      throw RulesFileError("duplicate rule name '" + name + "' on lines " +
                           std::to_string(prev->second) + " and " + std::to_string(lineno));
    }
    name_lines.emplace(name, lineno);
    std::string body = line.substr(colon + 1);
    try {
      rules.emplace_back(name, parse(body, arena));
    } catch (const ParseError& e) {
      throw RulesFileError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return RuleSet::from_rules(arena, std::move(rules));
}

RuleSet parse_rules_file(const std::string& path, FormulaArena& arena) {
  std::ifstream in(path);
  if (!in) throw RulesFileError("cannot open rules file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_rules_text(buf.str(), arena);
}

}  // namespace ltlcore
