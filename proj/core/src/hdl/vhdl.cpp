#include "pepscan/hdl/vhdl.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <regex>
#include <sstream>

#include "pepscan/error.hpp"
#include "json.hpp"

namespace pepscan::hdl {
namespace {

std::size_t ceil_log2(std::size_t n) {
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  return bits;
}

std::string state_literal(std::size_t state, std::size_t width, StateEncoding encoding) {
  std::string bits(width, '0');
  if (encoding == StateEncoding::kOneHot) {
    bits[width - 1 - state] = '1';
  } else {
    for (std::size_t i = 0; i < width; ++i) {
      if ((state >> i) & 1u) bits[width - 1 - i] = '1';
    }
  }
  return '"' + bits + '"';
}

std::string count_literal(std::size_t count, std::size_t width) {
  return state_literal(count, width, StateEncoding::kBinary);
}

std::string hex_byte(unsigned char byte) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "x\"%02X\"", byte);
  return buf;
}

// Decodes a state literal; -1 when malformed for the encoding.
long decode_state(const std::string& bits, StateEncoding encoding) {
  if (encoding == StateEncoding::kOneHot) {
    if (std::count(bits.begin(), bits.end(), '1') != 1) return -1;
    return static_cast<long>(bits.size() - 1 - bits.find('1'));
  }
  long value = 0;
  for (char c : bits) value = value * 2 + (c == '1' ? 1 : 0);
  return value;
}

// Text between "<label> : process" and "end process <label>;".
std::string_view process_body(std::string_view vhdl, std::string_view label) {
  const std::string open = std::string(label) + " : process";
  const std::string close = "end process " + std::string(label) + ";";
  auto begin = vhdl.find(open);
  if (begin == std::string_view::npos) return {};
  auto end = vhdl.find(close, begin);
  if (end == std::string_view::npos) return {};
  return vhdl.substr(begin, end - begin);
}

}  // namespace

std::size_t state_register_width(std::size_t state_count, StateEncoding encoding) {
  if (encoding == StateEncoding::kOneHot) return std::max<std::size_t>(1, state_count);
  return std::max<std::size_t>(1, ceil_log2(state_count));
}

std::size_t id_width(std::size_t pattern_count) {
  return std::max<std::size_t>(1, ceil_log2(pattern_count + 1));
}

bool is_vhdl_identifier(std::string_view name) {
  static const std::regex kIdent("[A-Za-z](_?[A-Za-z0-9])*");
  return std::regex_match(name.begin(), name.end(), kIdent);
}

const std::vector<std::string>& port_names() {
  static const std::vector<std::string> kPorts = {"clk",        "rst",         "char_in",
                                                  "char_valid", "match_valid", "match_count"};
  return kPorts;
}

std::string generate_vhdl(const ac::Automaton& automaton, const EncodingConfig& config) {
  if (!is_vhdl_identifier(config.entity_name)) {
    throw Error(ErrorCode::kInvalidIdentifier,
                "\"" + config.entity_name + "\" is not a VHDL identifier");
  }
  const auto& table = automaton.dense();
  const std::size_t states = table.state_count();
  const auto encoding = config.state_encoding;
  const std::size_t index_width = std::max<std::size_t>(1, ceil_log2(states));
  const std::size_t width = state_register_width(states, encoding);
  const std::size_t count_width = id_width(automaton.pattern_count());
  if (index_width > kMaxRegisterWidth || count_width > kMaxRegisterWidth ||
      (encoding == StateEncoding::kOneHot && states > kMaxOneHotStates)) {
    throw Error(ErrorCode::kTooManyStates,
                std::to_string(states) + " states do not fit the state register");
  }

  const auto& alphabet = automaton.alphabet();
  const std::string root = state_literal(ac::kRoot, width, encoding);
  const std::string& name = config.entity_name;

  std::ostringstream v;
  v << "-- Aho-Corasick matcher: " << states << " states, " << automaton.pattern_count()
    << " patterns, " << (encoding == StateEncoding::kBinary ? "binary" : "one-hot")
    << " state encoding.\n"
    << "-- One transition per clock while char_valid is high; failure links are\n"
    << "-- compiled into the transition table. Bytes outside the alphabet reset\n"
    << "-- the machine to the root.\n"
    << "library ieee;\n"
    << "use ieee.std_logic_1164.all;\n\n"
    << "entity " << name << " is\n"
    << "  port (\n"
    << "    clk         : in  std_logic;\n"
    << "    rst         : in  std_logic;\n"
    << "    char_in     : in  std_logic_vector(" << kCharWidth - 1 << " downto 0);\n"
    << "    char_valid  : in  std_logic;\n"
    << "    match_valid : out std_logic;\n"
    << "    match_count : out std_logic_vector(" << count_width - 1 << " downto 0)\n"
    << "  );\n"
    << "end entity " << name << ";\n\n"
    << "architecture rtl of " << name << " is\n"
    << "  signal state : std_logic_vector(" << width - 1 << " downto 0) := " << root << ";\n"
    << "begin\n\n"
    << "  transition : process (clk)\n"
    << "  begin\n"
    << "    if rising_edge(clk) then\n"
    << "      if rst = '1' then\n"
    << "        state <= " << root << ";\n"
    << "      elsif char_valid = '1' then\n"
    << "        case state is\n";

  for (ac::StateId s = 0; s < states; ++s) {
    v << "          when " << state_literal(s, width, encoding) << " =>  -- state " << s << '\n'
      << "            case char_in is\n";
    // Group symbols by non-root target; everything else (sentinel included)
    // falls through to the root.
    std::map<ac::StateId, std::vector<unsigned char>> by_target;
    for (std::size_t col = 0; col < alphabet.symbol_count(); ++col) {
      auto target = table.next(s, col);
      if (target != ac::kRoot) {
        by_target[target].push_back(static_cast<unsigned char>(alphabet.symbols()[col]));
      }
    }
    for (const auto& [target, symbols] : by_target) {
      v << "              when ";
      for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (i) v << " | ";
        v << hex_byte(symbols[i]);
      }
      v << " => state <= " << state_literal(target, width, encoding) << ";\n";
    }
    v << "              when others => state <= " << root << ";\n"
      << "            end case;\n";
  }
  v << "          when others =>\n"
    << "            state <= " << root << ";\n"
    << "        end case;\n"
    << "      end if;\n"
    << "    end if;\n"
    << "  end process transition;\n\n";

  v << "  output_decode : process (state)\n"
    << "  begin\n"
    << "    case state is\n";
  std::map<std::size_t, std::vector<ac::StateId>> by_count;
  for (ac::StateId s = 0; s < states; ++s) {
    if (auto n = table.outputs(s).size(); n > 0) by_count[n].push_back(s);
  }
  for (const auto& [count, members] : by_count) {
    v << "      when ";
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i) v << " | ";
      v << state_literal(members[i], width, encoding);
    }
    v << " =>\n"
      << "        match_valid <= '1';\n"
      << "        match_count <= " << count_literal(count, count_width) << ";\n";
  }
  v << "      when others =>\n"
    << "        match_valid <= '0';\n"
    << "        match_count <= (others => '0');\n"
    << "    end case;\n"
    << "  end process output_decode;\n\n"
    << "end architecture rtl;\n";
  return v.str();
}

bool ValidationReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const ValidationCheck* ValidationReport::find(std::string_view name) const noexcept {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string ValidationReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  out << (passed() ? "design valid\n" : "design INVALID\n");
  return out.str();
}

std::string ValidationReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["passed"] = passed();
  auto& list = doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return doc.dump(2) + "\n";
}

ValidationReport validate_design(std::string_view vhdl, const ac::Automaton& automaton,
                                 const EncodingConfig& config) {
  ValidationReport report;
  const std::string text(vhdl);
  const std::size_t states = automaton.state_count();
  const auto encoding = config.state_encoding;
  const std::size_t width = state_register_width(states, encoding);
  std::smatch m;

  {
    ValidationCheck c{"entity_name", false, ""};
    static const std::regex kEntity(R"re(entity\s+(\w+)\s+is)re");
    if (std::regex_search(text, m, kEntity)) {
      c.passed = m[1] == config.entity_name;
      c.detail = "found " + m[1].str() + ", expected " + config.entity_name;
    } else {
      c.detail = "no entity declaration";
    }
    report.checks.push_back(std::move(c));
  }

  {
    ValidationCheck c{"port_list", false, ""};
    auto begin = text.find("port (");
    auto end = text.find("end entity", begin);
    std::vector<std::string> found;
    if (begin != std::string::npos && end != std::string::npos) {
      const std::string block = text.substr(begin, end - begin);
      static const std::regex kPort(R"re((\w+)\s*:\s*(in|out)\s)re");
      for (auto it = std::sregex_iterator(block.begin(), block.end(), kPort);
           it != std::sregex_iterator(); ++it) {
        found.push_back((*it)[1]);
      }
    }
    c.passed = found == port_names();
    c.detail = std::to_string(found.size()) + " ports:";
    for (const auto& p : found) c.detail += " " + p;
    report.checks.push_back(std::move(c));
  }

  {
    ValidationCheck c{"state_width", false, ""};
    static const std::regex kSignal(R"re(signal\s+state\s*:\s*std_logic_vector\((\d+)\s+downto\s+0\))re");
    if (std::regex_search(text, m, kSignal)) {
      const auto declared = std::stoul(m[1]) + 1;
      c.passed = declared == width;
      c.detail = "declared " + std::to_string(declared) + ", expected " + std::to_string(width);
    } else {
      c.detail = "no state register declaration";
    }
    report.checks.push_back(std::move(c));
  }

  const std::string body(process_body(text, "transition"));
  {
    ValidationCheck c{"case_arms", false, ""};
    static const std::regex kArm(R"re(when\s+"([01]+)"\s*=>)re");
    std::vector<bool> seen(states, false);
    std::size_t arms = 0;
    bool well_formed = true;
    for (auto it = std::sregex_iterator(body.begin(), body.end(), kArm);
         it != std::sregex_iterator(); ++it) {
      ++arms;
      const std::string bits = (*it)[1];
      long s = bits.size() == width ? decode_state(bits, encoding) : -1;
      if (s < 0 || static_cast<std::size_t>(s) >= states || seen[static_cast<std::size_t>(s)]) {
        well_formed = false;
      } else {
        seen[static_cast<std::size_t>(s)] = true;
      }
    }
    c.passed = !body.empty() && arms == states && well_formed;
    c.detail = std::to_string(arms) + " arms for " + std::to_string(states) + " states";
    report.checks.push_back(std::move(c));
  }

  {
    ValidationCheck c{"target_range", false, ""};
    static const std::regex kAssign(R"re(state\s*<=\s*"([01]+)")re");
    std::size_t targets = 0;
    std::size_t bad = 0;
    for (auto it = std::sregex_iterator(body.begin(), body.end(), kAssign);
         it != std::sregex_iterator(); ++it) {
      ++targets;
      const std::string bits = (*it)[1];
      long s = bits.size() == width ? decode_state(bits, encoding) : -1;
      if (s < 0 || static_cast<std::size_t>(s) >= states) ++bad;
    }
    c.passed = !body.empty() && targets > 0 && bad == 0;
    c.detail = std::to_string(bad) + " of " + std::to_string(targets) + " targets out of range";
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace pepscan::hdl
