#include <cctype>
#include <map>

#include "starblock/catalog.hpp"

namespace starblock::catalog {
namespace {

const std::map<std::string, std::string>& sporadic_aliases() {
  static const std::map<std::string, std::string> aliases = {
      {"O'N", "ON"}, {"BM", "B"}, {"F24'", "Fi24'"}, {"Fi24", "Fi24'"}, {"F22", "Fi22"},
      {"F23", "Fi23"}, {"MCL", "McL"}, {"SUZ", "Suz"}, {"Co.1", "Co1"}};
  return aliases;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  GroupId parse() {
    skip_ws();
    const std::size_t start = pos_;
    std::string whole(trimmed());
    if (auto sp = as_sporadic(whole)) {
      GroupId g;
      g.family = Family::Sporadic;
      g.sporadic = *sp;
      return finish(g);
    }
    std::string ident = identifier();
    if (ident.empty()) throw ParseError("expected a group name", start);
    skip_ws();
    if (at_end()) return finish(bare(ident, start));
    expect('(');
    std::vector<Arg> args = arguments();
    expect(')');
    skip_ws();
    bool prime = false;
    if (!at_end() && peek() == '\'') {
      prime = true;
      ++pos_;
    }
    skip_ws();
    if (!at_end()) throw ParseError("unexpected trailing input", pos_);
    return finish(call(ident, args, prime, start));
  }

 private:
  struct Arg {
    std::optional<Sign> sign;
    Natural value;
    std::size_t pos;
  };

  std::string_view trimmed() const {
    std::size_t b = 0, e = s_.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s_[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s_[e - 1]))) --e;
    return s_.substr(b, e - b);
  }

  static std::optional<std::string> as_sporadic(const std::string& t) {
    for (const auto& e : sporadic_table()) {
      if (e.name == t) return e.name;
    }
    auto it = sporadic_aliases().find(t);
    if (it != sporadic_aliases().end()) return it->second;
    return std::nullopt;
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  std::string identifier() {
    std::string out;
    while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) out += s_[pos_++];
    return out;
  }

  Natural number() {
    skip_ws();
    const std::size_t start = pos_;
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[pos_++];
    if (digits.empty()) throw ParseError("expected a number", start);
    return Natural(digits);
  }

  std::vector<Arg> arguments() {
    std::vector<Arg> out;
    while (true) {
      skip_ws();
      Arg a;
      a.pos = pos_;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        a.sign = peek() == '+' ? Sign::Plus : Sign::Minus;
        ++pos_;
      } else {
        a.value = number();
      }
      out.push_back(a);
      skip_ws();
      if (at_end() || peek() != ',') break;
      ++pos_;
    }
    return out;
  }

  static unsigned to_unsigned(const Natural& v, std::size_t pos) {
    if (v > 1'000'000) throw ParseError("parameter too large", pos);
    return static_cast<unsigned>(v);
  }

  GroupId bare(const std::string& ident, std::size_t pos) {
    if (ident.size() >= 2 && (ident[0] == 'C' || ident[0] == 'A' || ident[0] == 'S')) {
      const std::string digits = ident.substr(1);
      bool all_digits = true;
      for (char c : digits) all_digits = all_digits && std::isdigit(static_cast<unsigned char>(c));
      if (all_digits) {
        GroupId g;
        g.family = ident[0] == 'C' ? Family::Cyclic
                   : ident[0] == 'A' ? Family::Alternating
                                     : Family::Symmetric;
        g.n = to_unsigned(Natural(digits), pos + 1);
        return g;
      }
    }
    throw ParseError("unknown group name '" + ident + "'", pos);
  }

  GroupId call(const std::string& ident, const std::vector<Arg>& args, bool prime,
               std::size_t pos) {
    static const std::map<std::string, Family> linear = {
        {"GL", Family::GL}, {"SL", Family::SL}, {"PSL", Family::PSL}, {"GU", Family::GU},
        {"SU", Family::SU}, {"PSU", Family::PSU}, {"L", Family::PSL}, {"U", Family::PSU}};
    static const std::map<std::string, Family> symplectic = {{"Sp", Family::Sp},
                                                             {"PSp", Family::PSp}};
    static const std::map<std::string, std::pair<Family, Family>> orthogonal = {
        {"SO", {Family::SO_odd, Family::SO_even}},
        {"GO", {Family::GO_odd, Family::GO_even}},
        {"Omega", {Family::Omega_odd, Family::Omega_even}},
        {"POmega", {Family::Omega_odd, Family::POmega_even}},
        {"CSO", {Family::SO_odd, Family::CSO_even}}};
    static const std::map<std::string, Family> one_param = {
        {"E6", Family::E6},       {"2E6", Family::twistedE6}, {"E7", Family::E7},
        {"E8", Family::E8},       {"F4", Family::F4},         {"2F4", Family::twistedF4},
        {"G2", Family::G2},       {"2G2", Family::twistedG2}, {"R", Family::twistedG2},
        {"3D4", Family::threeD4}, {"Sz", Family::Suzuki},     {"2B2", Family::Suzuki}};

    auto need = [&](std::size_t k) {
      if (args.size() != k) {
        throw ParseError(ident + " expects " + std::to_string(k) + " arguments", pos);
      }
    };
    auto plain = [&](const Arg& a) {
      if (a.sign) throw ParseError("unexpected sign", a.pos);
      return a.value;
    };

    GroupId g;
    if (prime) {
      if (ident == "2F4" && args.size() == 1 && !args[0].sign && args[0].value == 2) {
        g.family = Family::TitsGroup;
        return g;
      }
      if (ident == "G2" && args.size() == 1 && !args[0].sign && args[0].value == 2) {
        g.family = Family::G2;
        g.q = 2;
        g.derived = true;
        return g;
      }
      throw ParseError("derived-subgroup mark is only valid for G2(2)' and 2F4(2)'", pos);
    }
    if (auto it = linear.find(ident); it != linear.end()) {
      need(2);
      g.family = it->second;
      g.n = to_unsigned(plain(args[0]), args[0].pos);
      g.q = plain(args[1]);
      return g;
    }
    if (auto it = symplectic.find(ident); it != symplectic.end()) {
      need(2);
      const unsigned dim = to_unsigned(plain(args[0]), args[0].pos);
      if (dim % 2 != 0) throw ParseError("symplectic dimension must be even", args[0].pos);
      g.family = it->second;
      g.n = dim / 2;
      g.q = plain(args[1]);
      return g;
    }
    if (auto it = orthogonal.find(ident); it != orthogonal.end()) {
      if (args.size() == 3) {
        if (!args[0].sign) throw ParseError("expected '+' or '-'", args[0].pos);
        const unsigned dim = to_unsigned(plain(args[1]), args[1].pos);
        if (dim % 2 != 0) throw ParseError("signed orthogonal dimension must be even", args[1].pos);
        g.family = it->second.second;
        g.sign = args[0].sign;
        g.n = dim / 2;
        g.q = plain(args[2]);
        return g;
      }
      need(2);
      if (ident == "POmega" || ident == "CSO") {
        throw ParseError(ident + " requires a sign and an even dimension", pos);
      }
      const unsigned dim = to_unsigned(plain(args[0]), args[0].pos);
      if (dim % 2 != 1) throw ParseError("unsigned orthogonal dimension must be odd", args[0].pos);
      g.family = it->second.first;
      g.n = dim / 2;
      g.q = plain(args[1]);
      return g;
    }
    if (auto it = one_param.find(ident); it != one_param.end()) {
      need(1);
      g.family = it->second;
      g.q = plain(args[0]);
      const bool twisted = g.family == Family::Suzuki || g.family == Family::twistedF4 ||
                           g.family == Family::twistedG2;
      if (auto split = arith::prime_power_split(g.q); twisted && split && split->second % 2 == 1) {
        g.twist = (split->second - 1) / 2;
      }
      return g;
    }
    throw ParseError("unknown group name '" + ident + "'", pos);
  }

  static GroupId finish(GroupId g) {
    validate(g);
    return g;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string sign_text(Sign s) { return s == Sign::Plus ? "+" : "-"; }

}  // namespace

GroupId parse_group(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const GroupId& g) {
  const std::string q = arith::to_decimal(g.q);
  const std::string n = std::to_string(g.n);
  auto odd_dim = [&] { return std::to_string(2 * g.n + 1); };
  auto even = [&](const char* name) {
    return std::string(name) + "(" + (g.sign ? sign_text(*g.sign) : "?") + "," +
           std::to_string(2 * g.n) + "," + q + ")";
  };
  switch (g.family) {
    case Family::Cyclic: return "C" + n;
    case Family::Alternating: return "A" + n;
    case Family::Symmetric: return "S" + n;
    case Family::GL: return "GL(" + n + "," + q + ")";
    case Family::SL: return "SL(" + n + "," + q + ")";
    case Family::PSL: return "PSL(" + n + "," + q + ")";
    case Family::Sp: return "Sp(" + std::to_string(2 * g.n) + "," + q + ")";
    case Family::PSp: return "PSp(" + std::to_string(2 * g.n) + "," + q + ")";
    case Family::GU: return "GU(" + n + "," + q + ")";
    case Family::SU: return "SU(" + n + "," + q + ")";
    case Family::PSU: return "PSU(" + n + "," + q + ")";
    case Family::SO_odd: return "SO(" + odd_dim() + "," + q + ")";
    case Family::GO_odd: return "GO(" + odd_dim() + "," + q + ")";
    case Family::Omega_odd: return "Omega(" + odd_dim() + "," + q + ")";
    case Family::GO_even: return even("GO");
    case Family::SO_even: return even("SO");
    case Family::Omega_even: return even("Omega");
    case Family::POmega_even: return even("POmega");
    case Family::CSO_even: return even("CSO");
    case Family::E6: return "E6(" + q + ")";
    case Family::twistedE6: return "2E6(" + q + ")";
    case Family::E7: return "E7(" + q + ")";
    case Family::E8: return "E8(" + q + ")";
    case Family::F4: return "F4(" + q + ")";
    case Family::twistedF4: return "2F4(" + q + ")";
    case Family::TitsGroup: return "2F4(2)'";
    case Family::G2: return g.derived ? "G2(2)'" : "G2(" + q + ")";
    case Family::twistedG2: return "2G2(" + q + ")";
    case Family::threeD4: return "3D4(" + q + ")";
    case Family::Suzuki: return "Sz(" + q + ")";
    case Family::Sporadic: return g.sporadic;
  }
  return "?";
}

}  // namespace starblock::catalog
