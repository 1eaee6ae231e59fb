#ifndef FGT_GROUP_SPEC_HPP_
#define FGT_GROUP_SPEC_HPP_

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "json.hpp"

#include "fgt/error.hpp"

namespace fgt {

struct GroupSpec;

/// One constructor argument: an integer, a bracketed integer list, or a nested spec.
struct SpecArg {
  enum class Kind { Int, List, Spec };
  Kind kind = Kind::Int;
  std::int64_t value = 0;
  std::vector<std::int64_t> list;
  std::vector<GroupSpec> spec;  // exactly one entry when kind == Spec

  static SpecArg integer(std::int64_t v) {
    SpecArg a;
    a.kind = Kind::Int;
    a.value = v;
    return a;
  }
  static SpecArg ints(std::vector<std::int64_t> v) {
    SpecArg a;
    a.kind = Kind::List;
    a.list = std::move(v);
    return a;
  }
  static SpecArg nested(GroupSpec s);

  friend bool operator==(const SpecArg&, const SpecArg&);
};

struct GroupSpec {
  std::string constructor;
  std::vector<SpecArg> args;

  GroupSpec() = default;
  explicit GroupSpec(std::string name, std::vector<SpecArg> a = {})
      : constructor(std::move(name)), args(std::move(a)) {}

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.constructor == b.constructor && a.args == b.args;
  }
};

inline SpecArg SpecArg::nested(GroupSpec s) {
  SpecArg a;
  a.kind = Kind::Spec;
  a.spec.push_back(std::move(s));
  return a;
}

inline bool operator==(const SpecArg& a, const SpecArg& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case SpecArg::Kind::Int: return a.value == b.value;
    case SpecArg::Kind::List: return a.list == b.list;
    case SpecArg::Kind::Spec: return a.spec == b.spec;
  }
  return false;
}

/// Shorthand for building specs in code: spec("Dihedral", 4).
template <class... Args>
GroupSpec spec(std::string name, Args&&... args) {
  GroupSpec s(std::move(name));
  [[maybe_unused]] auto push = [&](auto&& a) {
    using T = std::decay_t<decltype(a)>;
    if constexpr (std::is_same_v<T, GroupSpec>) {
      s.args.push_back(SpecArg::nested(a));
    } else if constexpr (std::is_same_v<T, std::vector<std::int64_t>>) {
      s.args.push_back(SpecArg::ints(a));
    } else {
      s.args.push_back(SpecArg::integer(static_cast<std::int64_t>(a)));
    }
  };
  (push(std::forward<Args>(args)), ...);
  return s;
}

inline std::string to_string(const GroupSpec& s) {
  std::string out = s.constructor;
  if (s.args.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < s.args.size(); ++i) {
    if (i) out += ',';
    const SpecArg& a = s.args[i];
    switch (a.kind) {
      case SpecArg::Kind::Int: out += std::to_string(a.value); break;
      case SpecArg::Kind::List:
        out += '[';
        for (std::size_t j = 0; j < a.list.size(); ++j) {
          if (j) out += ',';
          out += std::to_string(a.list[j]);
        }
        out += ']';
        break;
      case SpecArg::Kind::Spec: out += to_string(a.spec.front()); break;
    }
  }
  out += ')';
  return out;
}

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec s = parse_spec();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return s;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t parse_int() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(text_[start])))) {
      fail("expected integer");
    }
    try {
      return std::stoll(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::exception&) {
      fail("integer out of range");
    }
  }

  GroupSpec parse_spec() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start || std::isdigit(static_cast<unsigned char>(text_[start]))) {
      fail("expected constructor name");
    }
    GroupSpec s(std::string(text_.substr(start, pos_ - start)));
    if (!peek('(')) return s;
    ++pos_;
    if (peek(')')) {
      ++pos_;
      return s;
    }
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) fail("unexpected end");
      char c = text_[pos_];
      if (c == '[') {
        ++pos_;
        std::vector<std::int64_t> list;
        if (!peek(']')) {
          while (true) {
            list.push_back(parse_int());
            if (peek(',')) {
              ++pos_;
              continue;
            }
            break;
          }
        }
        expect(']');
        s.args.push_back(SpecArg::ints(std::move(list)));
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
        s.args.push_back(SpecArg::integer(parse_int()));
      } else {
        s.args.push_back(SpecArg::nested(parse_spec()));
      }
      if (peek(',')) {
        ++pos_;
        continue;
      }
      expect(')');
      return s;
    }
  }
};

}  // namespace detail

/// Parses the compact form, e.g. "Direct(Cyclic(5),Sym(3))".
inline GroupSpec parse_group_spec(std::string_view text) { return detail::SpecParser(text).parse(); }

/// Argument schema used for the JSON form of a spec.
struct SpecParam {
  enum class Kind { Int, Spec, IntList, Triples };
  std::string name;
  Kind kind;
};

inline const std::vector<SpecParam>* spec_schema(const std::string& constructor) {
  using K = SpecParam::Kind;
  static const std::vector<std::pair<std::string, std::vector<SpecParam>>> table = {
      {"Cyclic", {{"n", K::Int}}},
      {"ElementaryAbelian", {{"p", K::Int}, {"k", K::Int}}},
      {"Dihedral", {{"n", K::Int}}},
      {"Dicyclic", {{"n", K::Int}}},
      {"Quaternion", {{"order", K::Int}}},
      {"Sym", {{"n", K::Int}}},
      {"Alt", {{"n", K::Int}}},
      {"Modular", {{"p", K::Int}, {"n", K::Int}}},
      {"HeisenbergLike", {{"p", K::Int}, {"n", K::Int}}},
      {"SL2", {{"q", K::Int}}},
      {"PSL2", {{"q", K::Int}}},
      {"GU2_3", {}},
      {"C2sqSemiC4", {}},
      {"D4SemiS3", {}},
      {"C5xC3SemiD4", {}},
      {"C4WrC2", {}},
      {"C4CircD4", {}},
      {"IrreducibleFrobenius", {{"q", K::Int}, {"k", K::Int}, {"p", K::Int}}},
      {"Direct", {{"left", K::Spec}, {"right", K::Spec}}},
      {"PowerAction", {{"p", K::Int}, {"alpha", K::Int}, {"factors", K::Triples}}},
      {"CyclicSemidirect", {{"n", K::Int}, {"acting", K::Spec}, {"powers", K::IntList}}},
  };
  for (const auto& [name, params] : table) {
    if (name == constructor) return &params;
  }
  return nullptr;
}

/// Checks arity and argument kinds against the schema.
inline void validate_spec_shape(const GroupSpec& s) {
  const auto* schema = spec_schema(s.constructor);
  if (!schema) throw Error(ErrorCode::UnknownConstructor, s.constructor);
  const std::string where = to_string(s);
  std::size_t i = 0;
  for (const auto& param : *schema) {
    if (param.kind == SpecParam::Kind::Triples) {
      if (i >= s.args.size()) throw Error(ErrorCode::InvalidParameters, where + ": missing " + param.name);
      for (; i < s.args.size(); ++i) {
        if (s.args[i].kind != SpecArg::Kind::List || s.args[i].list.size() != 3) {
          throw Error(ErrorCode::InvalidParameters, where + ": " + param.name + " needs [p,alpha,t]");
        }
      }
      break;
    }
    if (i >= s.args.size()) throw Error(ErrorCode::InvalidParameters, where + ": missing " + param.name);
    const SpecArg& a = s.args[i++];
    bool ok = (param.kind == SpecParam::Kind::Int && a.kind == SpecArg::Kind::Int) ||
              (param.kind == SpecParam::Kind::Spec && a.kind == SpecArg::Kind::Spec) ||
              (param.kind == SpecParam::Kind::IntList && a.kind == SpecArg::Kind::List);
    if (!ok) throw Error(ErrorCode::InvalidParameters, where + ": bad " + param.name);
    if (a.kind == SpecArg::Kind::Spec) validate_spec_shape(a.spec.front());
  }
  if (i != s.args.size()) throw Error(ErrorCode::InvalidParameters, where + ": too many arguments");
}

inline nlohmann::ordered_json spec_to_json(const GroupSpec& s) {
  validate_spec_shape(s);
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::size_t i = 0;
  for (const auto& param : *spec_schema(s.constructor)) {
    switch (param.kind) {
      case SpecParam::Kind::Int: params[param.name] = s.args[i++].value; break;
      case SpecParam::Kind::IntList: params[param.name] = s.args[i++].list; break;
      case SpecParam::Kind::Spec: params[param.name] = spec_to_json(s.args[i++].spec.front()); break;
      case SpecParam::Kind::Triples: {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (; i < s.args.size(); ++i) {
          const auto& l = s.args[i].list;
          arr.push_back({{"p", l[0]}, {"alpha", l[1]}, {"t", l[2]}});
        }
        params[param.name] = arr;
        break;
      }
    }
  }
  nlohmann::ordered_json j;
  j["constructor"] = s.constructor;
  j["params"] = params;
  return j;
}

template <class Json>
GroupSpec spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("constructor") || !j["constructor"].is_string()) {
    throw Error(ErrorCode::ParseError, "spec JSON needs a string 'constructor'");
  }
  GroupSpec s(j["constructor"].template get<std::string>());
  const auto* schema = spec_schema(s.constructor);
  if (!schema) throw Error(ErrorCode::UnknownConstructor, s.constructor);
  Json params = j.contains("params") ? j["params"] : Json::object();
  if (!params.is_object()) throw Error(ErrorCode::ParseError, "'params' must be an object");
  for (auto it = params.begin(); it != params.end(); ++it) {
    bool known = false;
    for (const auto& p : *schema) known = known || p.name == it.key();
    if (!known) throw Error(ErrorCode::InvalidParameters, s.constructor + ": unknown key " + it.key());
  }
  for (const auto& param : *schema) {
    if (!params.contains(param.name)) {
      throw Error(ErrorCode::InvalidParameters, s.constructor + ": missing " + param.name);
    }
    const Json& v = params[param.name];
    try {
      switch (param.kind) {
        case SpecParam::Kind::Int:
          if (!v.is_number_integer()) throw Error(ErrorCode::InvalidParameters, param.name);
          s.args.push_back(SpecArg::integer(v.template get<std::int64_t>()));
          break;
        case SpecParam::Kind::IntList:
          s.args.push_back(SpecArg::ints(v.template get<std::vector<std::int64_t>>()));
          break;
        case SpecParam::Kind::Spec: s.args.push_back(SpecArg::nested(spec_from_json(v))); break;
        case SpecParam::Kind::Triples:
          if (!v.is_array()) throw Error(ErrorCode::InvalidParameters, param.name);
          for (const auto& t : v) {
            s.args.push_back(SpecArg::ints({t.at("p").template get<std::int64_t>(),
                                            t.at("alpha").template get<std::int64_t>(),
                                            t.at("t").template get<std::int64_t>()}));
          }
          break;
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::InvalidParameters, s.constructor + "." + param.name + ": " + e.what());
    }
  }
  validate_spec_shape(s);
  return s;
}

/// Accepts either the compact string form or a JSON object.
inline GroupSpec parse_group_spec_any(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    return spec_from_json(j);
  }
  return parse_group_spec(text);
}

}  // namespace fgt

#endif  // FGT_GROUP_SPEC_HPP_
