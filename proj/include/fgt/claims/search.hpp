#ifndef FGT_CLAIMS_SEARCH_HPP_
#define FGT_CLAIMS_SEARCH_HPP_

#include <cctype>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fgt/claims/context.hpp"

namespace fgt {

using ProfileExpr = std::function<bool(const PredicateProfile&)>;

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  ProfileExpr parse() {
    auto e = parse_or();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) != tok) return false;
    const bool word = std::isalpha(static_cast<unsigned char>(tok[0]));
    if (word && pos_ + tok.size() < s_.size() &&
        std::isalnum(static_cast<unsigned char>(s_[pos_ + tok.size()]))) {
      return false;
    }
    pos_ += tok.size();
    return true;
  }

  ProfileExpr parse_or() {
    auto lhs = parse_and();
    while (accept("||") || accept("or") || accept("∨")) {
      auto rhs = parse_and();
      lhs = [lhs, rhs](const PredicateProfile& p) { return lhs(p) || rhs(p); };
    }
    return lhs;
  }

  ProfileExpr parse_and() {
    auto lhs = parse_not();
    while (accept("&&") || accept("and") || accept("∧")) {
      auto rhs = parse_not();
      lhs = [lhs, rhs](const PredicateProfile& p) { return lhs(p) && rhs(p); };
    }
    return lhs;
  }

  ProfileExpr parse_not() {
    if (accept("!") || accept("not") || accept("¬")) {
      auto inner = parse_not();
      return [inner](const PredicateProfile& p) { return !inner(p); };
    }
    return parse_atom();
  }

  ProfileExpr parse_atom() {
    if (accept("(")) {
      auto e = parse_or();
      if (!accept(")")) fail("expected ')'");
      return e;
    }
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a predicate name");
    const std::string name(s_.substr(start, pos_ - start));
    if (!profile_field(PredicateProfile{}, name)) fail("unknown predicate '" + name + "'");
    return [name](const PredicateProfile& p) { return *profile_field(p, name); };
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

/// Splits at commas outside parentheses, brackets and braces.
inline std::vector<std::string> split_top_level(std::string_view text) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : text) {
    if (ch == '(' || ch == '[' || ch == '{') ++depth;
    if (ch == ')' || ch == ']' || ch == '}') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace detail

/// Parses a boolean combination of profile field names.
inline ProfileExpr parse_profile_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

/// Parses a universe: `catalog`, `catalog<=N`, `Name(a..b)` ranges, or spec strings, comma separated.
inline std::vector<GroupSpec> parse_universe(std::string_view text) {
  std::string t = detail::trim(text);
  if (t.size() >= 2 && t.front() == '{' && t.back() == '}') t = t.substr(1, t.size() - 2);
  std::vector<GroupSpec> out;
  for (const auto& raw : detail::split_top_level(t)) {
    const std::string item = detail::trim(raw);
    if (item.empty()) throw Error(ErrorCode::ParseError, "empty universe entry");
    if (item == "catalog") {
      auto c = default_catalog();
      out.insert(out.end(), c.begin(), c.end());
      continue;
    }
    if (item.rfind("catalog<=", 0) == 0) {
      std::size_t n = 0;
      try {
        n = std::stoul(item.substr(9));
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad order bound in '" + item + "'");
      }
      auto c = catalog_up_to(n);
      out.insert(out.end(), c.begin(), c.end());
      continue;
    }
    const auto dots = item.find("..");
    if (dots != std::string::npos) {
      const auto open = item.find('(');
      if (open == std::string::npos || item.back() != ')' || dots < open) {
        throw Error(ErrorCode::ParseError, "bad range '" + item + "'");
      }
      const std::string name = item.substr(0, open);
      int lo = 0, hi = 0;
      try {
        lo = std::stoi(item.substr(open + 1, dots - open - 1));
        hi = std::stoi(item.substr(dots + 2, item.size() - dots - 3));
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad range bounds in '" + item + "'");
      }
      for (int n = lo; n <= hi; ++n) {
        auto s = spec(name, n);
        validate_spec_shape(s);
        out.push_back(std::move(s));
      }
      continue;
    }
    auto s = parse_group_spec_any(item);
    validate_spec_shape(s);
    out.push_back(std::move(s));
  }
  return out;
}

struct SearchResult {
  std::vector<GroupSpec> matches;
  std::vector<SkipEntry> skipped;
};

/// Universe members satisfying the expression, in universe order; budget failures become skips.
inline SearchResult counterexample_search(const ProfileExpr& expr, const std::vector<GroupSpec>& universe,
                                          AnalysisCache& cache) {
  SearchResult r;
  for (const auto& s : universe) {
    try {
      if (expr(cache.get(s)->profile)) r.matches.push_back(s);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      r.skipped.push_back({to_string(s), std::string("order-budget: ") + e.what()});
    }
  }
  return r;
}

}  // namespace fgt

#endif  // FGT_CLAIMS_SEARCH_HPP_
