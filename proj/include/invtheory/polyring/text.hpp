#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "invtheory/errors.hpp"
#include "invtheory/polyring/polynomial.hpp"

namespace invtheory {

/// "3*x[1,0]^2*x[1,1] + x[2,0]"; the zero polynomial renders as "0".
template <class Field>
std::string render(const Polynomial<Field>& f) {
  if (f.is_zero()) return "0";
  const Field& field = f.field();
  const VariableLayout& layout = *f.layout();
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    std::string coef = field.to_string(c);
    bool negative = !coef.empty() && coef.front() == '-';
    if (negative) coef.erase(0, 1);
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    std::string body;
    for (std::size_t v = 0; v < m.num_vars(); ++v) {
      if (m[v] == 0) continue;
      if (!body.empty()) body += '*';
      body += layout.label(v);
      if (m[v] > 1) body += "^" + std::to_string(m[v]);
    }
    if (body.empty()) out += coef;
    else if (coef == "1") out += body;
    else out += coef + "*" + body;
  }
  return out;
}

/// Inverse of render() for the same layout.
template <class Field>
Polynomial<Field> parse_polynomial(const Field& field, LayoutPtr layout, std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) fail(ErrorKind::parse_error, "empty polynomial text");

  std::vector<std::pair<bool, std::string>> pieces;  // (negative, body)
  {
    int depth = 0;
    bool negative = false;
    std::string current;
    for (std::size_t i = 0; i < s.size(); ++i) {
      char ch = s[i];
      if (ch == '[') ++depth;
      if (ch == ']') --depth;
      bool split = depth == 0 && (ch == '+' || ch == '-') && !(i > 0 && s[i - 1] == '^');
      if (split) {
        if (!current.empty()) {
          pieces.emplace_back(negative, current);
          current.clear();
          negative = false;
        }
        if (ch == '-') negative = !negative;
        continue;
      }
      current += ch;
    }
    if (current.empty()) fail(ErrorKind::parse_error, "trailing sign in polynomial text");
    pieces.emplace_back(negative, current);
  }

  const std::size_t n = layout->num_vars();
  std::vector<typename Polynomial<Field>::Term> terms;
  for (const auto& [negative, body] : pieces) {
    auto coef = field.one();
    std::vector<std::uint32_t> exps(n, 0);
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t end = body.find('*', start);
      if (end == std::string::npos) end = body.size();
      std::string factor = body.substr(start, end - start);
      if (factor.empty()) fail(ErrorKind::parse_error, "empty factor in '" + body + "'");
      if (std::isdigit(static_cast<unsigned char>(factor.front()))) {
        coef = field.mul(coef, parse_scalar(field, factor));
      } else {
        std::uint32_t e = 1;
        std::string label = factor;
        auto caret = factor.rfind('^');
        auto bracket = factor.rfind(']');
        if (caret != std::string::npos && (bracket == std::string::npos || caret > bracket)) {
          label = factor.substr(0, caret);
          try {
            e = static_cast<std::uint32_t>(std::stoul(factor.substr(caret + 1)));
          } catch (const std::exception&) {
            fail(ErrorKind::parse_error, "bad exponent in '" + factor + "'");
          }
        }
        auto var = layout->find_label(label);
        if (!var) fail(ErrorKind::parse_error, "unknown variable '" + label + "'");
        exps[*var] += e;
      }
      start = end + 1;
    }
    if (negative) coef = field.neg(coef);
    terms.emplace_back(Monomial::from_exponents(exps), coef);
  }
  return Polynomial<Field>::from_terms(field, std::move(layout), std::move(terms));
}

}  // namespace invtheory
