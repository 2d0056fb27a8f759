#include "aligncorr/text.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "aligncorr/errors.hpp"

namespace aligncorr {

namespace {

std::string strip(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

std::uint64_t parse_unsigned(const std::string& text, std::size_t& pos) {
  const std::size_t start = pos;
  std::uint64_t value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
    if (value > UINT32_MAX) throw ParseError("number too large in '" + text + "'");
    ++pos;
  }
  if (pos == start) throw ParseError("expected a number at position " + std::to_string(pos) +
                                     " in '" + text + "'");
  return value;
}

/// Sparse exponents of a monomial: variable index (0-based) -> exponent.
std::map<std::size_t, std::uint32_t> parse_sparse_monomial(const std::string& text) {
  std::map<std::size_t, std::uint32_t> exps;
  if (text == "1") return exps;
  if (text.empty()) throw ParseError("empty monomial");
  for (const auto& factor : split(text, '*')) {
    if (factor.size() < 2 || factor[0] != 'x') {
      throw ParseError("bad factor '" + factor + "' (expected x<k>[^e])");
    }
    std::size_t pos = 1;
    const auto index = parse_unsigned(factor, pos);
    if (index == 0) throw ParseError("variables are numbered from x1");
    std::uint64_t e = 1;
    if (pos < factor.size()) {
      if (factor[pos] != '^') throw ParseError("bad factor '" + factor + "'");
      ++pos;
      e = parse_unsigned(factor, pos);
    }
    if (pos != factor.size()) throw ParseError("trailing characters in '" + factor + "'");
    exps[index - 1] += static_cast<std::uint32_t>(e);
  }
  return exps;
}

Monomial densify(const std::map<std::size_t, std::uint32_t>& sparse, std::size_t vars) {
  std::vector<std::uint32_t> e(vars, 0);
  for (const auto& [i, k] : sparse) {
    if (i >= vars) {
      throw DimensionMismatch("variable x" + std::to_string(i + 1) + " exceeds ambient dimension " +
                              std::to_string(vars));
    }
    e[i] = k;
  }
  return Monomial(std::move(e));
}

std::vector<std::map<std::size_t, std::uint32_t>> parse_sparse_ideal(const std::string& text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ParseError("ideal must be bracketed: '" + text + "'");
  }
  const std::string body = text.substr(1, text.size() - 2);
  std::vector<std::map<std::size_t, std::uint32_t>> gens;
  if (body.empty()) return gens;
  for (const auto& m : split(body, ',')) gens.push_back(parse_sparse_monomial(m));
  return gens;
}

}  // namespace

Monomial parse_monomial(std::string_view text, std::size_t vars) {
  return densify(parse_sparse_monomial(strip(text)), vars);
}

MonomialIdeal parse_ideal(std::string_view text, std::size_t vars) {
  std::vector<Monomial> gens;
  for (const auto& g : parse_sparse_ideal(strip(text))) gens.push_back(densify(g, vars));
  return MonomialIdeal(vars, std::move(gens));
}

std::vector<MonomialIdeal> parse_ideal_sequence(std::string_view text,
                                                std::optional<std::size_t> vars) {
  const std::string clean = strip(text);
  if (clean.empty()) throw ParseError("empty ideal sequence");
  std::vector<std::vector<std::map<std::size_t, std::uint32_t>>> sparse;
  std::size_t max_index = 0;
  for (const auto& part : split(clean, ';')) {
    sparse.push_back(parse_sparse_ideal(part));
    for (const auto& g : sparse.back()) {
      for (const auto& [i, k] : g) max_index = std::max(max_index, i + 1);
    }
  }
  const std::size_t n = vars.value_or(max_index);
  if (n == 0) throw ParseError("cannot infer the number of variables");
  std::vector<MonomialIdeal> ideals;
  for (const auto& gens : sparse) {
    std::vector<Monomial> dense;
    for (const auto& g : gens) dense.push_back(densify(g, n));
    ideals.emplace_back(n, std::move(dense));
  }
  return ideals;
}

TruncatedPolynomial parse_polynomial(std::string_view text, std::size_t vars,
                                     const std::vector<std::string>& parameters,
                                     std::uint32_t characteristic) {
  const std::string clean = strip(text);
  if (clean.empty()) throw ParseError("empty polynomial");
  TruncatedPolynomial result(vars);
  // Split into signed terms.
  std::vector<std::pair<bool, std::string>> terms;
  std::string current;
  bool negative = false;
  for (std::size_t i = 0; i < clean.size(); ++i) {
    const char c = clean[i];
    if ((c == '+' || c == '-') && (i == 0 || clean[i - 1] != '^')) {
      if (!current.empty()) terms.emplace_back(negative, current);
      else if (i != 0) throw ParseError("dangling sign in '" + clean + "'");
      current.clear();
      negative = c == '-';
    } else {
      current.push_back(c);
    }
  }
  if (current.empty()) throw ParseError("dangling sign in '" + clean + "'");
  terms.emplace_back(negative, current);

  for (const auto& [neg, body] : terms) {
    Coefficient coeff = Coefficient::one(characteristic);
    std::vector<std::uint32_t> exps(vars, 0);
    for (const auto& factor : split(body, '*')) {
      if (factor.empty()) throw ParseError("empty factor in '" + body + "'");
      if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
        try {
          mpq_class q(factor);
          if (q.get_den() == 0) throw ParseError("zero denominator in '" + factor + "'");
          q.canonicalize();
          coeff *= Coefficient(Scalar(q, characteristic));
        } catch (const std::invalid_argument&) {
          throw ParseError("bad number '" + factor + "'");
        }
        continue;
      }
      std::string name = factor;
      std::uint64_t e = 1;
      if (auto caret = factor.find('^'); caret != std::string::npos) {
        name = factor.substr(0, caret);
        std::size_t pos = caret + 1;
        e = parse_unsigned(factor, pos);
        if (pos != factor.size()) throw ParseError("bad exponent in '" + factor + "'");
      }
      auto it = std::find(parameters.begin(), parameters.end(), name);
      if (it != parameters.end()) {
        coeff *= Coefficient::parameter(static_cast<std::size_t>(it - parameters.begin()),
                                        characteristic)
                     .pow(e);
        continue;
      }
      if (name.size() >= 2 && name[0] == 'x') {
        std::size_t pos = 1;
        const auto index = parse_unsigned(name, pos);
        if (pos == name.size() && index >= 1) {
          if (index > vars) {
            throw DimensionMismatch("variable " + name + " exceeds ambient dimension " +
                                    std::to_string(vars));
          }
          exps[index - 1] += static_cast<std::uint32_t>(e);
          continue;
        }
      }
      throw ParseError("unknown symbol '" + name + "'");
    }
    if (neg) coeff = -coeff;
    result.add_term(Monomial(std::move(exps)), coeff);
  }
  return result;
}

std::string format_monomial(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < m.vars(); ++i) {
    if (m[i] == 0) continue;
    if (!first) out << "*";
    first = false;
    out << "x" << (i + 1);
    if (m[i] > 1) out << "^" << m[i];
  }
  return out.str();
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::ostringstream out;
  out << "[";
  for (std::size_t k = 0; k < ideal.generators().size(); ++k) {
    if (k) out << ", ";
    out << format_monomial(ideal.generators()[k]);
  }
  out << "]";
  return out.str();
}

std::string format_ideal_sequence(const std::vector<MonomialIdeal>& ideals) {
  std::ostringstream out;
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    if (k) out << "; ";
    out << format_ideal(ideals[k]);
  }
  return out.str();
}

}  // namespace aligncorr
