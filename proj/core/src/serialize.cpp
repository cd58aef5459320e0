#include "mbgram/serialize.hpp"

#include <cctype>

namespace mbgram {

nlohmann::json polynomial_terms_to_json(const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    nlohmann::json row = nlohmann::json::array();
    row.push_back(t.coefficient.get_str());
    for (auto v : kAllVariables) row.push_back(t.monomial.exponent(v));
    terms.push_back(std::move(row));
  }
  return terms;
}

Polynomial polynomial_terms_from_json(const nlohmann::json& terms) {
  if (!terms.is_array()) throw SchemaMismatch("polynomial terms must be an array");
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& row : terms) {
    if (!row.is_array() || row.size() != 6) throw SchemaMismatch("term must have 6 entries");
    Integer c;
    if (row[0].is_string()) {
      if (c.set_str(row[0].get<std::string>(), 10) != 0)
        throw SchemaMismatch("bad coefficient " + row[0].get<std::string>());
    } else if (row[0].is_number_integer()) {
      c = Integer(std::to_string(row[0].get<long long>()));
    } else {
      throw SchemaMismatch("coefficient must be a string or integer");
    }
    std::array<std::uint32_t, 5> ex{};
    for (unsigned i = 0; i < 5; ++i) ex[i] = row[i + 1].get<std::uint32_t>();
    out.push_back({Monomial(ex), std::move(c)});
  }
  return Polynomial::from_terms(std::move(out));
}

nlohmann::json polynomial_to_json(const Polynomial& p) {
  return {{"schema", kPolynomialSchema}, {"terms", polynomial_terms_to_json(p)}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("schema", "") != kPolynomialSchema)
    throw SchemaMismatch("expected schema " + std::string(kPolynomialSchema));
  return polynomial_terms_from_json(j.at("terms"));
}

Polynomial polynomial_parse(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto number = [&]() -> Integer {
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw ParseError("expected a number", start);
    return Integer(std::string(text.substr(start, i - start)));
  };

  std::vector<Term> terms;
  skip();
  if (i == text.size()) throw ParseError("empty polynomial", 0);
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", i);
    }
    first = false;

    Integer coef = 1;
    std::array<std::uint32_t, 5> ex{};
    bool have_factor = false;
    while (true) {
      skip();
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        coef *= number();
      } else if (i < text.size() && variable_from_name(text[i])) {
        const auto v = *variable_from_name(text[i]);
        ++i;
        std::uint32_t e = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
          ++i;
          skip();
          e = static_cast<std::uint32_t>(number().get_ui());
        }
        ex[static_cast<unsigned>(v)] += e;
      } else {
        throw ParseError("expected a number or variable", i);
      }
      have_factor = true;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!have_factor) throw ParseError("empty term", i);
    terms.push_back({Monomial(ex), sign * coef});
  }
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace mbgram
