#include "hhw/io.hpp"

#include <json.hpp>

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hhw {

namespace {

using json = nlohmann::json;
using Terms = std::map<std::pair<int, int>, mpz_class>; // (n, i) -> coefficient

json to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

mpz_class from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

json parse_json(std::string_view text, const char* schema) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("schema", "") != schema)
    throw std::invalid_argument(std::string("expected JSON with schema ") + schema);
  return j;
}

// ---- CSV ----

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::vector<std::string>> csv_rows(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = any = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n') {
      if (any || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      row.clear();
      field.clear();
      any = false;
    } else if (c != '\r') {
      field += c;
      any = true;
    }
  }
  if (quoted) throw std::invalid_argument("CSV: unterminated quote");
  if (any || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument("not an integer: " + s);
  return v;
}

mpz_class to_mpz(const std::string& s) {
  mpz_class v;
  if (s.empty() || v.set_str(s, 10) != 0) throw std::invalid_argument("not an integer: " + s);
  return v;
}

// ---- plain text ----

std::string power(char var, int e) {
  if (e == 0) return "";
  if (e == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(e);
}

// Signed terms "c var^e" joined with " + " / " - ".
std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [neg, body] : terms) {
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += body;
  }
  return out;
}

std::string monomial_body(const mpz_class& abs, int n, int i) {
  const std::string vars = power('q', n) + power('t', i);
  if (vars.empty()) return abs.get_str();
  return (abs == 1 ? "" : abs.get_str()) + vars;
}

std::string t_polynomial(const std::map<int, mpz_class>& coeffs) {
  std::vector<std::pair<bool, std::string>> terms;
  for (const auto& [i, c] : coeffs)
    if (c != 0) terms.emplace_back(c < 0, monomial_body(abs(c), 0, i));
  return join_terms(terms);
}

class PlainParser {
public:
  explicit PlainParser(std::string_view s) : s_(s) {}

  Terms parse_all(bool allow_q) {
    Terms out;
    skip();
    if (peek() == '0' && rest_is_zero()) return out;
    parse_sum(out, allow_q, 0, 1);
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return out;
  }

private:
  void parse_sum(Terms& out, bool allow_q, int qshift, const mpz_class& scale) {
    int sign = 1;
    skip();
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    }
    while (true) {
      parse_term(out, allow_q, qshift, scale * sign);
      skip();
      if (peek() == '+') sign = 1;
      else if (peek() == '-') sign = -1;
      else return;
      ++pos_;
    }
  }

  void parse_term(Terms& out, bool allow_q, int qshift, const mpz_class& scale) {
    skip();
    mpz_class coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = read_number();
      have_coef = true;
    }
    int n = 0, i = 0;
    bool have_var = false;
    if (allow_q && peek() == 'q') {
      ++pos_;
      n = read_exponent();
      have_var = true;
    }
    if (peek() == '(') {
      if (!allow_q) fail("nested parentheses");
      ++pos_;
      parse_sum(out, false, n + qshift, scale * coef);
      skip();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return;
    }
    if (peek() == 't') {
      ++pos_;
      i = read_exponent();
      have_var = true;
    }
    if (!have_coef && !have_var) fail("expected a term");
    out[{n + qshift, i}] += scale * coef;
  }

  int read_exponent() {
    if (peek() != '^') return 1;
    ++pos_;
    return static_cast<int>(read_number().get_si());
  }

  mpz_class read_number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  bool rest_is_zero() const {
    std::size_t p = pos_ + 1;
    while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
    return p == s_.size();
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument("plain text parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "plain") return Format::plain;
  throw std::invalid_argument("unknown format: " + std::string(name));
}

// ---- series ----

std::string emit(const BiSeries& s, Format f) {
  switch (f) {
  case Format::json: {
    json terms = json::array();
    for (int n = 0; n <= s.q_bound(); ++n)
      for (int i = 0; i <= s.t_bound(); ++i)
        if (s.at(n, i) != 0) terms.push_back({n, i, to_json(s.at(n, i))});
    json j;
    j["schema"] = "hhw.series/1";
    j["q_bound"] = s.q_bound();
    j["t_bound"] = s.t_bound();
    j["terms"] = terms;
    return j.dump() + "\n";
  }
  case Format::csv: {
    std::string out = "n,i,dim\n";
    for (int n = 0; n <= s.q_bound(); ++n)
      for (int i = 0; i <= s.t_bound(); ++i)
        if (s.at(n, i) != 0) out += std::to_string(n) + "," + std::to_string(i) + "," + s.at(n, i).get_str() + "\n";
    return out;
  }
  case Format::plain: {
    std::vector<std::pair<bool, std::string>> terms;
    for (int n = 0; n <= s.q_bound(); ++n) {
      std::map<int, mpz_class> poly;
      for (int i = 0; i <= s.t_bound(); ++i)
        if (s.at(n, i) != 0) poly[i] = s.at(n, i);
      if (poly.empty()) continue;
      if (poly.size() == 1) {
        const auto& [i, c] = *poly.begin();
        terms.emplace_back(c < 0, monomial_body(abs(c), n, i));
      } else {
        terms.emplace_back(false, power('q', n) + "(" + t_polynomial(poly) + ")");
      }
    }
    return join_terms(terms) + "\n";
  }
  }
  return {};
}

BiSeries parse_series(std::string_view text, Format f, int q_bound, int t_bound) {
  Terms terms;
  if (f == Format::json) {
    const json j = parse_json(text, "hhw.series/1");
    q_bound = j.at("q_bound").get<int>();
    t_bound = j.at("t_bound").get<int>();
    for (const auto& row : j.at("terms")) terms[{row.at(0).get<int>(), row.at(1).get<int>()}] += from_json(row.at(2));
  } else if (f == Format::csv) {
    const auto rows = csv_rows(text);
    if (rows.empty() || rows.front() != std::vector<std::string>{"n", "i", "dim"})
      throw std::invalid_argument("series CSV needs the header n,i,dim");
    for (std::size_t r = 1; r < rows.size(); ++r) {
      if (rows[r].size() != 3) throw std::invalid_argument("series CSV rows need three fields");
      terms[{to_int(rows[r][0]), to_int(rows[r][1])}] += to_mpz(rows[r][2]);
    }
  } else {
    terms = PlainParser(text).parse_all(true);
  }
  BiSeries s(q_bound, t_bound);
  for (const auto& [key, c] : terms) {
    if (key.first < 0 || key.first > q_bound || key.second < 0 || key.second > t_bound)
      throw std::invalid_argument("series term outside the bounds");
    s.add(key.first, key.second, c);
  }
  return s;
}

// ---- tables ----

std::string emit(const BettiTable& t, Format f, std::optional<int> n) {
  switch (f) {
  case Format::json: {
    json dims = json::array();
    for (const auto& [i, d] : t.entries()) dims.push_back({i, to_json(d)});
    json j;
    j["schema"] = "hhw.table/1";
    if (n) j["n"] = *n;
    j["dims"] = dims;
    return j.dump() + "\n";
  }
  case Format::csv: {
    std::string out = n ? "n,i,dim\n" : "i,dim\n";
    for (const auto& [i, d] : t.entries())
      out += (n ? std::to_string(*n) + "," : "") + std::to_string(i) + "," + d.get_str() + "\n";
    return out;
  }
  case Format::plain:
    return t_polynomial(t.entries()) + "\n";
  }
  return {};
}

BettiTable parse_table(std::string_view text, Format f) {
  std::map<int, mpz_class> dims;
  if (f == Format::json) {
    const json j = parse_json(text, "hhw.table/1");
    for (const auto& row : j.at("dims")) dims[row.at(0).get<int>()] += from_json(row.at(1));
  } else if (f == Format::csv) {
    const auto rows = csv_rows(text);
    if (rows.empty()) throw std::invalid_argument("table CSV needs a header");
    const bool with_n = rows.front() == std::vector<std::string>{"n", "i", "dim"};
    if (!with_n && rows.front() != std::vector<std::string>{"i", "dim"})
      throw std::invalid_argument("table CSV needs the header i,dim or n,i,dim");
    const std::size_t off = with_n ? 1 : 0;
    for (std::size_t r = 1; r < rows.size(); ++r) {
      if (rows[r].size() != off + 2) throw std::invalid_argument("table CSV row has the wrong number of fields");
      dims[to_int(rows[r][off])] += to_mpz(rows[r][off + 1]);
    }
  } else {
    for (const auto& [key, c] : PlainParser(text).parse_all(false)) dims[key.second] += c;
  }
  return BettiTable(dims);
}

// ---- reports ----

std::string emit(const SuiteReport& r, Format f) {
  switch (f) {
  case Format::json: {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    json j;
    j["schema"] = "hhw.report/1";
    j["suite"] = r.suite;
    j["passed"] = r.passed();
    j["checks"] = checks;
    return j.dump() + "\n";
  }
  case Format::csv: {
    std::string out = "suite,check,passed,detail\n";
    if (r.checks.empty()) out += csv_field(r.suite) + ",,,\n";
    for (const auto& c : r.checks)
      out += csv_field(r.suite) + "," + csv_field(c.name) + "," + (c.passed ? "1" : "0") + "," + csv_field(c.detail) + "\n";
    return out;
  }
  case Format::plain: {
    std::string out = "suite " + r.suite + ": " + (r.passed() ? "PASS" : "FAIL") + "\n";
    for (const auto& c : r.checks)
      out += std::string(c.passed ? "PASS " : "FAIL ") + c.name + (c.detail.empty() ? "" : ": " + c.detail) + "\n";
    return out;
  }
  }
  return {};
}

SuiteReport parse_report(std::string_view text, Format f) {
  SuiteReport r;
  if (f == Format::json) {
    const json j = parse_json(text, "hhw.report/1");
    r.suite = j.at("suite").get<std::string>();
    for (const auto& c : j.at("checks"))
      r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("detail").get<std::string>()});
  } else if (f == Format::csv) {
    const auto rows = csv_rows(text);
    if (rows.empty() || rows.front() != std::vector<std::string>{"suite", "check", "passed", "detail"})
      throw std::invalid_argument("report CSV needs the header suite,check,passed,detail");
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (rows[i].size() != 4) throw std::invalid_argument("report CSV rows need four fields");
      r.suite = rows[i][0];
      if (rows[i][1].empty() && rows[i][2].empty()) continue;
      r.checks.push_back({rows[i][1], rows[i][2] == "1", rows[i][3]});
    }
  } else {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || !line.starts_with("suite ")) throw std::invalid_argument("report text needs a suite line");
    const auto colon = line.rfind(": ");
    if (colon == std::string::npos) throw std::invalid_argument("malformed suite line");
    r.suite = line.substr(6, colon - 6);
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      CheckResult c;
      if (line.starts_with("PASS ")) c.passed = true;
      else if (!line.starts_with("FAIL ")) throw std::invalid_argument("report line must start with PASS or FAIL");
      const std::string body = line.substr(5);
      const auto sep = body.find(": ");
      c.name = body.substr(0, sep);
      if (sep != std::string::npos) c.detail = body.substr(sep + 2);
      r.checks.push_back(std::move(c));
    }
  }
  return r;
}

} // namespace hhw
