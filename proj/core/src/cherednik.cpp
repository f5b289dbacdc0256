#include "hhw/cherednik.hpp"

#include "hhw/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hhw {

namespace {

const QPoly kOne(mpq_class(1));
const QPoly kVar = QPoly::monomial(1); // k

void check_n(int n) {
  if (n < 2) throw std::invalid_argument("Cherednik algebra needs n >= 2");
}

void check_letter(const Letter& l, int n) {
  if (l.kind == Letter::Kind::perm) {
    if (static_cast<int>(l.perm.size()) != n) throw std::invalid_argument("permutation has the wrong size");
    return;
  }
  if (l.index < 0 || l.index >= n) throw std::invalid_argument("generator index out of range");
}

bool is_redex(const Letter& l, const Letter& r) {
  using K = Letter::Kind;
  if (l.kind == K::perm) return r.kind != K::p;
  if (l.kind == K::p) return r.kind != K::p || l.index > r.index;
  return r.kind == K::x && l.index > r.index;
}

void push(std::map<Word, QPoly>& pending, Word w, const QPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = pending.try_emplace(std::move(w), c);
  if (inserted) return;
  it->second = it->second + c;
  if (it->second.is_zero()) pending.erase(it);
}

Word splice(const Word& w, std::size_t pos, std::size_t len, const Word& mid) {
  Word out(w.begin(), w.begin() + static_cast<long>(pos));
  out.insert(out.end(), mid.begin(), mid.end());
  out.insert(out.end(), w.begin() + static_cast<long>(pos + len), w.end());
  return out;
}

// Replaces the redex at (pos, pos+1) of w, adding c * (result) to pending.
void rewrite(const Word& w, std::size_t pos, const QPoly& c, int n, std::map<Word, QPoly>& pending) {
  using K = Letter::Kind;
  const Letter& l = w[pos];
  const Letter& r = w[pos + 1];
  if (l.kind == K::perm && r.kind == K::perm) {
    const Perm s = compose(l.perm, r.perm);
    push(pending, splice(w, pos, 2, is_identity(s) ? Word{} : Word{perm_letter(s)}), c);
  } else if (l.kind == K::perm && r.kind == K::x) {
    // sigma x_i = x_{sigma(i)} sigma
    push(pending, splice(w, pos, 2, {x_letter(l.perm[r.index]), l}), c);
  } else if (l.kind == K::p && r.kind == K::perm) {
    // p_j sigma = sigma p_{sigma^-1(j)}
    push(pending, splice(w, pos, 2, {r, p_letter(inverse(r.perm)[l.index])}), c);
  } else if (l.kind == K::p && r.kind == K::x) {
    const int j = l.index, i = r.index;
    push(pending, splice(w, pos, 2, {r, l}), c);
    if (i != j) {
      // p_j x_i = x_i p_j - k s_ij
      push(pending, splice(w, pos, 2, {perm_letter(transposition(n, i, j))}), QPoly() - c * kVar);
    } else {
      // p_i x_i = x_i p_i - 1 + k sum_{j != i} s_ij
      push(pending, splice(w, pos, 2, {}), QPoly() - c);
      for (int t = 0; t < n; ++t)
        if (t != i) push(pending, splice(w, pos, 2, {perm_letter(transposition(n, i, t))}), c * kVar);
    }
  } else {
    // commuting letters out of index order
    push(pending, splice(w, pos, 2, {r, l}), c);
  }
}

NormalMonomial to_monomial(const Word& w, int n) {
  NormalMonomial m{std::vector<int>(n, 0), identity_perm(n), std::vector<int>(n, 0)};
  for (const Letter& l : w) {
    if (l.kind == Letter::Kind::x) ++m.xexp[l.index];
    else if (l.kind == Letter::Kind::p) ++m.pexp[l.index];
    else m.perm = l.perm;
  }
  return m;
}

std::string coefficient_string(const QPoly& c, bool& negative) {
  std::string s = c.to_string("k");
  negative = false;
  if (s.find(' ') != std::string::npos) return "(" + s + ")";
  if (s.front() == '-') {
    negative = true;
    s = s.substr(1);
  }
  return s;
}

std::string perm_string(const Perm& s) {
  const int n = static_cast<int>(s.size());
  std::vector<int> moved;
  for (int i = 0; i < n; ++i)
    if (s[i] != i) moved.push_back(i);
  if (moved.size() == 2 && n <= 9) return "s" + std::to_string(moved[0] + 1) + std::to_string(moved[1] + 1);
  if (moved.size() == 2) return "s" + std::to_string(moved[0] + 1) + "," + std::to_string(moved[1] + 1);
  std::string out = "g";
  for (int i = 0; i < n; ++i) out += (n > 9 && i ? "," : "") + std::to_string(s[i] + 1);
  return out;
}

std::string monomial_string(const NormalMonomial& m) {
  std::vector<std::string> parts;
  auto vars = [&](const char* v, const std::vector<int>& e) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string s = v + std::to_string(i + 1);
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
      parts.push_back(std::move(s));
    }
  };
  vars("x", m.xexp);
  if (!is_identity(m.perm)) parts.push_back(perm_string(m.perm));
  vars("p", m.pexp);
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

int parse_index(std::string_view s, int n) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("bad generator index: " + std::string(s));
  const int i = std::stoi(std::string(s));
  if (i < 1 || i > n) throw std::invalid_argument("generator index out of range: " + std::string(s));
  return i - 1;
}

Letter parse_token(std::string_view tok, int n) {
  const char head = tok.front();
  const std::string_view rest = tok.substr(1);
  if (head == 'x') return x_letter(parse_index(rest, n));
  if (head == 'p') return p_letter(parse_index(rest, n));
  if (head == 's') {
    int i, j;
    if (auto comma = rest.find(','); comma != std::string_view::npos) {
      i = parse_index(rest.substr(0, comma), n);
      j = parse_index(rest.substr(comma + 1), n);
    } else if (rest.size() == 2) {
      i = parse_index(rest.substr(0, 1), n);
      j = parse_index(rest.substr(1, 1), n);
    } else {
      throw std::invalid_argument("bad transposition: " + std::string(tok));
    }
    if (i == j) throw std::invalid_argument("transposition needs two distinct indices: " + std::string(tok));
    return perm_letter(transposition(n, i, j));
  }
  if (head == 'g') {
    std::vector<std::string_view> pieces;
    if (rest.find(',') != std::string_view::npos) {
      std::size_t start = 0;
      while (true) {
        const auto comma = rest.find(',', start);
        pieces.push_back(rest.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    } else {
      for (std::size_t k = 0; k < rest.size(); ++k) pieces.push_back(rest.substr(k, 1));
    }
    if (static_cast<int>(pieces.size()) != n) throw std::invalid_argument("permutation needs n entries: " + std::string(tok));
    Perm s;
    for (auto piece : pieces) s.push_back(parse_index(piece, n));
    Perm sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity_perm(n)) throw std::invalid_argument("not a permutation: " + std::string(tok));
    return perm_letter(s);
  }
  throw std::invalid_argument("unknown generator: " + std::string(tok));
}

// ---- Dunkl representation ----

void add_poly(QMultiPoly& acc, const std::vector<int>& e, const mpq_class& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = acc.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) acc.erase(it);
}

QMultiPoly permute_vars(const Perm& s, const QMultiPoly& f) {
  QMultiPoly out;
  for (const auto& [e, c] : f) {
    std::vector<int> img(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) img[s[i]] = e[i];
    add_poly(out, img, c);
  }
  return out;
}

// -D_i f = -d_i f + k sum_{j != i} (f - s_ij f) / (x_i - x_j)
QMultiPoly minus_dunkl(int i, const mpq_class& k, const QMultiPoly& f) {
  const int n = f.empty() ? 0 : static_cast<int>(f.begin()->first.size());
  QMultiPoly out;
  for (const auto& [e, c] : f) {
    if (e[i] > 0) {
      std::vector<int> d = e;
      --d[i];
      add_poly(out, d, -c * e[i]);
    }
    for (int j = 0; j < n; ++j) {
      if (j == i || e[i] == e[j]) continue;
      // (x_i^a x_j^b - x_i^b x_j^a)/(x_i - x_j) = sign * x_i^m x_j^m sum_t x_i^{d-1-t} x_j^t
      const int lo = std::min(e[i], e[j]);
      const int d = std::abs(e[i] - e[j]);
      const mpq_class coef = (e[i] > e[j] ? k : -k) * c;
      std::vector<int> base = e;
      base[i] = lo;
      base[j] = lo;
      for (int t = 0; t < d; ++t) {
        std::vector<int> term = base;
        term[i] += d - 1 - t;
        term[j] += t;
        add_poly(out, term, coef);
      }
    }
  }
  return out;
}

QMultiPoly apply_letter(const Letter& l, const mpq_class& k, const QMultiPoly& f) {
  switch (l.kind) {
  case Letter::Kind::x: {
    QMultiPoly out;
    for (const auto& [e, c] : f) {
      std::vector<int> d = e;
      ++d[l.index];
      add_poly(out, d, c);
    }
    return out;
  }
  case Letter::Kind::perm:
    return permute_vars(l.perm, f);
  case Letter::Kind::p:
    return minus_dunkl(l.index, k, f);
  }
  return f;
}

void enumerate_exponents(int n, int budget, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= budget; ++e) {
    cur.push_back(e);
    enumerate_exponents(n, budget - e, cur, out);
    cur.pop_back();
  }
}

void enumerate_words(const std::vector<Letter>& alphabet, int len, Word& cur, const auto& visit) {
  visit(cur);
  if (len == 0) return;
  for (const Letter& l : alphabet) {
    cur.push_back(l);
    enumerate_words(alphabet, len - 1, cur, visit);
    cur.pop_back();
  }
}

std::vector<Letter> full_alphabet(int n) {
  std::vector<Letter> out;
  for (int i = 0; i < n; ++i) out.push_back(x_letter(i));
  for (int i = 0; i < n; ++i) out.push_back(p_letter(i));
  for (const Perm& s : all_perms(n))
    if (!is_identity(s)) out.push_back(perm_letter(s));
  return out;
}

int xp_length(const Word& w) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](const Letter& l) { return l.kind != Letter::Kind::perm; }));
}

} // namespace

// ---- permutations ----

Perm identity_perm(int n) {
  Perm s(n);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

Perm compose(const Perm& s, const Perm& t) {
  if (s.size() != t.size()) throw std::invalid_argument("compose: size mismatch");
  Perm out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[t[i]];
  return out;
}

Perm inverse(const Perm& s) {
  Perm out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[s[i]] = static_cast<int>(i);
  return out;
}

Perm transposition(int n, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= n || j >= n)
    throw std::invalid_argument("transposition: need distinct indices in [0, n)");
  Perm s = identity_perm(n);
  std::swap(s[i], s[j]);
  return s;
}

bool is_identity(const Perm& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm s = identity_perm(n);
  do {
    out.push_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

Letter x_letter(int i) { return {Letter::Kind::x, i, {}}; }
Letter p_letter(int i) { return {Letter::Kind::p, i, {}}; }
Letter perm_letter(Perm s) { return {Letter::Kind::perm, 0, std::move(s)}; }

// ---- monomials and elements ----

int NormalMonomial::degree() const {
  return std::accumulate(xexp.begin(), xexp.end(), 0) + std::accumulate(pexp.begin(), pexp.end(), 0);
}

NormalMonomial unit_monomial(int n) { return {std::vector<int>(n, 0), identity_perm(n), std::vector<int>(n, 0)}; }

Word to_word(const NormalMonomial& m) {
  Word w;
  for (std::size_t i = 0; i < m.xexp.size(); ++i)
    for (int t = 0; t < m.xexp[i]; ++t) w.push_back(x_letter(static_cast<int>(i)));
  if (!is_identity(m.perm)) w.push_back(perm_letter(m.perm));
  for (std::size_t i = 0; i < m.pexp.size(); ++i)
    for (int t = 0; t < m.pexp[i]; ++t) w.push_back(p_letter(static_cast<int>(i)));
  return w;
}

CherednikElement CherednikElement::monomial(const NormalMonomial& m, const QPoly& c) {
  CherednikElement a(static_cast<int>(m.perm.size()));
  a.add_term(m, c);
  return a;
}

void CherednikElement::add_term(const NormalMonomial& m, const QPoly& c) {
  if (static_cast<int>(m.perm.size()) != n_) throw std::invalid_argument("monomial has the wrong n");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

CherednikElement operator+(CherednikElement a, const CherednikElement& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("Cherednik elements with different n");
  for (const auto& [m, c] : b.terms_) a.add_term(m, c);
  return a;
}

CherednikElement operator-(CherednikElement a, const CherednikElement& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("Cherednik elements with different n");
  for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
  return a;
}

CherednikElement operator*(const QPoly& c, CherednikElement a) {
  if (c.is_zero()) return CherednikElement(a.n_);
  for (auto& [m, v] : a.terms_) v = c * v;
  return a;
}

std::string CherednikElement::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<NormalMonomial, QPoly>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
    return is_identity(a.first.perm) && !is_identity(b.first.perm);
  });
  std::string out;
  for (const auto& [m, c] : sorted) {
    bool neg = false;
    const std::string coef = coefficient_string(c, neg);
    const std::string mono = monomial_string(m);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mono.empty())
      out += coef;
    else
      out += (coef == "1" ? "" : coef + " ") + mono;
  }
  return out;
}

// ---- rewriting ----

CherednikElement normal_order(const Word& word, int n, Strategy strategy) {
  check_n(n);
  Word start;
  for (const Letter& l : word) {
    check_letter(l, n);
    if (l.kind == Letter::Kind::perm && is_identity(l.perm)) continue;
    start.push_back(l);
  }
  std::map<Word, QPoly> pending;
  pending.emplace(std::move(start), kOne);
  CherednikElement out(n);
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const QPoly& c = node.mapped();
    std::optional<std::size_t> pos;
    if (w.size() >= 2) {
      if (strategy == Strategy::leftmost) {
        for (std::size_t i = 0; i + 1 < w.size() && !pos; ++i)
          if (is_redex(w[i], w[i + 1])) pos = i;
      } else {
        for (std::size_t i = w.size() - 1; i-- > 0 && !pos;)
          if (is_redex(w[i], w[i + 1])) pos = i;
      }
    }
    if (pos)
      rewrite(w, *pos, c, n, pending);
    else
      out.add_term(to_monomial(w, n), c);
  }
  return out;
}

CherednikElement multiply(const CherednikElement& a, const CherednikElement& b) {
  if (a.n() != b.n()) throw std::invalid_argument("Cherednik elements with different n");
  CherednikElement out(a.n());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Word w = to_word(ma);
      const Word wb = to_word(mb);
      w.insert(w.end(), wb.begin(), wb.end());
      out = out + (ca * cb) * normal_order(w, a.n());
    }
  return out;
}

CherednikElement specialize_k0(const CherednikElement& a) {
  CherednikElement out(a.n());
  for (const auto& [m, c] : a.terms()) out.add_term(m, QPoly(c.coeff(0)));
  return out;
}

CherednikElement crossed_product_normal_form(const Word& word, int n) {
  check_n(n);
  std::map<NormalMonomial, mpq_class> cur{{unit_monomial(n), mpq_class(1)}};
  for (const Letter& l : word) {
    check_letter(l, n);
    std::map<NormalMonomial, mpq_class> next;
    auto add = [&](const NormalMonomial& m, const mpq_class& c) {
      auto [it, inserted] = next.try_emplace(m, c);
      if (!inserted) it->second += c;
    };
    for (const auto& [m, c] : cur) {
      if (l.kind == Letter::Kind::x) {
        // x^a s p^b x_i = x^{a + e_s(i)} s p^b - b_i x^a s p^{b - e_i}
        NormalMonomial m1 = m;
        ++m1.xexp[m.perm[l.index]];
        add(m1, c);
        if (m.pexp[l.index] > 0) {
          NormalMonomial m2 = m;
          --m2.pexp[l.index];
          add(m2, -c * m.pexp[l.index]);
        }
      } else if (l.kind == Letter::Kind::p) {
        NormalMonomial m1 = m;
        ++m1.pexp[l.index];
        add(m1, c);
      } else {
        // p^b t = t p^{b'}, b'_{t^-1(j)} = b_j
        NormalMonomial m1 = m;
        m1.perm = compose(m.perm, l.perm);
        const Perm inv = inverse(l.perm);
        for (int j = 0; j < n; ++j) m1.pexp[inv[j]] = m.pexp[j];
        add(m1, c);
      }
    }
    cur = std::move(next);
  }
  CherednikElement out(n);
  for (const auto& [m, c] : cur) out.add_term(m, QPoly(c));
  return out;
}

CherednikElement symmetrizer(int n) {
  check_n(n);
  const auto perms = all_perms(n);
  const QPoly w(mpq_class(1, static_cast<long>(perms.size())));
  CherednikElement e(n);
  for (const Perm& s : perms) e.add_term({std::vector<int>(n, 0), s, std::vector<int>(n, 0)}, w);
  return e;
}

CherednikElement spherical_product(const CherednikElement& a) {
  const CherednikElement e = symmetrizer(a.n());
  return multiply(multiply(e, a), e);
}

// ---- parsing ----

Word parse_word(std::string_view text, int n) {
  check_n(n);
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '*') ++j;
    if (j > i) {
      const std::string_view tok = text.substr(i, j - i);
      if (tok != "1") w.push_back(parse_token(tok, n));
    }
    i = j;
  }
  return w;
}

std::string to_string(const Word& w) {
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    if (l.kind == Letter::Kind::x) out += "x" + std::to_string(l.index + 1);
    else if (l.kind == Letter::Kind::p) out += "p" + std::to_string(l.index + 1);
    else out += perm_string(l.perm);
  }
  return out.empty() ? "1" : out;
}

// ---- certification ----

ConfluenceReport confluence_check(int n, int max_len) {
  check_n(n);
  if (max_len < 0) throw std::invalid_argument("confluence_check: negative length");
  ConfluenceReport report;
  Word cur;
  enumerate_words(full_alphabet(n), max_len, cur, [&](const Word& w) {
    ++report.words_checked;
    const CherednikElement a = normal_order(w, n, Strategy::leftmost);
    const CherednikElement b = normal_order(w, n, Strategy::rightmost);
    if (a != b && report.passed) {
      report.passed = false;
      report.counterexample = to_string(w) + ": " + a.to_string() + " vs " + b.to_string();
    }
  });
  return report;
}

QMultiPoly dunkl_apply(const Word& w, const mpq_class& k, const QMultiPoly& f) {
  QMultiPoly out = f;
  for (std::size_t i = w.size(); i-- > 0;) out = apply_letter(w[i], k, out);
  return out;
}

QMultiPoly dunkl_apply(const NormalMonomial& m, const mpq_class& k, const QMultiPoly& f) {
  return dunkl_apply(to_word(m), k, f);
}

PbwReport pbw_dimension_check(int n, int max_deg) {
  check_n(n);
  if (max_deg < 0) throw std::invalid_argument("pbw_dimension_check: negative degree");
  PbwReport report;
  const auto perms = all_perms(n);
  mpz_class expected;
  mpz_bin_uiui(expected.get_mpz_t(), static_cast<unsigned long>(2 * n + max_deg), static_cast<unsigned long>(max_deg));
  expected *= static_cast<unsigned long>(perms.size());
  report.expected = expected.get_ui();

  std::vector<std::vector<int>> pairs; // concatenated (xexp, pexp)
  std::vector<int> cur;
  enumerate_exponents(2 * n, max_deg, cur, pairs);
  std::vector<NormalMonomial> monomials;
  for (const Perm& s : perms)
    for (const auto& e : pairs)
      monomials.push_back({std::vector<int>(e.begin(), e.begin() + n), s, std::vector<int>(e.begin() + n, e.end())});
  report.counted = monomials.size();

  // Test polynomials: all monomials up to a degree that separates group
  // elements after up to max_deg derivatives.
  const int test_deg = max_deg + n * (n - 1) / 2;
  std::vector<std::vector<int>> tests;
  enumerate_exponents(n, test_deg, cur, tests);
  const Index base = static_cast<Index>(test_deg + max_deg + 1);
  Index block = 1;
  for (int i = 0; i < n; ++i) block *= base;
  const mpq_class k(3, 7);
  std::vector<SparseVector<mpq_class>> columns;
  columns.reserve(monomials.size());
  for (const auto& m : monomials) {
    std::map<Index, mpq_class> acc;
    for (std::size_t t = 0; t < tests.size(); ++t) {
      const QMultiPoly img = dunkl_apply(m, k, QMultiPoly{{tests[t], mpq_class(1)}});
      for (const auto& [e, c] : img) {
        Index idx = 0;
        for (int i = n; i-- > 0;) idx = idx * base + static_cast<Index>(e[i]);
        acc[t * block + idx] += c;
      }
    }
    columns.push_back(to_sparse(acc));
  }
  report.rank = exact_rank(columns, tests.size() * block);

  Word w;
  enumerate_words(full_alphabet(n), max_deg, w, [&](const Word& word) {
    const int len = xp_length(word);
    const CherednikElement reduced = normal_order(word, n);
    for (const auto& [m, c] : reduced.terms())
      if (m.degree() > len) report.filtration_ok = false;
  });
  report.passed = report.counted == report.expected && report.rank == report.counted && report.filtration_ok;
  return report;
}

} // namespace hhw
