#include "jpca/rulespec.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <memory>
#include <vector>

namespace jpca {
namespace {

struct Cursor {
  std::string_view s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(i));
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (s.substr(i, w.size()) == w) {
      i += w.size();
      return true;
    }
    return false;
  }
  long long integer() {
    skip_ws();
    bool neg = accept('-');
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("expected integer at offset " + std::to_string(i));
    long long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > std::numeric_limits<int>::max()) throw ParseError("integer too large");
      ++i;
    }
    return neg ? -v : v;
  }
};

// --- polynomial AST ---

struct Poly;

struct Factor {
  // base is either a variable index or a subexpression
  int var_index = 0;
  unsigned exponent = 1;
  std::unique_ptr<Poly> sub;
};

struct Term {
  long long coeff = 1;
  std::vector<Factor> factors;
};

struct Poly {
  std::vector<Term> terms;
};

void collect_indices(const Poly& p, int& lo, int& hi, bool& any) {
  for (const Term& t : p.terms)
    for (const Factor& f : t.factors) {
      if (f.sub) {
        collect_indices(*f.sub, lo, hi, any);
      } else {
        lo = any ? std::min(lo, f.var_index) : f.var_index;
        hi = any ? std::max(hi, f.var_index) : f.var_index;
        any = true;
      }
    }
}

unsigned eval_poly(const Poly& p, std::span<const std::uint8_t> window, int lo, unsigned n);

unsigned eval_factor(const Factor& f, std::span<const std::uint8_t> window, int lo, unsigned n) {
  unsigned base = f.sub ? eval_poly(*f.sub, window, lo, n)
                        : window[static_cast<size_t>(f.var_index - lo)];
  unsigned r = 1;
  for (unsigned e = 0; e < f.exponent; ++e) r = (r * base) % n;
  return r;
}

unsigned eval_poly(const Poly& p, std::span<const std::uint8_t> window, int lo, unsigned n) {
  unsigned sum = 0;
  for (const Term& t : p.terms) {
    unsigned prod = static_cast<unsigned>(((t.coeff % n) + n) % n);
    for (const Factor& f : t.factors) prod = (prod * eval_factor(f, window, lo, n)) % n;
    sum = (sum + prod) % n;
  }
  return sum;
}

Poly parse_poly(Cursor& c, int max_index);

Factor parse_factor(Cursor& c, int max_index) {
  Factor f;
  if (c.accept('(')) {
    f.sub = std::make_unique<Poly>(parse_poly(c, max_index));
    c.expect(')');
  } else if (c.accept('x')) {
    if (c.accept('(')) {
      long long idx = c.integer();
      c.expect(')');
      f.var_index = static_cast<int>(idx);
    } else {
      f.var_index = static_cast<int>(c.integer());
    }
    if (f.var_index > max_index || f.var_index < -max_index)
      throw ParseError("variable index " + std::to_string(f.var_index) +
                       " exceeds the configured bound " + std::to_string(max_index));
  } else {
    throw ParseError("expected variable or '(' at offset " + std::to_string(c.i));
  }
  if (c.accept('^')) {
    long long e = c.integer();
    if (e < 0) throw ParseError("negative exponent");
    f.exponent = static_cast<unsigned>(e);
  }
  return f;
}

bool starts_factor(Cursor& c) {
  char ch = c.peek();
  return ch == 'x' || ch == '(';
}

Term parse_term(Cursor& c, int max_index) {
  Term t;
  bool have_any = false;
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    t.coeff = c.integer();
    have_any = true;
  }
  while (true) {
    if (c.accept('*')) {
      t.factors.push_back(parse_factor(c, max_index));
      have_any = true;
      continue;
    }
    if (starts_factor(c)) {
      t.factors.push_back(parse_factor(c, max_index));
      have_any = true;
      continue;
    }
    break;
  }
  if (!have_any) throw ParseError("empty term at offset " + std::to_string(c.i));
  return t;
}

Poly parse_poly(Cursor& c, int max_index) {
  Poly p;
  p.terms.push_back(parse_term(c, max_index));
  while (c.accept('+')) p.terms.push_back(parse_term(c, max_index));
  return p;
}

LocalRule compile_poly(const Poly& p, unsigned n) {
  int lo = 0, hi = 0;
  bool any = false;
  collect_indices(p, lo, hi, any);
  if (!any) lo = hi = 0;
  const unsigned span = static_cast<unsigned>(hi - lo + 1);
  const std::uint64_t entries = ipow(n, span);
  if (entries > kMaxTableEntries)
    throw BudgetError("polynomial window too wide for the table budget", entries);
  std::vector<std::uint8_t> table(entries);
  std::vector<std::uint8_t> window(span);
  for (std::uint64_t idx = 0; idx < entries; ++idx) {
    std::uint64_t v = idx;
    for (unsigned i = span; i-- > 0;) {
      window[i] = static_cast<std::uint8_t>(v % n);
      v /= n;
    }
    table[idx] = static_cast<std::uint8_t>(eval_poly(p, window, lo, n));
  }
  return LocalRule(n, lo, hi, std::move(table));
}

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '/';
}

LocalRule parse_spec(Cursor& c, const RuleResolver& resolve);

unsigned parse_alphabet_header(Cursor& c) {
  c.expect('(');
  if (!c.accept_word("N")) throw ParseError("expected N= at offset " + std::to_string(c.i));
  c.expect('=');
  long long n = c.integer();
  if (n < 2 || n > 10) throw ParseError("alphabet size must be in [2,10]");
  return static_cast<unsigned>(n);
}

LocalRule parse_spec(Cursor& c, const RuleResolver& resolve) {
  if (c.accept_word("poly")) {
    unsigned n = parse_alphabet_header(c);
    c.expect(')');
    c.expect(':');
    Poly p = parse_poly(c, 16);
    return compile_poly(p, n);
  }
  if (c.accept_word("table")) {
    unsigned n = parse_alphabet_header(c);
    c.expect(',');
    if (!c.accept_word("span")) throw ParseError("expected span=");
    c.expect('=');
    long long span = c.integer();
    if (span < 1 || span > 24) throw ParseError("span out of range");
    int lo = 0;
    if (c.accept(',')) {
      if (!c.accept_word("lo")) throw ParseError("expected lo=");
      c.expect('=');
      lo = static_cast<int>(c.integer());
    }
    c.expect(')');
    c.expect(':');
    std::string symbols;
    while (true) {
      char ch = c.peek();
      if (ch >= '0' && ch <= '9') {
        symbols.push_back(ch);
        ++c.i;
      } else {
        break;
      }
    }
    return from_lookup_code(symbols, n, static_cast<unsigned>(span), lo);
  }
  if (c.accept_word("compose")) {
    c.expect('(');
    LocalRule outer = parse_spec(c, resolve);
    c.expect(',');
    LocalRule inner = parse_spec(c, resolve);
    c.expect(')');
    return compose(outer, inner);
  }
  if (c.accept_word("shift")) {
    c.expect('(');
    LocalRule r = parse_spec(c, resolve);
    c.expect(',');
    long long j = c.integer();
    c.expect(')');
    return compose_shift(r, static_cast<int>(j));
  }
  if (c.accept_word("flipr")) {
    c.expect('(');
    LocalRule r = parse_spec(c, resolve);
    c.expect(')');
    return flip_pre(r);
  }
  if (c.accept_word("flip")) {
    c.expect('(');
    LocalRule r = parse_spec(c, resolve);
    c.expect(')');
    return flip_post(r);
  }
  // bare name
  c.skip_ws();
  size_t start = c.i;
  while (c.i < c.s.size() && name_char(c.s[c.i])) ++c.i;
  if (c.i == start) throw ParseError("expected rule spec at offset " + std::to_string(start));
  std::string_view name = c.s.substr(start, c.i - start);
  if (!resolve) throw ParseError("unknown name '" + std::string(name) + "' (no resolver)");
  return resolve(name);
}

}  // namespace

LocalRule from_polynomial(std::string_view expr, unsigned alphabet_size, int max_index) {
  if (alphabet_size < 2) throw std::invalid_argument("alphabet size must be at least 2");
  Cursor c{expr};
  Poly p = parse_poly(c, max_index);
  if (!c.eof()) throw ParseError("trailing input at offset " + std::to_string(c.i));
  return compile_poly(p, alphabet_size);
}

LocalRule parse_rulespec(std::string_view spec, const RuleResolver& resolve) {
  Cursor c{spec};
  LocalRule r = parse_spec(c, resolve);
  if (!c.eof()) throw ParseError("trailing input at offset " + std::to_string(c.i));
  return r;
}

}  // namespace jpca
