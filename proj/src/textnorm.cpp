#include "mtmetrics/textnorm.hpp"

#include <algorithm>
#include <array>

#include "mtmetrics/error.hpp"

namespace mtmetrics {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Characters padded with spaces by the first 13a rule. These are the
// printable ASCII symbols minus apostrophe, comma, dash and period.
constexpr std::array<bool, 128> make_symbol_table() {
  std::array<bool, 128> t{};
  auto mark = [&t](int lo, int hi) {
    for (int c = lo; c <= hi; ++c) t[c] = true;
  };
  mark('{', '~');
  mark('[', '`');
  mark(' ', '&');
  mark('(', '+');
  mark(':', '@');
  mark('/', '/');
  return t;
}

constexpr auto kSymbol = make_symbol_table();

bool is_symbol(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u < 128 && kSymbol[u];
}

void replace_all(std::string& s, std::string_view from, std::string_view to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
}

std::vector<std::string> split_ascii_ws(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_ascii_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_ascii_space(text[j])) ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

char32_t lower_codepoint(char32_t c) {
  if (c < 0x80) return (c >= 'A' && c <= 'Z') ? c + 32 : c;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 0x20;
  if (c == 0x130) return U'i';
  if (c >= 0x100 && c <= 0x137) return (c % 2 == 0) ? c + 1 : c;
  if (c >= 0x139 && c <= 0x148) return (c % 2 == 1) ? c + 1 : c;
  if (c >= 0x14A && c <= 0x177) return (c % 2 == 0) ? c + 1 : c;
  if (c == 0x178) return 0xFF;
  if (c >= 0x179 && c <= 0x17E) return (c % 2 == 1) ? c + 1 : c;
  if (c == 0x386) return 0x3AC;
  if (c >= 0x388 && c <= 0x38A) return c + 0x25;
  if (c == 0x38C) return 0x3CC;
  if (c == 0x38E || c == 0x38F) return c + 0x3F;
  if (c >= 0x391 && c <= 0x3A9 && c != 0x3A2) return c + 0x20;
  if (c >= 0x400 && c <= 0x40F) return c + 0x50;
  if (c >= 0x410 && c <= 0x42F) return c + 0x20;
  return c;
}

// Length of the well-formed UTF-8 sequence starting at text[i], or 0.
std::size_t utf8_sequence_length(std::string_view text, std::size_t i, char32_t* out) {
  const auto b0 = static_cast<unsigned char>(text[i]);
  std::size_t len;
  char32_t cp;
  char32_t min;
  if (b0 < 0x80) {
    *out = b0;
    return 1;
  } else if ((b0 & 0xE0) == 0xC0) {
    len = 2, cp = b0 & 0x1F, min = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3, cp = b0 & 0x0F, min = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4, cp = b0 & 0x07, min = 0x10000;
  } else {
    return 0;
  }
  if (i + len > text.size()) return 0;
  for (std::size_t k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(text[i + k]);
    if ((b & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (b & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return 0;
  *out = cp;
  return len;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

}  // namespace

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

std::string_view scheme_name(TokenizeScheme scheme) {
  switch (scheme) {
    case TokenizeScheme::kThirteenA: return "13a";
    case TokenizeScheme::kWhitespace: return "ws";
    case TokenizeScheme::kNone: return "none";
  }
  return "?";
}

TokenizeScheme parse_scheme(std::string_view name) {
  if (name == "13a") return TokenizeScheme::kThirteenA;
  if (name == "ws" || name == "whitespace") return TokenizeScheme::kWhitespace;
  if (name == "none") return TokenizeScheme::kNone;
  throw InputError("unknown tokenizer '" + std::string(name) + "' (expected 13a, ws, none)");
}

TokenSequence::TokenSequence(std::vector<std::string> tokens, TokenizerConfig config)
    : tokens_(std::move(tokens)), config_(config) {
  for (const auto& t : tokens_) {
    if (t.empty()) throw InputError("empty token");
    if (std::any_of(t.begin(), t.end(), is_ascii_space)) {
      throw InputError("token contains whitespace: '" + t + "'");
    }
  }
}

std::string TokenSequence::joined() const {
  std::string out;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens_[i];
  }
  return out;
}

std::int64_t NGramProfile::total() const {
  std::int64_t sum = 0;
  for (const auto& [gram, count] : counts) sum += count;
  return sum;
}

std::string normalize_13a(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), '\n', ' ');
  if (s.find('&') != std::string::npos) {
    replace_all(s, "&quot;", "\"");
    replace_all(s, "&amp;", "&");
    replace_all(s, "&lt;", "<");
    replace_all(s, "&gt;", ">");
  }
  s = " " + s + " ";

  std::string a;
  a.reserve(s.size() * 2);
  for (char c : s) {
    if (is_symbol(c)) {
      a.push_back(' ');
      a.push_back(c);
      a.push_back(' ');
    } else {
      a.push_back(c);
    }
  }

  // A period or comma becomes its own token unless digits sit on both
  // sides. Evaluated per character against the unpadded neighbours; a
  // chained regex pass would skip the second mark in runs such as "..3".
  std::string c;
  c.reserve(a.size() * 2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const char ch = a[i];
    if (ch == '.' || ch == ',') {
      const bool digit_before = i > 0 && is_digit(a[i - 1]);
      const bool digit_after = i + 1 < a.size() && is_digit(a[i + 1]);
      if (!digit_before || !digit_after) {
        c.push_back(' ');
        c.push_back(ch);
        c.push_back(' ');
        continue;
      }
    }
    c.push_back(ch);
  }

  // dash preceded by a digit
  std::string d;
  d.reserve(c.size() * 2);
  for (std::size_t i = 0; i < c.size();) {
    if (i + 1 < c.size() && is_digit(c[i]) && c[i + 1] == '-') {
      d.push_back(c[i]);
      d.push_back(' ');
      d.push_back('-');
      d.push_back(' ');
      i += 2;
    } else {
      d.push_back(c[i++]);
    }
  }
  return d;
}

std::string lowercase_utf8(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    char32_t cp = 0;
    const std::size_t len = utf8_sequence_length(text, i, &cp);
    if (len == 0) {
      out.push_back(text[i++]);
      continue;
    }
    if (len == 1) {
      out.push_back(static_cast<char>(lower_codepoint(cp)));
    } else {
      append_utf8(out, lower_codepoint(cp));
    }
    i += len;
  }
  return out;
}

std::optional<std::size_t> find_invalid_utf8(std::string_view text) {
  for (std::size_t i = 0; i < text.size();) {
    char32_t cp = 0;
    const std::size_t len = utf8_sequence_length(text, i, &cp);
    if (len == 0) return i;
    i += len;
  }
  return std::nullopt;
}

TokenSequence tokenize(std::string_view text, const TokenizerConfig& config) {
  std::vector<std::string> tokens;
  switch (config.scheme()) {
    case TokenizeScheme::kThirteenA:
      tokens = split_ascii_ws(normalize_13a(text));
      break;
    case TokenizeScheme::kWhitespace:
    case TokenizeScheme::kNone:
      tokens = split_ascii_ws(text);
      break;
  }
  if (config.lowercase()) {
    for (auto& t : tokens) t = lowercase_utf8(t);
  }
  return TokenSequence(TokenSequence::Unchecked{}, std::move(tokens), config);
}

NGramProfile extract_ngrams(const TokenSequence& seq, std::size_t n) {
  if (n == 0) throw InputError("n-gram order must be at least 1");
  NGramProfile profile;
  profile.order = n;
  const auto& toks = seq.tokens();
  if (toks.size() < n) return profile;
  for (std::size_t i = 0; i + n <= toks.size(); ++i) {
    ++profile.counts[NGram(toks.begin() + static_cast<std::ptrdiff_t>(i),
                           toks.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  return profile;
}

}  // namespace mtmetrics
