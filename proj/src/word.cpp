#include "braidcsp/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "braidcsp/error.hpp"

namespace braidcsp {

Word Word::from_ints(std::span<const int> entries) {
  std::vector<Letter> letters;
  letters.reserve(entries.size());
  for (int e : entries) {
    if (e == 0) throw InputError("zero entry in braid word");
    letters.push_back({e > 0 ? e : -e, e > 0 ? 1 : -1});
  }
  return Word(std::move(letters));
}

int Word::max_index() const noexcept {
  int m = 0;
  for (const auto& l : letters_) m = std::max(m, l.index);
  return m;
}

std::vector<int> Word::to_ints() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(l.signed_value());
  return out;
}

BraidContext::BraidContext(int strands) : n_(strands) {
  if (strands < 2) throw InputError("strand count must be at least 2");
}

bool BraidContext::contains(const Word& w) const noexcept {
  return std::all_of(w.letters().begin(), w.letters().end(), [&](const Letter& l) {
    return l.index >= 1 && l.index <= n_ - 1 && (l.sign == 1 || l.sign == -1);
  });
}

void BraidContext::validate(const Word& w) const {
  for (const auto& l : w.letters()) {
    if (l.index < 1 || l.index > n_ - 1) {
      throw InputError("generator index " + std::to_string(l.index) +
                       " out of range for B_" + std::to_string(n_));
    }
    if (l.sign != 1 && l.sign != -1) throw InputError("letter sign must be +1 or -1");
  }
}

Word make_word(const BraidContext& ctx, std::span<const int> entries) {
  Word w = Word::from_ints(entries);
  ctx.validate(w);
  return w;
}

Word make_word(const BraidContext& ctx, std::initializer_list<int> entries) {
  return make_word(ctx, std::span<const int>(entries.begin(), entries.size()));
}

Word generator_word(int index, int sign) { return Word({Letter{index, sign}}); }

namespace {

// Appends letters onto a stack-reduced buffer.
void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const auto& l : w.letters()) push_reduced(out, l);
  return Word(std::move(out));
}

Word multiply(const Word& u, const Word& v) {
  std::vector<Letter> out;
  out.reserve(u.size() + v.size());
  for (const auto& l : u.letters()) push_reduced(out, l);
  for (const auto& l : v.letters()) push_reduced(out, l);
  return Word(std::move(out));
}

Word invert(const Word& u) {
  std::vector<Letter> out;
  out.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    push_reduced(out, it->inverse());
  }
  return Word(std::move(out));
}

Word conjugate(const Word& g, const Word& x) { return multiply(multiply(invert(x), g), x); }

Word commutator(const Word& x, const Word& y) {
  return multiply(multiply(invert(x), invert(y)), multiply(x, y));
}

Word power(const Word& w, int exponent) {
  const Word base = exponent >= 0 ? w : invert(w);
  Word out;
  for (int i = 0; i < (exponent >= 0 ? exponent : -exponent); ++i) out = multiply(out, base);
  return out;
}

Word parse_word(std::string_view text) {
  std::vector<int> entries;
  std::size_t pos = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_space(text[end])) ++end;
    std::string_view token = text.substr(pos, end - pos);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
      throw InputError("malformed word token '" + std::string(text.substr(pos, end - pos)) + "'");
    }
    entries.push_back(value);
    pos = end;
  }
  return Word::from_ints(entries);
}

std::string format_word(const Word& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w.letters()) {
    if (!first) os << ' ';
    os << l.signed_value();
    first = false;
  }
  return os.str();
}

}  // namespace braidcsp
