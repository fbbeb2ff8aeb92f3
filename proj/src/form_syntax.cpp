#include "wittcurve/form_syntax.hpp"

#include <cctype>
#include <vector>

#include "wittcurve/errors.hpp"

namespace wittcurve {

namespace {

constexpr std::string_view kOpenAngle = "⟨";
constexpr std::string_view kCloseAngle = "⟩";

class FormParser {
 public:
  FormParser(std::string_view text, const CurveConfig& cfg) : text_(text), cfg_(cfg) {}

  DiagonalForm parse() {
    skip_space();
    if (!accept_open()) fail("expected '<'");
    std::vector<Generator> entries;
    skip_space();
    if (!accept_close()) {
      for (;;) {
        entries.push_back(parse_entry());
        skip_space();
        if (accept(',')) continue;
        if (accept_close()) break;
        fail("expected ',' or '>'");
      }
    }
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return DiagonalForm(cfg_, std::move(entries));
  }

 private:
  Generator parse_entry() {
    skip_space();
    Generator g = Generator::one();
    if (accept('-')) g = Generator::minus_one(cfg_);
    g = g * parse_term();
    for (;;) {
      skip_space();
      if (!accept('*')) return g;
      g = g * parse_term();
    }
  }

  Generator parse_term() {
    skip_space();
    const std::size_t start = pos_;
    if (accept('1')) return Generator::one();
    if (accept('s')) return {UnitSquareClass::nonsquare(), false, PicTorsionClass{}};
    if (text_.substr(pos_).starts_with("pi")) {
      pos_ += 2;
      return Generator::pi();
    }
    if (accept('L')) {
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected digits after 'L'");
      }
      long label = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        if (label <= kMaxPicardRank) label = label * 10 + (text_[pos_] - '0');
        ++pos_;
      }
      if (label == 0) fail("bundle labels start at L1", start);
      if (label > cfg_.picard_rank()) {
        fail("unknown bundle label " + std::string(text_.substr(start, pos_ - start)), start);
      }
      return {UnitSquareClass{}, false, PicTorsionClass::basis(static_cast<int>(label))};
    }
    fail("expected one of '1', 's', 'pi', 'L<k>'");
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_token(std::string_view token) {
    if (text_.substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  bool accept_open() { return accept('<') || accept_token(kOpenAngle); }
  bool accept_close() { return accept('>') || accept_token(kCloseAngle); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) { fail(message, pos_); }
  [[noreturn]] void fail(const std::string& message, std::size_t at) {
    throw ParseError("syntax error at position " + std::to_string(at) + ": " + message, at);
  }

  std::string_view text_;
  const CurveConfig& cfg_;
  std::size_t pos_ = 0;
};

std::string join_factors(UnitSquareClass unit, bool pi_exp, PicTorsionClass line) {
  std::string out;
  auto append = [&out](std::string_view factor) {
    if (!out.empty()) out += '*';
    out += factor;
  };
  if (unit.bit()) append("s");
  if (pi_exp) append("pi");
  for (int k = 1; k <= kMaxPicardRank; ++k) {
    if (line.coordinate(k)) append("L" + std::to_string(k));
  }
  return out.empty() ? "1" : out;
}

}  // namespace

DiagonalForm parse_form(std::string_view text, const CurveConfig& cfg) { return FormParser(text, cfg).parse(); }

std::string format_square_class(const GlobalSquareClass& c) { return join_factors(c.unit, c.pi_exp, c.line); }

std::string format_generator(const Generator& g) { return join_factors(g.unit, g.pi_exp, g.line); }

std::string format_form(const DiagonalForm& e) {
  std::string out = "<";
  for (std::size_t i = 0; i < e.rank(); ++i) {
    if (i != 0) out += ',';
    out += format_generator(e[i]);
  }
  out += '>';
  return out;
}

std::string format_brauer_class(const BrauerClass& b) {
  return "(" + join_factors(b.unit, false, b.line) + ",pi)";
}

}  // namespace wittcurve
