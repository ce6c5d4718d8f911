#include "mzv/compositions.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

#include "mzv/errors.hpp"

namespace mzv {

Composition::Composition(std::vector<SignedArg> args) : args_(std::move(args)) {
  for (const auto& a : args_)
    if (a.magnitude < 1) throw DomainError("argument magnitude must be >= 1");
}

Composition::Composition(std::initializer_list<int> signed_args) {
  for (int s : signed_args) {
    if (s == 0) throw DomainError("argument magnitude must be >= 1");
    args_.push_back({s < 0 ? -s : s, s < 0});
  }
}

int Composition::weight() const {
  return std::accumulate(args_.begin(), args_.end(), 0, [](int w, const SignedArg& a) { return w + a.magnitude; });
}

bool Composition::has_bars() const {
  return std::any_of(args_.begin(), args_.end(), [](const SignedArg& a) { return a.barred; });
}

Composition Composition::operator+(const Composition& tail) const {
  std::vector<SignedArg> out = args_;
  out.insert(out.end(), tail.args_.begin(), tail.args_.end());
  return Composition(std::move(out));
}

Composition Composition::repeated(int reps) const {
  if (reps < 0) throw DomainError("repetition count must be >= 0");
  std::vector<SignedArg> out;
  out.reserve(args_.size() * static_cast<std::size_t>(reps));
  for (int r = 0; r < reps; ++r) out.insert(out.end(), args_.begin(), args_.end());
  return Composition(std::move(out));
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PeriodicSpec run() {
    PeriodicSpec spec;
    std::vector<SignedArg> prefix;
    bool have_group = false;
    skip_space();
    if (at_end()) throw ParseError("expected an argument", pos_);
    while (true) {
      skip_space();
      if (peek() == '{') {
        if (have_group) throw ParseError("only one repeated group is supported", pos_);
        ++pos_;
        std::vector<SignedArg> period = list();
        skip_space();
        expect('}');
        skip_space();
        expect('^');
        skip_space();
        spec.period = Composition(std::move(period));
        spec.reps = unsigned_int();
        have_group = true;
      } else {
        if (have_group) throw ParseError("arguments after a repeated group are not supported", pos_);
        prefix.push_back(signed_arg());
      }
      skip_space();
      if (at_end()) break;
      expect(',');
    }
    spec.prefix = Composition(std::move(prefix));
    return spec;
  }

 private:
  std::vector<SignedArg> list() {
    std::vector<SignedArg> out;
    while (true) {
      skip_space();
      out.push_back(signed_arg());
      skip_space();
      if (peek() != ',') break;
      ++pos_;
    }
    return out;
  }

  SignedArg signed_arg() {
    bool barred = false;
    if (peek() == '-' || peek() == '+') {
      barred = peek() == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    int value = unsigned_int();
    if (value == 0) throw DomainError("argument 0 at position " + std::to_string(start) + " is not allowed");
    return {value, barred};
  }

  int unsigned_int() {
    std::size_t start = pos_;
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) throw ParseError("integer too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected an integer", pos_);
    return static_cast<int>(value);
  }

  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PeriodicSpec parse(std::string_view text) { return Parser(text).run(); }

Composition parse_composition(std::string_view text) {
  bool blank = std::all_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (blank) return {};
  return parse(text).expand();
}

bool is_convergent(const Composition& comp, bool at_x_equals_one) {
  if (!at_x_equals_one || comp.empty()) return true;
  return comp[0].barred || comp[0].magnitude > 1;
}

Composition dual(const Composition& comp) {
  if (comp.has_bars()) throw DomainError("duality is defined for unbarred compositions only");
  if (comp.empty() || comp[0].magnitude < 2) throw DomainError("duality needs an admissible composition (s1 >= 2)");
  // s -> 0^{s-1} 1, concatenated; dual word is the complement of the reversal.
  std::vector<bool> word;
  for (const auto& a : comp.args()) {
    word.insert(word.end(), static_cast<std::size_t>(a.magnitude - 1), false);
    word.push_back(true);
  }
  std::reverse(word.begin(), word.end());
  std::vector<SignedArg> out;
  int run = 1;
  for (bool bit : word) {
    if (bit) {
      ++run;  // complemented 1 -> 0
    } else {
      out.push_back({run, false});
      run = 1;
    }
  }
  return Composition(std::move(out));
}

std::string render(const Composition& comp) {
  std::string out;
  for (std::size_t i = 0; i < comp.depth(); ++i) {
    if (i) out += ',';
    if (comp[i].barred) out += '-';
    out += std::to_string(comp[i].magnitude);
  }
  return out;
}

}  // namespace mzv
