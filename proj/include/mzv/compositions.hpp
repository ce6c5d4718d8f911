#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace mzv {

struct SignedArg {
  int magnitude = 1;
  bool barred = false;

  /// Sign factor sigma = -1 for a barred argument.
  int sigma() const { return barred ? -1 : 1; }
  friend auto operator<=>(const SignedArg&, const SignedArg&) = default;
};

class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<SignedArg> args);
  /// Builds from signed integers, -k meaning a barred k.
  Composition(std::initializer_list<int> signed_args);

  const std::vector<SignedArg>& args() const { return args_; }
  std::size_t depth() const { return args_.size(); }
  int weight() const;
  bool empty() const { return args_.empty(); }
  bool has_bars() const;
  const SignedArg& operator[](std::size_t i) const { return args_[i]; }

  Composition operator+(const Composition& tail) const;
  Composition repeated(int reps) const;

  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<SignedArg> args_;
};

/// prefix followed by `reps` copies of period.
struct PeriodicSpec {
  Composition prefix;
  Composition period;
  int reps = 0;

  Composition expand() const { return prefix + period.repeated(reps); }
};

/// Grammar: list := item (',' item)*, item := int | '{' list '}' '^' uint.
/// At most one periodic group is accepted; items after it are not allowed.
PeriodicSpec parse(std::string_view text);
/// parse(text).expand(), also accepting an empty string.
Composition parse_composition(std::string_view text);

bool is_convergent(const Composition& comp, bool at_x_equals_one);

/// Classical duality for admissible unbarred MZVs.
Composition dual(const Composition& comp);

std::string render(const Composition& comp);

}  // namespace mzv
