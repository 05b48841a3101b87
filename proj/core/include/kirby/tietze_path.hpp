#ifndef KIRBY_TIETZE_PATH_HPP
#define KIRBY_TIETZE_PATH_HPP

#include <variant>
#include <vector>

#include "kirby/presentation.hpp"

namespace kirby {

struct StepT1 {
  Word x;
  bool operator==(const StepT1&) const = default;
};
struct StepT1Inverse {
  int gen = 0;
  int rel = 0;
  bool operator==(const StepT1Inverse&) const = default;
};
struct StepS1 {
  int i = 0;
  int j = 0;
  int sign = 1;
  Word w;
  bool operator==(const StepS1&) const = default;
};
struct StepS2Add {
  bool operator==(const StepS2Add&) const = default;
};
struct StepS2Delete {
  int rel = 0;
  bool operator==(const StepS2Delete&) const = default;
};

using TietzeStep =
    std::variant<StepT1, StepT1Inverse, StepS1, StepS2Add, StepS2Delete>;

/// A finite sequence of Tietze transformations; each step's
/// preconditions must hold when the steps are applied in order.
using TietzePath = std::vector<TietzeStep>;

Presentation apply_step(const Presentation& p, const TietzeStep& step);
Presentation apply_path(const Presentation& p, const TietzePath& path);

}  // namespace kirby

#endif  // KIRBY_TIETZE_PATH_HPP
