#include "kirby/tietze_path.hpp"

namespace kirby {

namespace {

struct StepApplier {
  const Presentation& p;

  Presentation operator()(const StepT1& s) const { return tietze_t1(p, s.x); }
  Presentation operator()(const StepT1Inverse& s) const {
    return tietze_t1_inverse(p, s.gen, s.rel);
  }
  Presentation operator()(const StepS1& s) const {
    return tietze_s1(p, s.i, s.j, s.sign, s.w);
  }
  Presentation operator()(const StepS2Add&) const { return tietze_s2_add(p); }
  Presentation operator()(const StepS2Delete& s) const {
    return tietze_s2_delete(p, s.rel);
  }
};

}  // namespace

Presentation apply_step(const Presentation& p, const TietzeStep& step) {
  return std::visit(StepApplier{p}, step);
}

Presentation apply_path(const Presentation& p, const TietzePath& path) {
  Presentation cur = p;
  for (const TietzeStep& step : path) cur = apply_step(cur, step);
  return cur;
}

}  // namespace kirby
