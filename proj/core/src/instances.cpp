#include "dialectica/instances.hpp"

#include <array>
#include <cstdint>

#include "dialectica/errors.hpp"

namespace dialectica {

namespace {

constexpr std::array<std::uint8_t, 64> kSecondLawBits = {
    0, 0, 1, 0, 1, 1, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1,
    1, 0, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 1, 1, 1, 0, 1, 1,
    0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1, 1, 1, 1, 0, 0, 1, 0, 0};

Elem bit(const LinearModel& model, bool b) { return model.base().element(b ? "1" : "0"); }

std::size_t idx(const Value& v) { return static_cast<std::size_t>(v.as_integer()); }

void require_boolean(const LinearModel& model) {
  if (!(model.base() == boolean_lineale()))
    throw ShapeUnsupported("the fixed instances live over the boolean lineale");
}

}  // namespace

ThreeLevelObject second_law_instance(const LinearModel& model) {
  require_boolean(model);
  const auto R2 = EffectiveSet::range(2);
  const Elem zero = bit(model, false), one = bit(model, true);
  return ThreeLevelObject(R2, R2, [=](const Value& x, const Value& y) {
    return TwoLevelObject(R2, R2, [=](const Value& u, const Value& v) {
      const std::size_t outer = ((idx(x) * 2 + idx(y)) * 2 + idx(u)) * 2 + idx(v);
      return model.make_object(R2, R2, [=](const Value& p, const Value& q) {
        return kSecondLawBits[(outer * 2 + idx(p)) * 2 + idx(q)] ? one : zero;
      });
    });
  });
}

TwoLevelObject bang_mu_instance(const LinearModel& model) {
  require_boolean(model);
  const auto R1 = EffectiveSet::range(1), R2 = EffectiveSet::range(2);
  const Elem zero = bit(model, false), one = bit(model, true);
  return TwoLevelObject(R1, R2, [=](const Value&, const Value& y) {
    return model.make_object(R2, R1, [=](const Value& u, const Value&) { return y != u ? one : zero; });
  });
}

TwoLevelObject bang_mu_control(const LinearModel& model) {
  require_boolean(model);
  return TwoLevelObject(EffectiveSet::range(1), EffectiveSet(),
                        [](const Value&, const Value&) -> LObject {
                          throw InvariantViolation("family has no counter-witnesses");
                        });
}

TwoLevelObject bang_mu_singleton(const LinearModel& model) {
  require_boolean(model);
  const auto R1 = EffectiveSet::range(1);
  auto inner = model.eta(model.base().unit());
  return TwoLevelObject(R1, R1, [inner](const Value&, const Value&) { return inner; });
}

std::pair<TwoLevelObject, TwoLevelObject> lax_monoidal_instance(const LinearModel& model) {
  require_boolean(model);
  const auto R1 = EffectiveSet::range(1), R2 = EffectiveSet::range(2);
  const Elem zero = bit(model, false), one = bit(model, true);
  TwoLevelObject G(R1, R2, [=](const Value&, const Value& y) {
    return model.make_object(R2, R1, [=](const Value& u, const Value&) { return (idx(y) ^ idx(u)) ? one : zero; });
  });
  TwoLevelObject H(R2, R1, [=](const Value& w, const Value&) {
    return model.make_object(R1, R1, [=](const Value&, const Value&) { return idx(w) ? one : zero; });
  });
  return {G, H};
}

std::pair<TwoLevelObject, TwoLevelObject> lax_monoidal_control(const LinearModel& model) {
  auto G = bang_mu_singleton(model);
  return {G, G};
}

}  // namespace dialectica
