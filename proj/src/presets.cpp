#include "helixlab/chern.hpp"

namespace helixlab {

namespace {

IntMatrix upper(std::vector<long> rows) {
  std::vector<Integer> e(rows.begin(), rows.end());
  return IntMatrix(4, std::move(e));
}

}  // namespace

FanoPreset preset_p3() {
  FanoPreset v;
  v.name = "p3";
  v.degree = 1;
  v.index = 4;
  v.gram = upper({1, 4, 10, 20,
                  0, 1, 4, 10,
                  0, 0, 1, 4,
                  0, 0, 0, 1});
  std::vector<ChernCharacter> basis;
  for (int m = 0; m < 4; ++m) basis.push_back(line_bundle(v, m));
  v.basis_ch = std::move(basis);
  return v;
}

// Reference collection (S, O, O(1), O(2)) with S the spinor bundle;
// ch(S) follows from 0 -> S -> O^4 -> S(1) -> 0.
FanoPreset preset_q3() {
  FanoPreset v;
  v.name = "q3";
  v.degree = 2;
  v.index = 3;
  v.gram = upper({1, 4, 16, 40,
                  0, 1, 5, 14,
                  0, 0, 1, 5,
                  0, 0, 0, 1});
  std::vector<ChernCharacter> basis;
  basis.push_back({2, -1, 0, Rational(1, 6)});
  for (int m = 0; m < 3; ++m) basis.push_back(line_bundle(v, m));
  v.basis_ch = std::move(basis);
  return v;
}

FanoPreset preset_v5() {
  FanoPreset v;
  v.name = "v5";
  v.degree = 5;
  v.index = 2;
  return v;
}

FanoPreset preset_v22() {
  FanoPreset v;
  v.name = "v22";
  v.degree = 22;
  v.index = 1;
  return v;
}

std::vector<FanoPreset> builtin_presets() {
  return {preset_p3(), preset_q3(), preset_v5(), preset_v22()};
}

std::optional<FanoPreset> find_builtin_preset(const std::string& name) {
  for (auto& v : builtin_presets())
    if (v.name == name) return v;
  return std::nullopt;
}

}  // namespace helixlab
